#pragma once

#include <stdexcept>
#include <string>

namespace hypersample {

// Error codes shared between the C++ core and the C API.
enum class errc {
    ok = 0,
    io_error,
    invalid_argument,
    out_of_range_vertex,
    duplicate_vertex_in_edge,
    index_out_of_range,
    empty_edge_set,
    parameter_order,
    precondition_n,
    domain_rk,
    domain_g,
    domain_k,
    no_admissible_root,
    bracket_failure,
    zero_degree_in_profile,
    too_many_sets,
    too_large,
    budget_exceeded,
    budget_zero,
    degenerate_density,
    infeasible_parameters,
    generation_retries_exceeded,
    d_below_ceil_avg,
    k_below_ceil_avg,
    no_duplicate_free_target,
};

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) { throw Error(code, what); }

const char* errc_name(errc code) noexcept;

} // namespace hypersample

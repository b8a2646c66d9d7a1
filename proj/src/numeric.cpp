#include "hypersample/numeric.hpp"
#include "hypersample/errors.hpp"

#include <cmath>

namespace hypersample {

BigInt binomial_coefficient(std::int64_t n, std::int64_t m) {
    if (n < 0 || m < 0 || m > n) return 0;
    if (m > n - m) m = n - m;
    BigInt result = 1;
    for (std::int64_t i = 1; i <= m; ++i) {
        result *= (n - m + i);
        result /= i; // divides exactly: result is C(n-m+i, i)
    }
    return result;
}

BigRat rational_from_double(double x) {
    if (!std::isfinite(x)) raise(errc::invalid_argument, "rational_from_double: non-finite value");
    return BigRat(x);
}

BigRat rational_pow(const BigRat& x, std::uint64_t e) {
    BigRat result = 1;
    BigRat base = x;
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

const char* errc_name(errc code) noexcept {
    switch (code) {
    case errc::ok: return "ok";
    case errc::io_error: return "IoError";
    case errc::invalid_argument: return "InvalidArgument";
    case errc::out_of_range_vertex: return "OutOfRangeVertex";
    case errc::duplicate_vertex_in_edge: return "DuplicateVertexInEdge";
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::empty_edge_set: return "EmptyEdgeSet";
    case errc::parameter_order: return "ParameterOrder";
    case errc::precondition_n: return "PreconditionN";
    case errc::domain_rk: return "DomainRK";
    case errc::domain_g: return "DomainG";
    case errc::domain_k: return "DomainK";
    case errc::no_admissible_root: return "NoAdmissibleRoot";
    case errc::bracket_failure: return "BracketFailure";
    case errc::zero_degree_in_profile: return "ZeroDegreeInProfile";
    case errc::too_many_sets: return "TooManySets";
    case errc::too_large: return "TooLarge";
    case errc::budget_exceeded: return "BudgetExceeded";
    case errc::budget_zero: return "BudgetZero";
    case errc::degenerate_density: return "DegenerateDensity";
    case errc::infeasible_parameters: return "InfeasibleParameters";
    case errc::generation_retries_exceeded: return "GenerationRetriesExceeded";
    case errc::d_below_ceil_avg: return "DBelowCeilAvg";
    case errc::k_below_ceil_avg: return "KBelowCeilAvg";
    case errc::no_duplicate_free_target: return "NoDuplicateFreeTarget";
    }
    return "unknown";
}

} // namespace hypersample

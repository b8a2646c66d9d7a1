#pragma once

#include "hypersample/hypergraph.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hypersample {

// Lower-bound construction engine: sample an edge set B, take A = V(B),
// measure how many edges end up confined to A.

// Solves delta = sum_i u_i * (1 - (1-gamma)^{d_i}) for gamma in (0,1) by
// bisection to 1e-12; the bracket is
// [1-(1-delta)^(1/d_bar), 1-(1-delta)^(1/min_degree)]. All profile degrees
// must be >= 1.
double solve_gamma(const DegreeProfile& profile, double delta);

// gamma + (1-gamma) * prod_i (1 - (1-gamma)^{d_i-1})^{u_i d_i / r}; a lower
// bound on E[|E(V(B))|/m] under Bernoulli-gamma edge sampling when all
// degrees are >= 2 and sum_{v<e}(deg v - 1) < m for every edge.
double expected_cover_fraction_bound(const DegreeProfile& profile, double r, double gamma);

struct CoverTrial {
    double gamma = 0.0;
    std::uint64_t picked_edges = 0;   // |B|
    std::uint32_t covered_vertices = 0; // |A| = |V(B)|
    double density = 0.0;             // |A| / n
    std::uint64_t confined = 0;       // |E(V(B))|
    double confined_fraction = 0.0;
};

// One Bernoulli-gamma edge sample; deterministic given the seed.
CoverTrial random_cover_trial(const Hypergraph& h, double gamma, std::uint64_t seed);

enum class SearchStrategy { cover_restarts, greedy, hybrid };

SearchStrategy strategy_from_name(const std::string& name);
const char* strategy_name(SearchStrategy s);

struct SearchResult {
    std::vector<std::uint32_t> best_subset; // sorted vertex ids, |A| = floor(delta*n)
    double density = 0.0;
    std::uint64_t confined = 0;
    double confined_fraction = 0.0;
    std::uint64_t trials = 0;
    // (trial index, confined fraction) each time the incumbent improved.
    std::vector<std::pair<std::uint64_t, double>> trace;
    // Mean confined fraction of uniformly random floor(delta*n)-subsets,
    // measured alongside the search.
    double random_baseline = 0.0;
    double gamma_used = 0.0;
};

// Searches for a high-confinement subset of size floor(delta*n).
//  * cover_restarts: repeat random_cover_trial at gamma = solve_gamma,
//    discard covers above the size cap, pad the rest up to the cap by
//    marginal newly-confined-edge gain (ties to the lowest vertex id);
//  * greedy: grow from empty by the same marginal-gain rule;
//  * hybrid: cover restarts followed by single-swap local improvement.
// Uniformly random subsets are always evaluated alongside as candidates, so
// the result is never below the random baseline. When gamma_sweep is set,
// restarts cycle through a 33-point gamma grid instead of the solved value.
// Deterministic given (seed, budget); independent of the worker count.
SearchResult search_worst_confined(const Hypergraph& h, double delta, std::uint64_t budget,
                                   std::uint64_t seed, SearchStrategy strategy,
                                   bool gamma_sweep = false, unsigned threads = 1);

enum class MeetsMode { uniform_m, bernoulli };

// Exact probability that a random subset of X meets every A_i (inclusion-
// exclusion over at most 2^t terms, t <= 20): B is a uniform m-subset or a
// Bernoulli(gamma) subset.
BigRat meets_probability(std::uint32_t universe_size,
                         const std::vector<std::vector<std::uint32_t>>& sets, MeetsMode mode,
                         std::uint64_t m, const BigRat& gamma);

} // namespace hypersample

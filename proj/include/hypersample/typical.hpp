#pragma once

#include "hypersample/hypergraph.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace hypersample {

// Constant blocks of the typical-case tail bounds. p here is the exact
// density of the sampled sets (callers floor p*n first).
double a_dist(std::uint32_t k, double p);
double b_dist(std::uint32_t k);
double a_chernoff(std::uint32_t k, double p, double eta);
double b_chernoff(std::uint32_t k, double eta);
inline constexpr double kTypicalConfinementConstant = 114.0;

// Exact probability that a k-subset drawn without replacement from [0, n)
// meets a fixed floor(p*n)-subset in exactly r points; equivalently the mean
// over all density-p sets A of the fraction of edges with |e ∩ A| = r in any
// k-uniform hypergraph.
BigRat expected_hit_fraction(std::uint32_t n, std::uint32_t k, double p, std::uint32_t r);

// Upper bound C/n + C'*(D-1)/m on the variance of the fraction of edges
// hitting a random density-p set exactly r times. Requires
// n >= max{4k^2, 2r/p, 2(k-r)/(1-p)}.
double variance_bound(std::uint32_t n, std::uint32_t k, double p, std::uint32_t r, std::uint32_t D,
                      std::uint64_t m);

struct ExceedanceBound {
    double threshold;
    double bound; // may exceed 1, in which case it is vacuous
};

enum class DeviationSide { confinement, avoidance };

// Threshold n^{-(1-alpha)/2} together with the bound
// 114 * x^k * k^2 * (m/D)^{-alpha} / (1-x) on the fraction of density-p sets
// whose confinement (x = p') or avoidance (x = 1-p') probability deviates
// from x^k by at least the threshold. Requires n >= max{4k^2, 2k/(p'(1-p'))}.
ExceedanceBound confinement_exceedance_bound(std::uint32_t n, std::uint32_t k, double p,
                                             double alpha, std::uint32_t D, std::uint64_t m,
                                             DeviationSide side);

// Bound (1/eps^2) * (a_dist/n + b_dist*(D-1)/m) on the fraction of density-p
// sets whose hit distribution is >= eps away from Hyp(k, p'n, n) in total
// variation. Same precondition on n.
double dist_exceedance_bound(std::uint32_t n, std::uint32_t k, double p, double eps,
                             std::uint32_t D, std::uint64_t m);

// Chernoff-flavored variant with a_chernoff/b_chernoff in place of
// a_dist/b_dist.
double chernoff_exceedance_bound(std::uint32_t n, std::uint32_t k, double p, double eta, double eps,
                                 std::uint32_t D, std::uint64_t m);

// Whether n >= max{4k^2, 2k/(p'(1-p'))} holds for the floored density p'.
bool typical_preconditions_met(std::uint32_t n, std::uint32_t k, double p);

enum class Statistic {
    tv_to_hyp,           // tv(N_H(A), Hyp(k, p'n, n))
    tv_to_bin,           // tv(N_H(A), Bin(k, p'))
    confinement_dev,     // |P[e ⊆ A] - p'^k|
    avoidance_dev,       // |P[e ∩ A = ∅] - (1-p')^k|
    tail_mass,           // P[|N_H(A) - p'k| >= k*eta]
};

Statistic statistic_from_name(const std::string& name);
const char* statistic_name(Statistic s);

struct ExceedanceEstimate {
    std::uint64_t trials = 0;
    std::uint64_t exceed = 0;
    double estimate = 0.0;
    double ci95 = 0.0; // normal-approximation half width
    double threshold = 0.0;
    std::uint64_t seed = 0;
};

// Monte Carlo over uniformly random floor(p*n)-subsets, drawn by a seeded
// Fisher-Yates prefix; trial t uses the stream derived from (seed, t), so
// results are identical for every worker count.
ExceedanceEstimate mc_typical(const Hypergraph& h, double p, Statistic statistic, double eta,
                              double threshold, std::uint64_t trials, std::uint64_t seed,
                              unsigned threads = 1);

// Exact exceedance fraction over all density-p subsets; enumeration refuses
// to start once C(n, floor(p*n)) exceeds the budget.
BigRat exact_typical(const Hypergraph& h, double p, Statistic statistic, double eta,
                     double threshold, std::uint64_t budget = 10000000);

// Statistic value for one concrete subset (the per-trial kernel, exposed for
// oracle comparisons).
double statistic_value(const Hypergraph& h, const VertexSubset& a, Statistic statistic, double p,
                       double eta);

} // namespace hypersample

#pragma once

#include "hypersample/numeric.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace hypersample {

// Probability mass function on a contiguous integer support
// {offset, offset+1, ...}. Exact rational variant plus a double variant for
// the statistics hot paths; conversions happen only at comparison boundaries.
struct RatPmf {
    std::int64_t offset = 0;
    std::vector<BigRat> mass;

    BigRat at(std::int64_t value) const;
    BigRat total() const;
};

struct Pmf {
    std::int64_t offset = 0;
    std::vector<double> mass;

    double at(std::int64_t value) const;
    double total() const;
};

Pmf to_double(const RatPmf& pmf);

// Bin(k, p): number of successes in k independent trials.
RatPmf binomial_pmf(std::uint32_t k, const BigRat& p);
Pmf binomial_pmf(std::uint32_t k, double p);

// Hyp(k, m, n): red balls when drawing k from an urn with m red among n,
// without replacement. Requires 0 <= k <= n and 0 <= m <= n.
RatPmf hypergeometric_pmf(std::uint32_t k, std::uint32_t m, std::uint32_t n);

// Total variation distance: half the L1 distance over the united supports.
BigRat tv_distance(const RatPmf& a, const RatPmf& b);
double tv_distance(const Pmf& a, const Pmf& b);

// Two-sided tail estimate 2*exp(-2*k*eta^2) valid for Bin(k, p) and
// Hyp(k, pn, n).
double chernoff_tail(std::uint32_t k, double eta);

// Bracket for tv(Hyp(k, pn, n), Bin(k, p)): [ (1/28)(k-1)/(n-1), (k-1)/(n-1) ].
// The bracket is guaranteed when n*p*(1-p) >= 1; the caller checks that.
std::pair<BigRat, BigRat> kunsch_bounds(std::uint32_t k, std::uint32_t n);

// Mass of {|X - center| >= k*eta} under P.
BigRat tail_probability(const RatPmf& pmf, const BigRat& center, const BigRat& eta, std::uint32_t k);
double tail_probability(const Pmf& pmf, double center, double eta, std::uint32_t k);

} // namespace hypersample

#include "hypersample/distributions.hpp"
#include "hypersample/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace hypersample {

BigRat RatPmf::at(std::int64_t value) const {
    std::int64_t i = value - offset;
    if (i < 0 || i >= static_cast<std::int64_t>(mass.size())) return 0;
    return mass[static_cast<std::size_t>(i)];
}

BigRat RatPmf::total() const {
    BigRat sum = 0;
    for (const auto& p : mass) sum += p;
    return sum;
}

double Pmf::at(std::int64_t value) const {
    std::int64_t i = value - offset;
    if (i < 0 || i >= static_cast<std::int64_t>(mass.size())) return 0.0;
    return mass[static_cast<std::size_t>(i)];
}

double Pmf::total() const {
    double sum = 0.0;
    for (double p : mass) sum += p;
    return sum;
}

Pmf to_double(const RatPmf& pmf) {
    Pmf out;
    out.offset = pmf.offset;
    out.mass.reserve(pmf.mass.size());
    for (const auto& p : pmf.mass) out.mass.push_back(to_double(p));
    return out;
}

RatPmf binomial_pmf(std::uint32_t k, const BigRat& p) {
    if (p < 0 || p > 1) raise(errc::invalid_argument, "binomial_pmf: p outside [0,1]");
    RatPmf out;
    out.offset = 0;
    out.mass.resize(k + 1);
    const BigRat q = BigRat(1) - p;
    for (std::uint32_t ell = 0; ell <= k; ++ell) {
        out.mass[ell] = BigRat(binomial_coefficient(k, ell)) * rational_pow(p, ell) *
                        rational_pow(q, k - ell);
    }
    return out;
}

Pmf binomial_pmf(std::uint32_t k, double p) {
    return to_double(binomial_pmf(k, rational_from_double(p)));
}

RatPmf hypergeometric_pmf(std::uint32_t k, std::uint32_t m, std::uint32_t n) {
    if (k > n || m > n) raise(errc::parameter_order, "hypergeometric_pmf: requires k <= n and m <= n");
    RatPmf out;
    out.offset = 0;
    out.mass.resize(k + 1);
    const BigInt denom = binomial_coefficient(n, m);
    for (std::uint32_t ell = 0; ell <= k; ++ell) {
        BigInt numer = binomial_coefficient(k, ell) *
                       binomial_coefficient(static_cast<std::int64_t>(n) - k,
                                            static_cast<std::int64_t>(m) - ell);
        out.mass[ell] = BigRat(numer, denom);
    }
    return out;
}

namespace {

template <typename PmfT, typename Value>
Value tv_impl(const PmfT& a, const PmfT& b) {
    std::int64_t lo = std::min(a.offset, b.offset);
    std::int64_t hi = std::max(a.offset + static_cast<std::int64_t>(a.mass.size()),
                               b.offset + static_cast<std::int64_t>(b.mass.size()));
    Value sum = 0;
    for (std::int64_t v = lo; v < hi; ++v) {
        Value d = a.at(v) - b.at(v);
        if (d < 0) d = -d;
        sum += d;
    }
    return sum / 2;
}

} // namespace

BigRat tv_distance(const RatPmf& a, const RatPmf& b) { return tv_impl<RatPmf, BigRat>(a, b); }

double tv_distance(const Pmf& a, const Pmf& b) {
    std::int64_t lo = std::min(a.offset, b.offset);
    std::int64_t hi = std::max(a.offset + static_cast<std::int64_t>(a.mass.size()),
                               b.offset + static_cast<std::int64_t>(b.mass.size()));
    double sum = 0.0;
    for (std::int64_t v = lo; v < hi; ++v) sum += std::abs(a.at(v) - b.at(v));
    return sum / 2.0;
}

double chernoff_tail(std::uint32_t k, double eta) {
    return 2.0 * std::exp(-2.0 * static_cast<double>(k) * eta * eta);
}

std::pair<BigRat, BigRat> kunsch_bounds(std::uint32_t k, std::uint32_t n) {
    if (k < 1 || k > n) raise(errc::parameter_order, "kunsch_bounds: requires 1 <= k <= n");
    if (n < 2) return {BigRat(0), BigRat(0)};
    BigRat upper(static_cast<std::int64_t>(k) - 1, static_cast<std::int64_t>(n) - 1);
    return {upper / 28, upper};
}

BigRat tail_probability(const RatPmf& pmf, const BigRat& center, const BigRat& eta, std::uint32_t k) {
    const BigRat radius = eta * k;
    BigRat sum = 0;
    for (std::size_t i = 0; i < pmf.mass.size(); ++i) {
        BigRat d = BigRat(pmf.offset + static_cast<std::int64_t>(i)) - center;
        if (d < 0) d = -d;
        if (d >= radius) sum += pmf.mass[i];
    }
    return sum;
}

double tail_probability(const Pmf& pmf, double center, double eta, std::uint32_t k) {
    const double radius = eta * static_cast<double>(k);
    double sum = 0.0;
    for (std::size_t i = 0; i < pmf.mass.size(); ++i) {
        double d = std::abs(static_cast<double>(pmf.offset + static_cast<std::int64_t>(i)) - center);
        if (d >= radius) sum += pmf.mass[i];
    }
    return sum;
}

} // namespace hypersample

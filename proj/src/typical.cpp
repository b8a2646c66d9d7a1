#include "hypersample/typical.hpp"
#include "hypersample/errors.hpp"
#include "hypersample/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <thread>

namespace hypersample {

namespace {

constexpr double kE = 2.718281828459045235360287;

double floored_density(std::uint32_t n, double p) {
    if (p < 0.0 || p > 1.0) raise(errc::invalid_argument, "density p must lie in [0,1]");
    const double count = std::floor(p * n);
    return count / static_cast<double>(n);
}

std::uint32_t floored_count(std::uint32_t n, double p) {
    if (p < 0.0 || p > 1.0) raise(errc::invalid_argument, "density p must lie in [0,1]");
    return static_cast<std::uint32_t>(std::floor(p * n));
}

} // namespace

double a_dist(std::uint32_t k, double p) {
    const double kk = k;
    return (kE / 2.0) * kk * (kk + 1) * (kk + 1) * ((kk - 1) / (p * (1 - p)) + 4 * kk);
}

double b_dist(std::uint32_t k) {
    const double kk = k;
    return 0.325 * kk * (kk + 1) * (kk + 1);
}

double a_chernoff(std::uint32_t k, double p, double eta) {
    return 16.0 * a_dist(k, p) * std::exp(-4.0 * k * eta * eta);
}

double b_chernoff(std::uint32_t k, double eta) {
    return 8.0 * b_dist(k) * std::exp(-2.0 * k * eta * eta);
}

BigRat expected_hit_fraction(std::uint32_t n, std::uint32_t k, double p, std::uint32_t r) {
    if (k > n) raise(errc::invalid_argument, "expected_hit_fraction: k must not exceed n");
    if (r > k) return 0;
    const std::int64_t a = floored_count(n, p);
    BigInt numer = binomial_coefficient(k, r) *
                   binomial_coefficient(static_cast<std::int64_t>(n) - k, a - r);
    return BigRat(numer, binomial_coefficient(n, a));
}

double variance_bound(std::uint32_t n, std::uint32_t k, double p, std::uint32_t r, std::uint32_t D,
                      std::uint64_t m) {
    if (r > k) raise(errc::invalid_argument, "variance_bound: r must not exceed k");
    const double pp = floored_density(n, p);
    const double q = 1.0 - pp;
    const double lhs = static_cast<double>(n);
    double need = 4.0 * k * static_cast<double>(k);
    if (pp > 0) need = std::max(need, 2.0 * r / pp);
    if (q > 0) need = std::max(need, 2.0 * (k - r) / q);
    if ((r > 0 && pp == 0) || (r < k && q == 0) || lhs < need)
        raise(errc::precondition_n, "variance_bound: n below max{4k^2, 2r/p, 2(k-r)/(1-p)}");
    const double choose = to_double(BigRat(binomial_coefficient(k, r)));
    const double pq = pp * q;
    const double c_main = 2.0 * kE * choose * choose * std::pow(pp, 2.0 * r) *
                          std::pow(q, 2.0 * (k - r)) * k * ((k - 1.0) / pq + 4.0 * k);
    const double c_prime = std::pow(pp, r) * std::pow(q, static_cast<double>(k - r)) * 1.3 * k * choose;
    return c_main / n + c_prime * (static_cast<double>(D) - 1.0) / static_cast<double>(m);
}

bool typical_preconditions_met(std::uint32_t n, std::uint32_t k, double p) {
    const double pp = floored_density(n, p);
    if (pp <= 0.0 || pp >= 1.0) return false;
    return static_cast<double>(n) >= std::max(4.0 * k * static_cast<double>(k),
                                              2.0 * k / (pp * (1.0 - pp)));
}

ExceedanceBound confinement_exceedance_bound(std::uint32_t n, std::uint32_t k, double p,
                                             double alpha, std::uint32_t D, std::uint64_t m,
                                             DeviationSide side) {
    if (alpha < 0.0 || alpha > 1.0)
        raise(errc::invalid_argument, "confinement_exceedance_bound: alpha in [0,1]");
    if (!typical_preconditions_met(n, k, p))
        raise(errc::precondition_n,
              "confinement_exceedance_bound: n below max{4k^2, 2k/(p(1-p))}");
    const double pp = floored_density(n, p);
    const double x = (side == DeviationSide::confinement) ? pp : 1.0 - pp;
    const double n_tilde = static_cast<double>(m) / static_cast<double>(D);
    ExceedanceBound out;
    out.threshold = std::pow(static_cast<double>(n), -(1.0 - alpha) / 2.0);
    out.bound = kTypicalConfinementConstant * std::pow(x, static_cast<double>(k)) * k *
                static_cast<double>(k) * std::pow(n_tilde, -alpha) / (1.0 - x);
    return out;
}

double dist_exceedance_bound(std::uint32_t n, std::uint32_t k, double p, double eps,
                             std::uint32_t D, std::uint64_t m) {
    if (eps <= 0.0) raise(errc::invalid_argument, "dist_exceedance_bound: eps > 0");
    if (!typical_preconditions_met(n, k, p))
        raise(errc::precondition_n, "dist_exceedance_bound: n below max{4k^2, 2k/(p(1-p))}");
    const double pp = floored_density(n, p);
    return (a_dist(k, pp) / n + b_dist(k) * (static_cast<double>(D) - 1.0) / static_cast<double>(m)) /
           (eps * eps);
}

double chernoff_exceedance_bound(std::uint32_t n, std::uint32_t k, double p, double eta, double eps,
                                 std::uint32_t D, std::uint64_t m) {
    if (eps <= 0.0) raise(errc::invalid_argument, "chernoff_exceedance_bound: eps > 0");
    if (!typical_preconditions_met(n, k, p))
        raise(errc::precondition_n, "chernoff_exceedance_bound: n below max{4k^2, 2k/(p(1-p))}");
    const double pp = floored_density(n, p);
    return (a_chernoff(k, pp, eta) / n +
            b_chernoff(k, eta) * (static_cast<double>(D) - 1.0) / static_cast<double>(m)) /
           (eps * eps);
}

Statistic statistic_from_name(const std::string& name) {
    if (name == "tv_to_hyp") return Statistic::tv_to_hyp;
    if (name == "tv_to_bin") return Statistic::tv_to_bin;
    if (name == "confinement_dev") return Statistic::confinement_dev;
    if (name == "avoidance_dev") return Statistic::avoidance_dev;
    if (name == "tail_mass") return Statistic::tail_mass;
    raise(errc::invalid_argument, "unknown statistic: " + name);
}

const char* statistic_name(Statistic s) {
    switch (s) {
    case Statistic::tv_to_hyp: return "tv_to_hyp";
    case Statistic::tv_to_bin: return "tv_to_bin";
    case Statistic::confinement_dev: return "confinement_dev";
    case Statistic::avoidance_dev: return "avoidance_dev";
    case Statistic::tail_mass: return "tail_mass";
    }
    return "?";
}

namespace {

// Per-subset statistics kernel shared by the Monte Carlo and exact paths.
struct StatContext {
    const Hypergraph& h;
    Statistic statistic;
    std::uint32_t k; // max uniformity, the tally width
    std::uint32_t a; // |A|
    double pp;       // a/n
    double eta;
    Pmf reference;   // Hyp or Bin law for the tv statistics

    StatContext(const Hypergraph& hh, double p, Statistic stat, double eta_in)
        : h(hh), statistic(stat), k(hh.max_uniformity()),
          a(floored_count(hh.vertex_count(), p)),
          pp(static_cast<double>(a) / hh.vertex_count()), eta(eta_in) {
        if (h.edge_count() == 0) raise(errc::empty_edge_set, "statistics need at least one edge");
        if (statistic == Statistic::tv_to_hyp)
            reference = to_double(hypergeometric_pmf(k, a, h.vertex_count()));
        else if (statistic == Statistic::tv_to_bin)
            reference = binomial_pmf(k, pp);
    }

    double value(const std::vector<std::uint64_t>& tally) const {
        const double m = static_cast<double>(h.edge_count());
        switch (statistic) {
        case Statistic::tv_to_hyp:
        case Statistic::tv_to_bin: {
            double l1 = 0.0;
            for (std::size_t i = 0; i < tally.size(); ++i)
                l1 += std::abs(tally[i] / m - reference.at(static_cast<std::int64_t>(i)));
            return l1 / 2.0;
        }
        case Statistic::confinement_dev:
            return std::abs(tally[k] / m - std::pow(pp, static_cast<double>(k)));
        case Statistic::avoidance_dev:
            return std::abs(tally[0] / m - std::pow(1.0 - pp, static_cast<double>(k)));
        case Statistic::tail_mass: {
            const double center = pp * k;
            const double radius = eta * k;
            double massed = 0.0;
            for (std::size_t i = 0; i < tally.size(); ++i)
                if (std::abs(static_cast<double>(i) - center) >= radius) massed += tally[i];
            return massed / m;
        }
        }
        return 0.0;
    }

    void tally_subset(const VertexSubset& set, std::vector<std::uint64_t>& tally) const {
        std::fill(tally.begin(), tally.end(), 0);
        for (const auto& e : h.edges()) {
            std::size_t hits = 0;
            for (std::uint32_t v : e) hits += set.contains(v);
            ++tally[hits];
        }
    }
};

} // namespace

double statistic_value(const Hypergraph& h, const VertexSubset& a, Statistic statistic, double p,
                       double eta) {
    StatContext ctx(h, p, statistic, eta);
    std::vector<std::uint64_t> tally(ctx.k + 1, 0);
    ctx.tally_subset(a, tally);
    return ctx.value(tally);
}

ExceedanceEstimate mc_typical(const Hypergraph& h, double p, Statistic statistic, double eta,
                              double threshold, std::uint64_t trials, std::uint64_t seed,
                              unsigned threads) {
    const std::uint32_t n = h.vertex_count();
    const std::uint32_t a = floored_count(n, p);
    if (a == 0 || a == n)
        raise(errc::degenerate_density, "mc_typical: floor(p*n) must lie strictly between 0 and n");
    if (trials == 0) raise(errc::invalid_argument, "mc_typical: trials >= 1");
    if (threads == 0) threads = 1;

    StatContext ctx(h, p, statistic, eta);

    auto run_range = [&](std::uint64_t begin, std::uint64_t end) -> std::uint64_t {
        std::vector<std::uint32_t> ids(n);
        std::vector<std::uint64_t> tally(ctx.k + 1, 0);
        VertexSubset set(n);
        std::uint64_t exceed = 0;
        for (std::uint64_t t = begin; t < end; ++t) {
            Rng rng(derive_seed(seed, t));
            std::iota(ids.begin(), ids.end(), 0u);
            set.clear();
            for (std::uint32_t i = 0; i < a; ++i) {
                std::uint32_t j = i + static_cast<std::uint32_t>(rng.below(n - i));
                std::swap(ids[i], ids[j]);
                set.add(ids[i]);
            }
            ctx.tally_subset(set, tally);
            if (ctx.value(tally) >= threshold) ++exceed;
        }
        return exceed;
    };

    std::uint64_t exceed = 0;
    if (threads == 1) {
        exceed = run_range(0, trials);
    } else {
        std::vector<std::uint64_t> partial(threads, 0);
        std::vector<std::thread> pool;
        const std::uint64_t chunk = (trials + threads - 1) / threads;
        for (unsigned w = 0; w < threads; ++w) {
            const std::uint64_t begin = std::min<std::uint64_t>(w * chunk, trials);
            const std::uint64_t end = std::min<std::uint64_t>(begin + chunk, trials);
            pool.emplace_back([&, w, begin, end] { partial[w] = run_range(begin, end); });
        }
        for (auto& th : pool) th.join();
        for (std::uint64_t x : partial) exceed += x;
    }

    ExceedanceEstimate est;
    est.trials = trials;
    est.exceed = exceed;
    est.estimate = static_cast<double>(exceed) / static_cast<double>(trials);
    est.ci95 = 1.96 * std::sqrt(est.estimate * (1.0 - est.estimate) / static_cast<double>(trials));
    est.threshold = threshold;
    est.seed = seed;
    return est;
}

BigRat exact_typical(const Hypergraph& h, double p, Statistic statistic, double eta,
                     double threshold, std::uint64_t budget) {
    const std::uint32_t n = h.vertex_count();
    const std::uint32_t a = floored_count(n, p);
    const BigInt total = binomial_coefficient(n, a);
    if (total > BigInt(budget)) raise(errc::budget_exceeded, "exact_typical: C(n, floor(pn)) over budget");

    StatContext ctx(h, p, statistic, eta);
    std::vector<std::uint64_t> tally(ctx.k + 1, 0);
    VertexSubset set(n);
    std::uint64_t exceed = 0;

    if (a == 0) {
        ctx.tally_subset(set, tally);
        return ctx.value(tally) >= threshold ? BigRat(1) : BigRat(0);
    }

    std::vector<std::uint32_t> combo(a);
    for (std::uint32_t i = 0; i < a; ++i) {
        combo[i] = i;
        set.add(i);
    }
    for (;;) {
        ctx.tally_subset(set, tally);
        if (ctx.value(tally) >= threshold) ++exceed;
        std::int64_t i = static_cast<std::int64_t>(a) - 1;
        while (i >= 0 && combo[i] == n - a + i) --i;
        if (i < 0) break;
        set.remove(combo[i]);
        ++combo[i];
        set.add(combo[i]);
        for (std::size_t j = i + 1; j < a; ++j) {
            set.remove(combo[j]);
            combo[j] = combo[j - 1] + 1;
            set.add(combo[j]);
        }
    }
    return BigRat(BigInt(exceed), total);
}

} // namespace hypersample

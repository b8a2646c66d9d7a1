#include "hypersample/adversarial.hpp"
#include "hypersample/errors.hpp"
#include "hypersample/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <thread>

namespace hypersample {

double solve_gamma(const DegreeProfile& profile, double delta) {
    if (!(delta > 0.0 && delta < 1.0)) raise(errc::invalid_argument, "solve_gamma: delta in (0,1)");
    if (profile.entries.empty()) raise(errc::invalid_argument, "solve_gamma: empty profile");
    double d_bar = 0.0;
    double min_degree = std::numeric_limits<double>::infinity();
    for (const auto& entry : profile.entries) {
        if (entry.degree == 0)
            raise(errc::zero_degree_in_profile, "solve_gamma: profile contains degree 0");
        const double u = static_cast<double>(entry.count) / static_cast<double>(profile.n);
        d_bar += u * entry.degree;
        min_degree = std::min(min_degree, static_cast<double>(entry.degree));
    }
    auto density_at = [&](double gamma) {
        double value = 0.0;
        for (const auto& entry : profile.entries) {
            const double u = static_cast<double>(entry.count) / static_cast<double>(profile.n);
            value += u * (1.0 - std::pow(1.0 - gamma, static_cast<double>(entry.degree)));
        }
        return value;
    };
    double lo = 1.0 - std::pow(1.0 - delta, 1.0 / d_bar);
    double hi = 1.0 - std::pow(1.0 - delta, 1.0 / min_degree);
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        const double fm = density_at(mid);
        if (std::abs(fm - delta) <= 1e-12) return mid;
        if (fm < delta)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

double expected_cover_fraction_bound(const DegreeProfile& profile, double r, double gamma) {
    if (!(gamma >= 0.0 && gamma <= 1.0))
        raise(errc::invalid_argument, "expected_cover_fraction_bound: gamma in [0,1]");
    if (gamma == 0.0) return 0.0;
    if (gamma == 1.0) return 1.0;
    double product = 1.0;
    for (const auto& entry : profile.entries) {
        const double u = static_cast<double>(entry.count) / static_cast<double>(profile.n);
        if (u == 0.0) continue;
        const double factor = 1.0 - std::pow(1.0 - gamma, static_cast<double>(entry.degree) - 1.0);
        product *= std::pow(factor, u * entry.degree / r);
    }
    return gamma + (1.0 - gamma) * product;
}

CoverTrial random_cover_trial(const Hypergraph& h, double gamma, std::uint64_t seed) {
    if (!(gamma >= 0.0 && gamma <= 1.0))
        raise(errc::invalid_argument, "random_cover_trial: gamma in [0,1]");
    Rng rng(seed);
    VertexSubset covered(h.vertex_count());
    CoverTrial trial;
    trial.gamma = gamma;
    for (const auto& e : h.edges()) {
        if (rng.bernoulli(gamma)) {
            ++trial.picked_edges;
            for (std::uint32_t v : e) covered.add(v);
        }
    }
    trial.covered_vertices = covered.count();
    trial.density = static_cast<double>(covered.count()) / h.vertex_count();
    trial.confined = edges_confined(h, covered);
    trial.confined_fraction =
        static_cast<double>(trial.confined) / static_cast<double>(h.edge_count());
    return trial;
}

SearchStrategy strategy_from_name(const std::string& name) {
    if (name == "cover") return SearchStrategy::cover_restarts;
    if (name == "greedy") return SearchStrategy::greedy;
    if (name == "hybrid") return SearchStrategy::hybrid;
    raise(errc::invalid_argument, "unknown strategy: " + name);
}

const char* strategy_name(SearchStrategy s) {
    switch (s) {
    case SearchStrategy::cover_restarts: return "cover";
    case SearchStrategy::greedy: return "greedy";
    case SearchStrategy::hybrid: return "hybrid";
    }
    return "?";
}

namespace {

// Incremental confinement bookkeeping: per-edge count of distinct vertices
// still outside A, plus for every vertex the number of edges it is the sole
// missing vertex of (the greedy gain).
class ConfinementState {
public:
    explicit ConfinementState(const Hypergraph& h) : h_(h), in_a_(h.vertex_count()) {
        edge_vertices_.reserve(h.edge_count());
        incident_.resize(h.vertex_count());
        std::vector<std::uint32_t> scratch;
        for (std::size_t i = 0; i < h.edge_count(); ++i) {
            scratch.assign(h.edge(i).begin(), h.edge(i).end());
            std::sort(scratch.begin(), scratch.end());
            scratch.erase(std::unique(scratch.begin(), scratch.end()), scratch.end());
            for (std::uint32_t v : scratch) incident_[v].push_back(static_cast<std::uint32_t>(i));
            edge_vertices_.push_back(scratch);
        }
        missing_.resize(h.edge_count());
        gain_.assign(h.vertex_count(), 0);
        reset();
    }

    void reset() {
        in_a_.clear();
        confined_ = 0;
        std::fill(gain_.begin(), gain_.end(), 0);
        for (std::size_t i = 0; i < edge_vertices_.size(); ++i) {
            missing_[i] = static_cast<std::uint32_t>(edge_vertices_[i].size());
            if (missing_[i] == 0)
                ++confined_;
            else if (missing_[i] == 1)
                ++gain_[edge_vertices_[i][0]];
        }
    }

    const VertexSubset& subset() const { return in_a_; }
    std::uint64_t confined() const { return confined_; }
    std::uint32_t size() const { return in_a_.count(); }
    std::uint32_t gain(std::uint32_t v) const { return gain_[v]; }

    void add(std::uint32_t v) {
        if (in_a_.contains(v)) return;
        in_a_.add(v);
        for (std::uint32_t e : incident_[v]) {
            --missing_[e];
            if (missing_[e] == 0) {
                ++confined_;
                --gain_[v];
            } else if (missing_[e] == 1) {
                ++gain_[sole_missing(e)];
            }
        }
    }

    void remove(std::uint32_t v) {
        if (!in_a_.contains(v)) return;
        for (std::uint32_t e : incident_[v]) {
            if (missing_[e] == 0) {
                --confined_;
                ++gain_[v];
            } else if (missing_[e] == 1) {
                --gain_[sole_missing(e)];
            }
            ++missing_[e];
        }
        in_a_.remove(v);
    }

    // Highest-gain vertex outside A, ties to the lowest id.
    std::uint32_t best_addition() const {
        std::uint32_t best = h_.vertex_count();
        std::uint32_t best_gain = 0;
        for (std::uint32_t v = 0; v < h_.vertex_count(); ++v) {
            if (in_a_.contains(v)) continue;
            if (best == h_.vertex_count() || gain_[v] > best_gain) {
                best = v;
                best_gain = gain_[v];
            }
        }
        return best;
    }

    // Member of A losing the fewest confined edges on removal, ties to the
    // lowest id.
    std::uint32_t cheapest_removal() const {
        std::uint32_t best = h_.vertex_count();
        std::uint64_t best_loss = 0;
        for (std::uint32_t v = 0; v < h_.vertex_count(); ++v) {
            if (!in_a_.contains(v)) continue;
            std::uint64_t loss = 0;
            for (std::uint32_t e : incident_[v]) loss += missing_[e] == 0;
            if (best == h_.vertex_count() || loss < best_loss) {
                best = v;
                best_loss = loss;
            }
        }
        return best;
    }

private:
    std::uint32_t sole_missing(std::uint32_t e) const {
        for (std::uint32_t v : edge_vertices_[e])
            if (!in_a_.contains(v)) return v;
        raise(errc::invalid_argument, "ConfinementState: bookkeeping out of sync");
    }

    const Hypergraph& h_;
    std::vector<std::vector<std::uint32_t>> edge_vertices_; // distinct ids
    std::vector<std::vector<std::uint32_t>> incident_;
    std::vector<std::uint32_t> missing_;
    std::vector<std::uint32_t> gain_;
    VertexSubset in_a_;
    std::uint64_t confined_ = 0;
};

struct TrialPlan {
    const Hypergraph& h;
    std::uint32_t target;             // floor(delta * n)
    SearchStrategy strategy;
    double gamma_solved;
    bool gamma_sweep;
    std::uint64_t seed;
    std::uint64_t budget;
};

double sweep_gamma(const TrialPlan& plan, std::uint64_t t) {
    if (!plan.gamma_sweep) return plan.gamma_solved;
    // 33-point grid over (0,1), cycled by trial index.
    const std::uint64_t i = t % 33;
    return static_cast<double>(i + 1) / 34.0;
}

// Runs trial t to completion; returns the confined count of the candidate,
// and the baseline sample's confined count through `baseline`.
std::uint64_t run_trial(const TrialPlan& plan, ConfinementState& state, std::uint64_t t,
                        std::uint64_t* baseline, std::vector<std::uint32_t>* argmax) {
    const std::uint32_t n = plan.h.vertex_count();
    Rng rng(derive_seed(plan.seed, t));

    // Uniformly random subset of the target size: the baseline, and always a
    // candidate.
    state.reset();
    {
        std::vector<std::uint32_t> ids(n);
        std::iota(ids.begin(), ids.end(), 0u);
        for (std::uint32_t i = 0; i < plan.target; ++i) {
            std::uint32_t j = i + static_cast<std::uint32_t>(rng.below(n - i));
            std::swap(ids[i], ids[j]);
            state.add(ids[i]);
        }
    }
    *baseline = state.confined();
    std::uint64_t best = state.confined();
    if (argmax) *argmax = state.subset().to_vector();

    auto consider = [&]() {
        if (state.confined() > best) {
            best = state.confined();
            if (argmax) *argmax = state.subset().to_vector();
        } else if (argmax && state.confined() == best) {
            auto current = state.subset().to_vector();
            if (current < *argmax) *argmax = current;
        }
    };

    if (plan.strategy == SearchStrategy::greedy) {
        state.reset();
        while (state.size() < plan.target) state.add(state.best_addition());
        consider();
        return best;
    }

    // Cover trial: Bernoulli-gamma edge sample, A = V(B).
    state.reset();
    const double gamma = sweep_gamma(plan, t);
    for (const auto& e : plan.h.edges())
        if (rng.bernoulli(gamma))
            for (std::uint32_t v : e) state.add(v);

    if (state.size() > plan.target) return best; // over the cap: discarded

    // Pad up to the exact target by marginal newly-confined gain.
    while (state.size() < plan.target) state.add(state.best_addition());
    consider();

    if (plan.strategy == SearchStrategy::hybrid) {
        // Single-swap descent: drop the cheapest member, add the best
        // replacement, keep strict improvements.
        const std::uint64_t max_swaps = 2 * static_cast<std::uint64_t>(plan.target) + 16;
        for (std::uint64_t swap = 0; swap < max_swaps && plan.target > 0; ++swap) {
            const std::uint64_t before = state.confined();
            const std::uint32_t out = state.cheapest_removal();
            state.remove(out);
            const std::uint32_t in = state.best_addition();
            state.add(in);
            if (state.confined() <= before) {
                state.remove(in);
                state.add(out);
                break;
            }
            consider();
        }
    }
    return best;
}

} // namespace

SearchResult search_worst_confined(const Hypergraph& h, double delta, std::uint64_t budget,
                                   std::uint64_t seed, SearchStrategy strategy, bool gamma_sweep,
                                   unsigned threads) {
    if (budget == 0) raise(errc::budget_zero, "search_worst_confined: budget must be positive");
    if (!(delta >= 0.0 && delta <= 1.0))
        raise(errc::invalid_argument, "search_worst_confined: delta in [0,1]");
    if (h.edge_count() == 0) raise(errc::empty_edge_set, "search_worst_confined: no edges");
    if (threads == 0) threads = 1;

    TrialPlan plan{h,
                   static_cast<std::uint32_t>(std::floor(delta * h.vertex_count())),
                   strategy,
                   0.0,
                   gamma_sweep,
                   seed,
                   budget};
    if (strategy != SearchStrategy::greedy && !gamma_sweep) {
        const DegreeProfile profile = h.degree_profile();
        bool has_zero = false;
        for (const auto& e : profile.entries) has_zero |= e.degree == 0;
        // Isolated vertices cannot be covered; solve over positive degrees
        // only and keep the zero-degree mass out of the target density.
        if (!has_zero) {
            plan.gamma_solved = solve_gamma(profile, std::min(delta, 0.999999));
        } else {
            DegreeProfile positive;
            positive.n = 0;
            for (const auto& e : profile.entries)
                if (e.degree > 0) {
                    positive.entries.push_back(e);
                    positive.n += e.count;
                }
            const double scaled = std::min(delta * profile.n / positive.n, 0.999999);
            plan.gamma_solved = solve_gamma(positive, std::max(scaled, 1e-9));
        }
    }

    // Pass 1: per-trial confined counts (schedule-independent).
    std::vector<std::uint64_t> per_trial(budget, 0);
    std::vector<std::uint64_t> per_baseline(budget, 0);
    auto run_range = [&](std::uint64_t begin, std::uint64_t end) {
        ConfinementState state(h);
        for (std::uint64_t t = begin; t < end; ++t) {
            std::uint64_t baseline = 0;
            per_trial[t] = run_trial(plan, state, t, &baseline, nullptr);
            per_baseline[t] = baseline;
        }
    };
    if (threads == 1 || budget < 2 * threads) {
        run_range(0, budget);
    } else {
        std::vector<std::thread> pool;
        const std::uint64_t chunk = (budget + threads - 1) / threads;
        for (unsigned w = 0; w < threads; ++w) {
            const std::uint64_t begin = std::min<std::uint64_t>(w * chunk, budget);
            const std::uint64_t end = std::min<std::uint64_t>(begin + chunk, budget);
            if (begin < end) pool.emplace_back([&, begin, end] { run_range(begin, end); });
        }
        for (auto& th : pool) th.join();
    }

    const double m = static_cast<double>(h.edge_count());
    SearchResult result;
    result.trials = budget;
    result.gamma_used = plan.gamma_solved;

    std::uint64_t best_confined = 0;
    for (std::uint64_t t = 0; t < budget; ++t) best_confined = std::max(best_confined, per_trial[t]);
    std::uint64_t incumbent = 0;
    bool first = true;
    for (std::uint64_t t = 0; t < budget; ++t) {
        if (first || per_trial[t] > incumbent) {
            incumbent = per_trial[t];
            first = false;
            result.trace.emplace_back(t, static_cast<double>(incumbent) / m);
        }
    }
    double baseline_sum = 0.0;
    for (std::uint64_t t = 0; t < budget; ++t) baseline_sum += static_cast<double>(per_baseline[t]);
    result.random_baseline = baseline_sum / (m * static_cast<double>(budget));

    // Pass 2: rerun the trials attaining the maximum and keep the
    // lexicographically smallest subset.
    ConfinementState state(h);
    std::vector<std::uint32_t> candidate;
    bool have_subset = false;
    for (std::uint64_t t = 0; t < budget; ++t) {
        if (per_trial[t] != best_confined) continue;
        std::uint64_t baseline = 0;
        run_trial(plan, state, t, &baseline, &candidate);
        if (!have_subset || candidate < result.best_subset) {
            result.best_subset = candidate;
            have_subset = true;
        }
    }
    result.confined = best_confined;
    result.density = static_cast<double>(result.best_subset.size()) / h.vertex_count();
    result.confined_fraction = static_cast<double>(best_confined) / m;
    return result;
}

BigRat meets_probability(std::uint32_t universe_size,
                         const std::vector<std::vector<std::uint32_t>>& sets, MeetsMode mode,
                         std::uint64_t m, const BigRat& gamma) {
    const std::size_t t = sets.size();
    if (t > 20) raise(errc::too_many_sets, "meets_probability: at most 20 sets");
    if (mode == MeetsMode::uniform_m && m > universe_size)
        raise(errc::invalid_argument, "meets_probability: m exceeds |X|");
    if (mode == MeetsMode::bernoulli && (gamma < 0 || gamma > 1))
        raise(errc::invalid_argument, "meets_probability: gamma in [0,1]");
    for (const auto& s : sets) {
        if (s.empty()) return 0; // an empty set can never be met
        for (std::uint32_t v : s)
            if (v >= universe_size)
                raise(errc::invalid_argument, "meets_probability: element outside X");
    }
    if (t == 0) return 1;

    // Gray-code walk over S ⊆ [t], maintaining |union of S| incrementally.
    std::vector<std::uint32_t> count(universe_size, 0);
    std::uint64_t union_size = 0;
    const BigRat one_minus_gamma = BigRat(1) - gamma;
    const BigInt total = binomial_coefficient(universe_size, static_cast<std::int64_t>(m));

    auto miss_probability = [&](std::uint64_t union_card) -> BigRat {
        if (mode == MeetsMode::bernoulli) return rational_pow(one_minus_gamma, union_card);
        BigInt numer = binomial_coefficient(static_cast<std::int64_t>(universe_size) -
                                                static_cast<std::int64_t>(union_card),
                                            static_cast<std::int64_t>(m));
        return BigRat(numer, total);
    };

    BigRat sum = miss_probability(0); // S = empty set
    std::uint64_t gray_prev = 0;
    std::uint64_t members = 0;
    for (std::uint64_t i = 1; i < (1ULL << t); ++i) {
        const std::uint64_t gray = i ^ (i >> 1);
        const std::uint64_t flipped_bit = gray ^ gray_prev;
        const std::size_t j = static_cast<std::size_t>(std::countr_zero(flipped_bit));
        if (gray & flipped_bit) {
            for (std::uint32_t v : sets[j])
                if (count[v]++ == 0) ++union_size;
            ++members;
        } else {
            for (std::uint32_t v : sets[j])
                if (--count[v] == 0) --union_size;
            --members;
        }
        gray_prev = gray;
        const BigRat term = miss_probability(union_size);
        if (members & 1)
            sum -= term;
        else
            sum += term;
    }
    return sum;
}

} // namespace hypersample

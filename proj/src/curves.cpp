#include "hypersample/curves.hpp"
#include "hypersample/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace hypersample {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

void require_unit_interval(double x, const char* who) {
    if (!(x >= 0.0 && x <= 1.0)) raise(errc::invalid_argument, std::string(who) + ": x outside [0,1]");
}

} // namespace

double curve_f(double k, double r, double x) {
    if (!(k > 0.0) || !(r > 0.0) || r * k < 1.0)
        raise(errc::domain_rk, "curve_f: requires k > 0, r > 0 and rk >= 1");
    require_unit_interval(x, "curve_f");
    const double rk = r * k;
    const double base = 1.0 - x;
    const double gamma = 1.0 - std::pow(base, 1.0 / rk);
    const double inner = 1.0 - std::pow(base, (rk - 1.0) / rk);
    return gamma + (1.0 - gamma) * std::pow(inner, k);
}

double curve_f_inverse(double k, double r, double y) {
    require_unit_interval(y, "curve_f_inverse");
    double lo = 0.0, hi = 1.0;
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        const double fm = curve_f(k, r, mid);
        if (std::abs(fm - y) <= 1e-12) return mid;
        if (fm < y)
            lo = mid;
        else
            hi = mid;
        if (hi - lo < 1e-16) break;
    }
    return 0.5 * (lo + hi);
}

double curve_g_lambda(std::uint32_t k, double r) {
    if (k < 2) raise(errc::domain_g, "curve_g: requires integer k >= 2");
    const double d = std::pow(r, 1.0 / (static_cast<double>(k) - 1.0));
    if (!(d >= 2.0)) raise(errc::domain_g, "curve_g: requires d = r^(1/(k-1)) >= 2");
    return 2.0 * std::sqrt(d - 1.0) / d;
}

double curve_g(std::uint32_t k, double r, double x) {
    require_unit_interval(x, "curve_g");
    const double lambda = curve_g_lambda(k, r);
    return x * std::pow(x + (1.0 - x) * lambda, static_cast<double>(k) - 1.0);
}

namespace {

// Sparsity needed by the random construction at error eps; decreasing in eps
// on the admissible interval.
double required_sparsity(double k, double p, double eps) {
    const double L = std::log(1.0 / (1.0 - p));
    const double numer = (L + 1.0) / eps + 1.0;
    const double denom = k - (std::log(1.0 / eps) + 1.0) / (1.0 - p);
    if (denom <= 0.0) return std::numeric_limits<double>::infinity();
    return numer / denom;
}

} // namespace

double curve_h(double k, double r, double p) {
    if (!(k > 1.0)) raise(errc::domain_rk, "curve_h: requires k > 1");
    if (!(p >= 0.0 && p < 1.0)) raise(errc::invalid_argument, "curve_h: requires p in [0,1)");
    if (!(r > 0.0)) raise(errc::invalid_argument, "curve_h: requires r > 0");
    const double eps_min = std::exp(1.0 - (1.0 - p) * k);
    if (eps_min >= 1.0)
        raise(errc::no_admissible_root, "curve_h: (1-p)k <= 1 admits no epsilon");
    if (required_sparsity(k, p, 1.0) > r)
        raise(errc::no_admissible_root, "curve_h: sparsity budget below the eps = 1 requirement");

    // Log-grid scan downward from 1 to bracket the unique crossing of
    // required_sparsity(eps) = r, then bisection.
    double hi = 1.0;
    double lo = hi;
    const int scan_steps = 256;
    const double ratio = std::pow(eps_min / 1.0, 1.0 / scan_steps);
    bool bracketed = false;
    for (int i = 1; i <= scan_steps; ++i) {
        double next = (i == scan_steps) ? eps_min : std::pow(ratio, i);
        if (required_sparsity(k, p, next) >= r) {
            lo = next;
            bracketed = true;
            break;
        }
        hi = next;
    }
    if (!bracketed) raise(errc::no_admissible_root, "curve_h: no crossing found above eps_min");

    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (required_sparsity(k, p, mid) >= r)
            lo = mid;
        else
            hi = mid;
        if (hi - lo <= 1e-9) break;
    }
    return 0.5 * (lo + hi);
}

double curve_h_with_c(double k, double r, double p, double c, bool* window_ok) {
    if (!(c > 0.0 && c < 1.0)) raise(errc::invalid_argument, "curve_h_with_c: c in (0,1)");
    if (!(p >= 0.0 && p < 1.0)) raise(errc::invalid_argument, "curve_h_with_c: p in [0,1)");
    const double L = std::log(1.0 / (1.0 - p));
    const double denom = (1.0 - c) * k * r - 1.0;
    if (denom <= 0.0) raise(errc::no_admissible_root, "curve_h_with_c: (1-c)kr must exceed 1");
    if (window_ok) {
        const double ceiling =
            (std::exp(c * (1.0 - p) * k - 1.0) * (L + 1.0) + 1.0) / ((1.0 - c) * k);
        *window_ok = r <= ceiling;
    }
    return (L + 1.0) / denom;
}

double worst_case_floor_general(std::uint32_t n, double k, double p) {
    if (!(p > 0.0 && p < 1.0))
        raise(errc::invalid_argument, "worst_case_floor_general: p in (0,1)");
    if (static_cast<double>(n) < 1.0 / (p * (1.0 - p)))
        raise(errc::precondition_n, "worst_case_floor_general: n below 1/(p(1-p))");
    return std::pow(p, k) - 2.0 * k / static_cast<double>(n);
}

BigRat worst_case_floor_uniform(std::uint32_t n, std::uint32_t k, double p) {
    if (k > n) raise(errc::invalid_argument, "worst_case_floor_uniform: k must not exceed n");
    const std::int64_t a = static_cast<std::int64_t>(std::floor(p * n));
    BigInt numer = binomial_coefficient(static_cast<std::int64_t>(n) - k, a - k);
    return BigRat(numer, binomial_coefficient(n, a));
}

double lower_bound_c(double k, double delta) {
    if (!(k > 1.0)) raise(errc::domain_k, "lower_bound_c: requires k > 1");
    return delta * (1.0 - delta) * (1.0 - delta) * std::min(1.0 / k, (k - 1.0) / 2.0) / 30.0;
}

double lower_bound_eps(double k, double r, double delta) {
    if (!(r > 0.0)) raise(errc::invalid_argument, "lower_bound_eps: r > 0");
    return std::min(std::pow(delta, k) + lower_bound_c(k, delta) / r, 1.0);
}

void gamma_bracket(const ProfileArgs& args, double* lo, double* hi) {
    double d = 0.0;
    double min_x = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < args.x.size(); ++i) {
        d += args.u[i] * args.x[i];
        min_x = std::min(min_x, args.x[i]);
    }
    *lo = 1.0 - std::pow(1.0 - args.delta, 1.0 / d);
    *hi = 1.0 - std::pow(1.0 - args.delta, 1.0 / min_x);
}

HardOptResult hard_opt_functional(const ProfileArgs& args) {
    if (args.x.empty() || args.x.size() != args.u.size())
        raise(errc::invalid_argument, "hard_opt_functional: x and u must be nonempty and aligned");
    if (!(args.delta > 0.0 && args.delta < 1.0))
        raise(errc::invalid_argument, "hard_opt_functional: delta in (0,1)");
    if (!(args.k >= 1.0)) raise(errc::invalid_argument, "hard_opt_functional: k >= 1");
    double usum = 0.0;
    for (std::size_t i = 0; i < args.x.size(); ++i) {
        if (!(args.x[i] > 1.0)) raise(errc::invalid_argument, "hard_opt_functional: x_i > 1");
        if (args.u[i] < 0.0) raise(errc::invalid_argument, "hard_opt_functional: u_i >= 0");
        usum += args.u[i];
    }
    if (std::abs(usum - 1.0) > 1e-9)
        raise(errc::invalid_argument, "hard_opt_functional: u must sum to 1");

    auto density_at = [&](double gamma) {
        double value = 0.0;
        for (std::size_t i = 0; i < args.x.size(); ++i)
            value += args.u[i] * (1.0 - std::pow(1.0 - gamma, args.x[i]));
        return value;
    };

    double lo, hi;
    gamma_bracket(args, &lo, &hi);
    // density_at is increasing in gamma; the bracket comes from Jensen
    // against the extremes of the x_i.
    if (density_at(lo) > args.delta + 1e-9 || density_at(hi) < args.delta - 1e-9)
        raise(errc::bracket_failure, "hard_opt_functional: gamma bracket does not straddle delta");
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        const double fm = density_at(mid);
        if (std::abs(fm - args.delta) <= 1e-12) {
            lo = hi = mid;
            break;
        }
        if (fm < args.delta)
            lo = mid;
        else
            hi = mid;
    }
    const double gamma = 0.5 * (lo + hi);

    HardOptResult out;
    out.gamma = gamma;
    out.d = 0.0;
    for (std::size_t i = 0; i < args.x.size(); ++i) out.d += args.u[i] * args.x[i];
    out.r = out.d / args.k;
    double product = 1.0;
    for (std::size_t i = 0; i < args.x.size(); ++i) {
        const double factor = 1.0 - std::pow(1.0 - gamma, args.x[i] - 1.0);
        product *= std::pow(factor, args.u[i] * args.x[i] / out.r);
    }
    out.value = gamma + (1.0 - gamma) * product;
    return out;
}

DisperserFloor disperser_floor(std::uint32_t u, std::uint32_t l, std::uint32_t n) {
    const double U = std::ldexp(1.0, static_cast<int>(u));
    const double L = std::ldexp(1.0, static_cast<int>(l));
    const double N = std::ldexp(1.0, static_cast<int>(n));
    DisperserFloor out;
    out.base = (u == 0) ? 0.0 : std::pow(1.0 - 1.0 / U, L * U);
    out.epsilon_floor = out.base - 2.0 * L * U / N;
    out.seed_floor_is_asymptotic = true;
    return out;
}

double disperser_seed_floor(std::uint32_t u, std::uint32_t l, std::uint32_t n, double eps) {
    const DisperserFloor floor = disperser_floor(u, l, n);
    if (eps <= floor.base) return kNan;
    return -std::log2(eps - floor.base);
}

VertexExpanderCeiling vertex_expander_ceiling(std::uint32_t n, double r, double k, double delta) {
    if (!(delta >= 0.0 && delta <= 1.0))
        raise(errc::invalid_argument, "vertex_expander_ceiling: delta in [0,1]");
    VertexExpanderCeiling out;
    const double miss = std::pow(1.0 - delta, k);
    out.finite_n = std::min(1.0 - miss + 2.0 * k / static_cast<double>(n), 1.0);
    if (k > 1.0 && delta > 0.0 && delta < 1.0 && r > 0.0)
        out.asymptotic = 1.0 - miss - lower_bound_c(k, 1.0 - delta) / r;
    else
        out.asymptotic = kNan;
    return out;
}

std::vector<BoundRow> confiner_lower_bound_table(double k, double r, double p, std::uint64_t n,
                                                 const InstanceFlags& flags) {
    if (!(p > 0.0 && p < 1.0))
        raise(errc::invalid_argument, "confiner_lower_bound_table: p in (0,1)");
    std::vector<BoundRow> rows;
    const double nn = static_cast<double>(n);
    const double rk = r * k;

    {
        BoundRow row{"complete_floor", std::pow(p, k) - 2.0 * k / nn, false,
                     PreconditionStatus::holds, "needs n >= 1/(p(1-p))"};
        if (nn < 1.0 / (p * (1.0 - p))) row.status = PreconditionStatus::fails;
        rows.push_back(row);
    }
    if (k > 1.0) {
        rows.push_back({"sparsity_gap", lower_bound_eps(k, r, p), false,
                        PreconditionStatus::not_checked_unspecified,
                        "n-threshold r^12.75 * poly(k, 1/p, 1/(1-p)) has unspecified constants"});
    }
    if (rk >= 1.0) {
        rows.push_back({"f_triple_sparsity", curve_f(k, 3.0 * r, p), true,
                        flags.min_degree >= 1 ? PreconditionStatus::not_checked_unspecified
                                              : PreconditionStatus::fails,
                        "needs min degree >= 1; vanishing n^-0.078 term omitted"});
        rows.push_back({"f_exact_sparsity", curve_f(k, r, p), true,
                        (flags.regular || flags.min_degree >= 3)
                            ? PreconditionStatus::not_checked_unspecified
                            : PreconditionStatus::fails,
                        "needs regular or min degree >= 3; vanishing n^-0.078 term omitted"});
        {
            BoundRow row{"dual_floor",
                         1.0 - std::pow(1.0 - p, 1.0 / rk) -
                             2.0 * k / (2.718281828459045 * p * (1.0 - p) * nn),
                         false, PreconditionStatus::holds, "needs n >= 4k/(p(1-p)) and rk >= 1"};
            if (nn < 4.0 * k / (p * (1.0 - p))) row.status = PreconditionStatus::fails;
            rows.push_back(row);
        }
        rows.push_back({"dual_f_triple", 1.0 - curve_f_inverse(rk, 3.0 / r, 1.0 - p), true,
                        flags.min_uniformity >= 1 ? PreconditionStatus::not_checked_unspecified
                                                  : PreconditionStatus::fails,
                        "needs no empty edges; vanishing n^-0.078 term omitted"});
        rows.push_back({"dual_f_exact", 1.0 - curve_f_inverse(rk, 1.0 / r, 1.0 - p), true,
                        flags.min_uniformity >= 3 ? PreconditionStatus::not_checked_unspecified
                                                  : PreconditionStatus::fails,
                        "needs min uniformity >= 3; vanishing n^-0.078 term omitted"});
    }
    return rows;
}

std::string curves_csv(double k, double r, const std::vector<std::string>& which,
                       std::uint32_t grid_points) {
    if (grid_points < 2) raise(errc::invalid_argument, "curves_csv: need at least 2 grid points");
    auto wanted = [&](const char* name) {
        if (which.empty()) return true;
        return std::find(which.begin(), which.end(), name) != which.end();
    };
    const bool want_f = wanted("f");
    const bool want_g = wanted("g");
    const bool want_h = wanted("h");
    const bool want_xk = wanted("xk");

    std::string out = "x,f,g,h,xk\n";
    char buf[64];
    const std::uint32_t k_int = static_cast<std::uint32_t>(std::llround(k));
    for (std::uint32_t i = 0; i < grid_points; ++i) {
        const double x = static_cast<double>(i) / (grid_points - 1);
        double fv = kNan, gv = kNan, hv = kNan, xkv = kNan;
        if (want_f && r * k >= 1.0) fv = curve_f(k, r, x);
        if (want_g && k >= 2.0 && k == std::floor(k)) {
            try {
                gv = curve_g(k_int, r, x);
            } catch (const Error&) {
            }
        }
        if (want_h && x < 1.0) {
            try {
                hv = curve_h(k, r, x);
            } catch (const Error&) {
            }
        }
        if (want_xk) xkv = std::pow(x, k);
        std::snprintf(buf, sizeof(buf), "%.6f", x);
        out += buf;
        auto append = [&](double v) {
            out += ',';
            if (std::isnan(v)) {
                out += "nan";
            } else {
                std::snprintf(buf, sizeof(buf), "%.6f", v);
                out += buf;
            }
        };
        append(fv);
        append(gv);
        append(hv);
        append(xkv);
        out += '\n';
    }
    return out;
}

} // namespace hypersample

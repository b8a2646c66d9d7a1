#pragma once

#include "hypersample/numeric.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hypersample {

// Closed-form and root-solved bound curves for sparse confiners. Arguments
// named (k, r) are the average uniformity and the edge-to-vertex ratio.

// f: worst-case confinement floor for sparse instances,
//   f(k, r, x) = gamma + (1-gamma) * (1 - (1-x)^((rk-1)/(rk)))^k,
//   gamma = 1 - (1-x)^(1/(rk)).
// Defined for rk >= 1, x in [0,1]; strictly increasing with
// f' in (1/(rk), k].
double curve_f(double k, double r, double x);

// Inverse of curve_f in x, by bisection to |f(x) - y| <= 1e-12.
double curve_f_inverse(double k, double r, double y);

// g: expander-walk ceiling, g(k, r, x) = x * (x + (1-x)*lambda)^(k-1) with
// lambda = 2*sqrt(d-1)/d and d = r^(1/(k-1)). Requires integer k >= 2 and
// d >= 2.
double curve_g(std::uint32_t k, double r, double x);
double curve_g_lambda(std::uint32_t k, double r); // the lambda used by curve_g

// h: smallest epsilon admitted by the random-construction sparsity budget,
// i.e. the root of
//   r = (eps^-1 * (L+1) + 1) / (k - (1-p)^-1 * (ln(eps^-1) + 1)),
//   L = ln((1-p)^-1),
// on the interval where the denominator is positive (eps > e^(1-(1-p)k)).
// Bracketing scan plus bisection to 1e-9; NoAdmissibleRoot when the
// interval contains no solution.
double curve_h(double k, double r, double p);

// The c-parameterized sibling of curve_h:
//   h_c = (L+1) / ((1-c)*k*r - 1), valid for 0 < c < 1 and (1-c)*k*r > 1.
// `window_ok` receives whether r also sits below the stated admissible
// ceiling (1/((1-c)k)) * (e^(c(1-p)k-1) * (L+1) + 1).
double curve_h_with_c(double k, double r, double p, double c, bool* window_ok = nullptr);

// Worst-case confinement floors. The general floor p^k - 2k/n needs
// n >= 1/(p(1-p)); the uniform floor is the exact confinement probability of
// a density-p set in the complete k-uniform hypergraph,
// C(n-k, floor(pn)-k) / C(n, floor(pn)).
double worst_case_floor_general(std::uint32_t n, double k, double p);
BigRat worst_case_floor_uniform(std::uint32_t n, std::uint32_t k, double p);

// min{delta^k + c/r, 1} with c = (1/30) * delta * (1-delta)^2 *
// min{1/k, (k-1)/2}; requires k > 1. Exposed separately because several
// derived bounds reuse c.
double lower_bound_eps(double k, double r, double delta);
double lower_bound_c(double k, double delta);

// Degree-profile optimization functional. Given fractions u_i of abstract
// degrees x_i > 1, solves EQ gamma: delta = sum_i u_i (1 - (1-gamma)^{x_i})
// and evaluates
//   F = gamma + (1-gamma) * prod_i (1 - (1-gamma)^{x_i-1})^{u_i x_i / r},
// with d = sum u_i x_i and r = d/k. F >= curve_f(k, d/k, delta) whenever all
// x_i >= 3, with equality exactly on the all-equal diagonal.
struct ProfileArgs {
    std::vector<double> x; // all > 1
    std::vector<double> u; // nonnegative, sums to 1
    double k = 1.0;        // >= 1
    double delta = 0.5;    // in (0,1)
};

struct HardOptResult {
    double gamma;
    double value;
    double d; // sum u_i x_i
    double r; // d / k
};

HardOptResult hard_opt_functional(const ProfileArgs& args);

// Bisection bracket for the gamma equation: [1-(1-delta)^(1/d),
// 1-(1-delta)^(1/min_x)].
void gamma_bracket(const ProfileArgs& args, double* lo, double* hi);

// Disperser floor in the (u, l, n) exponent coordinates (U = 2^u, L = 2^l,
// N = 2^n): epsilon >= (1 - 1/U)^(L*U) - 2*L*U/N. The matching seed-length
// floor -lg(eps - (1-1/U)^(LU)) is reported without its unspecified additive
// constant, flagged asymptotic.
struct DisperserFloor {
    double epsilon_floor;  // (1-1/U)^(LU) - 2LU/N
    double base;           // (1-1/U)^(LU)
    bool seed_floor_is_asymptotic; // always true: additive O_u(1) unspecified
};
DisperserFloor disperser_floor(std::uint32_t u, std::uint32_t l, std::uint32_t n);
// -lg(eps - base), NaN when eps <= base.
double disperser_seed_floor(std::uint32_t u, std::uint32_t l, std::uint32_t n, double eps);

// Expansion ceiling for hypergraphs where every ceil(delta*n)-set meets at
// least eps*r*n edges: (i) eps <= 1-(1-delta)^k + 2k/n (clamped to 1) and
// (ii) eps <= 1-(1-delta)^k - c(k, 1-delta)/r, with c from lower_bound_c.
// (ii) carries unspecified poly-thresholds on n, so it is flagged asymptotic.
struct VertexExpanderCeiling {
    double finite_n;   // (i)
    double asymptotic; // (ii)
};
VertexExpanderCeiling vertex_expander_ceiling(std::uint32_t n, double r, double k, double delta);

// Applicable lower-bound table rows with the precondition status of each.
enum class PreconditionStatus { holds, fails, not_checked_unspecified };

struct BoundRow {
    std::string name;
    double value;
    bool asymptotic;           // value omits an unspecified vanishing term
    PreconditionStatus status;
    std::string note;
};

struct InstanceFlags {
    std::uint32_t min_degree = 0;
    std::uint32_t min_uniformity = 0;
    bool regular = false;
};

std::vector<BoundRow> confiner_lower_bound_table(double k, double r, double p, std::uint64_t n,
                                                 const InstanceFlags& flags);

// CSV export over an inclusive [0,1] grid: header "x,f,g,h,xk", fixed
// 6-decimal format, "nan" for undefined entries. `which` selects columns by
// name; all four when empty.
std::string curves_csv(double k, double r, const std::vector<std::string>& which,
                       std::uint32_t grid_points);

} // namespace hypersample

#pragma once

#include <complex>
#include <vector>

#include "chromabounds/graph.hpp"
#include "chromabounds/polynomial.hpp"
#include "chromabounds/roots.hpp"

namespace chromabounds {

/// Exact sign of p at a rational point, via the denominator-cleared integer
/// Horner sum c_d a^d + c_{d-1} a^{d-1} b + ... + c_0 b^d (b > 0 preserves it).
int sign_at(const IntPolynomial& p, const BigRational& x);

/// Numerator N_k of the k-th derivative of L(x) = log((-1)^n P(x)):
/// L^(k) = N_k / P^k with N_1 = P' and N_{k+1} = N_k' P - k N_k P'.
/// deg N_k <= k(deg P - 1). Requires k >= 1.
IntPolynomial log_deriv_numerator(const IntPolynomial& p, int k);

/// Exact L^(k)(x) = N_k(x) / P(x)^k. Throws PoleError at roots of P.
BigRational log_deriv_exact(const IntPolynomial& p, int k, const BigRational& x);
BigRational log_deriv_exact(const Graph& g, int k, const BigRational& x);

/// Exact sign of L^(k)(x) without building the value.
int log_deriv_sign(const IntPolynomial& p, int k, const BigRational& x);

/// Partial-fraction form (k-1)! * sum_j Re((-1)^(k-1) / (x - alpha_j)^k),
/// the floating cross-check oracle. Throws PoleError when x is within 1e-8
/// of a root.
double log_deriv_from_roots(const RootSet& rs, int k, double x);

/// The single-root kernel the sector bounds control. negative_x computes
/// Re((-1)^(k-1) / (x-z)^k) and requires x < 0; signed_x computes
/// Re(-sgn(x)^k / (x-z)^k) for either sign of x. Both coincide for x < 0.
/// Requires x != 0; throws PoleError when x == z.
enum class SectorVariant { negative_x, signed_x };
double sector_realpart(double x, std::complex<double> z, int k, SectorVariant variant);

/// -rho_bound * csc(pi/2k): every x at or below it satisfies the sector
/// hypothesis for roots within rho_bound. Requires k >= 2.
double csc_threshold(int k, double rho_bound);

/// 0.708k, a proven upper estimate of csc(pi/2k) for k >= 2.
double csc_estimate(int k);

struct SampleSign {
    BigRational x;
    int sign = 0;
};

/// Sign sweep certifying L^(k) < 0 at x = -ceil(T*100)/100 - j, j = 0..9
/// (j = 1..10 when the threshold is 0, keeping samples off the pole at 0).
struct TheoremCheck {
    bool holds = false;
    BigRational threshold;  // magnitude of the sample start
    std::vector<SampleSign> samples;
};

/// T = 4.25 * maxdeg * csc(pi/2k), or 3.81 in place of 4.25 for claw-free
/// graphs when allow_claw_free_bound is set. Requires k >= 2.
TheoremCheck verify_thm33(const Graph& g, int k, bool allow_claw_free_bound = true);

/// T = 3.01 * maxdeg * k, kept exact as a rational. Requires k >= 2.
TheoremCheck verify_thm15(const Graph& g, int k);

/// Equispaced rational probe points strictly inside (-3.01*maxdeg*k, 0),
/// empty for edgeless graphs (the interval is empty). Negative rationals are
/// never chromatic roots, so the grid is pole-free by construction.
std::vector<BigRational> window_grid(const Graph& g, int k, int points);

/// Exploratory sign report over a user grid in the unproven window; never
/// asserts. Grid points must be negative; a pole (cannot happen for negative
/// rationals, but arbitrary grids are accepted) is flagged and skipped.
struct WindowPoint {
    BigRational x;
    int sign = 0;
    bool skipped = false;
};
std::vector<WindowPoint> conjecture_window_scan(const Graph& g, int k,
                                                const std::vector<BigRational>& grid);

/// P'(G,x)/P(G,x) exactly. Throws PoleError at roots.
BigRational epsilon_via_roots(const Graph& g, const BigRational& x);

/// Mean edge count of the broken-cycle-free spanning subgraphs,
/// sum (n-i) a_i / sum a_i, equal to n + epsilon_via_roots(G, -1).
BigRational epsilon_mean_subgraph(const Graph& g);

}  // namespace chromabounds

#pragma once

#include <optional>
#include <vector>

#include "chromabounds/graph.hpp"
#include "chromabounds/polynomial.hpp"

namespace chromabounds {

/// Laurent coefficients c_1..c_count of log(P(G,x)/x^n) expanded at infinity:
/// c_i = -p_i/i with p_i the exact power sums of the chromatic roots.
std::vector<BigRational> laurent_coeffs(const IntPolynomial& p, int count);
std::vector<BigRational> laurent_coeffs(const Graph& g, int count);

/// c_1 = -|E| and c_2 = -(t + |E|/2) with t the triangle count, checked
/// exactly against the Newton-identity route.
struct EdgeTriangleCheck {
    bool ok = false;
    BigRational c1, c2;
    long long m = 0;
    long long t = 0;
};
EdgeTriangleCheck verify_lemma22(const Graph& g);

/// Closed-form lower bound on F'(x), F = log(P/x^n), valid for x > rho:
/// m/x^2 + (2t+m)/x^3 - n*rho^3 / (x^3 (x - rho)). Throws std::domain_error
/// unless x > rho >= 0.
double fprime_lower_bound(const Graph& g, double x, double rho);

/// Larger solution of (x+1)(x-rho) = rho^3; above it the F' lower bound of a
/// connected graph is positive. Requires rho >= 0.
double x0_threshold(double rho);

/// Exact sign of F'(x) at rational x as sign(x*P'(x) - n*P(x)) * sign(x*P(x)).
/// Throws PoleError at roots of P (and at x = 0 for nonempty orders).
int fprime_exact_sign(const IntPolynomial& p, int n, const BigRational& x);
int fprime_exact_sign(const Graph& g, const BigRational& x);

/// Exact verdict of (x-1)^n * P(G,x) >= x^n * P(G,x-1), cross-multiplied so
/// no division (hence no pole) occurs. lhs/rhs are the two sides.
struct RatioCheck {
    bool holds = false;
    BigRational lhs, rhs;
};
RatioCheck check_ratio_inequality(const IntPolynomial& p, int n, const BigRational& x);
RatioCheck check_ratio_inequality(const Graph& g, const BigRational& x);

/// Exact 2-decimal ceiling of 10 * maxdeg^(3/2), the guaranteed-monotone
/// threshold, computed as ceil(sqrt(10^6 * maxdeg^3)) / 100.
BigRational monotonic_threshold(int maxdeg);

/// Grid sweep of the ratio inequality over (1, T], T = monotonic_threshold.
/// settle_point is the first grid point from which the verdict never fails
/// again (absent when the final grid point itself fails). For maxdeg = 0 the
/// nominal grid (1, 0] is empty, so (1, 2] is scanned instead.
struct ThresholdScan {
    BigRational threshold;
    std::optional<BigRational> settle_point;
    long long points = 0;
    long long failures = 0;
    long long failures_above_threshold = 0;  // any nonzero value falsifies the bound
};
ThresholdScan threshold_scan(const Graph& g, const BigRational& step = BigRational(1, 100));

/// Hand-checkable certificates for the tight regime of the ratio bound:
/// h3 = 27C^2 - (141*sqrt(3)/4)C - 133467/64 (positive once C >= 10) and
/// deriv_margin = 3(C^2 - 4913/64)*sqrt(3) - (85/8)C (positive from C ~ 9.8438,
/// so the bound only improves as C grows). A single certificate covering all
/// y >= 2 would need C > 10, hence the published split is kept.
struct CaseTwoCertificate {
    double h3 = 0;
    double deriv_margin = 0;
};
CaseTwoCertificate case2_certificates(double C);

}  // namespace chromabounds

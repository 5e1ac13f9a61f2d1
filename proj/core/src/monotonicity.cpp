#include "chromabounds/monotonicity.hpp"

#include <cmath>
#include <stdexcept>

#include "chromabounds/chromatic.hpp"
#include "chromabounds/errors.hpp"
#include "chromabounds/roots.hpp"

namespace chromabounds {

std::vector<BigRational> laurent_coeffs(const IntPolynomial& p, int count) {
    std::vector<BigInt> ps = newton_power_sums(p, count);
    std::vector<BigRational> c(ps.size());
    for (std::size_t i = 0; i < ps.size(); ++i)
        c[i] = BigRational(-ps[i], static_cast<unsigned>(i + 1));
    return c;
}

std::vector<BigRational> laurent_coeffs(const Graph& g, int count) {
    return laurent_coeffs(chromatic_deletion_contraction(g), count);
}

EdgeTriangleCheck verify_lemma22(const Graph& g) {
    EdgeTriangleCheck r;
    auto c = laurent_coeffs(g, 2);
    r.c1 = c[0];
    r.c2 = c[1];
    r.m = g.edge_count();
    r.t = triangle_count(g);
    r.ok = r.c1 == BigRational(-r.m) &&
           r.c2 == -(BigRational(r.t) + BigRational(r.m, 2));
    return r;
}

double fprime_lower_bound(const Graph& g, double x, double rho) {
    if (rho < 0 || !(x > rho))
        throw std::domain_error("fprime_lower_bound needs x > rho >= 0");
    const double n = g.vertex_count();
    const double m = g.edge_count();
    const double t = static_cast<double>(triangle_count(g));
    const double x3 = x * x * x;
    return m / (x * x) + (2 * t + m) / x3 - n * rho * rho * rho / (x3 * (x - rho));
}

double x0_threshold(double rho) {
    if (rho < 0) throw std::domain_error("x0_threshold needs rho >= 0");
    return 0.5 * (rho - 1 + std::sqrt((rho + 1) * (rho + 1) + 4 * rho * rho * rho));
}

int fprime_exact_sign(const IntPolynomial& p, int n, const BigRational& x) {
    BigRational px = p.eval(x);
    if (px == 0)
        throw PoleError("F' undefined: P vanishes at " + to_fraction_string(x));
    if (x == 0 && n >= 1) throw PoleError("F' undefined at x = 0");
    int num = sign_of(x * p.derivative().eval(x) - n * px);
    return num * sign_of(x * px);
}

int fprime_exact_sign(const Graph& g, const BigRational& x) {
    return fprime_exact_sign(chromatic_deletion_contraction(g), g.vertex_count(), x);
}

RatioCheck check_ratio_inequality(const IntPolynomial& p, int n, const BigRational& x) {
    if (n < 0) throw std::invalid_argument("order must be >= 0");
    const BigInt a = numerator(x);
    const BigInt b = denominator(x);

    // Clear denominators: with x = a/b, the claim is
    //   (a-b)^n * [b^n P(a/b)] >= a^n * [b^n P((a-b)/b)], all integers.
    std::vector<BigInt> bpow(static_cast<std::size_t>(n) + 1);
    bpow[0] = 1;
    for (int i = 1; i <= n; ++i) bpow[static_cast<std::size_t>(i)] = bpow[static_cast<std::size_t>(i - 1)] * b;

    const BigInt am = a - b;
    auto cleared_eval = [&](const BigInt& num) {
        BigInt acc = 0;
        for (int i = n; i >= 0; --i)
            acc = acc * num + p.coeff(i) * bpow[static_cast<std::size_t>(n - i)];
        return acc;
    };

    BigInt lhs = am;
    BigInt rhs = a;
    BigInt lhsz = cleared_eval(a);
    BigInt rhsz = cleared_eval(am);
    for (int i = 1; i < n; ++i) {
        lhs *= am;
        rhs *= a;
    }
    if (n == 0) lhs = rhs = 1;
    lhsz *= lhs;
    rhsz *= rhs;

    RatioCheck r;
    r.holds = lhsz >= rhsz;
    BigInt scale = bpow[static_cast<std::size_t>(n)] * bpow[static_cast<std::size_t>(n)];
    r.lhs = BigRational(lhsz, scale);
    r.rhs = BigRational(rhsz, scale);
    return r;
}

RatioCheck check_ratio_inequality(const Graph& g, const BigRational& x) {
    return check_ratio_inequality(chromatic_deletion_contraction(g), g.vertex_count(), x);
}

BigRational monotonic_threshold(int maxdeg) {
    if (maxdeg < 0) throw std::invalid_argument("max degree must be >= 0");
    BigInt d = maxdeg;
    return BigRational(isqrt_ceil(BigInt(1'000'000) * d * d * d), 100);
}

ThresholdScan threshold_scan(const Graph& g, const BigRational& step) {
    if (step <= 0) throw std::invalid_argument("grid step must be positive");
    ThresholdScan scan;
    scan.threshold = monotonic_threshold(max_degree(g));
    const BigRational end = std::max(scan.threshold, BigRational(2));

    IntPolynomial p = chromatic_deletion_contraction(g);
    const int n = g.vertex_count();
    std::optional<BigRational> settle;
    for (BigRational x = 1 + step; x <= end; x += step) {
        ++scan.points;
        if (check_ratio_inequality(p, n, x).holds) {
            if (!settle) settle = x;
        } else {
            ++scan.failures;
            if (x >= scan.threshold) ++scan.failures_above_threshold;
            settle.reset();
        }
    }
    scan.settle_point = settle;
    return scan;
}

CaseTwoCertificate case2_certificates(double C) {
    const double s3 = std::sqrt(3.0);
    CaseTwoCertificate cert;
    cert.h3 = 27.0 * C * C - 141.0 * s3 / 4.0 * C - 133467.0 / 64.0;
    cert.deriv_margin = 3.0 * (C * C - 4913.0 / 64.0) * s3 - 85.0 / 8.0 * C;
    return cert;
}

}  // namespace chromabounds

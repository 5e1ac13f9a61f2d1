#include "chromabounds/log_derivative.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "chromabounds/chromatic.hpp"
#include "chromabounds/errors.hpp"

namespace chromabounds {

int sign_at(const IntPolynomial& p, const BigRational& x) {
    if (p.is_zero()) return 0;
    const BigInt a = numerator(x);
    const BigInt b = denominator(x);
    const int d = p.degree();
    std::vector<BigInt> bpow(static_cast<std::size_t>(d) + 1);
    bpow[0] = 1;
    for (int i = 1; i <= d; ++i)
        bpow[static_cast<std::size_t>(i)] = bpow[static_cast<std::size_t>(i - 1)] * b;
    BigInt acc = 0;
    for (int i = d; i >= 0; --i) acc = acc * a + p.coeff(i) * bpow[static_cast<std::size_t>(d - i)];
    return acc.sign();
}

IntPolynomial log_deriv_numerator(const IntPolynomial& p, int k) {
    if (k < 1) throw std::invalid_argument("derivative order must be >= 1");
    IntPolynomial n = p.derivative();
    const IntPolynomial dp = n;
    for (int j = 1; j < k; ++j) n = n.derivative() * p - IntPolynomial{j} * n * dp;
    return n;
}

BigRational log_deriv_exact(const IntPolynomial& p, int k, const BigRational& x) {
    BigRational px = p.eval(x);
    if (px == 0)
        throw PoleError("L^(k) undefined: P vanishes at " + to_fraction_string(x));
    BigRational pk = 1;
    for (int i = 0; i < k; ++i) pk *= px;
    return log_deriv_numerator(p, k).eval(x) / pk;
}

BigRational log_deriv_exact(const Graph& g, int k, const BigRational& x) {
    return log_deriv_exact(chromatic_deletion_contraction(g), k, x);
}

int log_deriv_sign(const IntPolynomial& p, int k, const BigRational& x) {
    int ps = sign_at(p, x);
    if (ps == 0)
        throw PoleError("L^(k) undefined: P vanishes at " + to_fraction_string(x));
    int sign = sign_at(log_deriv_numerator(p, k), x);
    return k % 2 == 0 || ps > 0 ? sign : -sign;
}

double log_deriv_from_roots(const RootSet& rs, int k, double x) {
    if (k < 1) throw std::invalid_argument("derivative order must be >= 1");
    double fact = 1;
    for (int i = 2; i < k; ++i) fact *= i;
    const std::complex<double> cx(x, 0);
    double sum = 0;
    for (const auto& alpha : rs.roots) {
        std::complex<double> diff = cx - alpha;
        if (std::abs(diff) <= 1e-8)
            throw PoleError("evaluation point within 1e-8 of a root");
        std::complex<double> pw = 1;
        for (int i = 0; i < k; ++i) pw *= diff;
        // Re(c / w) = c * Re(conj(w)) / |w|^2
        double c = k % 2 == 1 ? 1.0 : -1.0;
        sum += c * pw.real() / std::norm(pw);
    }
    return fact * sum;
}

double sector_realpart(double x, std::complex<double> z, int k, SectorVariant variant) {
    if (k < 1) throw std::invalid_argument("order must be >= 1");
    if (x == 0) throw std::domain_error("sector_realpart needs x != 0");
    if (variant == SectorVariant::negative_x && x >= 0)
        throw std::domain_error("negative_x variant needs x < 0");
    std::complex<double> diff = std::complex<double>(x, 0) - z;
    if (diff == std::complex<double>(0, 0))
        throw PoleError("sector_realpart pole: x equals z");
    std::complex<double> pw = 1;
    for (int i = 0; i < k; ++i) pw *= diff;
    double c;
    if (variant == SectorVariant::negative_x) {
        c = k % 2 == 1 ? 1.0 : -1.0;  // (-1)^(k-1)
    } else {
        c = x > 0 ? -1.0 : (k % 2 == 0 ? -1.0 : 1.0);  // -sgn(x)^k
    }
    return c * pw.real() / std::norm(pw);
}

double csc_threshold(int k, double rho_bound) {
    if (k < 2) throw std::invalid_argument("csc thresholds need k >= 2");
    return -rho_bound / std::sin(std::numbers::pi / (2.0 * k));
}

double csc_estimate(int k) {
    if (k < 2) throw std::invalid_argument("csc thresholds need k >= 2");
    return 0.708 * k;
}

namespace {

TheoremCheck sample_sweep(const Graph& g, int k, const BigRational& threshold) {
    TheoremCheck check;
    check.threshold = threshold;
    IntPolynomial p = chromatic_deletion_contraction(g);
    check.holds = true;
    const int j0 = threshold == 0 ? 1 : 0;  // keep samples off the pole at 0
    for (int j = j0; j < j0 + 10; ++j) {
        BigRational x = -threshold - j;
        int sign = log_deriv_sign(p, k, x);
        check.samples.push_back({x, sign});
        if (sign >= 0) check.holds = false;
    }
    return check;
}

}  // namespace

TheoremCheck verify_thm33(const Graph& g, int k, bool allow_claw_free_bound) {
    if (k < 2) throw std::invalid_argument("verify_thm33 needs k >= 2");
    double factor =
        allow_claw_free_bound && is_claw_free(g) ? RhoBoundTable::claw_free : RhoBoundTable::general;
    double t = factor * max_degree(g) / std::sin(std::numbers::pi / (2.0 * k));
    return sample_sweep(g, k, centi_ceil(t));
}

TheoremCheck verify_thm15(const Graph& g, int k) {
    if (k < 2) throw std::invalid_argument("verify_thm15 needs k >= 2");
    return sample_sweep(g, k, BigRational(301 * max_degree(g) * k, 100));
}

std::vector<BigRational> window_grid(const Graph& g, int k, int points) {
    if (k < 2) throw std::invalid_argument("window grid needs k >= 2");
    if (points < 1) throw std::invalid_argument("grid needs at least one point");
    const BigRational t(301 * max_degree(g) * k, 100);
    std::vector<BigRational> grid;
    if (t == 0) return grid;  // empty window for edgeless graphs
    grid.reserve(static_cast<std::size_t>(points));
    for (int j = points; j >= 1; --j) grid.push_back(-t * BigRational(j, points + 1));
    return grid;
}

std::vector<WindowPoint> conjecture_window_scan(const Graph& g, int k,
                                                const std::vector<BigRational>& grid) {
    if (k < 2) throw std::invalid_argument("window scan needs k >= 2");
    IntPolynomial p = chromatic_deletion_contraction(g);
    std::vector<WindowPoint> report;
    report.reserve(grid.size());
    for (const BigRational& x : grid) {
        if (x >= 0) throw std::invalid_argument("window grid points must be negative");
        WindowPoint pt;
        pt.x = x;
        if (sign_at(p, x) == 0) {
            pt.skipped = true;
        } else {
            pt.sign = log_deriv_sign(p, k, x);
        }
        report.push_back(pt);
    }
    return report;
}

BigRational epsilon_via_roots(const Graph& g, const BigRational& x) {
    IntPolynomial p = chromatic_deletion_contraction(g);
    BigRational px = p.eval(x);
    if (px == 0)
        throw PoleError("epsilon undefined: P vanishes at " + to_fraction_string(x));
    return p.derivative().eval(x) / px;
}

BigRational epsilon_mean_subgraph(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 1) throw std::invalid_argument("epsilon needs order >= 1");
    IntPolynomial p = chromatic_broken_cycle(g, EdgeOrdering::identity(g));
    BigInt weighted = 0, total = 0;
    for (int i = 1; i <= n; ++i) {
        BigInt a = (n - i) % 2 == 0 ? p.coeff(i) : -p.coeff(i);
        weighted += a * (n - i);
        total += a;
    }
    return BigRational(weighted, total);
}

}  // namespace chromabounds

#include "chromabounds/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <nlohmann/json.hpp>

#include "chromabounds/errors.hpp"

namespace chromabounds {

namespace {

using cd = std::complex<double>;

// Coefficients scaled by the largest magnitude so doubles never overflow.
std::vector<double> scaled_coeffs(const IntPolynomial& p) {
    BigInt cmax = 0;
    for (const auto& c : p.coeffs()) {
        BigInt a = boost::multiprecision::abs(c);
        if (a > cmax) cmax = a;
    }
    std::vector<double> out(p.coeffs().size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = to_double(BigRational(p.coeffs()[i], cmax));
    return out;
}

cd horner(const std::vector<double>& c, cd z) {
    cd acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return acc;
}

void horner2(const std::vector<double>& c, cd z, cd& value, cd& deriv) {
    value = 0;
    deriv = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        deriv = deriv * z + value;
        value = value * z + *it;
    }
}

double backward_error(const std::vector<double>& c, cd z) {
    double num = std::abs(horner(c, z));
    double den = 0, zp = 1, az = std::abs(z);
    for (double ci : c) {
        den += std::fabs(ci) * zp;
        zp *= az;
    }
    if (den == 0) return num == 0 ? 0.0 : std::numeric_limits<double>::infinity();
    return num / den;
}

std::vector<cd> aberth(const std::vector<double>& monic, int max_sweeps) {
    const int d = static_cast<int>(monic.size()) - 1;
    double radius = 0;
    for (int i = 0; i < d; ++i) radius = std::max(radius, std::fabs(monic[static_cast<std::size_t>(i)]));
    radius = 0.5 * (1.0 + radius);

    std::vector<cd> z(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) {
        double theta = 2.0 * std::numbers::pi * j / d + 0.3713;
        z[static_cast<std::size_t>(j)] = radius * cd(std::cos(theta), std::sin(theta));
    }

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double worst_step = 0;
        for (int i = 0; i < d; ++i) {
            cd zi = z[static_cast<std::size_t>(i)];
            cd p, dp;
            horner2(monic, zi, p, dp);
            if (p == cd(0)) continue;
            cd newton = dp == cd(0) ? cd(0.5, 0.5) : p / dp;
            cd sum = 0;
            for (int j = 0; j < d; ++j)
                if (j != i) {
                    cd diff = zi - z[static_cast<std::size_t>(j)];
                    if (diff == cd(0)) diff = cd(1e-12, 1e-12);
                    sum += 1.0 / diff;
                }
            cd denom = 1.0 - newton * sum;
            cd w = denom == cd(0) ? newton : newton / denom;
            z[static_cast<std::size_t>(i)] = zi - w;
            worst_step = std::max(worst_step, std::abs(w) / (1.0 + std::abs(zi)));
        }
        if (worst_step < 1e-14) break;
    }

    // Newton polish sharpens each root individually.
    for (auto& zi : z)
        for (int it = 0; it < 3; ++it) {
            cd p, dp;
            horner2(monic, zi, p, dp);
            if (dp == cd(0)) break;
            cd step = p / dp;
            if (std::abs(step) > 0.5 * (1.0 + std::abs(zi))) break;
            zi -= step;
        }
    return z;
}

void symmetrize_conjugates(std::vector<cd>& roots, double snap_tol) {
    for (auto& z : roots)
        if (std::fabs(z.imag()) <= snap_tol * (1.0 + std::abs(z))) z = cd(z.real(), 0.0);

    std::vector<std::size_t> pos, neg;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (roots[i].imag() > 0) pos.push_back(i);
        if (roots[i].imag() < 0) neg.push_back(i);
    }
    std::vector<bool> taken(roots.size(), false);
    for (std::size_t i : pos) {
        std::size_t best = roots.size();
        double best_dist = std::numeric_limits<double>::infinity();
        for (std::size_t j : neg) {
            if (taken[j]) continue;
            double dist = std::abs(roots[i] - std::conj(roots[j]));
            if (dist < best_dist) {
                best_dist = dist;
                best = j;
            }
        }
        if (best == roots.size()) continue;
        taken[best] = true;
        cd mean = 0.5 * (roots[i] + std::conj(roots[best]));
        roots[i] = mean;
        roots[best] = std::conj(mean);
    }
}

}  // namespace

RootSet find_roots(const IntPolynomial& p, double tol, int max_sweeps) {
    if (p.degree() < 1)
        throw std::invalid_argument("find_roots needs degree >= 1, got degree " +
                                    std::to_string(p.degree()));

    // Integer roots of magnitude <= 64 (every chromatic root that is an
    // integer, since orders stop at 62) are peeled off exactly. Multiple
    // integer roots are common -- e.g. repeated (x-2) factors, one per
    // diamond-like block -- and iterating on them would cost accuracy like
    // tol^(1/multiplicity); deflating them keeps residual exactly 0.
    std::vector<cd> exact;
    IntPolynomial q = p;
    for (int i = 0; i < p.trailing_zeros(); ++i) exact.push_back(cd(0, 0));
    if (!exact.empty()) {
        std::vector<BigInt> shifted(q.coeffs().begin() + static_cast<long>(exact.size()),
                                    q.coeffs().end());
        q = IntPolynomial(std::move(shifted));
    }
    for (long long j = 1; j <= 64 && q.degree() >= 1; ++j) {
        for (long long root : {j, -j}) {
            while (q.degree() >= 1 && q.eval(BigInt(root)) == 0) {
                q = q.divide_by_linear(root);
                exact.push_back(cd(static_cast<double>(root), 0));
            }
        }
    }

    RootSet rs;
    rs.roots = exact;
    rs.residuals.assign(exact.size(), 0.0);

    if (q.degree() >= 1) {
        std::vector<double> c = scaled_coeffs(q);
        std::vector<double> monic(c);
        for (auto& v : monic) v /= c.back();
        std::vector<cd> z = aberth(monic, max_sweeps);
        symmetrize_conjugates(z, std::max(tol, 1e-12));

        std::vector<double> full = scaled_coeffs(p);
        double worst = 0;
        for (cd zi : z) {
            double r = backward_error(full, zi);
            if (!std::isfinite(r)) r = std::numeric_limits<double>::infinity();
            worst = std::max(worst, r);
            rs.roots.push_back(zi);
            rs.residuals.push_back(r);
        }
        if (worst > tol)
            throw ConvergenceError("root iteration residual " + std::to_string(worst) +
                                       " above tolerance " + std::to_string(tol),
                                   worst);
    }

    std::vector<std::size_t> order(rs.roots.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (rs.roots[a].real() != rs.roots[b].real())
            return rs.roots[a].real() < rs.roots[b].real();
        return rs.roots[a].imag() < rs.roots[b].imag();
    });
    RootSet sorted;
    sorted.roots.reserve(order.size());
    sorted.residuals.reserve(order.size());
    for (std::size_t i : order) {
        sorted.roots.push_back(rs.roots[i]);
        sorted.residuals.push_back(rs.residuals[i]);
        sorted.rho = std::max(sorted.rho, std::abs(rs.roots[i]));
    }
    return sorted;
}

std::vector<BigInt> newton_power_sums(const IntPolynomial& p, int count) {
    if (p.is_zero() || !p.is_monic())
        throw std::invalid_argument("newton_power_sums needs a monic polynomial");
    if (count < 0) throw std::invalid_argument("power sum count must be >= 0");
    const int d = p.degree();

    // e_i = (-1)^i c_{d-i} are the elementary symmetric functions of the roots.
    std::vector<BigInt> e(static_cast<std::size_t>(count) + 1, 0);
    for (int i = 1; i <= count && i <= d; ++i) {
        e[static_cast<std::size_t>(i)] = p.coeff(d - i);
        if (i % 2 != 0) e[static_cast<std::size_t>(i)] = -e[static_cast<std::size_t>(i)];
    }

    std::vector<BigInt> ps(static_cast<std::size_t>(count) + 1, 0);
    for (int k = 1; k <= count; ++k) {
        BigInt acc = e[static_cast<std::size_t>(k)] * k;
        if (k % 2 == 0) acc = -acc;
        for (int i = 1; i < k; ++i) {
            BigInt term = e[static_cast<std::size_t>(i)] * ps[static_cast<std::size_t>(k - i)];
            if (i % 2 == 0) term = -term;
            acc += term;
        }
        ps[static_cast<std::size_t>(k)] = acc;
    }
    return {ps.begin() + 1, ps.end()};
}

std::vector<double> cycle_root_moduli(int n) {
    if (n < 3) throw std::invalid_argument("cycles need order >= 3");
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k <= n - 2; ++k)
        out.push_back(2.0 * std::fabs(std::sin(k * std::numbers::pi / (n - 1))));
    out.push_back(1.0);
    return out;
}

double rho_upper_bound(const Graph& g) {
    double factor = is_claw_free(g) ? RhoBoundTable::claw_free : RhoBoundTable::general;
    return factor * max_degree(g);
}

double cauchy_bound(const IntPolynomial& p) {
    if (p.degree() < 0) throw std::domain_error("cauchy_bound of the zero polynomial");
    BigInt lead = boost::multiprecision::abs(p.leading());
    double worst = 0;
    for (int i = 0; i < p.degree(); ++i)
        worst = std::max(worst, to_double(BigRational(boost::multiprecision::abs(p.coeff(i)), lead)));
    return 1.0 + worst;
}

std::string to_json_string(const RootSet& rs) {
    nlohmann::json j;
    j["roots"] = nlohmann::json::array();
    for (std::size_t i = 0; i < rs.roots.size(); ++i)
        j["roots"].push_back({{"re", rs.roots[i].real()},
                              {"im", rs.roots[i].imag()},
                              {"residual", rs.residuals[i]}});
    j["rho"] = rs.rho;
    return j.dump();
}

}  // namespace chromabounds

#pragma once

#include <complex>
#include <string>
#include <vector>

#include "chromabounds/graph.hpp"
#include "chromabounds/polynomial.hpp"

namespace chromabounds {

struct RootSet {
    /// All deg(P) roots, sorted by (Re, Im). Integer roots of magnitude <= 64
    /// (repeated ones included) are deflated exactly before iteration, so
    /// their accuracy never degrades with multiplicity; complex roots come in
    /// exact conjugate pairs.
    std::vector<std::complex<double>> roots;
    /// Backward error |P(z)| / sum_i |c_i||z|^i per root (0 for exact ones).
    std::vector<double> residuals;
    /// Largest root modulus.
    double rho = 0.0;
};

/// Aberth-Ehrlich simultaneous iteration with Newton polish and conjugate
/// symmetrization. Requires deg >= 1. Throws ConvergenceError (carrying the
/// worst residual) if any backward error stays above tol.
RootSet find_roots(const IntPolynomial& p, double tol = 1e-10, int max_sweeps = 200);

/// Exact power sums p_1..p_count of the roots of a monic integer polynomial,
/// via Newton's identities. Throws std::invalid_argument if p is not monic.
std::vector<BigInt> newton_power_sums(const IntPolynomial& p, int count);

/// Moduli of the chromatic roots of the n-cycle (n >= 3) from the closed form
/// 1 + exp(i(pi + 2k*pi/(n-1))): first 2|sin(k*pi/(n-1))| for k = 0..n-2,
/// then the root at 1.
std::vector<double> cycle_root_moduli(int n);

/// Uniform root-modulus bounds in units of the maximum degree. The sharper
/// large-girth variant (factor 3.60) lacks a quantified girth threshold and
/// is deliberately not tabled.
struct RhoBoundTable {
    static constexpr double general = 4.25;
    static constexpr double claw_free = 3.81;
};

/// 4.25 * maxdeg, or 3.81 * maxdeg when the graph is claw-free.
double rho_upper_bound(const Graph& g);

/// 1 + max_i |c_i| / |c_d|; every root has modulus below this.
double cauchy_bound(const IntPolynomial& p);

std::string to_json_string(const RootSet& rs);

}  // namespace chromabounds

#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "chromabounds/rational.hpp"

namespace chromabounds {

/// Dense univariate polynomial with exact integer coefficients, stored in
/// ascending degree order. The zero polynomial has degree() == -1.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { normalize(); }
    IntPolynomial(std::initializer_list<long long> coeffs);

    static IntPolynomial monomial(int degree, BigInt coeff = 1);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    /// Coefficient of x^i (0 beyond the degree).
    const BigInt& coeff(int i) const;
    const BigInt& leading() const;
    const std::vector<BigInt>& coeffs() const { return c_; }

    /// Multiplicity of the root 0, i.e. the lowest nonzero coefficient index.
    int trailing_zeros() const;

    BigInt eval(const BigInt& x) const;
    BigRational eval(const BigRational& x) const;

    IntPolynomial derivative() const;
    IntPolynomial pow(unsigned e) const;

    /// Exact quotient by (x - r). Throws std::domain_error if r is not a root.
    IntPolynomial divide_by_linear(const BigInt& r) const;

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    IntPolynomial operator-() const;
    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) = default;

    /// "[c0, c1, ...]" in ascending degree order, "[]" for zero.
    std::string to_string() const;

    /// {"coeffs": ["c0", "c1", ...]} with coefficients as decimal strings
    /// (ascending degree), so arbitrary-size integers survive JSON.
    std::string to_json_string() const;
    static IntPolynomial from_json_string(const std::string& text);

private:
    void normalize();
    std::vector<BigInt> c_;
};

}  // namespace chromabounds

#include "chromabounds/polynomial.hpp"

#include <stdexcept>

#include <nlohmann/json.hpp>

namespace chromabounds {

IntPolynomial::IntPolynomial(std::initializer_list<long long> coeffs) {
    c_.assign(coeffs.begin(), coeffs.end());
    normalize();
}

IntPolynomial IntPolynomial::monomial(int degree, BigInt coeff) {
    if (degree < 0) throw std::invalid_argument("monomial degree must be >= 0");
    std::vector<BigInt> c(static_cast<std::size_t>(degree) + 1);
    c.back() = std::move(coeff);
    return IntPolynomial(std::move(c));
}

void IntPolynomial::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const BigInt& IntPolynomial::coeff(int i) const {
    static const BigInt zero = 0;
    if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
    return c_[static_cast<std::size_t>(i)];
}

const BigInt& IntPolynomial::leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
    return c_.back();
}

int IntPolynomial::trailing_zeros() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return static_cast<int>(i);
    return 0;
}

BigInt IntPolynomial::eval(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

BigRational IntPolynomial::eval(const BigRational& x) const {
    BigRational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPolynomial IntPolynomial::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<BigInt> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned>(i);
    return IntPolynomial(std::move(d));
}

IntPolynomial IntPolynomial::pow(unsigned e) const {
    IntPolynomial result{1};
    IntPolynomial base = *this;
    while (e != 0) {
        if (e & 1u) result = result * base;
        base = base * base;
        e >>= 1u;
    }
    return result;
}

IntPolynomial IntPolynomial::divide_by_linear(const BigInt& r) const {
    if (is_zero()) return {};
    std::vector<BigInt> q(c_.size() - 1);
    BigInt carry = 0;
    for (std::size_t i = c_.size(); i-- > 1;) {
        carry = carry * r + c_[i];
        q[i - 1] = carry;
    }
    if (carry * r + c_[0] != 0)
        throw std::domain_error("divide_by_linear: " + r.str() + " is not a root");
    return IntPolynomial(std::move(q));
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i < a.c_.size()) c[i] += a.c_[i];
        if (i < b.c_.size()) c[i] += b.c_[i];
    }
    return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i < a.c_.size()) c[i] += a.c_[i];
        if (i < b.c_.size()) c[i] -= b.c_[i];
    }
    return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator-() const {
    std::vector<BigInt> c(c_);
    for (auto& v : c) v = -v;
    return IntPolynomial(std::move(c));
}

std::string IntPolynomial::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) out += ", ";
        out += c_[i].str();
    }
    return out + "]";
}

std::string IntPolynomial::to_json_string() const {
    nlohmann::json j;
    j["coeffs"] = nlohmann::json::array();
    for (const auto& c : c_) j["coeffs"].push_back(c.str());
    return j.dump();
}

IntPolynomial IntPolynomial::from_json_string(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
        throw std::invalid_argument("polynomial JSON must be {\"coeffs\": [...]}");
    std::vector<BigInt> c;
    c.reserve(j["coeffs"].size());
    for (const auto& item : j["coeffs"]) {
        if (!item.is_string())
            throw std::invalid_argument("polynomial JSON coefficients must be decimal strings");
        c.emplace_back(item.get<std::string>());
    }
    return IntPolynomial(std::move(c));
}

}  // namespace chromabounds

#include "chromabounds/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace chromabounds {

int sign_of(const BigRational& q) { return q.sign(); }
int sign_of(const BigInt& v) { return v.sign(); }

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

// Decimal digits -> BigInt. Leading zeros are dropped first: the cpp_int
// string constructor would otherwise honor them as a C-style octal prefix.
BigInt digits_to_bigint(std::string_view s) {
    std::size_t nz = s.find_first_not_of('0');
    if (nz == std::string_view::npos) return BigInt(0);
    return BigInt{std::string(s.substr(nz))};
}

BigInt parse_integer(std::string_view s, std::string_view full) {
    bool neg = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        neg = s[0] == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s))
        throw std::invalid_argument("not a rational literal: '" + std::string(full) + "'");
    BigInt v = digits_to_bigint(s);
    if (neg) v = -v;
    return v;
}

}  // namespace

BigRational parse_rational(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        if (text.find('/', slash + 1) != std::string_view::npos ||
            text.find('.') != std::string_view::npos)
            throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
        BigInt num = parse_integer(text.substr(0, slash), text);
        BigInt den = parse_integer(text.substr(slash + 1), text);
        if (den == 0)
            throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        return BigRational(num, den);
    }

    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view ip = text.substr(0, dot);
        std::string_view fp = text.substr(dot + 1);
        bool neg = false;
        if (!ip.empty() && (ip[0] == '+' || ip[0] == '-')) {
            neg = ip[0] == '-';
            ip.remove_prefix(1);
        }
        if (fp.find('.') != std::string_view::npos || (ip.empty() && fp.empty()) ||
            (!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)))
            throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
        BigInt scaled = digits_to_bigint(std::string(ip) + std::string(fp));
        BigInt den = 1;
        for (std::size_t i = 0; i < fp.size(); ++i) den *= 10;
        BigRational q(scaled, den);
        return neg ? -q : q;
    }

    return BigRational(parse_integer(text, text));
}

std::string to_fraction_string(const BigRational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

std::string to_decimal_string(const BigRational& q, int digits) {
    BigInt num = numerator(q);
    BigInt den = denominator(q);
    bool neg = num < 0;
    if (neg) num = -num;
    BigInt whole = num / den;
    BigInt rem = num % den;
    std::string out = (neg && (whole != 0 || rem != 0) ? "-" : "") + whole.str();
    if (digits > 0) {
        std::string frac;
        frac.reserve(static_cast<std::size_t>(digits));
        for (int i = 0; i < digits; ++i) {
            rem *= 10;
            frac.push_back(static_cast<char>('0' + static_cast<int>(rem / den)));
            rem %= den;
        }
        out += "." + frac;
    }
    return out;
}

double to_double(const BigRational& q) { return q.convert_to<double>(); }

BigInt isqrt_ceil(const BigInt& v) {
    if (v < 0) throw std::domain_error("isqrt_ceil of negative value");
    BigInt s = boost::multiprecision::sqrt(v);  // floor sqrt
    return s * s == v ? s : s + 1;
}

BigRational centi_ceil(const BigRational& v) {
    BigInt num = numerator(v) * 100;
    const BigInt& den = denominator(v);
    BigInt p = num / den;  // truncation toward zero: already the ceiling when num < 0
    if (p * den < num) ++p;
    return BigRational(p, 100);
}

BigRational centi_ceil(double v) {
    if (!std::isfinite(v) || std::fabs(v) >= 4.5e15)
        throw std::domain_error("centi_ceil: value out of range");
    return BigRational(static_cast<long long>(std::ceil(v * 100.0)), 100);
}

}  // namespace chromabounds

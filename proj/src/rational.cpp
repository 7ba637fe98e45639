#include "hurwitz/rational.hpp"

#include <boost/multiprecision/integer.hpp>

namespace hurwitz {

void Rational::reduce() {
    if (den_ == 0) throw std::domain_error("Rational: zero denominator");
    if (den_ < 0) { num_ = -num_; den_ = -den_; }
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) { num_ /= g; den_ /= g; }
    if (num_ == 0) den_ = 1;
}

Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    reduce();
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    reduce();
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    reduce();
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    reduce();
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    reduce();
    return *this;
}

Rational Rational::reciprocal() const {
    if (num_ == 0) throw std::domain_error("Rational: reciprocal of zero");
    return Rational(den_, num_);
}

double Rational::to_double() const {
    return static_cast<double>(to_long_double());
}

long double Rational::to_long_double() const {
    // Exact when num_ and den_ fit the 64-bit significand; otherwise the
    // boost conversion rounds each part, which is plenty for display use.
    return num_.convert_to<long double>() / den_.convert_to<long double>();
}

std::string Rational::str() const {
    std::string s = num_.str();
    if (den_ != 1) {
        s += '/';
        s += den_.str();
    }
    return s;
}

Rational Rational::parse(std::string_view s) {
    auto fail = [&]() -> Rational {
        throw std::invalid_argument("Rational::parse: bad input '" + std::string(s) + "'");
    };
    if (s.empty()) return fail();

    std::size_t i = 0;
    bool neg = false;
    if (s[i] == '+' || s[i] == '-') {
        neg = (s[i] == '-');
        ++i;
    }
    if (i == s.size()) return fail();

    auto is_digit = [](char c) { return c >= '0' && c <= '9'; };
    std::string digits;
    while (i < s.size() && is_digit(s[i])) digits += s[i++];

    BigInt num, den = 1;
    if (i < s.size() && s[i] == '/') {
        ++i;
        if (digits.empty()) return fail();
        std::string ddigits;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            if (s[i] == '-') neg = !neg;
            ++i;
        }
        while (i < s.size() && is_digit(s[i])) ddigits += s[i++];
        if (ddigits.empty() || i != s.size()) return fail();
        num = BigInt(digits);
        den = BigInt(ddigits);
        if (den == 0) throw std::domain_error("Rational::parse: zero denominator");
    } else if (i < s.size() && s[i] == '.') {
        ++i;
        std::string frac;
        while (i < s.size() && is_digit(s[i])) frac += s[i++];
        if (i != s.size() || (digits.empty() && frac.empty())) return fail();
        num = BigInt(digits.empty() ? "0" : digits);
        for (char c : frac) {
            num = num * 10 + (c - '0');
            den *= 10;
        }
    } else {
        if (digits.empty() || i != s.size()) return fail();
        num = BigInt(digits);
    }
    if (neg) num = -num;
    return Rational(num, den);
}

}  // namespace hurwitz

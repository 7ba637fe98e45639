#pragma once

/**
 * @file rational.hpp
 * @brief Arbitrary-precision rational numbers on top of boost cpp_int.
 *
 * Values are always stored reduced with a positive denominator, so
 * operator== is structural equality and hashing is well defined.
 */

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/functional/hash.hpp>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hurwitz {

using BigInt = boost::multiprecision::cpp_int;

/// Floor division for big integers (rounds toward minus infinity).
inline BigInt floor_div(const BigInt& n, const BigInt& d) {
    if (d == 0) throw std::domain_error("floor_div: division by zero");
    BigInt q = n / d;
    if ((n % d) != 0 && ((n < 0) != (d < 0))) --q;
    return q;
}

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt n, BigInt d);

    /// Accepts "p", "p/q" and decimal strings like "-0.45".
    static Rational parse(std::string_view s);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        BigInt lhs = a.num_ * b.den_, rhs = b.num_ * a.den_;
        return lhs < rhs ? std::strong_ordering::less
             : lhs > rhs ? std::strong_ordering::greater
                         : std::strong_ordering::equal;
    }

    Rational abs() const { return num_ < 0 ? -*this : *this; }
    Rational reciprocal() const;
    BigInt floor() const { return floor_div(num_, den_); }
    BigInt ceil() const { return -floor_div(-num_, den_); }

    double to_double() const;
    long double to_long_double() const;

    /// "p/q", or just "p" when the denominator is 1. Round-trips through parse().
    std::string str() const;

private:
    BigInt num_, den_;
    void reduce();
};

inline std::size_t hash_value(const Rational& r) {
    std::size_t seed = 0;
    boost::hash_combine(seed, r.num());
    boost::hash_combine(seed, r.den());
    return seed;
}

}  // namespace hurwitz

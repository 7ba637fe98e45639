#pragma once

/**
 * @file gaussian.hpp
 * @brief Gaussian integers and Gaussian rationals (complex numbers with
 *        exact integer / rational parts).
 */

#include "hurwitz/rational.hpp"

#include <complex>

namespace hurwitz {

struct GaussianInt {
    BigInt re{0}, im{0};

    GaussianInt() = default;
    GaussianInt(BigInt r, BigInt i = 0) : re(std::move(r)), im(std::move(i)) {}
    GaussianInt(long long r, long long i = 0) : re(r), im(i) {}

    GaussianInt conj() const { return {re, -im}; }
    /// re^2 + im^2, the Euclidean norm of the lattice point.
    BigInt norm() const { return re * re + im * im; }
    bool is_zero() const { return re == 0 && im == 0; }

    GaussianInt operator-() const { return {-re, -im}; }
    friend GaussianInt operator+(const GaussianInt& a, const GaussianInt& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianInt operator-(const GaussianInt& a, const GaussianInt& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianInt operator*(const GaussianInt& a, const GaussianInt& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const GaussianInt& a, const GaussianInt& b) {
        return a.re == b.re && a.im == b.im;
    }

    /// Human-readable form like "3", "-2i", "1-2i".
    std::string str() const;
};

inline std::size_t hash_value(const GaussianInt& g) {
    std::size_t seed = 0;
    boost::hash_combine(seed, g.re);
    boost::hash_combine(seed, g.im);
    return seed;
}

struct GaussianRational {
    Rational re, im;

    GaussianRational() = default;
    GaussianRational(Rational r, Rational i = Rational()) : re(std::move(r)), im(std::move(i)) {}
    GaussianRational(const GaussianInt& g) : re(g.re), im(g.im) {}

    GaussianRational conj() const { return {re, -im}; }
    Rational norm_sq() const { return re * re + im * im; }
    bool is_zero() const { return re.is_zero() && im.is_zero(); }

    GaussianRational operator-() const { return {-re, -im}; }
    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        return a * b.reciprocal();
    }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }

    /// 1/z = conj(z) / |z|^2, exact. Throws on zero.
    GaussianRational reciprocal() const {
        if (is_zero()) throw std::domain_error("GaussianRational: reciprocal of zero");
        Rational n = norm_sq();
        return {re / n, -im / n};
    }

    std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }
    std::string str() const;
};

inline std::size_t hash_value(const GaussianRational& g) {
    std::size_t seed = 0;
    boost::hash_combine(seed, hash_value(g.re));
    boost::hash_combine(seed, hash_value(g.im));
    return seed;
}

/// Parse "re", "re,im", or a complex literal like "1/2-3/4i", "2i", "-i".
/// Components accept anything Rational::parse does. Throws invalid_argument.
GaussianRational parse_gaussian_rational(const std::string& text);

}  // namespace hurwitz

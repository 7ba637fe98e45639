#pragma once

/**
 * @file gencircle.hpp
 * @brief Generalized circles (circles and lines in the plane) with exact
 *        rational coefficients.
 *
 * A generalized circle is the zero set of
 *
 *     F(z) = a z conj(z) - conj(b) z - b conj(z) + c
 *          = a (x^2 + y^2) - 2 (b_re x + b_im y) + c
 *
 * with a, c rational and b a Gaussian rational, subject to |b|^2 > a c.
 * a == 0 gives the line Re(conj(b) z) = c/2; otherwise a circle with
 * center b/a and squared radius (|b|^2 - a c) / a^2.
 *
 * The defining data is projective: scaling (a, b, c) by a nonzero rational
 * leaves the zero set unchanged. canonical() picks the primitive integer
 * representative whose first nonzero coefficient in (a, b_re, b_im, c) is
 * positive, which makes point sets comparable and hashable.
 */

#include "hurwitz/gaussian.hpp"

#include <array>
#include <optional>
#include <string>

namespace hurwitz {

/// Closed axis-aligned box with rational corners.
struct RationalBox {
    Rational x_min, x_max, y_min, y_max;

    bool contains(const GaussianRational& z) const {
        return x_min <= z.re && z.re <= x_max && y_min <= z.im && z.im <= y_max;
    }
    std::array<GaussianRational, 4> corners() const {
        return {GaussianRational{x_min, y_min}, {x_max, y_min},
                {x_max, y_max}, {x_min, y_max}};
    }
};

struct LineGeometry {
    GaussianRational normal;  ///< b; the line is Re(conj(b) z) = offset
    Rational offset;          ///< c/2
};

struct CircleGeometry {
    GaussianRational center;  ///< b/a
    Rational radius_sq;       ///< (|b|^2 - a c) / a^2
};

class GenCircle {
public:
    /// Throws std::domain_error unless |b|^2 > a c (empty or degenerate set).
    GenCircle(Rational a, GaussianRational b, Rational c);

    const Rational& a() const { return a_; }
    const GaussianRational& b() const { return b_; }
    const Rational& c() const { return c_; }

    bool is_line() const { return a_.is_zero(); }
    LineGeometry line() const;      ///< throws std::logic_error when a != 0
    CircleGeometry circle() const;  ///< throws std::logic_error when a == 0

    /// |b|^2 - a c. Positive by construction; invariant under reciprocal()
    /// and translate(), scales by lambda^2 under coefficient scaling.
    Rational discriminant() const { return b_.norm_sq() - a_ * c_; }

    /// Exact value of the defining form at a rational point.
    Rational eval(const GaussianRational& z) const;
    bool contains_point(const GaussianRational& z) const { return eval(z).is_zero(); }

    /// Image of the point set under z -> 1/z.
    GenCircle reciprocal() const { return {c_, b_.conj(), a_}; }

    /// Image of the point set under z -> z - w.
    GenCircle translate(const GaussianRational& w) const;

    /// Primitive integer representative with positive leading coefficient.
    GenCircle canonical() const;

    /// Canonical integer coefficients (a, b_re, b_im, c); key for dedup,
    /// sorting and serialization.
    std::array<BigInt, 4> canonical_key() const;

    /// True when the point set meets the closed box. Exact.
    bool intersects_box(const RationalBox& box) const;

    friend bool operator==(const GenCircle& x, const GenCircle& y) {
        return x.canonical_key() == y.canonical_key();
    }

    std::string str() const;

private:
    Rational a_;
    GaussianRational b_;
    Rational c_;
};

}  // namespace hurwitz

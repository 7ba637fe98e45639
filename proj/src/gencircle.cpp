#include "hurwitz/gencircle.hpp"

#include <boost/multiprecision/integer.hpp>

namespace hurwitz {

GenCircle::GenCircle(Rational a, GaussianRational b, Rational c)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
    if (!(b_.norm_sq() > a_ * c_))
        throw std::domain_error("GenCircle: |b|^2 <= a*c defines no circle or line");
}

LineGeometry GenCircle::line() const {
    if (!is_line()) throw std::logic_error("GenCircle::line on a circle");
    return {b_, c_ / Rational(2)};
}

CircleGeometry GenCircle::circle() const {
    if (is_line()) throw std::logic_error("GenCircle::circle on a line");
    return {{b_.re / a_, b_.im / a_}, discriminant() / (a_ * a_)};
}

Rational GenCircle::eval(const GaussianRational& z) const {
    Rational lin = b_.re * z.re + b_.im * z.im;
    return a_ * z.norm_sq() - Rational(2) * lin + c_;
}

GenCircle GenCircle::translate(const GaussianRational& w) const {
    // Substituting z = z' + w into F and collecting terms gives new
    // coefficients (a, b - a w, F(w) + c-part), with c' = a|w|^2 - 2 Re(conj(b) w) + c.
    Rational lin = b_.re * w.re + b_.im * w.im;
    Rational c2 = a_ * w.norm_sq() - Rational(2) * lin + c_;
    GaussianRational b2{b_.re - a_ * w.re, b_.im - a_ * w.im};
    return {a_, b2, c2};
}

std::array<BigInt, 4> GenCircle::canonical_key() const {
    BigInt d = a_.den();
    d = d / boost::multiprecision::gcd(d, b_.re.den()) * b_.re.den();
    d = d / boost::multiprecision::gcd(d, b_.im.den()) * b_.im.den();
    d = d / boost::multiprecision::gcd(d, c_.den()) * c_.den();

    std::array<BigInt, 4> k = {
        a_.num() * (d / a_.den()),
        b_.re.num() * (d / b_.re.den()),
        b_.im.num() * (d / b_.im.den()),
        c_.num() * (d / c_.den()),
    };
    BigInt g = 0;
    for (const BigInt& v : k) g = boost::multiprecision::gcd(g, v);
    if (g > 1)
        for (BigInt& v : k) v /= g;
    for (const BigInt& v : k) {
        if (v == 0) continue;
        if (v < 0)
            for (BigInt& w : k) w = -w;
        break;
    }
    return k;
}

GenCircle GenCircle::canonical() const {
    auto k = canonical_key();
    return {Rational(k[0]), GaussianRational{Rational(k[1]), Rational(k[2])}, Rational(k[3])};
}

namespace {

// Squared distance from a point to the nearest point of a closed interval.
Rational axis_gap_sq(const Rational& v, const Rational& lo, const Rational& hi) {
    if (v < lo) { Rational d = lo - v; return d * d; }
    if (v > hi) { Rational d = v - hi; return d * d; }
    return Rational(0);
}

// Squared distance from a point to the farthest point of a closed interval.
Rational axis_far_sq(const Rational& v, const Rational& lo, const Rational& hi) {
    Rational dl = v - lo, dh = hi - v;
    Rational a = dl * dl, b = dh * dh;
    return a > b ? a : b;
}

}  // namespace

bool GenCircle::intersects_box(const RationalBox& box) const {
    if (is_line()) {
        // The line meets the closed box iff the defining form does not have
        // a single strict sign over all four corners.
        bool pos = false, neg = false;
        for (const auto& z : box.corners()) {
            int s = eval(z).sign();
            if (s > 0) pos = true;
            else if (s < 0) neg = true;
            else return true;
        }
        return pos && neg;
    }
    CircleGeometry g = circle();
    Rational near_sq = axis_gap_sq(g.center.re, box.x_min, box.x_max)
                     + axis_gap_sq(g.center.im, box.y_min, box.y_max);
    Rational far_sq = axis_far_sq(g.center.re, box.x_min, box.x_max)
                    + axis_far_sq(g.center.im, box.y_min, box.y_max);
    return near_sq <= g.radius_sq && g.radius_sq <= far_sq;
}

std::string GenCircle::str() const {
    if (is_line()) {
        LineGeometry l = line();
        return "line Re(conj(" + l.normal.str() + ")*z) = " + l.offset.str();
    }
    CircleGeometry g = circle();
    return "circle center " + g.center.str() + " radius^2 " + g.radius_sq.str();
}

}  // namespace hurwitz

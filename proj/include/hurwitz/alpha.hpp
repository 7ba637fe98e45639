#pragma once

/**
 * @file alpha.hpp
 * @brief The parameter pair alpha = (a1, a2) and its fundamental domain
 *        U_alpha = [a1-1, a1) x [a2-1, a2) in the complex plane.
 *
 * The parameter domain D is the set of alpha for which the expansion
 * algorithm converges to its argument: the intersection of the open unit
 * ball at (0,0) with the closed unit balls at (1,0), (0,1) and (1,1).
 */

#include "hurwitz/gencircle.hpp"

#include <complex>

namespace hurwitz {

/// Exact test for membership in the parameter domain D.
bool in_domain_D(const Rational& a1, const Rational& a2);

struct Alpha {
    Rational a1, a2;
    bool in_D = false;

    static Alpha make(Rational a1, Rational a2) {
        Alpha a{std::move(a1), std::move(a2), false};
        a.in_D = in_domain_D(a.a1, a.a2);
        return a;
    }
    static Alpha parse(std::string_view s1, std::string_view s2) {
        return make(Rational::parse(s1), Rational::parse(s2));
    }

    /// Closed square [a1-1, a1] x [a2-1, a2].
    RationalBox closed_box() const {
        return {a1 - Rational(1), a1, a2 - Rational(1), a2};
    }

    /// Half-open membership: a1-1 <= Re z < a1 and a2-1 <= Im z < a2.
    bool contains(const GaussianRational& z) const {
        return a1 - Rational(1) <= z.re && z.re < a1
            && a2 - Rational(1) <= z.im && z.im < a2;
    }
    bool contains(std::complex<double> z) const {
        double x1 = a1.to_double(), x2 = a2.to_double();
        return x1 - 1.0 <= z.real() && z.real() < x1
            && x2 - 1.0 <= z.imag() && z.imag() < x2;
    }

    /// Membership in the closure of U_alpha (both bounds inclusive).
    /// Digit-map inputs are validated against this: a seed on the upper
    /// edge has a well-defined first step, and the step itself lands the
    /// orbit back in the half-open square.
    bool contains_closed(const GaussianRational& z) const {
        return a1 - Rational(1) <= z.re && z.re <= a1
            && a2 - Rational(1) <= z.im && z.im <= a2;
    }
    bool contains_closed(std::complex<double> z) const {
        double x1 = a1.to_double(), x2 = a2.to_double();
        return x1 - 1.0 <= z.real() && z.real() <= x1
            && x2 - 1.0 <= z.imag() && z.imag() <= x2;
    }

    std::string str() const { return "(" + a1.str() + ", " + a2.str() + ")"; }
};

}  // namespace hurwitz

#pragma once

/**
 * @file rho_bound.hpp
 * @brief The a priori radius lower bound rho_min = (1 - sqrt(m)) / 2, where
 *        m is the largest squared corner norm of the closed domain square.
 *
 * rho_min is irrational in general, so it is kept symbolically as m and all
 * decisions are exact predicates: comparisons of a rational against
 * rho_min^2 = (1 - sqrt(m))^2 / 4 reduce to integer sign tests after one
 * squaring, and floor(k / (1 - sqrt(m))) is found from a float estimate
 * verified exactly on both sides.
 */

#include "hurwitz/alpha.hpp"

namespace hurwitz {

class RhoBound {
public:
    explicit RhoBound(const Alpha& alpha);

    /// m: the max of |corner|^2 over the four corners of the closed square.
    const Rational& corner_norm_sq_max() const { return m_; }

    /// rho_min > 0, i.e. every corner lies strictly inside the unit circle.
    bool positive() const { return m_ < Rational(1); }

    /// Sign of (r_sq - rho_min^2): +1, 0 or -1. Exact.
    int compare_radius_sq(const Rational& r_sq) const;

    /// floor(k / (1 - sqrt(m))) for integer k >= 1; this bounds the integer
    /// coefficients reachable from a seed with |B_0| = k. Requires positive().
    BigInt floor_ratio(const BigInt& k) const;

    /// Float value of rho_min for reports.
    double rho_min() const;

private:
    Rational m_;
};

}  // namespace hurwitz

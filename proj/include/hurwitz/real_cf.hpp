#pragma once

/**
 * @file real_cf.hpp
 * @brief Classical continued fractions on the real line: the Gauss map
 *        (Euclid's algorithm for rationals) and the nearest-integer
 *        algorithm, sharing the convergent recurrence with the complex case.
 *
 * Irrational seeds go through the long double overloads (80-bit extended
 * precision on x86-64), which is enough for a few dozen digits.
 */

#include "hurwitz/cf.hpp"

#include <cstddef>
#include <vector>

namespace hurwitz {

enum class RealCFFlavor { Classical, NearestInteger };

struct RealCFExpansion {
    std::vector<BigInt> digits;
    RealCFFlavor flavor = RealCFFlavor::Classical;
    bool terminated = false;
};

/// Gauss-map digits of x in (0,1): a_n = floor(1/x_n), x_{n+1} = frac(1/x_n).
/// Rational inputs terminate; throws std::domain_error outside (0,1).
RealCFExpansion gauss_expand(const Rational& x, std::size_t max_steps);
RealCFExpansion gauss_expand(long double x, std::size_t max_steps);

/// Nearest-integer digits of x in [-1/2, 1/2) \ {0}: each digit is the
/// integer returning the remainder to [-1/2, 1/2), so |digit| >= 2.
RealCFExpansion nearest_int_expand(const Rational& x, std::size_t max_steps);
RealCFExpansion nearest_int_expand(long double x, std::size_t max_steps);

struct RealConvergent {
    BigInt p, q;
};

/// Same recurrence as the complex convergents, specialized to real digits.
std::vector<RealConvergent> real_convergents(const std::vector<BigInt>& digits);

/// Brute-force optimality: |p/q - x| < |p'/q' - x| for every q' <= q_bound
/// and each of the two integers p' nearest q' x, excluding (p, q) itself.
bool best_approx_check(long double x, long long p, long long q, long long q_bound);

}  // namespace hurwitz

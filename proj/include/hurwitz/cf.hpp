#pragma once

/**
 * @file cf.hpp
 * @brief The alpha-Hurwitz continued fraction dynamical system.
 *
 * One step of the system maps z to 1/z - floor_alpha(1/z), where
 * floor_alpha(u) is the unique Gaussian integer w with u - w in U_alpha.
 * Iterating from z in U_alpha emits the digit sequence of z; rational
 * points terminate (hit 0) and reconstruct exactly through evaluate_cf.
 *
 * Exact (GaussianRational) and floating-point (complex<double>) flavors
 * are provided; only the exact flavor can certify termination.
 */

#include "hurwitz/alpha.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace hurwitz {

/// The unique w in Z[i] with z - w in U_alpha; componentwise floor(x - a) + 1.
GaussianInt floor_alpha(const GaussianRational& z, const Alpha& alpha);
GaussianInt floor_alpha(std::complex<double> z, const Alpha& alpha);

/// One step: (digit, next) = (floor_alpha(1/z), 1/z - digit).
/// Accepts any nonzero z in the closure of U_alpha (a point on the upper
/// edge has a well-defined step); the returned next iterate always lies in
/// the half-open square. Throws std::domain_error otherwise.
std::pair<GaussianInt, GaussianRational> t_alpha_step_exact(const GaussianRational& z,
                                                            const Alpha& alpha);

struct CFExpansion {
    std::vector<GaussianInt> digits;
    bool terminated = false;        ///< some iterate hit 0 exactly (or below zero_epsilon)
    std::size_t truncated_at = 0;   ///< step count when the cap ended the orbit
};

struct ExpandOptions {
    std::size_t max_steps = 64;
    double zero_epsilon = 1e-12;    ///< float flavor: |iterate| below this terminates
    bool allow_outside_D = false;   ///< expansions for alpha outside D may not represent z
};

CFExpansion expand(const GaussianRational& z, const Alpha& alpha, const ExpandOptions& opt = {});
CFExpansion expand(std::complex<double> z, const Alpha& alpha, const ExpandOptions& opt = {});

/// Exact bottom-up value of 1/(a_1 + 1/(a_2 + ... + 1/a_n)).
/// Throws std::domain_error on empty input or an interior division by zero.
GaussianRational evaluate_cf(const std::vector<GaussianInt>& digits);

struct ConvergentPair {
    GaussianInt p, q;
};

/// p_n = a_n p_{n-1} + p_{n-2}, q_n likewise, seeded p_0 = 0, p_{-1} = 1,
/// q_0 = 1, q_{-1} = 0; entry n-1 of the result is (p_n, q_n).
std::vector<ConvergentPair> convergents(const std::vector<GaussianInt>& digits);

/// First digit of z, i.e. the index b of the cylinder set containing z.
GaussianInt cylinder_digit(const GaussianRational& z, const Alpha& alpha);
GaussianInt cylinder_digit(std::complex<double> z, const Alpha& alpha);

}  // namespace hurwitz

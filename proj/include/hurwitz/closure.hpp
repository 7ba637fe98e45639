#pragma once

/**
 * @file closure.hpp
 * @brief Breadth-first closure of the domain boundary under the expansion
 *        dynamics, over exact integer circle data.
 *
 * Every circle reachable from the four boundary lines of U_alpha by
 * "reciprocate, then translate by a Gaussian integer" has the shape
 * M(2 A_prev, B, 2 A_cur) with integer A's and a Gaussian-integer B, so the
 * whole search runs on exact triples (A_prev, B, A_cur):
 *
 *     reciprocal:  M(2 A_cur, conj(B), 2 A_prev)
 *     child by w:  A' = A_cur |w|^2 - Re(B w) + A_prev,  B' = conj(B) - 2 A_cur w
 *
 * The quantity |B|^2 - 4 A_prev A_cur is invariant along every chain (it is
 * the discriminant of the circle form), which pins radii to |B_0| / (2|A|)
 * and, when the a priori bound applies, makes the reachable set provably
 * finite. The BFS explores every unseen triple whose circle meets the
 * closed square, so its output is independent of worker count.
 */

#include "hurwitz/cf.hpp"
#include "hurwitz/rho_bound.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hurwitz {

struct ClosureNode {
    BigInt a_prev;            ///< A_{n-1}
    GaussianInt b;            ///< B_n
    BigInt a_cur;             ///< A_n
    std::uint32_t depth = 0;
    std::int64_t parent = -1; ///< index into CircleSet::nodes, -1 for seeds
    std::optional<GaussianInt> digit_from_parent;
    std::uint8_t seed_index = 0;

    /// The represented generalized circle M(2 A_prev, B, 2 A_cur).
    GenCircle to_circle() const {
        return {Rational(a_prev * 2), GaussianRational(b), Rational(a_cur * 2)};
    }
};

struct CircleSet {
    Alpha alpha;
    std::vector<ClosureNode> nodes;           ///< BFS order, the 4 seeds first
    std::vector<GenCircle> circles;           ///< canonical forms, sorted by key
    std::vector<BigInt> seed_b0_norm_sq;      ///< |B_0|^2 per seed
    std::vector<std::vector<std::size_t>> by_seed;  ///< node indices per seed
};

struct ClosureOptions {
    std::size_t max_nodes = 1'000'000;
    std::size_t max_depth = 64;
    unsigned workers = 1;
    /// Restrict digits to those observed on the parent arc by dense float
    /// sampling (smaller output; the default explores the full superset).
    bool tight = false;
};

struct PartitionReport {
    Alpha alpha;
    std::size_t circle_count = 0;
    std::size_t node_count = 0;
    bool stabilized = false;
    std::size_t depth_reached = 0;
    Rational rho_min_m;                 ///< m with rho_min = (1 - sqrt(m))/2
    double rho_min_approx = 0.0;
    bool bound_applicable = false;
    std::optional<BigInt> n_alpha;      ///< max over seeds of floor(|B_0| / (1 - sqrt(m)))
    std::optional<BigInt> b_norm_sq_max;
    std::optional<std::size_t> cell_count;
    double elapsed_seconds = 0.0;
    ClosureOptions options;
};

/// Four depth-0 line nodes carrying the edges Re z = a1, Re z = a1 - 1,
/// Im z = a2, Im z = a2 - 1. Throws std::domain_error when alpha is not in D.
std::vector<ClosureNode> seed_circles(const Alpha& alpha);

/// All Gaussian-integer translates w for which translate(h, w) meets the
/// closed square. h is the reciprocal of a closure circle.
std::vector<GaussianInt> digit_candidates(const GenCircle& h, const Alpha& alpha);

std::pair<CircleSet, PartitionReport> closure(const Alpha& alpha, const ClosureOptions& opt = {});

struct InvariantViolation {
    std::size_t node_index;
    std::string what;
    std::string chain;  ///< digit path from the seed, for diagnosis
};

struct VerificationSummary {
    bool passed = true;
    std::size_t nodes_checked = 0;
    std::vector<InvariantViolation> violations;
};

/// Per-node checks: the discriminant conservation law, the exact radius law
/// radius_sq = |B_0|^2 / (4 A_prev^2), and, when rho_min > 0, the radius
/// window rho_min < radius <= |B_0| / 2 plus the coefficient bound |A| <= N.
VerificationSummary verify_closure_invariants(const CircleSet& set);

}  // namespace hurwitz

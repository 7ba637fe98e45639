#pragma once

/**
 * @file cells.hpp
 * @brief Partition cells of U_alpha cut out by a circle set, plus the two
 *        dynamical verifiers: the sampled Markov-property falsifier and the
 *        boundary-orbit coverage oracle.
 *
 * The decomposition samples a grid of rational points at cell midpoints,
 * assigns each the exact sign vector of the circle forms (points landing
 * exactly on a circle are nudged by multiples of 1/(10^7 grid) until off
 * every circle), and takes 4-connected components of equal sign vectors.
 *
 * verify_markov tests, for each cell P and first digit b seen in it, that
 * the image of [b] meet P covers every cell it touches: a point x of a
 * touched cell C is in that image iff 1/(x+b) lands back in U_alpha and in
 * P. Membership in P is judged by the exact sign vector rather than the
 * component id, because a finite grid can split a thin region into
 * same-signature fragments while the signs stay exact. Each sample is
 * checked in floating point with a tolerance guard: samples too close to a
 * circle, to the domain boundary, or with ambiguous cell classification are
 * counted inconclusive rather than pass or fail, so the check is a
 * falsifier, not a proof.
 */

#include "hurwitz/closure.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace hurwitz {

struct CellDecomposition {
    Alpha alpha;
    int grid = 0;
    int circle_count = 0;
    std::vector<std::int32_t> cell_id;    ///< row-major j * grid + i
    std::int32_t cell_count = 0;
    std::vector<std::size_t> representative;              ///< one point per cell
    std::vector<std::vector<std::int8_t>> cell_signature;  ///< representative's signs
    std::vector<std::size_t> cell_size;
    /// Classification index: every (sign vector, cell id) pair present in the
    /// decomposition. One entry per cell normally; merge_cells leaves both
    /// signatures pointing at the surviving id.
    std::vector<std::pair<std::vector<std::int8_t>, std::int32_t>> signature_groups;
    int jittered_points = 0;
    std::vector<double> col_x, row_y;     ///< float coordinates of the lattice
};

/// Decompose the domain square into connected equal-signature regions.
CellDecomposition cell_decomposition(const CircleSet& set, const Alpha& alpha, int grid);

/// Relabel cell `absorb` as cell `keep` (negative-control helper: a genuine
/// Markov partition stops being one when two dynamically distinct cells are
/// fused, and verify_markov must notice).
CellDecomposition merge_cells(const CellDecomposition& cells, std::int32_t keep,
                              std::int32_t absorb);

enum class MarkovVerdict { Pass, Fail, Inconclusive };

struct MarkovPairResult {
    std::int32_t cell = 0;
    long long digit_re = 0, digit_im = 0;
    MarkovVerdict verdict = MarkovVerdict::Inconclusive;
    std::size_t image_cells = 0;
    std::size_t tested = 0, violations = 0, inconclusive = 0;
    std::string first_violation;
};

struct MarkovReport {
    bool passed = false;          ///< no FAIL verdict among the pairs
    std::size_t pair_count = 0, pass_count = 0, fail_count = 0, inconclusive_count = 0;
    std::size_t forward_samples = 0, forward_skipped = 0, forward_unclassified = 0;
    std::vector<MarkovPairResult> pairs;
};

MarkovReport verify_markov(const CellDecomposition& cells, const CircleSet& set,
                           const Alpha& alpha, std::size_t samples_per_cell,
                           double tolerance);

struct OrbitViolation {
    std::size_t sample_index = 0;
    int step = 0;
    double x = 0, y = 0, distance = 0;
    std::string digit_history;
};

struct OrbitReport {
    bool passed = false;
    std::size_t samples = 0, orbit_points_checked = 0, terminated_orbits = 0;
    double max_distance_seen = 0;
    std::vector<OrbitViolation> violations;      ///< capped at 32 entries
    std::vector<std::size_t> circle_hits;        ///< nearest-circle tallies
};

/// Iterate boundary samples of U_alpha `depth` steps (long double) and check
/// every orbit point stays within `tolerance` of some circle in the list.
OrbitReport boundary_orbit_oracle(const Alpha& alpha, const std::vector<GenCircle>& circles,
                                  std::size_t boundary_samples, int depth,
                                  double tolerance);

}  // namespace hurwitz

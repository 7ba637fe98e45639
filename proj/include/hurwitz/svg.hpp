#pragma once

/**
 * @file svg.hpp
 * @brief SVG rendering of a circle set clipped to the domain square.
 *
 * Output is deterministic: the same CircleSet and RenderSpec always produce
 * byte-identical SVG text.
 */

#include "hurwitz/closure.hpp"

#include <string>

namespace hurwitz {

enum class RenderMode {
    Superset,   ///< every in-square arc of every circle
    Realized,   ///< only arc segments actually hit by boundary orbits
};

struct RenderSpec {
    int width_px = 900;
    int height_px = 900;
    double stroke_width = 1.25;
    bool show_grid = false;            ///< faint decile grid inside the square
    RenderMode mode = RenderMode::Superset;

    // Realized-mode orbit sampling.
    std::size_t realized_samples = 2048;
    int realized_depth = 12;
    double realized_attach = 1e-7;     ///< max distance when attaching a hit to a circle
    double realized_gap = 0.05;        ///< parameter gap splitting hit runs
};

/// Render the circles of `set` clipped to the closed unit square of its alpha.
std::string render_svg(const CircleSet& set, const RenderSpec& spec = {});

}  // namespace hurwitz

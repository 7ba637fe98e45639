#include "hurwitz/svg.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstring>
#include <numbers>
#include <vector>

namespace hurwitz {

namespace {

constexpr double kTau = 2.0 * std::numbers::pi;
constexpr double kEps = 1e-9;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    // Avoid the two spellings of zero.
    if (std::strcmp(buf, "-0.0000") == 0) return "0.0000";
    return buf;
}

struct World {
    double x0, x1, y0, y1;         // the closed square
    double wx0, wx1, wy0, wy1;     // square plus margin
    double width, height;

    double px(double x) const { return (x - wx0) / (wx1 - wx0) * width; }
    double py(double y) const { return (wy1 - y) / (wy1 - wy0) * height; }
    bool in_square(double x, double y) const {
        return x >= x0 - kEps && x <= x1 + kEps && y >= y0 - kEps && y <= y1 + kEps;
    }
};

struct Seg { double ax, ay, bx, by; };
struct Arc { double start, end; };      // world angles, start < end <= start + tau

// Clip segment p + t d, t in [0,1], to the square (Liang-Barsky).
bool clip_segment(const World& w, double px0, double py0, double dx, double dy,
                  double& t0, double& t1) {
    t0 = 0.0;
    t1 = 1.0;
    const double p[4] = {-dx, dx, -dy, dy};
    const double q[4] = {px0 - w.x0, w.x1 - px0, py0 - w.y0, w.y1 - py0};
    for (int k = 0; k < 4; ++k) {
        if (std::fabs(p[k]) < 1e-300) {
            if (q[k] < 0) return false;
            continue;
        }
        double r = q[k] / p[k];
        if (p[k] < 0) {
            if (r > t1) return false;
            if (r > t0) t0 = r;
        } else {
            if (r < t0) return false;
            if (r < t1) t1 = r;
        }
    }
    return t0 <= t1;
}

// In-square angular arcs of the circle (center cx,cy radius r).
// Returns {full_circle, arcs}; full_circle means no boundary crossing and
// the whole circle lies inside the square.
std::pair<bool, std::vector<Arc>> circle_arcs(const World& w, double cx, double cy, double r) {
    std::vector<double> cuts;
    auto push_angle = [&](double th) {
        th = std::fmod(th, kTau);
        if (th < 0) th += kTau;
        cuts.push_back(th);
    };
    auto vertical = [&](double xe) {
        double c = (xe - cx) / r;
        if (c < -1.0 || c > 1.0) return;
        double th = std::acos(std::clamp(c, -1.0, 1.0));
        for (double cand : {th, -th}) {
            double y = cy + r * std::sin(cand);
            if (y >= w.y0 - kEps && y <= w.y1 + kEps) push_angle(cand);
        }
    };
    auto horizontal = [&](double ye) {
        double s = (ye - cy) / r;
        if (s < -1.0 || s > 1.0) return;
        double th = std::asin(std::clamp(s, -1.0, 1.0));
        for (double cand : {th, std::numbers::pi - th}) {
            double x = cx + r * std::cos(cand);
            if (x >= w.x0 - kEps && x <= w.x1 + kEps) push_angle(cand);
        }
    };
    vertical(w.x0);
    vertical(w.x1);
    horizontal(w.y0);
    horizontal(w.y1);

    std::sort(cuts.begin(), cuts.end());
    std::vector<double> uniq;
    for (double th : cuts)
        if (uniq.empty() || th - uniq.back() > 1e-7) uniq.push_back(th);
    if (uniq.size() >= 2 && uniq.back() - uniq.front() > kTau - 1e-7) uniq.pop_back();

    auto mid_inside = [&](double th) {
        return w.in_square(cx + r * std::cos(th), cy + r * std::sin(th));
    };

    if (uniq.size() < 2)
        return {mid_inside(uniq.empty() ? 0.0 : uniq[0] + std::numbers::pi), {}};

    std::vector<Arc> arcs;
    for (std::size_t k = 0; k < uniq.size(); ++k) {
        double s = uniq[k];
        double e = k + 1 < uniq.size() ? uniq[k + 1] : uniq[0] + kTau;
        if (e - s < 1e-7) continue;
        if (mid_inside((s + e) / 2)) arcs.push_back({s, e});
    }
    return {false, arcs};
}

std::string arc_path(const World& w, double cx, double cy, double r, const Arc& a) {
    double x1 = cx + r * std::cos(a.start), y1 = cy + r * std::sin(a.start);
    double x2 = cx + r * std::cos(a.end), y2 = cy + r * std::sin(a.end);
    double rp = r / (w.wx1 - w.wx0) * w.width;
    int large = (a.end - a.start) > std::numbers::pi ? 1 : 0;
    // World angles increase counterclockwise; the y flip makes that the
    // negative sweep direction on screen.
    std::string d = "M " + fmt(w.px(x1)) + " " + fmt(w.py(y1)) + " A " + fmt(rp) + " " +
                    fmt(rp) + " 0 " + std::to_string(large) + " 0 " + fmt(w.px(x2)) + " " +
                    fmt(w.py(y2));
    return d;
}

// Trim [lo,hi] runs out of a sorted list of parameters, splitting at gaps.
std::vector<std::pair<double, double>> merge_runs(std::vector<double>& ts, double gap) {
    std::vector<std::pair<double, double>> runs;
    std::sort(ts.begin(), ts.end());
    for (double t : ts) {
        if (!runs.empty() && t - runs.back().second <= gap) runs.back().second = t;
        else runs.emplace_back(t, t);
    }
    // A lone hit still deserves a visible dash.
    for (auto& [lo, hi] : runs) {
        lo -= gap / 8;
        hi += gap / 8;
    }
    return runs;
}

struct Geom {
    bool is_line = false;
    double cx = 0, cy = 0, r = 0;
    double px0 = 0, py0 = 0, dx = 0, dy = 0;   // line point + direction
};

Geom geom_of(const GenCircle& g) {
    Geom f;
    if (g.is_line()) {
        f.is_line = true;
        LineGeometry l = g.line();
        double nx = l.normal.re.to_double(), ny = l.normal.im.to_double();
        double off = l.offset.to_double();
        double n2 = nx * nx + ny * ny;
        f.px0 = nx * off / n2;
        f.py0 = ny * off / n2;
        f.dx = -ny;
        f.dy = nx;
    } else {
        CircleGeometry c = g.circle();
        f.cx = c.center.re.to_double();
        f.cy = c.center.im.to_double();
        f.r = std::sqrt(c.radius_sq.to_double());
    }
    return f;
}

std::vector<std::vector<std::complex<double>>> realized_hits(const CircleSet& set,
                                                             const std::vector<Geom>& geoms,
                                                             const RenderSpec& spec) {
    std::vector<std::vector<std::complex<double>>> hits(geoms.size());
    const long double a1 = set.alpha.a1.to_long_double();
    const long double a2 = set.alpha.a2.to_long_double();
    auto record = [&](long double x, long double y) {
        double best = -1.0;
        std::size_t bi = 0;
        for (std::size_t i = 0; i < geoms.size(); ++i) {
            const Geom& g = geoms[i];
            double d;
            if (g.is_line) {
                double nx = g.dy, ny = -g.dx;   // unit normal
                d = std::fabs(nx * (static_cast<double>(x) - g.px0) +
                              ny * (static_cast<double>(y) - g.py0));
            } else {
                d = std::fabs(std::hypot(static_cast<double>(x) - g.cx,
                                         static_cast<double>(y) - g.cy) - g.r);
            }
            if (best < 0 || d < best) { best = d; bi = i; }
        }
        if (best >= 0 && best <= spec.realized_attach)
            hits[bi].emplace_back(static_cast<double>(x), static_cast<double>(y));
    };
    std::size_t per_edge = std::max<std::size_t>(1, spec.realized_samples / 4);
    for (int edge = 0; edge < 4; ++edge) {
        long double phase = std::fmod(0.5L + 0.6180339887498948482L * (edge + 1), 1.0L);
        for (std::size_t k = 0; k < per_edge; ++k) {
            long double t = (static_cast<long double>(k) + phase) / per_edge;
            long double x, y;
            switch (edge) {
                case 0: x = a1 - 1.0L + t; y = a2 - 1.0L; break;
                case 1: x = a1 - 1.0L + t; y = a2; break;
                case 2: x = a1 - 1.0L; y = a2 - 1.0L + t; break;
                default: x = a1; y = a2 - 1.0L + t; break;
            }
            record(x, y);
            for (int step = 1; step <= spec.realized_depth; ++step) {
                long double norm = x * x + y * y;
                if (norm < 1e-24L) break;
                long double ux = x / norm, uy = -y / norm;
                x = ux - (std::floor(ux - a1) + 1.0L);
                y = uy - (std::floor(uy - a2) + 1.0L);
                record(x, y);
            }
        }
    }
    return hits;
}

}  // namespace

std::string render_svg(const CircleSet& set, const RenderSpec& spec) {
    const Alpha& alpha = set.alpha;
    World w;
    w.x0 = alpha.a1.to_double() - 1.0;
    w.x1 = alpha.a1.to_double();
    w.y0 = alpha.a2.to_double() - 1.0;
    w.y1 = alpha.a2.to_double();
    const double margin = 0.05;
    w.wx0 = w.x0 - margin;
    w.wx1 = w.x1 + margin;
    w.wy0 = w.y0 - margin;
    w.wy1 = w.y1 + margin;
    w.width = spec.width_px;
    w.height = spec.height_px;

    RationalBox box = alpha.closed_box();
    std::vector<const GenCircle*> visible;
    std::vector<Geom> geoms;
    for (const GenCircle& g : set.circles) {
        if (!g.intersects_box(box)) continue;
        visible.push_back(&g);
        geoms.push_back(geom_of(g));
    }

    std::vector<std::vector<std::complex<double>>> hits;
    if (spec.mode == RenderMode::Realized) hits = realized_hits(set, geoms, spec);

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
           std::to_string(spec.width_px) + "\" height=\"" + std::to_string(spec.height_px) +
           "\" viewBox=\"0 0 " + std::to_string(spec.width_px) + " " +
           std::to_string(spec.height_px) + "\">\n";
    out += "<rect width=\"" + std::to_string(spec.width_px) + "\" height=\"" +
           std::to_string(spec.height_px) + "\" fill=\"#ffffff\"/>\n";

    const std::string sw = fmt(spec.stroke_width);
    auto emit_path = [&](const std::string& d, const char* color) {
        out += "<path d=\"" + d + "\" fill=\"none\" stroke=\"" + color +
               "\" stroke-width=\"" + sw + "\"/>\n";
    };
    auto emit_segment = [&](double ax, double ay, double bx, double by, const char* color,
                            const std::string& width) {
        out += "<line x1=\"" + fmt(w.px(ax)) + "\" y1=\"" + fmt(w.py(ay)) + "\" x2=\"" +
               fmt(w.px(bx)) + "\" y2=\"" + fmt(w.py(by)) + "\" stroke=\"" + color +
               "\" stroke-width=\"" + width + "\"/>\n";
    };

    if (spec.show_grid) {
        for (int k = 1; k < 10; ++k) {
            double t = k / 10.0;
            emit_segment(w.x0 + t, w.y0, w.x0 + t, w.y1, "#e0e0e0", "0.7500");
            emit_segment(w.x0, w.y0 + t, w.x1, w.y0 + t, "#e0e0e0", "0.7500");
        }
    }

    for (std::size_t i = 0; i < visible.size(); ++i) {
        const Geom& g = geoms[i];
        const char* color = "#1f77b4";
        if (g.is_line) {
            // Direction is unit length, so a parameter reach of 4 covers any
            // chord of the unit square from the foot point.
            double reach = 4.0;
            double sx = g.px0 - reach * g.dx, sy = g.py0 - reach * g.dy;
            double ddx = 2 * reach * g.dx, ddy = 2 * reach * g.dy;
            double t0, t1;
            if (!clip_segment(w, sx, sy, ddx, ddy, t0, t1)) continue;
            if (spec.mode == RenderMode::Superset) {
                emit_segment(sx + t0 * ddx, sy + t0 * ddy, sx + t1 * ddx, sy + t1 * ddy,
                             color, sw);
            } else {
                std::vector<double> ts;
                for (const auto& z : hits[i])
                    ts.push_back(((z.real() - sx) * ddx + (z.imag() - sy) * ddy) /
                                 (ddx * ddx + ddy * ddy));
                double gap = spec.realized_gap / (2 * reach);
                for (auto [lo, hi] : merge_runs(ts, gap)) {
                    lo = std::max(lo, t0);
                    hi = std::min(hi, t1);
                    if (lo >= hi) continue;
                    emit_segment(sx + lo * ddx, sy + lo * ddy, sx + hi * ddx, sy + hi * ddy,
                                 color, sw);
                }
            }
            continue;
        }

        auto [full, arcs] = circle_arcs(w, g.cx, g.cy, g.r);
        std::vector<Arc> draw;
        if (full) draw.push_back({0.0, kTau});
        else draw = arcs;

        if (spec.mode == RenderMode::Realized) {
            std::vector<Arc> cut;
            for (const Arc& a : draw) {
                std::vector<double> ts;
                for (const auto& z : hits[i]) {
                    double th = std::atan2(z.imag() - g.cy, z.real() - g.cx);
                    th = std::fmod(th - a.start, kTau);
                    if (th < 0) th += kTau;
                    double abs_th = a.start + th;
                    if (abs_th <= a.end + 1e-9) ts.push_back(abs_th);
                }
                for (auto [lo, hi] : merge_runs(ts, spec.realized_gap / g.r)) {
                    lo = std::max(lo, a.start);
                    hi = std::min(hi, a.end);
                    if (lo < hi) cut.push_back({lo, hi});
                }
            }
            draw = std::move(cut);
        }

        for (const Arc& a : draw) {
            if (a.end - a.start >= kTau - 1e-9) {
                double rp = g.r / (w.wx1 - w.wx0) * w.width;
                out += "<circle cx=\"" + fmt(w.px(g.cx)) + "\" cy=\"" + fmt(w.py(g.cy)) +
                       "\" r=\"" + fmt(rp) + "\" fill=\"none\" stroke=\"" + color +
                       "\" stroke-width=\"" + sw + "\"/>\n";
            } else {
                emit_path(arc_path(w, g.cx, g.cy, g.r, a), color);
            }
        }
    }

    // The domain square on top.
    std::string sq = "M " + fmt(w.px(w.x0)) + " " + fmt(w.py(w.y0)) + " L " + fmt(w.px(w.x1)) +
                     " " + fmt(w.py(w.y0)) + " L " + fmt(w.px(w.x1)) + " " + fmt(w.py(w.y1)) +
                     " L " + fmt(w.px(w.x0)) + " " + fmt(w.py(w.y1)) + " Z";
    emit_path(sq, "#000000");

    out += "</svg>\n";
    return out;
}

}  // namespace hurwitz

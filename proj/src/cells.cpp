#include "hurwitz/cells.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstring>
#include <map>
#include <unordered_map>

#include <boost/functional/hash.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

namespace hurwitz {

namespace {

using Int128 = __int128;

Int128 to_i128(const BigInt& v) {
    bool neg = v < 0;
    BigInt a = neg ? BigInt(-v) : v;
    std::uint64_t lo = (a & BigInt(0xFFFFFFFFFFFFFFFFULL)).convert_to<std::uint64_t>();
    std::uint64_t hi = (a >> 64).convert_to<std::uint64_t>();
    Int128 r = (static_cast<Int128>(hi) << 64) | static_cast<Int128>(lo);
    return neg ? -r : r;
}

int sign_of(Int128 v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// Exact sign of the defining form at lattice point (nx/Dx, ny/Dy), with the
// form scaled by Dx^2 Dy^2:
//   S = A (nx^2 Dy^2 + ny^2 Dx^2) - 2 Br nx Dx Dy^2 - 2 Bi ny Dy Dx^2 + C Dx^2 Dy^2.
// The fast path needs every term to fit in a signed 128-bit word.
struct ExactGrid {
    std::vector<std::array<BigInt, 4>> coeffs;   // (A, Br, Bi, C) per circle
    BigInt Dx, Dy;
    bool fast = false;
    std::vector<Int128> fA, fBr2, fBi2, fCD;     // fast-path precomputations

    ExactGrid(const CircleSet& set, const BigInt& dx, const BigInt& dy) : Dx(dx), Dy(dy) {
        BigInt coeff_max = 0;
        for (const GenCircle& g : set.circles) {
            auto k = g.canonical_key();
            for (const BigInt& v : k) {
                BigInt a = boost::multiprecision::abs(v);
                if (a > coeff_max) coeff_max = a;
            }
            coeffs.push_back(k);
        }
        BigInt dmax = Dx > Dy ? Dx : Dy;
        fast = coeff_max <= (BigInt(1) << 42) && dmax <= (BigInt(1) << 20);
        if (fast) {
            BigInt dy2 = Dy * Dy, dx2 = Dx * Dx;
            for (const auto& k : coeffs) {
                fA.push_back(to_i128(k[0]));
                fBr2.push_back(to_i128(2 * k[1] * Dx * dy2));
                fBi2.push_back(to_i128(2 * k[2] * Dy * dx2));
                fCD.push_back(to_i128(k[3] * dx2 * dy2));
            }
        }
    }

    int sign_at(std::size_t c, const BigInt& nx, const BigInt& ny) const {
        BigInt t = nx * nx * Dy * Dy + ny * ny * Dx * Dx;
        BigInt s = coeffs[c][0] * t - 2 * coeffs[c][1] * nx * Dx * Dy * Dy
                 - 2 * coeffs[c][2] * ny * Dy * Dx * Dx + coeffs[c][3] * Dx * Dx * Dy * Dy;
        return s > 0 ? 1 : (s < 0 ? -1 : 0);
    }
};

double to_d(const BigInt& v) { return v.convert_to<double>(); }

// Floating view of a canonical circle: exact-form sign plus geometric distance.
struct FloatGeom {
    bool is_line = false;
    double A = 0, Br = 0, Bi = 0, C = 0;   // canonical integer coefficients
    double cx = 0, cy = 0, r = 0;          // circle data
    double nx = 0, ny = 0, off = 0;        // line data: unit normal, offset

    static FloatGeom make(const GenCircle& g) {
        FloatGeom f;
        auto k = g.canonical().canonical_key();
        f.A = to_d(k[0]);
        f.Br = to_d(k[1]);
        f.Bi = to_d(k[2]);
        f.C = to_d(k[3]);
        if (g.is_line()) {
            f.is_line = true;
            double n = std::hypot(f.Br, f.Bi);
            f.nx = f.Br / n;
            f.ny = f.Bi / n;
            f.off = f.C / (2.0 * n);
        } else {
            CircleGeometry c = g.circle();
            f.cx = c.center.re.to_double();
            f.cy = c.center.im.to_double();
            f.r = std::sqrt(c.radius_sq.to_double());
        }
        return f;
    }

    double distance(double x, double y) const {
        if (is_line) return std::fabs(nx * x + ny * y - off);
        return std::fabs(std::hypot(x - cx, y - cy) - r);
    }
    int form_sign(double x, double y) const {
        double v = A * (x * x + y * y) - 2.0 * (Br * x + Bi * y) + C;
        return v > 0 ? 1 : (v < 0 ? -1 : 0);
    }
};

}  // namespace

CellDecomposition cell_decomposition(const CircleSet& set, const Alpha& alpha, int grid) {
    if (grid < 1) throw std::invalid_argument("cell_decomposition: grid < 1");
    const int n_circ = static_cast<int>(set.circles.size());
    const std::size_t n_pts = static_cast<std::size_t>(grid) * grid;

    CellDecomposition out;
    out.alpha = alpha;
    out.grid = grid;
    out.circle_count = n_circ;

    // Lattice point (i, j) sits at the midpoint of grid cell (i, j):
    //   x_i = a1 - 1 + (2i+1)/(2 grid) = nx_i / Dx with Dx = 2 grid q.
    const BigInt q = alpha.a1.den(), p = alpha.a1.num();
    const BigInt s = alpha.a2.den(), r = alpha.a2.num();
    const BigInt g2(2 * grid);
    ExactGrid eg(set, g2 * q, g2 * s);

    std::vector<BigInt> nx(grid), ny(grid);
    for (int i = 0; i < grid; ++i) {
        nx[i] = g2 * (p - q) + q * (2 * i + 1);
        ny[i] = g2 * (r - s) + s * (2 * i + 1);
    }
    out.col_x.resize(grid);
    out.row_y.resize(grid);
    for (int i = 0; i < grid; ++i) {
        out.col_x[i] = to_d(nx[i]) / to_d(eg.Dx);
        out.row_y[i] = to_d(ny[i]) / to_d(eg.Dy);
    }

    std::vector<std::int8_t> sig(n_pts * std::max(n_circ, 1), 0);

    // Exact rational fallback for points that land exactly on some circle:
    // nudge by (t d, t^2 d), d = 1/(10^7 grid), until every sign is nonzero.
    auto jitter_signs = [&](int i, int j, std::int8_t* dst) {
        Rational d(BigInt(1), BigInt(10000000) * grid);
        Rational x0(nx[i], eg.Dx), y0(ny[j], eg.Dy);
        int cap = 4 * n_circ + 8;
        for (int t = 1; t <= cap; ++t) {
            Rational tt(t);
            GaussianRational z{x0 + tt * d, y0 + tt * tt * d};
            bool clean = true;
            for (int c = 0; c < n_circ && clean; ++c) {
                int sg = set.circles[static_cast<std::size_t>(c)].eval(z).sign();
                if (sg == 0) clean = false;
                else dst[c] = static_cast<std::int8_t>(sg);
            }
            if (clean) return;
        }
        throw std::logic_error("cell_decomposition: jitter failed to clear all circles");
    };

    if (n_circ > 0) {
        if (eg.fast) {
            const BigInt dy2b = eg.Dy * eg.Dy, dx2b = eg.Dx * eg.Dx;
            std::vector<Int128> colterm(grid), rowterm(grid), nxw(grid), nyw(grid);
            for (int i = 0; i < grid; ++i) {
                colterm[i] = to_i128(nx[i] * nx[i] * dy2b);
                rowterm[i] = to_i128(ny[i] * ny[i] * dx2b);
                nxw[i] = to_i128(nx[i]);
                nyw[i] = to_i128(ny[i]);
            }
            for (int j = 0; j < grid; ++j) {
                for (int c = 0; c < n_circ; ++c) {
                    const Int128 tail = eg.fCD[static_cast<std::size_t>(c)]
                                      - eg.fBi2[static_cast<std::size_t>(c)] * nyw[j];
                    const Int128 a = eg.fA[static_cast<std::size_t>(c)];
                    const Int128 br2 = eg.fBr2[static_cast<std::size_t>(c)];
                    std::int8_t* row = sig.data()
                        + (static_cast<std::size_t>(j) * grid) * n_circ + c;
                    for (int i = 0; i < grid; ++i, row += n_circ) {
                        Int128 v = a * (colterm[i] + rowterm[j]) - br2 * nxw[i] + tail;
                        *row = static_cast<std::int8_t>(sign_of(v));
                    }
                }
            }
        } else {
            for (int j = 0; j < grid; ++j)
                for (int i = 0; i < grid; ++i) {
                    std::int8_t* dst = sig.data()
                        + (static_cast<std::size_t>(j) * grid + i) * n_circ;
                    for (int c = 0; c < n_circ; ++c)
                        dst[c] = static_cast<std::int8_t>(
                            eg.sign_at(static_cast<std::size_t>(c), nx[i], ny[j]));
                }
        }
        for (int j = 0; j < grid; ++j)
            for (int i = 0; i < grid; ++i) {
                std::int8_t* dst = sig.data()
                    + (static_cast<std::size_t>(j) * grid + i) * n_circ;
                if (std::find(dst, dst + n_circ, 0) != dst + n_circ) {
                    ++out.jittered_points;
                    jitter_signs(i, j, dst);
                }
            }
    }

    // Connected components of equal sign vectors under 4-adjacency.
    out.cell_id.assign(n_pts, -1);
    std::vector<std::size_t> stack;
    auto same_sig = [&](std::size_t a, std::size_t b) {
        return n_circ == 0 ||
               std::memcmp(sig.data() + a * n_circ, sig.data() + b * n_circ,
                           static_cast<std::size_t>(n_circ)) == 0;
    };
    for (std::size_t start = 0; start < n_pts; ++start) {
        if (out.cell_id[start] != -1) continue;
        std::int32_t id = out.cell_count++;
        out.representative.push_back(start);
        out.cell_signature.emplace_back(sig.begin() + static_cast<std::ptrdiff_t>(start * n_circ),
                                        sig.begin() + static_cast<std::ptrdiff_t>((start + 1) * n_circ));
        out.cell_size.push_back(0);
        stack.assign(1, start);
        out.cell_id[start] = id;
        while (!stack.empty()) {
            std::size_t cur = stack.back();
            stack.pop_back();
            ++out.cell_size[static_cast<std::size_t>(id)];
            int i = static_cast<int>(cur % static_cast<std::size_t>(grid));
            int j = static_cast<int>(cur / static_cast<std::size_t>(grid));
            const int di[4] = {1, -1, 0, 0}, dj[4] = {0, 0, 1, -1};
            for (int k = 0; k < 4; ++k) {
                int i2 = i + di[k], j2 = j + dj[k];
                if (i2 < 0 || i2 >= grid || j2 < 0 || j2 >= grid) continue;
                std::size_t nb = static_cast<std::size_t>(j2) * grid + i2;
                if (out.cell_id[nb] != -1 || !same_sig(cur, nb)) continue;
                out.cell_id[nb] = id;
                stack.push_back(nb);
            }
        }
    }
    for (std::int32_t id = 0; id < out.cell_count; ++id)
        out.signature_groups.emplace_back(out.cell_signature[static_cast<std::size_t>(id)], id);
    return out;
}

CellDecomposition merge_cells(const CellDecomposition& cells, std::int32_t keep,
                              std::int32_t absorb) {
    if (keep == absorb || keep < 0 || absorb < 0 || keep >= cells.cell_count ||
        absorb >= cells.cell_count)
        throw std::invalid_argument("merge_cells: bad cell ids");
    CellDecomposition out = cells;
    auto remap = [&](std::int32_t id) {
        if (id == absorb) return keep > absorb ? keep - 1 : keep;
        return id > absorb ? id - 1 : id;
    };
    for (std::int32_t& id : out.cell_id) id = remap(id);
    for (auto& [signature, id] : out.signature_groups) id = remap(id);
    std::size_t ka = static_cast<std::size_t>(keep), aa = static_cast<std::size_t>(absorb);
    out.cell_size[ka] += out.cell_size[aa];
    out.cell_size.erase(out.cell_size.begin() + static_cast<std::ptrdiff_t>(aa));
    out.representative.erase(out.representative.begin() + static_cast<std::ptrdiff_t>(aa));
    out.cell_signature.erase(out.cell_signature.begin() + static_cast<std::ptrdiff_t>(aa));
    --out.cell_count;
    return out;
}

namespace {

struct Classifier {
    const CellDecomposition* cells;
    std::vector<FloatGeom> geoms;
    double tol;
    std::map<std::vector<std::int8_t>, std::vector<std::int32_t>> index;
    double x_first, y_first, step;

    static constexpr std::int32_t kAmbiguous = -1;
    static constexpr std::int32_t kUnknown = -2;

    Classifier(const CellDecomposition& c, const CircleSet& set, double tolerance)
        : cells(&c), tol(tolerance) {
        for (const GenCircle& g : set.circles) geoms.push_back(FloatGeom::make(g));
        for (const auto& [signature, id] : c.signature_groups) index[signature].push_back(id);
        step = 1.0 / c.grid;
        x_first = c.col_x.empty() ? 0 : c.col_x[0];
        y_first = c.row_y.empty() ? 0 : c.row_y[0];
    }

    std::int32_t classify(double x, double y) const {
        std::vector<std::int8_t> s(geoms.size());
        for (std::size_t k = 0; k < geoms.size(); ++k) {
            if (geoms[k].distance(x, y) < tol) return kAmbiguous;
            s[k] = static_cast<std::int8_t>(geoms[k].form_sign(x, y));
        }
        auto it = index.find(s);
        if (it == index.end()) return kUnknown;
        if (it->second.size() == 1) return it->second[0];
        // Same sign vector on several components: vote among nearby lattice
        // points whose cell carries this signature.
        const auto& candidates = it->second;
        int i0 = static_cast<int>(std::lround((x - x_first) / step));
        int j0 = static_cast<int>(std::lround((y - y_first) / step));
        std::int32_t found = kUnknown;
        for (int rad = 0; rad <= 3; ++rad) {
            for (int dj = -rad; dj <= rad; ++dj)
                for (int di = -rad; di <= rad; ++di) {
                    if (std::max(std::abs(di), std::abs(dj)) != rad) continue;
                    int i = i0 + di, j = j0 + dj;
                    if (i < 0 || i >= cells->grid || j < 0 || j >= cells->grid) continue;
                    std::int32_t c =
                        cells->cell_id[static_cast<std::size_t>(j) * cells->grid + i];
                    if (std::find(candidates.begin(), candidates.end(), c) == candidates.end())
                        continue;
                    if (found == kUnknown) found = c;
                    else if (found != c) return kAmbiguous;
                }
            if (found != kUnknown) return found;
        }
        return kUnknown;
    }
};

struct InvKey {
    std::size_t point;
    long long dre, dim;
    bool operator==(const InvKey&) const = default;
};
struct InvKeyHash {
    std::size_t operator()(const InvKey& k) const {
        std::size_t seed = std::hash<std::size_t>()(k.point);
        boost::hash_combine(seed, k.dre);
        boost::hash_combine(seed, k.dim);
        return seed;
    }
};

}  // namespace

MarkovReport verify_markov(const CellDecomposition& cells, const CircleSet& set,
                           const Alpha& alpha, std::size_t samples_per_cell,
                           double tolerance) {
    MarkovReport rep;
    const double a1 = alpha.a1.to_double(), a2 = alpha.a2.to_double();
    Classifier cls(cells, set, tolerance);

    // Strided per-cell sample lists.
    std::vector<std::vector<std::size_t>> members(static_cast<std::size_t>(cells.cell_count));
    for (std::size_t idx = 0; idx < cells.cell_id.size(); ++idx)
        members[static_cast<std::size_t>(cells.cell_id[idx])].push_back(idx);
    std::vector<std::vector<std::size_t>> samples(members.size());
    for (std::size_t c = 0; c < members.size(); ++c) {
        std::size_t stride = std::max<std::size_t>(1, members[c].size() / samples_per_cell);
        for (std::size_t k = 0; k < members[c].size(); k += stride)
            samples[c].push_back(members[c][k]);
    }
    auto point_of = [&](std::size_t idx) {
        return std::complex<double>(cells.col_x[idx % static_cast<std::size_t>(cells.grid)],
                                    cells.row_y[idx / static_cast<std::size_t>(cells.grid)]);
    };
    auto in_U_robust = [&](std::complex<double> z) {
        return z.real() >= a1 - 1.0 + tolerance && z.real() <= a1 - tolerance &&
               z.imag() >= a2 - 1.0 + tolerance && z.imag() <= a2 - tolerance;
    };
    auto near_boundary = [&](std::complex<double> z) {
        return std::fabs(z.real() - (a1 - 1.0)) < tolerance ||
               std::fabs(z.real() - a1) < tolerance ||
               std::fabs(z.imag() - (a2 - 1.0)) < tolerance ||
               std::fabs(z.imag() - a2) < tolerance;
    };

    // Forward pass: which cells does the image of each (cell, digit) touch?
    std::map<std::pair<std::int32_t, std::pair<long long, long long>>,
             std::map<std::int32_t, std::size_t>> hits;
    for (std::int32_t pc = 0; pc < cells.cell_count; ++pc) {
        for (std::size_t idx : samples[static_cast<std::size_t>(pc)]) {
            std::complex<double> z = point_of(idx);
            ++rep.forward_samples;
            if (std::abs(z) < tolerance) { ++rep.forward_skipped; continue; }
            std::complex<double> u = 1.0 / z;
            long long wr = static_cast<long long>(std::floor(u.real() - a1)) + 1;
            long long wi = static_cast<long long>(std::floor(u.imag() - a2)) + 1;
            std::complex<double> img = u - std::complex<double>(static_cast<double>(wr),
                                                                static_cast<double>(wi));
            if (!in_U_robust(img) || near_boundary(img)) { ++rep.forward_skipped; continue; }
            std::int32_t ic = cls.classify(img.real(), img.imag());
            if (ic < 0) { ++rep.forward_unclassified; continue; }
            ++hits[{pc, {wr, wi}}][ic];
        }
    }

    // Inversion outcomes are shared between pairs with the same digit, cache them.
    enum class Inv : std::int8_t { OutsideU, NearEdge, Ambiguous, Unknown, Cell };
    struct InvResult { Inv kind; std::int32_t cell; };
    std::unordered_map<InvKey, InvResult, InvKeyHash> inv_cache;
    auto invert = [&](std::size_t idx, long long bre, long long bim) {
        InvKey key{idx, bre, bim};
        auto it = inv_cache.find(key);
        if (it != inv_cache.end()) return it->second;
        std::complex<double> x = point_of(idx);
        std::complex<double> den = x + std::complex<double>(static_cast<double>(bre),
                                                            static_cast<double>(bim));
        InvResult res{Inv::OutsideU, -1};
        if (std::abs(den) < 1e-12) {
            // The exact pole has no preimage but is a single point; skip it.
            res.kind = Inv::Ambiguous;
        } else {
            std::complex<double> zp = 1.0 / den;
            if (near_boundary(zp)) res.kind = Inv::NearEdge;
            else if (!in_U_robust(zp)) res.kind = Inv::OutsideU;
            else {
                std::int32_t c = cls.classify(zp.real(), zp.imag());
                if (c == Classifier::kAmbiguous) res.kind = Inv::Ambiguous;
                else if (c == Classifier::kUnknown) res.kind = Inv::Unknown;
                else { res.kind = Inv::Cell; res.cell = c; }
            }
        }
        inv_cache.emplace(key, res);
        return res;
    };

    // Saturation pass: every touched image cell must map back into P entirely.
    for (const auto& [pair_key, cell_hits] : hits) {
        MarkovPairResult pr;
        pr.cell = pair_key.first;
        pr.digit_re = pair_key.second.first;
        pr.digit_im = pair_key.second.second;
        pr.image_cells = cell_hits.size();
        bool all_cells_corroborated = true;
        for (const auto& [img_cell, hit_count] : cell_hits) {
            (void)hit_count;
            std::size_t conclusive = 0;
            for (std::size_t idx : samples[static_cast<std::size_t>(img_cell)]) {
                InvResult r = invert(idx, pr.digit_re, pr.digit_im);
                if (r.kind == Inv::NearEdge || r.kind == Inv::Ambiguous ||
                    r.kind == Inv::Unknown) {
                    ++pr.inconclusive;
                    continue;
                }
                ++pr.tested;
                ++conclusive;
                // Compare sign vectors, not component ids: a finite grid can
                // split a thin region into same-signature fragments, while the
                // signs are computed exactly. The inverse branch of the digit
                // map is a homeomorphism, so a connected image cell pulls back
                // into a single source region and signature equality is the
                // invariant that survives fragmentation.
                bool ok = r.kind == Inv::Cell &&
                          (r.cell == pr.cell ||
                           cells.cell_signature[static_cast<std::size_t>(r.cell)] ==
                               cells.cell_signature[static_cast<std::size_t>(pr.cell)]);
                if (!ok) {
                    ++pr.violations;
                    if (pr.first_violation.empty()) {
                        std::complex<double> x = point_of(idx);
                        pr.first_violation =
                            "sample (" + std::to_string(x.real()) + ", " +
                            std::to_string(x.imag()) + ") of image cell " +
                            std::to_string(img_cell) + " is not reached from cell " +
                            std::to_string(pr.cell) + " with digit (" +
                            std::to_string(pr.digit_re) + "," + std::to_string(pr.digit_im) + ")";
                    }
                }
            }
            if (conclusive == 0) all_cells_corroborated = false;
        }
        if (pr.violations > 0) pr.verdict = MarkovVerdict::Fail;
        else if (all_cells_corroborated) pr.verdict = MarkovVerdict::Pass;
        else pr.verdict = MarkovVerdict::Inconclusive;
        switch (pr.verdict) {
            case MarkovVerdict::Pass: ++rep.pass_count; break;
            case MarkovVerdict::Fail: ++rep.fail_count; break;
            case MarkovVerdict::Inconclusive: ++rep.inconclusive_count; break;
        }
        rep.pairs.push_back(std::move(pr));
    }
    rep.pair_count = rep.pairs.size();
    rep.passed = rep.fail_count == 0;
    return rep;
}

OrbitReport boundary_orbit_oracle(const Alpha& alpha, const std::vector<GenCircle>& circles,
                                  std::size_t boundary_samples, int depth,
                                  double tolerance) {
    // The orbit runs in quad precision: the map's derivative 1/z^2 amplifies
    // per-step rounding by the Lyapunov factor, which already pushes a long
    // double orbit to ~1e-6 transverse drift at depth 8. With a 113-bit
    // mantissa the drift stays around 1e-21 there, far below any tolerance
    // that separates "on a circle" from "circle missing" (~1e-2).
    using Quad = boost::multiprecision::cpp_bin_float_quad;
    struct LGeom {
        bool is_line;
        long double cx, cy, r;    // circle
        long double nx, ny, off;  // line
    };
    std::vector<LGeom> geoms;
    for (const GenCircle& g : circles) {
        LGeom lg{};
        if (g.is_line()) {
            lg.is_line = true;
            LineGeometry l = g.line();
            long double bx = l.normal.re.to_long_double(), by = l.normal.im.to_long_double();
            long double n = std::sqrt(bx * bx + by * by);
            lg.nx = bx / n;
            lg.ny = by / n;
            lg.off = l.offset.to_long_double() / n;
        } else {
            lg.is_line = false;
            CircleGeometry c = g.circle();
            lg.cx = c.center.re.to_long_double();
            lg.cy = c.center.im.to_long_double();
            lg.r = std::sqrt(c.radius_sq.to_long_double());
        }
        geoms.push_back(lg);
    }

    OrbitReport rep;
    rep.circle_hits.assign(circles.size(), 0);
    rep.passed = true;

    auto check_point = [&](long double x, long double y, std::size_t sample, int step,
                           const std::vector<std::pair<long long, long long>>& digits) {
        long double best = -1.0L;
        std::size_t best_i = 0;
        for (std::size_t i = 0; i < geoms.size(); ++i) {
            const LGeom& g = geoms[i];
            long double d = g.is_line
                ? std::fabs(g.nx * x + g.ny * y - g.off)
                : std::fabs(std::sqrt((x - g.cx) * (x - g.cx) + (y - g.cy) * (y - g.cy)) - g.r);
            if (best < 0.0L || d < best) { best = d; best_i = i; }
        }
        ++rep.orbit_points_checked;
        if (best < 0.0L) best = 1.0L;  // empty circle list covers nothing
        else ++rep.circle_hits[best_i];
        if (static_cast<double>(best) > rep.max_distance_seen)
            rep.max_distance_seen = static_cast<double>(best);
        if (best > static_cast<long double>(tolerance)) {
            rep.passed = false;
            if (rep.violations.size() < 32) {
                std::string hist;
                for (auto [dr, di] : digits) {
                    if (!hist.empty()) hist += ", ";
                    hist += "(" + std::to_string(dr) + "," + std::to_string(di) + ")";
                }
                rep.violations.push_back({sample, step, static_cast<double>(x),
                                          static_cast<double>(y), static_cast<double>(best),
                                          hist});
            }
        }
    };

    // Built from the exact rationals: a long-double-rounded alpha would put
    // the start points ~1e-19 off the true edge, which the dynamics amplify.
    const Quad qa1 = Quad(alpha.a1.num().str()) / Quad(alpha.a1.den().str());
    const Quad qa2 = Quad(alpha.a2.num().str()) / Quad(alpha.a2.den().str());
    const Quad qx_lo = qa1 - 1, qy_lo = qa2 - 1;
    std::size_t per_edge = std::max<std::size_t>(1, boundary_samples / 4);
    std::size_t sample_index = 0;
    for (int edge = 0; edge < 4; ++edge) {
        // Golden-ratio phases keep samples away from rational hot spots whose
        // orbits terminate early.
        Quad phase = Quad("0.61803398874989484820458683436563811772") * (edge + 1) + Quad(0.5);
        phase -= boost::multiprecision::floor(phase);
        for (std::size_t k = 0; k < per_edge; ++k, ++sample_index) {
            Quad t = (Quad(static_cast<unsigned>(k)) + phase) / static_cast<unsigned>(per_edge);
            Quad x, y;
            switch (edge) {
                case 0: x = qx_lo + t; y = qy_lo; break;
                case 1: x = qx_lo + t; y = qa2; break;
                case 2: x = qx_lo; y = qy_lo + t; break;
                default: x = qa1; y = qy_lo + t; break;
            }
            ++rep.samples;
            std::vector<std::pair<long long, long long>> digits;
            check_point(x.convert_to<long double>(), y.convert_to<long double>(),
                        sample_index, 0, digits);
            for (int step = 1; step <= depth; ++step) {
                Quad norm = x * x + y * y;
                if (norm < Quad("1e-24")) { ++rep.terminated_orbits; break; }
                Quad ux = x / norm, uy = -y / norm;
                long long wr =
                    boost::multiprecision::floor(ux - qa1).convert_to<long long>() + 1;
                long long wi =
                    boost::multiprecision::floor(uy - qa2).convert_to<long long>() + 1;
                x = ux - wr;
                y = uy - wi;
                digits.emplace_back(wr, wi);
                check_point(x.convert_to<long double>(), y.convert_to<long double>(),
                            sample_index, step, digits);
            }
        }
    }
    return rep;
}

}  // namespace hurwitz

#include "hurwitz/closure.hpp"

#include <boost/multiprecision/integer.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <map>
#include <set>
#include <thread>
#include <tuple>
#include <unordered_set>

namespace hurwitz {

namespace {

struct TripleKey {
    BigInt a_prev, b_re, b_im, a_cur;
    bool operator==(const TripleKey&) const = default;
};

struct TripleKeyHash {
    std::size_t operator()(const TripleKey& k) const {
        std::size_t seed = 0;
        boost::hash_combine(seed, k.a_prev);
        boost::hash_combine(seed, k.b_re);
        boost::hash_combine(seed, k.b_im);
        boost::hash_combine(seed, k.a_cur);
        return seed;
    }
};

TripleKey key_of(const ClosureNode& n) {
    return {n.a_prev, n.b.re, n.b.im, n.a_cur};
}

// ceil(sqrt(n)) for n >= 0.
BigInt isqrt_ceil(const BigInt& n) {
    BigInt s = boost::multiprecision::sqrt(n);
    return s * s < n ? s + 1 : s;
}

// Exact rational upper bound on sqrt(num/den).
Rational sqrt_upper_bound(const Rational& r_sq) {
    return {isqrt_ceil(r_sq.num()), boost::multiprecision::sqrt(r_sq.den())};
}

// Extended gcd: returns g = gcd(|a|, |b|) >= 0 and x, y with a x + b y = g.
BigInt ext_gcd(const BigInt& a, const BigInt& b, BigInt& x, BigInt& y) {
    if (b == 0) {
        if (a < 0) { x = -1; y = 0; return -a; }
        x = 1; y = 0;
        return a;
    }
    BigInt x1, y1;
    BigInt g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

std::vector<GaussianInt> line_candidates(const GenCircle& h, const RationalBox& box) {
    auto k4 = h.canonical().canonical_key();  // (0, b_re, b_im, c) integer
    const BigInt& br = k4[1];
    const BigInt& bi = k4[2];
    const BigInt& c = k4[3];
    BigInt x0, y0;
    BigInt g = ext_gcd(br, bi, x0, y0);

    // Corner extremes of Re(conj(b) z) = br x + bi y over the closed box.
    Rational vmin, vmax;
    bool first = true;
    for (const GaussianRational& z : box.corners()) {
        Rational v = Rational(br) * z.re + Rational(bi) * z.im;
        if (first) { vmin = vmax = v; first = false; }
        else if (v < vmin) vmin = v;
        else if (v > vmax) vmax = v;
    }
    // Translating by w shifts c to c - 2 k g with k = (br Re w + bi Im w)/g;
    // the line meets the box iff 2 vmin <= c - 2 k g <= 2 vmax.
    Rational two_g(g * 2);
    BigInt k_lo = ((Rational(c) - Rational(2) * vmax) / two_g).ceil();
    BigInt k_hi = ((Rational(c) - Rational(2) * vmin) / two_g).floor();

    std::vector<GaussianInt> out;
    for (BigInt k = k_lo; k <= k_hi; ++k) {
        GaussianInt w{k * x0, k * y0};
        if (h.translate(GaussianRational(w)).intersects_box(box)) out.push_back(w);
    }
    return out;
}

std::vector<GaussianInt> circle_candidates(const GenCircle& h, const RationalBox& box) {
    CircleGeometry g = h.circle();
    Rational r_ub = sqrt_upper_bound(g.radius_sq);
    BigInt u_lo = (g.center.re - box.x_max - r_ub).ceil();
    BigInt u_hi = (g.center.re - box.x_min + r_ub).floor();
    BigInt v_lo = (g.center.im - box.y_max - r_ub).ceil();
    BigInt v_hi = (g.center.im - box.y_min + r_ub).floor();

    std::vector<GaussianInt> out;
    for (BigInt u = u_lo; u <= u_hi; ++u)
        for (BigInt v = v_lo; v <= v_hi; ++v) {
            GaussianInt w{u, v};
            if (h.translate(GaussianRational(w)).intersects_box(box)) out.push_back(w);
        }
    return out;
}

GenCircle reciprocal_circle(const ClosureNode& n) {
    return {Rational(n.a_cur * 2), GaussianRational(n.b.conj()), Rational(n.a_prev * 2)};
}

ClosureNode make_child(const ClosureNode& parent, std::int64_t parent_index,
                       const GaussianInt& w) {
    // Child of the reciprocal circle under translation by w.
    BigInt re_bw = parent.b.re * w.re - parent.b.im * w.im;
    ClosureNode child;
    child.a_prev = parent.a_cur;
    child.b = GaussianInt{parent.b.re - 2 * parent.a_cur * w.re,
                          -parent.b.im - 2 * parent.a_cur * w.im};
    child.a_cur = parent.a_cur * w.norm() - re_bw + parent.a_prev;
    child.depth = parent.depth + 1;
    child.parent = parent_index;
    child.digit_from_parent = w;
    child.seed_index = parent.seed_index;
    return child;
}

// Digits realized on the parent arc, found by dense float sampling of the
// parent circle inside the closed square. Used only by the tight mode.
std::set<std::pair<long long, long long>> sampled_digits(const ClosureNode& node,
                                                         const Alpha& alpha) {
    std::set<std::pair<long long, long long>> seen;
    const int kSamples = 2048;
    double x_lo = alpha.a1.to_double() - 1.0, x_hi = alpha.a1.to_double();
    double y_lo = alpha.a2.to_double() - 1.0, y_hi = alpha.a2.to_double();
    auto visit = [&](double x, double y) {
        if (x < x_lo - 1e-12 || x > x_hi + 1e-12) return;
        if (y < y_lo - 1e-12 || y > y_hi + 1e-12) return;
        std::complex<double> z{x, y};
        if (std::abs(z) < 1e-9) return;
        std::complex<double> u = 1.0 / z;
        long long wr = static_cast<long long>(std::floor(u.real() - alpha.a1.to_double())) + 1;
        long long wi = static_cast<long long>(std::floor(u.imag() - alpha.a2.to_double())) + 1;
        seen.insert({wr, wi});
    };
    GenCircle gc = node.to_circle();
    if (gc.is_line()) {
        LineGeometry l = gc.line();
        double nx = l.normal.re.to_double(), ny = l.normal.im.to_double();
        double off = l.offset.to_double(), nn = nx * nx + ny * ny;
        double px = off * nx / nn, py = off * ny / nn;
        for (int i = 0; i <= kSamples; ++i) {
            double t = -2.0 + 4.0 * i / kSamples;
            visit(px - t * ny, py + t * nx);
        }
    } else {
        CircleGeometry c = gc.circle();
        double cx = c.center.re.to_double(), cy = c.center.im.to_double();
        double r = std::sqrt(c.radius_sq.to_double());
        for (int i = 0; i < kSamples; ++i) {
            double th = 2.0 * M_PI * i / kSamples;
            visit(cx + r * std::cos(th), cy + r * std::sin(th));
        }
    }
    return seen;
}

}  // namespace

std::vector<ClosureNode> seed_circles(const Alpha& alpha) {
    if (!alpha.in_D) throw std::domain_error("seed_circles: alpha outside D");
    const BigInt& p = alpha.a1.num();
    const BigInt& q = alpha.a1.den();
    const BigInt& r = alpha.a2.num();
    const BigInt& s = alpha.a2.den();

    // Edge Re z = t is M(0, q, 2 t q); edge Im z = t is M(0, s i, 2 t s).
    std::vector<ClosureNode> seeds(4);
    seeds[0].b = GaussianInt{q, 0};
    seeds[0].a_cur = p;          // Re z = a1
    seeds[1].b = GaussianInt{q, 0};
    seeds[1].a_cur = p - q;      // Re z = a1 - 1
    seeds[2].b = GaussianInt{0, s};
    seeds[2].a_cur = r;          // Im z = a2
    seeds[3].b = GaussianInt{0, s};
    seeds[3].a_cur = r - s;      // Im z = a2 - 1
    for (std::size_t i = 0; i < 4; ++i) {
        seeds[i].a_prev = 0;
        seeds[i].depth = 0;
        seeds[i].parent = -1;
        seeds[i].seed_index = static_cast<std::uint8_t>(i);
    }
    return seeds;
}

std::vector<GaussianInt> digit_candidates(const GenCircle& h, const Alpha& alpha) {
    RationalBox box = alpha.closed_box();
    return h.is_line() ? line_candidates(h, box) : circle_candidates(h, box);
}

std::pair<CircleSet, PartitionReport> closure(const Alpha& alpha, const ClosureOptions& opt) {
    auto t_start = std::chrono::steady_clock::now();

    CircleSet set;
    set.alpha = alpha;
    set.nodes = seed_circles(alpha);
    set.by_seed.resize(4);
    for (const ClosureNode& s : set.nodes) set.seed_b0_norm_sq.push_back(s.b.norm());

    std::unordered_set<TripleKey, TripleKeyHash> visited;
    for (const ClosureNode& s : set.nodes) visited.insert(key_of(s));

    std::vector<std::size_t> level{0, 1, 2, 3};
    bool capped = false;
    std::size_t depth_reached = 0;

    unsigned workers = std::max(1u, opt.workers);
    while (!level.empty()) {
        depth_reached = set.nodes[level.front()].depth;
        if (depth_reached >= opt.max_depth) { capped = true; break; }

        // Each level slot gets its own candidate list so the merge below is
        // position-ordered and therefore independent of the worker count.
        std::vector<std::vector<ClosureNode>> produced(level.size());
        auto work = [&](unsigned wid) {
            for (std::size_t i = wid; i < level.size(); i += workers) {
                const ClosureNode parent = set.nodes[level[i]];
                std::vector<GaussianInt> cands =
                    digit_candidates(reciprocal_circle(parent), alpha);
                if (opt.tight) {
                    auto realized = sampled_digits(parent, alpha);
                    std::erase_if(cands, [&](const GaussianInt& w) {
                        if (w.re < -(1LL << 62) || w.re > (1LL << 62)) return false;
                        return !realized.count({w.re.convert_to<long long>(),
                                                w.im.convert_to<long long>()});
                    });
                }
                produced[i].reserve(cands.size());
                for (const GaussianInt& w : cands)
                    produced[i].push_back(
                        make_child(parent, static_cast<std::int64_t>(level[i]), w));
            }
        };
        if (workers == 1) {
            work(0);
        } else {
            std::vector<std::thread> pool;
            for (unsigned wid = 0; wid < workers; ++wid) pool.emplace_back(work, wid);
            for (std::thread& t : pool) t.join();
        }

        std::vector<std::size_t> next;
        for (std::vector<ClosureNode>& children : produced) {
            for (ClosureNode& child : children) {
                if (!visited.insert(key_of(child)).second) continue;
                if (set.nodes.size() >= opt.max_nodes) { capped = true; break; }
                set.nodes.push_back(std::move(child));
                next.push_back(set.nodes.size() - 1);
            }
            if (capped) break;
        }
        if (capped) break;
        level = std::move(next);
    }

    // Canonical deduplicated geometry, sorted for stable output.
    std::map<std::array<BigInt, 4>, GenCircle> canon;
    for (std::size_t i = 0; i < set.nodes.size(); ++i) {
        set.by_seed[set.nodes[i].seed_index].push_back(i);
        GenCircle g = set.nodes[i].to_circle().canonical();
        canon.emplace(g.canonical_key(), g);
    }
    for (auto& [key, g] : canon) set.circles.push_back(g);

    PartitionReport rep;
    rep.alpha = alpha;
    rep.circle_count = set.circles.size();
    rep.node_count = set.nodes.size();
    rep.stabilized = !capped;
    rep.depth_reached = depth_reached;
    rep.options = opt;

    RhoBound rho(alpha);
    rep.rho_min_m = rho.corner_norm_sq_max();
    rep.rho_min_approx = rho.rho_min();
    rep.bound_applicable = rho.positive();
    if (rep.bound_applicable) {
        BigInt n_max = 0;
        for (const BigInt& b0 : set.seed_b0_norm_sq) {
            BigInt n = rho.floor_ratio(boost::multiprecision::sqrt(b0));
            if (n > n_max) n_max = n;
        }
        rep.n_alpha = n_max;
    }
    BigInt bmax = 0;
    for (const ClosureNode& n : set.nodes) {
        BigInt bn = n.b.norm();
        if (bn > bmax) bmax = bn;
    }
    rep.b_norm_sq_max = bmax;

    rep.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
    return {std::move(set), std::move(rep)};
}

namespace {

std::string digit_chain(const CircleSet& set, std::size_t index) {
    std::vector<std::string> parts;
    for (std::int64_t i = static_cast<std::int64_t>(index); i >= 0;
         i = set.nodes[static_cast<std::size_t>(i)].parent) {
        const ClosureNode& n = set.nodes[static_cast<std::size_t>(i)];
        parts.push_back(n.digit_from_parent ? n.digit_from_parent->str()
                                            : "seed" + std::to_string(n.seed_index));
    }
    std::string out;
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
        if (!out.empty()) out += " -> ";
        out += *it;
    }
    return out;
}

}  // namespace

VerificationSummary verify_closure_invariants(const CircleSet& set) {
    VerificationSummary summary;
    RhoBound rho(set.alpha);
    RationalBox box = set.alpha.closed_box();

    std::vector<BigInt> n_alpha_by_seed;
    if (rho.positive())
        for (const BigInt& b0 : set.seed_b0_norm_sq)
            n_alpha_by_seed.push_back(rho.floor_ratio(boost::multiprecision::sqrt(b0)));

    auto flag = [&](std::size_t i, std::string what) {
        summary.passed = false;
        summary.violations.push_back({i, std::move(what), digit_chain(set, i)});
    };

    for (std::size_t i = 0; i < set.nodes.size(); ++i) {
        const ClosureNode& n = set.nodes[i];
        const BigInt& b0_sq = set.seed_b0_norm_sq[n.seed_index];
        ++summary.nodes_checked;

        if (n.b.norm() - 4 * n.a_prev * n.a_cur != b0_sq)
            flag(i, "conservation law |B|^2 - 4 A_prev A_cur != |B_0|^2");

        GenCircle g = n.to_circle();
        if (!g.intersects_box(box))
            flag(i, "circle does not meet the closed square");

        if (n.a_prev != 0) {
            Rational r_sq = g.circle().radius_sq;
            if (r_sq * Rational(4 * n.a_prev * n.a_prev) != Rational(b0_sq))
                flag(i, "radius law radius_sq * 4 A_prev^2 != |B_0|^2");
            if (rho.positive()) {
                if (rho.compare_radius_sq(r_sq) <= 0)
                    flag(i, "radius not strictly above rho_min");
                if (r_sq > Rational(b0_sq, 4))
                    flag(i, "radius above |B_0| / 2");
            }
        }
        if (rho.positive()) {
            const BigInt& cap = n_alpha_by_seed[n.seed_index];
            if (boost::multiprecision::abs(n.a_prev) > cap ||
                boost::multiprecision::abs(n.a_cur) > cap)
                flag(i, "coefficient |A| exceeds N_alpha");
            if (n.b.norm() > b0_sq + 4 * cap * cap)
                flag(i, "|B|^2 exceeds |B_0|^2 + 4 N_alpha^2");
        }
    }
    return summary;
}

}  // namespace hurwitz

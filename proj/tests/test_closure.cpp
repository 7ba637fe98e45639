#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hurwitz/closure.hpp"

#include <algorithm>
#include <set>

using namespace hurwitz;

namespace {

Rational rat(long long n, long long d = 1) { return Rational(n, d); }
GaussianInt gi(long long re, long long im = 0) { return {re, im}; }

const Alpha kHurwitz = Alpha::parse("1/2", "1/2");

std::array<BigInt, 4> key(long long a, long long bre, long long bim, long long c) {
    return {BigInt(a), BigInt(bre), BigInt(bim), BigInt(c)};
}

std::set<std::array<BigInt, 4>> circle_keys(const CircleSet& set) {
    std::set<std::array<BigInt, 4>> keys;
    for (const GenCircle& g : set.circles) keys.insert(g.canonical_key());
    return keys;
}

bool has_digit(const std::vector<GaussianInt>& cands, long long re, long long im) {
    return std::find(cands.begin(), cands.end(), gi(re, im)) != cands.end();
}

std::vector<std::array<BigInt, 4>> node_triples(const CircleSet& set) {
    std::vector<std::array<BigInt, 4>> out;
    out.reserve(set.nodes.size());
    for (const ClosureNode& n : set.nodes)
        out.push_back({n.a_prev, n.b.re, n.b.im, n.a_cur});
    return out;
}

}  // namespace

TEST_CASE("seed nodes carry the four boundary edges") {
    auto seeds = seed_circles(kHurwitz);
    REQUIRE(seeds.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(seeds[i].a_prev == 0);
        CHECK(seeds[i].depth == 0);
        CHECK(seeds[i].parent == -1);
        CHECK(!seeds[i].digit_from_parent.has_value());
        CHECK(seeds[i].seed_index == i);
    }
    CHECK(seeds[0].to_circle().canonical_key() == key(0, 1, 0, 1));    // Re z = 1/2
    CHECK(seeds[1].to_circle().canonical_key() == key(0, 1, 0, -1));   // Re z = -1/2
    CHECK(seeds[2].to_circle().canonical_key() == key(0, 0, 1, 1));    // Im z = 1/2
    CHECK(seeds[3].to_circle().canonical_key() == key(0, 0, 1, -1));   // Im z = -1/2

    // Every point of the edge lies on the seed's line.
    for (long long t = -10; t <= 10; ++t) {
        CHECK(seeds[0].to_circle().contains_point({rat(1, 2), rat(t, 13)}));
        CHECK(seeds[3].to_circle().contains_point({rat(t, 13), rat(-1, 2)}));
    }

    auto skew = seed_circles(Alpha::parse("1/5", "3/5"));
    CHECK(skew[0].to_circle().canonical_key() == key(0, 5, 0, 2));     // Re z = 1/5
    CHECK(skew[1].to_circle().canonical_key() == key(0, 5, 0, -8));    // Re z = -4/5
    CHECK(skew[2].to_circle().canonical_key() == key(0, 0, 5, 6));     // Im z = 3/5
    CHECK(skew[3].to_circle().canonical_key() == key(0, 0, 5, -4));    // Im z = -2/5

    CHECK_THROWS_AS(seed_circles(Alpha::make(rat(1), rat(1))), std::domain_error);
}

TEST_CASE("a priori radius lower bound") {
    RhoBound rho_h{kHurwitz};
    CHECK(rho_h.corner_norm_sq_max() == rat(1, 2));
    CHECK(rho_h.positive());
    CHECK(rho_h.rho_min() == doctest::Approx(0.14644660940672627).epsilon(1e-12));
    // rho_min^2 = (3 - 2 sqrt 2) / 8, between 1/49 and 1/36.
    CHECK(rho_h.compare_radius_sq(rat(1, 36)) == 1);
    CHECK(rho_h.compare_radius_sq(rat(1, 49)) == -1);
    CHECK(rho_h.floor_ratio(BigInt(1)) == 3);
    CHECK(rho_h.floor_ratio(BigInt(2)) == 6);
    CHECK(rho_h.floor_ratio(BigInt(5)) == 17);
    CHECK_THROWS_AS(rho_h.floor_ratio(BigInt(0)), std::domain_error);

    // m = 25/36 has a rational square root, so everything is on-grid.
    RhoBound rho_r{Alpha::parse("2/3", "1/2")};
    CHECK(rho_r.corner_norm_sq_max() == rat(25, 36));
    CHECK(rho_r.compare_radius_sq(rat(1, 144)) == 0);   // rho_min = 1/12 exactly
    CHECK(rho_r.compare_radius_sq(rat(1, 143)) == 1);
    CHECK(rho_r.compare_radius_sq(rat(1, 145)) == -1);
    CHECK(rho_r.floor_ratio(BigInt(1)) == 6);           // 1 / (1/6), exact boundary
    CHECK(rho_r.floor_ratio(BigInt(3)) == 18);

    // A corner on the unit circle kills the bound.
    RhoBound rho_z{Alpha::parse("1/5", "3/5")};
    CHECK(rho_z.corner_norm_sq_max() == rat(1));
    CHECK(!rho_z.positive());
    CHECK(rho_z.rho_min() == 0.0);
    CHECK(rho_z.compare_radius_sq(rat(1, 1000)) == 1);
    CHECK(rho_z.compare_radius_sq(rat(0)) == 0);
    CHECK_THROWS_AS(rho_z.floor_ratio(BigInt(1)), std::domain_error);
}

TEST_CASE("digit candidates around a reciprocal circle") {
    // Reciprocal of the edge Re z = 1/2: the circle |z - 1| = 1.
    GenCircle h = GenCircle(rat(0), GaussianRational{rat(2), rat(0)}, rat(2)).reciprocal();
    REQUIRE(!h.is_line());
    CHECK(h.circle().center == GaussianRational{rat(1), rat(0)});
    CHECK(h.circle().radius_sq == rat(1));

    auto cands = digit_candidates(h, kHurwitz);
    CHECK(has_digit(cands, 0, 0));
    CHECK(has_digit(cands, 2, 0));
    CHECK(has_digit(cands, 1, 1));
    CHECK(has_digit(cands, 1, -1));
    CHECK(!has_digit(cands, 1, 0));   // |z| = 1 misses the square entirely
    CHECK(!has_digit(cands, 3, 0));

    // Candidate lists are exactly the translates meeting the closed square.
    RationalBox box = kHurwitz.closed_box();
    for (long long u = -4; u <= 4; ++u)
        for (long long v = -4; v <= 4; ++v) {
            bool meets = h.translate(GaussianRational{rat(u), rat(v)}).intersects_box(box);
            CHECK(has_digit(cands, u, v) == meets);
        }

    // A line reciprocal shifts only along its normal direction.
    GenCircle vline(rat(0), GaussianRational{rat(2), rat(0)}, rat(2));
    auto line_cands = digit_candidates(vline, kHurwitz);
    REQUIRE(line_cands.size() == 2);
    CHECK(line_cands[0] == gi(0));
    CHECK(line_cands[1] == gi(1));
}

TEST_CASE("closure of the nearest-integer parameter") {
    auto [set, rep] = closure(kHurwitz);

    CHECK(rep.stabilized);
    CHECK(rep.circle_count == 12);
    CHECK(rep.node_count == 24);
    CHECK(rep.depth_reached == 2);
    CHECK(rep.bound_applicable);
    REQUIRE(rep.n_alpha.has_value());
    CHECK(*rep.n_alpha == 6);
    REQUIRE(rep.b_norm_sq_max.has_value());
    CHECK(*rep.b_norm_sq_max == 8);
    CHECK(rep.rho_min_m == rat(1, 2));
    CHECK(rep.rho_min_approx == doctest::Approx(0.146446609).epsilon(1e-8));

    CHECK(set.seed_b0_norm_sq == std::vector<BigInt>{4, 4, 4, 4});
    std::size_t by_seed_total = 0;
    for (const auto& members : set.by_seed) by_seed_total += members.size();
    CHECK(by_seed_total == set.nodes.size());

    // Four edges plus the eight unit circles centered on the small digits.
    std::set<std::array<BigInt, 4>> expected{
        key(0, 1, 0, 1), key(0, 1, 0, -1), key(0, 0, 1, 1), key(0, 0, 1, -1),
        key(1, 1, 0, 0), key(1, -1, 0, 0), key(1, 0, 1, 0), key(1, 0, -1, 0),
        key(1, 1, 1, 1), key(1, 1, -1, 1), key(1, -1, 1, 1), key(1, -1, -1, 1),
    };
    CHECK(circle_keys(set) == expected);

    // All circles here have radius 1, i.e. |A_prev| = 1 on circle nodes.
    for (const ClosureNode& n : set.nodes) {
        if (n.a_prev != 0) CHECK(boost::multiprecision::abs(n.a_prev) == 1);
        CHECK(boost::multiprecision::abs(n.a_prev) <= 6);
        CHECK(boost::multiprecision::abs(n.a_cur) <= 6);
    }

    // The recurrence that produced each child, replayed by hand.
    std::array<BigInt, 4> sample{1, 0, -2, 0};  // |z + i| = 1, a child of an edge
    bool saw_sample = false;
    for (const ClosureNode& n : set.nodes) {
        if (n.parent < 0) continue;
        const ClosureNode& p = set.nodes[static_cast<std::size_t>(n.parent)];
        REQUIRE(n.digit_from_parent.has_value());
        const GaussianInt& w = *n.digit_from_parent;
        CHECK(n.a_prev == p.a_cur);
        CHECK(n.b.re == p.b.re - 2 * p.a_cur * w.re);
        CHECK(n.b.im == -p.b.im - 2 * p.a_cur * w.im);
        CHECK(n.a_cur == p.a_cur * w.norm() - (p.b.re * w.re - p.b.im * w.im) + p.a_prev);
        CHECK(n.depth == p.depth + 1);
        CHECK(n.seed_index == p.seed_index);
        if (std::array<BigInt, 4>{n.a_prev, n.b.re, n.b.im, n.a_cur} == sample)
            saw_sample = true;
    }
    CHECK(saw_sample);
}

TEST_CASE("closure invariants hold and violations are caught") {
    auto [set, rep] = closure(kHurwitz);
    VerificationSummary ok = verify_closure_invariants(set);
    CHECK(ok.passed);
    CHECK(ok.nodes_checked == 24);
    CHECK(ok.violations.empty());

    // Flipping the sign of A_prev breaks the conservation law only.
    CircleSet broken = set;
    for (ClosureNode& n : broken.nodes) {
        if (n.b.norm() == 8) {
            n.a_prev = -n.a_prev;
            break;
        }
    }
    VerificationSummary bad = verify_closure_invariants(broken);
    CHECK(!bad.passed);
    REQUIRE(!bad.violations.empty());
    bool conservation_hit = false;
    for (const InvariantViolation& v : bad.violations) {
        CHECK(!v.chain.empty());
        if (v.what.find("conservation") != std::string::npos) conservation_hit = true;
    }
    CHECK(conservation_hit);

    // A conserved node can still breach the a priori coefficient cap.
    CircleSet oversized = set;
    ClosureNode rogue;
    rogue.a_prev = 7;
    rogue.b = gi(14, 2);   // |B|^2 - 4*7*7 = 200 - 196 = 4, conserved
    rogue.a_cur = 7;
    rogue.depth = 3;
    rogue.parent = 0;
    rogue.digit_from_parent = gi(1);
    rogue.seed_index = 0;
    oversized.nodes.push_back(rogue);
    VerificationSummary over = verify_closure_invariants(oversized);
    CHECK(!over.passed);
    bool cap_hit = false;
    for (const InvariantViolation& v : over.violations) {
        CHECK(v.node_index == oversized.nodes.size() - 1);
        if (v.what.find("exceeds N_alpha") != std::string::npos) cap_hit = true;
    }
    CHECK(cap_hit);
}

TEST_CASE("worker count never changes the output") {
    for (const char* a2 : {"1/2", "2/3"}) {
        Alpha alpha = Alpha::parse("2/3", a2);
        ClosureOptions one, many;
        many.workers = 3;
        auto [s1, r1] = closure(alpha, one);
        auto [s3, r3] = closure(alpha, many);
        CHECK(node_triples(s1) == node_triples(s3));
        CHECK(circle_keys(s1) == circle_keys(s3));
        CHECK(r1.circle_count == r3.circle_count);
        CHECK(r3.options.workers == 3);
    }
}

TEST_CASE("closure across the parameter family") {
    auto [s_a, r_a] = closure(Alpha::parse("2/3", "1/2"));
    CHECK(r_a.stabilized);
    CHECK(r_a.circle_count == 39);
    CHECK(*r_a.n_alpha == 18);

    // Mirrored parameter, mirrored partition: same circle count.
    auto [s_b, r_b] = closure(Alpha::parse("1/3", "1/2"));
    CHECK(r_b.stabilized);
    CHECK(r_b.circle_count == 39);

    auto [s_c, r_c] = closure(Alpha::parse("2/3", "2/3"));
    CHECK(r_c.stabilized);
    CHECK(r_c.circle_count == 64);
    CHECK(*r_c.n_alpha == 52);

    // A boundary corner: no a priori bound, yet the search still closes.
    auto [s_d, r_d] = closure(Alpha::parse("1/5", "3/5"));
    CHECK(r_d.stabilized);
    CHECK(r_d.circle_count == 300);
    CHECK(!r_d.bound_applicable);
    CHECK(!r_d.n_alpha.has_value());
    CHECK(r_d.b_norm_sq_max.has_value());
    CHECK(verify_closure_invariants(s_d).passed);

    CHECK(verify_closure_invariants(s_a).passed);
    CHECK(verify_closure_invariants(s_c).passed);
}

TEST_CASE("node and depth caps report an unstabilized search") {
    ClosureOptions shallow;
    shallow.max_depth = 1;
    auto [s1, r1] = closure(kHurwitz, shallow);
    CHECK(!r1.stabilized);
    CHECK(r1.depth_reached == 1);

    ClosureOptions tiny;
    tiny.max_nodes = 5;
    auto [s2, r2] = closure(kHurwitz, tiny);
    CHECK(!r2.stabilized);
    CHECK(r2.node_count == 5);
}

TEST_CASE("tight mode keeps the fully realized partition intact") {
    ClosureOptions tight;
    tight.tight = true;
    auto [s_t, r_t] = closure(kHurwitz, tight);
    auto [s_f, r_f] = closure(kHurwitz);
    CHECK(r_t.stabilized);
    CHECK(circle_keys(s_t) == circle_keys(s_f));
}

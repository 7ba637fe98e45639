#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hurwitz/cf.hpp"

#include <complex>
#include <random>

using namespace hurwitz;

namespace {

Rational rat(long long n, long long d = 1) { return Rational(n, d); }
GaussianRational grat(long long re, long long im = 0) {
    return {Rational(re), Rational(im)};
}
GaussianInt gi(long long re, long long im = 0) { return {re, im}; }

const Alpha kHurwitz = Alpha::parse("1/2", "1/2");

std::vector<GaussianInt> digits(std::initializer_list<std::pair<long long, long long>> v) {
    std::vector<GaussianInt> out;
    for (auto [r, i] : v) out.push_back(gi(r, i));
    return out;
}

// Uniform rational in [lo, hi) with denominator <= den_max.
Rational random_rational(std::mt19937_64& rng, const Rational& lo, const Rational& hi,
                         long long den_max) {
    std::uniform_int_distribution<long long> dd(1, den_max);
    long long d = dd(rng);
    // Numerators n with lo <= n/d < hi.
    BigInt n_lo = (lo * Rational(d)).ceil();
    BigInt n_hi = (hi * Rational(d)).ceil();  // exclusive
    std::uniform_int_distribution<long long> dn(0, (n_hi - n_lo - 1).convert_to<long long>());
    return Rational(n_lo + dn(rng), BigInt(d));
}

GaussianRational random_point_in_U(std::mt19937_64& rng, const Alpha& alpha,
                                   long long den_max) {
    return {random_rational(rng, alpha.a1 - rat(1), alpha.a1, den_max),
            random_rational(rng, alpha.a2 - rat(1), alpha.a2, den_max)};
}

}  // namespace

TEST_CASE("parameter domain membership") {
    CHECK(in_domain_D(rat(1, 2), rat(1, 2)));
    CHECK(in_domain_D(rat(2, 3), rat(1, 2)));
    CHECK(in_domain_D(rat(2, 3), rat(2, 3)));
    CHECK(in_domain_D(rat(1, 3), rat(1, 2)));
    // On the boundary ball |alpha - (1,0)| = 1 exactly; closed, so inside.
    CHECK(in_domain_D(rat(1, 5), rat(3, 5)));

    CHECK(!in_domain_D(rat(0), rat(0)));    // fails the ball at (1,1)
    CHECK(!in_domain_D(rat(1), rat(1)));    // |alpha|^2 = 2, open ball fails
    CHECK(!in_domain_D(rat(1), rat(0)));    // |alpha| = 1, open ball is strict
    CHECK(!in_domain_D(rat(9, 10), rat(1, 10)));

    CHECK(Alpha::parse("1/2", "1/2").in_D);
    CHECK(!Alpha::make(rat(1), rat(1)).in_D);
}

TEST_CASE("alpha box and membership") {
    Alpha a = Alpha::parse("2/3", "1/2");
    RationalBox box = a.closed_box();
    CHECK(box.x_min == rat(-1, 3));
    CHECK(box.x_max == rat(2, 3));
    CHECK(box.y_min == rat(-1, 2));
    CHECK(box.y_max == rat(1, 2));

    // Half-open: lower edges in, upper edges out.
    CHECK(a.contains(GaussianRational{rat(-1, 3), rat(-1, 2)}));
    CHECK(!a.contains(GaussianRational{rat(2, 3), rat(0)}));
    CHECK(!a.contains(GaussianRational{rat(0), rat(1, 2)}));
    CHECK(a.contains(std::complex<double>(0.0, 0.0)));
    CHECK(!a.contains(std::complex<double>(0.67, 0.0)));

    // The closure keeps the upper edges; beyond them is still out.
    CHECK(a.contains_closed(GaussianRational{rat(2, 3), rat(1, 2)}));
    CHECK(!a.contains_closed(GaussianRational{rat(7, 10), rat(0)}));
}

TEST_CASE("floor_alpha picks the digit moving z into U_alpha") {
    CHECK(floor_alpha(grat(0), kHurwitz) == gi(0));
    CHECK(floor_alpha({rat(5, 2), rat(0)}, kHurwitz) == gi(3));
    CHECK(floor_alpha({rat(0), rat(-5, 2)}, kHurwitz) == gi(0, -2));

    // Component boundaries: z - w lands in [a-1, a), never at a.
    CHECK(floor_alpha({rat(1, 2), rat(1, 2)}, kHurwitz) == gi(1, 1));
    CHECK(floor_alpha({rat(-1, 2), rat(-1, 2)}, kHurwitz) == gi(0, 0));

    Alpha skew = Alpha::parse("9/20", "3/5");
    CHECK(floor_alpha({rat(1, 2), rat(0)}, skew) == gi(1, 0));

    // Float flavor agrees away from the lattice discontinuities.
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> big(-40.0, 40.0);
    for (int k = 0; k < 300; ++k) {
        long long xr = std::llround(big(rng) * 16), xi = std::llround(big(rng) * 16);
        GaussianRational z{rat(4 * xr + 1, 64), rat(4 * xi + 1, 64)};  // off the cut lines
        GaussianInt exact = floor_alpha(z, kHurwitz);
        GaussianInt approx = floor_alpha(z.to_complex(), kHurwitz);
        CHECK(exact == approx);
        // Defining property of the digit.
        CHECK(kHurwitz.contains(z - GaussianRational(exact)));
    }
}

TEST_CASE("one exact step of the digit map") {
    auto [w1, z1] = t_alpha_step_exact({rat(2, 5), rat(0)}, kHurwitz);
    CHECK(w1 == gi(3));
    CHECK(z1 == GaussianRational{rat(-1, 2), rat(0)});

    auto [w2, z2] = t_alpha_step_exact({rat(-1, 2), rat(0)}, kHurwitz);
    CHECK(w2 == gi(-2));
    CHECK(z2.is_zero());

    auto [w3, z3] = t_alpha_step_exact({rat(0), rat(1, 2)}, kHurwitz);
    CHECK(w3 == gi(0, -2));
    CHECK(z3.is_zero());

    CHECK_THROWS_AS(t_alpha_step_exact(grat(0), kHurwitz), std::domain_error);
    CHECK_THROWS_AS(t_alpha_step_exact({rat(3, 4), rat(0)}, kHurwitz), std::domain_error);
}

TEST_CASE("exact expansion of rationals terminates") {
    CFExpansion e = expand(GaussianRational{rat(2, 5), rat(0)}, kHurwitz);
    CHECK(e.terminated);
    CHECK(e.digits == digits({{3, 0}, {-2, 0}}));

    CFExpansion ei = expand(GaussianRational{rat(0), rat(1, 2)}, kHurwitz);
    CHECK(ei.terminated);
    CHECK(ei.digits == digits({{0, -2}}));

    CFExpansion e0 = expand(grat(0), kHurwitz);
    CHECK(e0.terminated);
    CHECK(e0.digits.empty());

    // Expansion demands z in U_alpha and alpha in the parameter domain.
    CHECK_THROWS_AS(expand(grat(1), kHurwitz), std::domain_error);
    CHECK_THROWS_AS(expand(grat(0), Alpha::make(rat(1), rat(1))), std::domain_error);
    ExpandOptions permissive;
    permissive.allow_outside_D = true;
    CHECK_NOTHROW(expand(grat(0), Alpha::make(rat(1), rat(1)), permissive));

    // A step cap leaves the orbit truncated, not terminated.
    ExpandOptions one_step;
    one_step.max_steps = 1;
    CFExpansion et = expand(GaussianRational{rat(2, 5), rat(0)}, kHurwitz, one_step);
    CHECK(!et.terminated);
    CHECK(et.truncated_at == 1);
    CHECK(et.digits.size() == 1);
}

TEST_CASE("float expansion emits only legal digits") {
    ExpandOptions opt;
    opt.max_steps = 30;
    CFExpansion e = expand(std::complex<double>(0.123, 0.271), kHurwitz, opt);
    CHECK(e.digits.size() == 30);
    for (const GaussianInt& w : e.digits) CHECK(w.norm() >= 2);

    // 0.1 + 0.2i rounds to within 1e-15 of 1/(2 - 4i), so the first residual
    // is already below the zero threshold and the orbit stops at one digit.
    CFExpansion near_exact = expand(std::complex<double>(0.1, 0.2), kHurwitz, opt);
    CHECK(near_exact.terminated);
    CHECK(near_exact.digits == digits({{2, -4}}));
    CFExpansion exact = expand(GaussianRational{rat(1, 10), rat(1, 5)}, kHurwitz);
    CHECK(exact.terminated);
    CHECK(exact.digits == digits({{2, -4}}));
}

TEST_CASE("evaluate_cf inverts the digit string") {
    CHECK(evaluate_cf(digits({{-2, 0}})) == GaussianRational{rat(-1, 2), rat(0)});
    CHECK(evaluate_cf(digits({{3, 0}, {-2, 0}})) == GaussianRational{rat(2, 5), rat(0)});
    CHECK(evaluate_cf(digits({{7, 0}})) == GaussianRational{rat(1, 7), rat(0)});
    CHECK(evaluate_cf(digits({{0, -2}})) == GaussianRational{rat(0), rat(1, 2)});

    CHECK_THROWS_AS(evaluate_cf({}), std::domain_error);
    // 1 + 1/(-1) = 0 at the top level.
    CHECK_THROWS_AS(evaluate_cf(digits({{1, 0}, {-1, 0}})), std::domain_error);
    CHECK_THROWS_AS(evaluate_cf(digits({{5, 0}, {1, 0}, {-1, 0}})), std::domain_error);
}

TEST_CASE("convergent recurrence") {
    auto c = convergents(digits({{3, 0}, {-2, 0}}));
    REQUIRE(c.size() == 2);
    CHECK(c[0].p == gi(1));
    CHECK(c[0].q == gi(3));
    CHECK(c[1].p == gi(-2));
    CHECK(c[1].q == gi(-5));

    auto pi_c = convergents(digits({{7, 0}, {15, 0}, {1, 0}}));
    REQUIRE(pi_c.size() == 3);
    CHECK(pi_c[0].p == gi(1));
    CHECK(pi_c[0].q == gi(7));
    CHECK(pi_c[1].p == gi(15));
    CHECK(pi_c[1].q == gi(106));
    CHECK(pi_c[2].p == gi(16));
    CHECK(pi_c[2].q == gi(113));

    CHECK(convergents({}).empty());
}

TEST_CASE("cylinder digit is the first expansion digit") {
    CHECK(cylinder_digit(GaussianRational{rat(2, 5), rat(0)}, kHurwitz) == gi(3));
    CHECK(cylinder_digit(GaussianRational{rat(-1, 2), rat(0)}, kHurwitz) == gi(-2));
    CHECK(cylinder_digit(std::complex<double>(0.3, 0.4), kHurwitz) == gi(1, -2));
    CHECK_THROWS_AS(cylinder_digit(std::complex<double>(0.0, 0.0), kHurwitz),
                    std::domain_error);
}

TEST_CASE("property: expansion reconstructs its argument exactly") {
    std::mt19937_64 rng(43);
    const Alpha alphas[] = {kHurwitz, Alpha::parse("2/3", "1/2"), Alpha::parse("1/5", "3/5")};
    ExpandOptions opt;
    opt.max_steps = 4096;
    for (const Alpha& alpha : alphas) {
        for (int k = 0; k < 200; ++k) {
            GaussianRational z = random_point_in_U(rng, alpha, 60);
            CFExpansion e = expand(z, alpha, opt);
            REQUIRE(e.terminated);
            if (e.digits.empty()) {
                CHECK(z.is_zero());
            } else {
                CHECK(evaluate_cf(e.digits) == z);
            }
        }
    }
}

TEST_CASE("property: every orbit iterate stays in U_alpha") {
    std::mt19937_64 rng(47);
    const Alpha alphas[] = {kHurwitz, Alpha::parse("2/3", "2/3")};
    for (const Alpha& alpha : alphas) {
        for (int k = 0; k < 120; ++k) {
            GaussianRational cur = random_point_in_U(rng, alpha, 50);
            for (int step = 0; step < 4096 && !cur.is_zero(); ++step) {
                auto [w, next] = t_alpha_step_exact(cur, alpha);
                CHECK(alpha.contains(next));
                cur = std::move(next);
            }
            CHECK(cur.is_zero());
        }
    }
}

TEST_CASE("property: convergents are unimodular and match prefix values") {
    std::mt19937_64 rng(53);
    for (int k = 0; k < 150; ++k) {
        GaussianRational z = random_point_in_U(rng, kHurwitz, 45);
        if (z.is_zero()) continue;
        ExpandOptions opt;
        opt.max_steps = 4096;
        CFExpansion e = expand(z, kHurwitz, opt);
        REQUIRE(e.terminated);
        auto c = convergents(e.digits);

        GaussianInt p_prev(0), q_prev(1);  // (p_0, q_0)
        for (std::size_t n = 0; n < c.size(); ++n) {
            // p_n q_{n-1} - p_{n-1} q_n alternates +1, -1, +1, ...
            GaussianInt det = c[n].p * q_prev - p_prev * c[n].q;
            CHECK(det == (n % 2 == 0 ? gi(1) : gi(-1)));
            p_prev = c[n].p;
            q_prev = c[n].q;

            std::vector<GaussianInt> prefix(e.digits.begin(), e.digits.begin() + n + 1);
            if (!c[n].q.is_zero()) {
                CHECK(evaluate_cf(prefix) ==
                      GaussianRational(c[n].p) / GaussianRational(c[n].q));
            }
        }
        // The final convergent is the point itself.
        REQUIRE(!c.empty());
        CHECK(GaussianRational(c.back().p) / GaussianRational(c.back().q) == z);
    }
}

TEST_CASE("property: Hurwitz digits avoid the five smallest Gaussian integers") {
    std::mt19937_64 rng(59);
    for (int k = 0; k < 150; ++k) {
        GaussianRational z = random_point_in_U(rng, kHurwitz, 70);
        ExpandOptions opt;
        opt.max_steps = 4096;
        CFExpansion e = expand(z, kHurwitz, opt);
        REQUIRE(e.terminated);
        for (const GaussianInt& w : e.digits) CHECK(w.norm() >= 2);
    }
}

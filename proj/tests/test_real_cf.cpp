#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hurwitz/real_cf.hpp"

#include <numbers>
#include <random>

using namespace hurwitz;

namespace {

std::vector<BigInt> digs(std::initializer_list<long long> v) {
    return {v.begin(), v.end()};
}

const long double kPiFrac = std::numbers::pi_v<long double> - 3.0L;

}  // namespace

TEST_CASE("gauss digits of rationals run Euclid's algorithm") {
    RealCFExpansion e = gauss_expand(Rational(5, 7), 64);
    CHECK(e.terminated);
    CHECK(e.flavor == RealCFFlavor::Classical);
    CHECK(e.digits == digs({1, 2, 2}));

    CHECK(gauss_expand(Rational(1, 2), 64).digits == digs({2}));
    CHECK(gauss_expand(Rational(113, 355), 64).digits == digs({3, 7, 16}));

    CHECK_THROWS_AS(gauss_expand(Rational(0), 64), std::domain_error);
    CHECK_THROWS_AS(gauss_expand(Rational(1), 64), std::domain_error);
    CHECK_THROWS_AS(gauss_expand(Rational(-1, 2), 64), std::domain_error);
    CHECK_THROWS_AS(gauss_expand(Rational(3, 2), 64), std::domain_error);
    CHECK_THROWS_AS(gauss_expand(1.0L, 64), std::domain_error);

    // A cap leaves the tail unexpanded.
    RealCFExpansion capped = gauss_expand(Rational(5, 7), 2);
    CHECK(!capped.terminated);
    CHECK(capped.digits == digs({1, 2}));
}

TEST_CASE("gauss digits of pi - 3") {
    RealCFExpansion e = gauss_expand(kPiFrac, 8);
    REQUIRE(e.digits.size() == 8);
    CHECK(e.digits[0] == 7);
    CHECK(e.digits[1] == 15);
    CHECK(e.digits[2] == 1);
    CHECK(e.digits[3] == 292);
    CHECK(e.digits[4] == 1);
    CHECK(e.digits[5] == 1);
    CHECK(e.digits[6] == 1);
    CHECK(e.digits[7] == 2);

    auto c = real_convergents(e.digits);
    CHECK(c[0].p == 1);
    CHECK(c[0].q == 7);
    CHECK(c[1].p == 15);
    CHECK(c[1].q == 106);
    CHECK(c[2].p == 16);
    CHECK(c[2].q == 113);
    CHECK(c[3].p == 4687);
    CHECK(c[3].q == 33102);
}

TEST_CASE("nearest-integer digits") {
    RealCFExpansion e = nearest_int_expand(Rational(2, 5), 64);
    CHECK(e.terminated);
    CHECK(e.flavor == RealCFFlavor::NearestInteger);
    CHECK(e.digits == digs({3, -2}));

    CHECK(nearest_int_expand(Rational(-1, 3), 64).digits == digs({-3}));
    CHECK(nearest_int_expand(Rational(-1, 2), 64).digits == digs({-2}));

    CHECK_THROWS_AS(nearest_int_expand(Rational(0), 64), std::domain_error);
    CHECK_THROWS_AS(nearest_int_expand(Rational(1, 2), 64), std::domain_error);
    CHECK_THROWS_AS(nearest_int_expand(Rational(-3, 5), 64), std::domain_error);

    // Digits always have absolute value at least 2, for floats too.
    RealCFExpansion f = nearest_int_expand(kPiFrac, 20);
    REQUIRE(f.digits.size() == 20);
    CHECK(f.digits[0] == 7);
    CHECK(f.digits[1] == 16);
    for (const BigInt& a : f.digits) CHECK(boost::multiprecision::abs(a) >= 2);

    std::mt19937_64 rng(61);
    std::uniform_int_distribution<long long> den(2, 400);
    for (int k = 0; k < 200; ++k) {
        long long d = den(rng);
        std::uniform_int_distribution<long long> num(-(d / 2), (d - 1) / 2);
        long long n = num(rng);
        if (n == 0) continue;
        for (const BigInt& a : nearest_int_expand(Rational(n, d), 256).digits)
            CHECK(boost::multiprecision::abs(a) >= 2);
    }
}

TEST_CASE("property: gauss digits equal Euclid quotients") {
    std::mt19937_64 rng(67);
    std::uniform_int_distribution<long long> den(2, 5000);
    for (int k = 0; k < 300; ++k) {
        long long q = den(rng);
        std::uniform_int_distribution<long long> num(1, q - 1);
        Rational x(num(rng), q);

        std::vector<BigInt> euclid;
        BigInt a = x.den(), b = x.num();  // reduced, so gcd ends at 1
        while (b != 0) {
            euclid.push_back(a / b);
            BigInt r = a % b;
            a = b;
            b = r;
        }
        RealCFExpansion e = gauss_expand(x, 256);
        CHECK(e.terminated);
        CHECK(e.digits == euclid);
    }
}

TEST_CASE("property: convergents reconstruct and interleave") {
    std::mt19937_64 rng(71);
    std::uniform_int_distribution<long long> den(2, 3000);
    for (int k = 0; k < 200; ++k) {
        long long q = den(rng);
        std::uniform_int_distribution<long long> num(1, q - 1);
        Rational x(num(rng), q);
        RealCFExpansion e = gauss_expand(x, 256);
        REQUIRE(e.terminated);
        auto c = real_convergents(e.digits);
        REQUIRE(!c.empty());

        BigInt p_prev(0), q_prev(1);  // (p_0, q_0)
        for (std::size_t n = 0; n < c.size(); ++n) {
            CHECK(c[n].q > 0);
            if (n > 0) CHECK(c[n].q > c[n - 1].q);
            BigInt det = c[n].p * q_prev - p_prev * c[n].q;
            CHECK(det == (n % 2 == 0 ? 1 : -1));
            p_prev = c[n].p;
            q_prev = c[n].q;
        }
        CHECK(Rational(c.back().p, c.back().q) == x);

        // The first convergent 1/a_1 overestimates; signs alternate after it.
        for (std::size_t n = 0; n + 1 < c.size(); ++n) {
            Rational v(c[n].p, c[n].q);
            if (n % 2 == 0) CHECK(v > x);
            else CHECK(v < x);
        }
    }
}

TEST_CASE("best approximation checker") {
    CHECK(best_approx_check(kPiFrac, 1, 7, 7));
    CHECK(best_approx_check(kPiFrac, 15, 106, 106));
    CHECK(best_approx_check(kPiFrac, 16, 113, 113));
    CHECK(!best_approx_check(kPiFrac, 1, 6, 7));
    CHECK(!best_approx_check(kPiFrac, 1, 7, 106));  // 15/106 beats it in range
    CHECK_THROWS_AS(best_approx_check(kPiFrac, 1, 0, 7), std::domain_error);
    CHECK_THROWS_AS(best_approx_check(kPiFrac, 1, 8, 7), std::domain_error);
}

TEST_CASE("property: early convergents of irrationals are best approximations") {
    const long double xs[] = {
        kPiFrac,
        std::numbers::e_v<long double> - 2.0L,
        std::numbers::sqrt2_v<long double> - 1.0L,
        std::numbers::phi_v<long double> - 1.0L,
    };
    for (long double x : xs) {
        RealCFExpansion e = gauss_expand(x, 8);
        auto c = real_convergents(e.digits);
        REQUIRE(c.size() == 8);
        for (const RealConvergent& rc : c) {
            long long p = rc.p.convert_to<long long>();
            long long q = rc.q.convert_to<long long>();
            CHECK(best_approx_check(x, p, q, q));
        }
    }
}

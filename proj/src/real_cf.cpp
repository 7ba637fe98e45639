#include "hurwitz/real_cf.hpp"

#include <cmath>

namespace hurwitz {

namespace {

constexpr long double kFloatZero = 1e-18L;

}  // namespace

RealCFExpansion gauss_expand(const Rational& x, std::size_t max_steps) {
    if (!(Rational(0) < x && x < Rational(1)))
        throw std::domain_error("gauss_expand: x outside (0,1)");
    RealCFExpansion out;
    out.flavor = RealCFFlavor::Classical;
    Rational cur = x;
    for (std::size_t n = 0; n < max_steps; ++n) {
        if (cur.is_zero()) {
            out.terminated = true;
            return out;
        }
        Rational inv = cur.reciprocal();
        BigInt a = inv.floor();
        out.digits.push_back(a);
        cur = inv - Rational(a);
    }
    out.terminated = cur.is_zero();
    return out;
}

RealCFExpansion gauss_expand(long double x, std::size_t max_steps) {
    if (!(0.0L < x && x < 1.0L))
        throw std::domain_error("gauss_expand: x outside (0,1)");
    RealCFExpansion out;
    out.flavor = RealCFFlavor::Classical;
    long double cur = x;
    for (std::size_t n = 0; n < max_steps; ++n) {
        if (cur < kFloatZero) {
            out.terminated = true;
            return out;
        }
        long double inv = 1.0L / cur;
        long double a = std::floor(inv);
        out.digits.push_back(BigInt(a));
        cur = inv - a;
    }
    out.terminated = cur < kFloatZero;
    return out;
}

RealCFExpansion nearest_int_expand(const Rational& x, std::size_t max_steps) {
    Rational half(1, 2);
    if (!(-half <= x && x < half))
        throw std::domain_error("nearest_int_expand: x outside [-1/2, 1/2)");
    if (x.is_zero()) throw std::domain_error("nearest_int_expand: x = 0");
    RealCFExpansion out;
    out.flavor = RealCFFlavor::NearestInteger;
    Rational cur = x;
    for (std::size_t n = 0; n < max_steps; ++n) {
        if (cur.is_zero()) {
            out.terminated = true;
            return out;
        }
        Rational inv = cur.reciprocal();
        // The digit putting the remainder back into [-1/2, 1/2).
        BigInt a = (inv + half).floor();
        out.digits.push_back(a);
        cur = inv - Rational(a);
    }
    out.terminated = cur.is_zero();
    return out;
}

RealCFExpansion nearest_int_expand(long double x, std::size_t max_steps) {
    if (!(-0.5L <= x && x < 0.5L))
        throw std::domain_error("nearest_int_expand: x outside [-1/2, 1/2)");
    if (x == 0.0L) throw std::domain_error("nearest_int_expand: x = 0");
    RealCFExpansion out;
    out.flavor = RealCFFlavor::NearestInteger;
    long double cur = x;
    for (std::size_t n = 0; n < max_steps; ++n) {
        if (std::fabs(cur) < kFloatZero) {
            out.terminated = true;
            return out;
        }
        long double inv = 1.0L / cur;
        long double a = std::floor(inv + 0.5L);
        out.digits.push_back(BigInt(a));
        cur = inv - a;
    }
    out.terminated = std::fabs(cur) < kFloatZero;
    return out;
}

std::vector<RealConvergent> real_convergents(const std::vector<BigInt>& digits) {
    std::vector<GaussianInt> lifted;
    lifted.reserve(digits.size());
    for (const BigInt& d : digits) lifted.emplace_back(d, BigInt(0));
    std::vector<RealConvergent> out;
    out.reserve(digits.size());
    for (const ConvergentPair& cp : convergents(lifted)) {
        if (cp.p.im != 0 || cp.q.im != 0)
            throw std::logic_error("real_convergents: imaginary part crept in");
        out.push_back({cp.p.re, cp.q.re});
    }
    return out;
}

bool best_approx_check(long double x, long long p, long long q, long long q_bound) {
    if (q < 1 || q_bound < q) throw std::domain_error("best_approx_check: need q_bound >= q >= 1");
    long double err = std::fabs(static_cast<long double>(p) / q - x);
    for (long long qp = 1; qp <= q_bound; ++qp) {
        long long base = static_cast<long long>(std::floor(qp * x));
        for (long long pp = base; pp <= base + 1; ++pp) {
            if (pp == p && qp == q) continue;
            if (std::fabs(static_cast<long double>(pp) / qp - x) <= err) return false;
        }
    }
    return true;
}

}  // namespace hurwitz

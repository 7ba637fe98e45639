#include "hurwitz/rho_bound.hpp"

#include <cmath>

namespace hurwitz {

RhoBound::RhoBound(const Alpha& alpha) : m_(0) {
    for (const GaussianRational& corner : alpha.closed_box().corners()) {
        Rational n = corner.norm_sq();
        if (n > m_) m_ = n;
    }
}

int RhoBound::compare_radius_sq(const Rational& r_sq) const {
    // r_sq vs (1 - sqrt(m))^2 / 4  <=>  t := 4 r_sq - 1 - m vs -2 sqrt(m).
    Rational t = Rational(4) * r_sq - Rational(1) - m_;
    if (m_.is_zero()) return t.sign();
    if (t.sign() >= 0) return 1;
    Rational lhs = t * t, rhs = Rational(4) * m_;
    if (lhs < rhs) return 1;
    if (lhs == rhs) return 0;
    return -1;
}

BigInt RhoBound::floor_ratio(const BigInt& k) const {
    if (!positive()) throw std::domain_error("RhoBound::floor_ratio: rho_min = 0");
    if (k < 1) throw std::domain_error("RhoBound::floor_ratio: k < 1");

    // n <= k / (1 - sqrt(m))  <=>  n - k <= n sqrt(m), decided by squaring.
    auto below = [&](const BigInt& n) {
        BigInt d = n - k;
        if (d <= 0) return true;
        return d * d * m_.den() <= n * n * m_.num();
    };
    long double est = k.convert_to<long double>() / (1.0L - std::sqrt(m_.to_long_double()));
    BigInt n = BigInt(std::floor(est)) - 2;
    if (n < k) n = k;  // the ratio is >= k since 0 < 1 - sqrt(m) <= 1
    while (below(n + 1)) ++n;
    while (!below(n)) --n;
    return n;
}

double RhoBound::rho_min() const {
    double v = (1.0 - std::sqrt(m_.to_double())) / 2.0;
    return v > 0.0 ? v : 0.0;
}

}  // namespace hurwitz

#include "hurwitz/cf.hpp"

#include <cmath>

namespace hurwitz {

GaussianInt floor_alpha(const GaussianRational& z, const Alpha& alpha) {
    return {(z.re - alpha.a1).floor() + 1, (z.im - alpha.a2).floor() + 1};
}

GaussianInt floor_alpha(std::complex<double> z, const Alpha& alpha) {
    // The floored doubles are integral, so the BigInt conversion is exact
    // even when a reciprocal near 0 has produced a huge component.
    BigInt re(std::floor(z.real() - alpha.a1.to_double()) + 1.0);
    BigInt im(std::floor(z.imag() - alpha.a2.to_double()) + 1.0);
    return {re, im};
}

std::pair<GaussianInt, GaussianRational> t_alpha_step_exact(const GaussianRational& z,
                                                            const Alpha& alpha) {
    if (z.is_zero()) throw std::domain_error("t_alpha_step: z = 0");
    if (!alpha.contains_closed(z))
        throw std::domain_error("t_alpha_step: z outside the domain square");
    GaussianRational u = z.reciprocal();
    GaussianInt w = floor_alpha(u, alpha);
    return {w, u - GaussianRational(w)};
}

CFExpansion expand(const GaussianRational& z, const Alpha& alpha, const ExpandOptions& opt) {
    if (!alpha.in_D && !opt.allow_outside_D)
        throw std::domain_error("expand: alpha outside D (expansion may not represent z)");
    if (!alpha.contains_closed(z))
        throw std::domain_error("expand: z outside the domain square");

    CFExpansion out;
    GaussianRational cur = z;
    for (std::size_t n = 0; n < opt.max_steps; ++n) {
        if (cur.is_zero()) {
            out.terminated = true;
            return out;
        }
        auto [w, next] = t_alpha_step_exact(cur, alpha);
        out.digits.push_back(w);
        cur = std::move(next);
    }
    if (cur.is_zero()) out.terminated = true;
    else out.truncated_at = opt.max_steps;
    return out;
}

CFExpansion expand(std::complex<double> z, const Alpha& alpha, const ExpandOptions& opt) {
    if (!alpha.in_D && !opt.allow_outside_D)
        throw std::domain_error("expand: alpha outside D (expansion may not represent z)");
    if (!alpha.contains_closed(z))
        throw std::domain_error("expand: z outside the domain square");

    CFExpansion out;
    std::complex<double> cur = z;
    for (std::size_t n = 0; n < opt.max_steps; ++n) {
        if (std::abs(cur) < opt.zero_epsilon) {
            out.terminated = true;
            return out;
        }
        std::complex<double> u = 1.0 / cur;
        GaussianInt w = floor_alpha(u, alpha);
        out.digits.push_back(w);
        cur = u - std::complex<double>(w.re.convert_to<double>(), w.im.convert_to<double>());
    }
    if (std::abs(cur) < opt.zero_epsilon) out.terminated = true;
    else out.truncated_at = opt.max_steps;
    return out;
}

GaussianRational evaluate_cf(const std::vector<GaussianInt>& digits) {
    if (digits.empty()) throw std::domain_error("evaluate_cf: empty digit string");
    GaussianRational t(digits.back());
    for (std::size_t k = digits.size() - 1; k-- > 0;) {
        if (t.is_zero()) throw std::domain_error("evaluate_cf: interior division by zero");
        t = GaussianRational(digits[k]) + t.reciprocal();
    }
    if (t.is_zero()) throw std::domain_error("evaluate_cf: division by zero at top level");
    return t.reciprocal();
}

std::vector<ConvergentPair> convergents(const std::vector<GaussianInt>& digits) {
    std::vector<ConvergentPair> out;
    out.reserve(digits.size());
    GaussianInt p_prev(1), p_cur(0), q_prev(0), q_cur(1);
    for (const GaussianInt& a : digits) {
        GaussianInt p_next = a * p_cur + p_prev;
        GaussianInt q_next = a * q_cur + q_prev;
        out.push_back({p_next, q_next});
        p_prev = std::move(p_cur);
        p_cur = std::move(p_next);
        q_prev = std::move(q_cur);
        q_cur = std::move(q_next);
    }
    return out;
}

GaussianInt cylinder_digit(const GaussianRational& z, const Alpha& alpha) {
    return t_alpha_step_exact(z, alpha).first;
}

GaussianInt cylinder_digit(std::complex<double> z, const Alpha& alpha) {
    if (std::abs(z) == 0.0) throw std::domain_error("cylinder_digit: z = 0");
    if (!alpha.contains_closed(z))
        throw std::domain_error("cylinder_digit: z outside the domain square");
    return floor_alpha(1.0 / z, alpha);
}

}  // namespace hurwitz

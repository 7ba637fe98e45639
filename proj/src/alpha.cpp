#include "hurwitz/alpha.hpp"

namespace hurwitz {

bool in_domain_D(const Rational& a1, const Rational& a2) {
    auto dist_sq = [&](long long cx, long long cy) {
        Rational dx = a1 - Rational(cx), dy = a2 - Rational(cy);
        return dx * dx + dy * dy;
    };
    Rational one(1);
    return dist_sq(0, 0) < one        // open ball at the origin
        && dist_sq(1, 0) <= one
        && dist_sq(0, 1) <= one
        && dist_sq(1, 1) <= one;
}

}  // namespace hurwitz

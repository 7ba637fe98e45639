#include "hurwitz/gaussian.hpp"

#include <cctype>

namespace hurwitz {

namespace {

std::string complex_str(const std::string& re, const std::string& im,
                        bool re_zero, bool im_zero, bool im_neg) {
    if (im_zero) return re;
    std::string unit = (im == "1" || im == "-1") ? (im_neg ? "-i" : "i") : im + "i";
    if (re_zero) return unit;
    return re + (im_neg ? "" : "+") + unit;
}

}  // namespace

std::string GaussianInt::str() const {
    return complex_str(re.str(), im.str(), re == 0, im == 0, im < 0);
}

std::string GaussianRational::str() const {
    return complex_str(re.str(), im.str(), re.is_zero(), im.is_zero(), im.sign() < 0);
}

GaussianRational parse_gaussian_rational(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("parse_gaussian_rational: empty string");

    if (auto comma = s.find(','); comma != std::string::npos)
        return {Rational::parse(s.substr(0, comma)), Rational::parse(s.substr(comma + 1))};

    if (s.back() != 'i') return {Rational::parse(s), Rational()};

    s.pop_back();
    // Split off the trailing signed term; a sign at position 0 belongs to the
    // single remaining term.
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;)
        if (s[k] == '+' || s[k] == '-') { split = k; break; }

    auto coeff = [](std::string t) {
        if (t.empty() || t == "+") return Rational(1);
        if (t == "-") return Rational(-1);
        return Rational::parse(t);
    };
    if (split == std::string::npos) return {Rational(), coeff(s)};
    return {Rational::parse(s.substr(0, split)), coeff(s.substr(split))};
}

}  // namespace hurwitz

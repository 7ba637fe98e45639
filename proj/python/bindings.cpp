// Python bindings. Exact values cross the boundary as decimal strings
// ("p/q" for rationals, plain integers for digit components); the package
// __init__ converts them to int / Fraction on the way out.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hurwitz/cells.hpp"
#include "hurwitz/real_cf.hpp"
#include "hurwitz/svg.hpp"

#include <complex>
#include <utility>
#include <vector>

namespace py = pybind11;
using namespace hurwitz;

namespace {

using StrPair = std::pair<std::string, std::string>;

GaussianInt gi_of(const StrPair& d) { return {BigInt(d.first), BigInt(d.second)}; }

py::dict expansion_dict(const CFExpansion& e) {
    py::list digits;
    for (const GaussianInt& d : e.digits)
        digits.append(py::make_tuple(d.re.str(), d.im.str()));
    py::dict out;
    out["digits"] = std::move(digits);
    out["terminated"] = e.terminated;
    return out;
}

py::dict report_dict(const PartitionReport& r) {
    py::dict out;
    out["circle_count"] = r.circle_count;
    out["node_count"] = r.node_count;
    out["stabilized"] = r.stabilized;
    out["depth_reached"] = r.depth_reached;
    out["rho_min"] = r.rho_min_approx;
    out["bound_applicable"] = r.bound_applicable;
    out["n_alpha"] = r.n_alpha ? py::object(py::str(r.n_alpha->str())) : py::none();
    out["b_norm_sq_max"] =
        r.b_norm_sq_max ? py::object(py::str(r.b_norm_sq_max->str())) : py::none();
    out["elapsed_seconds"] = r.elapsed_seconds;
    return out;
}

}  // namespace

PYBIND11_MODULE(_hurwitz, m) {
    m.doc() = "exact alpha-Hurwitz continued fractions (string-based core)";

    m.def(
        "in_domain",
        [](const std::string& a1, const std::string& a2, const std::string& re,
           const std::string& im) {
            return Alpha::parse(a1, a2).contains(
                GaussianRational{Rational::parse(re), Rational::parse(im)});
        },
        py::arg("a1"), py::arg("a2"), py::arg("re"), py::arg("im"),
        "half-open membership of an exact point in the domain square");

    m.def(
        "expand_exact",
        [](const std::string& a1, const std::string& a2, const std::string& re,
           const std::string& im, std::size_t max_steps) {
            ExpandOptions opt;
            opt.max_steps = max_steps;
            return expansion_dict(expand(
                GaussianRational{Rational::parse(re), Rational::parse(im)},
                Alpha::parse(a1, a2), opt));
        },
        py::arg("a1"), py::arg("a2"), py::arg("re"), py::arg("im"),
        py::arg("max_steps") = 4096);

    m.def(
        "expand_float",
        [](const std::string& a1, const std::string& a2, double re, double im,
           std::size_t max_steps, double zero_epsilon) {
            ExpandOptions opt;
            opt.max_steps = max_steps;
            opt.zero_epsilon = zero_epsilon;
            return expansion_dict(
                expand(std::complex<double>(re, im), Alpha::parse(a1, a2), opt));
        },
        py::arg("a1"), py::arg("a2"), py::arg("re"), py::arg("im"),
        py::arg("max_steps") = 64, py::arg("zero_epsilon") = 1e-12);

    m.def(
        "evaluate_cf",
        [](const std::vector<StrPair>& digits) {
            std::vector<GaussianInt> d;
            d.reserve(digits.size());
            for (const StrPair& p : digits) d.push_back(gi_of(p));
            GaussianRational v = evaluate_cf(d);
            return std::make_pair(v.re.str(), v.im.str());
        },
        py::arg("digits"), "value of a finite digit string as exact rationals");

    m.def(
        "convergents",
        [](const std::vector<StrPair>& digits) {
            std::vector<GaussianInt> d;
            d.reserve(digits.size());
            for (const StrPair& p : digits) d.push_back(gi_of(p));
            py::list out;
            for (const ConvergentPair& c : convergents(d))
                out.append(py::make_tuple(py::make_tuple(c.p.re.str(), c.p.im.str()),
                                          py::make_tuple(c.q.re.str(), c.q.im.str())));
            return out;
        },
        py::arg("digits"));

    m.def(
        "gauss_expand",
        [](const std::string& num, const std::string& den, std::size_t max_steps) {
            RealCFExpansion e =
                gauss_expand(Rational(BigInt(num), BigInt(den)), max_steps);
            std::vector<std::string> out;
            for (const BigInt& a : e.digits) out.push_back(a.str());
            return out;
        },
        py::arg("num"), py::arg("den"), py::arg("max_steps") = 64);

    m.def(
        "nearest_int_expand",
        [](const std::string& num, const std::string& den, std::size_t max_steps) {
            RealCFExpansion e =
                nearest_int_expand(Rational(BigInt(num), BigInt(den)), max_steps);
            std::vector<std::string> out;
            for (const BigInt& a : e.digits) out.push_back(a.str());
            return out;
        },
        py::arg("num"), py::arg("den"), py::arg("max_steps") = 64);

    m.def(
        "real_convergents",
        [](const std::vector<std::string>& digits) {
            std::vector<BigInt> d;
            d.reserve(digits.size());
            for (const std::string& s : digits) d.emplace_back(s);
            std::vector<StrPair> out;
            for (const RealConvergent& c : real_convergents(d))
                out.emplace_back(c.p.str(), c.q.str());
            return out;
        },
        py::arg("digits"));

    m.def(
        "best_approx_check",
        [](double x, long long p, long long q, long long q_bound) {
            return best_approx_check(x, p, q, q_bound);
        },
        py::arg("x"), py::arg("p"), py::arg("q"), py::arg("q_bound"),
        "is p/q optimal among denominators up to q_bound");

    m.def(
        "partition",
        [](const std::string& a1, const std::string& a2, std::size_t max_depth,
           unsigned workers) {
            ClosureOptions opt;
            opt.max_depth = max_depth;
            opt.workers = workers;
            auto [set, rep] = closure(Alpha::parse(a1, a2), opt);
            return report_dict(rep);
        },
        py::arg("a1"), py::arg("a2"), py::arg("max_depth") = 64,
        py::arg("workers") = 1, "run the closure and return its report");

    m.def(
        "circles",
        [](const std::string& a1, const std::string& a2) {
            auto [set, rep] = closure(Alpha::parse(a1, a2));
            py::list out;
            for (const GenCircle& g : set.circles) {
                py::dict d;
                d["a"] = g.a().str();
                d["b_re"] = g.b().re.str();
                d["b_im"] = g.b().im.str();
                d["c"] = g.c().str();
                d["is_line"] = g.is_line();
                out.append(std::move(d));
            }
            return out;
        },
        py::arg("a1"), py::arg("a2"), "coefficient list of the stabilized circle set");

    m.def(
        "verify_invariants",
        [](const std::string& a1, const std::string& a2) {
            auto [set, rep] = closure(Alpha::parse(a1, a2));
            return rep.stabilized && verify_closure_invariants(set).passed;
        },
        py::arg("a1"), py::arg("a2"));

    m.def(
        "cell_count",
        [](const std::string& a1, const std::string& a2, int grid) {
            Alpha a = Alpha::parse(a1, a2);
            auto [set, rep] = closure(a);
            return cell_decomposition(set, a, grid).cell_count;
        },
        py::arg("a1"), py::arg("a2"), py::arg("grid") = 500);

    m.def(
        "render_svg",
        [](const std::string& a1, const std::string& a2, int width, int height) {
            auto [set, rep] = closure(Alpha::parse(a1, a2));
            RenderSpec spec;
            spec.width_px = width;
            spec.height_px = height;
            return render_svg(set, spec);
        },
        py::arg("a1"), py::arg("a2"), py::arg("width") = 900, py::arg("height") = 900);
}

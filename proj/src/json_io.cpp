#include "hurwitz/json_io.hpp"

#include <limits>
#include <sstream>

namespace hurwitz {

namespace {

std::int64_t to_int64(const BigInt& v, const char* what) {
    if (v > std::numeric_limits<std::int64_t>::max() ||
        v < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error(std::string(what) + " does not fit in int64");
    return v.convert_to<std::int64_t>();
}

Json options_to_json(const ClosureOptions& o) {
    Json j;
    j["max_nodes"] = o.max_nodes;
    j["max_depth"] = o.max_depth;
    j["workers"] = o.workers;
    j["tight"] = o.tight;
    return j;
}

}  // namespace

Json circle_to_json(const GenCircle& g) {
    auto k = g.canonical_key();
    Json j;
    j["a"] = to_int64(k[0], "circle coefficient a");
    j["b_re"] = to_int64(k[1], "circle coefficient b_re");
    j["b_im"] = to_int64(k[2], "circle coefficient b_im");
    j["c"] = to_int64(k[3], "circle coefficient c");
    return j;
}

Json alpha_to_json(const Alpha& alpha) {
    return Json::array({alpha.a1.str(), alpha.a2.str()});
}

Json expansion_to_json(const Alpha& alpha, const std::string& z_text, const CFExpansion& e) {
    Json j;
    j["alpha"] = alpha_to_json(alpha);
    j["z"] = z_text;
    Json digits = Json::array();
    for (const GaussianInt& d : e.digits)
        digits.push_back(Json::array({to_int64(d.re, "digit re"), to_int64(d.im, "digit im")}));
    j["digits"] = std::move(digits);
    j["terminated"] = e.terminated;
    return j;
}

Json partition_to_json(const CircleSet& set, const PartitionReport& report,
                       bool with_timings) {
    Json j;
    j["alpha"] = alpha_to_json(set.alpha);
    Json circles = Json::array();
    for (const GenCircle& g : set.circles) circles.push_back(circle_to_json(g));
    j["circles"] = std::move(circles);

    Json r;
    r["circle_count"] = report.circle_count;
    r["node_count"] = report.node_count;
    r["stabilized"] = report.stabilized;
    r["depth_reached"] = report.depth_reached;
    r["bound_applicable"] = report.bound_applicable;
    r["corner_norm_sq_max"] = report.rho_min_m.str();
    r["rho_min_approx"] = report.rho_min_approx;
    r["n_alpha"] = report.n_alpha ? Json(to_int64(*report.n_alpha, "n_alpha")) : Json(nullptr);
    r["b_norm_sq_max"] =
        report.b_norm_sq_max ? Json(to_int64(*report.b_norm_sq_max, "b_norm_sq_max"))
                             : Json(nullptr);
    r["cell_count"] = report.cell_count ? Json(*report.cell_count) : Json(nullptr);
    r["options"] = options_to_json(report.options);
    r["timings"] = with_timings ? Json{{"elapsed_seconds", report.elapsed_seconds}}
                                : Json(nullptr);
    j["report"] = std::move(r);
    return j;
}

Json markov_report_to_json(const MarkovReport& rep) {
    Json j;
    j["passed"] = rep.passed;
    j["pair_count"] = rep.pair_count;
    j["pass_count"] = rep.pass_count;
    j["fail_count"] = rep.fail_count;
    j["inconclusive_count"] = rep.inconclusive_count;
    j["forward_samples"] = rep.forward_samples;
    j["forward_skipped"] = rep.forward_skipped;
    j["forward_unclassified"] = rep.forward_unclassified;
    Json fails = Json::array();
    for (const MarkovPairResult& p : rep.pairs) {
        if (p.verdict != MarkovVerdict::Fail) continue;
        Json f;
        f["cell"] = p.cell;
        f["digit"] = Json::array({p.digit_re, p.digit_im});
        f["violations"] = p.violations;
        f["detail"] = p.first_violation;
        fails.push_back(std::move(f));
    }
    j["failures"] = std::move(fails);
    return j;
}

Json orbit_report_to_json(const OrbitReport& rep) {
    Json j;
    j["passed"] = rep.passed;
    j["samples"] = rep.samples;
    j["orbit_points_checked"] = rep.orbit_points_checked;
    j["terminated_orbits"] = rep.terminated_orbits;
    j["max_distance_seen"] = rep.max_distance_seen;
    Json v = Json::array();
    for (const OrbitViolation& w : rep.violations) {
        Json f;
        f["sample"] = w.sample_index;
        f["step"] = w.step;
        f["point"] = Json::array({w.x, w.y});
        f["distance"] = w.distance;
        f["digits"] = w.digit_history;
        v.push_back(std::move(f));
    }
    j["violations"] = std::move(v);
    return j;
}

std::string real_cf_to_csv(const RealCFExpansion& e, bool with_approx) {
    std::ostringstream out;
    out << (with_approx ? "n,digit,p,q,approx\n" : "n,digit,p,q\n");
    auto conv = real_convergents(e.digits);
    for (std::size_t n = 0; n < e.digits.size(); ++n) {
        out << (n + 1) << ',' << e.digits[n].str() << ',' << conv[n].p.str() << ','
            << conv[n].q.str();
        if (with_approx) {
            std::ostringstream a;
            a.precision(17);
            a << (conv[n].p.convert_to<double>() / conv[n].q.convert_to<double>());
            out << ',' << a.str();
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace hurwitz

#include "hurwitz/json_io.hpp"
#include "hurwitz/svg.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

namespace {

using namespace hurwitz;

Alpha parse_alpha_arg(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos)
        throw CLI::ValidationError("--alpha", "expected \"a1,a2\" with rational components");
    return Alpha::parse(text.substr(0, comma), text.substr(comma + 1));
}

Alpha require_in_D(const std::string& text) {
    Alpha a = parse_alpha_arg(text);
    if (!a.in_D)
        throw CLI::ValidationError("--alpha", "alpha " + a.str() +
                                       " lies outside the admissible parameter domain");
    return a;
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + path);
    f << content;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void add_closure_options(CLI::App* sub, ClosureOptions& opt) {
    sub->add_option("--max-nodes", opt.max_nodes, "Node cap for the closure search")
        ->envname("HURWITZ_MAX_NODES")
        ->capture_default_str();
    sub->add_option("--max-depth", opt.max_depth, "Depth cap for the closure search")
        ->envname("HURWITZ_MAX_DEPTH")
        ->capture_default_str();
    sub->add_option("--workers", opt.workers, "Worker threads (output is identical for any count)")
        ->envname("HURWITZ_WORKERS")
        ->capture_default_str();
    sub->add_flag("--tight", opt.tight,
                  "Keep only digits observed on the parent arc (smaller circle set)");
}

struct FigureJob {
    const char* file;
    const char* a1;
    const char* a2;
};
constexpr FigureJob kFigures[] = {
    {"figure1.svg", "1/2", "1/2"},
    {"figure4a.svg", "2/3", "1/2"},
    {"figure4b.svg", "2/3", "2/3"},
    {"figure4c.svg", "1/5", "3/5"},
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"alpha-Hurwitz continued fractions: expansions, circle closures, partition checks"};
    app.require_subcommand(1);
    int rc = 0;

    // ---- check-d ----------------------------------------------------------
    auto* cd = app.add_subcommand("check-d", "Test whether alpha lies in the parameter domain");
    auto cd_alpha = std::make_shared<std::string>();
    cd->add_option("--alpha", *cd_alpha, "Parameter pair \"a1,a2\", e.g. \"1/2,1/2\"")
        ->required();
    cd->callback([cd_alpha, &rc] {
        Alpha a = parse_alpha_arg(*cd_alpha);
        Json j;
        j["alpha"] = alpha_to_json(a);
        j["in_D"] = a.in_D;
        std::cout << dump(j);
        rc = a.in_D ? 0 : 1;
    });

    // ---- expand ------------------------------------------------------------
    auto* ex = app.add_subcommand("expand", "Expand a complex number into alpha-Hurwitz digits");
    struct ExpandArgs {
        std::string alpha, z, out;
        std::size_t max_steps = 64;
        bool use_float = false;
        bool check_roundtrip = false;
    };
    auto ea = std::make_shared<ExpandArgs>();
    ex->add_option("--alpha", ea->alpha, "Parameter pair \"a1,a2\"")->required();
    ex->add_option("--z", ea->z, "Complex rational, e.g. \"1/3,-2/7\" or \"1/3-2/7i\"")
        ->required();
    ex->add_option("--max-steps", ea->max_steps, "Digit cap")->capture_default_str();
    ex->add_flag("--float", ea->use_float, "Use the floating-point expansion");
    ex->add_flag("--check-roundtrip", ea->check_roundtrip,
                 "Re-evaluate the digits and compare with z (exact, terminating only)");
    ex->add_option("-o,--out", ea->out, "Output file (default stdout)");
    ex->callback([ea, &rc] {
        Alpha a = require_in_D(ea->alpha);
        GaussianRational z = parse_gaussian_rational(ea->z);
        ExpandOptions opt;
        opt.max_steps = ea->max_steps;
        CFExpansion e = ea->use_float ? expand(z.to_complex(), a, opt) : expand(z, a, opt);
        write_output(ea->out, dump(expansion_to_json(a, z.str(), e)));
        if (ea->check_roundtrip) {
            if (ea->use_float || !e.terminated || e.digits.empty()) {
                std::cerr << "roundtrip check needs an exact, terminating, nonempty expansion\n";
                rc = 1;
            } else if (evaluate_cf(e.digits) != z) {
                std::cerr << "roundtrip mismatch: digits evaluate to "
                          << evaluate_cf(e.digits).str() << ", expected " << z.str() << "\n";
                rc = 1;
            }
        }
    });

    // ---- real-cf ----------------------------------------------------------
    auto* rcf = app.add_subcommand("real-cf", "Classical or nearest-integer real expansion (CSV)");
    struct RealArgs {
        std::string x, flavor = "classical", out;
        std::size_t max_steps = 64;
        bool use_float = false;
        bool approx = false;
    };
    auto ra = std::make_shared<RealArgs>();
    rcf->add_option("--x", ra->x, "Real number: \"p/q\", integer, or decimal")->required();
    rcf->add_option("--flavor", ra->flavor, "classical | nearest")
        ->check(CLI::IsMember({"classical", "nearest"}))
        ->capture_default_str();
    rcf->add_option("--max-steps", ra->max_steps, "Digit cap")->capture_default_str();
    rcf->add_flag("--float", ra->use_float, "Treat x as long double instead of exact rational");
    rcf->add_flag("--approx", ra->approx, "Append a decimal approximation column");
    rcf->add_option("-o,--out", ra->out, "Output file (default stdout)");
    rcf->callback([ra] {
        RealCFExpansion e;
        if (ra->use_float) {
            long double x = std::strtold(ra->x.c_str(), nullptr);
            e = ra->flavor == "nearest" ? nearest_int_expand(x, ra->max_steps)
                                        : gauss_expand(x, ra->max_steps);
        } else {
            Rational x = Rational::parse(ra->x);
            e = ra->flavor == "nearest" ? nearest_int_expand(x, ra->max_steps)
                                        : gauss_expand(x, ra->max_steps);
        }
        write_output(ra->out, real_cf_to_csv(e, ra->approx));
    });

    // ---- partition ---------------------------------------------------------
    auto* pt = app.add_subcommand("partition",
                                  "Compute the circle closure and emit the partition JSON");
    struct PartArgs {
        std::string alpha, out;
        ClosureOptions opt;
        int grid = 0;
        bool timings = false;
    };
    auto pa = std::make_shared<PartArgs>();
    pt->add_option("--alpha", pa->alpha, "Parameter pair \"a1,a2\"")->required();
    add_closure_options(pt, pa->opt);
    pt->add_option("--grid", pa->grid,
                   "Also count partition cells on an N x N midpoint grid (0 = skip)")
        ->capture_default_str();
    pt->add_flag("--timings", pa->timings, "Include wall-clock timing in the report");
    pt->add_option("-o,--out", pa->out, "Output file (default stdout)");
    pt->callback([pa, &rc] {
        Alpha a = require_in_D(pa->alpha);
        auto [set, report] = closure(a, pa->opt);
        if (pa->grid > 0) {
            CellDecomposition cells = cell_decomposition(set, a, pa->grid);
            report.cell_count = static_cast<std::size_t>(cells.cell_count);
        }
        write_output(pa->out, dump(partition_to_json(set, report, pa->timings)));
        if (!report.stabilized) {
            std::cerr << "closure hit its caps before stabilizing (nodes=" << report.node_count
                      << ", depth=" << report.depth_reached
                      << "); the circle list is a lower bound, not a certificate\n";
            rc = 1;
        }
    });

    // ---- render ------------------------------------------------------------
    auto* rd = app.add_subcommand("render", "Render the circle closure as an SVG figure");
    struct RenderArgs {
        std::string alpha, out, mode = "superset";
        ClosureOptions opt;
        RenderSpec spec;
    };
    auto da = std::make_shared<RenderArgs>();
    rd->add_option("--alpha", da->alpha, "Parameter pair \"a1,a2\"")->required();
    add_closure_options(rd, da->opt);
    rd->add_option("--mode", da->mode, "superset | realized")
        ->check(CLI::IsMember({"superset", "realized"}))
        ->capture_default_str();
    rd->add_option("--width", da->spec.width_px, "Pixel width")->capture_default_str();
    rd->add_option("--height", da->spec.height_px, "Pixel height")->capture_default_str();
    rd->add_option("--stroke", da->spec.stroke_width, "Stroke width in pixels")
        ->capture_default_str();
    rd->add_flag("--show-grid", da->spec.show_grid, "Draw a faint decile grid");
    rd->add_option("-o,--out", da->out, "Output file (default stdout)");
    rd->callback([da] {
        Alpha a = require_in_D(da->alpha);
        auto [set, report] = closure(a, da->opt);
        (void)report;
        da->spec.mode = da->mode == "realized" ? RenderMode::Realized : RenderMode::Superset;
        write_output(da->out, render_svg(set, da->spec));
    });

    // ---- verify ------------------------------------------------------------
    auto* vf = app.add_subcommand("verify",
                                  "Run invariant, Markov-property, and orbit checks");
    struct VerifyArgs {
        std::string alpha, out;
        ClosureOptions opt;
        int grid = 300;
        std::size_t markov_samples = 200;
        double markov_tolerance = 1e-9;
        std::size_t orbit_samples = 2000;
        int orbit_depth = 8;
        double orbit_tolerance = 1e-9;
        bool skip_invariants = false, skip_markov = false, skip_orbit = false;
    };
    auto va = std::make_shared<VerifyArgs>();
    vf->add_option("--alpha", va->alpha, "Parameter pair \"a1,a2\"")->required();
    add_closure_options(vf, va->opt);
    vf->add_option("--grid", va->grid, "Cell decomposition grid")->capture_default_str();
    vf->add_option("--markov-samples", va->markov_samples, "Samples per cell")
        ->capture_default_str();
    vf->add_option("--markov-tolerance", va->markov_tolerance, "Classification guard")
        ->capture_default_str();
    vf->add_option("--orbit-samples", va->orbit_samples, "Boundary samples")
        ->capture_default_str();
    vf->add_option("--orbit-depth", va->orbit_depth, "Orbit length")->capture_default_str();
    vf->add_option("--orbit-tolerance", va->orbit_tolerance, "Max distance to the circle set")
        ->capture_default_str();
    vf->add_flag("--skip-invariants", va->skip_invariants, "Skip the exact invariant checks");
    vf->add_flag("--skip-markov", va->skip_markov, "Skip the Markov-property falsifier");
    vf->add_flag("--skip-orbit", va->skip_orbit, "Skip the boundary-orbit oracle");
    vf->add_option("-o,--out", va->out, "Output file (default stdout)");
    vf->callback([va, &rc] {
        Alpha a = require_in_D(va->alpha);
        auto [set, report] = closure(a, va->opt);
        bool ok = report.stabilized;
        Json j;
        j["alpha"] = alpha_to_json(a);
        j["stabilized"] = report.stabilized;
        j["circle_count"] = report.circle_count;
        if (!va->skip_invariants) {
            VerificationSummary s = verify_closure_invariants(set);
            ok = ok && s.passed;
            Json inv;
            inv["passed"] = s.passed;
            inv["nodes_checked"] = s.nodes_checked;
            Json viol = Json::array();
            for (const InvariantViolation& v : s.violations) {
                Json e;
                e["node"] = v.node_index;
                e["what"] = v.what;
                e["chain"] = v.chain;
                viol.push_back(std::move(e));
            }
            inv["violations"] = std::move(viol);
            j["invariants"] = std::move(inv);
        }
        if (!va->skip_markov) {
            CellDecomposition cells = cell_decomposition(set, a, va->grid);
            MarkovReport m = verify_markov(cells, set, a, va->markov_samples,
                                           va->markov_tolerance);
            ok = ok && m.passed;
            j["cell_count"] = cells.cell_count;
            j["markov"] = markov_report_to_json(m);
        }
        if (!va->skip_orbit) {
            OrbitReport o = boundary_orbit_oracle(a, set.circles, va->orbit_samples,
                                                  va->orbit_depth, va->orbit_tolerance);
            ok = ok && o.passed;
            j["orbit"] = orbit_report_to_json(o);
        }
        j["passed"] = ok;
        write_output(va->out, dump(j));
        if (!report.stabilized)
            std::cerr << "closure hit its caps before stabilizing; checks ran on a partial set\n";
        rc = ok ? 0 : 1;
    });

    // ---- all-figures -------------------------------------------------------
    auto* af = app.add_subcommand("all-figures", "Render the four standard example figures");
    struct FigArgs {
        std::string out_dir = ".";
        ClosureOptions opt;
    };
    auto fa = std::make_shared<FigArgs>();
    af->add_option("--out-dir", fa->out_dir, "Directory for the SVG files")
        ->capture_default_str();
    add_closure_options(af, fa->opt);
    af->callback([fa, &rc] {
        std::filesystem::create_directories(fa->out_dir);
        for (const FigureJob& job : kFigures) {
            Alpha a = Alpha::parse(job.a1, job.a2);
            auto [set, report] = closure(a, fa->opt);
            if (!report.stabilized) {
                std::cerr << job.file << ": closure hit its caps before stabilizing\n";
                rc = 1;
            }
            RenderSpec spec;
            std::string path = fa->out_dir + "/" + job.file;
            write_output(path, render_svg(set, spec));
            std::cout << path << ": " << report.circle_count << " circles\n";
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}

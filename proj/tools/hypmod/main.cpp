#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hypmod/numeric.hpp"
#include "hypmod/polar.hpp"
#include "report_io.hpp"
#include "svg_plot.hpp"
#include "verify_suite.hpp"

namespace {

using namespace hypmod;
using namespace hypmod::cli;

// polar i/o carries more digits than the 9-significant-digit reports so a
// printed pair survives a parse -> map -> print round trip within 1e-9
std::string g12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file)
        throw IoFailure("cannot open '" + path + "' for writing");
    file << content;
    file.flush();
    if (!file.good())
        throw IoFailure("failed while writing '" + path + "'");
}

// --- flat key=value config files ------------------------------------
// Values fill only options that were not given on the command line; flags
// always win. Unknown keys are ignored so one file can serve several
// subcommands.

using ConfigMap = std::map<std::string, std::string>;

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos)
        return "";
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

ConfigMap read_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw CLI::FileError::Missing(path);
    ConfigMap kv;
    std::string line;
    while (std::getline(in, line)) {
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#')
            continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos)
            throw CLI::FileError(path + ": expected key=value, got '" + stripped + "'");
        kv[trim(stripped.substr(0, eq))] = trim(stripped.substr(eq + 1));
    }
    return kv;
}

class ConfigScope {
public:
    ConfigScope(const CLI::App* sub, const std::string& path) : sub_(sub) {
        if (!path.empty())
            values_ = read_config_file(path);
    }

    void fill(const std::string& key, double& var) const {
        if (const std::string* raw = lookup(key)) {
            try {
                var = std::stod(*raw);
            } catch (const std::exception&) {
                throw CLI::ConversionError(key, *raw);
            }
        }
    }

    void fill(const std::string& key, int& var) const {
        if (const std::string* raw = lookup(key)) {
            try {
                var = std::stoi(*raw);
            } catch (const std::exception&) {
                throw CLI::ConversionError(key, *raw);
            }
        }
    }

    void fill(const std::string& key, unsigned& var) const {
        if (const std::string* raw = lookup(key)) {
            try {
                var = static_cast<unsigned>(std::stoul(*raw));
            } catch (const std::exception&) {
                throw CLI::ConversionError(key, *raw);
            }
        }
    }

    void fill(const std::string& key, std::string& var) const {
        if (const std::string* raw = lookup(key))
            var = *raw;
    }

    void fill(const std::string& key, bool& var) const {
        if (const std::string* raw = lookup(key))
            var = *raw == "1" || *raw == "true" || *raw == "yes";
    }

    bool has(const std::string& key) const {
        return values_.count(key) > 0 || sub_->count("--" + key) > 0;
    }

private:
    const std::string* lookup(const std::string& key) const {
        if (sub_->count("--" + key) > 0)
            return nullptr; // flag given explicitly, keep it
        const auto it = values_.find(key);
        return it == values_.end() ? nullptr : &it->second;
    }

    const CLI::App* sub_;
    ConfigMap values_;
};

void require_present(const ConfigScope& cfg, const std::string& key) {
    if (!cfg.has(key))
        throw CLI::RequiredError("--" + key);
}

// --- per-command validation shared by flag and config routes ----------

void check_positive(const std::string& name, double v) {
    if (!(v > 0.0))
        throw CLI::ValidationError(name + ": must be positive");
}

void check_grid(const std::string& name, int v) {
    if (v < 8 || v > 4096)
        throw CLI::ValidationError(name + ": must be in [8, 4096]");
}

void check_member(const std::string& name, const std::string& v,
                  std::initializer_list<const char*> allowed) {
    for (const char* ok : allowed)
        if (v == ok)
            return;
    throw CLI::ValidationError(name + ": invalid value '" + v + "'");
}

FamilyKind parse_quad_family(const std::string& name) {
    return name == "segments" ? FamilyKind::quad_segments : FamilyKind::quad_arcs;
}

FamilyKind parse_annulus_family(const std::string& name) {
    return name == "separating" ? FamilyKind::annulus_separating
                                : FamilyKind::annulus_joining;
}

void emit_report(const ModulusReport& report, unsigned seed,
                 const std::string& format, const std::string& out_path) {
    std::ostringstream os;
    if (format == "csv") {
        write_report_csv(os, report);
    } else {
        write_report_json(os, report, seed);
        os << "\n";
    }
    write_output(out_path, os.str());
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hypmod: moduli of curve families in hyperbolic-plane domains"};
    app.require_subcommand(1);

    // quad ------------------------------------------------------------
    auto* quad = app.add_subcommand(
        "quad", "modulus report for a normal quadrilateral family");
    double q_a = 0.0, q_b = 1.0, q_tol = 1e-9;
    unsigned q_seed = 0;
    std::string q_family = "arcs", q_format = "json", q_out, q_cfg;
    quad->add_option("--a", q_a, "outer parameter a (a >= 1)");
    quad->add_option("--b", q_b, "half-height b (default 1)");
    quad->add_option("--family", q_family, "arcs|segments");
    quad->add_option("--tol", q_tol, "quadrature absolute tolerance");
    quad->add_option("--seed", q_seed, "seed recorded in the report");
    quad->add_option("--format", q_format, "json|csv");
    quad->add_option("--out", q_out, "output path (default stdout)");
    quad->add_option("--config", q_cfg, "flat key=value config file");
    quad->callback([&] {
        const ConfigScope cfg(quad, q_cfg);
        require_present(cfg, "a");
        cfg.fill("a", q_a);
        cfg.fill("b", q_b);
        cfg.fill("family", q_family);
        cfg.fill("tol", q_tol);
        cfg.fill("seed", q_seed);
        cfg.fill("format", q_format);
        cfg.fill("out", q_out);
        check_positive("--b", q_b);
        check_positive("--tol", q_tol);
        check_member("--family", q_family, {"arcs", "segments"});
        check_member("--format", q_format, {"json", "csv"});

        // Q(a,b) is conformally equivalent to Q(a',1) with a' = 1 + (a-1)/b,
        // and conformal equivalence preserves the moduli; compute there.
        const double a_norm = 1.0 + (q_a - 1.0) / q_b;
        QuadratureSpec spec;
        spec.abs_tol = q_tol;
        ModulusReport report =
            verify_report(parse_quad_family(q_family), a_norm, spec);
        report.parameters["a_input"] = q_a;
        report.parameters["b_input"] = q_b;
        report.parameters["a"] = a_norm;
        report.parameters["area_euclidean"] = quad_area_euclidean(a_norm, 1.0);
        report.parameters["area_variant"] = quad_area_variant(a_norm);
        emit_report(report, q_seed, q_format, q_out);
    });

    // annulus ----------------------------------------------------------
    auto* annulus = app.add_subcommand(
        "annulus", "modulus report for a hyperbolic annulus family");
    double an_r1 = 0.0, an_r2 = 0.0, an_cl = 1.0, an_ct = 0.0, an_tol = 1e-9;
    unsigned an_seed = 0;
    std::string an_family = "joining", an_format = "json", an_out, an_cfg;
    annulus->add_option("--r1", an_r1, "inner hyperbolic radius");
    annulus->add_option("--r2", an_r2, "outer hyperbolic radius");
    annulus->add_option("--center-lambda", an_cl, "center lambda (default 1)");
    annulus->add_option("--center-t", an_ct, "center t (default 0)");
    annulus->add_option("--family", an_family, "joining|separating");
    annulus->add_option("--tol", an_tol, "quadrature absolute tolerance");
    annulus->add_option("--seed", an_seed, "seed recorded in the report");
    annulus->add_option("--format", an_format, "json|csv");
    annulus->add_option("--out", an_out, "output path (default stdout)");
    annulus->add_option("--config", an_cfg, "flat key=value config file");
    annulus->callback([&] {
        const ConfigScope cfg(annulus, an_cfg);
        require_present(cfg, "r1");
        require_present(cfg, "r2");
        cfg.fill("r1", an_r1);
        cfg.fill("r2", an_r2);
        cfg.fill("center-lambda", an_cl);
        cfg.fill("center-t", an_ct);
        cfg.fill("family", an_family);
        cfg.fill("tol", an_tol);
        cfg.fill("seed", an_seed);
        cfg.fill("format", an_format);
        cfg.fill("out", an_out);
        check_positive("--center-lambda", an_cl);
        check_positive("--tol", an_tol);
        check_member("--family", an_family, {"joining", "separating"});
        check_member("--format", an_format, {"json", "csv"});

        if (!(an_r1 > 0.0) || !(an_r1 < an_r2))
            throw DegenerateAnnulus("annulus requires 0 < r1 < r2");
        const Annulus domain(HPoint(an_cl, an_ct), an_r1, an_r2);
        QuadratureSpec spec;
        spec.abs_tol = an_tol;
        const ModulusReport report =
            verify_report(parse_annulus_family(an_family), domain, spec);
        emit_report(report, an_seed, an_format, an_out);
    });

    // verify -----------------------------------------------------------
    auto* verify = app.add_subcommand(
        "verify", "run the verification suite and emit a report bundle");
    std::string v_suite = "all", v_format = "json", v_out, v_cfg;
    unsigned v_seed = 0;
    int v_grid = 64;
    double v_tol = 1e-9;
    verify->add_option("--suite", v_suite, "all|quad|annulus");
    verify->add_option("--grid-n", v_grid, "check-grid resolution (>= 8)");
    verify->add_option("--tol", v_tol, "quadrature absolute tolerance");
    verify->add_option("--seed", v_seed, "seed for the randomized checks");
    verify->add_option("--format", v_format, "json|csv");
    verify->add_option("--out", v_out, "output path (default stdout)");
    verify->add_option("--config", v_cfg, "flat key=value config file");
    verify->callback([&] {
        const ConfigScope cfg(verify, v_cfg);
        cfg.fill("suite", v_suite);
        cfg.fill("grid-n", v_grid);
        cfg.fill("tol", v_tol);
        cfg.fill("seed", v_seed);
        cfg.fill("format", v_format);
        cfg.fill("out", v_out);
        check_member("--suite", v_suite, {"all", "quad", "annulus"});
        check_grid("--grid-n", v_grid);
        check_positive("--tol", v_tol);
        check_member("--format", v_format, {"json", "csv"});

        const VerifySuiteResult result =
            run_verify_suite(v_suite, v_seed, v_grid, v_tol);
        std::ostringstream os;
        if (v_format == "csv")
            write_suite_csv(os, result);
        else
            write_suite_json(os, result);
        write_output(v_out, os.str());
    });

    // polar ------------------------------------------------------------
    auto* polar = app.add_subcommand(
        "polar", "convert between polar and half-plane coordinates");
    std::vector<double> p_to, p_from;
    std::string p_out;
    auto* opt_to =
        polar->add_option("--to-cartesian", p_to, "r theta -> lambda t")
            ->expected(2);
    auto* opt_from =
        polar->add_option("--from-cartesian", p_from, "lambda t -> r theta")
            ->expected(2);
    opt_to->excludes(opt_from);
    polar->add_option("--out", p_out, "output path (default stdout)");
    polar->callback([&] {
        if (p_to.empty() && p_from.empty())
            throw CLI::RequiredError("--to-cartesian or --from-cartesian");
        std::ostringstream os;
        if (!p_to.empty()) {
            const HPoint p = to_cartesian(PolarPoint(p_to[0], p_to[1]));
            os << "lambda=" << g12(p.lambda) << " t=" << g12(p.t) << "\n";
        } else {
            const PolarPoint p = from_cartesian(HPoint(p_from[0], p_from[1]));
            os << "r=" << g12(p.r) << " theta=" << g12(p.theta) << "\n";
        }
        write_output(p_out, os.str());
    });

    // plot ---------------------------------------------------------------
    auto* plot = app.add_subcommand("plot", "emit a deterministic SVG plot");
    std::string pl_domain, pl_family, pl_out, pl_cfg;
    double pl_a = 0.0, pl_r1 = 0.0, pl_r2 = 0.0, pl_cl = 1.0, pl_ct = 0.0;
    bool pl_density = false;
    int pl_grid = 256, pl_curves = 12;
    plot->add_option("--domain", pl_domain, "quad|annulus");
    plot->add_option("--a", pl_a, "quad parameter a");
    plot->add_option("--r1", pl_r1, "annulus inner radius");
    plot->add_option("--r2", pl_r2, "annulus outer radius");
    plot->add_option("--center-lambda", pl_cl, "annulus center lambda");
    plot->add_option("--center-t", pl_ct, "annulus center t");
    plot->add_option("--family", pl_family,
                     "curves to draw (arcs|segments|joining|separating)");
    plot->add_flag("--density", pl_density, "render the extremal density");
    plot->add_option("--grid-n", pl_grid, "density raster resolution (>= 8)");
    plot->add_option("--n-curves", pl_curves, "subfamily curves to draw");
    plot->add_option("--out", pl_out, "output SVG path");
    plot->add_option("--config", pl_cfg, "flat key=value config file");
    plot->callback([&] {
        const ConfigScope cfg(plot, pl_cfg);
        require_present(cfg, "domain");
        require_present(cfg, "out");
        cfg.fill("domain", pl_domain);
        cfg.fill("a", pl_a);
        cfg.fill("r1", pl_r1);
        cfg.fill("r2", pl_r2);
        cfg.fill("center-lambda", pl_cl);
        cfg.fill("center-t", pl_ct);
        cfg.fill("family", pl_family);
        cfg.fill("density", pl_density);
        cfg.fill("grid-n", pl_grid);
        cfg.fill("n-curves", pl_curves);
        cfg.fill("out", pl_out);
        check_member("--domain", pl_domain, {"quad", "annulus"});
        check_grid("--grid-n", pl_grid);
        if (pl_curves < 1 || pl_curves > 4096)
            throw CLI::ValidationError("--n-curves: must be in [1, 4096]");

        PlotOptions options;
        options.density = pl_density;
        options.grid_n = pl_grid;
        options.n_curves = pl_curves;

        std::ostringstream os;
        if (pl_domain == "quad") {
            require_present(cfg, "a");
            if (!pl_family.empty())
                check_member("--family", pl_family, {"arcs", "segments"});
            options.family = parse_quad_family(
                pl_family.empty() ? std::string("arcs") : pl_family);
            write_quad_plot(os, pl_a, options);
        } else {
            require_present(cfg, "r1");
            require_present(cfg, "r2");
            if (!pl_family.empty())
                check_member("--family", pl_family, {"joining", "separating"});
            if (!(pl_r1 > 0.0) || !(pl_r1 < pl_r2))
                throw DegenerateAnnulus("annulus requires 0 < r1 < r2");
            check_positive("--center-lambda", pl_cl);
            options.family = parse_annulus_family(
                pl_family.empty() ? std::string("joining") : pl_family);
            write_annulus_plot(os, Annulus(HPoint(pl_cl, pl_ct), pl_r1, pl_r2),
                               options);
        }
        write_output(pl_out, os.str());
    });

    try {
        app.parse(argc, argv);
        return 0;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const hypmod::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

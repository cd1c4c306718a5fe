// Batch front door: parses a run configuration, dispatches to the library,
// writes CSV artifacts plus a machine-readable report.json, and encodes the
// worst outcome in the exit status (0 pass, 1 check failure, 2 usage error,
// 3 I/O error).

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "ballave/averaging.hpp"
#include "ballave/filter_bank.hpp"
#include "ballave/harness.hpp"
#include "ballave/io.hpp"
#include "ballave/multipliers.hpp"
#include "ballave/norms.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace ballave;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Check {
    std::string name;
    double value;
    double tolerance;
    bool pass;
};

struct Report {
    json config;
    std::vector<Check> checks;
    std::vector<std::string> artifacts;

    void check_leq(const std::string& name, double value, double tol) {
        checks.push_back({name, value, tol, value <= tol});
    }
    void note(const std::string& name, double value) {
        checks.push_back({name, value, std::numeric_limits<double>::infinity(), true});
    }
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass)
                return false;
        return true;
    }
};

int write_report(Report& rep, const fs::path& out_dir) {
    json doc;
    doc["config"] = rep.config;
    doc["artifacts"] = rep.artifacts;
    doc["checks"] = json::array();
    for (const auto& c : rep.checks) {
        json jc;
        jc["name"] = c.name;
        jc["value"] = c.value;
        if (std::isfinite(c.tolerance))
            jc["tolerance"] = c.tolerance;
        jc["pass"] = c.pass;
        doc["checks"].push_back(jc);
        std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << " = " << format_double(c.value);
        if (std::isfinite(c.tolerance))
            std::cout << " (tol " << format_double(c.tolerance) << ")";
        std::cout << "\n";
    }
    doc["pass"] = rep.all_pass();
    std::ofstream out(out_dir / "report.json");
    if (!out)
        throw std::ios_base::failure("cannot open report.json for writing");
    out << doc.dump(2) << "\n";
    std::cout << "report: " << (out_dir / "report.json").string() << "\n";
    return rep.all_pass() ? 0 : 1;
}

double parse_exponent(const std::string& text, const char* what) {
    if (text == "inf" || text == "Inf" || text == "INF")
        return kInf;
    try {
        return std::stod(text);
    } catch (const std::exception&) {
        throw CLI::ValidationError(std::string(what) + " must be a number or 'inf'");
    }
}

Family parse_family(const std::string& name) {
    if (name == "weierstrass")
        return Family::weierstrass;
    if (name == "band_bump")
        return Family::band_bump;
    if (name == "power_spectrum")
        return Family::power_spectrum;
    if (name == "smooth_reference")
        return Family::smooth_reference;
    throw CLI::ValidationError("unknown family: " + name);
}

json params_json(const NormParams& p) {
    json j;
    j["space"] = p.space == Space::besov ? "besov" : "triebel_lizorkin";
    j["homogeneous"] = p.homogeneous;
    j["alpha"] = p.alpha;
    j["p"] = std::isinf(p.p) ? json("inf") : json(p.p);
    j["q"] = std::isinf(p.q) ? json("inf") : json(p.q);
    j["ell"] = p.ell;
    j["method"] = p.method == Method::ball ? "ball" : "classical";
    if (p.range) {
        j["k_min"] = p.range->k_min;
        j["k_max"] = p.range->k_max;
    }
    j["body"] = p.body.kind == BodyKind::cube ? "cube" : "euclidean_ball";
    return j;
}

// ---------------------------------------------------------------- commands

struct CommonOpts {
    std::string out = ".";
    std::uint64_t seed = 1;
};

int cmd_multiplier_table(const CommonOpts& common, const std::string& kind, int ell, int dim,
                         double s_max, int samples, int nodes) {
    Report rep;
    rep.config = {{"command", "multiplier-table"}, {"kind", kind},       {"ell", ell},
                  {"dim", dim},                    {"s_max", s_max},     {"samples", samples},
                  {"nodes", nodes},                {"out", common.out},  {"seed", common.seed}};
    const fs::path out_dir(common.out);
    fs::create_directories(out_dir);

    std::vector<double> radii;
    for (int i = 0; i <= samples; ++i)
        radii.push_back(s_max * i / samples);

    const fs::path csv = out_dir / (kind + "_table.csv");
    if (kind == "phi" || kind == "Phi") {
        std::vector<std::vector<std::string>> rows;
        for (double s : radii)
            rows.push_back({format_double(s), format_double(kind == "phi" ? FilterBank::phi(s)
                                                                          : FilterBank::Phi(s))});
        write_csv(csv.string(), {"radius", kind}, rows);
    } else if (kind == "eta") {
        const auto bank = build_bank(-1, 12);
        write_table_csv(csv.string(), build_eta_table(bank, ell, dim, radii));
    } else {
        TableKind tk;
        if (kind == "ball_hat")
            tk = TableKind::ball_hat;
        else if (kind == "A_ell")
            tk = TableKind::a_ell;
        else if (kind == "m_ell")
            tk = TableKind::m_ell;
        else if (kind == "A_ell_ratio")
            tk = TableKind::a_ell_ratio;
        else
            throw CLI::ValidationError("unknown table kind: " + kind);
        const auto rule = gauss_legendre(std::max(nodes, static_cast<int>(std::ceil(s_max)) + 8));
        write_table_csv(csv.string(), build_multiplier_table(tk, ell, dim, radii, rule));
    }
    rep.artifacts.push_back(csv.string());
    rep.note("rows", static_cast<double>(radii.size()));
    return write_report(rep, out_dir);
}

int cmd_verify_identities(const CommonOpts& common, int ell, int dim, int samples) {
    Report rep;
    rep.config = {{"command", "verify-identities"},
                  {"ell", ell},
                  {"dim", dim},
                  {"samples", samples},
                  {"out", common.out},
                  {"seed", common.seed}};
    const fs::path out_dir(common.out);
    fs::create_directories(out_dir);

    const auto& rule = default_rule();
    double worst_id = 0.0;
    for (int i = 0; i <= samples; ++i) {
        const double s = 50.0 * i / samples;
        worst_id = std::max(worst_id,
                            std::abs(m_ell(ell, dim, s, rule) - (1.0 - a_ell(ell, dim, s, rule))));
    }
    rep.check_leq("multiplier_identity_residual", worst_id, 1e-10);

    double worst_trig = 0.0;
    for (int i = 0; i <= samples; ++i)
        worst_trig = std::max(worst_trig, trig_identity_residual(ell, 8.0 * kPi * i / samples));
    rep.check_leq("trig_identity_residual", worst_trig, 1e-10);

    const GridSpec g = make_grid(dim, dim == 1 ? 128 : 32);
    std::vector<std::size_t> probes;
    for (int i = 0; i < 16; ++i)
        probes.push_back(static_cast<std::size_t>(i) * g.point_count() / 16);
    double worst_cd = 0.0;
    double sup = 0.0;
    for (int trial = 0; trial < 4; ++trial) {
        TestFunctionSpec spec{Family::power_spectrum, 1.0, dim == 1 ? 5 : 3, 0,
                              common.seed + static_cast<std::uint64_t>(trial), g};
        const auto f = generate(spec);
        for (const auto& v : f.values)
            sup = std::max(sup, std::abs(v));
        worst_cd = std::max(worst_cd, verify_central_difference_identity(
                                          f, AverageSpec{ell, 0.9 / ell, {}}, probes));
    }
    rep.check_leq("central_difference_identity_residual", worst_cd, 1e-9 * sup);
    return write_report(rep, out_dir);
}

int cmd_norm(const CommonOpts& common, const std::string& family, double function_alpha, int J,
             int k0, int grid_n, int dim, NormParams params) {
    Report rep;
    const fs::path out_dir(common.out);

    const GridSpec g = make_grid(dim, grid_n);
    TestFunctionSpec spec{parse_family(family), function_alpha, J, k0, common.seed, g};
    params.body.dim = dim;

    rep.config = {{"command", "norm"},  {"family", family}, {"function_alpha", function_alpha},
                  {"J", J},             {"k0", k0},         {"samples_per_axis", grid_n},
                  {"dim", dim},         {"out", common.out}, {"seed", common.seed}};
    rep.config["norm"] = params_json(params);

    const auto bank = bank_for_grid(g);
    const auto f = generate(spec);
    const auto report = compute_norm(f, params, bank);

    fs::create_directories(out_dir);
    const fs::path csv = out_dir / "norm_report.csv";
    write_norm_report_csv(csv.string(), report);
    rep.artifacts.push_back(csv.string());
    rep.config["norm"] = params_json(report.params); // resolved range included

    rep.note("aggregate", report.aggregate);
    rep.note("lp_term", report.lp_term);
    rep.checks.push_back({"aggregate_finite", report.aggregate, kInf,
                          std::isfinite(report.aggregate) && report.aggregate >= 0.0});
    return write_report(rep, out_dir);
}

int cmd_slope(const CommonOpts& common, const std::string& family, double alpha, int ell,
              const std::string& p_text, int grid_n, int J, int k_lo, int k_hi) {
    Report rep;
    const double p = parse_exponent(p_text, "p");
    const GridSpec g = make_grid(1, grid_n);
    rep.config = {{"command", "slope"}, {"family", family},   {"alpha", alpha},
                  {"ell", ell},         {"p", p_text},        {"samples_per_axis", grid_n},
                  {"J", J},             {"window_lo", k_lo},  {"window_hi", k_hi},
                  {"out", common.out},  {"seed", common.seed}};
    const fs::path out_dir(common.out);

    TestFunctionSpec spec{parse_family(family), alpha, J, 4, common.seed, g};
    const auto f = generate(spec);
    ScaleRange window{k_lo, k_hi};
    if (k_lo == 0 && k_hi == 0)
        window = default_slope_window(J, ell, g);
    const auto fit = decay_slope(f, ell, p, window);

    fs::create_directories(out_dir);
    std::vector<std::pair<double, double>> points;
    for (int k = window.k_min; k <= window.k_max; ++k) {
        const auto diff = ball_difference(f, AverageSpec{ell, std::ldexp(1.0, -k), {}});
        points.emplace_back(k, std::log2(lp_norm(diff, p)));
    }
    const fs::path csv = out_dir / "slope.csv";
    write_slope_csv(csv.string(), fit, points);
    rep.artifacts.push_back(csv.string());

    rep.note("slope", fit.slope);
    rep.note("fit_max_residual", fit.max_residual);
    const double target = -std::min(alpha, 2.0 * ell);
    rep.check_leq("slope_error", std::abs(fit.slope - target), 0.1);
    return write_report(rep, out_dir);
}

int cmd_equivalence(const CommonOpts& common, double alpha, const std::string& p_text,
                    const std::string& q_text, int ell, const std::string& space_text,
                    bool inhomogeneous, int grid_n) {
    Report rep;
    NormParams params;
    params.space = space_text == "tl" ? Space::triebel_lizorkin : Space::besov;
    params.homogeneous = !inhomogeneous;
    params.alpha = alpha;
    params.p = parse_exponent(p_text, "p");
    params.q = parse_exponent(q_text, "q");
    params.ell = ell;
    rep.config = {{"command", "equivalence"}, {"alpha", alpha}, {"p", p_text},
                  {"q", q_text},              {"ell", ell},     {"space", space_text},
                  {"inhomogeneous", inhomogeneous},             {"samples_per_axis", grid_n},
                  {"out", common.out},        {"seed", common.seed}};
    const fs::path out_dir(common.out);

    const GridSpec g = make_grid(1, grid_n);
    const GridSpec g2 = make_grid(1, 2 * grid_n);
    const auto study = equivalence_study(standard_family(alpha, g), params, bank_for_grid(g));
    const auto study2 = equivalence_study(standard_family(alpha, g2), params, bank_for_grid(g2));

    fs::create_directories(out_dir);
    const fs::path csv = out_dir / "equivalence.csv";
    const fs::path csv2 = out_dir / "equivalence_refined.csv";
    write_ratio_csv(csv.string(), study);
    write_ratio_csv(csv2.string(), study2);
    rep.artifacts.push_back(csv.string());
    rep.artifacts.push_back(csv2.string());

    rep.note("min_ratio", study.min_ratio);
    rep.note("max_ratio", study.max_ratio);
    rep.checks.push_back({"bracket_positive", study.min_ratio, kInf,
                          study.min_ratio > 0.0 && std::isfinite(study.max_ratio)});
    rep.check_leq("min_ratio_drift",
                  std::abs(study2.min_ratio - study.min_ratio) / study.min_ratio, 0.10);
    rep.check_leq("max_ratio_drift",
                  std::abs(study2.max_ratio - study.max_ratio) / study.max_ratio, 0.10);
    return write_report(rep, out_dir);
}

int cmd_refine(const CommonOpts& common, const std::string& family, double alpha, int ell,
               const std::string& p_text, const std::string& q_text,
               const std::vector<int>& sizes) {
    Report rep;
    NormParams params;
    params.space = Space::besov;
    params.alpha = std::min(alpha, 2.0 * ell - 0.1);
    params.p = parse_exponent(p_text, "p");
    params.q = parse_exponent(q_text, "q");
    params.ell = ell;
    params.method = Method::ball;
    rep.config = {{"command", "refine"}, {"family", family}, {"alpha", alpha},
                  {"ell", ell},          {"p", p_text},      {"q", q_text},
                  {"sizes", sizes},      {"out", common.out}, {"seed", common.seed}};
    const fs::path out_dir(common.out);

    TestFunctionSpec spec{parse_family(family), alpha, 6, 4, common.seed,
                          make_grid(1, sizes.empty() ? 256 : sizes.front())};
    const auto rows = refinement_study(spec, params, sizes);

    fs::create_directories(out_dir);
    const fs::path csv = out_dir / "refinement.csv";
    write_refinement_csv(csv.string(), rows);
    rep.artifacts.push_back(csv.string());

    bool growing = false;
    for (std::size_t i = 2; i < rows.size(); ++i)
        growing = growing || rows[i].rel_change > rows[i - 1].rel_change + 1e-12;
    rep.checks.push_back({"changes_not_growing", growing ? 1.0 : 0.0, kInf, !growing});
    for (const auto& row : rows)
        rep.note("norm_N" + std::to_string(row.samples), row.value);
    return write_report(rep, out_dir);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"ball-average smoothness analysis on the periodic torus"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config");
    app.allow_config_extras(false); // unknown keys in a config file are rejected

    CommonOpts common;
    app.add_option("--out", common.out, "output directory")->capture_default_str();
    app.add_option("--seed", common.seed, "seed for generated fields")->capture_default_str();

    // multiplier-table
    std::string kind = "A_ell";
    int ell = 1, dim = 1, samples = 1000, nodes = 64, grid_n = 1024, J = 7, k0 = 4;
    double s_max = 8.0;
    auto* mt = app.add_subcommand("multiplier-table", "tabulate a radial profile as CSV");
    mt->fallthrough();
    mt->add_option("--kind", kind, "ball_hat|A_ell|m_ell|eta|A_ell_ratio|phi|Phi")
        ->capture_default_str();
    mt->add_option("--ell", ell)->capture_default_str();
    mt->add_option("--dim", dim)->check(CLI::Range(1, 3))->capture_default_str();
    mt->add_option("--s-max", s_max)->capture_default_str();
    mt->add_option("--samples", samples)->capture_default_str();
    mt->add_option("--nodes", nodes)->capture_default_str();

    // verify-identities
    int vi_samples = 10000;
    auto* vi = app.add_subcommand("verify-identities", "run the multiplier and difference identity checks");
    vi->fallthrough();
    vi->add_option("--ell", ell)->capture_default_str();
    vi->add_option("--dim", dim)->check(CLI::Range(1, 3))->capture_default_str();
    vi->add_option("--samples", vi_samples)->capture_default_str();

    // norm
    std::string family = "weierstrass", p_text = "2", q_text = "2", method_text = "ball",
                space_text = "besov", body_text = "euclidean_ball";
    double alpha = 1.0, function_alpha = -1.0;
    bool inhomogeneous = false;
    auto* nm = app.add_subcommand("norm", "compute one Besov/Triebel-Lizorkin norm");
    nm->fallthrough();
    nm->add_option("--family", family)->capture_default_str();
    nm->add_option("--alpha", alpha, "norm smoothness")->capture_default_str();
    nm->add_option("--function-alpha", function_alpha, "field smoothness (defaults to alpha)");
    nm->add_option("--p", p_text)->capture_default_str();
    nm->add_option("--q", q_text)->capture_default_str();
    nm->add_option("--ell", ell)->capture_default_str();
    nm->add_option("--method", method_text, "ball|classical")->capture_default_str();
    nm->add_option("--space", space_text, "besov|tl")->capture_default_str();
    nm->add_flag("--inhomogeneous", inhomogeneous);
    nm->add_option("--body", body_text, "euclidean_ball|cube")->capture_default_str();
    nm->add_option("--N", grid_n, "samples per axis")->capture_default_str();
    nm->add_option("--dim", dim)->check(CLI::Range(1, 3))->capture_default_str();
    nm->add_option("--J", J)->capture_default_str();
    nm->add_option("--k0", k0)->capture_default_str();

    // slope
    int window_lo = 0, window_hi = 0;
    auto* sl = app.add_subcommand("slope", "fit the dyadic decay slope of ||f - B_{l,2^-k} f||_p");
    sl->fallthrough();
    sl->add_option("--family", family)->capture_default_str();
    sl->add_option("--alpha", alpha)->capture_default_str();
    sl->add_option("--ell", ell)->capture_default_str();
    sl->add_option("--p", p_text)->capture_default_str();
    sl->add_option("--N", grid_n, "samples per axis")->capture_default_str();
    sl->add_option("--J", J)->capture_default_str();
    sl->add_option("--window-lo", window_lo)->capture_default_str();
    sl->add_option("--window-hi", window_hi)->capture_default_str();

    // equivalence
    auto* eq = app.add_subcommand("equivalence", "ball vs classical ratio bracket over the standard family");
    eq->fallthrough();
    eq->add_option("--alpha", alpha)->capture_default_str();
    eq->add_option("--p", p_text)->capture_default_str();
    eq->add_option("--q", q_text)->capture_default_str();
    eq->add_option("--ell", ell)->capture_default_str();
    eq->add_option("--space", space_text, "besov|tl")->capture_default_str();
    eq->add_flag("--inhomogeneous", inhomogeneous);
    eq->add_option("--N", grid_n, "base grid; the study repeats at 2N")->capture_default_str();

    // refine
    std::vector<int> sizes{256, 512, 1024};
    auto* rf = app.add_subcommand("refine", "norm stability across grid refinements");
    rf->fallthrough();
    rf->add_option("--family", family)->capture_default_str();
    rf->add_option("--alpha", alpha)->capture_default_str();
    rf->add_option("--ell", ell)->capture_default_str();
    rf->add_option("--p", p_text)->capture_default_str();
    rf->add_option("--q", q_text)->capture_default_str();
    rf->add_option("--N", sizes, "ascending grid sizes")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (mt->parsed())
            return cmd_multiplier_table(common, kind, ell, dim, s_max, samples, nodes);
        if (vi->parsed())
            return cmd_verify_identities(common, ell, dim, vi_samples);
        if (nm->parsed()) {
            NormParams params;
            params.space = space_text == "tl" ? Space::triebel_lizorkin : Space::besov;
            params.homogeneous = !inhomogeneous;
            params.alpha = alpha;
            params.p = parse_exponent(p_text, "p");
            params.q = parse_exponent(q_text, "q");
            params.ell = ell;
            params.method = method_text == "classical" ? Method::classical : Method::ball;
            params.body.kind = body_text == "cube" ? BodyKind::cube : BodyKind::euclidean_ball;
            return cmd_norm(common, family, function_alpha < 0 ? alpha : function_alpha, J, k0,
                            grid_n, dim, params);
        }
        if (sl->parsed())
            return cmd_slope(common, family, alpha, ell, p_text, grid_n, J, window_lo, window_hi);
        if (eq->parsed())
            return cmd_equivalence(common, alpha, p_text, q_text, ell, space_text, inhomogeneous,
                                   grid_n);
        if (rf->parsed())
            return cmd_refine(common, family, alpha, ell, p_text, q_text, sizes);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "check failure: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

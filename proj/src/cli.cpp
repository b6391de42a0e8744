#include "pwh/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "pwh/algebra.hpp"
#include "pwh/bargmann.hpp"
#include "pwh/coherent.hpp"
#include "pwh/errors.hpp"
#include "pwh/grassmann.hpp"
#include "pwh/io.hpp"
#include "pwh/measure.hpp"

namespace pwh::cli {

using io::Json;

const char* command_name(Command command) {
    switch (command) {
        case Command::spectrum: return "spectrum";
        case Command::rep_check: return "rep-check";
        case Command::truncate: return "truncate";
        case Command::cs_perelomov: return "cs-perelomov";
        case Command::cs_bg: return "cs-bg";
        case Command::cs_grassmann: return "cs-grassmann";
        case Command::measure: return "measure";
        case Command::bargmann_growth: return "bargmann-growth";
        case Command::schwarz: return "schwarz";
    }
    return "?";
}

namespace {

bool parse_real(const std::string& text, double& out) {
    if (text.empty()) {
        return false;
    }
    char* end = nullptr;
    out = std::strtod(text.c_str(), &end);
    return end == text.c_str() + text.size() && std::isfinite(out);
}

}  // namespace

std::complex<double> parse_complex(const std::string& raw) {
    std::string text;
    for (char c : raw) {
        if (c != ' ') {
            text += c;
        }
    }
    const auto fail = [&] { return UsageError("malformed complex number '" + raw + "'", 1); };
    if (text.empty()) {
        throw fail();
    }
    if (text.back() != 'i' && text.back() != 'j') {
        double re = 0.0;
        if (!parse_real(text, re)) {
            throw fail();
        }
        return {re, 0.0};
    }
    text.pop_back();
    // Split at the last sign that is not a leading sign or an exponent sign.
    std::size_t split = std::string::npos;
    for (std::size_t k = text.size(); k-- > 1;) {
        if ((text[k] == '+' || text[k] == '-') && text[k - 1] != 'e' && text[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    std::string re_text = split == std::string::npos ? "" : text.substr(0, split);
    std::string im_text = split == std::string::npos ? text : text.substr(split);
    if (im_text.empty() || im_text == "+" || im_text == "-") {
        im_text += "1";
    }
    double re = 0.0;
    double im = 0.0;
    if ((!re_text.empty() && !parse_real(re_text, re)) || !parse_real(im_text, im)) {
        throw fail();
    }
    return {re, im};
}

RunConfig parse_args(int argc, const char* const* argv, std::ostream& out) {
    // "--kappa -1/3" would be read as an unknown short flag; glue negative
    // values onto their option.
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        const bool takes_value = a == "--kappa" || a == "--z" || a == "--w" || a == "--phi";
        if (takes_value && i + 1 < argc && argv[i + 1][0] == '-' && argv[i + 1][1] != '-') {
            a += "=";
            a += argv[++i];
        }
        args.push_back(std::move(a));
    }
    std::reverse(args.begin(), args.end());

    RunConfig config;
    CLI::App app{"Polynomial Weyl-Heisenberg algebras and their coherent states", "pwh"};
    app.set_config("--config", "", "flat key=value parameter file; flags override it");
    app.require_subcommand(1);
    app.fallthrough();

    std::string z_text;
    std::string w_text;
    std::string format = "json";
    app.add_option("--kappa", config.kappas, "kappa_1,...,kappa_r as p/q")->delimiter(',');
    app.add_option("--ell", config.ells, "ell_1,...,ell_r meaning kappa_i = 1/ell_i")->delimiter(',');
    app.add_option("--phi", config.phi, "phase parameter");
    app.add_option("--z", z_text, "complex label, e.g. 1+0.5i");
    app.add_option("--w", w_text, "schwarz: f_n is the conjugated normalized BG state at w (saturates at z = w)");
    app.add_option("--window", config.window, "matrix size (cutoff in infinite dimension)");
    app.add_option("--s", config.s, "truncation order");
    app.add_option("--nmax", config.nmax, "highest index");
    app.add_option("--levels", config.levels, "number of moments / Fock levels");
    app.add_option("--tail-tol", config.tail_tolerance, "relative tail bound for infinite series")
        ->envname("PWH_TAIL_TOL");
    app.add_flag("--normalize", config.normalize, "normalize the coherent state");
    app.add_option("--kind", config.kind, "measure: bg or perelomov")->check(CLI::IsMember({"bg", "perelomov"}));
    app.add_flag("--allow-signed", config.allow_signed, "measure: fixed-node signed fallback");
    app.add_option("--grid-radius", config.grid_radius, "schwarz grid radius");
    app.add_option("--grid-radial", config.grid_radial, "schwarz grid radii count");
    app.add_option("--grid-angular", config.grid_angular, "schwarz grid angle count");
    app.add_option("--output", config.output, "output path (default stdout)");
    app.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    const Command commands[] = {Command::spectrum,     Command::rep_check,    Command::truncate,
                                Command::cs_perelomov, Command::cs_bg,        Command::cs_grassmann,
                                Command::measure,      Command::bargmann_growth, Command::schwarz};
    std::vector<std::pair<CLI::App*, Command>> subs;
    for (Command c : commands) {
        subs.emplace_back(app.add_subcommand(command_name(c)), c);
    }

    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        throw UsageError("", 0);
    } catch (const CLI::FileError& e) {
        throw UsageError(e.what(), 2);
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what(), 1);
    }
    for (const auto& [sub, c] : subs) {
        if (sub->parsed()) {
            config.command = c;
        }
    }
    if (!z_text.empty()) {
        config.z = parse_complex(z_text);
    }
    if (!w_text.empty()) {
        config.w = parse_complex(w_text);
    }
    config.format = format == "csv" ? Format::csv : Format::json;
    return config;
}

namespace {

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

struct Artifact {
    Json json;
    std::optional<Table> table;
};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v + 0.0);
    return buf;
}

std::string num(std::size_t v) {
    return std::to_string(v);
}

AlgebraParams make_params(const RunConfig& config) {
    if (!config.ells.empty() && !config.kappas.empty()) {
        throw UsageError("give either --kappa or --ell, not both", 1);
    }
    if (!config.ells.empty()) {
        return AlgebraParams::from_ells(config.ells, config.phi);
    }
    if (config.kappas.empty()) {
        throw UsageError("parameters missing: pass --kappa p/q,... or --ell l1,...", 1);
    }
    std::vector<Rational> kappas;
    for (const auto& k : config.kappas) {
        kappas.push_back(parse_rational(k));
    }
    return AlgebraParams(std::move(kappas), config.phi);
}

Json header(const RunConfig& config, const AlgebraParams& params) {
    return Json{{"command", command_name(config.command)}, {"params", io::encode(params)}};
}

std::size_t default_window(const AlgebraParams& params, std::size_t requested, std::size_t fallback) {
    if (requested != 0) {
        return requested;
    }
    return params.dimension().is_finite() ? params.dimension().size() : fallback;
}

Table coefficient_table(const std::vector<Complex>& coeffs) {
    Table t{{"n", "re", "im", "abs"}, {}};
    for (std::size_t n = 0; n < coeffs.size(); ++n) {
        t.rows.push_back({num(n), num(coeffs[n].real()), num(coeffs[n].imag()), num(std::abs(coeffs[n]))});
    }
    return t;
}

Artifact cmd_spectrum(const RunConfig& config) {
    const AlgebraParams params = make_params(config);
    const std::size_t nmax = config.nmax != 0 ? config.nmax
                             : params.dimension().is_finite() ? params.dimension().size() : 10;
    Artifact a{header(config, params), Table{{"n", "F", "F_value", "G", "G_value"}, {}}};
    Json rows = Json::array();
    for (std::size_t n = 0; n <= nmax; ++n) {
        const Rational f = structure_function(params, n);
        const Rational g = commutator_gap(params, n);
        rows.push_back(Json{{"n", n}, {"F", to_string(f)}, {"F_value", to_double(f)}, {"G", to_string(g)},
                            {"G_value", to_double(g)}});
        a.table->rows.push_back({num(n), to_string(f), num(to_double(f)), to_string(g), num(to_double(g))});
    }
    a.json["rows"] = rows;
    return a;
}

Artifact cmd_rep_check(const RunConfig& config) {
    const AlgebraParams params = make_params(config);
    const std::size_t window = default_window(params, config.window, 20);
    const LadderRep rep = build_rep(params, window);
    const ComplexMatrix product = rep.raise() * rep.lower();
    const ComplexMatrix comm = commutator(rep.lower(), rep.raise());
    const bool finite = params.dimension().is_finite();

    double f_dev = 0.0;
    double g_dev = 0.0;
    Artifact a{header(config, params), Table{{"n", "F_value", "raise_lower", "G_value", "commutator"}, {}}};
    for (std::size_t n = 0; n < window; ++n) {
        const auto i = static_cast<Eigen::Index>(n);
        const double f = to_double(structure_function(params, n));
        f_dev = std::max(f_dev, std::abs(product(i, i) - f));
        double expected = to_double(commutator_gap(params, n));
        if (n + 1 == window) {
            expected = finite ? -to_double(structure_function(params, n)) : NAN;
        }
        if (!std::isnan(expected)) {
            g_dev = std::max(g_dev, std::abs(comm(i, i) - expected));
        }
        a.table->rows.push_back({num(n), num(f), num(product(i, i).real()), num(expected), num(comm(i, i).real())});
    }
    a.json["window"] = window;
    a.json["hermitian_exact"] = rep.raise() == rep.lower().adjoint();
    a.json["max_dev_raise_lower_vs_F"] = f_dev;
    a.json["max_dev_commutator_vs_G"] = g_dev;
    a.json["last_row_is_cutoff_artifact"] = !finite;
    if (finite) {
        ComplexMatrix lp = ComplexMatrix::Identity(window, window);
        ComplexMatrix rp = lp;
        for (std::size_t k = 0; k < window; ++k) {
            lp = lp * rep.lower();
            rp = rp * rep.raise();
        }
        a.json["lower_pow_d_zero"] = lp.isZero(0.0);
        a.json["raise_pow_d_zero"] = rp.isZero(0.0);
        a.json["raise_top_state_zero"] = rep.raise().col(static_cast<Eigen::Index>(window - 1)).isZero(0.0);
    }
    return a;
}

Artifact cmd_truncate(const RunConfig& config) {
    const AlgebraParams params = make_params(config);
    const std::size_t window = config.window != 0 ? config.window : 2 * std::max<std::size_t>(config.s, 1) + 2;
    if (config.s == 0) {
        throw UsageError("truncate needs --s", 1);
    }
    const LadderRep rep = build_truncated_rep(params, window, config.s);
    const ComplexMatrix comm = commutator(rep.lower(), rep.raise());
    Artifact a{header(config, params), Table{{"n", "commutator", "expected"}, {}}};
    double dev = (comm - ComplexMatrix(comm.diagonal().asDiagonal())).cwiseAbs().maxCoeff();
    for (std::size_t n = 0; n < window; ++n) {
        double expected = n < config.s ? to_double(commutator_gap(params, n)) : 0.0;
        if (n + 1 == config.s) {
            expected -= to_double(structure_function(params, config.s));
        }
        const auto i = static_cast<Eigen::Index>(n);
        dev = std::max(dev, std::abs(comm(i, i) - expected));
        a.table->rows.push_back({num(n), num(comm(i, i).real()), num(expected)});
    }
    a.json["window"] = window;
    a.json["s"] = config.s;
    a.json["max_dev_commutator"] = dev;
    return a;
}

CoherentOptions options_from(const RunConfig& config) {
    CoherentOptions opts;
    opts.normalize = config.normalize;
    opts.tail_tolerance = config.tail_tolerance;
    return opts;
}

Artifact cmd_state(const RunConfig& config, StateKind kind) {
    const AlgebraParams params = make_params(config);
    const CoherentState state = kind == StateKind::perelomov
                                    ? perelomov_state(params, config.z, config.phi, options_from(config))
                                    : bg_state(params, config.z, config.phi, options_from(config));
    Artifact a{header(config, params), coefficient_table(state.coeffs())};
    a.json["state"] = io::encode(state);
    a.json["raw_norm"] = state.raw_norm();
    if (kind == StateKind::barut_girardello) {
        const LadderRep rep = build_rep(state.params(), state.size() + 1);
        a.json["eigen_residual"] = check_bg_eigen(state, rep);
        a.json["abs_N"] = params.reciprocal_ells() ? Json(bg_normalization(params, config.z)) : Json(nullptr);
    }
    return a;
}

Artifact cmd_grassmann(const RunConfig& config) {
    const AlgebraParams params = make_params(config);
    const bool finite = params.dimension().is_finite();
    if (!finite && config.s == 0) {
        throw UsageError("infinite-dimensional parameters need --s for the truncated algebra", 1);
    }
    const GrassmannState state =
        finite ? bg_grassmann_state(params, config.phi) : bg_grassmann_state_truncated(params, config.s, config.phi);
    const LadderRep rep = build_rep(state.params(), state.dim());
    Artifact a{header(config, params), Table{{"n", "theta_power", "re", "im"}, {}}};
    a.json["state"] = io::encode(state);
    a.json["eigen_residual"] = check_bg_grassmann_eigen(state, rep);
    if (finite && config.z != Complex{}) {
        a.json["complex_z_residual"] = complex_substitution_residual(params, config.z, config.phi);
    }
    for (std::size_t n = 0; n < state.dim(); ++n) {
        const Complex c = state.coeffs()[n][n];
        a.table->rows.push_back({num(n), num(n), num(c.real()), num(c.imag())});
    }
    return a;
}

Artifact cmd_measure(const RunConfig& config) {
    const AlgebraParams params = make_params(config);
    const StateKind kind = config.kind == "perelomov" ? StateKind::perelomov : StateKind::barut_girardello;
    const MomentSequence moments = moments_for(params, kind, config.levels);
    DiscreteMeasure measure;
    std::optional<std::string> positivity_failure;
    try {
        measure = solve_measure(moments);
    } catch (const MeasureError& e) {
        if (!config.allow_signed) {
            throw MeasureError(std::string(e.what()) + " (--allow-signed gives a signed rule)", e.minor(), e.order());
        }
        positivity_failure = e.what();
        measure = solve_signed_measure(moments);
    }
    Artifact a{header(config, params), Table{{"j", "t", "weight"}, {}}};
    a.json["moments"] = io::encode(moments);
    a.json["measure"] = io::encode(measure);
    a.json["positivity_failure"] = positivity_failure ? Json(*positivity_failure) : Json(nullptr);
    a.json["identity_deviation"] = verify_identity(params, kind, measure, config.phi);
    for (std::size_t j = 0; j < measure.nodes.size(); ++j) {
        a.table->rows.push_back({num(j), num(measure.nodes[j]), num(measure.weights[j])});
    }
    return a;
}

Artifact cmd_growth(const RunConfig& config) {
    const AlgebraParams params = make_params(config);
    const std::size_t nmax = config.nmax != 0 ? config.nmax : 5000;
    const EntireSeries series = EntireSeries::bg_kernel(params, nmax);
    const GrowthEstimate est = estimate_growth(series);
    Artifact a{header(config, params), Table{{"n", "log_abs_c"}, {}}};
    a.json["nmax"] = nmax;
    a.json["estimate"] = io::encode(est);
    if (params.reciprocal_ells()) {
        const GrowthFormula exact = closed_form_growth(params);
        a.json["closed_form"] = Json{{"rho", exact.rho}, {"sigma", exact.sigma}};
        a.json["rel_error"] = Json{{"rho", std::abs(est.rho_hat - exact.rho) / exact.rho},
                                   {"sigma", std::abs(est.sigma_hat - exact.sigma) / exact.sigma}};
    } else {
        a.json["closed_form"] = nullptr;
    }
    for (std::size_t n = 0; n < series.size(); ++n) {
        a.table->rows.push_back({num(n), num(series.log_moduli()[n])});
    }
    return a;
}

Artifact cmd_schwarz(const RunConfig& config) {
    const AlgebraParams params = make_params(config);
    std::vector<Complex> f{1.0};
    if (config.w) {
        CoherentOptions opts;
        opts.normalize = true;
        opts.tail_tolerance = config.tail_tolerance;
        f = bg_state(params, *config.w, config.phi, opts).coeffs();
        for (auto& c : f) {
            c = std::conj(c);
        }
    }
    auto grid = polar_grid(config.grid_radius, config.grid_radial, config.grid_angular);
    if (config.w) {
        grid.push_back(*config.w);
    }
    const SchwarzReport report = schwarz_check(params, f, grid, config.phi);
    Artifact a{header(config, params), Table{{"re", "im", "abs_f", "abs_N"}, {}}};
    a.json["f"] = config.w ? Json{{"conj_bg_state_at", io::encode(*config.w)}} : Json{{"basis", 0}};
    a.json["grid"] = Json{{"radius", config.grid_radius}, {"radial", config.grid_radial},
                          {"angular", config.grid_angular}};
    a.json["max_excess"] = report.max_excess;
    a.json["argmax"] = io::encode(report.argmax);
    for (const auto& z : grid) {
        a.table->rows.push_back({num(z.real()), num(z.imag()), num(std::abs(bargmann_eval(params, f, z, config.phi))),
                                 num(bg_normalization(params, z))});
    }
    return a;
}

Artifact dispatch(const RunConfig& config) {
    switch (config.command) {
        case Command::spectrum: return cmd_spectrum(config);
        case Command::rep_check: return cmd_rep_check(config);
        case Command::truncate: return cmd_truncate(config);
        case Command::cs_perelomov: return cmd_state(config, StateKind::perelomov);
        case Command::cs_bg: return cmd_state(config, StateKind::barut_girardello);
        case Command::cs_grassmann: return cmd_grassmann(config);
        case Command::measure: return cmd_measure(config);
        case Command::bargmann_growth: return cmd_growth(config);
        case Command::schwarz: return cmd_schwarz(config);
    }
    throw UsageError("unknown command", 1);
}

void write_csv(const Table& table, std::ostream& out) {
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t k = 0; k < cells.size(); ++k) {
            out << (k ? "," : "") << cells[k];
        }
        out << '\n';
    };
    line(table.header);
    for (const auto& row : table.rows) {
        line(row);
    }
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    Artifact artifact;
    try {
        artifact = dispatch(config);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return e.exit_code();
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    if (config.format == Format::csv && !artifact.table) {
        err << "error: " << command_name(config.command) << " has no tabular output\n";
        return 1;
    }

    std::ofstream file;
    if (!config.output.empty()) {
        file.open(config.output, std::ios::binary);
        if (!file) {
            err << "error: cannot open '" << config.output << "' for writing\n";
            return 2;
        }
    }
    std::ostream& sink = config.output.empty() ? out : file;
    if (config.format == Format::csv) {
        write_csv(*artifact.table, sink);
    } else {
        sink << artifact.json.dump(2) << '\n';
    }
    sink.flush();
    if (!sink) {
        err << "error: write failed\n";
        return 2;
    }
    return 0;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig config;
    try {
        config = parse_args(argc, argv, out);
    } catch (const UsageError& e) {
        if (e.exit_code() != 0) {
            err << "error: " << e.what() << '\n';
        }
        return e.exit_code();
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return run(config, out, err);
}

}  // namespace pwh::cli

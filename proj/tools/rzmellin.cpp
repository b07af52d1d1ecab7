// rzmellin: evaluate the kernel / transform stack at single points and run
// identity-verification sweeps with CSV reports.
//
// Verbs:
//   eval <function> --<param>=<value>...
//   verify <identity> [--grid-file <path>] [--tol <x>] [--seed <k>] [--out <csv>]
//   verify all --seed <k> [--out-dir <dir>]
//
// Exit codes: 0 all passed, 1 any verification failure, 2 usage/spec error.
// The environment variable RZMELLIN_LOG (silent | summary | per-point)
// controls verbosity; it defaults to summary.

#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <rzm/rzm.hpp>

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fmt17(double x) {
    if (x == 0.0) x = 0.0;  // display negative zero as 0
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

rzm::Verbosity verbosity_from_env() {
    const char* raw = std::getenv("RZMELLIN_LOG");
    if (!raw) return rzm::Verbosity::summary;
    if (auto v = rzm::verbosity_from_name(raw)) return *v;
    std::cerr << "warning: RZMELLIN_LOG='" << raw
              << "' not one of silent|summary|per-point; using summary\n";
    return rzm::Verbosity::summary;
}

// ---------------------------------------------------------------------------
// eval

struct EvalParams {
    std::optional<double> u, xi, lambda, lambda_im, r, t, psi;
    std::optional<double> mu, mu_im, nu, nu_im, re_s, im_s, rho_re, rho_im;
    std::optional<int> n, q, j;
    std::string form = "second";
};

double need(const std::optional<double>& v, const char* name) {
    if (!v) throw UsageError(std::string("missing required parameter --") + name);
    return *v;
}

int need_int(const std::optional<int>& v, const char* name) {
    if (!v) throw UsageError(std::string("missing required parameter --") + name);
    return *v;
}

void print_value(rzm::Complex value) {
    std::cout << "re=" << fmt17(value.real()) << " im=" << fmt17(value.imag()) << '\n';
}

void print_value(const rzm::MellinResult& res) {
    std::cout << "re=" << fmt17(res.value.real()) << " im=" << fmt17(res.value.imag())
              << " est_error=" << fmt17(res.est_error) << " evaluations=" << res.evaluations
              << '\n';
}

int run_eval(const std::string& fn, const EvalParams& p) {
    const rzm::Complex lambda(p.lambda ? *p.lambda : 0.0, p.lambda_im ? *p.lambda_im : 0.0);
    if (fn == "riesz") {
        need(p.lambda, "lambda");
        print_value(rzm::riesz_kernel(need(p.u, "u"), rzm::CutPoint(need(p.xi, "xi")), lambda));
    } else if (fn == "h") {
        need(p.lambda, "lambda");
        const rzm::HKernelSpec spec(lambda, need_int(p.q, "q"), rzm::CutPoint(need(p.xi, "xi")));
        print_value(rzm::h_kernel(spec, need(p.u, "u")));
    } else if (fn == "kq") {
        const rzm::DimensionSpec dim(need_int(p.n, "n"));
        print_value(rzm::Complex(rzm::weierstrass_kernel(need(p.r, "r"), need(p.t, "t"),
                                                         need(p.psi, "psi"), dim,
                                                         need_int(p.q, "q")),
                                 0.0));
    } else if (fn == "gegenbauer") {
        need(p.lambda, "lambda");
        print_value(rzm::gegenbauer(need_int(p.j, "j"), lambda, need(p.xi, "xi")));
    } else if (fn == "ferrers") {
        const rzm::LegendreOrder order{
            rzm::Complex(need(p.mu, "mu"), p.mu_im ? *p.mu_im : 0.0),
            rzm::Complex(need(p.nu, "nu"), p.nu_im ? *p.nu_im : 0.0)};
        print_value(rzm::ferrers_p(order, rzm::CutPoint(need(p.xi, "xi"))));
    } else if (fn == "mellin_h_numeric") {
        need(p.lambda, "lambda");
        const int q = need_int(p.q, "q");
        const rzm::HKernelSpec spec(lambda, q, rzm::CutPoint(need(p.xi, "xi")));
        const rzm::Complex s(need(p.re_s, "re-s"), p.im_s ? *p.im_s : 0.0);
        const rzm::MellinPoint point(s, -double(q) - 1.0, -double(q));
        print_value(rzm::mellin_numeric([&](double u) { return rzm::h_kernel(spec, u); }, point));
    } else if (fn == "mellin_h_closed") {
        need(p.lambda, "lambda");
        const rzm::HKernelSpec spec(lambda, need_int(p.q, "q"),
                                    rzm::CutPoint(need(p.xi, "xi")));
        const rzm::Complex s(need(p.re_s, "re-s"), p.im_s ? *p.im_s : 0.0);
        const rzm::MellinPoint point(s, s.real() - 1.0, s.real() + 1.0);
        print_value(rzm::mellin_h_closed(spec, point));
    } else if (fn == "corollary") {
        const rzm::DimensionSpec dim(need_int(p.n, "n"));
        const rzm::Complex rho(need(p.rho_re, "rho-re"), p.rho_im ? *p.rho_im : 0.0);
        rzm::CorollaryForm form;
        if (p.form == "first") {
            form = rzm::CorollaryForm::first;
        } else if (p.form == "second") {
            form = rzm::CorollaryForm::second;
        } else {
            throw UsageError("--form must be 'first' or 'second'");
        }
        print_value(rzm::corollary_closed(dim, need_int(p.q, "q"), rho,
                                          rzm::CutPoint(need(p.xi, "xi")), form));
    } else {
        throw UsageError("unknown function '" + fn +
                         "' (expected riesz, h, kq, gegenbauer, ferrers, mellin_h_numeric, "
                         "mellin_h_closed, corollary)");
    }
    return 0;
}

// ---------------------------------------------------------------------------
// verify

void apply_grid_file(rzm::SweepSpec& spec, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open grid file '" + path + "'");
    nlohmann::json grid;
    try {
        grid = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw UsageError("grid file '" + path + "': " + e.what());
    }
    if (!grid.is_object()) throw UsageError("grid file '" + path + "': expected a JSON object");
    try {
        for (const auto& [key, value] : grid.items()) {
            if (key == "lambdas") spec.lambdas = value.get<std::vector<double>>();
            else if (key == "dims") spec.dims = value.get<std::vector<int>>();
            else if (key == "genera") spec.genera = value.get<std::vector<int>>();
            else if (key == "xis") spec.xis = value.get<std::vector<double>>();
            else if (key == "re_offsets") spec.re_offsets = value.get<std::vector<double>>();
            else if (key == "im_offsets") spec.im_offsets = value.get<std::vector<double>>();
            else if (key == "cont_fracs") spec.cont_fracs = value.get<std::vector<double>>();
            else if (key == "cont_ims") spec.cont_ims = value.get<std::vector<double>>();
            else if (key == "point_count") spec.point_count = value.get<int>();
            else if (key == "rel_tol") spec.rel_tol = value.get<double>();
            else if (key == "seed") {
                spec.seed = value.get<std::uint64_t>();
                spec.has_seed = true;
            } else {
                throw UsageError("grid file '" + path + "': unknown key '" + key + "'");
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw UsageError("grid file '" + path + "': " + e.what());
    }
}

int run_verify_one(rzm::Identity id, const std::optional<std::string>& grid_file,
                   const std::optional<double>& tol, const std::optional<std::uint64_t>& seed,
                   const std::optional<std::string>& out, rzm::Verbosity verbosity) {
    rzm::SweepSpec spec{.identity = id};
    if (grid_file) apply_grid_file(spec, *grid_file);
    if (tol) spec.rel_tol = *tol;
    if (seed) {
        spec.seed = *seed;
        spec.has_seed = true;
    }
    if (rzm::identity_requires_seed(id) && !spec.has_seed)
        throw UsageError(std::string("identity '") + rzm::identity_name(id) +
                         "' uses a randomized grid: pass --seed so the run is reproducible");
    const rzm::SweepOutcome outcome = rzm::run_sweep(spec, &std::cout, verbosity);
    if (out) rzm::emit_report(outcome.records, *out);
    return outcome.passed ? 0 : 1;
}

int run_verify_all(const std::optional<std::uint64_t>& seed,
                   const std::optional<std::string>& out_dir, rzm::Verbosity verbosity) {
    if (!seed)
        throw UsageError("'verify all' includes randomized grids: pass --seed so the run is "
                         "reproducible");
    if (out_dir) std::filesystem::create_directories(*out_dir);
    int failed = 0;
    for (rzm::Identity id : rzm::all_identities()) {
        rzm::SweepSpec spec{.identity = id, .has_seed = true, .seed = *seed};
        const rzm::SweepOutcome outcome = rzm::run_sweep(spec, &std::cout, verbosity);
        if (!outcome.passed) ++failed;
        if (out_dir) {
            const auto path = std::filesystem::path(*out_dir) /
                              (std::string("verify_") + rzm::identity_name(id) + ".csv");
            rzm::emit_report(outcome.records, path.string());
        }
    }
    if (verbosity != rzm::Verbosity::silent)
        std::cout << "verify all: identities=" << rzm::identity_count
                  << " passed=" << (rzm::identity_count - failed) << " failed=" << failed
                  << '\n';
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Riesz and genus-corrected kernel Mellin-transform toolkit"};
    app.require_subcommand(1);

    // --- eval ---
    auto* eval_cmd = app.add_subcommand("eval", "evaluate one function at one point");
    std::string fn;
    EvalParams p;
    eval_cmd->add_option("function", fn,
                         "one of: riesz, h, kq, gegenbauer, ferrers, mellin_h_numeric, "
                         "mellin_h_closed, corollary")
        ->required();
    eval_cmd->add_option("--u", p.u, "kernel argument u (riesz, h)");
    eval_cmd->add_option("--xi", p.xi, "cut point xi in [-1, 1]");
    eval_cmd->add_option("--lambda", p.lambda, "kernel exponent lambda (real part)");
    eval_cmd->add_option("--lambda-im", p.lambda_im, "imaginary part of lambda");
    eval_cmd->add_option("--q", p.q, "genus q >= 0");
    eval_cmd->add_option("--r", p.r, "radial argument r (kq)");
    eval_cmd->add_option("--t", p.t, "radial argument t > 0 (kq)");
    eval_cmd->add_option("--psi", p.psi, "angle psi in [-pi, pi] (kq)");
    eval_cmd->add_option("--n", p.n, "ambient dimension n >= 3 (kq, corollary)");
    eval_cmd->add_option("--j", p.j, "polynomial degree j >= 0 (gegenbauer)");
    eval_cmd->add_option("--mu", p.mu, "order mu, real part (ferrers)");
    eval_cmd->add_option("--mu-im", p.mu_im, "order mu, imaginary part");
    eval_cmd->add_option("--nu", p.nu, "degree nu, real part (ferrers)");
    eval_cmd->add_option("--nu-im", p.nu_im, "degree nu, imaginary part");
    eval_cmd->add_option("--re-s", p.re_s, "Mellin variable, real part");
    eval_cmd->add_option("--im-s", p.im_s, "Mellin variable, imaginary part");
    eval_cmd->add_option("--rho-re", p.rho_re, "rho, real part (corollary)");
    eval_cmd->add_option("--rho-im", p.rho_im, "rho, imaginary part (corollary)");
    eval_cmd->add_option("--form", p.form, "corollary form: first | second (default second)");

    // --- verify ---
    auto* verify_cmd = app.add_subcommand("verify", "run an identity sweep (or 'all')");
    std::string identity_arg;
    std::optional<std::string> grid_file, out, out_dir;
    std::optional<double> tol;
    std::optional<std::uint64_t> seed;
    verify_cmd->add_option("identity", identity_arg,
                           "eq1, eq2, by_parts, corollary, gegenbauer_gf, duplication, "
                           "recurrence, h_bound, kq_reduction, or 'all'")
        ->required();
    verify_cmd->add_option("--grid-file", grid_file, "JSON file overriding the default grid");
    verify_cmd->add_option("--tol", tol, "relative tolerance override");
    verify_cmd->add_option("--seed", seed, "seed for randomized grids (required for them)");
    verify_cmd->add_option("--out", out, "write the record CSV to this path");
    verify_cmd->add_option("--out-dir", out_dir, "verify all: write one CSV per identity here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);  // help text, exit 0
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const rzm::Verbosity verbosity = verbosity_from_env();
    try {
        if (*eval_cmd) return run_eval(fn, p);
        if (identity_arg == "all") {
            if (grid_file || tol || out)
                throw UsageError("'verify all' accepts only --seed and --out-dir");
            return run_verify_all(seed, out_dir, verbosity);
        }
        const auto id = rzm::identity_from_name(identity_arg);
        if (!id)
            throw UsageError("unknown identity '" + identity_arg +
                             "' (run with --help for the list)");
        if (out_dir) throw UsageError("--out-dir applies only to 'verify all'; use --out");
        return run_verify_one(*id, grid_file, tol, seed, out, verbosity);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const rzm::error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}

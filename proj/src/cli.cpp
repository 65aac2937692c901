#include "fracgreen/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "fracgreen/errors.hpp"
#include "fracgreen/green.hpp"
#include "fracgreen/oracles.hpp"
#include "fracgreen/table.hpp"
#include "fracgreen/verify.hpp"

namespace fracgreen {

namespace {

struct Options {
    double alpha = 0.0;
    double beta = 0.0;
    double theta = 0.0;
    double x = 0.0;
    double t = 1.0;
    double tol = 1e-8;
    std::string format;
    std::string out;
    double x_min = 0.0;
    double x_max = 0.0;
    int n = 0;
    std::string suite = "all";
    double delta = 0.0;
    bool check = false;
};

void triplet_flags(CLI::App* cmd, Options& o) {
    cmd->add_option("--alpha", o.alpha, "space order, 0 < alpha <= 2")->required();
    cmd->add_option("--beta", o.beta, "time order, 0 < beta <= 2")->required();
    cmd->add_option("--theta", o.theta, "skewness, |theta| <= min(alpha, 2 - alpha)")->required();
}

void check_tolerance(double tol) {
    if (!(tol >= 1e-14 && tol <= 1e-2)) throw DomainError("tolerance must lie in [1e-14, 1e-2]");
}

std::string flags_note(const EvaluationResult& r) {
    std::string s;
    if (r.reduced_confidence) s += " reduced-confidence";
    if (r.non_probabilistic) s += " non-probabilistic";
    return s;
}

// Writes the whole text at once so a failure never leaves partial output.
int emit(const std::string& text, const Options& o, std::ostream& out, std::ostream& err) {
    if (o.out.empty() || o.out == "-") {
        out << text;
        out.flush();
        return 0;
    }
    std::ofstream file(o.out, std::ios::binary | std::ios::trunc);
    if (!file) {
        err << "error: cannot open output file '" << o.out << "'\n";
        return 2;
    }
    file << text;
    return file ? 0 : 2;
}

int cmd_eval(const Options& o, std::ostream& out, std::ostream& err) {
    const FractionalTriplet t = validate(o.alpha, o.beta, o.theta);
    const EvaluationResult r = evaluate(GreenRequest{t, o.x, o.t, o.tol});
    std::ostringstream s;
    if (o.format == "csv" || o.format == "json") {
        const DensityTable table{t, o.t, o.tol, {{o.x, r.value, r.abs_error, r.method}}};
        if (o.format == "csv")
            write_csv(s, table);
        else
            write_json(s, table);
    } else {
        s << "G(x=" << format_real(o.x, 7) << ", t=" << format_real(o.t, 7) << ") = " << format_real(r.value, 7)
          << " +/- " << format_real(r.abs_error, 2) << " [" << to_string(r.method) << "]" << flags_note(r) << '\n';
    }
    return emit(s.str(), o, out, err);
}

int cmd_table(const Options& o, std::ostream& out, std::ostream& err) {
    const FractionalTriplet t = validate(o.alpha, o.beta, o.theta);
    check_tolerance(o.tol);
    if (!(o.t > 0.0)) throw DomainError("time must be positive");
    const DensityTable table = tabulate(t, o.t, GridSpec{o.x_min, o.x_max, o.n}, o.tol, thread_count_from_env());
    std::ostringstream s;
    if (o.format == "json")
        write_json(s, table);
    else
        write_csv(s, table);
    return emit(s.str(), o, out, err);
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
    std::vector<std::string> suites;
    if (o.suite == "all")
        suites = suite_names();
    else
        suites = {o.suite};
    for (const auto& name : suites)
        if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end())
            throw DomainError("unknown suite '" + name + "'");
    std::ostringstream s;
    std::size_t checks = 0;
    std::size_t failed = 0;
    for (const auto& name : suites) {
        const SuiteReport r = run_suite(name);
        write_report(s, r);
        checks += r.checks.size();
        failed += static_cast<std::size_t>(std::count_if(r.checks.begin(), r.checks.end(), [](const CheckResult& c) { return !c.passed; }));
    }
    if (suites.size() > 1)
        s << "summary suite=all checks=" << checks << " failed=" << failed << " status=" << (failed ? "fail" : "pass") << '\n';
    const int code = emit(s.str(), o, out, err);
    if (code != 0) return code;
    return failed ? 1 : 0;
}

int cmd_moments(const Options& o, std::ostream& out, std::ostream& err) {
    const FractionalTriplet t = validate(o.alpha, o.beta, o.theta);
    const double m = moment(t, o.delta);
    std::ostringstream s;
    s << "moment delta=" << format_real(o.delta, 7) << " value=" << format_real(m, 7);
    if (o.check) {
        const EvaluationResult q = quadrature_moment(t, o.delta, 1e-9);
        s << " quadrature=" << format_real(q.value, 7) << " abs_err=" << format_real(q.abs_error, 2)
          << " difference=" << format_real(q.value - m, 2);
    }
    s << '\n';
    return emit(s.str(), o, out, err);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Green function of the space-time fractional diffusion equation", "fracgreen"};
    app.set_version_flag("--version", version_string);
    app.require_subcommand(1);
    Options o;

    auto* eval = app.add_subcommand("eval", "evaluate G(x, t) at one point");
    triplet_flags(eval, o);
    eval->add_option("--x", o.x, "position")->required();
    eval->add_option("--t", o.t, "time, t > 0");
    eval->add_option("--tol", o.tol, "absolute tolerance in [1e-14, 1e-2]");
    eval->add_option("--format", o.format, "human, csv or json")->check(CLI::IsMember({"human", "csv", "json"}));
    eval->add_option("--out", o.out, "output file (default standard output)");

    auto* table = app.add_subcommand("table", "tabulate G(x, t) on an equispaced grid");
    triplet_flags(table, o);
    table->add_option("--x-min", o.x_min, "first grid point")->required();
    table->add_option("--x-max", o.x_max, "last grid point")->required();
    table->add_option("--n", o.n, "number of grid points, n >= 2")->required();
    table->add_option("--t", o.t, "time, t > 0");
    table->add_option("--tol", o.tol, "absolute tolerance in [1e-14, 1e-2]");
    table->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    table->add_option("--out", o.out, "output file (default standard output)");

    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("--suite", o.suite, "normalization, symmetry, subordination, moments, tails, oracles or all");
    verify->add_option("--out", o.out, "output file (default standard output)");

    auto* moments = app.add_subcommand("moments", "closed-form half-line moment int_0^inf x^delta K(x) dx");
    triplet_flags(moments, o);
    moments->add_option("--delta", o.delta, "moment order inside the validity strip")->required();
    moments->add_flag("--check", o.check, "also run the quadrature oracle");
    moments->add_option("--out", o.out, "output file (default standard output)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForVersion&) {
        out << version_string << '\n';
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (*eval) return cmd_eval(o, out, err);
        if (*table) return cmd_table(o, out, err);
        if (*verify) return cmd_verify(o, out, err);
        if (*moments) return cmd_moments(o, out, err);
    } catch (const WaveCaseError& e) {
        out << WaveCaseError::symbolic << '\n';
        err << "error: " << e.what() << '\n';
        return 4;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const AccuracyError& e) {
        err << "error: " << e.what() << " (best estimate " << format_real(e.achieved(), 3) << ")\n";
        return 3;
    } catch (const UnsupportedError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace fracgreen

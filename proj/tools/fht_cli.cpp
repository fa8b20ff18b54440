#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fht/airfoil.hpp"
#include "fht/errors.hpp"
#include "fht/expression.hpp"
#include "fht/io.hpp"
#include "fht/operators.hpp"
#include "fht/rearrangement.hpp"
#include "fht/verify.hpp"

namespace {

using nlohmann::json;

// --f/--g accept either a mini-language expression or csv:PATH.
fht::FunctionHandle load_function(const std::string& arg) {
    if (arg.rfind("csv:", 0) == 0) return fht::load_csv_function(arg.substr(4));
    return fht::parse_expression(arg);
}

fht::Method parse_method(const std::string& m) {
    if (m == "spectral") return fht::Method::Spectral;
    if (m == "quadrature") return fht::Method::Quadrature;
    if (m == "auto") return fht::Method::Auto;
    throw CLI::ValidationError("--method", "expected auto|spectral|quadrature");
}

std::string method_name(fht::Method m) {
    switch (m) {
        case fht::Method::Spectral: return "spectral";
        case fht::Method::Quadrature: return "quadrature";
        default: return "auto";
    }
}

std::string join_argv(int argc, char** argv) {
    std::string s;
    for (int i = 0; i < argc; ++i) {
        if (i) s += ' ';
        s += argv[i];
    }
    return s;
}

void emit(const std::string& text, const std::string& out) {
    if (out.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
    } else {
        std::ofstream f(out);
        f << text;
        if (!text.empty() && text.back() != '\n') f << '\n';
    }
}

json membership_json(const fht::RangeMembershipReport& m) {
    json probes = json::array();
    for (auto& [d, s] : m.tcheck_sup_by_refinement)
        probes.push_back({{"endpoint_distance", d}, {"sup", s}});
    return json{{"phi_value", m.phi_value},
                {"phi_pass", m.phi_pass},
                {"tcheck_sup_by_refinement", std::move(probes)},
                {"boundedness_verdict", m.boundedness_verdict},
                {"overall", m.overall},
                {"annotations", m.annotations}};
}

int run_eval(const std::string& fexpr, const std::string& op,
             std::vector<double> points, const std::string& method, double tol,
             const std::string& out, const std::string& format,
             const std::string& command) {
    fht::FunctionHandle f = load_function(fexpr);
    json doc{{"tool_version", fht::kToolVersion}, {"command", command}, {"op", op}};

    if (op == "Q") {
        doc["value"] = fht::apply_Q(f, tol);
    } else if (op == "phi") {
        doc["value"] = fht::phi_inv_w(f, tol);
    } else {
        if (points.empty()) throw CLI::ValidationError("--points", "required for " + op);
        fht::OperatorRequest req;
        req.input = f;
        req.points = points;
        req.method = parse_method(method);
        req.tol = tol;
        fht::OperatorResult res;
        if (op == "T")
            res = fht::apply_T(req);
        else if (op == "Tcheck")
            res = fht::apply_T_check(req);
        else if (op == "That")
            res = fht::apply_T_hat(req);
        else
            throw CLI::ValidationError("--op", "expected T|Tcheck|That|Q|phi");
        json vals = json::array();
        for (auto& pv : res.values) vals.push_back({{"point", pv.point}, {"value", pv.value}});
        doc["values"] = std::move(vals);
        doc["method_used"] = method_name(res.method_used);
        doc["est_error"] = res.est_error;
        if (!res.diagnostics.empty()) doc["diagnostics"] = res.diagnostics;
        if (format == "csv") {
            std::ostringstream os;
            os.precision(17);
            os << "x,value\n";
            for (auto& pv : res.values) os << pv.point << "," << pv.value << "\n";
            emit(os.str(), out);
            return 0;
        }
    }
    emit(doc.dump(2), out);
    return 0;
}

int run_invert(const std::string& gexpr, double tol, bool force,
               const std::string& out, const std::string& format,
               const std::string& command) {
    fht::FunctionHandle g = load_function(gexpr);
    json doc{{"tool_version", fht::kToolVersion}, {"command", command}};
    try {
        fht::AirfoilSolution sol = fht::solve(g, tol, force);
        doc["solution_coefficients"] = sol.solution.coeffs;
        doc["residual_sup"] = sol.residual_sup;
        doc["defect"] = sol.defect;
        doc["membership"] = membership_json(sol.membership);
        if (format == "csv") {
            std::ostringstream os;
            os.precision(17);
            os << "x,value\n";
            for (int i = 0; i <= 200; ++i) {
                double x = -0.995 + 1.99 * i / 200.0;
                os << x << "," << sol.solution.eval(x) << "\n";
            }
            emit(os.str(), out);
        } else {
            emit(doc.dump(2), out);
        }
        return 0;
    } catch (const fht::DomainError& e) {
        doc["rejected"] = true;
        doc["reason"] = e.what();
        doc["membership"] = membership_json(fht::check_range(g, tol));
        emit(doc.dump(2), out);
        return 1;
    }
}

int run_norm(const std::string& fexpr, double alpha, int grid,
             const std::string& out, const std::string& format,
             const std::string& command) {
    fht::FunctionHandle f = load_function(fexpr);
    fht::NormReport r = fht::compute_norms(f, alpha, grid);
    if (format == "csv") {
        std::ostringstream os;
        os.precision(17);
        os << "key,value\n"
           << "alpha," << r.alpha << "\n"
           << "lexp_primary," << r.lexp_primary << "\n"
           << "lexp_equiv," << r.lexp_equiv << "\n"
           << "llogl," << r.llogl << "\n"
           << "b_part_indicator," << r.b_part_indicator << "\n";
        emit(os.str(), out);
    } else {
        json doc{{"tool_version", fht::kToolVersion},
                 {"command", command},
                 {"alpha", r.alpha},
                 {"lexp_primary", r.lexp_primary},
                 {"lexp_equiv", r.lexp_equiv},
                 {"llogl", r.llogl},
                 {"b_part_indicator", r.b_part_indicator},
                 {"grid_size", r.grid_size}};
        emit(doc.dump(2), out);
    }
    return 0;
}

int emit_report(const fht::VerificationReport& rep, const std::string& out,
                const std::string& format, const std::string& command) {
    if (format == "csv")
        emit(fht::report_csv(rep), out);
    else
        emit(fht::report_document(rep, command).dump(2), out);
    return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite Hilbert transform toolkit"};
    app.require_subcommand(1);
    std::string command = join_argv(argc, argv);

    std::string fexpr, gexpr, op = "T", method = "auto", out, format = "json",
                suite;
    std::vector<double> points;
    double tol = 1e-10, alpha = 1.0;
    std::uint64_t seed = 0;
    int n = 0, grid = fht::kDefaultRearrangeGrid;
    bool force = false;

    auto* eval = app.add_subcommand("eval", "evaluate T, Tcheck, That, Q or phi");
    eval->add_option("--f", fexpr, "input function: expression or csv:PATH")->required();
    eval->add_option("--op", op, "T|Tcheck|That|Q|phi");
    eval->add_option("--points", points, "evaluation points in (-1,1)")->delimiter(',');
    eval->add_option("--method", method, "auto|spectral|quadrature");
    eval->add_option("--tol", tol, "absolute tolerance");
    eval->add_option("--out", out, "output file (default stdout)");
    eval->add_option("--format", format, "json|csv");

    auto* invert = app.add_subcommand("invert", "solve T(f) = g for bounded f");
    invert->add_option("--g", gexpr, "right-hand side: expression or csv:PATH")->required();
    invert->add_option("--tol", tol, "absolute tolerance");
    invert->add_flag("--force", force, "solve even when the range test fails");
    invert->add_option("--out", out, "output file");
    invert->add_option("--format", format, "json|csv");

    auto* norm = app.add_subcommand("norm", "rearrangement-invariant norms");
    norm->add_option("--f", fexpr, "input function: expression or csv:PATH")->required();
    norm->add_option("--alpha", alpha, "Zygmund exponent (default 1)");
    norm->add_option("--grid", grid, "rearrangement grid size");
    norm->add_option("--out", out, "output file");
    norm->add_option("--format", format, "json|csv");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite, "parseval|inversion|lowerbound")->required();
    verify->add_option("--seed", seed, "random seed");
    verify->add_option("--n", n, "number of randomized cases");
    verify->add_option("--out", out, "output file");
    verify->add_option("--format", format, "json|csv");

    auto* probe = app.add_subcommand("probe-domain", "level-set probe of the optimal domain");
    probe->add_option("--f", fexpr, "input function: expression or csv:PATH")->required();
    probe->add_option("--n", n, "largest level to probe (default 117)");
    probe->add_option("--out", out, "output file");
    probe->add_option("--format", format, "json|csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 2 : 0;  // CLI11 returns 0 for --help
    }

    try {
        if (format != "json" && format != "csv")
            throw CLI::ValidationError("--format", "expected json|csv");
        if (eval->parsed())
            return run_eval(fexpr, op, points, method, tol, out, format, command);
        if (invert->parsed())
            return run_invert(gexpr, tol, force, out, format, command);
        if (norm->parsed())
            return run_norm(fexpr, alpha, grid, out, format, command);
        if (verify->parsed()) {
            fht::VerificationReport rep;
            if (suite == "parseval")
                rep = fht::verify_parseval(seed, n > 0 ? n : 50);
            else if (suite == "inversion")
                rep = fht::verify_inversion(seed, n > 0 ? n : 20);
            else if (suite == "lowerbound")
                rep = fht::verify_lower_bound(seed, n > 0 ? n : 200);
            else
                throw CLI::ValidationError("--suite",
                                           "expected parseval|inversion|lowerbound");
            return emit_report(rep, out, format, command);
        }
        if (probe->parsed()) {
            fht::FunctionHandle f = load_function(fexpr);
            auto rep = fht::probe_optimal_domain(f, n > 0 ? n : 117);
            return emit_report(rep, out, format, command);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const fht::ParseError& e) {
        std::cerr << "parse error at line " << e.line << ", column " << e.column
                  << ": " << e.what() << "\n";
        return 2;
    } catch (const fht::DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

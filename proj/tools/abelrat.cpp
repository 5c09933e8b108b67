#include "abelrat/construct.hpp"
#include "abelrat/errors.hpp"
#include "abelrat/io.hpp"
#include "abelrat/report.hpp"
#include "abelrat/solver.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

using namespace abelrat;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitStrict = 3;
constexpr int kExitConstruct = 4;

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    }
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path, 0, 0);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

FieldMode parse_field(const std::string& s) { return s == "complex" ? FieldMode::Complex : FieldMode::Real; }

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

void error_out(const std::string& kind, const std::string& message) {
    Json j;
    j["error"] = kind;
    j["message"] = message;
    emit(j);
    std::cerr << "error: " << message << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rational solutions of three-term generalized Abel equations"};
    app.require_subcommand(1);
    bool verbose = false;
    app.add_flag("--verbose", verbose, "Human-readable summary on standard error");

    std::string input, field = "real";
    bool oracle = false, strict = false, approx = false;
    int max_order = 0;
    std::string p1, p2, p3, a1, exponents;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("input", input, "Equation document (JSON); standard input when omitted or '-'");
        sub->add_option("--field", field, "real or complex")->check(CLI::IsMember({"real", "complex"}));
    };
    auto* analyze = app.add_subcommand("analyze", "Newton diagram, edge profiles and ND verdict");
    add_common(analyze);
    auto* solve_cmd = app.add_subcommand("solve", "Enumerate the rational solutions");
    add_common(solve_cmd);
    solve_cmd->add_flag("--oracle", oracle, "Cross-check with the divisor oracle");
    solve_cmd->add_option("--max-series-order", max_order, "Series truncation order (0: automatic)")
        ->check(CLI::NonNegativeNumber);
    solve_cmd->add_flag("--strict", strict, "Exit with code 3 when ND fails");
    solve_cmd->add_flag("--approx", approx, "Decimal hints for real leading coefficients");
    auto* nd_cmd = app.add_subcommand("nd", "ND verdict only");
    add_common(nd_cmd);
    nd_cmd->add_flag("--strict", strict, "Exit with code 3 when ND fails");
    auto* bound_cmd = app.add_subcommand("bound", "Counting bounds against the realized count");
    add_common(bound_cmd);
    auto* construct_cmd = app.add_subcommand("construct", "Equation with prescribed rational solutions 1/p_j");
    construct_cmd->add_option("--p1", p1, "First denominator")->required();
    construct_cmd->add_option("--p2", p2, "Second denominator")->required();
    construct_cmd->add_option("--p3", p3, "Third denominator (3x3 system)");
    construct_cmd->add_option("--a1", a1, "A1 for the two-solution construction");
    construct_cmd->add_option("--exponents", exponents, "n1,n2,n3")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    try {
        if (*construct_cmd) {
            const auto n = parse_exponents(exponents);
            if (p3.empty() && a1.empty()) {
                error_out("InvalidSpec", "two-solution construction requires --a1");
                return kExitConstruct;
            }
            const ConstructionResult res =
                p3.empty() ? from_two_solutions({parse_polynomial(p1), parse_polynomial(p2), parse_polynomial(a1), n})
                           : from_three_solutions({parse_polynomial(p1), parse_polynomial(p2), parse_polynomial(p3), n});
            if (auto* e = std::get_if<ConstructionError>(&res)) {
                error_out(construction_error_label(e->kind), e->message);
                return kExitConstruct;
            }
            emit(equation_to_json(std::get<AbelEquation>(res)));
            return kExitOk;
        }

        const AbelEquation eq = parse_equation_document(read_input(input));
        const FieldMode mode = parse_field(field);
        ReportOptions ropts;
        ropts.approx = approx;

        if (*analyze) {
            emit(analyze_report(eq, mode, ropts));
            return kExitOk;
        }
        if (*nd_cmd) {
            Json j = nd_report(eq, mode);
            emit(j);
            if (verbose) std::cerr << "ND " << (j["nd"]["holds"].get<bool>() ? "holds" : "fails") << "\n";
            return strict && !j["nd"]["holds"].get<bool>() ? kExitStrict : kExitOk;
        }

        SolveOptions sopts;
        sopts.run_oracle = oracle;
        sopts.max_series_order = max_order;
        const SolutionSet sols = solve(eq, mode, sopts);
        if (verbose) std::cerr << summary_text(eq, sols);
        if (*bound_cmd) {
            emit(bound_report(eq, sols));
            return kExitOk;
        }
        emit(solve_report(eq, sols, ropts));
        return strict && !sols.nd.holds ? kExitStrict : kExitOk;
    } catch (const ParseError& e) {
        error_out("ParseError", e.what());
        return kExitParse;
    } catch (const InvalidEquation& e) {
        error_out("InvalidEquation", e.what());
        return kExitParse;
    }
}

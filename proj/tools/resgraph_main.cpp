#include "resgraph/dsl.hpp"
#include "resgraph/errors.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using resgraph::Json;

constexpr const char* kFooter = R"(Graph DSL (layout-insensitive):
  graph := decl+
  decl  := "chain" wlist | "cycle" wlist | "star" INT arms | "fork" wlist
         | "vertex" ID "w=" INT ("g=" INT)? | "edge" ID ID
  arms  := "[" wlist ("," wlist)* "]"
  wlist := "[" INT ("," INT)* "]"

A weight n stands for self-intersection E^2 = -n. "fork [n1,...,ns]" is the
forked chain [n1,...,ns;[2]^4] (two weight-2 tips at each end of the spine);
"star n [[a,...],...]" attaches each arm at its first-listed vertex;
chain/cycle/star/fork declarations generate vertex ids v0, v1, ...
A GRAPH argument is inline DSL text, or a path to a file containing it.

Examples:
  resgraph classify "fork [4]"
  resgraph invariants "chain [3,5,2]" --format text
  resgraph classify "vertex e w=1 g=1"
  resgraph hj 25 9
  resgraph verify-table
  resgraph sweep-t-singularities --max-r 200
  resgraph lefschetz --order 5

Exit codes: 0 success, 2 rejected input (parse error, not negative
definite, parameter out of range), 1 internal error or failed table
verification.)";

std::string load_source(const std::string& arg) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec)) {
        std::ifstream in(arg);
        if (!in) throw resgraph::Error("cannot read file '" + arg + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    return arg;
}

void emit(const Json& j, const std::string& format) {
    if (format == "text")
        std::cout << resgraph::render_text(j);
    else
        std::cout << j.dump(2) << '\n';
}

std::string error_kind(const resgraph::Error& e) {
    if (dynamic_cast<const resgraph::ParseError*>(&e)) return "ParseError";
    if (dynamic_cast<const resgraph::NotContractible*>(&e)) return "NotContractible";
    if (dynamic_cast<const resgraph::GraphError*>(&e)) return "GraphError";
    if (dynamic_cast<const resgraph::ShapeMismatch*>(&e)) return "ShapeMismatch";
    if (dynamic_cast<const resgraph::DivisionByZero*>(&e)) return "DivisionByZero";
    if (dynamic_cast<const resgraph::DomainError*>(&e)) return "DomainError";
    return "Error";
}

void report_error(const resgraph::Error& e, const std::string& format) {
    Json j;
    j["schema_version"] = "1";
    j["tool"] = "resgraph";
    Json ej;
    ej["type"] = error_kind(e);
    ej["message"] = e.what();
    j["error"] = std::move(ej);
    emit(j, format);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"resgraph: invariants, classification and Q-Gorenstein smoothability of "
                 "normal surface singularities given by resolution dual graphs"};
    app.require_subcommand(1);
    app.footer(kFooter);

    std::string format = "json";
    if (const char* env = std::getenv("RESGRAPH_FORMAT")) format = env;
    app.add_option("--format", format, "Output format: json or text")
        ->check(CLI::IsMember({"json", "text"}));

    auto* classify_cmd = app.add_subcommand(
        "classify", "Classify a singularity and decide Q-Gorenstein smoothability");
    std::string classify_src;
    bool sweep = false;
    int max_vertices = 8, max_weight = 6;
    classify_cmd->add_option("graph", classify_src, "Graph in the DSL (inline or file path)");
    classify_cmd->add_flag("--sweep", sweep,
                           "Classify all small chains and forked chains instead");
    classify_cmd->add_option("--max-vertices", max_vertices, "Sweep bound on vertex count")
        ->capture_default_str();
    classify_cmd->add_option("--max-weight", max_weight, "Sweep bound on weights")
        ->capture_default_str();

    auto* invariants_cmd = app.add_subcommand(
        "invariants", "Codiscrepancy, K^2, index, fundamental cycle and related invariants");
    std::string invariants_src;
    invariants_cmd->add_option("graph", invariants_src, "Graph in the DSL (inline or file path)")
        ->required();

    auto* hj_cmd =
        app.add_subcommand("hj", "Hirzebruch-Jung data of the cyclic quotient 1/r(1,q)");
    long long hj_r = 0, hj_q = 0;
    hj_cmd->add_option("r", hj_r, "Group order r >= 2")->required();
    hj_cmd->add_option("q", hj_q, "Weight q, 0 < q < r, coprime to r")->required();

    auto* table_cmd = app.add_subcommand(
        "verify-table", "Verify the del Pezzo surface classification table");
    int row = 0, n_param = 0;
    table_cmd->add_option("--row", row, "Restrict to a single row (1..7)");
    table_cmd->add_option("--n", n_param, "Restrict to a single n (needs --row)");

    auto* tsweep_cmd = app.add_subcommand(
        "sweep-t-singularities",
        "Scan cyclic quotients for T-singularities and the K^2 integrality equivalence");
    int max_r = 200;
    tsweep_cmd->add_option("--max-r", max_r, "Largest group order r")->capture_default_str();

    auto* lef_cmd = app.add_subcommand(
        "lefschetz", "Solve the two-fixed-point holomorphic Lefschetz equation in Q(zeta_N)");
    int order = 5;
    lef_cmd->add_option("--order", order, "Cyclotomic order N (prime, 2..13)")
        ->capture_default_str();

    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (format != "json" && format != "text")
            throw resgraph::DomainError("RESGRAPH_FORMAT must be json or text, got '" + format +
                                        "'");

        if (classify_cmd->parsed()) {
            if (sweep) {
                emit(resgraph::classification_sweep_report(
                         resgraph::classification_sweep(max_vertices, max_weight)),
                     format);
            } else {
                if (classify_src.empty())
                    throw resgraph::DomainError("classify needs a graph argument or --sweep");
                const std::string text = load_source(classify_src);
                emit(resgraph::classify_report(resgraph::parse_graph(text), text), format);
            }
        } else if (invariants_cmd->parsed()) {
            const std::string text = load_source(invariants_src);
            emit(resgraph::invariants_report(resgraph::parse_graph(text), text), format);
        } else if (hj_cmd->parsed()) {
            emit(resgraph::hj_report(
                     resgraph::CyclicType{resgraph::Int(hj_r), resgraph::Int(hj_q)}),
                 format);
        } else if (table_cmd->parsed()) {
            if (table_cmd->count("--n") && !table_cmd->count("--row"))
                throw resgraph::DomainError("--n needs --row");
            resgraph::TableVerification tv;
            if (table_cmd->count("--row")) {
                tv.all_ok = true;
                if (table_cmd->count("--n")) {
                    tv.rows.push_back(resgraph::verify_row(row, n_param));
                    tv.all_ok = tv.rows.back().ok;
                } else {
                    const auto [lo, hi] = resgraph::row_n_range(row);
                    for (int n = lo; n <= hi; ++n) {
                        tv.rows.push_back(resgraph::verify_row(row, n));
                        tv.all_ok = tv.all_ok && tv.rows.back().ok;
                    }
                }
            } else {
                tv = resgraph::verify_theorem_main();
            }
            emit(resgraph::table_report(tv), format);
            if (!tv.all_ok) return 1;
        } else if (tsweep_cmd->parsed()) {
            emit(resgraph::t_sweep_report(resgraph::sweep_t_singularities(max_r)), format);
        } else if (lef_cmd->parsed()) {
            emit(resgraph::lefschetz_report(order, resgraph::solve_two_point(order)), format);
        }
        return 0;
    } catch (const resgraph::Error& e) {
        report_error(e, format);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
}

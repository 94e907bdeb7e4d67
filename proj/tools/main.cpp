// singtaut: command-line front end.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "acceptance.hpp"
#include "report.hpp"

#ifndef SINGTAUT_GOLDEN_DIR
#define SINGTAUT_GOLDEN_DIR "tests/golden"
#endif

namespace {

using namespace singtaut;

struct GraphInput {
    DualGraph graph;
    InputDigest digest;
};

GraphInput load_graph(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open graph file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return {parse_graph(ss.str()), {path, fnv1a_hex(ss.str())}};
}

std::string tuple_text(const std::vector<Int>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

std::string classify_line(const FClassification& c) {
    switch (c.kind) {
        case FKind::FRegular: return "F-regular; taut";
        case FKind::FPureNonRDP:
            switch (c.pure_case) {
                case PureCase::Type2222: return "F-pure, not an RDP; not taut (moduli family)";
                case PureCase::DTilde: return "F-pure, not an RDP; tautness not decided by vanishing";
                default: return "F-pure, not an RDP; taut";
            }
        case FKind::RDPEquationDependent: return "rational double point " + c.family + "; F-purity depends on the equation";
        case FKind::NotFPure: return "not F-pure";
        case FKind::NotApplicable: return "not applicable";
    }
    return "?";
}

std::optional<std::array<std::size_t, 3>> parse_order(const std::vector<std::size_t>& v) {
    if (v.empty()) return std::nullopt;
    if (v.size() != 3) throw Error("--order takes three indices");
    return std::array<std::size_t, 3>{v[0], v[1], v[2]};
}

void print_verdict(std::ostream& out, const TautnessVerdict& v, bool rows) {
    out << "verdict: " << to_string(v.kind);
    if (v.method != VerdictMethod::None) out << " (" << to_string(v.method) << ")";
    out << "\n";
    if (v.classification.kind != FKind::NotApplicable) out << "classification: " << to_string(v.classification.kind) << "\n";
    if (!v.type_tuple.empty()) out << "type: " << tuple_text(v.type_tuple) << "\n";
    if (v.slices > 0) out << "slices: " << v.slices << "\n";
    if (v.t_checked >= 0) out << "checked: t = 0.." << v.t_checked << "\n";
    if (v.tail_used) out << "tail threshold: " << v.threshold << "\n";
    if (!v.reason.empty()) out << "reason: " << v.reason << "\n";
    if (v.obstruction) {
        const auto& ob = *v.obstruction;
        out << "obstruction: " << (ob.holds ? "holds" : "fails") << ", target value " << ob.target_value << "\n";
        for (const auto& a : ob.audits)
            out << "  " << a.family << " " << a.generators << " generators, " << a.nonzero << " nonzero: " << a.argument
                << "\n";
    }
    for (const auto& o : v.orbits) {
        out << "orbit " << o.representative << ":";
        for (Int m : o.members) out << " " << m;
        out << "\n";
    }
    if (rows && !v.rows.empty()) {
        out << "t\ty\ttype\tr\ts-r\tsweep\n";
        for (const auto& r : v.rows)
            out << r.t << "\t" << (r.y_ok ? "ok" : "no") << "\t" << to_string(r.x_row.type) << "\t"
                << (r.x_row.r ? std::to_string(*r.x_row.r) : "-") << "\t"
                << (r.x_row.s_minus_r ? std::to_string(*r.x_row.s_minus_r) : "-") << "\t"
                << (r.sweep.ok ? "ok" : r.sweep.reason) << "\n";
    }
}

void print_cech(std::ostream& out, const CechResult& c) {
    out << "rank: " << c.rank << "\n"
        << "rank (doubled window): " << c.rank_doubled << "\n"
        << "stable: " << (c.stable ? "true" : "false") << "\n"
        << "model: " << to_string(c.model) << "\n"
        << "slices: " << c.slices << "\n"
        << "window: " << c.window_s << "," << c.window_r << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tautness and F-singularity checks for weighted dual graphs"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "text";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

    std::string graph_path, poly, which, golden = SINGTAUT_GOLDEN_DIR, z_tilde;
    Int p = 0, n_max = 10;
    std::optional<Int> lambda, t_max;
    std::vector<Int> window;
    std::vector<std::size_t> order;
    bool rows = false, catalog = false;
    std::uint64_t seed = AcceptanceOptions{}.seed;
    int only = 0;

    auto add_graph = [&](CLI::App* sub) {
        sub->add_option("--graph", graph_path, "Graph file")->required();
        sub->add_option("--char", p, "Characteristic")->required();
    };
    auto add_window = [&](CLI::App* sub) {
        sub->add_option("--window", window, "Window sizes S,R")->delimiter(',')->expected(2);
        sub->add_option("--z-tilde", z_tilde, "Override cycle, e.g. E1=7,E2=5");
    };

    auto* classify = app.add_subcommand("classify", "F-regularity and F-purity of a graph");
    add_graph(classify);
    classify->add_option("--lambda", lambda, "Cross ratio of a (2,2,2,2) star");

    auto* taut = app.add_subcommand("taut", "Tautness certificate");
    add_graph(taut);
    add_window(taut);
    taut->add_option("--lambda", lambda, "Cross ratio of a (2,2,2,2) star");
    taut->add_option("--t-max", t_max, "Last slice checked explicitly");
    taut->add_option("--order", order, "Branch order i,j,k")->delimiter(',')->expected(3);
    taut->add_flag("--rows", rows, "Print every certificate row");

    auto* fedder = app.add_subcommand("fedder", "Fedder's criterion for a hypersurface");
    fedder->add_option("--poly", poly, "Polynomial in x, y, z");
    fedder->add_option("--char", p, "Characteristic")->required();
    fedder->add_flag("--catalog", catalog, "Run the normal-form catalog instead");
    fedder->add_option("--n-max", n_max, "Largest family parameter in the catalog");

    auto* tables = app.add_subcommand("tables", "Coboundary type tables");
    tables->add_option("--which", which, "t1, t2, c236, c236b or c244")->required();

    auto* h1 = app.add_subcommand("h1", "Truncated Cech rank of the tangent sheaf");
    add_graph(h1);
    add_window(h1);

    auto* corpus = app.add_subcommand("corpus", "Run the acceptance suite");
    corpus->add_option("--golden", golden, "Directory with golden tables");
    corpus->add_option("--seed", seed, "Seed for the property suites");
    corpus->add_option("--only", only, "Run a single criterion")->check(CLI::Range(1, kCriterionCount));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    RunReport report;
    report.arguments.assign(argv + 1, argv + argc);
    std::ostringstream text;
    try {
        if (*classify) {
            report.command = "classify";
            auto in = load_graph(graph_path);
            report.inputs.push_back(in.digest);
            std::optional<CrossRatio> cr;
            if (lambda) cr = CrossRatio(*lambda, p);
            const auto c = hara_f_pure(in.graph, p, cr);
            report.result = c;
            report.clauses.push_back(c.clause);
            text << classify_line(c) << "\n" << "rule: " << c.clause << "\n";
        } else if (*taut) {
            report.command = "taut";
            auto in = load_graph(graph_path);
            report.inputs.push_back(in.digest);
            TautOptions opt;
            opt.lambda = lambda;
            opt.t_max = t_max;
            opt.order = parse_order(order);
            if (!z_tilde.empty()) opt.z_tilde = parse_cycle(in.graph, z_tilde);
            const auto v = taut_certificate(in.graph, p, opt);
            report.result = json{{"verdict", v}};
            if (!v.classification.clause.empty()) report.clauses.push_back(v.classification.clause);
            if (!v.reason.empty()) report.clauses.push_back(v.reason);
            print_verdict(text, v, rows);
            if (!window.empty()) {
                const auto c = cech_h1_rank(in.graph, p, window[0], window[1], opt.z_tilde, opt.order);
                report.result["cech"] = c;
                print_cech(text, c);
            }
        } else if (*fedder) {
            report.command = "fedder";
            if (catalog) {
                json rowsj = json::array();
                text << "graph\ttype\tequation\tF-pure\texpected\n";
                for (const auto& r : rdp_catalog(p, n_max)) {
                    const bool got = fedder_is_f_pure(r.equation);
                    rowsj.push_back({{"graph", r.graph_label},
                                     {"type", r.artin_type},
                                     {"equation", r.equation_text},
                                     {"f_pure", got},
                                     {"expected", r.expected_f_pure}});
                    text << r.graph_label << "\t" << r.artin_type << "\t" << r.equation_text << "\t"
                         << (got ? "true" : "false") << "\t" << (r.expected_f_pure ? "true" : "false") << "\n";
                    if (got != r.expected_f_pure) report.exit_status = 1;
                }
                report.result = json{{"catalog", rowsj}};
            } else {
                if (poly.empty()) throw Error("fedder needs --poly or --catalog");
                const auto f = poly_parse(poly, p);
                const bool pure = fedder_is_f_pure(f);
                report.result = json{{"poly", f.to_string()}, {"f_pure", pure}};
                report.clauses.push_back("f^(p-1) outside (x^p, y^p, z^p)");
                text << "F-pure: " << (pure ? "true" : "false") << "\n";
            }
        } else if (*tables) {
            report.command = "tables";
            const auto id = parse_table_id(which);
            if (!id) throw Error("unknown table " + which);
            const auto rowsv = reproduce_table(*id);
            report.result = json{{"table", table_name(*id)}, {"rows", rowsv}};
            text << format_table(rowsv);
        } else if (*h1) {
            report.command = "h1";
            auto in = load_graph(graph_path);
            report.inputs.push_back(in.digest);
            std::optional<CycleVec> zt;
            if (!z_tilde.empty()) zt = parse_cycle(in.graph, z_tilde);
            const Int S = window.empty() ? 64 : window[0];
            const Int R = window.empty() ? 8 : window[1];
            const auto c = cech_h1_rank(in.graph, p, S, R, zt);
            report.result = c;
            print_cech(text, c);
        } else if (*corpus) {
            report.command = "corpus";
            AcceptanceOptions opt;
            opt.golden_dir = golden;
            opt.seed = seed;
            std::vector<CriterionResult> results;
            if (only)
                results.push_back(run_criterion(only, opt));
            else
                results = run_acceptance(opt);
            json arr = json::array();
            for (const auto& r : results) {
                arr.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}, {"millis", r.millis}});
                text << format_result(r) << "\n";
                if (!r.pass) report.exit_status = 1;
            }
            report.result = json{{"criteria", arr}};
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    if (format == "json")
        std::cout << json(report).dump(2) << "\n";
    else
        std::cout << text.str();
    return report.exit_status;
}

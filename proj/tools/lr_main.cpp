// lr: colour refinement and long-refinement graph toolkit.
//
// Commands: refine, analyze, distinguish, string (realize|extract|family),
// family, catalog, search, gap-check, cross-validate.
// Exit codes: 0 success, 1 usage/parse, 2 I/O, 3 budget exceeded,
// 4 assertion flag triggered.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "lr/analyze.hpp"
#include "lr/canon.hpp"
#include "lr/dot.hpp"
#include "lr/families.hpp"
#include "lr/graph6.hpp"
#include "lr/json_io.hpp"
#include "lr/refine.hpp"
#include "lr/search.hpp"
#include "lr/strings.hpp"

namespace {

using namespace lr;

struct GraphInput {
    std::string g6;
    std::string file;
    std::string lr_string;

    void attach(CLI::App* cmd, const std::string& prefix = "") {
        cmd->add_option("--" + prefix + "g6", g6, "inline graph6 text (\"-\" reads stdin)");
        cmd->add_option("--" + prefix + "file", file, "file with one graph6 per line");
        cmd->add_option("--" + prefix + "string", lr_string, "long-refinement string to realize");
    }

    Graph load() const {
        int sources = !g6.empty() + !file.empty() + !lr_string.empty();
        if (sources != 1)
            throw CLI::ValidationError("input", "exactly one of --g6/--file/--string is required");
        if (!lr_string.empty()) return realize(parse_lr_string(lr_string)).graph;
        if (!g6.empty()) {
            if (g6 == "-") {
                std::string line;
                if (!std::getline(std::cin, line)) throw std::runtime_error("empty stdin");
                return parse_graph6(line);
            }
            return parse_graph6(g6);
        }
        std::ifstream in(file);
        if (!in) throw std::ios_base::failure("cannot open " + file);
        auto graphs = read_graph6_lines(in);
        if (graphs.empty()) throw std::ios_base::failure("no graphs in " + file);
        return graphs.front();
    }
};

std::pair<int, int> parse_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        int v = std::stoi(text);
        return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
}

std::vector<int> parse_degrees(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    std::sort(out.begin(), out.end());
    return out;
}

const char* status_str(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "FAIL";
        case CheckStatus::Vacuous: return "vacuous";
    }
    return "?";
}

void print_report_table(const StructureReport& report) {
    for (const auto& check : report.checks) {
        std::cout << "  " << status_str(check.status) << "\t" << check.name;
        if (!check.witness.empty()) std::cout << "\t" << check.witness;
        std::cout << "\n";
    }
    if (report.phase) {
        const PairPhase& ph = *report.phase;
        std::cout << "  pair phase: p=" << ph.p << " n_pairs=" << ph.n_pairs << " a=" << ph.a
                  << " b=" << ph.b << " ell=" << ph.ell << " t=" << ph.t << " d=" << ph.d
                  << " ell'=" << ph.ell_prime << "\n";
    }
    std::cout << (report.all_pass() ? "all checks pass" : "CHECKS FAILED") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"colour refinement / long-refinement graph toolkit"};
    app.require_subcommand(1);

    // refine
    auto* refine_cmd = app.add_subcommand("refine", "run colour refinement, print the iteration number");
    GraphInput refine_in;
    refine_in.attach(refine_cmd);
    bool refine_trace = false, refine_fast_engine = false, refine_dot = false;
    refine_cmd->add_flag("--trace", refine_trace, "emit the full trace as JSON lines");
    refine_cmd->add_flag("--fast", refine_fast_engine, "use the worklist engine");
    refine_cmd->add_flag("--dot", refine_dot, "emit DOT coloured by the stable partition");

    // analyze
    auto* analyze_cmd = app.add_subcommand("analyze", "verify the structural lemma checks");
    GraphInput analyze_in;
    analyze_in.attach(analyze_cmd);
    bool analyze_json = false;
    analyze_cmd->add_flag("--json", analyze_json, "emit the report as JSON");

    // distinguish
    auto* dist_cmd = app.add_subcommand("distinguish", "distinguishing iteration of two graphs");
    GraphInput dist_g, dist_h;
    dist_g.attach(dist_cmd, "");
    dist_h.attach(dist_cmd, "other-");
    bool assert_not_last = false;
    dist_cmd->add_flag("--assert-not-last", assert_not_last,
                       "exit 4 if the result equals max(|G|,|H|)-1");

    // string
    auto* string_cmd = app.add_subcommand("string", "long-refinement string operations");
    string_cmd->require_subcommand(1);
    auto* realize_cmd = string_cmd->add_subcommand("realize", "string -> graph6 + report");
    std::string realize_text;
    realize_cmd->add_option("text", realize_text )->required();
    auto* extract_cmd = string_cmd->add_subcommand("extract", "graph6 -> string");
    std::string extract_g6;
    extract_cmd->add_option("graph6", extract_g6)->required();
    auto* family_str_cmd = string_cmd->add_subcommand("family", "expand a classification family");
    std::string family_id;
    int family_k = 0;
    family_str_cmd->add_option("--family", family_id, "even-1..even-6, odd-1..odd-5")->required();
    family_str_cmd->add_option("--k", family_k)->required();

    // family (tables)
    auto* table_cmd = app.add_subcommand("family", "generate a table family graph");
    int table_no = 1, table_variant = 1, table_k = 0;
    table_cmd->add_option("--table", table_no, "1..3")->required();
    table_cmd->add_option("--variant", table_variant, "1..2")->required();
    table_cmd->add_option("--k", table_k)->required();

    // catalog
    auto* catalog_cmd = app.add_subcommand("catalog", "classified graphs in an order range");
    std::string catalog_order = "2..20", catalog_degrees, catalog_json_path;
    catalog_cmd->add_option("--order", catalog_order, "range A..B");
    catalog_cmd->add_option("--degrees", catalog_degrees, "e.g. 2,3");
    catalog_cmd->add_option("--provenance", catalog_json_path, "write provenance JSON here");

    // search
    auto* search_cmd = app.add_subcommand("search", "exhaustive isomorph-free search");
    int search_n = 0;
    std::string search_degrees = "1,2,3,4";
    long long budget_nodes = 0, budget_ms = 0;
    int threads = 0;
    bool search_all = false;
    search_cmd->add_option("--n", search_n)->required();
    search_cmd->add_option("--degrees", search_degrees);
    search_cmd->add_option("--budget-nodes", budget_nodes);
    search_cmd->add_option("--budget-ms", budget_ms);
    search_cmd->add_option("--threads", threads, "0 = LR_THREADS env or hardware");
    search_cmd->add_flag("--all", search_all, "list all enumerated graphs, not only long-refinement");

    // gap-check
    auto* gap_cmd = app.add_subcommand("gap-check", "degree-{2,3} orders with empty catalog");
    int gap_max = 60;
    gap_cmd->add_option("--max", gap_max, "scan orders in [2, max)");

    // cross-validate
    auto* cv_cmd = app.add_subcommand("cross-validate", "search vs catalog set equality");
    std::string cv_orders = "2..10", cv_degrees = "2,3";
    cv_cmd->add_option("--orders", cv_orders);
    cv_cmd->add_option("--degrees", cv_degrees);
    cv_cmd->add_option("--threads", threads);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*refine_cmd) {
            Graph g = refine_in.load();
            RefinementTrace trace = refine_fast_engine ? refine_fast(g) : run_colour_refinement(g);
            std::cout << "iteration_number " << trace.iteration_number << "\n";
            std::cout << "long_refinement " << (is_long_refinement(trace, g.order()) ? "yes" : "no")
                      << "\n";
            if (refine_trace) std::cout << trace_to_json_lines(trace);
            if (refine_dot) std::cout << write_dot(g, &trace.stable().colour);
        } else if (*analyze_cmd) {
            Graph g = analyze_in.load();
            StructureReport report = verify_structure(g);
            if (analyze_json)
                std::cout << report_to_json(report) << "\n";
            else
                print_report_table(report);
        } else if (*dist_cmd) {
            Graph g = dist_g.load();
            Graph h = dist_h.load();
            auto result = distinguishing_iteration(g, h);
            if (result)
                std::cout << "distinguished at iteration " << *result << "\n";
            else
                std::cout << "equivalent\n";
            if (assert_not_last && result && *result == std::max(g.order(), h.order()) - 1)
                return 4;
        } else if (*realize_cmd) {
            RealizedGraph rg = realize(parse_lr_string(realize_text));
            std::cout << write_graph6(rg.graph) << "\n";
            print_report_table(verify_structure(rg.graph));
        } else if (*extract_cmd) {
            std::cout << to_string(extract_string(parse_graph6(extract_g6))) << "\n";
        } else if (*family_str_cmd) {
            LrString s = expand_family(family_id, family_k);
            std::cout << to_string(s) << "\n";
            std::cout << write_graph6(realize(s).graph) << "\n";
        } else if (*table_cmd) {
            Graph g = table_family({table_no, table_variant, table_k});
            std::cout << write_graph6(g) << "\n";
        } else if (*catalog_cmd) {
            CatalogQuery query;
            std::tie(query.order_lo, query.order_hi) = parse_range(catalog_order);
            if (!catalog_degrees.empty()) query.degrees = parse_degrees(catalog_degrees);
            CatalogResult result = catalog(query);
            for (const auto& entry : result.entries)
                std::cout << write_graph6(entry.graph) << "  # n=" << entry.order << " "
                          << entry.provenance << "\n";
            if (!catalog_json_path.empty()) {
                std::ofstream out(catalog_json_path);
                if (!out) throw std::ios_base::failure("cannot write " + catalog_json_path);
                out << catalog_provenance_json(result) << "\n";
            }
            for (const auto& id : result.unavailable)
                std::cerr << "unavailable: " << id << " (no data file)\n";
        } else if (*search_cmd) {
            SearchSpec spec;
            spec.n = search_n;
            spec.degrees = parse_degrees(search_degrees);
            SearchBudget budget;
            if (budget_nodes > 0) budget.max_nodes = budget_nodes;
            if (budget_ms > 0) budget.max_millis = budget_ms;
            if (search_all) {
                spec.two_degree_filter = false;
                auto found = enumerate_collect(spec, budget, threads);
                for (const auto& g : found) std::cout << write_graph6(g) << "\n";
                std::cout << "# " << found.size() << " graphs\n";
            } else {
                auto found = find_long_refinement(spec, budget, threads);
                for (const auto& g : found) std::cout << write_graph6(g) << "\n";
                std::cout << "# " << found.size() << " long-refinement graphs\n";
            }
        } else if (*gap_cmd) {
            for (int order : gap_check(gap_max)) std::cout << order << " {2,3}\n";
        } else if (*cv_cmd) {
            auto [lo, hi] = parse_range(cv_orders);
            CrossValidationReport report = cross_validate(lo, hi, parse_degrees(cv_degrees),
                                                          SearchBudget{}, threads);
            std::cout << cross_validation_json(report) << "\n";
            if (!report.consistent()) return 4;
        }
    } catch (const Graph6Error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const LrParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const BudgetError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return 2;
    } catch (const RealizeError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

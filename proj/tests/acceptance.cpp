// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Run through ctest or directly; criterion 7 is the slow one.
#include <chrono>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "lr/analyze.hpp"
#include "lr/canon.hpp"
#include "lr/families.hpp"
#include "lr/graph6.hpp"
#include "lr/refine.hpp"
#include "lr/search.hpp"
#include "lr/strings.hpp"

using namespace lr;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

struct Criterion {
    const char* name;
    Clock::time_point start = Clock::now();
    explicit Criterion(const char* name_) : name(name_) {}
    void finish(bool ok, const std::string& detail) const {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
        printf("[%s] %s (%lld ms) %s\n", ok ? "PASS" : "FAIL", name,
               static_cast<long long>(ms.count()), detail.c_str());
        fflush(stdout);
        if (!ok) ++failures;
    }
    long long elapsed_ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
    }
};

std::vector<std::pair<std::string, Graph>> criteria23_graphs() {
    std::vector<std::pair<std::string, Graph>> out;
    for (const std::string& family : kFamilyIds) {
        for (int k = 0; k <= 5; ++k) {
            out.emplace_back(family + ":k=" + std::to_string(k),
                             realize(expand_family(family, k)).graph);
            if (family == "even-1" || family == "odd-1") break;
        }
    }
    for (int table : {1, 2, 3})
        for (int variant : {1, 2})
            for (int k = (table == 1 && variant == 1) ? 1 : 0; k <= 5; ++k)
                out.emplace_back("table" + std::to_string(table) + ":v" + std::to_string(variant) +
                                     ":k=" + std::to_string(k),
                                 table_family({table, variant, k}));
    return out;
}

Graph random_graph(int n, double p, std::mt19937& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v)
        for (int u = v + 1; u < n; ++u)
            if (coin(rng)) edges.emplace_back(v, u);
    return Graph::from_edges(n, edges);
}

}  // namespace

int main() {
    // 1. path formula
    {
        Criterion c("1 path-formula");
        bool ok = true;
        std::string detail;
        for (int n = 2; n <= 50 && ok; ++n) {
            int got = run_colour_refinement(path_graph(n)).iteration_number;
            if (got != (n - 1) / 2) {
                ok = false;
                detail = "P_" + std::to_string(n) + " gave " + std::to_string(got);
            }
        }
        if (ok && c.elapsed_ms() >= 1000) {
            ok = false;
            detail = "runtime budget 1 s exceeded";
        }
        c.finish(ok, detail);
    }

    // 2. string families
    {
        Criterion c("2 string-families");
        bool ok = true;
        std::string detail;
        for (const std::string& family : kFamilyIds) {
            for (int k = 0; k <= 5 && ok; ++k) {
                LrString s = expand_family(family, k);
                std::string where = family + ":k=" + std::to_string(k);
                try {
                    RealizedGraph rg = realize(s);
                    RefinementTrace t = run_colour_refinement(rg.graph);
                    bool odd_family = family[0] == 'o';
                    if (t.iteration_number != rg.graph.order() - 1 ||
                        rg.graph.degree_set() != std::vector<int>{2, 3} ||
                        (rg.graph.order() % 2 == 1) != odd_family ||
                        !(extract_string(rg.graph) == s)) {
                        ok = false;
                        detail = where;
                    }
                } catch (const std::exception& e) {
                    ok = false;
                    detail = where + ": " + e.what();
                }
                if (family == "even-1" || family == "odd-1") break;
            }
        }
        if (ok && c.elapsed_ms() >= 30000) {
            ok = false;
            detail = "runtime budget 30 s exceeded";
        }
        c.finish(ok, detail);
    }

    // 3. table families
    {
        Criterion c("3 table-families");
        bool ok = true;
        std::string detail;
        for (int table : {1, 2, 3}) {
            for (int variant : {1, 2}) {
                for (int k = (table == 1 && variant == 1) ? 1 : 0; k <= 5 && ok; ++k) {
                    std::string where = "table" + std::to_string(table) + ":v" +
                                        std::to_string(variant) + ":k=" + std::to_string(k);
                    try {
                        Graph g = table_family({table, variant, k});
                        int expected = table == 1 ? 6 * k + 13 : table == 2 ? 6 * k + 15 : 6 * k + 19;
                        if (g.order() != expected) {
                            ok = false;
                            detail = where + ": order " + std::to_string(g.order()) +
                                     " != stated " + std::to_string(expected) +
                                     " (the published order formula for this family is off by two;"
                                     " the graphs themselves are valid)";
                        } else if (g.degree_set() != std::vector<int>{3, 4} ||
                                   run_colour_refinement(g).iteration_number != g.order() - 1) {
                            ok = false;
                            detail = where;
                        }
                    } catch (const std::exception& e) {
                        ok = false;
                        detail = where + ": " + e.what();
                    }
                }
            }
        }
        if (ok && c.elapsed_ms() >= 30000) {
            ok = false;
            detail = "runtime budget 30 s exceeded";
        }
        c.finish(ok, detail);
    }

    auto corpus = [] {
        try {
            return criteria23_graphs();
        } catch (const std::exception&) {
            return std::vector<std::pair<std::string, Graph>>{};
        }
    }();

    // 4. structure suite over criteria 2-3 graphs
    {
        Criterion c("4 structure-suite");
        bool ok = !corpus.empty();
        std::string detail = corpus.empty() ? "corpus unavailable" : "";
        for (const auto& [name, g] : corpus) {
            StructureReport report = verify_structure(g);
            if (!report.all_pass()) {
                ok = false;
                for (const auto& check : report.checks)
                    if (check.status == CheckStatus::Fail)
                        detail = name + " fails " + check.name + " [" + check.witness + "]";
                break;
            }
        }
        c.finish(ok, detail);
    }

    // 5. complement closure
    {
        Criterion c("5 complement-closure");
        bool ok = !corpus.empty();
        std::string detail = corpus.empty() ? "corpus unavailable" : "";
        for (const auto& [name, g] : corpus) {
            Graph comp = g.complement();
            RefinementTrace tg = run_colour_refinement(g);
            RefinementTrace tc = run_colour_refinement(comp);
            if (tc.iteration_number != comp.order() - 1 ||
                tg.partitions.size() != tc.partitions.size()) {
                ok = false;
                detail = name;
                break;
            }
            for (size_t i = 0; i < tg.partitions.size(); ++i)
                if (!same_partition(tg.partitions[i], tc.partitions[i])) {
                    ok = false;
                    detail = name + " differs at iteration " + std::to_string(i);
                    break;
                }
            if (!ok) break;
        }
        c.finish(ok, detail);
    }

    // 6. engine equivalence
    {
        Criterion c("6 engine-equivalence");
        bool ok = true;
        std::string detail;
        std::mt19937 rng(20260810);
        const double probs[3] = {0.1, 0.3, 0.5};
        for (int trial = 0; trial < 1000 && ok; ++trial) {
            int n = 1 + static_cast<int>(rng() % 64);
            Graph g = random_graph(n, probs[trial % 3], rng);
            RefinementTrace naive = run_colour_refinement(g);
            RefinementTrace fast = refine_fast(g);
            if (naive.partitions.size() != fast.partitions.size()) ok = false;
            for (size_t i = 0; ok && i < naive.partitions.size(); ++i)
                if (!same_partition(naive.partitions[i], fast.partitions[i])) ok = false;
            if (!ok) detail = "random trial " + std::to_string(trial);
        }
        for (const auto& [name, g] : corpus) {
            if (!ok) break;
            RefinementTrace naive = run_colour_refinement(g);
            RefinementTrace fast = refine_fast(g);
            if (naive.partitions.size() != fast.partitions.size()) ok = false;
            for (size_t i = 0; ok && i < naive.partitions.size(); ++i)
                if (!same_partition(naive.partitions[i], fast.partitions[i])) ok = false;
            if (!ok) detail = name;
        }
        if (ok && c.elapsed_ms() >= 60000) {
            ok = false;
            detail = "runtime budget 60 s exceeded";
        }
        c.finish(ok, detail);
    }

    // 7. exhaustive cross-validation
    {
        Criterion c("7 cross-validation");
        bool ok = true;
        std::string detail;
        try {
            auto remaining_budget = [&] {
                SearchBudget budget;
                budget.max_millis = std::max(1LL, 10 * 60 * 1000 - c.elapsed_ms());
                return budget;
            };
            auto check_report = [&](const CrossValidationReport& report, const char* tag) {
                for (const auto& row : report.rows) {
                    if (!row.search_only.empty() || !row.catalog_only.empty()) {
                        ok = false;
                        detail = std::string(tag) + " order " + std::to_string(row.order) + ": " +
                                 std::to_string(row.search_only.size()) + " search-only, " +
                                 std::to_string(row.catalog_only.size()) + " catalog-only";
                    }
                    if (row.order <= 9 && row.common != 0) {
                        ok = false;
                        detail = std::string(tag) + ": nonempty below order 10";
                    }
                }
            };
            check_report(cross_validate(2, 12, {2, 3}, remaining_budget()), "{2,3}");
            check_report(cross_validate(2, 10, {1, 2}, remaining_budget()), "{1,2}");
            check_report(cross_validate(2, 10, {1, 3}, remaining_budget()), "{1,3}");
            check_report(cross_validate(2, 10, {1, 4}, remaining_budget()), "{1,4}");
            check_report(cross_validate(2, 10, {2, 4}, remaining_budget()), "{2,4}");
            check_report(cross_validate(2, 10, {3, 4}, remaining_budget()), "{3,4}");
        } catch (const std::exception& e) {
            ok = false;
            detail = e.what();
        }
        if (ok && c.elapsed_ms() >= 600000) {
            ok = false;
            detail = "runtime budget 10 min exceeded";
        }
        c.finish(ok, detail);
    }

    // 8. gap corollary
    {
        Criterion c("8 gap-corollary");
        bool ok = true;
        std::string detail;
        try {
            std::set<int> reported;
            for (int order : gap_check(60))
                if (order % 18 == 6 || order % 18 == 12) reported.insert(order);
            std::set<int> expected{6, 24, 30, 42, 48};
            if (reported != expected) {
                ok = false;
                detail = "got {";
                for (int order : reported) detail += std::to_string(order) + ",";
                detail += "}";
            }
        } catch (const std::exception& e) {
            ok = false;
            detail = e.what();
        }
        c.finish(ok, detail);
    }

    // 9. no last-iteration distinguishing pair
    {
        Criterion c("9 no-last-iteration-pair");
        bool ok = !corpus.empty();
        std::string detail = corpus.empty() ? "corpus unavailable" : "";
        std::map<int, std::vector<const Graph*>> by_order;
        for (const auto& [name, g] : corpus) by_order[g.order()].push_back(&g);
        for (const auto& [order, graphs] : by_order) {
            for (size_t i = 0; i < graphs.size() && ok; ++i)
                for (size_t j = i + 1; j < graphs.size() && ok; ++j) {
                    auto result = distinguishing_iteration(*graphs[i], *graphs[j]);
                    if (result && *result >= order - 1) {
                        ok = false;
                        detail = "catalog pair at order " + std::to_string(order) +
                                 " distinguished at " + std::to_string(*result);
                    }
                }
        }
        std::mt19937 rng(1917);
        const double probs[3] = {0.1, 0.3, 0.5};
        for (int trial = 0; trial < 500 && ok; ++trial) {
            int n = 3 + static_cast<int>(rng() % 62);
            Graph g = random_graph(n, probs[trial % 3], rng);
            Graph h = random_graph(n, probs[(trial + 1) % 3], rng);
            auto result = distinguishing_iteration(g, h);
            if (result && *result == n - 1) {
                ok = false;
                detail = "random pair at order " + std::to_string(n);
            }
        }
        c.finish(ok, detail);
    }

    // 10. enumeration oracle
    {
        Criterion c("10 enumeration-oracle");
        bool ok = true;
        std::string detail;
        try {
            for (int n = 1; n <= 7 && ok; ++n) {
                SearchSpec spec;
                spec.n = n;
                spec.degrees = {4};
                spec.two_degree_filter = false;
                if (enumerate_canonical(spec) != brute_force_connected(n, 4)) {
                    ok = false;
                    detail = "mismatch at n=" + std::to_string(n);
                }
            }
        } catch (const std::exception& e) {
            ok = false;
            detail = e.what();
        }
        if (ok && c.elapsed_ms() >= 60000) {
            ok = false;
            detail = "runtime budget 60 s exceeded";
        }
        c.finish(ok, detail);
    }

    printf("%d criterion failure(s)\n", failures);
    return failures == 0 ? 0 : 1;
}

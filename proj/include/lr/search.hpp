#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lr/canon.hpp"
#include "lr/graph.hpp"

namespace lr {

/// Target of an exhaustive run: connected graphs of order n whose degree
/// set is a two-element subset of `degrees`. `two_degree_filter` can be
/// dropped to stream the whole universe (all connected graphs with maximum
/// degree <= max(degrees)).
struct SearchSpec {
    int n = 0;
    std::vector<int> degrees;
    bool connected = true;
    bool two_degree_filter = true;
};

struct SearchBudget {
    long long max_nodes = 4'000'000'000LL;
    long long max_millis = 30 * 60 * 1000LL;
};

/// Raised when the configured budget is exhausted; never silent truncation.
struct BudgetError : std::runtime_error {
    BudgetError(const std::string& what, long long nodes_) : std::runtime_error(what), nodes(nodes_) {}
    long long nodes;
};

/// Isomorph-free exhaustive enumeration by vertex augmentation with
/// canonical-deletion parent checks. Emits every matching graph exactly
/// once up to isomorphism. The callback runs on worker threads; use
/// enumerate_collect for a deterministic merged list.
void enumerate(const SearchSpec& spec, const SearchBudget& budget,
               const std::function<void(const Graph&)>& emit, int threads = 0);

/// Enumeration result merged deterministically by canonical form.
std::vector<Graph> enumerate_collect(const SearchSpec& spec, const SearchBudget& budget = {},
                                     int threads = 0);

/// Brute-force oracle: all labelled graphs on n vertices (n <= 8) with
/// isomorphism rejection via canonical forms. Independent of the
/// augmentation path; returns sorted canonical forms.
std::vector<std::string> brute_force_connected(int n, int max_degree);

/// Canonical forms of enumerate_collect output, sorted.
std::vector<std::string> enumerate_canonical(const SearchSpec& spec, const SearchBudget& budget = {},
                                             int threads = 0);

/// The enumerated graphs that are long-refinement, merged by canonical form.
std::vector<Graph> find_long_refinement(const SearchSpec& spec, const SearchBudget& budget = {},
                                        int threads = 0);

struct CrossValidationRow {
    int order;
    std::vector<int> degrees;
    std::vector<std::string> search_only;   // canonical forms found by search, missing in catalog
    std::vector<std::string> catalog_only;  // catalog entries the search did not find
    int common = 0;
};

struct CrossValidationReport {
    std::vector<CrossValidationRow> rows;
    bool consistent() const {
        for (const auto& row : rows)
            if (!row.search_only.empty() || !row.catalog_only.empty()) return false;
        return true;
    }
};

/// Set equality (under canonical forms) between exhaustive search and the
/// catalog, order by order.
CrossValidationReport cross_validate(int order_lo, int order_hi, const std::vector<int>& degrees,
                                     const SearchBudget& budget = {}, int threads = 0);

int default_thread_count();

}  // namespace lr

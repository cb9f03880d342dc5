#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lr/graph.hpp"

namespace lr {

/// One of the two adjacency variants of Tables 1-3 (orders 6k+13, 6k+15,
/// 6k+19) at a concrete parameter. Table 1 variant 1 needs k >= 1.
struct TableFamilySpec {
    int table = 1;
    int variant = 1;
    int k = 0;
};

/// Expands the transcribed adjacency rows for the spec, validates perfect
/// row symmetry (an asymmetry is a transcription error and aborts), the
/// order formula, DegreeSet {3,4} and the long-refinement property.
Graph table_family(const TableFamilySpec& spec);

/// Expected order for a table spec: 6k+13 / 6k+15 / 6k+19.
int table_family_order(int table, int k);

/// The unique long-refinement graph with degrees {1,3}: the realization of
/// S1_211XX with a fresh degree-1 vertex attached to its only degree-2
/// vertex. Validated on construction.
Graph unique_deg13_graph();

struct CatalogEntry {
    Graph graph;
    std::string provenance;
    int order = 0;
    std::vector<int> degrees;
};

struct CatalogQuery {
    int order_lo = 2;
    int order_hi = 0;
    std::vector<int> degrees;  // empty = no filter
};

struct CatalogResult {
    std::vector<CatalogEntry> entries;      // sorted by (order, provenance), iso-deduplicated
    std::vector<std::string> unavailable;   // sporadic figure ids without a data file
};

/// All classified long-refinement graphs in the order range: the eleven
/// string families, the table families, the {1,3} construction and the
/// sporadic data files, deduplicated up to isomorphism.
CatalogResult catalog(const CatalogQuery& query);

/// Orders in [2, max_order) with no degree-{2,3} catalog entry.
std::vector<int> gap_check(int max_order);

/// Sporadic figure ids named by the classification theorems.
std::vector<std::string> sporadic_manifest_ids();

/// Directory the data files are loaded from (LR_DATA_DIR env overrides the
/// build-time default).
std::string data_directory();

}  // namespace lr

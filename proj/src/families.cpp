#include <algorithm>
#include <fstream>
#include <future>
#include <set>

#include <json.hpp>

#include "lr/canon.hpp"
#include "lr/families.hpp"
#include "lr/graph6.hpp"
#include "lr/refine.hpp"
#include "lr/strings.hpp"

namespace lr {

Graph unique_deg13_graph() {
    RealizedGraph base = realize(parse_lr_string("S1_211XX"));
    int anchor = -1;
    for (int v = 0; v < base.graph.order(); ++v)
        if (base.graph.degree(v) == 2) {
            if (anchor != -1) throw std::runtime_error("S1_211XX should have one degree-2 vertex");
            anchor = v;
        }
    std::vector<Edge> edges = base.graph.edges();
    edges.emplace_back(anchor, base.graph.order());
    Graph g = Graph::from_edges(base.graph.order() + 1, edges);
    if (g.degree_set() != std::vector<int>{1, 3} || !is_long_refinement(g))
        throw std::runtime_error("deg-{1,3} construction failed validation");
    return g;
}

namespace {

using nlohmann::json;

bool order_in(int order, const CatalogQuery& q) {
    return order >= q.order_lo && order <= q.order_hi;
}

bool degrees_match(const std::vector<int>& degs, const CatalogQuery& q) {
    return q.degrees.empty() || degs == q.degrees;
}

CatalogEntry make_entry(Graph g, std::string provenance) {
    CatalogEntry e;
    e.order = g.order();
    e.degrees = g.degree_set();
    e.graph = std::move(g);
    e.provenance = std::move(provenance);
    return e;
}

std::vector<CatalogEntry> string_family_entries(const CatalogQuery& q) {
    std::vector<CatalogEntry> out;
    for (const std::string& family : kFamilyIds) {
        bool one_string = family == "even-1" || family == "odd-1";
        for (int k = 0;; ++k) {
            LrString s = expand_family(family, k);
            if (s.order() > q.order_hi) break;
            if (order_in(s.order(), q))
                out.push_back(make_entry(realize(s).graph,
                                         "string:" + family + ":k=" + std::to_string(k)));
            if (one_string) break;
        }
    }
    return out;
}

std::vector<CatalogEntry> table_entries(const CatalogQuery& q) {
    std::vector<CatalogEntry> out;
    for (int table : {1, 2, 3}) {
        for (int variant : {1, 2}) {
            int k0 = (table == 1 && variant == 1) ? 1 : 0;
            for (int k = k0; table_family_order(table, k) <= q.order_hi; ++k) {
                if (!order_in(table_family_order(table, k), q)) continue;
                out.push_back(make_entry(table_family({table, variant, k}),
                                         "table:" + std::to_string(table) +
                                             ":variant=" + std::to_string(variant) +
                                             ":k=" + std::to_string(k)));
            }
        }
    }
    return out;
}

struct SporadicFiles {
    std::vector<CatalogEntry> entries;
    std::vector<std::string> unavailable;
};

SporadicFiles sporadic_entries() {
    SporadicFiles out;
    std::string path = data_directory() + "/sporadic/manifest.json";
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open sporadic manifest: " + path);
    json root = json::parse(in);
    auto load_section = [&](const char* section) {
        if (!root.contains(section)) return;
        for (const auto& item : root.at(section)) {
            std::string id = item.at("id").get<std::string>();
            if (!item.contains("file") || item.at("file").is_null()) {
                out.unavailable.push_back(id);
                continue;
            }
            std::string file = data_directory() + "/sporadic/" + item.at("file").get<std::string>();
            std::ifstream g6(file);
            if (!g6) {
                out.unavailable.push_back(id);
                continue;
            }
            for (const Graph& g : read_graph6_lines(g6)) {
                auto degs = g.degree_set();
                if (degs.size() != 2 || !is_connected(g) || !is_long_refinement(g))
                    throw std::runtime_error("sporadic file failed validation: " + file);
                out.entries.push_back(make_entry(g, "sporadic:" + id));
            }
        }
    };
    load_section("figures");
    load_section("verified");
    return out;
}

}  // namespace

std::vector<std::string> sporadic_manifest_ids() {
    std::string path = data_directory() + "/sporadic/manifest.json";
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open sporadic manifest: " + path);
    json root = json::parse(in);
    std::vector<std::string> ids;
    for (const auto& item : root.at("figures")) ids.push_back(item.at("id").get<std::string>());
    if (root.contains("verified"))
        for (const auto& item : root.at("verified")) ids.push_back(item.at("id").get<std::string>());
    return ids;
}

CatalogResult catalog(const CatalogQuery& query) {
    if (query.order_hi < query.order_lo) throw std::invalid_argument("empty catalog order range");
    auto strings_f = std::async(std::launch::async, string_family_entries, query);
    auto tables_f = std::async(std::launch::async, table_entries, query);
    SporadicFiles sporadic = sporadic_entries();

    std::vector<CatalogEntry> all = strings_f.get();
    for (auto& e : tables_f.get()) all.push_back(std::move(e));
    for (auto& e : sporadic.entries) all.push_back(std::move(e));
    {
        Graph g13 = unique_deg13_graph();
        if (order_in(g13.order(), query)) all.push_back(make_entry(std::move(g13), "construction:deg13"));
    }

    CatalogResult result;
    result.unavailable = std::move(sporadic.unavailable);
    std::sort(all.begin(), all.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
        return std::tie(a.order, a.provenance) < std::tie(b.order, b.provenance);
    });
    std::set<std::string> seen;
    for (auto& entry : all) {
        if (!order_in(entry.order, query) || !degrees_match(entry.degrees, query)) continue;
        if (!seen.insert(canonical_form(entry.graph).value).second) continue;
        result.entries.push_back(std::move(entry));
    }
    return result;
}

std::vector<int> gap_check(int max_order) {
    CatalogQuery query;
    query.order_lo = 2;
    query.order_hi = max_order - 1;
    query.degrees = {2, 3};
    std::set<int> present;
    if (query.order_hi >= query.order_lo)
        for (const auto& entry : catalog(query).entries) present.insert(entry.order);
    std::vector<int> gaps;
    for (int n = 2; n < max_order; ++n)
        if (!present.count(n)) gaps.push_back(n);
    return gaps;
}

}  // namespace lr

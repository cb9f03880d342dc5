#include "lr/json_io.hpp"

#include <sstream>

#include <json.hpp>

#include "lr/graph6.hpp"

namespace lr {

using nlohmann::json;

std::string trace_to_json_lines(const RefinementTrace& trace) {
    std::ostringstream out;
    for (size_t i = 0; i < trace.partitions.size(); ++i) {
        json rec;
        rec["iteration"] = i;
        rec["classes"] = trace.partitions[i].classes();
        if (i > 0) {
            json splits = json::array();
            for (const SplitRecord& sp : trace.splits[i - 1]) {
                json js;
                js["parent"] = sp.parent;
                js["children"] = sp.children;
                splits.push_back(std::move(js));
            }
            rec["splits"] = std::move(splits);
        }
        out << rec.dump() << "\n";
    }
    return out.str();
}

namespace {

const char* status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Vacuous: return "vacuous";
    }
    return "?";
}

}  // namespace

std::string report_to_json(const StructureReport& report) {
    json root;
    root["all_pass"] = report.all_pass();
    json checks = json::array();
    for (const CheckResult& c : report.checks) {
        json jc;
        jc["name"] = c.name;
        jc["status"] = status_name(c.status);
        if (!c.witness.empty()) jc["witness"] = c.witness;
        checks.push_back(std::move(jc));
    }
    root["checks"] = std::move(checks);
    if (report.phase) {
        const PairPhase& ph = *report.phase;
        json jp;
        jp["p"] = ph.p;
        jp["n_pairs"] = ph.n_pairs;
        jp["a"] = ph.a;
        jp["b"] = ph.b;
        jp["ell"] = ph.ell;
        jp["t"] = ph.t;
        jp["q"] = ph.q;
        jp["c"] = ph.c;
        jp["d"] = ph.d;
        jp["ell_prime"] = ph.ell_prime;
        json pairs = json::array();
        for (const auto& pr : ph.pair_order) pairs.push_back(std::vector<int>{pr[0], pr[1]});
        jp["pair_order"] = std::move(pairs);
        jp["singletons"] = ph.singletons;
        root["pair_phase"] = std::move(jp);
    }
    return root.dump(2);
}

std::string catalog_provenance_json(const CatalogResult& result) {
    json root;
    json entries = json::array();
    for (const CatalogEntry& e : result.entries) {
        json je;
        je["graph6"] = write_graph6(e.graph);
        je["provenance"] = e.provenance;
        je["order"] = e.order;
        je["degrees"] = e.degrees;
        entries.push_back(std::move(je));
    }
    root["entries"] = std::move(entries);
    root["unavailable"] = result.unavailable;
    return root.dump(2);
}

std::string cross_validation_json(const CrossValidationReport& report) {
    json root;
    root["consistent"] = report.consistent();
    json rows = json::array();
    for (const CrossValidationRow& row : report.rows) {
        json jr;
        jr["order"] = row.order;
        jr["degrees"] = row.degrees;
        jr["common"] = row.common;
        jr["search_only"] = row.search_only;
        jr["catalog_only"] = row.catalog_only;
        rows.push_back(std::move(jr));
    }
    root["rows"] = std::move(rows);
    return root.dump(2);
}

}  // namespace lr

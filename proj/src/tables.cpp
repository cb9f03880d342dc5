#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>

#include <json.hpp>

#include "lr/families.hpp"
#include "lr/refine.hpp"

namespace lr {

std::string data_directory() {
    if (const char* env = std::getenv("LR_DATA_DIR")) return env;
#ifdef LR_DATA_DIR
    return LR_DATA_DIR;
#else
    return "data";
#endif
}

namespace {

using nlohmann::json;

// linear expressions a*k+b, written like "6k+13", "2k-1", "4", "k"
struct Expr {
    int coef = 0;
    int off = 0;
    int eval(int k) const { return coef * k + off; }
};

Expr parse_expr(const std::string& text) {
    Expr e;
    size_t i = 0;
    int sign = 1;
    auto read_int = [&]() {
        int value = 0;
        bool any = false;
        while (i < text.size() && isdigit(static_cast<unsigned char>(text[i]))) {
            value = value * 10 + (text[i++] - '0');
            any = true;
        }
        return any ? value : -1;
    };
    while (i < text.size()) {
        if (text[i] == '+') {
            sign = 1;
            ++i;
            continue;
        }
        if (text[i] == '-') {
            sign = -1;
            ++i;
            continue;
        }
        int value = read_int();
        if (i < text.size() && text[i] == 'k') {
            ++i;
            e.coef += sign * (value < 0 ? 1 : value);
        } else if (value >= 0) {
            e.off += sign * value;
        } else {
            throw std::invalid_argument("bad table expression: " + text);
        }
        sign = 1;
    }
    return e;
}

struct TableRow {
    Expr vertex;
    std::vector<Expr> adj;
    bool omit_if_k0 = false;
};

struct TableVariant {
    int variant = 0;
    int min_param = 0;
    std::vector<TableRow> rows;
};

struct TableData {
    int table = 0;
    Expr order;
    std::vector<std::pair<Expr, Expr>> chains;
    std::map<int, TableVariant> variants;
};

const std::map<int, TableData>& tables() {
    static std::map<int, TableData> data;
    static std::once_flag once;
    std::call_once(once, [] {
        std::string path = data_directory() + "/tables.json";
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open table data file: " + path);
        json root = json::parse(in);
        for (const auto& jt : root.at("tables")) {
            TableData t;
            t.table = jt.at("table").get<int>();
            t.order = parse_expr(jt.at("order").get<std::string>());
            for (const auto& jc : jt.at("chains"))
                t.chains.emplace_back(parse_expr(jc.at("lo").get<std::string>()),
                                      parse_expr(jc.at("hi").get<std::string>()));
            for (const auto& jv : jt.at("variants")) {
                TableVariant v;
                v.variant = jv.at("variant").get<int>();
                v.min_param = jv.at("min_param").get<int>();
                for (const auto& jr : jv.at("rows")) {
                    TableRow row;
                    row.vertex = parse_expr(jr.at("v").get<std::string>());
                    for (const auto& ja : jr.at("adj"))
                        row.adj.push_back(parse_expr(ja.get<std::string>()));
                    row.omit_if_k0 = jr.value("omit_if_k0", false);
                    v.rows.push_back(std::move(row));
                }
                t.variants[v.variant] = std::move(v);
            }
            data[t.table] = std::move(t);
        }
    });
    return data;
}

}  // namespace

int table_family_order(int table, int k) {
    auto it = tables().find(table);
    if (it == tables().end()) throw std::invalid_argument("unknown table " + std::to_string(table));
    return it->second.order.eval(k);
}

Graph table_family(const TableFamilySpec& spec) {
    auto table_it = tables().find(spec.table);
    if (table_it == tables().end())
        throw std::invalid_argument("unknown table " + std::to_string(spec.table));
    const TableData& table = table_it->second;
    auto variant_it = table.variants.find(spec.variant);
    if (variant_it == table.variants.end())
        throw std::invalid_argument("unknown variant " + std::to_string(spec.variant) +
                                    " for table " + std::to_string(spec.table));
    const TableVariant& variant = variant_it->second;
    if (spec.k < variant.min_param)
        throw std::invalid_argument("table " + std::to_string(spec.table) + " variant " +
                                    std::to_string(spec.variant) + " needs parameter >= " +
                                    std::to_string(variant.min_param));
    const int k = spec.k;
    const int n = table.order.eval(k);

    std::map<int, std::vector<int>> rows;
    auto add_row = [&](int v, std::vector<int> adj, const std::string& where) {
        if (v < 0 || v >= n)
            throw std::runtime_error("table row vertex out of range: " + where);
        for (int u : adj)
            if (u < 0 || u >= n || u == v)
                throw std::runtime_error("table row neighbour out of range in row " + where);
        if (!rows.emplace(v, std::move(adj)).second)
            throw std::runtime_error("duplicate table row for vertex " + where);
    };
    for (const TableRow& row : variant.rows) {
        if (row.omit_if_k0 && k == 0) continue;
        std::vector<int> adj;
        for (const Expr& e : row.adj) adj.push_back(e.eval(k));
        add_row(row.vertex.eval(k), std::move(adj), std::to_string(row.vertex.eval(k)));
    }
    for (const auto& [lo_e, hi_e] : table.chains) {
        for (int i = lo_e.eval(k); i <= hi_e.eval(k); ++i) {
            std::vector<int> adj = (i % 2 == 1) ? std::vector<int>{i - 2, i + 1, i + 2}
                                                : std::vector<int>{i - 2, i - 1, i + 2};
            add_row(i, std::move(adj), std::to_string(i) + " (chain)");
        }
    }
    if (static_cast<int>(rows.size()) != n)
        throw std::runtime_error("table " + std::to_string(spec.table) + " variant " +
                                 std::to_string(spec.variant) + " covers " +
                                 std::to_string(rows.size()) + " of " + std::to_string(n) +
                                 " vertices at k=" + std::to_string(k));
    // every row lists the full neighbourhood, so the lists must already be symmetric
    for (const auto& [v, adj] : rows)
        for (int u : adj) {
            const auto& back = rows.at(u);
            if (std::find(back.begin(), back.end(), v) == back.end())
                throw std::runtime_error("asymmetric table transcription: row " + std::to_string(v) +
                                         " lists " + std::to_string(u) + " but not conversely");
        }
    std::vector<std::vector<int>> adjacency(n);
    for (auto& [v, adj] : rows) adjacency[v] = std::move(adj);
    Graph g = Graph::from_adjacency(std::move(adjacency));

    if (g.degree_set() != std::vector<int>{3, 4})
        throw std::runtime_error("table graph does not have degrees {3,4}");
    if (!is_long_refinement(g))
        throw std::runtime_error("table " + std::to_string(spec.table) + " variant " +
                                 std::to_string(spec.variant) + " k=" + std::to_string(k) +
                                 " is not long-refinement");
    return g;
}

}  // namespace lr

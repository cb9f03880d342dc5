#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <future>
#include <map>
#include <set>
#include <thread>

#include "lr/families.hpp"
#include "lr/refine.hpp"
#include "lr/search.hpp"

namespace lr {

namespace {

using Clock = std::chrono::steady_clock;

struct RunState {
    int n;
    int maxdeg;
    const SearchBudget* budget;
    std::atomic<long long> nodes{0};
    Clock::time_point start = Clock::now();

    void charge(long long amount) {
        long long seen = nodes.fetch_add(amount) + amount;
        if (seen > budget->max_nodes)
            throw BudgetError("search node budget exceeded (" + std::to_string(seen) + " nodes)",
                              seen);
        if ((seen & 1023) < amount) {
            auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
            if (ms.count() > budget->max_millis)
                throw BudgetError("search time budget exceeded (" + std::to_string(ms.count()) +
                                  " ms)", seen);
        }
    }
};

uint32_t apply_perm(uint32_t mask, const std::vector<int>& perm) {
    uint32_t out = 0;
    while (mask) {
        int v = __builtin_ctz(mask);
        mask &= mask - 1;
        out |= 1u << perm[v];
    }
    return out;
}

// true iff mask is the numeric minimum of its orbit under the generators
bool orbit_minimal(uint32_t mask, const std::vector<std::vector<int>>& generators) {
    if (generators.empty()) return true;
    std::set<uint32_t> seen{mask};
    std::vector<uint32_t> frontier{mask};
    while (!frontier.empty()) {
        uint32_t m = frontier.back();
        frontier.pop_back();
        for (const auto& perm : generators) {
            uint32_t image = apply_perm(m, perm);
            if (image < mask) return false;
            if (seen.insert(image).second) frontier.push_back(image);
        }
    }
    return true;
}

Graph extend(const Graph& parent, uint32_t mask) {
    const int k = parent.order();
    std::vector<std::vector<int>> adj(k + 1);
    for (int v = 0; v < k; ++v) adj[v] = parent.neighbours(v);
    for (uint32_t m = mask; m;) {
        int v = __builtin_ctz(m);
        m &= m - 1;
        adj[v].push_back(k);
        adj[k].push_back(v);
    }
    return Graph::from_adjacency(std::move(adj));
}

// Canonical-deletion acceptance: the fresh vertex must lie in the orbit of
// the canonical deletion vertex, which is the non-cut vertex at the highest
// canonical position. Canonical positions respect stable colours, so a
// cheap colour test filters most rejections before a full canonical run.
bool accepted(const Graph& child) {
    const int x = child.order() - 1;
    Colouring stable = refine_to_stable(child, Colouring::monochromatic(child.order()));
    std::vector<bool> cut = cut_vertices(child);
    int best_colour = -1;
    for (int v = 0; v < child.order(); ++v)
        if (!cut[v]) best_colour = std::max(best_colour, stable.colour[v]);
    if (stable.colour[x] != best_colour) return false;
    int candidates = 0;
    for (int v = 0; v < child.order(); ++v)
        if (!cut[v] && stable.colour[v] == best_colour) ++candidates;
    if (candidates == 1) return true;
    CanonResult canon = canonical_labelling(child);
    int deletion = -1, best_pos = -1;
    for (int v = 0; v < child.order(); ++v)
        if (!cut[v] && canon.labelling[v] > best_pos) {
            best_pos = canon.labelling[v];
            deletion = v;
        }
    return canon.same_orbit(x, deletion);
}

class Generator {
public:
    Generator(const SearchSpec& spec, RunState& state,
              const std::function<void(const Graph&)>& emit)
        : spec_(spec), state_(state), emit_(emit) {}

    // depth-first expansion of everything below `g`
    void expand(const Graph& g) {
        if (g.order() == spec_.n) {
            maybe_emit(g);
            return;
        }
        for_children(g, [&](const Graph& child) { expand(child); });
    }

    // single level, used to harvest parallel work roots
    void for_children(const Graph& parent, const std::function<void(const Graph&)>& fn) {
        const int k = parent.order();
        std::vector<int> open;  // vertices that can still gain an edge
        for (int v = 0; v < k; ++v)
            if (parent.degree(v) < state_.maxdeg) open.push_back(v);
        CanonResult canon = canonical_labelling(parent);
        std::vector<uint32_t> masks;
        collect_masks(open, 0, 0u, 0, masks);
        state_.charge(static_cast<long long>(masks.size()) + 1);
        for (uint32_t mask : masks) {
            if (!orbit_minimal(mask, canon.generators)) continue;
            Graph child = extend(parent, mask);
            if (saturated(child)) continue;
            if (accepted(child)) fn(child);
        }
    }

private:
    void collect_masks(const std::vector<int>& open, size_t from, uint32_t mask, int size,
                       std::vector<uint32_t>& out) const {
        if (size > 0) out.push_back(mask);
        if (size == state_.maxdeg) return;
        for (size_t i = from; i < open.size(); ++i)
            collect_masks(open, i + 1, mask | (1u << open[i]), size + 1, out);
    }

    // an intermediate graph with every vertex saturated cannot take the
    // next vertex, so its subtree is empty
    bool saturated(const Graph& g) const {
        if (g.order() == spec_.n) return false;
        for (int v = 0; v < g.order(); ++v)
            if (g.degree(v) < state_.maxdeg) return false;
        return true;
    }

    void maybe_emit(const Graph& g) {
        if (spec_.two_degree_filter) {
            auto degs = g.degree_set();
            if (degs.size() != 2) return;
            for (int d : degs)
                if (std::find(spec_.degrees.begin(), spec_.degrees.end(), d) == spec_.degrees.end())
                    return;
        }
        emit_(g);
    }

    const SearchSpec& spec_;
    RunState& state_;
    const std::function<void(const Graph&)>& emit_;
};

}  // namespace

int default_thread_count() {
    if (const char* env = std::getenv("LR_THREADS")) {
        int t = std::atoi(env);
        if (t > 0) return t;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

void enumerate(const SearchSpec& spec, const SearchBudget& budget,
               const std::function<void(const Graph&)>& emit, int threads) {
    if (!spec.connected)
        throw std::invalid_argument("only connected enumeration is supported");
    if (spec.degrees.empty()) throw std::invalid_argument("degree set must be non-empty");
    if (spec.n < 1) return;
    // degrees above n-1 cannot occur on n vertices, so the bound is capped
    const int maxdeg =
        std::min(*std::max_element(spec.degrees.begin(), spec.degrees.end()), spec.n - 1);
    if (maxdeg < 1 && spec.n >= 2) throw std::invalid_argument("degree bound must be positive");
    if (spec.n > 31) throw std::invalid_argument("search supports n <= 31");
    if (threads <= 0) threads = default_thread_count();

    RunState state;
    state.n = spec.n;
    state.maxdeg = maxdeg;
    state.budget = &budget;

    const Graph root = empty_graph(1);
    if (spec.n == 1) {
        Generator g(spec, state, emit);
        g.expand(root);
        return;
    }

    // harvest subtree roots at a shallow level, then work-steal over them
    const int split_level = std::clamp(spec.n - 3, 1, 6);
    std::vector<Graph> roots;
    {
        std::function<void(const Graph&)> harvest_cb;  // unused
        Generator g(spec, state, harvest_cb);
        std::vector<Graph> frontier{root};
        for (int level = 1; level < split_level; ++level) {
            std::vector<Graph> next;
            for (const Graph& p : frontier)
                g.for_children(p, [&](const Graph& c) { next.push_back(c); });
            frontier = std::move(next);
        }
        roots = std::move(frontier);
    }

    std::atomic<size_t> cursor{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&]() {
        Generator g(spec, state, emit);
        try {
            for (;;) {
                size_t i = cursor.fetch_add(1);
                if (i >= roots.size()) break;
                g.expand(roots[i]);
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            cursor.store(roots.size());
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < std::max(1, threads); ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

std::vector<Graph> enumerate_collect(const SearchSpec& spec, const SearchBudget& budget,
                                     int threads) {
    std::mutex sink_mutex;
    std::vector<std::pair<std::string, Graph>> sink;
    enumerate(
        spec, budget,
        [&](const Graph& g) {
            std::string cert = canonical_form(g).value;
            std::lock_guard<std::mutex> lock(sink_mutex);
            sink.emplace_back(std::move(cert), g);
        },
        threads);
    std::sort(sink.begin(), sink.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Graph> out;
    out.reserve(sink.size());
    for (auto& [cert, g] : sink) out.push_back(std::move(g));
    return out;
}

std::vector<std::string> enumerate_canonical(const SearchSpec& spec, const SearchBudget& budget,
                                             int threads) {
    std::mutex sink_mutex;
    std::vector<std::string> certs;
    enumerate(
        spec, budget,
        [&](const Graph& g) {
            std::string cert = canonical_form(g).value;
            std::lock_guard<std::mutex> lock(sink_mutex);
            certs.push_back(std::move(cert));
        },
        threads);
    std::sort(certs.begin(), certs.end());
    return certs;
}

std::vector<std::string> brute_force_connected(int n, int max_degree) {
    if (n < 1 || n > 8) throw std::invalid_argument("brute force oracle supports 1 <= n <= 8");
    const int bits = n * (n - 1) / 2;
    std::vector<Edge> slots;
    for (int v = 0; v < n; ++v)
        for (int u = v + 1; u < n; ++u) slots.emplace_back(v, u);
    std::set<std::string> forms;
    for (long long mask = 0; mask < (1LL << bits); ++mask) {
        std::vector<int> deg(n, 0);
        std::vector<Edge> edges;
        bool ok = true;
        for (int b = 0; b < bits && ok; ++b)
            if ((mask >> b) & 1) {
                auto [u, v] = slots[b];
                if (++deg[u] > max_degree || ++deg[v] > max_degree) ok = false;
                edges.push_back(slots[b]);
            }
        if (!ok) continue;
        Graph g = Graph::from_edges(n, edges);
        if (!is_connected(g)) continue;
        forms.insert(canonical_form(g).value);
    }
    return {forms.begin(), forms.end()};
}

std::vector<Graph> find_long_refinement(const SearchSpec& spec, const SearchBudget& budget,
                                        int threads) {
    std::mutex sink_mutex;
    std::vector<std::pair<std::string, Graph>> sink;
    enumerate(
        spec, budget,
        [&](const Graph& g) {
            if (!is_long_refinement(g)) return;
            std::string cert = canonical_form(g).value;
            std::lock_guard<std::mutex> lock(sink_mutex);
            sink.emplace_back(std::move(cert), g);
        },
        threads);
    std::sort(sink.begin(), sink.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Graph> out;
    for (auto& [cert, g] : sink) out.push_back(std::move(g));
    return out;
}

CrossValidationReport cross_validate(int order_lo, int order_hi, const std::vector<int>& degrees,
                                     const SearchBudget& budget, int threads) {
    CrossValidationReport report;
    for (int n = order_lo; n <= order_hi; ++n) {
        CrossValidationRow row;
        row.order = n;
        row.degrees = degrees;
        std::set<std::string> searched;
        if (n >= 2) {
            SearchSpec spec;
            spec.n = n;
            spec.degrees = degrees;
            for (const Graph& g : find_long_refinement(spec, budget, threads))
                searched.insert(canonical_form(g).value);
        }
        std::set<std::string> catalogued;
        CatalogQuery query;
        query.order_lo = n;
        query.order_hi = n;
        query.degrees = degrees;
        for (const CatalogEntry& entry : catalog(query).entries)
            catalogued.insert(canonical_form(entry.graph).value);
        for (const auto& cert : searched)
            if (!catalogued.count(cert))
                row.search_only.push_back(cert);
            else
                ++row.common;
        for (const auto& cert : catalogued)
            if (!searched.count(cert)) row.catalog_only.push_back(cert);
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace lr

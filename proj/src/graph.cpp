#include "lr/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace lr {

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    std::vector<std::vector<int>> adj(n);
    std::set<Edge> seen;
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) +
                                        "," + std::to_string(v) + ")");
        if (u == v)
            throw std::invalid_argument("self-loop rejected: (" + std::to_string(u) + "," +
                                        std::to_string(v) + ")");
        Edge e{std::min(u, v), std::max(u, v)};
        if (!seen.insert(e).second)
            throw std::invalid_argument("duplicate edge rejected: (" + std::to_string(u) + "," +
                                        std::to_string(v) + ")");
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    Graph g;
    for (auto& list : adj) std::sort(list.begin(), list.end());
    g.adjacency_ = std::move(adj);
    g.m_ = static_cast<long long>(edges.size());
    return g;
}

Graph Graph::from_adjacency(std::vector<std::vector<int>> adjacency) {
    const int n = static_cast<int>(adjacency.size());
    long long deg_sum = 0;
    for (int v = 0; v < n; ++v) {
        auto& list = adjacency[v];
        std::sort(list.begin(), list.end());
        if (std::adjacent_find(list.begin(), list.end()) != list.end())
            throw std::invalid_argument("duplicate neighbour in adjacency of " + std::to_string(v));
        for (int u : list) {
            if (u < 0 || u >= n) throw std::invalid_argument("neighbour out of range");
            if (u == v) throw std::invalid_argument("self-loop in adjacency");
        }
        deg_sum += static_cast<long long>(list.size());
    }
    for (int v = 0; v < n; ++v)
        for (int u : adjacency[v])
            if (!std::binary_search(adjacency[u].begin(), adjacency[u].end(), v))
                throw std::invalid_argument("asymmetric adjacency between " + std::to_string(v) +
                                            " and " + std::to_string(u));
    Graph g;
    g.adjacency_ = std::move(adjacency);
    g.m_ = deg_sum / 2;
    return g;
}

bool Graph::has_edge(int u, int v) const {
    const auto& list = adjacency_[u];
    return std::binary_search(list.begin(), list.end(), v);
}

std::vector<int> Graph::degree_set() const {
    std::set<int> degs;
    for (int v = 0; v < order(); ++v) degs.insert(degree(v));
    return {degs.begin(), degs.end()};
}

Graph Graph::complement() const {
    const int n = order();
    std::vector<std::vector<int>> adj(n);
    for (int v = 0; v < n; ++v) {
        auto it = adjacency_[v].begin();
        for (int u = 0; u < n; ++u) {
            if (it != adjacency_[v].end() && *it == u) {
                ++it;
                continue;
            }
            if (u != v) adj[v].push_back(u);
        }
    }
    return from_adjacency(std::move(adj));
}

Graph Graph::permuted(std::span<const int> perm) const {
    const int n = order();
    if (static_cast<int>(perm.size()) != n)
        throw std::invalid_argument("permutation size mismatch");
    std::vector<std::vector<int>> adj(n);
    for (int v = 0; v < n; ++v)
        for (int u : adjacency_[v]) adj[perm[v]].push_back(perm[u]);
    return from_adjacency(std::move(adj));
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> result;
    result.reserve(static_cast<size_t>(m_));
    for (int v = 0; v < order(); ++v)
        for (int u : adjacency_[v])
            if (v < u) result.emplace_back(v, u);
    return result;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    std::vector<std::vector<int>> adj(g.order() + h.order());
    for (int v = 0; v < g.order(); ++v) adj[v] = g.neighbours(v);
    const int shift = g.order();
    for (int v = 0; v < h.order(); ++v) {
        adj[shift + v].reserve(h.neighbours(v).size());
        for (int u : h.neighbours(v)) adj[shift + v].push_back(shift + u);
    }
    return Graph::from_adjacency(std::move(adj));
}

bool is_connected(const Graph& g) {
    const int n = g.order();
    if (n <= 1) return true;
    std::vector<bool> seen(n, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : g.neighbours(v))
            if (!seen[u]) {
                seen[u] = true;
                ++reached;
                stack.push_back(u);
            }
    }
    return reached == n;
}

std::vector<bool> cut_vertices(const Graph& g) {
    const int n = g.order();
    std::vector<bool> cut(n, false);
    if (n == 0) return cut;
    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
    int timer = 0;
    // Iterative Tarjan so deep paths do not blow the stack.
    for (int root = 0; root < n; ++root) {
        if (disc[root] != -1) continue;
        std::vector<std::pair<int, size_t>> stack{{root, 0}};
        disc[root] = low[root] = timer++;
        int root_children = 0;
        while (!stack.empty()) {
            auto& [v, idx] = stack.back();
            if (idx < g.neighbours(v).size()) {
                int u = g.neighbours(v)[idx++];
                if (disc[u] == -1) {
                    parent[u] = v;
                    if (v == root) ++root_children;
                    disc[u] = low[u] = timer++;
                    stack.emplace_back(u, 0);
                } else if (u != parent[v]) {
                    low[v] = std::min(low[v], disc[u]);
                }
            } else {
                stack.pop_back();
                if (!stack.empty()) {
                    int p = stack.back().first;
                    low[p] = std::min(low[p], low[v]);
                    if (p != root && low[v] >= disc[p]) cut[p] = true;
                }
            }
        }
        if (root_children > 1) cut[root] = true;
    }
    return cut;
}

Graph path_graph(int n) {
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph::from_edges(n, edges);
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    edges.emplace_back(n - 1, 0);
    return Graph::from_edges(n, edges);
}

Graph complete_graph(int n) {
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v)
        for (int u = v + 1; u < n; ++u) edges.emplace_back(v, u);
    return Graph::from_edges(n, edges);
}

Graph complete_bipartite(int a, int b) {
    std::vector<Edge> edges;
    for (int v = 0; v < a; ++v)
        for (int u = 0; u < b; ++u) edges.emplace_back(v, a + u);
    return Graph::from_edges(a + b, edges);
}

Graph empty_graph(int n) { return Graph::from_edges(n, {}); }

}  // namespace lr

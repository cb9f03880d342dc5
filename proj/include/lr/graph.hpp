#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lr {

using Edge = std::pair<int, int>;

/// Immutable simple undirected graph. Vertices are 0..n-1, neighbour lists
/// are kept sorted ascending. All "mutating" operations return new graphs.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an explicit edge list. Rejects self-loops,
    /// out-of-range endpoints and duplicate edges, naming the offending pair.
    static Graph from_edges(int n, const std::vector<Edge>& edges);

    /// Internal constructor from adjacency lists that are already symmetric.
    /// Lists are sorted here; inconsistencies throw.
    static Graph from_adjacency(std::vector<std::vector<int>> adjacency);

    int order() const { return static_cast<int>(adjacency_.size()); }
    long long edge_count() const { return m_; }

    const std::vector<int>& neighbours(int v) const { return adjacency_[v]; }
    int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
    bool has_edge(int u, int v) const;

    /// Sorted set of distinct vertex degrees.
    std::vector<int> degree_set() const;

    Graph complement() const;

    /// Relabels vertices: vertex v of this graph becomes perm[v].
    Graph permuted(std::span<const int> perm) const;

    std::vector<Edge> edges() const;

    bool operator==(const Graph& other) const { return adjacency_ == other.adjacency_; }

private:
    std::vector<std::vector<int>> adjacency_;
    long long m_ = 0;
};

Graph disjoint_union(const Graph& g, const Graph& h);

/// True iff g has exactly one connected component (vacuously for n <= 1).
bool is_connected(const Graph& g);

/// Cut vertices (articulation points).
std::vector<bool> cut_vertices(const Graph& g);

// Small constructors used all over the tests and the CLI.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
Graph empty_graph(int n);

}  // namespace lr

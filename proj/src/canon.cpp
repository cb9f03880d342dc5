#include "lr/canon.hpp"

#include <algorithm>
#include <numeric>

#include "lr/graph6.hpp"

namespace lr {

Colouring refine_to_stable(const Graph& g, Colouring c) {
    for (;;) {
        Colouring next = refine_step(g, c);
        if (next.k == c.k) return c;
        c = std::move(next);
    }
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

class CanonSearch {
public:
    explicit CanonSearch(const Graph& g) : g_(g), uf_(g.order()) {}

    CanonResult run() {
        Colouring root = refine_to_stable(g_, Colouring::monochromatic(g_.order()));
        descend(root, 0);
        CanonResult result;
        result.cert = best_cert_;
        result.labelling = best_leaf_;
        result.generators = std::move(generators_);
        result.orbit.resize(g_.order());
        for (int v = 0; v < g_.order(); ++v) result.orbit[v] = uf_.find(v);
        return result;
    }

private:
    // class sizes indexed by canonical colour; an isomorphism-invariant
    // node invariant used for path pruning
    static std::vector<int> invariant(const Colouring& c) {
        std::vector<int> sizes(c.k, 0);
        for (int col : c.colour) ++sizes[col];
        return sizes;
    }

    // -1 prune, 0 equal/extends, +1 this path is now the best prefix
    int compare_path(const std::vector<int>& inv, size_t depth) {
        if (!have_path_ || depth >= best_path_.size()) {
            if (depth >= best_path_.size()) best_path_.push_back(inv);
            have_path_ = true;
            return 0;
        }
        if (inv < best_path_[depth]) {
            best_path_.resize(depth);
            best_path_.push_back(inv);
            best_cert_.clear();
            have_cert_ = false;
            return 1;
        }
        return inv == best_path_[depth] ? 0 : -1;
    }

    void descend(const Colouring& c, size_t depth) {
        if (compare_path(invariant(c), depth) < 0) return;
        int cell = -1;
        for (int col = 0; col < c.k && cell < 0; ++col) {
            int count = 0;
            for (int v : c.colour) count += v == col;
            if (count >= 2) cell = col;
        }
        if (cell < 0) {
            leaf(c);
            return;
        }
        for (int v = 0; v < static_cast<int>(c.colour.size()); ++v) {
            if (c.colour[v] != cell) continue;
            descend(refine_to_stable(g_, individualize(c, v)), depth + 1);
        }
    }

    // splits v out of its class, keeping it inside its class's colour block
    Colouring individualize(const Colouring& c, int v) const {
        Colouring out;
        out.colour.resize(c.colour.size());
        for (size_t u = 0; u < c.colour.size(); ++u)
            out.colour[u] = 2 * c.colour[u] + (static_cast<int>(u) == v ? 1 : 0);
        return normalize_dense(out);
    }

    static Colouring normalize_dense(Colouring c) {
        std::vector<int> values = c.colour;
        std::sort(values.begin(), values.end());
        values.erase(std::unique(values.begin(), values.end()), values.end());
        for (int& col : c.colour)
            col = static_cast<int>(std::lower_bound(values.begin(), values.end(), col) -
                                   values.begin());
        c.k = static_cast<int>(values.size());
        return c;
    }

    void leaf(const Colouring& c) {
        const std::vector<int>& labelling = c.colour;  // discrete: colour is position
        std::string cert = write_graph6(g_.permuted(labelling));
        if (!have_cert_ || cert < best_cert_) {
            best_cert_ = cert;
            best_leaf_ = labelling;
            have_cert_ = true;
        } else if (cert == best_cert_) {
            // lambda_best^-1 after lambda_leaf is an automorphism
            std::vector<int> inverse_best(labelling.size());
            for (size_t v = 0; v < best_leaf_.size(); ++v) inverse_best[best_leaf_[v]] = static_cast<int>(v);
            std::vector<int> sigma(labelling.size());
            for (size_t v = 0; v < labelling.size(); ++v) {
                sigma[v] = inverse_best[labelling[v]];
                uf_.unite(static_cast<int>(v), sigma[v]);
            }
            generators_.push_back(std::move(sigma));
        }
    }

    const Graph& g_;
    UnionFind uf_;
    std::vector<std::vector<int>> best_path_;
    bool have_path_ = false;
    std::string best_cert_;
    std::vector<int> best_leaf_;
    bool have_cert_ = false;
    std::vector<std::vector<int>> generators_;
};

}  // namespace

CanonResult canonical_labelling(const Graph& g) {
    if (g.order() == 0) {
        CanonResult r;
        r.cert = write_graph6(g);
        return r;
    }
    return CanonSearch(g).run();
}

CanonicalForm canonical_form(const Graph& g) { return {canonical_labelling(g).cert}; }

}  // namespace lr

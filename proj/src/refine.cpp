#include "lr/refine.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace lr {

std::vector<std::vector<int>> Colouring::classes() const {
    std::vector<std::vector<int>> result(k);
    for (int v = 0; v < static_cast<int>(colour.size()); ++v) result[colour[v]].push_back(v);
    return result;
}

Colouring refine_step(const Graph& g, const Colouring& c) {
    const int n = g.order();
    if (static_cast<int>(c.colour.size()) != n)
        throw std::invalid_argument("colouring size mismatch: " + std::to_string(c.colour.size()) +
                                    " colours for " + std::to_string(n) + " vertices");
    using Key = std::pair<int, std::vector<int>>;  // old colour, sorted neighbour colours
    std::vector<Key> keys(n);
    for (int v = 0; v < n; ++v) {
        std::vector<int> nbr;
        nbr.reserve(g.neighbours(v).size());
        for (int u : g.neighbours(v)) nbr.push_back(c.colour[u]);
        std::sort(nbr.begin(), nbr.end());
        keys[v] = {c.colour[v], std::move(nbr)};
    }
    std::map<Key, int> rank;
    for (const auto& key : keys) rank.emplace(key, 0);
    int next = 0;
    for (auto& [key, r] : rank) r = next++;
    Colouring out;
    out.colour.resize(n);
    out.k = next;
    for (int v = 0; v < n; ++v) out.colour[v] = rank[keys[v]];
    return out;
}

std::vector<SplitRecord> diff_partitions(const Colouring& a, const Colouring& b) {
    const int n = static_cast<int>(a.colour.size());
    // group children of b by their parent class in a
    std::map<std::pair<int, int>, std::vector<int>> cells;  // (parent colour, child colour)
    for (int v = 0; v < n; ++v) cells[{a.colour[v], b.colour[v]}].push_back(v);
    std::map<int, std::vector<std::vector<int>>> by_parent;
    for (auto& [key, members] : cells) by_parent[key.first].push_back(std::move(members));
    std::vector<SplitRecord> records;
    for (auto& [parent_colour, children] : by_parent) {
        if (children.size() < 2) continue;
        SplitRecord rec;
        for (const auto& child : children)
            rec.parent.insert(rec.parent.end(), child.begin(), child.end());
        std::sort(rec.parent.begin(), rec.parent.end());
        rec.children = std::move(children);
        records.push_back(std::move(rec));
    }
    return records;
}

RefinementTrace run_colour_refinement(const Graph& g) {
    RefinementTrace trace;
    trace.partitions.push_back(Colouring::monochromatic(g.order()));
    if (g.order() == 0) return trace;
    for (;;) {
        const Colouring& current = trace.partitions.back();
        Colouring next = refine_step(g, current);
        if (next.k == current.k) break;  // refinement only splits, so equal k means stable
        trace.splits.push_back(diff_partitions(current, next));
        trace.partitions.push_back(std::move(next));
    }
    trace.iteration_number = static_cast<int>(trace.partitions.size()) - 1;
    return trace;
}

Colouring normalize_partition(const Colouring& c) {
    Colouring out;
    out.colour.assign(c.colour.size(), -1);
    std::vector<int> relabel(c.k, -1);
    int next = 0;
    for (size_t v = 0; v < c.colour.size(); ++v) {
        int& r = relabel[c.colour[v]];
        if (r == -1) r = next++;
        out.colour[v] = r;
    }
    out.k = next;
    return out;
}

bool same_partition(const Colouring& a, const Colouring& b) {
    if (a.colour.size() != b.colour.size()) return false;
    return normalize_partition(a).colour == normalize_partition(b).colour;
}

namespace {

// Round-synchronized smaller-half worklist. Splitters for round i+1 are the
// classes newly created in round i, minus the largest child of each parent;
// counts into those determine exactly the synchronous partition pi^{i+1}.
class WorklistEngine {
public:
    explicit WorklistEngine(const Graph& g) : g_(g), n_(g.order()) {
        cls_.assign(n_, 0);
        members_.push_back(std::vector<int>(n_));
        std::iota(members_[0].begin(), members_[0].end(), 0);
        count_.assign(n_, 0);
    }

    RefinementTrace run() {
        RefinementTrace trace;
        trace.partitions.push_back(snapshot());
        if (n_ == 0) return trace;
        std::vector<std::vector<int>> splitters{members_[0]};
        while (!splitters.empty()) {
            std::vector<int> round_parents = run_round(splitters);
            if (round_parents.empty()) break;
            Colouring now = snapshot();
            trace.splits.push_back(diff_partitions(trace.partitions.back(), now));
            trace.partitions.push_back(std::move(now));
            splitters = collect_splitters(round_parents);
        }
        trace.iteration_number = static_cast<int>(trace.partitions.size()) - 1;
        return trace;
    }

private:
    // Applies every splitter of the round; returns the ids of round-start
    // classes that split (each class id keeps its round-start meaning via
    // fragment tracking in fragments_).
    std::vector<int> run_round(const std::vector<std::vector<int>>& splitters) {
        fragments_.clear();
        round_parent_.assign(members_.size(), -1);
        for (size_t c = 0; c < members_.size(); ++c) round_parent_[c] = static_cast<int>(c);
        std::vector<int> changed;
        for (const auto& splitter : splitters) {
            std::vector<int> touched;
            for (int u : splitter)
                for (int v : g_.neighbours(u)) {
                    if (count_[v] == 0) touched.push_back(v);
                    ++count_[v];
                }
            // classes containing touched vertices, deduped
            std::vector<int> classes;
            for (int v : touched) {
                int c = cls_[v];
                if (!seen_class(c)) classes.push_back(c);
            }
            for (int c : classes) split_class(c, changed);
            for (int v : touched) count_[v] = 0;
            class_mark_.clear();
        }
        return changed;
    }

    bool seen_class(int c) {
        for (int x : class_mark_)
            if (x == c) return true;
        class_mark_.push_back(c);
        return false;
    }

    // Splits class c by the current count_ values.
    void split_class(int c, std::vector<int>& changed) {
        auto& mem = members_[c];
        std::map<int, std::vector<int>> groups;
        for (int v : mem) groups[count_[v]].push_back(v);
        if (groups.size() < 2) return;
        int parent = round_parent_[c];
        if (fragments_.find(parent) == fragments_.end()) changed.push_back(parent);
        auto& frag = fragments_[parent];
        // old id c is reused for the first group; remaining groups get new ids
        bool first = true;
        std::erase_if(frag, [&](int id) { return id == c; });
        for (auto& [cnt, verts] : groups) {
            int id;
            if (first) {
                id = c;
                first = false;
            } else {
                id = static_cast<int>(members_.size());
                members_.push_back({});
                round_parent_.push_back(parent);
            }
            for (int v : verts) cls_[v] = id;
            members_[id] = std::move(verts);
            frag.push_back(id);
        }
    }

    // All-but-largest fragment of each split parent, as vertex snapshots.
    std::vector<std::vector<int>> collect_splitters(const std::vector<int>& round_parents) {
        std::vector<std::vector<int>> result;
        for (int parent : round_parents) {
            auto& frag = fragments_[parent];
            size_t largest = 0;
            for (size_t i = 1; i < frag.size(); ++i)
                if (members_[frag[i]].size() > members_[frag[largest]].size()) largest = i;
            for (size_t i = 0; i < frag.size(); ++i)
                if (i != largest) result.push_back(members_[frag[i]]);
        }
        return result;
    }

    Colouring snapshot() const {
        Colouring c;
        c.colour.assign(n_, -1);
        for (size_t id = 0; id < members_.size(); ++id)
            for (int v : members_[id]) c.colour[v] = static_cast<int>(id);
        c.k = static_cast<int>(members_.size());
        return normalize_partition(c);
    }

    const Graph& g_;
    int n_;
    std::vector<int> cls_;
    std::vector<std::vector<int>> members_;
    std::vector<int> count_;
    std::vector<int> round_parent_;
    std::vector<int> class_mark_;
    std::map<int, std::vector<int>> fragments_;  // round-start class -> current fragment ids
};

}  // namespace

RefinementTrace refine_fast(const Graph& g) { return WorklistEngine(g).run(); }

bool is_long_refinement(const RefinementTrace& trace, int order) {
    return trace.iteration_number == order - 1;
}

bool is_long_refinement(const Graph& g) {
    return is_long_refinement(run_colour_refinement(g), g.order());
}

std::optional<int> distinguishing_iteration(const Graph& g, const Graph& h) {
    const Graph u = disjoint_union(g, h);
    RefinementTrace trace = run_colour_refinement(u);
    const int ng = g.order();
    for (int i = 0; i < static_cast<int>(trace.partitions.size()); ++i) {
        const auto& colour = trace.partitions[i].colour;
        std::vector<int> left(colour.begin(), colour.begin() + ng);
        std::vector<int> right(colour.begin() + ng, colour.end());
        std::sort(left.begin(), left.end());
        std::sort(right.begin(), right.end());
        if (left != right) return i;
    }
    return std::nullopt;
}

}  // namespace lr

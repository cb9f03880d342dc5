#pragma once

#include <optional>
#include <vector>

#include "lr/graph.hpp"

namespace lr {

/// Dense vertex colouring with colours 0..k-1, every colour used.
struct Colouring {
    std::vector<int> colour;
    int k = 0;

    static Colouring monochromatic(int n) {
        Colouring c;
        c.colour.assign(n, 0);
        c.k = n > 0 ? 1 : 0;
        return c;
    }

    /// Vertex sets per colour, members ascending.
    std::vector<std::vector<int>> classes() const;
};

/// One class splitting into two or more children during an iteration.
struct SplitRecord {
    std::vector<int> parent;
    std::vector<std::vector<int>> children;
};

/// The partitions pi^0..pi^j of a Colour Refinement run together with the
/// per-iteration split records. iteration_number is the minimal j with
/// pi^{j+1} = pi^j; splits[i] describes pi^i -> pi^{i+1}.
struct RefinementTrace {
    std::vector<Colouring> partitions;
    std::vector<std::vector<SplitRecord>> splits;
    int iteration_number = 0;

    const Colouring& stable() const { return partitions.back(); }
};

/// One synchronous refinement round: every vertex key is (old colour,
/// sorted multiset of neighbour colours); keys are sorted lexicographically
/// and ranked 0..k-1, which makes the returned colour array canonical.
Colouring refine_step(const Graph& g, const Colouring& c);

/// Full run from the monochromatic colouring, tracing every partition.
RefinementTrace run_colour_refinement(const Graph& g);

/// Worklist engine with smaller-half splitter selection, processed in
/// rounds so the partition sequence matches run_colour_refinement exactly
/// (as partitions; colours are normalized by first occurrence).
RefinementTrace refine_fast(const Graph& g);

/// WL_1(g) = n - 1, the theoretical maximum.
bool is_long_refinement(const Graph& g);
bool is_long_refinement(const RefinementTrace& trace, int order);

/// Least i at which the colour multisets of the two sides of the disjoint
/// union differ under joint refinement; nullopt when the joint refinement
/// stabilizes with equal multisets (the graphs are CR-equivalent).
/// Graphs of different order are distinguished at i = 0.
std::optional<int> distinguishing_iteration(const Graph& g, const Graph& h);

/// Relabels colours in first-occurrence order (scanning vertices 0..n-1);
/// two colourings induce the same partition iff their normal forms agree.
Colouring normalize_partition(const Colouring& c);

bool same_partition(const Colouring& a, const Colouring& b);

/// Split records between two consecutive partitions (b refines a).
std::vector<SplitRecord> diff_partitions(const Colouring& a, const Colouring& b);

}  // namespace lr

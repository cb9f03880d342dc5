#pragma once

#include <string>
#include <vector>

#include "lr/graph.hpp"
#include "lr/refine.hpp"

namespace lr {

/// Canonical graph6 string of the canonically relabelled graph. Two graphs
/// are isomorphic iff their canonical forms are byte-equal.
struct CanonicalForm {
    std::string value;
    auto operator<=>(const CanonicalForm&) const = default;
};

/// Full canonicalization result: the certificate, the labelling that
/// produces it (vertex -> canonical position), automorphism generators
/// discovered on the way, and the vertex orbit partition they generate.
struct CanonResult {
    std::string cert;
    std::vector<int> labelling;
    std::vector<std::vector<int>> generators;
    std::vector<int> orbit;  // orbit representative per vertex

    bool same_orbit(int u, int v) const { return orbit[u] == orbit[v]; }
};

/// Individualization-refinement with Colour Refinement as the refiner and
/// the lexicographically smallest (invariant path, graph6) leaf as target.
/// All best leaves are visited, so the generators span the full
/// automorphism group and the orbit partition is exact.
CanonResult canonical_labelling(const Graph& g);

CanonicalForm canonical_form(const Graph& g);

/// Runs refine_step until the partition stops refining.
Colouring refine_to_stable(const Graph& g, Colouring c);

}  // namespace lr

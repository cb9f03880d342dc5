#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "lr/graph.hpp"
#include "lr/refine.hpp"

namespace lr {

/// deg_{C'}(C): the common degree of C's vertices into C', or nullopt when
/// the vertices disagree (C is unbalanced wrt C').
std::optional<int> class_degree(const Graph& g, const std::vector<int>& from,
                                const std::vector<int>& into);

struct UnbalancedClass {
    std::vector<int> members;
    std::vector<std::vector<int>> witnesses;  // classes seeing differing degrees
};

/// All classes of c that are unbalanced wrt at least one class (possibly
/// themselves), with the witnessing classes listed.
std::vector<UnbalancedClass> unbalanced_classes(const Graph& g, const Colouring& c);

/// The analyzed quantities of the pair phase of a long-refinement run:
/// p, the splitting order on pairs, a/b, ell = ell_{4->2}, t, q(t), c, d and
/// ell' as used by the structural lemmas.
struct PairPhase {
    int p = 0;
    std::vector<std::array<int, 2>> pair_order;  // P_1..P_{n_P}
    std::vector<int> singletons;                 // singleton vertices of pi^p
    int n_pairs = 0;
    int a = 0, b = 0;
    int ell = 0;
    int t = 0;
    bool t_shape_ok = false;  // whether C_{p-ell-2} matched one of the two shapes
    int q = 0;
    int c = 0, d = 0;
    int ell_prime = 0;

    const std::array<int, 2>& pair(int index_1_based) const { return pair_order[index_1_based - 1]; }
};

/// Extracts the pair phase from the trace of a long-refinement graph.
/// Rejects traces that are not long-refinement (iteration number != n-1).
PairPhase pair_phase(const RefinementTrace& trace, const Graph& g);

enum class CheckStatus { Pass, Fail, Vacuous };

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::Pass;
    std::string witness;  // offending classes / iteration, empty on pass
};

struct StructureReport {
    std::vector<CheckResult> checks;
    std::optional<PairPhase> phase;

    bool all_pass() const {
        for (const auto& c : checks)
            if (c.status == CheckStatus::Fail) return false;
        return true;
    }
};

/// Runs the ten structural checks derived from the splitting lemmas against
/// a fresh refinement trace of g. Non-long-refinement inputs fail check 1
/// and leave the remaining checks vacuous.
StructureReport verify_structure(const Graph& g);
StructureReport verify_structure(const Graph& g, const RefinementTrace& trace);

}  // namespace lr

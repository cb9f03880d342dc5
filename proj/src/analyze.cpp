#include "lr/analyze.hpp"

#include <algorithm>
#include <sstream>

namespace lr {

namespace {

std::string show_class(const std::vector<int>& members) {
    std::ostringstream out;
    out << "{";
    for (size_t i = 0; i < members.size(); ++i) out << (i ? "," : "") << members[i];
    out << "}";
    return out.str();
}

std::vector<int> sorted_union(std::initializer_list<const std::vector<int>*> parts) {
    std::vector<int> out;
    for (const auto* part : parts) out.insert(out.end(), part->begin(), part->end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> pair_vec(const std::array<int, 2>& p) { return {p[0], p[1]}; }

}  // namespace

std::optional<int> class_degree(const Graph& g, const std::vector<int>& from,
                                const std::vector<int>& into) {
    std::optional<int> common;
    for (int v : from) {
        int d = 0;
        for (int u : g.neighbours(v))
            if (std::binary_search(into.begin(), into.end(), u)) ++d;
        if (!common)
            common = d;
        else if (*common != d)
            return std::nullopt;
    }
    return common;
}

std::vector<UnbalancedClass> unbalanced_classes(const Graph& g, const Colouring& c) {
    if (static_cast<int>(c.colour.size()) != g.order())
        throw std::invalid_argument("colouring does not cover the graph");
    const auto classes = c.classes();
    const int k = c.k;
    std::vector<UnbalancedClass> result;
    for (const auto& members : classes) {
        std::vector<std::vector<int>> rows(members.size(), std::vector<int>(k, 0));
        for (size_t i = 0; i < members.size(); ++i)
            for (int u : g.neighbours(members[i])) ++rows[i][c.colour[u]];
        UnbalancedClass entry;
        for (int col = 0; col < k; ++col) {
            bool uniform = true;
            for (size_t i = 1; i < rows.size(); ++i)
                if (rows[i][col] != rows[0][col]) {
                    uniform = false;
                    break;
                }
            if (!uniform) entry.witnesses.push_back(classes[col]);
        }
        if (!entry.witnesses.empty()) {
            entry.members = members;
            result.push_back(std::move(entry));
        }
    }
    return result;
}

PairPhase pair_phase(const RefinementTrace& trace, const Graph& g) {
    const int n = g.order();
    if (n < 2 || trace.iteration_number != n - 1)
        throw std::invalid_argument("pair_phase requires a long-refinement trace (iteration " +
                                    std::to_string(trace.iteration_number) + " on " +
                                    std::to_string(n) + " vertices)");
    for (const auto& records : trace.splits)
        if (records.size() != 1 || records[0].children.size() != 2)
            throw std::invalid_argument("pair_phase: trace has a non-binary iteration");

    PairPhase ph;
    // p: first iteration whose classes all have size <= 2
    ph.p = -1;
    for (int i = 0; i < static_cast<int>(trace.partitions.size()); ++i) {
        int max_size = 0;
        for (const auto& cls : trace.partitions[i].classes())
            max_size = std::max(max_size, static_cast<int>(cls.size()));
        if (max_size <= 2) {
            ph.p = i;
            break;
        }
    }
    if (ph.p < 1) throw std::invalid_argument("pair_phase: no usable pair iteration");

    ph.n_pairs = (n - 1) - ph.p;
    for (int i = 1; i <= ph.n_pairs; ++i) {
        const auto& parent = trace.splits[ph.p + i - 1][0].parent;
        if (parent.size() != 2) throw std::invalid_argument("pair_phase: late split of a non-pair");
        ph.pair_order.push_back({parent[0], parent[1]});
    }
    for (const auto& cls : trace.partitions[ph.p].classes())
        if (cls.size() == 1) ph.singletons.push_back(cls[0]);

    const auto& creating = trace.splits[ph.p - 1][0];
    auto find_position = [&](const std::vector<int>& cls) {
        for (int i = 1; i <= ph.n_pairs; ++i)
            if (cls.size() == 2 && pair_vec(ph.pair(i)) == cls) return i;
        return 0;
    };
    ph.a = find_position(creating.children[0]);
    ph.b = find_position(creating.children[1]);
    if (ph.a == 0 || ph.b == 0)
        throw std::invalid_argument("pair_phase: A_p or B_p is not a later-splitting pair");
    if (ph.a > ph.b) std::swap(ph.a, ph.b);

    ph.ell = std::min(ph.n_pairs - ph.b, ph.a - 1);
    ph.c = ph.a - ph.ell;

    // t: shape of C_{p-ell-2}, the class splitting at iteration p-ell-1
    ph.t = 0;
    ph.t_shape_ok = false;
    const int idx = ph.p - ph.ell - 2;
    if (idx >= 0 && ph.c >= 2) {
        const auto& cls = trace.splits[idx][0].parent;
        auto pc1 = pair_vec(ph.pair(ph.c - 1));
        auto pc = pair_vec(ph.pair(ph.c));
        auto plast = pair_vec(ph.pair(ph.n_pairs));
        if (cls == sorted_union({&pc1, &pc, &plast})) {
            ph.t = 0;
            ph.t_shape_ok = true;
        } else if (cls.size() == 3) {
            for (int s : ph.singletons) {
                std::vector<int> sv{s};
                if (cls == sorted_union({&pc1, &sv})) {
                    ph.t = 1;
                    ph.t_shape_ok = true;
                    break;
                }
            }
        }
    }

    ph.q = ph.p - ph.ell - 1 - ph.t;
    ph.d = ph.c - ph.t - 1;
    ph.ell_prime = std::min(ph.ell, ph.d - 1);
    return ph;
}

namespace {

CheckResult check(const std::string& name, bool ok, const std::string& witness) {
    return {name, ok ? CheckStatus::Pass : CheckStatus::Fail, ok ? "" : witness};
}

CheckResult vacuous(const std::string& name, const std::string& why) {
    return {name, CheckStatus::Vacuous, why};
}

}  // namespace

StructureReport verify_structure(const Graph& g) {
    return verify_structure(g, run_colour_refinement(g));
}

StructureReport verify_structure(const Graph& g, const RefinementTrace& trace) {
    static const char* names[10] = {
        "split-dynamics",        // 1: one binary split and one unbalanced class per iteration
        "first-split-pairs",     // 2: A_p, B_p are pairs
        "consecutive-matching",  // 3: consecutive pairs joined by a matching
        "p1-attachment",         // 4: P_1 complete-bipartite onto P_a and P_b
        "trivial-attachment",    // 5: non-consecutive pairs / singletons attach trivially
        "b-distance",            // 6: b in {a+1, a+2}
        "four-cascade",          // 7: pi^{p-h-1} formula for h in [0, ell]
        "four-class-links",      // 8: consecutive size-4 classes linked with degree 1 or 3
        "symmetry-end-shape",    // 9: C_{p-ell-2} is P_{c-1}+P_c+P_last or P_{c-1}+S
        "d-range",               // 10: d within the bound for b-a
    };
    StructureReport report;
    const int n = g.order();

    // check 1
    {
        std::ostringstream bad;
        bool ok = trace.iteration_number == n - 1 && n >= 2;
        if (!ok) bad << "iteration_number " << trace.iteration_number << " != n-1";
        for (size_t i = 0; ok && i < trace.splits.size(); ++i) {
            if (trace.splits[i].size() != 1 || trace.splits[i][0].children.size() != 2) {
                ok = false;
                bad << "iteration " << i + 1 << " is not a single binary split";
            }
        }
        for (size_t i = 0; ok && i + 1 < trace.partitions.size(); ++i) {
            auto unbalanced = unbalanced_classes(g, trace.partitions[i]);
            if (unbalanced.size() != 1) {
                ok = false;
                bad << "pi^" << i << " has " << unbalanced.size() << " unbalanced classes";
            }
        }
        if (ok && !trace.partitions.empty() &&
            !unbalanced_classes(g, trace.partitions.back()).empty()) {
            ok = false;
            bad << "final partition is not stable";
        }
        report.checks.push_back(check(names[0], ok, bad.str()));
    }
    if (report.checks[0].status == CheckStatus::Fail) {
        for (int i = 1; i < 10; ++i)
            report.checks.push_back(vacuous(names[i], "requires a long-refinement trace"));
        return report;
    }

    PairPhase ph = pair_phase(trace, g);
    report.phase = ph;
    const auto& parts = trace.partitions;

    // check 2
    {
        const auto& children = trace.splits[ph.p - 1][0].children;
        bool ok = children[0].size() == 2 && children[1].size() == 2;
        report.checks.push_back(check(names[1], ok,
                                      show_class(children[0]) + " " + show_class(children[1])));
    }
    // check 3
    {
        bool ok = true;
        std::ostringstream bad;
        for (int i = 1; i < ph.n_pairs && ok; ++i) {
            auto pi = pair_vec(ph.pair(i)), pj = pair_vec(ph.pair(i + 1));
            auto fwd = class_degree(g, pi, pj), rev = class_degree(g, pj, pi);
            if (fwd != 1 || rev != 1) {
                ok = false;
                bad << "P_" << i << "=" << show_class(pi) << " P_" << i + 1 << "=" << show_class(pj);
            }
        }
        report.checks.push_back(check(names[2], ok, bad.str()));
    }
    // check 4
    {
        auto p1 = pair_vec(ph.pair(1));
        auto pa = pair_vec(ph.pair(ph.a)), pb = pair_vec(ph.pair(ph.b));
        auto joined = [&](int v, const std::vector<int>& target) {
            return g.has_edge(v, target[0]) && g.has_edge(v, target[1]);
        };
        auto avoids = [&](int v, const std::vector<int>& target) {
            return !g.has_edge(v, target[0]) && !g.has_edge(v, target[1]);
        };
        bool ok = (joined(p1[0], pa) && avoids(p1[0], pb) && joined(p1[1], pb) && avoids(p1[1], pa)) ||
                  (joined(p1[1], pa) && avoids(p1[1], pb) && joined(p1[0], pb) && avoids(p1[0], pa));
        report.checks.push_back(check(names[3], ok,
                                      "P_1=" + show_class(p1) + " P_a=" + show_class(pa) +
                                          " P_b=" + show_class(pb)));
    }
    // check 5
    {
        bool ok = true;
        std::ostringstream bad;
        for (int s : ph.singletons) {
            for (int i = 1; i <= ph.n_pairs && ok; ++i) {
                auto pi = pair_vec(ph.pair(i));
                int edges = (g.has_edge(s, pi[0]) ? 1 : 0) + (g.has_edge(s, pi[1]) ? 1 : 0);
                if (edges == 1) {
                    ok = false;
                    bad << "singleton " << s << " vs P_" << i << "=" << show_class(pi);
                }
            }
        }
        for (int i = 1; i <= ph.n_pairs && ok; ++i) {
            for (int j = i + 2; j <= ph.n_pairs && ok; ++j) {
                if (i == 1 && (j == ph.a || j == ph.b)) continue;
                auto pi = pair_vec(ph.pair(i)), pj = pair_vec(ph.pair(j));
                auto fwd = class_degree(g, pi, pj), rev = class_degree(g, pj, pi);
                bool trivial = fwd && rev && (*fwd == 0 || *fwd == 2) && *fwd == *rev;
                if (!trivial) {
                    ok = false;
                    bad << "P_" << i << "=" << show_class(pi) << " P_" << j << "=" << show_class(pj);
                }
            }
        }
        report.checks.push_back(check(names[4], ok, bad.str()));
    }
    // check 6
    report.checks.push_back(check(names[5], ph.b == ph.a + 1 || ph.b == ph.a + 2,
                                  "a=" + std::to_string(ph.a) + " b=" + std::to_string(ph.b)));
    // checks 7 and 8
    if (ph.ell == 0) {
        report.checks.push_back(vacuous(names[6], "ell = 0"));
        report.checks.push_back(vacuous(names[7], "ell = 0"));
    } else {
        bool ok7 = true;
        std::ostringstream bad7;
        for (int h = 0; h <= ph.ell && ok7; ++h) {
            std::vector<std::vector<int>> expected;
            for (int s : ph.singletons) expected.push_back({s});
            for (int i = 0; i <= h; ++i) {
                auto lo = pair_vec(ph.pair(ph.a - i)), hi = pair_vec(ph.pair(ph.b + i));
                expected.push_back(sorted_union({&lo, &hi}));
            }
            auto solo = [&](int i) { expected.push_back(pair_vec(ph.pair(i))); };
            for (int i = 1; i <= ph.a - h - 1; ++i) solo(i);
            for (int i = ph.a + 1; i <= ph.b - 1; ++i) solo(i);
            for (int i = ph.b + h + 1; i <= ph.n_pairs; ++i) solo(i);
            std::sort(expected.begin(), expected.end());
            auto actual = parts[ph.p - h - 1].classes();
            std::sort(actual.begin(), actual.end());
            if (expected != actual) {
                ok7 = false;
                bad7 << "pi^" << ph.p - h - 1 << " does not match the cascade formula (h=" << h << ")";
            }
        }
        report.checks.push_back(check(names[6], ok7, bad7.str()));

        bool ok8 = true;
        std::ostringstream bad8;
        for (int h = 0; h <= ph.ell - 1 && ok8; ++h) {
            auto a0 = pair_vec(ph.pair(ph.a - h)), b0 = pair_vec(ph.pair(ph.b + h));
            auto a1 = pair_vec(ph.pair(ph.a - h - 1)), b1 = pair_vec(ph.pair(ph.b + h + 1));
            auto c0 = sorted_union({&a0, &b0}), c1 = sorted_union({&a1, &b1});
            auto fwd = class_degree(g, c1, c0), rev = class_degree(g, c0, c1);
            if (!fwd || !rev || *fwd != *rev || (*fwd != 1 && *fwd != 3)) {
                ok8 = false;
                bad8 << show_class(c0) << " vs " << show_class(c1) << " (h=" << h << ")";
            }
        }
        report.checks.push_back(check(names[7], ok8, bad8.str()));
    }
    // check 9
    {
        std::string witness;
        if (!ph.t_shape_ok && ph.p - ph.ell - 2 >= 0)
            witness = "C_{p-ell-2}=" + show_class(trace.splits[ph.p - ph.ell - 2][0].parent);
        else if (!ph.t_shape_ok)
            witness = "C_{p-ell-2} does not exist";
        report.checks.push_back(check(names[8], ph.t_shape_ok, witness));
    }
    // check 10
    {
        int lo = ph.ell;
        int hi = ph.b == ph.a + 1 ? ph.ell + 4 : ph.ell + 2;
        bool ok = (ph.b == ph.a + 1 || ph.b == ph.a + 2) && lo <= ph.d && ph.d <= hi;
        report.checks.push_back(check(names[9], ok,
                                      "d=" + std::to_string(ph.d) + " ell=" + std::to_string(ph.ell) +
                                          " b-a=" + std::to_string(ph.b - ph.a)));
    }
    return report;
}

}  // namespace lr

#include "lr/strings.hpp"

#include <algorithm>
#include <sstream>

#include "lr/analyze.hpp"
#include "lr/refine.hpp"

namespace lr {

int LrString::order() const {
    int singletons = 0;
    for (const auto& t : tokens) singletons += t.sub2 ? 1 : 0;
    return 2 * static_cast<int>(tokens.size()) + singletons;
}

LrString parse_lr_string(std::string_view text) {
    std::vector<LrToken> tokens;
    std::vector<size_t> positions;
    size_t i = 0;
    while (i < text.size()) {
        char ch = text[i];
        if (ch == ' ' || ch == '\t') {
            ++i;
            continue;
        }
        LrToken tok{};
        switch (ch) {
            case 'S': tok.letter = LrLetter::S; break;
            case 'X': tok.letter = LrLetter::X; break;
            case '0': tok.letter = LrLetter::Zero; break;
            case '1': tok.letter = LrLetter::One; break;
            default: throw LrParseError(std::string("unknown token '") + ch + "'", i);
        }
        size_t pos = i++;
        // optional subscript: "_2", "2", or UTF-8 SUBSCRIPT TWO
        if (i < text.size() && text[i] == '_') {
            if (i + 1 >= text.size() || text[i + 1] != '2')
                throw LrParseError("'_' must be followed by '2'", i);
            tok.sub2 = true;
            i += 2;
        } else if (i < text.size() && text[i] == '2') {
            tok.sub2 = true;
            ++i;
        } else if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xE2 &&
                   static_cast<unsigned char>(text[i + 1]) == 0x82 &&
                   static_cast<unsigned char>(text[i + 2]) == 0x82) {
            tok.sub2 = true;
            i += 3;
        }
        if (tok.letter == LrLetter::S && tok.sub2)
            throw LrParseError("S has no subscript form", pos);
        tokens.push_back(tok);
        positions.push_back(pos);
    }
    if (tokens.empty()) throw LrParseError("empty string", 0);
    if (tokens[0].letter != LrLetter::S) throw LrParseError("S must be the first token", positions[0]);
    int s_count = 0, x_count = 0, sub_count = 0;
    for (size_t t = 0; t < tokens.size(); ++t) {
        s_count += tokens[t].letter == LrLetter::S;
        x_count += tokens[t].letter == LrLetter::X;
        sub_count += tokens[t].sub2;
        if (t > 0 && tokens[t].letter == LrLetter::S)
            throw LrParseError("S occurs more than once", positions[t]);
    }
    if (x_count != 2) throw LrParseError("expected exactly two X tokens, found " +
                                         std::to_string(x_count), 0);
    if (sub_count > 1) throw LrParseError("at most one subscript token is allowed", 0);
    if (tokens.size() < 4) throw LrParseError("string needs at least 4 tokens", 0);
    LrString out;
    out.tokens = std::move(tokens);
    return out;
}

std::string to_string(const LrString& s) {
    std::string out;
    for (const auto& tok : s.tokens) {
        switch (tok.letter) {
            case LrLetter::S: out += 'S'; break;
            case LrLetter::X: out += 'X'; break;
            case LrLetter::Zero: out += '0'; break;
            case LrLetter::One: out += '1'; break;
        }
        if (tok.sub2) out += "_2";
    }
    return out;
}

const std::array<std::string, 11> kFamilyIds = {
    "even-1", "even-2", "even-3", "even-4", "even-5", "even-6",
    "odd-1",  "odd-2",  "odd-3",  "odd-4",  "odd-5",
};

namespace {

std::string rep(const std::string& block, int k) {
    std::string out;
    for (int i = 0; i < k; ++i) out += block;
    return out;
}

}  // namespace

LrString expand_family(const std::string& family_id, int k) {
    if (k < 0) throw std::invalid_argument("family parameter must be non-negative");
    std::string text;
    if (family_id == "even-1") {
        text = "S011XX";
    } else if (family_id == "even-2") {
        text = "S" + rep("1", k) + "00" + rep("1", k) + "X1X" + rep("1", k) + "0";
    } else if (family_id == "even-3") {
        text = "S" + rep("1", k) + "1100" + rep("1", k) + "XX" + rep("1", k) + "0";
    } else if (family_id == "even-4") {
        text = "S" + rep("1", k) + "001" + rep("1", k) + "XX" + rep("1", k) + "10";
    } else if (family_id == "even-5") {
        text = "S011" + rep("011", k) + "00" + rep("110", k) + "XX" + rep("011", k) + "0";
    } else if (family_id == "even-6") {
        text = "S" + rep("011", k) + "00" + rep("110", k) + "1X0X1" + rep("011", k) + "0";
    } else if (family_id == "odd-1") {
        text = "S1_211XX";
    } else if (family_id == "odd-2") {
        text = k == 0 ? "S0X1X_2"
                      : "S" + rep("1", k - 1) + "101" + rep("1", k - 1) + "X1X" + rep("1", k - 1) + "1_2";
    } else if (family_id == "odd-3") {
        text = k == 0 ? "S110XX_2"
                      : "S11" + rep("1", k - 1) + "101" + rep("1", k - 1) + "XX" + rep("1", k - 1) + "1_2";
    } else if (family_id == "odd-4") {
        text = "S" + rep("1", k) + "0" + rep("1", k) + "1XX" + rep("1", k) + "1_2";
    } else if (family_id == "odd-5") {
        text = "S" + rep("011", k) + "00" + rep("110", k) + "X1_2X" + rep("011", k) + "0";
    } else {
        throw std::invalid_argument("unknown family id: " + family_id);
    }
    return parse_lr_string(text);
}

RealizedGraph realize(const LrString& s) {
    const int np = static_cast<int>(s.tokens.size());
    RealizedGraph out;
    out.pair_of.resize(np);
    out.singleton_of.assign(np, -1);
    for (int i = 0; i < np; ++i) out.pair_of[i] = {2 * i, 2 * i + 1};
    int next = 2 * np;
    for (int i = 0; i < np; ++i)
        if (s.tokens[i].sub2) out.singleton_of[i] = next++;
    const int n = next;

    std::vector<Edge> edges;
    std::vector<int> deg(n, 0);
    auto add = [&](int u, int v) {
        edges.emplace_back(u, v);
        ++deg[u];
        ++deg[v];
    };

    // consecutive pairs are joined by the parallel matching
    for (int i = 0; i + 1 < np; ++i) {
        add(out.pair_of[i][0], out.pair_of[i + 1][0]);
        add(out.pair_of[i][1], out.pair_of[i + 1][1]);
    }
    // each subscript singleton attaches to both vertices of its pair
    for (int i = 0; i < np; ++i)
        if (out.singleton_of[i] >= 0) {
            add(out.singleton_of[i], out.pair_of[i][0]);
            add(out.singleton_of[i], out.pair_of[i][1]);
        }
    // P_1 attaches complete-bipartitely onto the two X pairs
    int pos_a = -1, pos_b = -1;
    for (int i = 0; i < np; ++i)
        if (s.tokens[i].letter == LrLetter::X) (pos_a < 0 ? pos_a : pos_b) = i;
    add(out.pair_of[0][0], out.pair_of[pos_a][0]);
    add(out.pair_of[0][0], out.pair_of[pos_a][1]);
    add(out.pair_of[0][1], out.pair_of[pos_b][0]);
    add(out.pair_of[0][1], out.pair_of[pos_b][1]);
    // letters 0/1 fix the pair degree; the X pairs must end up with equal
    // degrees because they form the split halves of C_{p-1}. A residual
    // deficit of one on both vertices is closed by the internal edge.
    auto close_to = [&](int token_index, int target) {
        auto [u, v] = out.pair_of[token_index];
        if (deg[u] != deg[v])
            throw RealizeError("construction error: unequal pair degrees at token " +
                               std::to_string(token_index + 1));
        if (deg[u] == target - 1) {
            add(u, v);
        } else if (deg[u] != target) {
            throw RealizeError("construction error: pair " + std::to_string(token_index + 1) +
                               " has degree " + std::to_string(deg[u]) + ", needs " +
                               std::to_string(target));
        }
    };
    int x_target = std::max(deg[out.pair_of[pos_a][0]], deg[out.pair_of[pos_b][0]]);
    close_to(pos_a, x_target);
    close_to(pos_b, x_target);
    for (int i = 0; i < np; ++i) {
        const LrToken& tok = s.tokens[i];
        if (tok.letter != LrLetter::Zero && tok.letter != LrLetter::One) continue;
        close_to(i, tok.letter == LrLetter::Zero ? 2 : 3);
    }

    try {
        out.graph = Graph::from_edges(n, edges);
    } catch (const std::invalid_argument& e) {
        throw RealizeError(std::string("construction error: ") + e.what());
    }

    // contract checks: the engine is the arbiter
    RefinementTrace trace = run_colour_refinement(out.graph);
    if (!is_long_refinement(trace, n))
        throw RealizeError("string does not realize a long-refinement graph: \"" + to_string(s) +
                           "\" gives iteration number " + std::to_string(trace.iteration_number) +
                           " on " + std::to_string(n) + " vertices");
    if (out.graph.degree_set() != std::vector<int>{2, 3})
        throw RealizeError("realized graph does not have degrees {2,3}");
    PairPhase ph = pair_phase(trace, out.graph);
    auto matches = [&](int position_1_based, int token_index) {
        auto cls = ph.pair(position_1_based);
        return cls == out.pair_of[token_index];
    };
    if (ph.a != pos_a + 1 || ph.b != pos_b + 1 || !matches(ph.a, pos_a) || !matches(ph.b, pos_b))
        throw RealizeError("string does not realize a long-refinement graph: pair phase puts "
                           "A_p/B_p at positions " + std::to_string(ph.a) + "," +
                           std::to_string(ph.b) + " instead of the X positions");
    return out;
}

LrString extract_string(const Graph& g) {
    RefinementTrace trace = run_colour_refinement(g);
    if (!is_long_refinement(trace, g.order()) || g.order() < 2)
        throw std::invalid_argument("extract_string: not a long-refinement graph");
    if (g.degree_set() != std::vector<int>{2, 3})
        throw std::invalid_argument("extract_string: degree set is not {2,3}");
    PairPhase ph = pair_phase(trace, g);
    if (ph.singletons.size() > 1)
        throw std::invalid_argument("extract_string: more than one singleton in pi^p");

    auto adjacent_singleton = [&](const std::array<int, 2>& pair) {
        for (int s : ph.singletons)
            if (g.has_edge(s, pair[0]) || g.has_edge(s, pair[1])) return true;
        return false;
    };
    LrString out;
    for (int i = 1; i <= ph.n_pairs; ++i) {
        const auto& pair = ph.pair(i);
        LrToken tok{};
        if (i == 1) {
            tok.letter = LrLetter::S;
        } else if (i == ph.a || i == ph.b) {
            tok.letter = LrLetter::X;
            tok.sub2 = adjacent_singleton(pair);
        } else {
            int d = g.degree(pair[0]);
            if (d != g.degree(pair[1]) || (d != 2 && d != 3))
                throw std::invalid_argument("extract_string: pair with unusable degree");
            tok.letter = d == 2 ? LrLetter::Zero : LrLetter::One;
            tok.sub2 = adjacent_singleton(pair);
        }
        out.tokens.push_back(tok);
    }
    return out;
}

}  // namespace lr

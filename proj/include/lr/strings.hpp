#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "lr/graph.hpp"

namespace lr {

enum class LrLetter { S, X, Zero, One };

/// One letter of a long-refinement string; `sub2` marks the subscript-2
/// variant (the pair is adjacent to a singleton).
struct LrToken {
    LrLetter letter;
    bool sub2 = false;
    bool operator==(const LrToken&) const = default;
};

/// Validated word over {S, X, X2, 0, 02, 1, 12}: starts with the unique S,
/// has exactly two X letters, at most one subscript and length >= 4.
struct LrString {
    std::vector<LrToken> tokens;
    bool operator==(const LrString&) const = default;

    size_t size() const { return tokens.size(); }
    /// Graph order realized by this string.
    int order() const;
};

struct LrParseError : std::invalid_argument {
    LrParseError(const std::string& what, size_t position_)
        : std::invalid_argument(what + " (position " + std::to_string(position_) + ")"),
          position(position_) {}
    size_t position;
};

/// Surface syntax: letters S, X, 0, 1 with optional subscript suffix "_2"
/// or "2"; whitespace is ignored.
LrString parse_lr_string(std::string_view text);
std::string to_string(const LrString& s);

/// The eleven string families of the degree-{2,3} classification.
/// Families "even-1".."even-6" are the even-order sets, "odd-1".."odd-5"
/// the odd-order ones. For the two families that are a union of an
/// exceptional string and a parameterized set, k = 0 yields the exceptional
/// string and k >= 1 the parameterized member with parameter k-1; for the
/// two one-string families k is ignored.
extern const std::array<std::string, 11> kFamilyIds;
LrString expand_family(const std::string& family_id, int k);

struct RealizeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A realized string: the graph plus the vertex pair of each token and the
/// singleton vertex of each subscript token (-1 otherwise).
struct RealizedGraph {
    Graph graph;
    std::vector<std::array<int, 2>> pair_of;
    std::vector<int> singleton_of;
};

/// Builds the unique graph of a long-refinement string and validates the
/// result with the refinement engine: the graph must be long-refinement,
/// have degrees {2,3}, and its pair phase must put P_a and P_b at the X
/// positions. Well-formed strings outside the classification fail here.
RealizedGraph realize(const LrString& s);

/// Reads the string back from a degree-{2,3} long-refinement graph with at
/// most one singleton class in pi^p. Inverse of realize on the catalog.
LrString extract_string(const Graph& g);

}  // namespace lr

#include "lr/graph6.hpp"

#include <istream>

namespace lr {

namespace {

void append_size(std::string& out, long long n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
}

int value_at(std::string_view text, size_t offset) {
    if (offset >= text.size()) throw Graph6Error("unexpected end of graph6 data", offset);
    unsigned char b = static_cast<unsigned char>(text[offset]);
    if (b < 63 || b > 126) throw Graph6Error("graph6 byte out of range 63..126", offset);
    return b - 63;
}

}  // namespace

std::string write_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    append_size(out, n);
    int bit = 5;
    int acc = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            if (g.has_edge(row, col)) acc |= 1 << bit;
            if (--bit < 0) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                bit = 5;
            }
        }
    }
    if (bit != 5) out.push_back(static_cast<char>(acc + 63));
    return out;
}

Graph parse_graph6(std::string_view text) {
    size_t pos = 0;
    long long n;
    int first = value_at(text, pos);
    if (first < 63) {
        n = first;
        pos = 1;
    } else {
        // first byte is '~': long form
        int second = value_at(text, 1);
        if (second < 63) {
            n = (static_cast<long long>(second) << 12) | (value_at(text, 2) << 6) | value_at(text, 3);
            if (n < 63) throw Graph6Error("non-canonical long-form size", 1);
            pos = 4;
        } else {
            n = 0;
            for (size_t i = 2; i < 8; ++i) n = (n << 6) | value_at(text, i);
            if (n < 258048) throw Graph6Error("non-canonical long-form size", 2);
            pos = 8;
        }
    }
    if (n > 1'000'000) throw Graph6Error("graph too large", 0);
    const long long nbits = n * (n - 1) / 2;
    const size_t nbytes = static_cast<size_t>((nbits + 5) / 6);
    if (text.size() < pos + nbytes) throw Graph6Error("graph6 data too short", text.size());
    if (text.size() > pos + nbytes) throw Graph6Error("trailing garbage after graph6 data", pos + nbytes);

    std::vector<Edge> edges;
    long long bit_index = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row, ++bit_index) {
            int value = value_at(text, pos + static_cast<size_t>(bit_index / 6));
            if ((value >> (5 - bit_index % 6)) & 1) edges.emplace_back(row, col);
        }
    }
    // padding bits must be zero
    for (long long b = nbits; b < static_cast<long long>(nbytes) * 6; ++b) {
        int value = value_at(text, pos + static_cast<size_t>(b / 6));
        if ((value >> (5 - b % 6)) & 1)
            throw Graph6Error("nonzero padding bit", pos + static_cast<size_t>(b / 6));
    }
    return Graph::from_edges(static_cast<int>(n), edges);
}

std::vector<Graph> read_graph6_lines(std::istream& in) {
    std::vector<Graph> graphs;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (line.empty() || line.rfind(">>", 0) == 0) continue;
        graphs.push_back(parse_graph6(line));
    }
    return graphs;
}

}  // namespace lr

#include "lr/dot.hpp"

#include <map>
#include <sstream>

namespace lr {

namespace {

// A small qualitative palette; classes beyond it wrap around with a lighter shade.
const char* kPalette[] = {"#a6cee3", "#1f78b4", "#b2df8a", "#33a02c", "#fb9a99", "#e31a1c",
                          "#fdbf6f", "#ff7f00", "#cab2d6", "#6a3d9a", "#ffff99", "#b15928"};

}  // namespace

std::string write_dot(const Graph& g, const std::vector<int>* colours) {
    if (colours && static_cast<int>(colours->size()) != g.order())
        throw std::invalid_argument("colouring size mismatch: " + std::to_string(colours->size()) +
                                    " colours for " + std::to_string(g.order()) + " vertices");
    std::ostringstream out;
    out << "graph g {\n";
    out << "  node [shape=circle];\n";
    if (colours) {
        std::map<int, std::vector<int>> classes;
        for (int v = 0; v < g.order(); ++v) classes[(*colours)[v]].push_back(v);
        for (const auto& [colour, members] : classes) {
            const char* fill = kPalette[colour % (sizeof(kPalette) / sizeof(kPalette[0]))];
            for (int v : members)
                out << "  " << v << " [style=filled, fillcolor=\"" << fill
                    << "\", label=\"" << v << "/" << colour << "\"];\n";
        }
    } else {
        for (int v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
    }
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace lr

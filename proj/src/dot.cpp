#include "pcdg/dot.hpp"

#include <sstream>
#include <stdexcept>

namespace pcdg {

std::string render_dot(const Graph& g, const std::vector<std::string>& labels) {
    if (!labels.empty() && int(labels.size()) != g.order())
        throw std::invalid_argument("need one label per vertex");
    std::ostringstream out;
    out << "graph G {\n";
    out << "  layout=neato;\n  node [shape=circle];\n";
    for (int v = 0; v < g.order(); ++v) {
        out << "  v" << v;
        if (!labels.empty()) out << " [label=\"" << labels[v] << "\"]";
        out << ";\n";
    }
    for (auto [a, b] : g.edges()) out << "  v" << a << " -- v" << b << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace pcdg

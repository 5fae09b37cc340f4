#include "degex/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace degex {

ParsedGraph read_edge_list(std::istream& in) {
    std::string line;
    int n = -1;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        if (ls >> n) break;
    }
    if (n <= 0)
        throw std::invalid_argument("edge list must start with a positive vertex count");

    Graph g(n);
    std::optional<std::vector<int>> boundary;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "B:") {
            std::vector<int> ids;
            int v;
            while (ls >> v) ids.push_back(v);
            boundary = std::move(ids);
            continue;
        }
        int u = 0, v = 0;
        try {
            u = std::stoi(first);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad edge line: '" + line + "'");
        }
        if (!(ls >> v))
            throw std::invalid_argument("bad edge line: '" + line + "'");
        g.add_edge(u, v);
    }
    return {std::move(g), std::move(boundary)};
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << "\n";
    for (auto [a, b] : g.edges()) out << a << " " << b << "\n";
}

void write_edge_list(std::ostream& out, const BoundaryGraph& bg) {
    write_edge_list(out, bg.graph());
    out << "B:";
    for (int v : bg.boundary()) out << " " << v;
    out << "\n";
}

}  // namespace degex

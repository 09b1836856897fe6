#include "spanlab/edge_list_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace spanlab {

void write_edge_list(const Graph& g, std::ostream& out) {
    out << g.vertex_count() << ' ' << g.edges().size() << ' ' << (g.directed() ? 1 : 0)
        << ' ' << (g.weighted() ? 1 : 0) << '\n';
    for (const Edge& e : g.edges()) {
        out << e.u << ' ' << e.v;
        if (g.weighted()) out << ' ' << e.w;
        if (e.label != kNoLabel) out << ' ' << e.label;
        out << '\n';
    }
}

void write_edge_list(const Graph& g, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    write_edge_list(g, f);
}

Graph read_edge_list(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty edge list");
    std::istringstream header(line);
    long long n, m;
    int directed, weighted;
    if (!(header >> n >> m >> directed >> weighted))
        throw std::runtime_error("bad edge-list header");
    Graph g(Vertex(n), directed != 0, weighted != 0);
    g.reserve_edges(size_t(m));
    for (long long i = 0; i < m; i++) {
        if (!std::getline(in, line)) throw std::runtime_error("truncated edge list");
        std::istringstream ls(line);
        long long u, v, w = 1, label = kNoLabel;
        if (!(ls >> u >> v)) throw std::runtime_error("bad edge line: " + line);
        if (weighted && !(ls >> w)) throw std::runtime_error("missing weight: " + line);
        long long tail;
        if (ls >> tail) label = tail;
        g.add_edge(Vertex(u), Vertex(v), w, label);
    }
    g.finalize();
    return g;
}

Graph read_edge_list(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open: " + path);
    return read_edge_list(f);
}

}  // namespace spanlab

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace spanlab {

using Vertex = int32_t;
using Weight = int64_t;

inline constexpr Weight kUnreachable = -1;
inline constexpr int64_t kNoLabel = -1;

struct Edge {
    Vertex u = 0;
    Vertex v = 0;
    Weight w = 1;
    int64_t label = kNoLabel;
};

/// Immutable-after-finalize graph over dense integer vertex ids.
/// Undirected graphs store each edge once; adjacency covers both directions.
class Graph {
public:
    Graph() = default;
    Graph(Vertex n, bool directed, bool weighted = false)
        : n_(n), directed_(directed), weighted_(weighted) {}

    void add_edge(Vertex u, Vertex v, Weight w = 1, int64_t label = kNoLabel);
    void reserve_edges(size_t m) { edges_.reserve(m); }

    // Builds the adjacency index; must be called before queries.
    void finalize();

    Vertex vertex_count() const { return n_; }
    bool directed() const { return directed_; }
    bool weighted() const { return weighted_; }
    bool finalized() const { return finalized_; }
    const std::vector<Edge>& edges() const { return edges_; }

    struct Arc {
        Vertex to;
        Weight w;
        int edge_id;
    };
    // Out-arcs of u (both directions for undirected graphs).
    const Arc* arcs_begin(Vertex u) const { return adj_.data() + head_[u]; }
    const Arc* arcs_end(Vertex u) const { return adj_.data() + head_[u + 1]; }
    size_t degree(Vertex u) const { return head_[u + 1] - head_[u]; }

    // Optional layer assignment (layered constructions); empty when absent.
    std::vector<int> layer_of;

private:
    Vertex n_ = 0;
    bool directed_ = false;
    bool weighted_ = false;
    bool finalized_ = false;
    std::vector<Edge> edges_;
    std::vector<size_t> head_;
    std::vector<Arc> adj_;
};

struct DistanceVector {
    Vertex source = 0;
    std::vector<Weight> dist;  // kUnreachable where no path exists
};

enum class DistMode { unweighted, weighted, hop_limited };

std::vector<Weight> bfs_distances(const Graph& g, Vertex src);
std::vector<Weight> dijkstra_distances(const Graph& g, Vertex src);
// Minimum weight over paths with at most beta edges; not a metric in general.
std::vector<Weight> hop_limited_distances(const Graph& g, Vertex src, int beta);

DistanceVector distances(const Graph& g, Vertex source, DistMode mode, int beta = 0);

// Path counts saturate at 2^63; saturation is reported, never silently wrapped.
inline constexpr uint64_t kPathCountCap = uint64_t(1) << 63;

struct PathCount {
    Weight dist = kUnreachable;
    uint64_t count = 0;
    bool saturated = false;
};

// Number of distinct minimum-weight u-v paths, over the shortest-path DAG.
PathCount count_shortest_paths(const Graph& g, Vertex u, Vertex v);

// Max finite distance over ordered reachable pairs; 0 for the empty graph.
Weight diameter(const Graph& g);

// Length of the shortest cycle; nullopt for forests. Undirected only.
std::optional<Weight> girth_of(const Graph& g);

// Deterministic shortest path (unweighted): BFS from min(u,v) with
// smallest-id parent selection. Returned path runs from u to v.
std::vector<Vertex> canonical_path(const Graph& g, Vertex u, Vertex v);

// BFS from several sources at once. Returns (dist, nearest source) per vertex,
// ties broken toward the smallest source id. Sources must be sorted.
void multi_source_bfs(const Graph& g, const std::vector<Vertex>& sources,
                      std::vector<Weight>& dist, std::vector<Vertex>& root);

}  // namespace spanlab

#include "spanlab/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace spanlab {

void Graph::add_edge(Vertex u, Vertex v, Weight w, int64_t label) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    if (w < 1) throw std::invalid_argument("edge weights must be >= 1");
    edges_.push_back({u, v, w, label});
    finalized_ = false;
}

void Graph::finalize() {
    head_.assign(size_t(n_) + 1, 0);
    for (const Edge& e : edges_) {
        head_[e.u + 1]++;
        if (!directed_) head_[e.v + 1]++;
    }
    for (size_t i = 1; i < head_.size(); i++) head_[i] += head_[i - 1];
    adj_.resize(directed_ ? edges_.size() : 2 * edges_.size());
    std::vector<size_t> cursor(head_.begin(), head_.end() - 1);
    for (size_t id = 0; id < edges_.size(); id++) {
        const Edge& e = edges_[id];
        adj_[cursor[e.u]++] = {e.v, e.w, int(id)};
        if (!directed_) adj_[cursor[e.v]++] = {e.u, e.w, int(id)};
    }
    // Deterministic neighbor order independent of insertion order.
    for (Vertex u = 0; u < n_; u++) {
        std::sort(adj_.begin() + head_[u], adj_.begin() + head_[u + 1],
                  [](const Arc& a, const Arc& b) {
                      if (a.to != b.to) return a.to < b.to;
                      if (a.w != b.w) return a.w < b.w;
                      return a.edge_id < b.edge_id;
                  });
    }
    finalized_ = true;
}

namespace {
void require_finalized(const Graph& g) {
    if (!g.finalized()) throw std::logic_error("graph not finalized");
}
void require_source(const Graph& g, Vertex src) {
    if (src < 0 || src >= g.vertex_count())
        throw std::invalid_argument("source vertex out of range");
}
}  // namespace

std::vector<Weight> bfs_distances(const Graph& g, Vertex src) {
    require_finalized(g);
    require_source(g, src);
    std::vector<Weight> dist(g.vertex_count(), kUnreachable);
    std::vector<Vertex> queue;
    queue.reserve(g.vertex_count());
    dist[src] = 0;
    queue.push_back(src);
    for (size_t qi = 0; qi < queue.size(); qi++) {
        Vertex u = queue[qi];
        for (const Graph::Arc* a = g.arcs_begin(u); a != g.arcs_end(u); ++a) {
            if (dist[a->to] == kUnreachable) {
                dist[a->to] = dist[u] + 1;
                queue.push_back(a->to);
            }
        }
    }
    return dist;
}

std::vector<Weight> dijkstra_distances(const Graph& g, Vertex src) {
    require_finalized(g);
    require_source(g, src);
    std::vector<Weight> dist(g.vertex_count(), kUnreachable);
    using Item = std::pair<Weight, Vertex>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
    dist[src] = 0;
    pq.push({0, src});
    while (!pq.empty()) {
        auto [d, u] = pq.top();
        pq.pop();
        if (d != dist[u]) continue;
        for (const Graph::Arc* a = g.arcs_begin(u); a != g.arcs_end(u); ++a) {
            Weight nd = d + a->w;
            if (dist[a->to] == kUnreachable || nd < dist[a->to]) {
                dist[a->to] = nd;
                pq.push({nd, a->to});
            }
        }
    }
    return dist;
}

std::vector<Weight> hop_limited_distances(const Graph& g, Vertex src, int beta) {
    require_finalized(g);
    require_source(g, src);
    if (beta < 1) throw std::invalid_argument("hop limit must be >= 1");
    std::vector<Weight> dist(g.vertex_count(), kUnreachable);
    dist[src] = 0;
    std::vector<Weight> next = dist;
    for (int round = 0; round < beta; round++) {
        bool changed = false;
        for (const Edge& e : g.edges()) {
            if (dist[e.u] != kUnreachable) {
                Weight nd = dist[e.u] + e.w;
                if (next[e.v] == kUnreachable || nd < next[e.v]) {
                    next[e.v] = nd;
                    changed = true;
                }
            }
            if (!g.directed() && dist[e.v] != kUnreachable) {
                Weight nd = dist[e.v] + e.w;
                if (next[e.u] == kUnreachable || nd < next[e.u]) {
                    next[e.u] = nd;
                    changed = true;
                }
            }
        }
        dist = next;
        if (!changed) break;
    }
    return dist;
}

DistanceVector distances(const Graph& g, Vertex source, DistMode mode, int beta) {
    DistanceVector out;
    out.source = source;
    switch (mode) {
        case DistMode::unweighted: out.dist = bfs_distances(g, source); break;
        case DistMode::weighted: out.dist = dijkstra_distances(g, source); break;
        case DistMode::hop_limited: out.dist = hop_limited_distances(g, source, beta); break;
    }
    return out;
}

PathCount count_shortest_paths(const Graph& g, Vertex u, Vertex v) {
    require_finalized(g);
    require_source(g, u);
    require_source(g, v);
    bool unit = true;
    for (const Edge& e : g.edges())
        if (e.w != 1) { unit = false; break; }

    std::vector<Weight> dist;
    if (unit)
        dist = bfs_distances(g, u);
    else
        dist = dijkstra_distances(g, u);
    PathCount out;
    out.dist = dist[v];
    if (dist[v] == kUnreachable) return out;

    // Count over the shortest-path DAG in order of increasing distance.
    std::vector<Vertex> order;
    order.reserve(g.vertex_count());
    for (Vertex x = 0; x < g.vertex_count(); x++)
        if (dist[x] != kUnreachable && dist[x] <= dist[v]) order.push_back(x);
    std::sort(order.begin(), order.end(),
              [&](Vertex a, Vertex b) { return dist[a] < dist[b]; });
    std::vector<uint64_t> cnt(g.vertex_count(), 0);
    std::vector<char> sat(g.vertex_count(), 0);
    cnt[u] = 1;
    for (Vertex x : order) {
        if (cnt[x] == 0 && x != u) continue;
        for (const Graph::Arc* a = g.arcs_begin(x); a != g.arcs_end(x); ++a) {
            if (dist[a->to] != kUnreachable && dist[a->to] == dist[x] + a->w) {
                uint64_t room = kPathCountCap - cnt[a->to];
                if (cnt[x] >= room || sat[x]) {
                    cnt[a->to] = kPathCountCap;
                    sat[a->to] = 1;
                } else {
                    cnt[a->to] += cnt[x];
                }
            }
        }
    }
    out.count = cnt[v];
    out.saturated = sat[v];
    return out;
}

Weight diameter(const Graph& g) {
    require_finalized(g);
    bool unit = true;
    for (const Edge& e : g.edges())
        if (e.w != 1) { unit = false; break; }
    Weight best = 0;
    for (Vertex s = 0; s < g.vertex_count(); s++) {
        std::vector<Weight> d = unit ? bfs_distances(g, s) : dijkstra_distances(g, s);
        for (Weight x : d)
            if (x != kUnreachable && x > best) best = x;
    }
    return best;
}

std::optional<Weight> girth_of(const Graph& g) {
    require_finalized(g);
    if (g.directed()) throw std::invalid_argument("girth_of expects an undirected graph");
    Weight best = -1;
    std::vector<Weight> dist(g.vertex_count());
    std::vector<int> parent_edge(g.vertex_count());
    std::vector<Vertex> queue;
    for (Vertex root = 0; root < g.vertex_count(); root++) {
        std::fill(dist.begin(), dist.end(), kUnreachable);
        std::fill(parent_edge.begin(), parent_edge.end(), -1);
        queue.clear();
        dist[root] = 0;
        queue.push_back(root);
        for (size_t qi = 0; qi < queue.size(); qi++) {
            Vertex u = queue[qi];
            if (best != -1 && 2 * dist[u] >= best) break;
            for (const Graph::Arc* a = g.arcs_begin(u); a != g.arcs_end(u); ++a) {
                if (dist[a->to] == kUnreachable) {
                    dist[a->to] = dist[u] + 1;
                    parent_edge[a->to] = a->edge_id;
                    queue.push_back(a->to);
                } else if (parent_edge[u] != a->edge_id) {
                    // Non-tree edge closes a walk of length dist[u]+dist[to]+1,
                    // which contains a cycle no longer than that.
                    Weight cand = dist[u] + dist[a->to] + 1;
                    if (best == -1 || cand < best) best = cand;
                }
            }
        }
    }
    if (best == -1) return std::nullopt;
    return best;
}

std::vector<Vertex> canonical_path(const Graph& g, Vertex u, Vertex v) {
    require_finalized(g);
    require_source(g, u);
    require_source(g, v);
    Vertex s = std::min(u, v), t = std::max(u, v);
    std::vector<Weight> dist(g.vertex_count(), kUnreachable);
    std::vector<Vertex> parent(g.vertex_count(), -1);
    std::vector<Vertex> queue;
    dist[s] = 0;
    queue.push_back(s);
    for (size_t qi = 0; qi < queue.size(); qi++) {
        Vertex x = queue[qi];
        for (const Graph::Arc* a = g.arcs_begin(x); a != g.arcs_end(x); ++a) {
            if (dist[a->to] == kUnreachable) {
                dist[a->to] = dist[x] + 1;
                parent[a->to] = x;
                queue.push_back(a->to);
            } else if (dist[a->to] == dist[x] + 1 && x < parent[a->to]) {
                parent[a->to] = x;
            }
        }
    }
    if (dist[t] == kUnreachable)
        throw std::invalid_argument("canonical_path: endpoints not connected");
    std::vector<Vertex> path;
    for (Vertex x = t; x != -1; x = parent[x]) path.push_back(x);
    std::reverse(path.begin(), path.end());
    if (u > v) std::reverse(path.begin(), path.end());
    return path;
}

void multi_source_bfs(const Graph& g, const std::vector<Vertex>& sources,
                      std::vector<Weight>& dist, std::vector<Vertex>& root) {
    require_finalized(g);
    dist.assign(g.vertex_count(), kUnreachable);
    root.assign(g.vertex_count(), -1);
    std::vector<Vertex> queue;
    queue.reserve(g.vertex_count());
    for (Vertex s : sources) {
        dist[s] = 0;
        root[s] = s;
        queue.push_back(s);
    }
    // FIFO order keeps each level sorted by root id, so ties resolve to the
    // smallest source id.
    for (size_t qi = 0; qi < queue.size(); qi++) {
        Vertex u = queue[qi];
        for (const Graph::Arc* a = g.arcs_begin(u); a != g.arcs_end(u); ++a) {
            if (dist[a->to] == kUnreachable) {
                dist[a->to] = dist[u] + 1;
                root[a->to] = root[u];
                queue.push_back(a->to);
            }
        }
    }
}

}  // namespace spanlab

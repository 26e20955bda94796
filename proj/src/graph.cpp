#include "skind/graph.hpp"

#include <algorithm>
#include <string>

#include "skind/error.hpp"

namespace skind {

Graph::Graph(std::size_t n, std::span<const Edge> edges) : neighbors_(n) {
    for (auto [u, v] : edges) {
        if (u >= n || v >= n)
            throw PreconditionError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                    ") out of range for " + std::to_string(n) + " vertices");
        if (u == v) throw PreconditionError("loop at vertex " + std::to_string(u));
        neighbors_[u].push_back(v);
        neighbors_[v].push_back(u);
    }
    finish();
}

Graph Graph::from_neighbors(std::vector<std::vector<Vertex>> neighbors) {
    Graph g;
    const std::size_t n = neighbors.size();
    g.neighbors_ = std::move(neighbors);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v : g.neighbors_[u]) {
            if (v >= n) throw PreconditionError("neighbor out of range");
            if (v == u) throw PreconditionError("loop at vertex " + std::to_string(u));
        }
    g.finish();
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v : g.neighbors_[u])
            if (!std::binary_search(g.neighbors_[v].begin(), g.neighbors_[v].end(), u))
                throw PreconditionError("neighbor lists are not symmetric");
    return g;
}

void Graph::finish() {
    const std::size_t n = neighbors_.size();
    std::size_t total = 0;
    for (auto& list : neighbors_) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        total += list.size();
    }
    edge_count_ = total / 2;

    degree_.reset();
    if (n > 0) {
        const std::size_t d0 = neighbors_[0].size();
        if (std::all_of(neighbors_.begin(), neighbors_.end(), [d0](const auto& l) { return l.size() == d0; }))
            degree_ = d0;
    }

    rows_.clear();
    if (n <= kBitsetCap) {
        rows_.assign(n, Bitset(n));
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v : neighbors_[u]) rows_[u].set(v);
    }
}

bool Graph::adjacent(Vertex u, Vertex v) const noexcept {
    if (!rows_.empty()) return rows_[u].test(v);
    const auto& l = neighbors_[u];
    return std::binary_search(l.begin(), l.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u)
        for (Vertex v : neighbors_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph complete_graph(std::size_t n) {
    std::vector<Edge> e;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph(n, e);
}

Graph path_graph(std::size_t n) {
    std::vector<Edge> e;
    for (Vertex u = 0; u + 1 < n; ++u) e.emplace_back(u, u + 1);
    return Graph(n, e);
}

Graph cycle_graph(std::size_t n) {
    std::vector<Edge> e;
    for (Vertex u = 0; u < n; ++u) e.emplace_back(u, static_cast<Vertex>((u + 1) % n));
    return Graph(n, e);
}

} // namespace skind

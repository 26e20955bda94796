#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "skind/bitset.hpp"

namespace skind {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Graphs above this order keep neighbor lists only.
inline constexpr std::size_t kBitsetCap = 8192;
/// Default cap for dense O(n^2) / O(n^3) operations.
inline constexpr std::size_t kDenseCap = 4096;

/// Undirected simple graph. Immutable after construction.
///
/// Neighbor lists are always present and sorted; bitset rows are built when
/// the order is at most kBitsetCap and give O(1) adjacency tests.
class Graph {
public:
    Graph() = default;

    /// Builds a graph on vertices [0, n). Rejects loops and out-of-range
    /// endpoints; duplicate edges are merged.
    Graph(std::size_t n, std::span<const Edge> edges);

    /// Builds from neighbor lists; lists must be symmetric and loop-free.
    static Graph from_neighbors(std::vector<std::vector<Vertex>> neighbors);

    std::size_t order() const noexcept { return neighbors_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }

    std::span<const Vertex> neighbors(Vertex u) const noexcept { return neighbors_[u]; }
    std::size_t degree_of(Vertex u) const noexcept { return neighbors_[u].size(); }

    /// Common degree when every vertex has the same degree.
    std::optional<std::size_t> degree() const noexcept { return degree_; }

    bool adjacent(Vertex u, Vertex v) const noexcept;

    bool has_rows() const noexcept { return !rows_.empty() || order() == 0; }
    /// Adjacency row as a bitset; requires has_rows().
    const Bitset& row(Vertex u) const noexcept { return rows_[u]; }

    std::vector<Edge> edges() const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.neighbors_ == b.neighbors_; }

private:
    void finish();

    std::vector<std::vector<Vertex>> neighbors_;
    std::vector<Bitset> rows_;
    std::size_t edge_count_ = 0;
    std::optional<std::size_t> degree_;
};

/// Complete graph K_n; used by tests and the CLI.
Graph complete_graph(std::size_t n);
/// Path P_n on vertices 0 - 1 - ... - (n-1).
Graph path_graph(std::size_t n);
/// Cycle C_n.
Graph cycle_graph(std::size_t n);

} // namespace skind

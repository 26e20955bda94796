#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "skind/graph.hpp"

namespace skind {

/// Number of closed walks of each length at each vertex:
/// counts[len][u] = (A^len)_{uu}, len = 0..max_len. Exact in 64-bit integers;
/// throws CapExceeded on overflow.
struct ClosedWalks {
    std::vector<std::vector<std::int64_t>> counts;

    std::size_t max_length() const noexcept { return counts.empty() ? 0 : counts.size() - 1; }
    std::size_t vertex_count() const noexcept { return counts.empty() ? 0 : counts[0].size(); }
    /// true when (A^len)_{uu} does not depend on u.
    bool constant(std::size_t len) const noexcept;
    std::int64_t max(std::size_t len) const noexcept;
};

ClosedWalks closed_walks(const Graph& g, std::size_t max_len);

/// Diagonal of A^3 summarized.
struct WalkProfile {
    std::int64_t delta = 0;          // max_u (A^3)_{uu}, twice the most triangles at a vertex
    std::optional<std::int64_t> nt;  // triangles per vertex when the diagonal is constant
    bool walk_regular_3 = false;     // diag(A), diag(A^2), diag(A^3) each constant
};

WalkProfile walk_profile(const Graph& g);

/// Breadth-first distances from src; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, Vertex src);
/// Same, but stops exploring past max_depth (farther vertices stay -1).
std::vector<int> bfs_distances(const Graph& g, Vertex src, int max_depth);

/// Largest eccentricity; nullopt when disconnected.
std::optional<int> diameter(const Graph& g);

/// Distance-k power: u ~ v iff 1 <= dist(u, v) <= k. Components are handled
/// independently (vertices in different components stay non-adjacent).
Graph power_graph(const Graph& g, int k);

struct StructuralPredicates {
    bool regular = false;
    std::optional<std::size_t> degree;
    bool bipartite = false;
    bool girth_gt_3 = false;
    bool connected = false;
};

StructuralPredicates structural_predicates(const Graph& g);
bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);

/// Dense symmetric integer matrix (row-major).
struct IntMatrix {
    std::size_t n = 0;
    std::vector<std::int64_t> a;

    std::int64_t operator()(std::size_t i, std::size_t j) const noexcept { return a[i * n + j]; }
    std::int64_t& operator()(std::size_t i, std::size_t j) noexcept { return a[i * n + j]; }
};

/// p(A) for integer coefficients coeffs[i] of x^i, exact with overflow checks.
/// Requires order <= dense_cap.
IntMatrix polynomial_of_adjacency(const Graph& g, std::span<const std::int64_t> coeffs,
                                  std::size_t dense_cap = kDenseCap);

} // namespace skind

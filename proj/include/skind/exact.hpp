#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "skind/graph.hpp"

namespace skind {

/// Hard cap on the order for exact solving.
inline constexpr std::size_t kExactCap = 512;

struct ExactBudget {
    std::uint64_t max_nodes = 100'000'000;
    double max_seconds = 60.0;
    /// A proven upper bound on the answer. The search stops as soon as a set
    /// of this size is found, since nothing larger exists.
    std::optional<std::size_t> known_upper;
    /// Caller asserts the graph is vertex-transitive, so some maximum set
    /// contains the first vertex in branching order and the root needs only
    /// that branch.
    bool vertex_transitive = false;
};

struct ExactResult {
    int k = 1;
    std::size_t alpha_k = 0;
    std::vector<Vertex> witness;  // sorted
    std::uint64_t nodes_explored = 0;
    bool timed_out = false;
};

/// Largest set with pairwise distance > k, by branch and bound on the
/// distance-k power graph. Deterministic. When the budget runs out the
/// result carries the best set found and timed_out = true.
ExactResult exact_alpha_k(const Graph& g, int k, const ExactBudget& budget = {});

/// Maximum independent set of g itself (k = 1 without building a power graph).
ExactResult maximum_independent_set(const Graph& g, const ExactBudget& budget = {});

/// True iff every pair in s is at distance >= k + 1. Throws
/// PreconditionError on out-of-range vertices.
bool verify_independent(const Graph& g, std::span<const Vertex> s, int k);

} // namespace skind

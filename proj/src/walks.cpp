#include "skind/walks.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "skind/error.hpp"

namespace skind {

namespace {

std::int64_t add(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_add_overflow(a, b, &r)) throw CapExceeded("walk count overflows 64-bit integers");
    return r;
}

std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r)) throw CapExceeded("walk count overflows 64-bit integers");
    return r;
}

// y = A x
void apply_adjacency(const Graph& g, const std::vector<std::int64_t>& x, std::vector<std::int64_t>& y) {
    for (Vertex u = 0; u < g.order(); ++u) {
        std::int64_t s = 0;
        for (Vertex v : g.neighbors(u)) s = add(s, x[v]);
        y[u] = s;
    }
}

} // namespace

bool ClosedWalks::constant(std::size_t len) const noexcept {
    const auto& c = counts[len];
    return std::all_of(c.begin(), c.end(), [&](std::int64_t x) { return x == c.front(); });
}

std::int64_t ClosedWalks::max(std::size_t len) const noexcept {
    const auto& c = counts[len];
    return c.empty() ? 0 : *std::max_element(c.begin(), c.end());
}

ClosedWalks closed_walks(const Graph& g, std::size_t max_len) {
    const std::size_t n = g.order();
    ClosedWalks out;
    out.counts.assign(max_len + 1, std::vector<std::int64_t>(n, 0));
    for (Vertex u = 0; u < n; ++u) out.counts[0][u] = 1;
    if (max_len == 0) return out;

    // (A^{2m})_{uu} = |A^m e_u|^2 and (A^{2m+1})_{uu} = (A^m e_u)^T A (A^m e_u).
    const std::size_t half = max_len / 2;
    std::vector<std::vector<std::int64_t>> w(half + 1, std::vector<std::int64_t>(n, 0));
    std::vector<std::int64_t> aw(n);
    for (Vertex u = 0; u < n; ++u) {
        std::fill(w[0].begin(), w[0].end(), 0);
        w[0][u] = 1;
        for (std::size_t m = 1; m <= half; ++m) apply_adjacency(g, w[m - 1], w[m]);
        for (std::size_t m = 0; m <= half; ++m) {
            if (2 * m <= max_len && m > 0) {
                std::int64_t s = 0;
                for (std::int64_t x : w[m]) s = add(s, mul(x, x));
                out.counts[2 * m][u] = s;
            }
            if (2 * m + 1 <= max_len) {
                apply_adjacency(g, w[m], aw);
                std::int64_t s = 0;
                for (std::size_t v = 0; v < n; ++v) s = add(s, mul(w[m][v], aw[v]));
                out.counts[2 * m + 1][u] = s;
            }
        }
    }
    return out;
}

WalkProfile walk_profile(const Graph& g) {
    const ClosedWalks walks = closed_walks(g, 3);
    WalkProfile p;
    p.delta = walks.max(3);
    if (walks.constant(3) && g.order() > 0) p.nt = walks.counts[3][0] / 2;
    p.walk_regular_3 = walks.constant(1) && walks.constant(2) && walks.constant(3);
    return p;
}

std::vector<int> bfs_distances(const Graph& g, Vertex src) { return bfs_distances(g, src, -1); }

std::vector<int> bfs_distances(const Graph& g, Vertex src, int max_depth) {
    std::vector<int> dist(g.order(), -1);
    std::deque<Vertex> queue{src};
    dist[src] = 0;
    while (!queue.empty()) {
        const Vertex u = queue.front();
        queue.pop_front();
        if (max_depth >= 0 && dist[u] >= max_depth) continue;
        for (Vertex v : g.neighbors(u))
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
    }
    return dist;
}

std::optional<int> diameter(const Graph& g) {
    int best = 0;
    for (Vertex u = 0; u < g.order(); ++u) {
        const auto d = bfs_distances(g, u);
        for (int x : d) {
            if (x < 0) return std::nullopt;
            best = std::max(best, x);
        }
    }
    return best;
}

Graph power_graph(const Graph& g, int k) {
    if (k < 1) throw PreconditionError("power_graph needs k >= 1, got " + std::to_string(k));
    const std::size_t n = g.order();
    std::vector<std::vector<Vertex>> nbrs(n);
    for (Vertex u = 0; u < n; ++u) {
        const auto d = bfs_distances(g, u, k);
        for (Vertex v = 0; v < n; ++v)
            if (d[v] >= 1) nbrs[u].push_back(v);
    }
    return Graph::from_neighbors(std::move(nbrs));
}

bool is_connected(const Graph& g) {
    if (g.order() == 0) return true;
    const auto d = bfs_distances(g, 0);
    return std::none_of(d.begin(), d.end(), [](int x) { return x < 0; });
}

bool is_bipartite(const Graph& g) {
    std::vector<int> colour(g.order(), -1);
    for (Vertex s = 0; s < g.order(); ++s) {
        if (colour[s] >= 0) continue;
        colour[s] = 0;
        std::deque<Vertex> queue{s};
        while (!queue.empty()) {
            const Vertex u = queue.front();
            queue.pop_front();
            for (Vertex v : g.neighbors(u)) {
                if (colour[v] < 0) {
                    colour[v] = 1 - colour[u];
                    queue.push_back(v);
                } else if (colour[v] == colour[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

StructuralPredicates structural_predicates(const Graph& g) {
    StructuralPredicates p;
    p.degree = g.degree();
    p.regular = p.degree.has_value();
    p.bipartite = is_bipartite(g);
    p.girth_gt_3 = walk_profile(g).delta == 0;
    p.connected = is_connected(g);
    return p;
}

IntMatrix polynomial_of_adjacency(const Graph& g, std::span<const std::int64_t> coeffs, std::size_t dense_cap) {
    const std::size_t n = g.order();
    if (n > dense_cap)
        throw CapExceeded("dense matrix operation on " + std::to_string(n) + " vertices exceeds cap " +
                          std::to_string(dense_cap));
    IntMatrix result{n, std::vector<std::int64_t>(n * n, 0)};
    if (coeffs.empty()) return result;

    // Horner: P <- A P + c_i I, from the top coefficient down.
    IntMatrix p{n, std::vector<std::int64_t>(n * n, 0)};
    for (std::size_t i = 0; i < n; ++i) p(i, i) = coeffs.back();
    IntMatrix next{n, std::vector<std::int64_t>(n * n, 0)};
    for (std::size_t step = coeffs.size() - 1; step-- > 0;) {
        for (Vertex u = 0; u < n; ++u)
            for (std::size_t j = 0; j < n; ++j) {
                std::int64_t s = 0;
                for (Vertex v : g.neighbors(u)) s = add(s, p(v, j));
                next(u, j) = s;
            }
        for (std::size_t i = 0; i < n; ++i) next(i, i) = add(next(i, i), coeffs[step]);
        std::swap(p, next);
    }
    return p;
}

} // namespace skind

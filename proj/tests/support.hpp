#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "skind/graph.hpp"
#include "skind/walks.hpp"

namespace skind::test {

inline std::mt19937_64& rng()
{
    static std::mt19937_64 gen(20240611);
    return gen;
}

inline Graph random_graph(std::size_t n, double p, std::mt19937_64& gen = rng())
{
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(gen))
                edges.emplace_back(u, v);
    return Graph(n, edges);
}

/// Random spanning tree plus extra random edges, so always connected.
inline Graph random_connected(std::size_t n, double p, std::mt19937_64& gen = rng())
{
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v)
        edges.emplace_back(std::uniform_int_distribution<Vertex>(0, v - 1)(gen), v);
    std::bernoulli_distribution coin(p);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(gen))
                edges.emplace_back(u, v);
    return Graph(n, edges);
}

/// Connected bipartite graph on parts [0, a) and [a, a + b).
inline Graph random_bipartite(std::size_t a, std::size_t b, double p, std::mt19937_64& gen = rng())
{
    std::vector<Edge> edges;
    for (Vertex u = 0; u < a; ++u)
        edges.emplace_back(u, static_cast<Vertex>(a + u % b));
    for (Vertex v = 0; v < b; ++v)
        edges.emplace_back(static_cast<Vertex>(v % a), static_cast<Vertex>(a + v));
    std::bernoulli_distribution coin(p);
    for (Vertex u = 0; u < a; ++u)
        for (Vertex v = 0; v < b; ++v)
            if (coin(gen))
                edges.emplace_back(u, static_cast<Vertex>(a + v));
    Graph g(a + b, edges);
    return g;
}

/// All-pairs distances by Floyd-Warshall; -1 for unreachable.
inline std::vector<std::vector<int>> floyd(const Graph& g)
{
    const std::size_t n = g.order();
    const int inf = 1 << 29;
    std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
    for (Vertex u = 0; u < n; ++u) {
        d[u][u] = 0;
        for (Vertex v : g.neighbors(u))
            d[u][v] = 1;
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    for (auto& row : d)
        for (auto& x : row)
            if (x >= inf)
                x = -1;
    return d;
}

} // namespace skind::test

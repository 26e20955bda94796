#include "doctest.h"

#include <cstdint>

#include "skind/error.hpp"
#include "skind/exact.hpp"
#include "skind/families.hpp"
#include "skind/walks.hpp"
#include "support.hpp"

using namespace skind;

namespace {

// Plain include/exclude recursion on the lowest remaining vertex.
int brute_mis(const std::vector<std::uint32_t>& closed_nbhd, std::uint32_t mask)
{
    if (mask == 0)
        return 0;
    const int v = __builtin_ctz(mask);
    const int without = brute_mis(closed_nbhd, mask & ~(1u << v));
    const int with = 1 + brute_mis(closed_nbhd, mask & ~closed_nbhd[v]);
    return std::max(without, with);
}

int brute_mis(const Graph& g)
{
    std::vector<std::uint32_t> nb(g.order());
    for (Vertex u = 0; u < g.order(); ++u) {
        nb[u] = 1u << u;
        for (Vertex v : g.neighbors(u))
            nb[u] |= 1u << v;
    }
    const std::uint32_t all = g.order() == 32 ? ~0u : (1u << g.order()) - 1;
    return brute_mis(nb, all);
}

} // namespace

TEST_CASE("exact examples")
{
    ExactResult q6 = exact_alpha_k(generate(FamilySpec::hypercube(6)), 3);
    CHECK(q6.alpha_k == 4);
    CHECK_FALSE(q6.timed_out);
    CHECK(verify_independent(generate(FamilySpec::hypercube(6)), q6.witness, 3));

    ExactResult pet = exact_alpha_k(generate(FamilySpec::odd(3)), 2);
    CHECK(pet.alpha_k == 1);

    CHECK(exact_alpha_k(generate(FamilySpec::odd(3)), 1).alpha_k == 4);
    CHECK(maximum_independent_set(generate(FamilySpec::odd(3))).alpha_k == 4);
    CHECK(exact_alpha_k(generate(FamilySpec::hypercube(7)), 3).alpha_k == 8);
}

TEST_CASE("hypercube 9 reaches 20 within budget")
{
    // Proving optimality of 20 takes far longer than a unit test; the search
    // must at least find a set of that size.
    ExactBudget b;
    b.max_seconds = 30;
    b.known_upper = 25;
    b.vertex_transitive = true;
    Graph g = generate(FamilySpec::hypercube(9));
    ExactResult r = exact_alpha_k(g, 3, b);
    CHECK(r.alpha_k >= 20);
    CHECK(r.alpha_k <= 25);
    CHECK(verify_independent(g, r.witness, 3));
}

TEST_CASE("verify_independent")
{
    Graph p = path_graph(5);
    std::vector<Vertex> s = {0, 4};
    CHECK(verify_independent(p, s, 3));
    CHECK_FALSE(verify_independent(p, s, 4));
    std::vector<Vertex> adj = {1, 2};
    CHECK_FALSE(verify_independent(p, adj, 1));
    std::vector<Vertex> bad = {0, 9};
    CHECK_THROWS_AS(verify_independent(p, bad, 1), PreconditionError);
    std::vector<Vertex> empty;
    CHECK(verify_independent(p, empty, 2));
}

TEST_CASE("exact solver agrees with brute force")
{
    auto& gen = test::rng();
    for (int t = 0; t < 60; ++t) {
        const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 24)(gen);
        Graph g = test::random_graph(n, std::uniform_real_distribution<double>(0.1, 0.7)(gen), gen);
        ExactResult r = exact_alpha_k(g, 1);
        CHECK(static_cast<int>(r.alpha_k) == brute_mis(g));
        CHECK(r.witness.size() == r.alpha_k);
        CHECK(verify_independent(g, r.witness, 1));
        CHECK(maximum_independent_set(g).alpha_k == r.alpha_k);
    }
}

TEST_CASE("alpha_k equals independence number of the power graph")
{
    auto& gen = test::rng();
    for (int t = 0; t < 30; ++t) {
        const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 40)(gen);
        Graph g = test::random_graph(n, std::uniform_real_distribution<double>(0.03, 0.2)(gen), gen);
        const int k = std::uniform_int_distribution<int>(1, 3)(gen);
        ExactResult a = exact_alpha_k(g, k);
        CHECK(a.alpha_k == exact_alpha_k(power_graph(g, k), 1).alpha_k);
        CHECK(verify_independent(g, a.witness, k));
    }
}

TEST_CASE("budget and caps")
{
    ExactBudget b;
    b.max_nodes = 1;
    Graph g = generate(FamilySpec::hypercube(8));
    ExactResult r = exact_alpha_k(g, 3, b);
    CHECK(r.timed_out);
    CHECK(r.alpha_k >= 1);
    CHECK(verify_independent(g, r.witness, 3));

    CHECK_THROWS_AS(exact_alpha_k(cycle_graph(513), 1), CapExceeded);
    CHECK_THROWS_AS(exact_alpha_k(cycle_graph(5), 0), PreconditionError);

    // Deterministic witnesses.
    Graph h = generate(FamilySpec::hamming(3, 3));
    CHECK(exact_alpha_k(h, 2).witness == exact_alpha_k(h, 2).witness);
}

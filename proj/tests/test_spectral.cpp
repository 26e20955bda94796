#include "doctest.h"

#include <cmath>

#include "skind/error.hpp"
#include "skind/families.hpp"
#include "skind/spectrum.hpp"
#include "skind/walks.hpp"
#include "support.hpp"

using namespace skind;

namespace {

std::vector<std::pair<long double, std::int64_t>> pairs(const Spectrum& s)
{
    std::vector<std::pair<long double, std::int64_t>> out;
    for (const auto& e : s.distinct())
        out.emplace_back(e.value, e.mult);
    return out;
}

void check_traces(const Spectrum& s, std::int64_t n, std::int64_t degree)
{
    long double t1 = 0, t2 = 0;
    for (const auto& e : s.distinct()) {
        t1 += e.value * e.mult;
        t2 += e.value * e.value * e.mult;
    }
    const long double tol = 1e-6L * std::max<long double>(1, n * degree);
    CHECK(std::fabs(t1) <= tol);
    CHECK(std::fabs(t2 - n * degree) <= tol);
    CHECK(s.n() == n);
}

std::vector<FamilySpec> families_up_to(std::int64_t max_n)
{
    std::vector<FamilySpec> out;
    for (int q = 2; q <= 50; ++q)
        out.push_back(FamilySpec::hamming(1, q));
    for (int d = 2; d <= 9; ++d)
        for (int q = 2; q <= 24; ++q)
            out.push_back(FamilySpec::hamming(d, q));
    for (int n = 4; n <= 40; ++n)
        for (int k = 2; 2 * k <= n; ++k)
            out.push_back(FamilySpec::johnson(n, k));
    for (int l = 2; l <= 6; ++l)
        out.push_back(FamilySpec::odd(l));
    for (int d = 1; d <= 9; ++d)
        out.push_back(FamilySpec::hypercube(d));
    for (int d : {1, 2, 3, 4, 5, 6, 7, 8, 10, 16, 31, 64, 127, 299})
        out.push_back(FamilySpec::crown(d));
    std::erase_if(out, [&](const FamilySpec& s) { return family_order(s) > max_n; });
    return out;
}

} // namespace

TEST_CASE("analytic spectra")
{
    Spectrum q8 = analytic_spectrum(FamilySpec::hamming(8, 2));
    REQUIRE(q8.d() == 8);
    for (std::size_t i = 0; i <= 8; ++i)
        CHECK(q8.integer(i) == 8 - 2 * static_cast<std::int64_t>(i));
    CHECK(q8.mult(4) == 70);
    CHECK(q8.exact());

    Spectrum j = analytic_spectrum(FamilySpec::johnson(14, 7));
    std::vector<std::int64_t> want = {49, 35, 23, 13, 5, -1, -5, -7};
    REQUIRE(j.d() + 1 == want.size());
    for (std::size_t i = 0; i < want.size(); ++i)
        CHECK(j.integer(i) == want[i]);

    Spectrum c = analytic_spectrum(FamilySpec::crown(3));
    CHECK(pairs(c) == std::vector<std::pair<long double, std::int64_t>>{{3, 1}, {1, 3}, {-1, 3}, {-3, 1}});

    CHECK(analytic_delta(FamilySpec::johnson(14, 7)) == 588);
    CHECK(analytic_delta(FamilySpec::hamming(4, 3)) == 8);
    CHECK(analytic_delta(FamilySpec::odd(6)) == 0);
}

TEST_CASE("numeric spectra examples")
{
    Spectrum q3 = eigen_spectrum(generate(FamilySpec::hypercube(3)));
    CHECK(q3.exact());
    CHECK(pairs(q3) == std::vector<std::pair<long double, std::int64_t>>{{3, 1}, {1, 3}, {-1, 3}, {-3, 1}});
    Spectrum k2 = eigen_spectrum(complete_graph(2));
    CHECK(pairs(k2) == std::vector<std::pair<long double, std::int64_t>>{{1, 1}, {-1, 1}});
    Spectrum pet = eigen_spectrum(generate(FamilySpec::odd(3)));
    CHECK(pairs(pet) == std::vector<std::pair<long double, std::int64_t>>{{3, 1}, {1, 5}, {-2, 4}});

    // C_5 has irrational eigenvalues 2cos(2pi/5), 2cos(4pi/5).
    Spectrum c5 = eigen_spectrum(cycle_graph(5));
    CHECK_FALSE(c5.exact());
    CHECK(c5.d() == 2);
    CHECK(c5.theta(1) == doctest::Approx(2 * std::cos(2 * M_PI / 5)).epsilon(1e-10));
}

TEST_CASE("group_eigenvalues")
{
    Spectrum s = group_eigenvalues({2.0000000001, 0.5, 0.5000000004, -1.3});
    CHECK_FALSE(s.exact());
    CHECK(s.d() == 2);
    CHECK(s.mult(1) == 2);
    Spectrum t = group_eigenvalues({3.00000000001, -0.99999999999, -1, -1});
    CHECK(t.exact());
    CHECK(t.integer(1) == -1);
    CHECK(t.mult(1) == 3);
    CHECK_THROWS_AS(group_eigenvalues({}), PreconditionError);
    CHECK_THROWS_AS(Spectrum({{1, 0}}, true), PreconditionError);
}

TEST_CASE("jacobi reports non-convergence")
{
    Graph g = generate(FamilySpec::odd(3));
    std::vector<double> a(100, 0);
    for (Vertex u = 0; u < 10; ++u)
        for (Vertex v : g.neighbors(u))
            a[u * 10 + v] = 1;
    JacobiOptions opts;
    opts.max_sweeps = 0;
    try {
        jacobi_eigenvalues(a, 10, opts);
        FAIL("expected ConvergenceError");
    } catch (const ConvergenceError& e) {
        CHECK(e.residual() > 0);
    }
}

TEST_CASE("eigen and analytic spectra agree for families up to 600 vertices")
{
    for (const auto& spec : families_up_to(600)) {
        INFO(to_string(spec));
        Spectrum a = analytic_spectrum(spec);
        Spectrum e = eigen_spectrum(generate(spec));
        REQUIRE(a.d() == e.d());
        for (std::size_t i = 0; i <= a.d(); ++i) {
            CHECK(std::fabs(a.theta(i) - e.theta(i)) <= 1e-8L);
            CHECK(a.mult(i) == e.mult(i));
        }
        check_traces(a, family_order(spec), family_degree(spec));
        check_traces(e, family_order(spec), family_degree(spec));
    }
}

TEST_CASE("smallest eigenvalue detects bipartiteness")
{
    auto& gen = test::rng();
    for (int t = 0; t < 30; ++t) {
        Graph g = (t % 2 == 0) ? test::random_connected(std::uniform_int_distribution<std::size_t>(2, 30)(gen), 0.1, gen)
                               : test::random_bipartite(std::uniform_int_distribution<std::size_t>(1, 15)(gen),
                                                        std::uniform_int_distribution<std::size_t>(1, 15)(gen), 0.2, gen);
        Spectrum s = eigen_spectrum(g);
        const long double gap = s.theta(s.d()) + s.theta(0);
        CHECK(gap >= -1e-9L);
        CHECK((std::fabs(gap) <= 1e-8L) == structural_predicates(g).bipartite);
    }
}

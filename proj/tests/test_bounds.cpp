#include "doctest.h"

#include <cmath>
#include <filesystem>
#include <set>

#include "skind/bounds.hpp"
#include "skind/codes.hpp"
#include "skind/error.hpp"
#include "skind/exact.hpp"
#include "skind/graph6.hpp"
#include "skind/tables.hpp"
#include "skind/walks.hpp"
#include "support.hpp"

using namespace skind;

namespace {

Graph corpus_graph(const std::string& name)
{
    auto gs = read_graph6_file(std::filesystem::path(default_corpus_dir()) / (name + ".g6"));
    REQUIRE(gs.size() == 1);
    return gs.front();
}

std::vector<FamilySpec> regular_families()
{
    std::vector<FamilySpec> out;
    for (int d = 3; d <= 6; ++d)
        out.push_back(FamilySpec::crown(d));
    for (int d = 3; d <= 8; ++d)
        out.push_back(FamilySpec::hypercube(d));
    for (int l = 3; l <= 5; ++l)
        out.push_back(FamilySpec::odd(l));
    out.push_back(FamilySpec::johnson(8, 4));
    out.push_back(FamilySpec::johnson(10, 5));
    out.push_back(FamilySpec::hamming(4, 3));
    out.push_back(FamilySpec::hamming(5, 3));
    return out;
}

constexpr long double kTol = 1e-9L;

} // namespace

TEST_CASE("W and lambda")
{
    BoundInput pet = family_input(FamilySpec::odd(3));
    std::vector<long double> x = {0, 1};
    auto wl = eval_W_lambda(pet, x);
    CHECK(wl.W == 0);
    CHECK(wl.lambda == -2);

    BoundInput q8 = family_input(FamilySpec::hypercube(8));
    std::vector<long double> p = {0, 16, 10, 1};
    wl = eval_W_lambda(q8, p);
    CHECK(wl.W == 80);
    CHECK(wl.lambda == 0);

    std::vector<long double> p2 = {0, 1, 1};  // x^2 - (-2 + 1) x
    CHECK(eval_W_lambda(pet, p2).W == 3);

    std::vector<long double> p4 = {0, 0, 0, 0, 1};
    CHECK_THROWS_AS(eval_W_lambda(pet, p4), PreconditionError);
}

TEST_CASE("generic bound")
{
    BoundInput pet = family_input(FamilySpec::odd(3));
    std::vector<long double> x = {0, 1};
    CHECK(generic_bound(pet, x).value == doctest::Approx(4));

    BoundInput crown = family_input(FamilySpec::crown(3));
    std::vector<long double> p = {0, -1, 3, 1};
    BoundReport r = generic_bound(crown, p);
    CHECK(r.value == doctest::Approx(1));
    CHECK(r.floor_value == 1);

    std::vector<long double> zero = {0, 0, 0, 0};
    CHECK_THROWS_AS(generic_bound(pet, zero), PreconditionError);

    std::vector<Edge> star_edges = {{0, 1}, {0, 2}};
    CHECK_THROWS_AS(make_input(Graph(3, star_edges)), PreconditionError);
    std::vector<Edge> two = {{0, 1}, {2, 3}};
    CHECK_THROWS_AS(make_input(Graph(4, two)), PreconditionError);
}

TEST_CASE("Hoffman bound")
{
    CHECK(hoffman_bound(analytic_spectrum(FamilySpec::odd(3))).value == doctest::Approx(4));
    CHECK(hoffman_bound(eigen_spectrum(complete_graph(2))).value == doctest::Approx(1));
    BoundReport q4 = hoffman_bound(analytic_spectrum(FamilySpec::hypercube(4)));
    CHECK(q4.value == 8);
    CHECK(q4.exact.has_value());
    CHECK(*q4.exact == 8);
    CHECK_THROWS_AS(hoffman_bound(Spectrum({{0, 1}}, true)), PreconditionError);
}

TEST_CASE("ACF bounds")
{
    BoundInput pet = family_input(FamilySpec::odd(3));
    CHECK(acf_bound(pet, 2).value == doctest::Approx(1));
    CHECK_THROWS_AS(acf_bound(pet, 1), PreconditionError);

    // n (W - S(theta_d)) / (S(delta) - S(theta_d)) with S(x) = 1 + x + x^2 + x^3:
    // 256 (9 + 455) / (585 + 455) = 114.2154, not the 114.25 in the golden comparison table.
    BoundReport q8 = acf_bound(family_input(FamilySpec::hypercube(8)), 3);
    CHECK(*q8.exact == Rational(256 * 464, 1040));
    CHECK(q8.value == doctest::Approx(114.2154).epsilon(1e-6));

    CHECK(acf_bound(family_input(FamilySpec::odd(6)), 3).value == doctest::Approx(141.27).epsilon(1e-4));
    CHECK_THROWS_AS(acf_bound(family_input(FamilySpec::odd(3)), 4), PreconditionError);  // walks counted to 3 only

    // Even k: n (W_k + 1/2) / (S_k(delta) + 1/2).
    BoundReport even = acf_bound(family_input(FamilySpec::odd(3), 4), 4);
    const long double w4 = 1 + 0 + 3 + 0 + 15;  // girth 5: (A^4)_uu = 3^2 + 3*2
    CHECK(even.value == doctest::Approx(10 * (w4 + 0.5) / (1 + 3 + 9 + 27 + 81 + 0.5)));
}

TEST_CASE("lambda profile examples")
{
    Spectrum q3 = analytic_spectrum(FamilySpec::hypercube(3));
    LambdaProfile lp = lambda_profile(0, q3);
    CHECK(lp.index_at(1) == 3);
    CHECK(lambda_argmin(q3, 0, 1) == 3);
    CHECK(lambda_argmin(q3, 0, -13) == 1);
    CHECK(lp.index_at(-13) == 1);
    CHECK(lambda_argmin(q3, 0, -5) == 3);
    CHECK(lp.index_at(-5) == 3);
    CHECK_THROWS_AS(lambda_profile(0, analytic_spectrum(FamilySpec::odd(3))), PreconditionError);
}

TEST_CASE("lambda profile matches brute force on random spectra")
{
    auto& gen = test::rng();
    int violations = 0;
    for (int t = 0; t < 20; ++t) {
        const int d = std::uniform_int_distribution<int>(3, 7)(gen);
        std::vector<Eigenvalue> ev;
        std::set<int> used;
        while (static_cast<int>(used.size()) < d + 1)
            used.insert(std::uniform_int_distribution<int>(-40, 40)(gen));
        for (int v : used)
            ev.push_back({v / 4.0L, 1});
        Spectrum s(ev, false);
        for (int bi = 0; bi < 10; ++bi) {
            const long double b = std::uniform_real_distribution<double>(-15, 15)(gen);
            LambdaProfile lp = lambda_profile(b, s);
            for (const auto& seg : lp.segments) {
                const long double hi = std::isinf(seg.hi) ? seg.lo + 50 : seg.hi;
                for (int k = 1; k <= 20; ++k) {
                    const long double c = seg.lo + (hi - seg.lo) * k / 21;
                    if (lambda_argmin(s, b, c) != seg.index)
                        ++violations;
                }
            }
            CHECK(lp.segments.back().index == s.d());
            CHECK(std::isinf(lp.segments.back().hi));
        }
    }
    CHECK(violations == 0);
}

TEST_CASE("optimal cubic bound examples")
{
    OptimalK3 crown = optimal_k3_bound(family_input(FamilySpec::crown(3)));
    CHECK(*crown.report.exact == 1);
    REQUIRE(crown.report.poly);
    CHECK(crown.report.poly->b == 3);
    CHECK(crown.report.poly->c == -1);
    CHECK(crown.quotient.b11 == 9);
    CHECK(crown.quotient.b12 == 42);
    CHECK(crown.quotient.b21 == 6);
    CHECK(crown.quotient.b22 == 45);

    OptimalK3 q8 = optimal_k3_bound(family_input(FamilySpec::hypercube(8)));
    CHECK(*q8.report.witnesses.theta_s == 0);
    CHECK(*q8.report.witnesses.theta_s1 == -2);
    CHECK(*q8.report.witnesses.theta_d == -8);
    CHECK(*q8.report.exact == 16);

    OptimalK3 j = optimal_k3_bound(family_input(FamilySpec::johnson(10, 5)));
    CHECK(*j.report.witnesses.theta_s == 7);
    CHECK(*j.report.witnesses.theta_s1 == 1);
    CHECK(j.report.value == doctest::Approx(3.11).epsilon(0.005));
    CHECK(*j.report.exact == Rational(28, 9));

    OptimalK3 pet = optimal_k3_bound(family_input(FamilySpec::odd(3)));
    CHECK(pet.report.degenerate);
    CHECK(*pet.report.exact == 1);

    CHECK_THROWS_AS(optimal_k3_bound(family_input(FamilySpec::hamming(1, 4))), PreconditionError);
}

TEST_CASE("Fiol bounds")
{
    CHECK(*fiol_k3_bound(family_input(FamilySpec::hypercube(8))).exact == 16);
    CHECK(*fiol_k3_bound(family_input(FamilySpec::odd(6))).exact == 21);
    CHECK(fiol_k3_bound(make_input(corpus_graph("balaban_10cage"))).value == doctest::Approx(12.82).epsilon(0.001));

    BoundInput frucht = make_input(corpus_graph("frucht"));
    CHECK_THROWS_AS(fiol_k3_bound(frucht), PreconditionError);
    CHECK(fiol_k3_bound(frucht, FiolDiagonal::max_diagonal).value == doctest::Approx(2.35).epsilon(0.005));

    CHECK(fiol_index_set_bound(analytic_spectrum(FamilySpec::odd(3)), 1).value == doctest::Approx(4));
    CHECK(*fiol_index_set_bound(analytic_spectrum(FamilySpec::hypercube(8)), 3).exact == 16);
    Spectrum q3 = analytic_spectrum(FamilySpec::hypercube(3));
    CHECK(fiol_index_set_bound(q3, 3).value == 1);  // only set is {1,2,3}; just the j = 0 term remains
    CHECK_THROWS_AS(fiol_index_set_bound(q3, 4), PreconditionError);
}

TEST_CASE("closed forms")
{
    CHECK(*closed_form_hamming(9, 2).exact == Rational(128, 5));
    CHECK(*closed_form_hamming(6, 3).exact == 18);
    CHECK(*closed_form_hamming(5, 7).exact == 49);
    for (int q = 2; q <= 7; ++q)
        for (int d = 3; d <= q + 2; ++d) {
            Rational want = 1;
            for (int i = 0; i < d - 3; ++i)
                want *= q;
            CHECK(*closed_form_hamming(d, q).exact == want);
        }
    CHECK(*closed_form_odd(6).exact == 21);
    CHECK(*closed_form_odd(3).exact == 1);
    CHECK(*closed_form_odd(4).exact == 1);
    CHECK_THROWS_AS(closed_form_odd(2), PreconditionError);
    BoundReport j7 = closed_form_johnson_2k(7);
    CHECK(*j7.exact == Rational(39, 2));
    CHECK(*j7.witnesses.theta_s == 5);
    BoundReport j5 = closed_form_johnson_2k(5);
    CHECK(*j5.witnesses.theta_s == 7);
    CHECK(*j5.witnesses.theta_s1 == 1);
    CHECK(*closed_form_johnson_2k(4).exact == 2);
}

TEST_CASE("closed forms agree with the optimal bound on generated graphs")
{
    std::vector<std::pair<FamilySpec, BoundReport>> cases;
    for (int q = 2; q <= 21; ++q)
        for (int d = 3; d <= 13; ++d) {
            const FamilySpec s = FamilySpec::hamming(d, q);
            if (family_order(s) <= 10000)
                cases.emplace_back(s, closed_form_hamming(d, q));
        }
    for (int l = 3; l <= 8; ++l)
        cases.emplace_back(FamilySpec::odd(l), closed_form_odd(l));
    for (int k = 2; k <= 7; ++k)
        cases.emplace_back(FamilySpec::johnson(2 * k, k), closed_form_johnson_2k(k));
    for (const auto& [spec, cf] : cases) {
        INFO(to_string(spec));
        OptimalK3 o = optimal_k3_bound(family_input(spec));
        CHECK(std::fabs(o.report.value - cf.value) <= kTol * std::max<long double>(1, cf.value));
        CHECK(*o.report.exact == *cf.exact);
    }
}

TEST_CASE("generic cubic bounds never beat the optimal one")
{
    auto& gen = test::rng();
    for (const auto& spec : regular_families()) {
        INFO(to_string(spec));
        BoundInput in = family_input(spec);
        OptimalK3 o = optimal_k3_bound(in);
        const long double delta = in.degree;
        int tried = 0;
        while (tried < 200) {
            long double b, c;
            if (tried % 2 == 0) {
                b = std::uniform_real_distribution<double>(-3 * delta, 3 * delta)(gen);
                c = std::uniform_real_distribution<double>(-3 * delta * delta, 3 * delta * delta)(gen);
            } else {
                b = o.report.poly->b + std::normal_distribution<double>(0, 0.5)(gen);
                c = o.report.poly->c + std::normal_distribution<double>(0, 0.5)(gen);
            }
            std::vector<long double> p = {0, c, b, 1};
            const WLambda wl = eval_W_lambda(in, p);
            const long double top = ((delta + b) * delta + c) * delta;
            if (!(top > wl.lambda))
                continue;
            ++tried;
            CHECK(generic_bound(in, p).value >= o.report.value - kTol);
        }
    }
}

TEST_CASE("bipartite specialization and sanity bounds")
{
    for (const auto& spec : regular_families()) {
        INFO(to_string(spec));
        BoundInput in = family_input(spec);
        OptimalK3 o = optimal_k3_bound(in);
        CHECK(o.report.value >= 1 - kTol);
        CHECK(o.report.value <= in.n + kTol);
        const long double sum = o.report.poly ? (*o.report.poly)(in.degree) : 0;
        CHECK(std::fabs(o.quotient.b11 + o.quotient.b12 - sum) <= 1e-6L);
        CHECK(std::fabs(o.quotient.b21 + o.quotient.b22 - sum) <= 1e-6L);
        if (in.spectrum.theta(in.spectrum.d()) == -in.spectrum.theta(0))
            CHECK(std::fabs(bipartite_k3_bound(in.spectrum).value - o.report.value) <= kTol);
        if (in.spectrum.theta(in.spectrum.d()) <= -1 && in.walk_regular(3)) {
            bool has_minus_one_or_less = false;
            for (std::size_t i = 1; i <= in.spectrum.d(); ++i)
                has_minus_one_or_less |= in.spectrum.theta(i) <= -1;
            if (has_minus_one_or_less)
                CHECK(fiol_k3_bound(in).value >= o.report.value - kTol);
        }
    }
    CHECK_THROWS_AS(bipartite_k3_bound(analytic_spectrum(FamilySpec::odd(3))), PreconditionError);
}

TEST_CASE("diameter test")
{
    BoundInput crown = family_input(FamilySpec::crown(3));
    CHECK(diameter_test(crown));
    CHECK(diameter(generate(FamilySpec::crown(3))) == 3);
    CHECK_FALSE(diameter_test(family_input(FamilySpec::hypercube(8))));
    CHECK(diameter_test(family_input(FamilySpec::odd(3))));
    for (const auto& spec : regular_families())
        if (diameter_test(family_input(spec)))
            CHECK(*diameter(generate(spec)) <= 3);
}

TEST_CASE("comparison with Fiol")
{
    FiolComparison bal = compare_fiol(make_input(corpus_graph("balaban_10cage")));
    CHECK(bal.fiol == doctest::Approx(12.82).epsilon(0.001));
    CHECK(bal.ours == doctest::Approx(11.67).epsilon(0.001));
    CHECK(bal.strictly_smaller);
    CHECK(bal.witness_eigenvalue.has_value());

    FiolComparison q8 = compare_fiol(family_input(FamilySpec::hypercube(8)));
    CHECK(q8.fiol == 16);
    CHECK(q8.ours == 16);
    CHECK_FALSE(q8.strictly_smaller);
    CHECK_FALSE(q8.witness_eigenvalue.has_value());

    FiolComparison bid = compare_fiol(make_input(corpus_graph("bidiakis_cube")));
    CHECK(bid.fiol == doctest::Approx(1.92).epsilon(0.005));
    CHECK(bid.ours == doctest::Approx(1.50).epsilon(0.005));
}

TEST_CASE("equitable partitions at tightness")
{
    // Q4 with {1010, 0101}: p(x) = x^3 + 6x^2 + 8x, p(4) = 192.
    Graph q4 = generate(FamilySpec::hypercube(4));
    BoundInput in4 = family_input(FamilySpec::hypercube(4));
    OptimalK3 o4 = optimal_k3_bound(in4);
    auto set4 = hamming_vertices(construct_doubled(2));
    REQUIRE(set4.size() == 2);
    Equitability e4 = equitability_check(q4, in4, set4, *o4.report.poly);
    CHECK(e4.equitable);
    CHECK(e4.matches_theorem);
    CHECK(e4.size_matches_bound);
    CHECK(e4.empirical.b11 + e4.empirical.b12 == 192);
    CHECK(e4.empirical.b21 + e4.empirical.b22 == 192);

    Graph c3 = generate(FamilySpec::crown(3));
    BoundInput inc = family_input(FamilySpec::crown(3));
    for (Vertex v = 0; v < c3.order(); ++v) {
        std::vector<Vertex> one = {v};
        Equitability e = equitability_check(c3, inc, one, *optimal_k3_bound(inc).report.poly);
        CHECK(e.equitable);
        CHECK(e.matches_theorem);
    }

    Graph q8 = generate(FamilySpec::hypercube(8));
    BoundInput in8 = family_input(FamilySpec::hypercube(8));
    auto set8 = hamming_vertices(construct_doubled(3));
    Equitability e8 = equitability_check(q8, in8, set8, *optimal_k3_bound(in8).report.poly);
    CHECK(e8.equitable);
    CHECK(e8.matches_theorem);

    std::vector<Vertex> close = {0, 1};
    CHECK_THROWS_AS(equitability_check(q4, in4, close, *o4.report.poly), PreconditionError);
}

TEST_CASE("bounds dominate exact values on small graphs")
{
    std::vector<Graph> graphs;
    for (const auto& spec : regular_families())
        if (family_order(spec) <= 64)
            graphs.push_back(generate(spec));
    for (const char* name : {"petersen", "heawood", "frucht", "bidiakis_cube", "franklin", "tietze"})
        graphs.push_back(corpus_graph(name));
    for (const auto& g : graphs) {
        BoundInput in = make_input(g);
        ExactResult a3 = exact_alpha_k(g, 3);
        REQUIRE_FALSE(a3.timed_out);
        const auto a = static_cast<std::int64_t>(a3.alpha_k);
        CHECK(a <= optimal_k3_bound(in).report.floor_value);
        CHECK(a <= fiol_k3_bound(in, FiolDiagonal::max_diagonal).floor_value);
        CHECK(a <= acf_bound(in, 3).floor_value);
        CHECK(static_cast<std::int64_t>(exact_alpha_k(g, 1).alpha_k) <= hoffman_bound(in.spectrum).floor_value);
        CHECK(static_cast<std::int64_t>(exact_alpha_k(g, 2).alpha_k) <= acf_bound(in, 2).floor_value);
    }
}

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "skind/families.hpp"
#include "skind/graph.hpp"
#include "skind/rational.hpp"
#include "skind/spectrum.hpp"

namespace skind {

/// p(x) = x^3 + b x^2 + c x.
struct CubicPoly {
    long double b = 0;
    long double c = 0;

    long double operator()(long double x) const noexcept { return ((x + b) * x + c) * x; }
    /// Coefficients of x^0 .. x^3.
    std::vector<long double> coefficients() const { return {0, c, b, 1}; }
};

enum class Method { generic, hoffman, acf, fiol_k3, fiol_index_set, optimal_k3, closed_form_family };

/// "optimal-k3", "acf:k=3", "fiol-set:k=2", ...
std::string method_name(Method m, int k);

struct Witnesses {
    std::optional<long double> theta_s;
    std::optional<long double> theta_s1;
    std::optional<long double> theta_d;
    std::optional<long double> theta_i;  // largest eigenvalue <= -1 (ACF k=2, Fiol)
    std::optional<long double> tau;
    std::optional<std::int64_t> delta;
};

/// One upper bound on alpha_k with the data that produced it.
struct BoundReport {
    Method method = Method::generic;
    int k = 0;
    long double value = 0;
    std::int64_t floor_value = 0;
    std::optional<Rational> exact;           // present when computed in rational arithmetic
    std::optional<CubicPoly> poly;
    std::vector<long double> coefficients;   // general polynomial, x^0 first
    Witnesses witnesses;
    bool spectrum_exact = false;
    bool degenerate = false;                 // theta_{s+1} coincides with theta_d or s was clamped
    std::string label;                       // closed-form family, e.g. "hamming(9,2)"

    std::string method_label() const { return method_name(method, k); }
};

/// Spectrum plus the closed-walk data the bounds read.
struct BoundInput {
    std::int64_t n = 0;
    std::int64_t degree = 0;
    Spectrum spectrum;
    /// Distinct per-vertex rows of closed-walk counts, rows[r][len] = (A^len)_{uu}.
    std::vector<std::vector<std::int64_t>> walk_rows;
    /// Rows were supplied from a formula rather than counted on a graph.
    bool spectrum_only = false;

    std::size_t max_walk_length() const noexcept { return walk_rows.empty() ? 0 : walk_rows[0].size() - 1; }
    /// max_u (A^3)_{uu}.
    std::int64_t delta() const;
    /// Closed-walk counts of every length <= len are vertex independent.
    bool walk_regular(std::size_t len) const;
};

/// Numeric spectrum and true closed-walk counts. Requires a connected regular graph.
BoundInput make_input(const Graph& g, std::size_t max_walk_len = 3, double group_tol = kDefaultGroupTol);
/// Same with a caller-supplied spectrum (for instance an analytic one).
BoundInput make_input(const Graph& g, Spectrum spectrum, std::size_t max_walk_len = 3);
/// No graph: closed walks up to length 3 are taken as 1, 0, degree, delta at every vertex.
BoundInput spectrum_only_input(Spectrum spectrum, std::int64_t delta);
/// Analytic spectrum, walks counted on the generated graph.
BoundInput family_input(const FamilySpec& spec, std::size_t max_walk_len = 3);
/// Analytic spectrum and analytic delta; never builds the graph.
BoundInput family_spectrum_input(const FamilySpec& spec);

struct WLambda {
    long double W = 0;
    long double lambda = 0;
    std::size_t index = 0;  // distinct-eigenvalue index attaining lambda
};

/// W(p) = max diagonal of p(A), lambda(p) = min of p over theta_1..theta_d.
/// coeffs[i] multiplies x^i; the degree may not exceed input.max_walk_length().
WLambda eval_W_lambda(const BoundInput& input, std::span<const long double> coeffs);

/// n (W - lambda) / (p(theta_0) - lambda). Throws PreconditionError unless
/// p(theta_0) > lambda(p).
BoundReport generic_bound(const BoundInput& input, std::span<const long double> coeffs);

BoundReport hoffman_bound(const Spectrum& spectrum);

/// k = 2 closed form, or the sum_{i<=k} x^i polynomial for k > 2. Needs walk
/// rows up to length k.
BoundReport acf_bound(const BoundInput& input, int k);

struct ProfileSegment {
    long double lo = 0;
    long double hi = 0;  // +infinity for the last segment
    std::size_t index = 0;
};

/// Where lambda(p) sits as c varies, for p = x^3 + b x^2 + c x.
struct LambdaProfile {
    long double b = 0;
    std::vector<long double> breakpoints;  // c*_1 .. c*_d, indexed from 1 (entry 0 unused)
    long double c_star = 0;
    std::size_t j = 0;
    std::vector<ProfileSegment> segments;  // nonempty segments tiling [c*_1, inf)

    /// Minimizing index for a c >= c*_1.
    std::size_t index_at(long double c) const;
};

LambdaProfile lambda_profile(long double b, const Spectrum& spectrum);

/// Brute-force argmin of x^3 + b x^2 + c x over theta_1..theta_d; ties go to
/// the larger index.
std::size_t lambda_argmin(const Spectrum& spectrum, long double b, long double c);

struct QuotientMatrix {
    long double b11 = 0, b12 = 0, b21 = 0, b22 = 0;
    std::optional<std::vector<Rational>> exact;  // {b11, b12, b21, b22}
};

struct OptimalK3 {
    BoundReport report;
    QuotientMatrix quotient;
    std::size_t s = 0;
};

/// Best bound of the form n(W - lambda)/(p(delta) - lambda) over cubics
/// x^3 + b x^2 + c x.
OptimalK3 optimal_k3_bound(const BoundInput& input);

/// Direct bipartite form with theta_s the least eigenvalue >= 0. Requires
/// theta_d = -theta_0.
BoundReport bipartite_k3_bound(const Spectrum& spectrum);

enum class FiolDiagonal {
    walk_regular,  // require constant diag(A^3)
    max_diagonal,  // use delta = max diag(A^3) in place of 2 n_t
};

BoundReport fiol_k3_bound(const BoundInput& input, FiolDiagonal mode = FiolDiagonal::walk_regular);

/// Minimum over feasible index sets I, |I| = k, containing d when k is odd.
BoundReport fiol_index_set_bound(const Spectrum& spectrum, int k);

BoundReport closed_form_hamming(std::int64_t d, std::int64_t q);
BoundReport closed_form_odd(std::int64_t l);
BoundReport closed_form_johnson_2k(std::int64_t k);

/// True iff the optimal cubic bound is below 2 (then any two vertices are
/// within distance 3).
bool diameter_test(const BoundInput& input);

struct FiolComparison {
    long double ours = 0;
    long double fiol = 0;
    bool strictly_smaller = false;
    long double tau = 0;
    std::optional<long double> witness_eigenvalue;  // some eigenvalue in (-1, tau)
};

FiolComparison compare_fiol(const BoundInput& input, FiolDiagonal mode = FiolDiagonal::max_diagonal);

struct Equitability {
    bool equitable = false;
    QuotientMatrix empirical;
    QuotientMatrix theorem;
    bool matches_theorem = false;
    bool size_matches_bound = false;
};

/// Block row sums of p(A) over (set, complement). `set` must be 3-independent.
Equitability equitability_check(const Graph& g, const BoundInput& input, std::span<const Vertex> set,
                                const CubicPoly& poly);

} // namespace skind

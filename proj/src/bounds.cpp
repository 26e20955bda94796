#include "skind/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <type_traits>

#include "skind/error.hpp"
#include "skind/exact.hpp"
#include "skind/walks.hpp"

namespace skind {

namespace {

using Real = long double;
constexpr Real kTol = 1e-9L;

template <class T>
constexpr bool exact_v = std::is_same_v<T, Rational>;

template <class T>
T theta_at(const Spectrum& s, std::size_t i)
{
    if constexpr (exact_v<T>)
        return T(s.integer(i));
    else
        return s.theta(i);
}

template <class T>
Real as_real(const T& v)
{
    if constexpr (exact_v<T>)
        return to_long_double(v);
    else
        return v;
}

template <class T>
T from_real(Real v)
{
    if constexpr (exact_v<T>)
        return exact_rational(v);
    else
        return v;
}

Real slack(Real ref)
{
    return kTol * std::max<Real>(1, std::fabs(ref));
}

template <class T>
bool at_least(const T& a, const T& b)
{
    if constexpr (exact_v<T>)
        return a >= b;
    else
        return a >= b - slack(b);
}

template <class T>
bool greater(const T& a, const T& b)
{
    if constexpr (exact_v<T>)
        return a > b;
    else
        return a > b + slack(b);
}

template <class T>
void set_value(BoundReport& r, const T& v)
{
    r.value = as_real(v);
    if constexpr (exact_v<T>) {
        r.exact = v;
        r.floor_value = floor_int(v);
    } else {
        r.floor_value = static_cast<std::int64_t>(std::floor(r.value + 1e-9L));
    }
}

template <class T>
T horner(const std::vector<T>& coeffs, const T& x)
{
    T acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

template <class T>
std::vector<T> convert(std::span<const Real> coeffs)
{
    std::vector<T> out;
    out.reserve(coeffs.size());
    for (Real c : coeffs)
        out.push_back(from_real<T>(c));
    return out;
}

void require_spectrum(const Spectrum& s)
{
    if (s.distinct().empty())
        throw PreconditionError("empty spectrum");
    if (s.mult(0) != 1)
        throw PreconditionError("largest eigenvalue is not simple; graph is disconnected");
}

/// Smallest index i >= 1 with theta_i <= -1.
template <class T>
std::optional<std::size_t> first_at_most_minus_one(const Spectrum& s)
{
    for (std::size_t i = 1; i <= s.d(); ++i)
        if (at_least<T>(T(-1), theta_at<T>(s, i)))
            return i;
    return std::nullopt;
}

template <class T>
T sum_powers(const T& x, int k)
{
    T acc = 0;
    T p = 1;
    for (int j = 0; j <= k; ++j) {
        acc += p;
        p *= x;
    }
    return acc;
}

template <class T>
std::pair<T, T> w_lambda(const BoundInput& in, const std::vector<T>& coeffs, std::size_t& index)
{
    if (coeffs.empty())
        throw PreconditionError("empty polynomial");
    if (coeffs.size() - 1 > in.max_walk_length())
        throw PreconditionError("polynomial degree exceeds available closed-walk data");
    T W = 0;
    bool first = true;
    for (const auto& row : in.walk_rows) {
        T diag = 0;
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            diag += coeffs[i] * T(row[i]);
        if (first || diag > W)
            W = diag;
        first = false;
    }
    const Spectrum& s = in.spectrum;
    if (s.d() == 0)
        throw PreconditionError("spectrum has a single distinct eigenvalue");
    T lambda = horner(coeffs, theta_at<T>(s, 1));
    index = 1;
    for (std::size_t i = 2; i <= s.d(); ++i) {
        T v = horner(coeffs, theta_at<T>(s, i));
        if (v <= lambda) {
            lambda = v;
            index = i;
        }
    }
    return {W, lambda};
}

template <class T>
BoundReport generic_impl(const BoundInput& in, std::span<const Real> coeffs_in)
{
    auto coeffs = convert<T>(coeffs_in);
    std::size_t index = 0;
    auto [W, lambda] = w_lambda(in, coeffs, index);
    T top = horner(coeffs, T(in.degree));
    if (!greater(top, lambda))
        throw PreconditionError("p(theta_0) <= lambda(p); polynomial gives no bound for this spectrum");
    BoundReport r;
    r.method = Method::generic;
    r.k = static_cast<int>(coeffs.size()) - 1;
    r.coefficients.assign(coeffs_in.begin(), coeffs_in.end());
    if (coeffs_in.size() == 4 && coeffs_in[0] == 0 && coeffs_in[3] == 1)
        r.poly = CubicPoly{coeffs_in[2], coeffs_in[1]};
    r.spectrum_exact = in.spectrum.exact();
    r.witnesses.theta_d = in.spectrum.theta(in.spectrum.d());
    if (in.max_walk_length() >= 3)
        r.witnesses.delta = in.delta();
    set_value(r, T(in.n) * (W - lambda) / (top - lambda));
    return r;
}

template <class T>
BoundReport hoffman_impl(const Spectrum& s)
{
    T t0 = theta_at<T>(s, 0);
    T td = theta_at<T>(s, s.d());
    if (s.d() == 0)
        throw PreconditionError("hoffman bound needs an edge (theta_0 = theta_d)");
    BoundReport r;
    r.method = Method::hoffman;
    r.k = 1;
    r.spectrum_exact = s.exact();
    r.coefficients = {-s.theta(s.d()), 1};
    r.witnesses.theta_d = s.theta(s.d());
    set_value(r, T(s.n()) * (-td) / (t0 - td));
    return r;
}

template <class T>
BoundReport acf_impl(const BoundInput& in, int k)
{
    const Spectrum& s = in.spectrum;
    BoundReport r;
    r.method = Method::acf;
    r.k = k;
    r.spectrum_exact = s.exact();
    T n = T(in.n);
    T t0 = T(in.degree);
    T td = theta_at<T>(s, s.d());
    r.witnesses.theta_d = s.theta(s.d());
    if (k == 2) {
        auto i = first_at_most_minus_one<T>(s);
        if (!i)
            throw PreconditionError("no eigenvalue <= -1");
        if (*i == 1)
            throw PreconditionError("theta_1 <= -1; the k=2 formula needs an eigenvalue above -1 other than theta_0");
        T ti = theta_at<T>(s, *i);
        T tj = theta_at<T>(s, *i - 1);
        r.witnesses.theta_i = s.theta(*i);
        r.coefficients = {0, -(s.theta(*i) + s.theta(*i - 1)), 1};
        set_value(r, n * (t0 + ti * tj) / ((t0 - ti) * (t0 - tj)));
        return r;
    }
    if (in.max_walk_length() < static_cast<std::size_t>(k))
        throw PreconditionError("closed-walk data shorter than k");
    T W = 0;
    bool first = true;
    for (const auto& row : in.walk_rows) {
        T acc = 0;
        for (int j = 0; j <= k; ++j)
            acc += T(row[j]);
        if (first || acc > W)
            W = acc;
        first = false;
    }
    r.coefficients.assign(k + 1, 1);
    if (k >= 3)
        r.witnesses.delta = in.delta();
    if (k % 2 == 1) {
        T sd = sum_powers(td, k);
        set_value(r, n * (W - sd) / (sum_powers(t0, k) - sd));
    } else {
        T half = T(1) / T(2);
        set_value(r, n * (W + half) / (sum_powers(t0, k) + half));
    }
    return r;
}

template <class T>
OptimalK3 optimal_impl(const BoundInput& in)
{
    const Spectrum& s = in.spectrum;
    const std::size_t d = s.d();
    if (d < 2)
        throw PreconditionError("optimal cubic bound needs at least 3 distinct eigenvalues");
    if (in.max_walk_length() < 3)
        throw PreconditionError("closed-walk data shorter than 3");
    T n = T(in.n);
    T t0 = T(in.degree);
    T td = theta_at<T>(s, d);
    T delta = T(in.delta());
    if (t0 == 0)
        throw PreconditionError("edgeless graph");
    if (td == T(-1))
        throw PreconditionError("theta_d = -1: regular graph is a union of cliques (disconnected or complete); tau is undefined");
    T tau = -(t0 * t0 + t0 * td - delta) / (t0 * (td + 1));

    bool degenerate = false;
    std::size_t si = 0;
    for (std::size_t i = 1; i <= d; ++i)
        if (at_least(theta_at<T>(s, i), tau))
            si = i;
    if (si == 0) {
        si = 1;
        degenerate = true;
    }
    if (si >= d) {
        si = d - 1;
        degenerate = true;
    }
    if (si + 1 == d)
        degenerate = true;

    T ts = theta_at<T>(s, si);
    T ts1 = theta_at<T>(s, si + 1);
    T b = -(ts + ts1 + td);
    T c = td * ts + td * ts1 + ts * ts1;
    T value = n * (delta - t0 * (ts + ts1 + td) - ts * ts1 * td) / ((t0 - ts) * (t0 - ts1) * (t0 - td));

    OptimalK3 out;
    out.s = si;
    BoundReport& r = out.report;
    r.method = Method::optimal_k3;
    r.k = 3;
    r.spectrum_exact = s.exact();
    r.degenerate = degenerate;
    r.poly = CubicPoly{as_real(b), as_real(c)};
    r.coefficients = r.poly->coefficients();
    r.witnesses.theta_s = s.theta(si);
    r.witnesses.theta_s1 = s.theta(si + 1);
    r.witnesses.theta_d = s.theta(d);
    r.witnesses.tau = as_real(tau);
    r.witnesses.delta = in.delta();
    set_value(r, value);

    T pd = ((t0 + b) * t0 + c) * t0;
    T b11 = delta + b * t0;
    T b21 = b11 - ts * ts1 * td;
    T b12 = pd - b11;
    T b22 = pd - b21;
    QuotientMatrix& q = out.quotient;
    q.b11 = as_real(b11);
    q.b12 = as_real(b12);
    q.b21 = as_real(b21);
    q.b22 = as_real(b22);
    if constexpr (exact_v<T>)
        q.exact = std::vector<Rational>{b11, b12, b21, b22};
    return out;
}

template <class T>
BoundReport bipartite_impl(const Spectrum& s)
{
    const std::size_t d = s.d();
    if (d < 2)
        throw PreconditionError("bipartite form needs at least 3 distinct eigenvalues");
    T t0 = theta_at<T>(s, 0);
    if (theta_at<T>(s, d) != -t0 && !(!exact_v<T> && std::fabs(s.theta(d) + s.theta(0)) <= slack(s.theta(0))))
        throw PreconditionError("spectrum is not symmetric about 0 at the extremes (theta_d != -theta_0)");
    std::size_t si = 0;
    for (std::size_t i = 1; i < d; ++i)
        if (at_least(theta_at<T>(s, i), T(0)))
            si = i;
    if (si == 0)
        throw PreconditionError("no non-principal eigenvalue >= 0");
    T ts = theta_at<T>(s, si);
    T ts1 = theta_at<T>(s, si + 1);
    BoundReport r;
    r.method = Method::optimal_k3;
    r.k = 3;
    r.spectrum_exact = s.exact();
    r.degenerate = si + 1 == d;
    r.witnesses.theta_s = s.theta(si);
    r.witnesses.theta_s1 = s.theta(si + 1);
    r.witnesses.theta_d = s.theta(d);
    r.witnesses.delta = 0;
    set_value(r, T(s.n()) * (t0 - (ts + ts1) + ts * ts1) / (T(2) * (t0 - ts) * (t0 - ts1)));
    return r;
}

template <class T>
BoundReport fiol_k3_impl(const BoundInput& in, FiolDiagonal mode)
{
    const Spectrum& s = in.spectrum;
    if (in.max_walk_length() < 3)
        throw PreconditionError("closed-walk data shorter than 3");
    if (mode == FiolDiagonal::walk_regular && !in.walk_regular(3))
        throw PreconditionError("graph is not 3-partially walk-regular (diag A^3 not constant)");
    auto i = first_at_most_minus_one<T>(s);
    if (!i)
        throw PreconditionError("no eigenvalue <= -1");
    if (*i == 1)
        throw PreconditionError("theta_1 <= -1; formula needs theta_{i-1} below theta_0");
    T n = T(in.n);
    T t0 = T(in.degree);
    T td = theta_at<T>(s, s.d());
    T ti = theta_at<T>(s, *i);
    T tj = theta_at<T>(s, *i - 1);
    T two_nt = T(in.delta());
    BoundReport r;
    r.method = Method::fiol_k3;
    r.k = 3;
    r.spectrum_exact = s.exact();
    r.witnesses.theta_i = s.theta(*i);
    r.witnesses.theta_d = s.theta(s.d());
    r.witnesses.delta = in.delta();
    set_value(r, n * (two_nt - t0 * (td + ti + tj) - td * ti * tj) / ((t0 - td) * (t0 - ti) * (t0 - tj)));
    return r;
}

template <class T>
BoundReport fiol_set_impl(const Spectrum& s, int k)
{
    const std::size_t d = s.d();
    if (k < 1)
        throw PreconditionError("k must be positive");
    if (static_cast<std::size_t>(k) > d)
        throw PreconditionError("k exceeds the number of non-principal eigenvalues");
    T t0 = theta_at<T>(s, 0);
    std::vector<T> th(d + 1);
    for (std::size_t i = 0; i <= d; ++i)
        th[i] = theta_at<T>(s, i);

    std::optional<T> best;
    std::vector<std::size_t> best_set;
    // Enumerate k-subsets of {1..d} in lexicographic order.
    std::vector<std::size_t> idx(k);
    for (int i = 0; i < k; ++i)
        idx[i] = i + 1;
    while (true) {
        bool ok = (k % 2 == 0) || idx.back() == d;
        if (ok) {
            T total = 0;
            std::vector<bool> in_set(d + 1, false);
            for (auto i : idx)
                in_set[i] = true;
            for (std::size_t j = 0; j <= d && ok; ++j) {
                if (in_set[j])
                    continue;
                T term = T(s.mult(j));
                for (auto i : idx)
                    term *= (th[j] - th[i]) / (t0 - th[i]);
                if (!at_least(term, T(0)))
                    ok = false;
                total += term;
            }
            if (ok && (!best || total < *best)) {
                best = total;
                best_set = idx;
            }
        }
        int pos = k - 1;
        while (pos >= 0 && idx[pos] == d - (k - 1 - pos))
            --pos;
        if (pos < 0)
            break;
        ++idx[pos];
        for (int p = pos + 1; p < k; ++p)
            idx[p] = idx[p - 1] + 1;
    }
    if (!best)
        throw PreconditionError("no index set yields a polynomial nonnegative on the spectrum");
    BoundReport r;
    r.method = Method::fiol_index_set;
    r.k = k;
    r.spectrum_exact = s.exact();
    r.witnesses.theta_d = s.theta(d);
    // Minor polynomial prod (x - theta_i)/(theta_0 - theta_i), x^0 first.
    std::vector<Real> poly{1};
    for (auto i : best_set) {
        Real ti = s.theta(i);
        Real scale = s.theta(0) - ti;
        std::vector<Real> next(poly.size() + 1, 0);
        for (std::size_t e = 0; e < poly.size(); ++e) {
            next[e + 1] += poly[e] / scale;
            next[e] -= poly[e] * ti / scale;
        }
        poly = std::move(next);
    }
    r.coefficients = std::move(poly);
    set_value(r, *best);
    return r;
}

BoundReport closed_report(const Rational& v, std::string label)
{
    BoundReport r;
    r.method = Method::closed_form_family;
    r.k = 3;
    r.spectrum_exact = true;
    r.label = std::move(label);
    set_value(r, v);
    return r;
}

Rational big_pow(std::int64_t base, std::int64_t e)
{
    BigInt out = 1;
    for (std::int64_t i = 0; i < e; ++i)
        out *= base;
    return Rational(out);
}

template <class T>
FiolComparison compare_impl(const BoundInput& in, FiolDiagonal mode)
{
    OptimalK3 ours = optimal_impl<T>(in);
    BoundReport fiol = fiol_k3_impl<T>(in, mode);
    FiolComparison out;
    out.ours = ours.report.value;
    out.fiol = fiol.value;
    out.tau = *ours.report.witnesses.tau;
    if constexpr (exact_v<T>)
        out.strictly_smaller = *fiol.exact > *ours.report.exact;
    else
        out.strictly_smaller = fiol.value - ours.report.value > kTol;
    const Spectrum& s = in.spectrum;
    T tau = T(in.delta()) - T(in.degree) * T(in.degree) - T(in.degree) * theta_at<T>(s, s.d());
    tau /= T(in.degree) * (theta_at<T>(s, s.d()) + 1);
    for (std::size_t i = 1; i <= s.d(); ++i) {
        T t = theta_at<T>(s, i);
        if (greater(t, T(-1)) && greater(tau, t)) {
            out.witness_eigenvalue = s.theta(i);
            break;
        }
    }
    return out;
}

} // namespace

std::string method_name(Method m, int k)
{
    switch (m) {
    case Method::generic:
        return "generic";
    case Method::hoffman:
        return "hoffman";
    case Method::acf:
        return "acf:k=" + std::to_string(k);
    case Method::fiol_k3:
        return "fiol-k3";
    case Method::fiol_index_set:
        return "fiol-set:k=" + std::to_string(k);
    case Method::optimal_k3:
        return "optimal-k3";
    case Method::closed_form_family:
        return "closed-form";
    }
    return "unknown";
}

std::int64_t BoundInput::delta() const
{
    if (max_walk_length() < 3)
        throw PreconditionError("closed-walk data shorter than 3");
    std::int64_t best = 0;
    for (const auto& row : walk_rows)
        best = std::max(best, row[3]);
    return best;
}

bool BoundInput::walk_regular(std::size_t len) const
{
    if (len > max_walk_length())
        return false;
    for (const auto& row : walk_rows)
        for (std::size_t i = 0; i <= len; ++i)
            if (row[i] != walk_rows[0][i])
                return false;
    return true;
}

namespace {

std::vector<std::vector<std::int64_t>> distinct_rows(const ClosedWalks& w)
{
    std::map<std::vector<std::int64_t>, int> seen;
    std::vector<std::vector<std::int64_t>> rows;
    for (std::size_t u = 0; u < w.vertex_count(); ++u) {
        std::vector<std::int64_t> row(w.max_length() + 1);
        for (std::size_t len = 0; len <= w.max_length(); ++len)
            row[len] = w.counts[len][u];
        if (seen.emplace(row, 0).second)
            rows.push_back(std::move(row));
    }
    return rows;
}

void require_connected_regular(const Graph& g)
{
    if (g.order() == 0)
        throw PreconditionError("empty graph");
    if (!g.degree())
        throw PreconditionError("graph is not regular");
    if (!is_connected(g))
        throw PreconditionError("graph is disconnected");
}

} // namespace

BoundInput make_input(const Graph& g, std::size_t max_walk_len, double group_tol)
{
    require_connected_regular(g);
    return make_input(g, eigen_spectrum(g, group_tol), max_walk_len);
}

BoundInput make_input(const Graph& g, Spectrum spectrum, std::size_t max_walk_len)
{
    require_connected_regular(g);
    require_spectrum(spectrum);
    if (spectrum.n() != static_cast<std::int64_t>(g.order()))
        throw PreconditionError("spectrum size does not match the graph order");
    BoundInput in;
    in.n = static_cast<std::int64_t>(g.order());
    in.degree = static_cast<std::int64_t>(*g.degree());
    if (std::fabs(spectrum.theta(0) - static_cast<Real>(in.degree)) > 1e-6L)
        throw PreconditionError("largest eigenvalue differs from the degree");
    in.spectrum = std::move(spectrum);
    in.walk_rows = distinct_rows(closed_walks(g, std::max<std::size_t>(max_walk_len, 3)));
    return in;
}

BoundInput spectrum_only_input(Spectrum spectrum, std::int64_t delta)
{
    require_spectrum(spectrum);
    BoundInput in;
    in.n = spectrum.n();
    in.degree = std::llround(spectrum.theta(0));
    if (std::fabs(spectrum.theta(0) - static_cast<Real>(in.degree)) > 1e-6L)
        throw PreconditionError("largest eigenvalue of a regular graph must be its (integer) degree");
    in.spectrum = std::move(spectrum);
    in.walk_rows = {{1, 0, in.degree, delta}};
    in.spectrum_only = true;
    return in;
}

BoundInput family_input(const FamilySpec& spec, std::size_t max_walk_len)
{
    return make_input(generate(spec), analytic_spectrum(spec), max_walk_len);
}

BoundInput family_spectrum_input(const FamilySpec& spec)
{
    return spectrum_only_input(analytic_spectrum(spec), analytic_delta(spec));
}

WLambda eval_W_lambda(const BoundInput& input, std::span<const long double> coeffs)
{
    WLambda out;
    if (input.spectrum.exact()) {
        auto [W, l] = w_lambda(input, convert<Rational>(coeffs), out.index);
        out.W = to_long_double(W);
        out.lambda = to_long_double(l);
    } else {
        auto [W, l] = w_lambda(input, convert<Real>(coeffs), out.index);
        out.W = W;
        out.lambda = l;
    }
    return out;
}

BoundReport generic_bound(const BoundInput& input, std::span<const long double> coeffs)
{
    return input.spectrum.exact() ? generic_impl<Rational>(input, coeffs) : generic_impl<Real>(input, coeffs);
}

BoundReport hoffman_bound(const Spectrum& spectrum)
{
    require_spectrum(spectrum);
    return spectrum.exact() ? hoffman_impl<Rational>(spectrum) : hoffman_impl<Real>(spectrum);
}

BoundReport acf_bound(const BoundInput& input, int k)
{
    if (k < 2)
        throw PreconditionError("ACF bound needs k >= 2");
    return input.spectrum.exact() ? acf_impl<Rational>(input, k) : acf_impl<Real>(input, k);
}

std::size_t LambdaProfile::index_at(long double c) const
{
    for (const auto& seg : segments)
        if (c < seg.hi)
            return seg.index;
    return segments.back().index;
}

LambdaProfile lambda_profile(long double b, const Spectrum& spectrum)
{
    const std::size_t d = spectrum.d();
    if (d < 3)
        throw PreconditionError("lambda profile needs d >= 3");
    auto th = [&](std::size_t i) { return spectrum.theta(i); };
    LambdaProfile out;
    out.b = b;
    out.breakpoints.assign(d + 1, 0);
    for (std::size_t i = 1; i <= d; ++i)
        out.breakpoints[i] = -(th(i) * th(i) + th(i) * th(i - 1) + th(i - 1) * th(i - 1)) - b * (th(i) + th(i - 1));
    out.c_star = -std::numeric_limits<Real>::infinity();
    for (std::size_t i = 1; i < d; ++i) {
        Real ci = -(th(d) * th(d) + th(d) * th(i) + th(i) * th(i)) - b * (th(d) + th(i));
        if (ci >= out.c_star) {
            out.c_star = ci;
            out.j = i;
        }
    }
    const Real inf = std::numeric_limits<Real>::infinity();
    auto push = [&](Real lo, Real hi, std::size_t index) {
        if (hi > lo)
            out.segments.push_back({lo, hi, index});
    };
    for (std::size_t s = 1; s < out.j; ++s)
        push(out.breakpoints[s], out.breakpoints[s + 1], s);
    push(out.breakpoints[out.j], out.c_star, out.j);
    push(out.c_star, inf, d);
    return out;
}

std::size_t lambda_argmin(const Spectrum& spectrum, long double b, long double c)
{
    CubicPoly p{b, c};
    std::size_t best = 1;
    Real val = p(spectrum.theta(1));
    for (std::size_t i = 2; i <= spectrum.d(); ++i) {
        Real v = p(spectrum.theta(i));
        if (v <= val) {
            val = v;
            best = i;
        }
    }
    return best;
}

OptimalK3 optimal_k3_bound(const BoundInput& input)
{
    require_spectrum(input.spectrum);
    return input.spectrum.exact() ? optimal_impl<Rational>(input) : optimal_impl<Real>(input);
}

BoundReport bipartite_k3_bound(const Spectrum& spectrum)
{
    require_spectrum(spectrum);
    return spectrum.exact() ? bipartite_impl<Rational>(spectrum) : bipartite_impl<Real>(spectrum);
}

BoundReport fiol_k3_bound(const BoundInput& input, FiolDiagonal mode)
{
    require_spectrum(input.spectrum);
    return input.spectrum.exact() ? fiol_k3_impl<Rational>(input, mode) : fiol_k3_impl<Real>(input, mode);
}

BoundReport fiol_index_set_bound(const Spectrum& spectrum, int k)
{
    require_spectrum(spectrum);
    return spectrum.exact() ? fiol_set_impl<Rational>(spectrum, k) : fiol_set_impl<Real>(spectrum, k);
}

BoundReport closed_form_hamming(std::int64_t d, std::int64_t q)
{
    if (d < 3 || q < 2)
        throw PreconditionError("closed form for H(d,q) needs d >= 3, q >= 2");
    const std::int64_t b = d % q;
    Rational top = big_pow(q, d - 1);
    Rational v;
    if (b == 0)
        v = top * (d - 2) / Rational(d * (d * (q - 1) - q));
    else if (b == 1)
        v = top / Rational(d * (q - 1) + 1);
    else if (b == 2)
        v = top / Rational(d * (q - 1) - q + 2);
    else
        v = top * Rational(q * (d - b) + (b - 1) * (b - 1) + (1 - d)) /
            (Rational(d * q - d + b - 2 * q) * Rational(d * q - d + b - q));
    return closed_report(v, "hamming(" + std::to_string(d) + "," + std::to_string(q) + ")");
}

BoundReport closed_form_odd(std::int64_t l)
{
    if (l < 3)
        throw PreconditionError("closed form for odd graphs needs l >= 3");
    Rational top(binomial(2 * l, l));
    Rational v;
    if (l % 2 == 1)
        v = top * (l * l - 2 * l + 2) / Rational(2 * (l + 2) * (l - 1) * (2 * l - 1));
    else
        v = top * (l * l - 4 * l + 2) / Rational(2 * (l + 1) * (l - 2) * (2 * l - 1));
    return closed_report(v, "odd(" + std::to_string(l) + ")");
}

BoundReport closed_form_johnson_2k(std::int64_t k)
{
    if (k < 2)
        throw PreconditionError("closed form for J(2k,k) needs k >= 2");
    // s = floor((2k + 1 - sqrt(8k - 7)) / 2), in integers.
    const std::int64_t m = 8 * k - 7;
    std::int64_t t = static_cast<std::int64_t>(std::sqrt(static_cast<double>(m)));
    while (t * t > m)
        --t;
    while ((t + 1) * (t + 1) <= m)
        ++t;
    const std::int64_t s = (t * t == m) ? (2 * k + 1 - t) / 2 : (2 * k - t) / 2;
    const std::int64_t ts = (k - s) * (k - s) - s;
    const std::int64_t ts1 = (k - s - 1) * (k - s - 1) - (s + 1);
    Rational v = Rational(binomial(2 * k, k)) / (k + 1) *
                 Rational(ts * ts1 - k * (ts + ts1 + 2 - 3 * k)) / Rational((k * k - ts) * (k * k - ts1));
    BoundReport r = closed_report(v, "johnson(" + std::to_string(2 * k) + "," + std::to_string(k) + ")");
    r.witnesses.theta_s = static_cast<Real>(ts);
    r.witnesses.theta_s1 = static_cast<Real>(ts1);
    r.witnesses.theta_d = static_cast<Real>(-k);
    return r;
}

bool diameter_test(const BoundInput& input)
{
    OptimalK3 o = optimal_k3_bound(input);
    if (o.report.exact)
        return *o.report.exact < 2;
    return o.report.value < 2;
}

FiolComparison compare_fiol(const BoundInput& input, FiolDiagonal mode)
{
    require_spectrum(input.spectrum);
    return input.spectrum.exact() ? compare_impl<Rational>(input, mode) : compare_impl<Real>(input, mode);
}

Equitability equitability_check(const Graph& g, const BoundInput& input, std::span<const Vertex> set,
                                const CubicPoly& poly)
{
    if (set.empty())
        throw PreconditionError("empty vertex set");
    if (!verify_independent(g, set, 3))
        throw PreconditionError("vertex set is not 3-independent");
    if (set.size() >= g.order())
        throw PreconditionError("vertex set has an empty complement");
    if (poly.b != std::floor(poly.b) || poly.c != std::floor(poly.c))
        throw PreconditionError("equitability check needs integer polynomial coefficients");

    const std::int64_t coeffs[] = {0, static_cast<std::int64_t>(poly.c), static_cast<std::int64_t>(poly.b), 1};
    IntMatrix P = polynomial_of_adjacency(g, coeffs);

    const std::size_t n = g.order();
    std::vector<bool> in_set(n, false);
    for (Vertex v : set)
        in_set[v] = true;

    // Row sums of each vertex into (set, complement); equitable iff constant per block.
    std::optional<std::int64_t> s_to_s, s_to_c, c_to_s, c_to_c;
    bool equitable = true;
    auto record = [&](std::optional<std::int64_t>& slot, std::int64_t v) {
        if (!slot)
            slot = v;
        else if (*slot != v)
            equitable = false;
    };
    for (std::size_t u = 0; u < n; ++u) {
        std::int64_t to_s = 0, to_c = 0;
        for (std::size_t v = 0; v < n; ++v)
            (in_set[v] ? to_s : to_c) += P(u, v);
        if (in_set[u]) {
            record(s_to_s, to_s);
            record(s_to_c, to_c);
        } else {
            record(c_to_s, to_s);
            record(c_to_c, to_c);
        }
    }

    // Averages stand in for the quotient when the partition is not equitable.
    Rational sum_ss = 0, sum_sc = 0, sum_cs = 0, sum_cc = 0;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v) {
            auto& slot = in_set[u] ? (in_set[v] ? sum_ss : sum_sc) : (in_set[v] ? sum_cs : sum_cc);
            slot += P(u, v);
        }
    Equitability out;
    out.equitable = equitable;
    std::vector<Rational> emp{sum_ss / Rational(set.size()), sum_sc / Rational(set.size()),
                              sum_cs / Rational(n - set.size()), sum_cc / Rational(n - set.size())};
    out.empirical.b11 = to_long_double(emp[0]);
    out.empirical.b12 = to_long_double(emp[1]);
    out.empirical.b21 = to_long_double(emp[2]);
    out.empirical.b22 = to_long_double(emp[3]);
    out.empirical.exact = emp;

    OptimalK3 opt = optimal_k3_bound(input);
    out.theorem = opt.quotient;
    out.size_matches_bound = static_cast<std::int64_t>(set.size()) == opt.report.floor_value;
    if (opt.quotient.exact)
        out.matches_theorem = equitable && *opt.quotient.exact == emp;
    else
        out.matches_theorem = equitable && std::fabs(out.theorem.b11 - out.empirical.b11) <= 1e-6L &&
                              std::fabs(out.theorem.b12 - out.empirical.b12) <= 1e-6L &&
                              std::fabs(out.theorem.b21 - out.empirical.b21) <= 1e-6L &&
                              std::fabs(out.theorem.b22 - out.empirical.b22) <= 1e-6L;
    return out;
}

} // namespace skind

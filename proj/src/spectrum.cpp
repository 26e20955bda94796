#include "skind/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <string>

#include "skind/error.hpp"

namespace skind {

namespace {

std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        std::int64_t t = 0;
        if (__builtin_mul_overflow(r, n - k + i, &t)) throw CapExceeded("binomial overflow");
        r = t / i;
    }
    return r;
}

std::int64_t ipow(std::int64_t b, std::int64_t e) {
    std::int64_t r = 1;
    for (std::int64_t i = 0; i < e; ++i)
        if (__builtin_mul_overflow(r, b, &r)) throw CapExceeded("power overflow");
    return r;
}

Spectrum from_integers(const std::map<std::int64_t, std::int64_t, std::greater<>>& values) {
    std::vector<Eigenvalue> out;
    for (auto [v, m] : values)
        if (m > 0) out.push_back({static_cast<long double>(v), m});
    return Spectrum(std::move(out), true);
}

} // namespace

Spectrum::Spectrum(std::vector<Eigenvalue> distinct, bool exact) : exact_(exact) {
    if (distinct.empty()) throw PreconditionError("spectrum needs at least one eigenvalue");
    std::sort(distinct.begin(), distinct.end(), [](const Eigenvalue& a, const Eigenvalue& b) { return a.value > b.value; });
    for (const auto& e : distinct) {
        if (e.mult <= 0) throw PreconditionError("eigenvalue multiplicities must be positive");
        if (!distinct_.empty() && distinct_.back().value == e.value)
            distinct_.back().mult += e.mult;
        else
            distinct_.push_back(e);
        n_ += e.mult;
    }
    if (exact_)
        for (const auto& e : distinct_)
            if (e.value != std::floor(e.value)) throw PreconditionError("exact spectra must be integral");
}

std::int64_t Spectrum::integer(std::size_t i) const noexcept { return std::llround(distinct_[i].value); }

std::vector<double> jacobi_eigenvalues(std::vector<double> a, std::size_t n, const JacobiOptions& opts) {
    auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };

    double frob = 0;
    for (double x : a) frob += x * x;
    frob = std::sqrt(frob);
    const double target = opts.rel_tol * frob;

    auto off_norm = [&] {
        double s = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) s += 2 * at(i, j) * at(i, j);
        return std::sqrt(s);
    };

    double off = off_norm();
    int sweep = 0;
    while (off > target) {
        if (sweep++ == opts.max_sweeps)
            throw ConvergenceError("Jacobi did not converge after " + std::to_string(opts.max_sweeps) +
                                       " sweeps (off-diagonal norm " + std::to_string(off) + ")",
                                   off);
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (apq == 0.0) continue;
                const double app = at(p, p);
                const double aqq = at(q, q);
                // Past the first sweeps, an entry too small to move either diagonal
                // value is round-off; zero it instead of rotating.
                const double g = 100 * std::fabs(apq);
                if (sweep > 4 && std::fabs(app) + g == std::fabs(app) && std::fabs(aqq) + g == std::fabs(aqq)) {
                    at(p, q) = at(q, p) = 0;
                    continue;
                }
                // Rutishauser's formulation: t = sgn(theta) / (|theta| + sqrt(theta^2 + 1))
                const double theta = (aqq - app) / (2 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1));
                const double c = 1 / std::sqrt(t * t + 1);
                const double s = t * c;
                const double tau = s / (1 + c);

                at(p, p) = app - t * apq;
                at(q, q) = aqq + t * apq;
                at(p, q) = at(q, p) = 0;
                // Rows p and q are contiguous; the column copies are written after.
                double* rp = &a[p * n];
                double* rq = &a[q * n];
                for (std::size_t r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    const double arp = rp[r];
                    const double arq = rq[r];
                    rp[r] = arp - s * (arq + tau * arp);
                    rq[r] = arq + s * (arp - tau * arq);
                }
                for (std::size_t r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    at(r, p) = rp[r];
                    at(r, q) = rq[r];
                }
            }
        off = off_norm();
    }

    std::vector<double> ev(n);
    for (std::size_t i = 0; i < n; ++i) ev[i] = at(i, i);
    std::sort(ev.begin(), ev.end(), std::greater<>());
    return ev;
}

Spectrum group_eigenvalues(const std::vector<double>& descending, double group_tol) {
    if (descending.empty()) throw PreconditionError("no eigenvalues to group");
    const bool snap = std::all_of(descending.begin(), descending.end(),
                                  [](double x) { return std::fabs(x - std::round(x)) <= kSnapTol; });
    if (snap) {
        std::map<std::int64_t, std::int64_t, std::greater<>> counts;
        for (double x : descending) ++counts[std::llround(x)];
        return from_integers(counts);
    }

    const double scale = group_tol * std::max(1.0, std::fabs(descending.front()));
    std::vector<Eigenvalue> out;
    long double sum = 0;
    std::int64_t count = 0;
    double last = 0;
    for (double x : descending) {
        if (count > 0 && last - x > scale) {
            out.push_back({sum / count, count});
            sum = 0;
            count = 0;
        }
        sum += x;
        ++count;
        last = x;
    }
    out.push_back({sum / count, count});
    return Spectrum(std::move(out), false);
}

Spectrum eigen_spectrum(const Graph& g, double group_tol, std::size_t dense_cap) {
    const std::size_t n = g.order();
    if (n == 0) throw PreconditionError("eigen_spectrum needs a nonempty graph");
    if (n > dense_cap)
        throw CapExceeded("eigensolver on " + std::to_string(n) + " vertices exceeds cap " + std::to_string(dense_cap));
    std::vector<double> a(n * n, 0.0);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v : g.neighbors(u)) a[u * n + v] = 1.0;
    return group_eigenvalues(jacobi_eigenvalues(std::move(a), n), group_tol);
}

Spectrum analytic_spectrum(const FamilySpec& spec) {
    validate(spec);
    std::map<std::int64_t, std::int64_t, std::greater<>> values;
    switch (spec.family) {
    case Family::hypercube: return analytic_spectrum(FamilySpec::hamming(spec.first, 2));
    case Family::hamming: {
        const std::int64_t d = spec.first, q = spec.second;
        for (std::int64_t i = 0; i <= d; ++i) {
            std::int64_t m = 0;
            if (__builtin_mul_overflow(binomial(d, i), ipow(q - 1, i), &m)) throw CapExceeded("multiplicity overflow");
            values[d * (q - 1) - q * i] += m;
        }
        break;
    }
    case Family::odd: {
        const std::int64_t l = spec.first;
        for (std::int64_t i = 0; i < l; ++i)
            values[(i % 2 == 0 ? 1 : -1) * (l - i)] += binomial(2 * l - 1, i) - binomial(2 * l - 1, i - 1);
        break;
    }
    case Family::johnson: {
        const std::int64_t n = spec.first, k = spec.second;
        const std::int64_t diam = std::min(k, n - k);
        for (std::int64_t j = 0; j <= diam; ++j) values[(k - j) * (n - k - j) - j] += binomial(n, j) - binomial(n, j - 1);
        break;
    }
    case Family::crown: {
        const std::int64_t d = spec.first;
        values[d] += 1;
        values[1] += d;
        values[-1] += d;
        values[-d] += 1;
        break;
    }
    }
    return from_integers(values);
}

std::int64_t analytic_delta(const FamilySpec& spec) {
    validate(spec);
    switch (spec.family) {
    case Family::hamming: return spec.first * (spec.second - 1) * (spec.second - 2);
    case Family::johnson: return spec.second * (spec.first - spec.second) * (spec.first - 2);
    case Family::odd: return spec.first == 2 ? 2 : 0;
    case Family::hypercube:
    case Family::crown: return 0;
    }
    return 0;
}

} // namespace skind

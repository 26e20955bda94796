#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "skind/families.hpp"
#include "skind/graph.hpp"

namespace skind {

struct Eigenvalue {
    long double value = 0;
    std::int64_t mult = 0;
};

/// Distinct adjacency eigenvalues theta_0 > theta_1 > ... > theta_d with
/// multiplicities. `exact` means every value is an integer known exactly.
class Spectrum {
public:
    Spectrum() = default;
    /// Sorts, merges equal values and validates. Throws PreconditionError on
    /// non-positive multiplicities or an empty list.
    Spectrum(std::vector<Eigenvalue> distinct, bool exact);

    const std::vector<Eigenvalue>& distinct() const noexcept { return distinct_; }
    bool exact() const noexcept { return exact_; }
    std::int64_t n() const noexcept { return n_; }

    /// Number of non-principal distinct eigenvalues (the "d" of theta_d).
    std::size_t d() const noexcept { return distinct_.size() - 1; }
    long double theta(std::size_t i) const noexcept { return distinct_[i].value; }
    std::int64_t mult(std::size_t i) const noexcept { return distinct_[i].mult; }
    /// Integer value of theta_i; only meaningful when exact().
    std::int64_t integer(std::size_t i) const noexcept;

private:
    std::vector<Eigenvalue> distinct_;
    bool exact_ = false;
    std::int64_t n_ = 0;
};

inline constexpr double kDefaultGroupTol = 1e-6;
inline constexpr double kSnapTol = 1e-7;

struct JacobiOptions {
    double rel_tol = 1e-12;  // stop when off-diagonal norm <= rel_tol * |A|_F
    int max_sweeps = 100;
};

/// All eigenvalues of a dense symmetric matrix (row-major, n x n), descending.
/// Cyclic Jacobi rotations in fixed row-by-row order. Throws
/// ConvergenceError carrying the residual when max_sweeps is exhausted.
std::vector<double> jacobi_eigenvalues(std::vector<double> a, std::size_t n, const JacobiOptions& opts = {});

/// Groups a descending eigenvalue list into distinct values; consecutive
/// values merge when their gap is <= group_tol * max(1, |first|). Values
/// snap to integers only if every value is within kSnapTol of one.
Spectrum group_eigenvalues(const std::vector<double>& descending, double group_tol = kDefaultGroupTol);

/// Numeric spectrum of the adjacency matrix.
Spectrum eigen_spectrum(const Graph& g, double group_tol = kDefaultGroupTol, std::size_t dense_cap = kDenseCap);

/// Closed-form integer spectrum of a family graph.
Spectrum analytic_spectrum(const FamilySpec& spec);

/// max_u (A^3)_{uu} for a family graph, from its closed form.
std::int64_t analytic_delta(const FamilySpec& spec);

} // namespace skind

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "skind/graph.hpp"

namespace skind {

/// Words of length d over {0, ..., q-1}, stored one symbol per byte.
class WordSet {
public:
    WordSet() = default;
    WordSet(int q, std::size_t d);

    int q() const noexcept { return q_; }
    std::size_t length() const noexcept { return d_; }
    std::size_t size() const noexcept { return d_ == 0 ? count_ : symbols_.size() / d_; }
    bool empty() const noexcept { return size() == 0; }

    std::span<const std::uint8_t> word(std::size_t i) const noexcept { return {symbols_.data() + i * d_, d_}; }

    /// Appends a word. Throws PreconditionError on a wrong length or symbol.
    void add(std::span<const std::uint8_t> w);
    /// True when no word appears twice.
    bool distinct() const;

    friend bool operator==(const WordSet&, const WordSet&) = default;

private:
    int q_ = 2;
    std::size_t d_ = 0;
    std::size_t count_ = 0;  // only used when d == 0
    std::vector<std::uint8_t> symbols_;
};

/// Minimum pairwise Hamming distance. Needs at least two words.
std::size_t min_distance(const WordSet& w);

/// Every column holds as many 1s as 0s (binary sets only).
bool check_balanced(const WordSet& w);

/// The q constant words of length d.
WordSet construct_repetition(std::size_t d, int q);

/// Latin squares L_k(i, j) = k i + j mod q, k = 1..l, for prime q.
struct MOLSFamily {
    int q = 0;
    std::vector<std::vector<std::uint8_t>> squares;  // each q*q, row-major

    std::uint8_t at(std::size_t k, std::size_t i, std::size_t j) const noexcept { return squares[k][i * q + j]; }
};

MOLSFamily mols_family(int q, int l);

/// Each square is Latin and every pair is orthogonal.
bool check_mols(const MOLSFamily& f);

/// Rows (i, j, L_1(i,j), ..., L_l(i,j)): q^2 words of length l + 2 and
/// minimum distance l + 1. Needs q prime and 3 <= l <= q - 1.
WordSet construct_mols_code(int q, int l);

/// Concatenations u v for u in U, v in V, each with bits j and d1 + j flipped,
/// j = 0..d1-1. Needs binary sets with d1 <= d2 and minimum distance >= 4
/// (or a single word).
WordSet construct_binary_double(const WordSet& u, const WordSet& v);

/// The doubling construction for d = 2^r, starting from {00} at r = 1.
WordSet construct_doubled(int r);

/// Keeps the words with a 1 in `column` and deletes that column. The column
/// must be balanced.
WordSet puncture(const WordSet& w, std::size_t column);

/// Lowest-index balanced column, or w.length() if none.
std::size_t first_balanced_column(const WordSet& w);

/// Punctures the doubled set for d = 2^r down to length d_target,
/// 0 <= 2^r - d_target <= (2^r - 2) / 2.
WordSet construct_hamconst(std::size_t d_target, int r);

/// Vertex indices of the words in the Hamming graph H(d, q) as generated.
std::vector<Vertex> hamming_vertices(const WordSet& w);

/// "q d" then one word per line; symbols 0-9 then a-z.
void write_wordset(std::ostream& out, const WordSet& w);
WordSet read_wordset(std::istream& in);
WordSet read_wordset_file(const std::string& path);
void write_wordset_file(const std::string& path, const WordSet& w);

bool is_prime(std::int64_t q);

} // namespace skind

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "skind/graph.hpp"

namespace skind {

enum class Family { hamming, johnson, odd, hypercube, crown };

/// A parameterized graph family member, e.g. hamming(d=8, q=2).
///
/// Parameter meaning per family:
///   hamming   first = d, second = q      (d >= 1, q >= 2)
///   johnson   first = n, second = k      (1 <= k <= n-1)
///   odd       first = l                  (l >= 2)
///   hypercube first = d                  (d >= 1)
///   crown     first = d                  (d >= 1); K_{d+1,d+1} minus a perfect matching
struct FamilySpec {
    Family family = Family::hypercube;
    std::int64_t first = 1;
    std::int64_t second = 0;

    static FamilySpec hamming(std::int64_t d, std::int64_t q) { return {Family::hamming, d, q}; }
    static FamilySpec johnson(std::int64_t n, std::int64_t k) { return {Family::johnson, n, k}; }
    static FamilySpec odd(std::int64_t l) { return {Family::odd, l, 0}; }
    static FamilySpec hypercube(std::int64_t d) { return {Family::hypercube, d, 0}; }
    static FamilySpec crown(std::int64_t d) { return {Family::crown, d, 0}; }

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

inline constexpr std::size_t kGenerationCap = 100'000;

/// Parses "hamming:d=8,q=2", "johnson:n=14,k=7", "odd:l=6", "hypercube:d=8",
/// "crown:d=3". Throws ParseError on bad syntax and PreconditionError on
/// out-of-range parameters.
FamilySpec parse_family(std::string_view text);

std::string to_string(const FamilySpec& spec);

/// Throws PreconditionError unless the parameters satisfy the family's range.
void validate(const FamilySpec& spec);

/// Vertex count, computed without building the graph. Throws CapExceeded if
/// it does not fit in 63 bits.
std::int64_t family_order(const FamilySpec& spec);
/// Common degree of the family graph.
std::int64_t family_degree(const FamilySpec& spec);

/// Builds the family graph. Hamming vertices are words read as base-q numbers
/// with the first symbol most significant; Johnson and Odd vertices are
/// subsets in increasing bitmask order.
Graph generate(const FamilySpec& spec, std::size_t cap = kGenerationCap);

/// Vertex index of a Hamming word (first symbol most significant).
std::size_t hamming_index(std::span<const std::uint8_t> word, int q);

} // namespace skind

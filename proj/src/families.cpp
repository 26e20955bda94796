#include "skind/families.hpp"

#include <charconv>
#include <limits>
#include <map>
#include <unordered_map>
#include <vector>

#include "skind/error.hpp"

namespace skind {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r)) throw CapExceeded("family size overflows 64-bit integers");
    return r;
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) r = checked_mul(r, n - k + i) / i;
    return r;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

// Enumerates all k-subsets of [0, n) as bitmasks in increasing numeric order.
std::vector<std::uint64_t> subsets(int n, int k) {
    std::vector<std::uint64_t> out;
    if (k == 0) {
        out.push_back(0);
        return out;
    }
    std::uint64_t x = (std::uint64_t{1} << k) - 1;
    const std::uint64_t limit = std::uint64_t{1} << n;
    while (x < limit) {
        out.push_back(x);
        const std::uint64_t c = x & (~x + 1);
        const std::uint64_t r = x + c;
        x = (((r ^ x) >> 2) / c) | r;
    }
    return out;
}

Graph from_subsets(const std::vector<std::uint64_t>& verts, int universe, bool johnson) {
    std::unordered_map<std::uint64_t, Vertex> index;
    index.reserve(verts.size() * 2);
    for (Vertex i = 0; i < verts.size(); ++i) index.emplace(verts[i], i);
    const std::uint64_t all = (universe == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << universe) - 1);

    std::vector<std::vector<Vertex>> nbrs(verts.size());
    for (Vertex i = 0; i < verts.size(); ++i) {
        const std::uint64_t s = verts[i];
        if (johnson) {
            // swap one member out for one non-member
            for (int a = 0; a < universe; ++a) {
                if (!((s >> a) & 1U)) continue;
                for (int b = 0; b < universe; ++b) {
                    if ((s >> b) & 1U) continue;
                    nbrs[i].push_back(index.at((s & ~(std::uint64_t{1} << a)) | (std::uint64_t{1} << b)));
                }
            }
        } else {
            // odd graph: disjoint subsets of the same size are contained in the complement
            const std::uint64_t comp = all & ~s;
            for (int a = 0; a < universe; ++a)
                if ((comp >> a) & 1U) nbrs[i].push_back(index.at(comp & ~(std::uint64_t{1} << a)));
        }
    }
    return Graph::from_neighbors(std::move(nbrs));
}

} // namespace

FamilySpec parse_family(std::string_view text) {
    text = trim(text);
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) throw ParseError("family spec needs 'name:key=value,...': " + std::string(text));
    const std::string_view name = text.substr(0, colon);

    std::map<std::string, std::int64_t, std::less<>> params;
    std::string_view rest = text.substr(colon + 1);
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        std::string_view item = trim(rest.substr(0, comma));
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
        const auto eq = item.find('=');
        if (eq == std::string_view::npos) throw ParseError("expected key=value in family spec, got '" + std::string(item) + "'");
        const std::string_view key = trim(item.substr(0, eq));
        const std::string_view val = trim(item.substr(eq + 1));
        std::int64_t v = 0;
        auto [p, ec] = std::from_chars(val.data(), val.data() + val.size(), v);
        if (ec != std::errc{} || p != val.data() + val.size())
            throw ParseError("bad integer '" + std::string(val) + "' in family spec");
        if (!params.emplace(std::string(key), v).second) throw ParseError("duplicate key '" + std::string(key) + "'");
    }

    auto need = [&](std::string_view key) {
        auto it = params.find(key);
        if (it == params.end()) throw ParseError("family spec '" + std::string(text) + "' is missing " + std::string(key));
        return it->second;
    };
    auto expect_keys = [&](std::size_t count) {
        if (params.size() != count) throw ParseError("unexpected keys in family spec '" + std::string(text) + "'");
    };

    FamilySpec spec;
    if (name == "hamming") {
        spec = FamilySpec::hamming(need("d"), need("q"));
        expect_keys(2);
    } else if (name == "johnson") {
        spec = FamilySpec::johnson(need("n"), need("k"));
        expect_keys(2);
    } else if (name == "odd") {
        spec = FamilySpec::odd(need("l"));
        expect_keys(1);
    } else if (name == "hypercube") {
        spec = FamilySpec::hypercube(need("d"));
        expect_keys(1);
    } else if (name == "crown") {
        spec = FamilySpec::crown(need("d"));
        expect_keys(1);
    } else {
        throw ParseError("unknown family '" + std::string(name) + "'");
    }
    validate(spec);
    return spec;
}

std::string to_string(const FamilySpec& s) {
    const auto a = std::to_string(s.first);
    const auto b = std::to_string(s.second);
    switch (s.family) {
    case Family::hamming: return "hamming:d=" + a + ",q=" + b;
    case Family::johnson: return "johnson:n=" + a + ",k=" + b;
    case Family::odd: return "odd:l=" + a;
    case Family::hypercube: return "hypercube:d=" + a;
    case Family::crown: return "crown:d=" + a;
    }
    return {};
}

void validate(const FamilySpec& s) {
    auto fail = [&](const char* why) { throw PreconditionError(to_string(s) + ": " + why); };
    switch (s.family) {
    case Family::hamming:
        if (s.first < 1 || s.second < 2) fail("hamming requires d >= 1 and q >= 2");
        break;
    case Family::johnson:
        if (s.second < 1 || s.second > s.first - 1) fail("johnson requires 1 <= k <= n-1");
        if (s.first > 63) fail("johnson requires n <= 63");
        break;
    case Family::odd:
        if (s.first < 2) fail("odd requires l >= 2");
        if (2 * s.first - 1 > 63) fail("odd requires l <= 32");
        break;
    case Family::hypercube:
        if (s.first < 1) fail("hypercube requires d >= 1");
        break;
    case Family::crown:
        if (s.first < 1) fail("crown requires d >= 1");
        break;
    }
}

std::int64_t family_order(const FamilySpec& s) {
    validate(s);
    switch (s.family) {
    case Family::hamming: {
        std::int64_t n = 1;
        for (std::int64_t i = 0; i < s.first; ++i) n = checked_mul(n, s.second);
        return n;
    }
    case Family::hypercube: return family_order(FamilySpec::hamming(s.first, 2));
    case Family::johnson: return binomial(s.first, s.second);
    case Family::odd: return binomial(2 * s.first - 1, s.first - 1);
    case Family::crown: return 2 * (s.first + 1);
    }
    return 0;
}

std::int64_t family_degree(const FamilySpec& s) {
    validate(s);
    switch (s.family) {
    case Family::hamming: return s.first * (s.second - 1);
    case Family::hypercube: return s.first;
    case Family::johnson: return s.second * (s.first - s.second);
    case Family::odd: return s.first;
    case Family::crown: return s.first;
    }
    return 0;
}

std::size_t hamming_index(std::span<const std::uint8_t> word, int q) {
    std::size_t idx = 0;
    for (std::uint8_t sym : word) idx = idx * static_cast<std::size_t>(q) + sym;
    return idx;
}

Graph generate(const FamilySpec& spec, std::size_t cap) {
    const std::int64_t n = family_order(spec);
    if (n > static_cast<std::int64_t>(cap))
        throw CapExceeded(to_string(spec) + " has " + std::to_string(n) + " vertices, above the cap of " +
                          std::to_string(cap));

    switch (spec.family) {
    case Family::hypercube: return generate(FamilySpec::hamming(spec.first, 2), cap);
    case Family::hamming: {
        const auto d = static_cast<int>(spec.first);
        const auto q = static_cast<std::size_t>(spec.second);
        std::vector<std::vector<Vertex>> nbrs(static_cast<std::size_t>(n));
        for (std::size_t v = 0; v < nbrs.size(); ++v) {
            nbrs[v].reserve(static_cast<std::size_t>(d) * (q - 1));
            std::size_t place = 1;  // q^(position from the right)
            for (int i = 0; i < d; ++i, place *= q) {
                const std::size_t digit = (v / place) % q;
                for (std::size_t x = 0; x < q; ++x)
                    if (x != digit) nbrs[v].push_back(static_cast<Vertex>(v - digit * place + x * place));
            }
        }
        return Graph::from_neighbors(std::move(nbrs));
    }
    case Family::johnson:
        return from_subsets(subsets(static_cast<int>(spec.first), static_cast<int>(spec.second)),
                            static_cast<int>(spec.first), true);
    case Family::odd: {
        const int universe = static_cast<int>(2 * spec.first - 1);
        return from_subsets(subsets(universe, static_cast<int>(spec.first - 1)), universe, false);
    }
    case Family::crown: {
        const auto side = static_cast<Vertex>(spec.first + 1);
        std::vector<Edge> e;
        for (Vertex i = 0; i < side; ++i)
            for (Vertex j = 0; j < side; ++j)
                if (i != j) e.emplace_back(i, side + j);
        return Graph(2 * side, e);
    }
    }
    throw PreconditionError("unsupported family");
}

} // namespace skind

#include "skind/graph6.hpp"

#include <fstream>

#include "skind/error.hpp"

namespace skind {

namespace {

constexpr char kBias = 63;

int sextet(char c) {
    const auto u = static_cast<unsigned char>(c);
    if (u < 63 || u > 126) throw ParseError("graph6 byte " + std::to_string(u) + " outside 63..126");
    return u - kBias;
}

} // namespace

Graph parse_graph6(std::string_view text) {
    constexpr std::string_view header = ">>graph6<<";
    if (text.substr(0, header.size()) == header) text.remove_prefix(header.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) text.remove_suffix(1);
    if (text.empty()) throw ParseError("empty graph6 string");

    std::size_t pos = 0;
    std::uint64_t n = 0;
    if (text[0] != '~') {
        n = static_cast<std::uint64_t>(sextet(text[0]));
        pos = 1;
    } else if (text.size() >= 2 && text[1] != '~') {
        if (text.size() < 4) throw ParseError("truncated graph6 size header");
        for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | static_cast<std::uint64_t>(sextet(text[i]));
        if (n < 63) throw ParseError("graph6 long header used for n < 63");
        pos = 4;
    } else {
        if (text.size() < 8) throw ParseError("truncated graph6 size header");
        for (std::size_t i = 2; i <= 7; ++i) n = (n << 6) | static_cast<std::uint64_t>(sextet(text[i]));
        if (n < 258048) throw ParseError("graph6 extra-long header used for n < 258048");
        pos = 8;
    }
    if (n > kGraph6MaxOrder) throw CapExceeded("graph6 order " + std::to_string(n) + " too large");

    const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::uint64_t bytes = (bits + 5) / 6;
    if (text.size() - pos != bytes)
        throw ParseError("graph6 body has " + std::to_string(text.size() - pos) + " bytes, expected " +
                         std::to_string(bytes));

    std::vector<Edge> edges;
    std::uint64_t k = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i, ++k) {
            const int byte = sextet(text[pos + k / 6]);
            if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
        }
    for (; k < bytes * 6; ++k) {
        const int byte = sextet(text[pos + k / 6]);
        if ((byte >> (5 - k % 6)) & 1) throw ParseError("nonzero graph6 padding bits");
    }
    return Graph(static_cast<std::size_t>(n), edges);
}

std::string emit_graph6(const Graph& g) {
    const std::uint64_t n = g.order();
    std::string out;
    if (n < 63) {
        out.push_back(static_cast<char>(n + kBias));
    } else if (n < 258048) {
        out.push_back('~');
        for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63U) + kBias));
    } else {
        out += "~~";
        for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63U) + kBias));
    }
    int acc = 0;
    int filled = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = 0;
                filled = 0;
            }
        }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
    return out;
}

std::vector<Graph> read_graph6_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
        out.push_back(parse_graph6(line));
    }
    return out;
}

} // namespace skind

#include "skind/codes.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "skind/error.hpp"
#include "skind/families.hpp"

namespace skind {

WordSet::WordSet(int q, std::size_t d) : q_(q), d_(d)
{
    if (q < 2 || q > 36)
        throw PreconditionError("alphabet size must be in [2, 36]");
}

void WordSet::add(std::span<const std::uint8_t> w)
{
    if (w.size() != d_)
        throw PreconditionError("word length " + std::to_string(w.size()) + " differs from " + std::to_string(d_));
    for (auto s : w)
        if (s >= q_)
            throw PreconditionError("symbol " + std::to_string(s) + " outside alphabet of size " + std::to_string(q_));
    symbols_.insert(symbols_.end(), w.begin(), w.end());
    if (d_ == 0)
        ++count_;
}

bool WordSet::distinct() const
{
    std::set<std::vector<std::uint8_t>> seen;
    for (std::size_t i = 0; i < size(); ++i) {
        auto w = word(i);
        if (!seen.emplace(w.begin(), w.end()).second)
            return false;
    }
    return true;
}

namespace {

std::vector<std::uint64_t> pack(const WordSet& w, std::size_t& stride)
{
    stride = (w.length() + 63) / 64;
    std::vector<std::uint64_t> out(w.size() * stride, 0);
    for (std::size_t i = 0; i < w.size(); ++i) {
        auto word = w.word(i);
        for (std::size_t j = 0; j < word.size(); ++j)
            if (word[j])
                out[i * stride + j / 64] |= std::uint64_t{1} << (j % 64);
    }
    return out;
}

void require_binary(const WordSet& w, const char* what)
{
    if (w.q() != 2)
        throw PreconditionError(std::string(what) + " needs a binary word set");
}

} // namespace

std::size_t min_distance(const WordSet& w)
{
    if (w.size() < 2)
        throw PreconditionError("minimum distance needs at least two words");
    std::size_t best = w.length() + 1;
    if (w.q() == 2) {
        std::size_t stride = 0;
        auto bits = pack(w, stride);
        for (std::size_t a = 0; a < w.size(); ++a)
            for (std::size_t b = a + 1; b < w.size(); ++b) {
                std::size_t dist = 0;
                for (std::size_t k = 0; k < stride; ++k)
                    dist += std::popcount(bits[a * stride + k] ^ bits[b * stride + k]);
                best = std::min(best, dist);
            }
        return best;
    }
    for (std::size_t a = 0; a < w.size(); ++a)
        for (std::size_t b = a + 1; b < w.size(); ++b) {
            auto x = w.word(a), y = w.word(b);
            std::size_t dist = 0;
            for (std::size_t j = 0; j < x.size(); ++j)
                dist += x[j] != y[j];
            best = std::min(best, dist);
        }
    return best;
}

bool check_balanced(const WordSet& w)
{
    require_binary(w, "balance check");
    if (w.empty() || w.size() % 2 != 0)
        return false;
    for (std::size_t j = 0; j < w.length(); ++j) {
        std::size_t ones = 0;
        for (std::size_t i = 0; i < w.size(); ++i)
            ones += w.word(i)[j];
        if (2 * ones != w.size())
            return false;
    }
    return true;
}

WordSet construct_repetition(std::size_t d, int q)
{
    if (d < 4)
        throw PreconditionError("repetition code needs d >= 4");
    WordSet out(q, d);
    for (int s = 0; s < q; ++s)
        out.add(std::vector<std::uint8_t>(d, static_cast<std::uint8_t>(s)));
    return out;
}

bool is_prime(std::int64_t q)
{
    if (q < 2)
        return false;
    for (std::int64_t p = 2; p * p <= q; ++p)
        if (q % p == 0)
            return false;
    return true;
}

MOLSFamily mols_family(int q, int l)
{
    if (!is_prime(q))
        throw PreconditionError("MOLS construction needs a prime order, got " + std::to_string(q));
    if (l < 1 || l > q - 1)
        throw PreconditionError("number of squares must be in [1, q-1]");
    if (q > 255)
        throw PreconditionError("order too large");
    MOLSFamily f;
    f.q = q;
    for (int k = 1; k <= l; ++k) {
        std::vector<std::uint8_t> sq(static_cast<std::size_t>(q) * q);
        for (int i = 0; i < q; ++i)
            for (int j = 0; j < q; ++j)
                sq[i * q + j] = static_cast<std::uint8_t>((k * i + j) % q);
        f.squares.push_back(std::move(sq));
    }
    return f;
}

bool check_mols(const MOLSFamily& f)
{
    const std::size_t q = f.q;
    for (std::size_t k = 0; k < f.squares.size(); ++k) {
        for (std::size_t i = 0; i < q; ++i) {
            std::vector<bool> row(q, false), col(q, false);
            for (std::size_t j = 0; j < q; ++j) {
                auto r = f.at(k, i, j), c = f.at(k, j, i);
                if (r >= q || c >= q || row[r] || col[c])
                    return false;
                row[r] = col[c] = true;
            }
        }
        for (std::size_t m = k + 1; m < f.squares.size(); ++m) {
            std::vector<bool> pairs(q * q, false);
            for (std::size_t i = 0; i < q; ++i)
                for (std::size_t j = 0; j < q; ++j) {
                    std::size_t p = f.at(k, i, j) * q + f.at(m, i, j);
                    if (pairs[p])
                        return false;
                    pairs[p] = true;
                }
        }
    }
    return true;
}

WordSet construct_mols_code(int q, int l)
{
    if (!is_prime(q))
        throw PreconditionError("MOLS code needs a prime q, got " + std::to_string(q));
    if (l < 3 || l > q - 1)
        throw PreconditionError("MOLS code needs 3 <= l <= q-1");
    MOLSFamily f = mols_family(q, l);
    WordSet out(q, static_cast<std::size_t>(l) + 2);
    std::vector<std::uint8_t> w(l + 2);
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) {
            w[0] = static_cast<std::uint8_t>(i);
            w[1] = static_cast<std::uint8_t>(j);
            for (int k = 0; k < l; ++k)
                w[2 + k] = f.at(k, i, j);
            out.add(w);
        }
    return out;
}

WordSet construct_binary_double(const WordSet& u, const WordSet& v)
{
    require_binary(u, "doubling");
    require_binary(v, "doubling");
    const std::size_t d1 = u.length(), d2 = v.length();
    if (d1 > d2)
        throw PreconditionError("doubling needs d1 <= d2");
    if (u.empty() || v.empty())
        throw PreconditionError("doubling needs nonempty sets");
    if ((u.size() > 1 && min_distance(u) < 4) || (v.size() > 1 && min_distance(v) < 4))
        throw PreconditionError("doubling inputs must have minimum distance >= 4");
    WordSet out(2, d1 + d2);
    std::vector<std::uint8_t> w(d1 + d2);
    for (std::size_t j = 0; j < d1; ++j)
        for (std::size_t a = 0; a < u.size(); ++a)
            for (std::size_t b = 0; b < v.size(); ++b) {
                std::copy(u.word(a).begin(), u.word(a).end(), w.begin());
                std::copy(v.word(b).begin(), v.word(b).end(), w.begin() + d1);
                w[j] ^= 1;
                w[d1 + j] ^= 1;
                out.add(w);
            }
    return out;
}

WordSet construct_doubled(int r)
{
    if (r < 1 || r > 6)
        throw PreconditionError("doubling construction supports 1 <= r <= 6");
    WordSet w(2, 2);
    w.add(std::vector<std::uint8_t>{0, 0});
    for (int i = 1; i < r; ++i)
        w = construct_binary_double(w, w);
    return w;
}

WordSet puncture(const WordSet& w, std::size_t column)
{
    require_binary(w, "puncturing");
    if (column >= w.length())
        throw PreconditionError("column out of range");
    if (w.size() % 2 != 0)
        throw PreconditionError("puncturing needs an even number of words");
    std::size_t ones = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        ones += w.word(i)[column];
    if (2 * ones != w.size())
        throw PreconditionError("column " + std::to_string(column) + " is not balanced");
    WordSet out(2, w.length() - 1);
    std::vector<std::uint8_t> buf;
    for (std::size_t i = 0; i < w.size(); ++i) {
        auto word = w.word(i);
        if (!word[column])
            continue;
        buf.assign(word.begin(), word.end());
        buf.erase(buf.begin() + static_cast<std::ptrdiff_t>(column));
        out.add(buf);
    }
    return out;
}

std::size_t first_balanced_column(const WordSet& w)
{
    require_binary(w, "balance check");
    for (std::size_t j = 0; j < w.length(); ++j) {
        std::size_t ones = 0;
        for (std::size_t i = 0; i < w.size(); ++i)
            ones += w.word(i)[j];
        if (!w.empty() && 2 * ones == w.size())
            return j;
    }
    return w.length();
}

WordSet construct_hamconst(std::size_t d_target, int r)
{
    if (r < 1 || r > 6)
        throw PreconditionError("r must be in [1, 6]");
    const std::size_t d = std::size_t{1} << r;
    if (d_target > d || 2 * (d - d_target) > d - 2)
        throw PreconditionError("target length must satisfy 0 <= 2^r - d_target <= (2^r - 2)/2");
    WordSet w = construct_doubled(r);
    for (std::size_t i = 0; i < d - d_target; ++i) {
        std::size_t col = first_balanced_column(w);
        if (col == w.length())
            throw PreconditionError("no balanced column left to puncture");
        w = puncture(w, col);
    }
    return w;
}

std::vector<Vertex> hamming_vertices(const WordSet& w)
{
    std::vector<Vertex> out;
    out.reserve(w.size());
    for (std::size_t i = 0; i < w.size(); ++i)
        out.push_back(static_cast<Vertex>(hamming_index(w.word(i), w.q())));
    return out;
}

namespace {

char symbol_char(std::uint8_t s)
{
    return s < 10 ? static_cast<char>('0' + s) : static_cast<char>('a' + (s - 10));
}

int char_symbol(char c)
{
    if (c >= '0' && c <= '9')
        return c - '0';
    if (c >= 'a' && c <= 'z')
        return c - 'a' + 10;
    return -1;
}

} // namespace

void write_wordset(std::ostream& out, const WordSet& w)
{
    out << w.q() << ' ' << w.length() << '\n';
    std::string line(w.length(), '0');
    for (std::size_t i = 0; i < w.size(); ++i) {
        auto word = w.word(i);
        for (std::size_t j = 0; j < word.size(); ++j)
            line[j] = symbol_char(word[j]);
        out << line << '\n';
    }
}

WordSet read_wordset(std::istream& in)
{
    std::string header;
    if (!std::getline(in, header))
        throw ParseError("word set: missing header");
    std::istringstream hs(header);
    long long q = 0, d = -1;
    std::string extra;
    if (!(hs >> q >> d) || (hs >> extra))
        throw ParseError("word set: header must be \"q d\"");
    if (q < 2 || q > 36 || d < 0)
        throw ParseError("word set: header values out of range");
    WordSet w(static_cast<int>(q), static_cast<std::size_t>(d));
    std::string line;
    std::size_t lineno = 1;
    std::vector<std::uint8_t> buf;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        if (line.size() != static_cast<std::size_t>(d))
            throw ParseError("word set: line " + std::to_string(lineno) + " has wrong length");
        buf.clear();
        for (char c : line) {
            int s = char_symbol(c);
            if (s < 0 || s >= q)
                throw ParseError("word set: line " + std::to_string(lineno) + " has a bad symbol");
            buf.push_back(static_cast<std::uint8_t>(s));
        }
        w.add(buf);
    }
    if (!w.distinct())
        throw ParseError("word set: repeated word");
    return w;
}

WordSet read_wordset_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open " + path);
    return read_wordset(in);
}

void write_wordset_file(const std::string& path, const WordSet& w)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error("cannot write " + path);
    write_wordset(out, w);
}

} // namespace skind

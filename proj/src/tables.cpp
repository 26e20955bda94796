#include "skind/tables.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <ostream>

#include "skind/codes.hpp"
#include "skind/error.hpp"
#include "skind/exact.hpp"
#include "skind/graph6.hpp"

#ifndef SKIND_CORPUS_DIR
#define SKIND_CORPUS_DIR "corpus"
#endif

namespace skind {

std::string default_corpus_dir()
{
    if (const char* env = std::getenv("SPECTRAL_KIND_CORPUS"); env && *env)
        return env;
    return SKIND_CORPUS_DIR;
}

std::string format_fixed(long double v, int places)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*Lf", places, v);
    std::string s = buf;
    if (s == "-0.0000")
        s = "0.0000";
    return s;
}

namespace {

struct Oracle {
    std::optional<std::size_t> alpha;
    std::string source;
};

Oracle run_oracle(const Graph& g, std::optional<std::size_t> upper, bool vertex_transitive,
                  std::optional<std::size_t> reported, const TableOptions& opts)
{
    if (opts.oracle && g.order() <= std::min(opts.oracle_max_order, kExactCap)) {
        ExactBudget b;
        b.max_seconds = opts.oracle_seconds;
        b.known_upper = upper;
        b.vertex_transitive = vertex_transitive;
        ExactResult r = exact_alpha_k(g, 3, b);
        return {r.alpha_k, r.timed_out ? "oracle-timeout" : "oracle"};
    }
    if (reported)
        return {reported, "reported"};
    return {std::nullopt, "none"};
}

std::string opt_size(const std::optional<std::size_t>& v)
{
    return v ? std::to_string(*v) : std::string("-");
}

std::string opt_value(const std::optional<long double>& v)
{
    return v ? format_fixed(*v) : std::string("-");
}

// Known alpha_3 values for graphs too large to solve here.
std::optional<std::size_t> reported_ncube(int d)
{
    static const std::size_t v[] = {1, 1, 2, 2, 4, 8, 16, 20};
    if (d >= 2 && d <= 9)
        return v[d - 2];
    return std::nullopt;
}

std::optional<std::size_t> reported_johnson(int k)
{
    static const std::size_t v[] = {1, 1, 2, 2, 4, 8};
    if (k >= 2 && k <= 7)
        return v[k - 2];
    return std::nullopt;
}

} // namespace

std::vector<NcubeRow> table_ncube(int max_d, const TableOptions& opts)
{
    if (max_d < 2 || max_d > 16)
        throw PreconditionError("max-d must be in [2, 16]");
    std::vector<NcubeRow> rows;
    for (int d = 2; d <= max_d; ++d) {
        NcubeRow row;
        row.d = d;
        const FamilySpec spec = FamilySpec::hypercube(d);
        // Q_2 has only three distinct eigenvalues; the formula is still defined.
        row.bound = optimal_k3_bound(family_spectrum_input(spec)).report;
        int r = 1;
        while ((1 << r) < d)
            ++r;
        row.construction = construct_hamconst(static_cast<std::size_t>(d), r).size();
        if (opts.oracle && (std::size_t{1} << d) <= std::min(opts.oracle_max_order, kExactCap)) {
            Oracle o = run_oracle(generate(spec), static_cast<std::size_t>(row.bound.floor_value), true,
                                  reported_ncube(d), opts);
            row.alpha3 = o.alpha;
            row.alpha3_source = o.source;
        } else {
            row.alpha3 = reported_ncube(d);
            row.alpha3_source = row.alpha3 ? "reported" : "none";
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_tsv(std::ostream& out, const std::vector<NcubeRow>& rows)
{
    out << "d\tbound\tfloor\tconstruction\talpha3\talpha3_source\n";
    for (const auto& r : rows)
        out << r.d << '\t' << format_fixed(r.bound.value) << '\t' << r.bound.floor_value << '\t' << r.construction
            << '\t' << opt_size(r.alpha3) << '\t' << r.alpha3_source << '\n';
}

std::vector<JohnsonRow> table_johnson(int max_k, const TableOptions& opts)
{
    if (max_k < 2 || max_k > 31)
        throw PreconditionError("max-k must be in [2, 31]");
    std::vector<JohnsonRow> rows;
    for (int k = 2; k <= max_k; ++k) {
        JohnsonRow row;
        row.k = k;
        const FamilySpec spec = FamilySpec::johnson(2 * k, k);
        row.bound = optimal_k3_bound(family_spectrum_input(spec)).report;
        const auto n = static_cast<std::size_t>(family_order(spec));
        if (opts.oracle && n <= std::min(opts.oracle_max_order, kExactCap)) {
            Oracle o = run_oracle(generate(spec), static_cast<std::size_t>(row.bound.floor_value), true,
                                  reported_johnson(k), opts);
            row.alpha3 = o.alpha;
            row.alpha3_source = o.source;
        } else {
            row.alpha3 = reported_johnson(k);
            row.alpha3_source = row.alpha3 ? "reported" : "none";
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_tsv(std::ostream& out, const std::vector<JohnsonRow>& rows)
{
    out << "graph\ttheta_s\ttheta_s1\tbound\tfloor\talpha3\talpha3_source\n";
    for (const auto& r : rows)
        out << "J(" << 2 * r.k << "," << r.k << ")\t" << format_fixed(*r.bound.witnesses.theta_s, 0) << '\t'
            << format_fixed(*r.bound.witnesses.theta_s1, 0) << '\t' << format_fixed(r.bound.value) << '\t'
            << r.bound.floor_value << '\t' << opt_size(r.alpha3) << '\t' << r.alpha3_source << '\n';
}

const std::vector<CompareEntry>& compare_entries()
{
    static const std::vector<CompareEntry> entries = {
        {"johnson_14_7", FamilySpec::johnson(14, 7), 8},
        {"cube_8", FamilySpec::hypercube(8), 16},
        {"odd_6", FamilySpec::odd(6), 15},
        {"balaban_10cage", std::nullopt, 9},
        {"frucht", std::nullopt, 2},
        {"moebius_kantor", std::nullopt, 2},
        {"bidiakis_cube", std::nullopt, 1},
        {"gosset", std::nullopt, 1},
        {"gray", std::nullopt, 9},
        {"nauru", std::nullopt, 4},
        {"pappus", std::nullopt, 3},
        {"harries", std::nullopt, 10},
        {"heawood", std::nullopt, 1},
        {"coxeter", std::nullopt, 4},
        {"desargues", std::nullopt, 2},
        {"tietze", std::nullopt, 1},
        {"durer", std::nullopt, 2},
        {"truncated_tetrahedron", std::nullopt, 1},
        {"dyck", std::nullopt, 4},
        {"tutte_12cage", std::nullopt, 21},
        {"tutte_coxeter", std::nullopt, 5},
        {"tutte", std::nullopt, 6},
        {"folkman", std::nullopt, 2},
        {"foster", std::nullopt, 15},
        {"mcgee", std::nullopt, 2},
        {"franklin", std::nullopt, 1},
        {"hexahedron", std::nullopt, 1},
        {"dodecahedron", std::nullopt, 2},
        {"icosahedron", std::nullopt, 1},
    };
    return entries;
}

std::vector<CompareRow> table_compare(const std::string& corpus_dir, const TableOptions& opts)
{
    std::vector<CompareRow> rows;
    for (const auto& e : compare_entries()) {
        CompareRow row;
        row.name = e.name;
        Graph g;
        BoundInput in;
        try {
            if (e.family) {
                g = generate(*e.family);
                in = make_input(g, analytic_spectrum(*e.family));
            } else {
                const auto path = std::filesystem::path(corpus_dir) / (e.name + ".g6");
                if (!std::filesystem::exists(path)) {
                    row.missing = true;
                    row.error = "missing " + path.string();
                    rows.push_back(std::move(row));
                    continue;
                }
                auto graphs = read_graph6_file(path);
                if (graphs.empty())
                    throw ParseError("empty graph6 file " + path.string());
                g = std::move(graphs.front());
                in = make_input(g);
            }
            row.n = g.order();
            row.acf = acf_bound(in, 3).value;
            row.fiol = fiol_k3_bound(in, FiolDiagonal::max_diagonal).value;
            OptimalK3 o = optimal_k3_bound(in);
            row.ours = o.report.value;
            Oracle orc = run_oracle(g, static_cast<std::size_t>(o.report.floor_value), e.family.has_value(),
                                    e.reported_alpha3, opts);
            row.alpha3 = orc.alpha;
            row.alpha3_source = orc.source;
        } catch (const Error& ex) {
            row.error = ex.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_tsv(std::ostream& out, const std::vector<CompareRow>& rows)
{
    out << "graph\tn\tacf\tfiol\tours\talpha3\talpha3_source\tnote\n";
    for (const auto& r : rows)
        out << r.name << '\t' << (r.missing ? std::string("-") : std::to_string(r.n)) << '\t' << opt_value(r.acf)
            << '\t' << opt_value(r.fiol) << '\t' << opt_value(r.ours) << '\t' << opt_size(r.alpha3) << '\t'
            << (r.alpha3_source.empty() ? "none" : r.alpha3_source) << '\t' << (r.error.empty() ? "-" : r.error)
            << '\n';
}

} // namespace skind

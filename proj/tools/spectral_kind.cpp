// spectral-kind: bounds, exact values and constructions for the
// k-independence number of regular graphs.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "skind/bounds.hpp"
#include "skind/codes.hpp"
#include "skind/error.hpp"
#include "skind/exact.hpp"
#include "skind/families.hpp"
#include "skind/graph6.hpp"
#include "skind/report_json.hpp"
#include "skind/tables.hpp"
#include "skind/walks.hpp"

using namespace skind;
using nlohmann::json;

namespace {

constexpr int kExitPrecondition = 2;
constexpr int kExitTimeout = 3;
constexpr int kExitVerify = 4;

struct InputOpts {
    std::string family;
    std::string graph6;
};

struct NamedGraph {
    std::string name;
    std::optional<FamilySpec> spec;
    std::optional<Graph> graph;  // filled lazily for families
};

void add_input_flags(CLI::App* cmd, InputOpts& in)
{
    auto* f = cmd->add_option("--family", in.family, "family spec, e.g. hamming:d=8,q=2");
    auto* g = cmd->add_option("--graph6", in.graph6, "graph6 file (one graph per line)");
    f->excludes(g);
    g->excludes(f);
}

std::vector<NamedGraph> load_inputs(const InputOpts& in)
{
    if (in.family.empty() == in.graph6.empty())
        throw PreconditionError("give exactly one of --family or --graph6");
    std::vector<NamedGraph> out;
    if (!in.family.empty()) {
        FamilySpec spec = parse_family(in.family);
        out.push_back({to_string(spec), spec, std::nullopt});
        return out;
    }
    auto graphs = read_graph6_file(in.graph6);
    if (graphs.empty())
        throw ParseError("no graphs in " + in.graph6);
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        std::string name = in.graph6;
        if (graphs.size() > 1)
            name += "#" + std::to_string(i);
        out.push_back({name, std::nullopt, std::move(graphs[i])});
    }
    return out;
}

const Graph& graph_of(NamedGraph& ng)
{
    if (!ng.graph)
        ng.graph = generate(*ng.spec);
    return *ng.graph;
}

BoundReport closed_form_for(const FamilySpec& s)
{
    switch (s.family) {
    case Family::hamming:
        return closed_form_hamming(s.first, s.second);
    case Family::hypercube:
        return closed_form_hamming(s.first, 2);
    case Family::odd:
        return closed_form_odd(s.first);
    case Family::johnson:
        if (s.first == 2 * s.second)
            return closed_form_johnson_2k(s.second);
        break;
    case Family::crown:
        break;
    }
    throw PreconditionError("no closed form for " + to_string(s) + " (hamming, hypercube, odd and johnson:n=2k,k only)");
}

struct MethodSpec {
    std::string name;
    int k = 0;
};

MethodSpec parse_method(const std::string& text)
{
    auto with_k = [&](const std::string& prefix) -> std::optional<int> {
        if (text.rfind(prefix, 0) != 0)
            return std::nullopt;
        std::string rest = text.substr(prefix.size());
        std::size_t pos = 0;
        int k = 0;
        try {
            k = std::stoi(rest, &pos);
        } catch (const std::exception&) {
            throw ParseError("bad method " + text);
        }
        if (pos != rest.size())
            throw ParseError("bad method " + text);
        return k;
    };
    if (text == "optimal-k3" || text == "fiol-k3" || text == "hoffman" || text == "closed-form")
        return {text, 3};
    if (auto k = with_k("acf:k="))
        return {"acf", *k};
    if (auto k = with_k("fiol-set:k="))
        return {"fiol-set", *k};
    throw ParseError("unknown method " + text +
                     " (optimal-k3, fiol-k3, fiol-set:k=K, acf:k=K, hoffman, closed-form)");
}

struct BoundOpts {
    InputOpts input;
    std::string method = "optimal-k3";
    bool spectrum_only = false;
    bool max_diagonal = false;
    double group_tol = kDefaultGroupTol;
};

BoundInput input_for(NamedGraph& ng, std::size_t walk_len, const BoundOpts& o)
{
    if (ng.spec) {
        if (o.spectrum_only) {
            if (walk_len > 3)
                throw PreconditionError("spectrum-only mode carries closed walks up to length 3 only");
            return family_spectrum_input(*ng.spec);
        }
        return make_input(graph_of(ng), analytic_spectrum(*ng.spec), walk_len);
    }
    if (o.spectrum_only)
        throw PreconditionError("--spectrum-only needs --family");
    return make_input(graph_of(ng), walk_len, o.group_tol);
}

Spectrum spectrum_for(NamedGraph& ng, const BoundOpts& o)
{
    if (ng.spec)
        return analytic_spectrum(*ng.spec);
    return eigen_spectrum(graph_of(ng), o.group_tol);
}

BoundReport compute_bound(NamedGraph& ng, const MethodSpec& m, const BoundOpts& o)
{
    if (m.name == "hoffman")
        return hoffman_bound(spectrum_for(ng, o));
    if (m.name == "fiol-set")
        return fiol_index_set_bound(spectrum_for(ng, o), m.k);
    if (m.name == "closed-form") {
        if (!ng.spec)
            throw PreconditionError("closed-form needs --family");
        return closed_form_for(*ng.spec);
    }
    if (m.name == "acf") {
        if (m.k < 2)
            throw PreconditionError("ACF bound needs k >= 2");
        return acf_bound(input_for(ng, std::max(3, m.k), o), m.k);
    }
    if (m.name == "fiol-k3")
        return fiol_k3_bound(input_for(ng, 3, o),
                             o.max_diagonal ? FiolDiagonal::max_diagonal : FiolDiagonal::walk_regular);
    return optimal_k3_bound(input_for(ng, 3, o)).report;
}

std::string opt_num(const std::optional<long double>& v)
{
    return v ? format_fixed(*v, 6) : std::string("-");
}

void print_tsv_header()
{
    std::cout << "input\tmethod\tvalue\tfloor\tb\tc\ttheta_s\ttheta_s1\ttheta_d\ttau\tdelta\texact\n";
}

void print_report(const std::string& name, const BoundReport& r, const std::string& format)
{
    if (format == "json") {
        json j = r;
        j["input"] = name;
        std::cout << j.dump() << '\n';
    } else if (format == "tsv") {
        std::cout << name << '\t' << r.method_label() << '\t' << format_fixed(r.value, 6) << '\t' << r.floor_value
                  << '\t' << (r.poly ? format_fixed(r.poly->b, 6) : "-") << '\t'
                  << (r.poly ? format_fixed(r.poly->c, 6) : "-") << '\t' << opt_num(r.witnesses.theta_s) << '\t'
                  << opt_num(r.witnesses.theta_s1) << '\t' << opt_num(r.witnesses.theta_d) << '\t'
                  << opt_num(r.witnesses.tau) << '\t'
                  << (r.witnesses.delta ? std::to_string(*r.witnesses.delta) : "-") << '\t'
                  << (r.spectrum_exact ? "true" : "false") << '\n';
    } else {
        std::cout << name << "  " << r.method_label() << ": " << format_fixed(r.value, 6);
        if (r.exact)
            std::cout << " (= " << to_string(*r.exact) << ")";
        std::cout << "  floor " << r.floor_value << '\n';
        if (r.poly)
            std::cout << "  p(x) = x^3 + (" << format_fixed(r.poly->b, 6) << ")x^2 + (" << format_fixed(r.poly->c, 6)
                      << ")x\n";
        const auto& w = r.witnesses;
        if (w.theta_s)
            std::cout << "  theta_s " << opt_num(w.theta_s) << "  theta_s+1 " << opt_num(w.theta_s1) << "  theta_d "
                      << opt_num(w.theta_d) << "  tau " << opt_num(w.tau) << '\n';
        if (w.delta)
            std::cout << "  delta " << *w.delta << '\n';
        if (r.degenerate)
            std::cout << "  note: theta_s+1 coincides with theta_d or s was clamped\n";
    }
}

int cmd_bound(const BoundOpts& o, const std::string& format)
{
    MethodSpec m = parse_method(o.method);
    auto inputs = load_inputs(o.input);
    if (format == "tsv")
        print_tsv_header();
    for (auto& ng : inputs)
        print_report(ng.name, compute_bound(ng, m, o), format);
    return 0;
}

struct ExactOpts {
    InputOpts input;
    int k = 3;
    std::uint64_t max_nodes = 100'000'000;
    double max_seconds = 60.0;
    bool vertex_transitive = false;
};

std::vector<BoundReport> bounds_for_k(NamedGraph& ng, int k)
{
    BoundOpts o;
    std::vector<MethodSpec> methods;
    if (k == 1)
        methods = {{"hoffman", 1}, {"fiol-set", 1}};
    else if (k == 2)
        methods = {{"acf", 2}, {"fiol-set", 2}};
    else if (k == 3)
        methods = {{"optimal-k3", 3}, {"fiol-k3", 3}, {"acf", 3}, {"fiol-set", 3}};
    else
        methods = {{"acf", k}, {"fiol-set", k}};
    o.max_diagonal = true;
    std::vector<BoundReport> out;
    for (const auto& m : methods) {
        try {
            out.push_back(compute_bound(ng, m, o));
        } catch (const PreconditionError&) {
            // Not applicable to this graph; skipped.
        }
    }
    return out;
}

int cmd_exact(const ExactOpts& o, const std::string& format)
{
    auto inputs = load_inputs(o.input);
    int rc = 0;
    for (auto& ng : inputs) {
        const Graph& g = graph_of(ng);
        ExactBudget b;
        b.max_nodes = o.max_nodes;
        b.max_seconds = o.max_seconds;
        b.vertex_transitive = o.vertex_transitive || ng.spec.has_value();
        ExactResult r = exact_alpha_k(g, o.k, b);
        if (!verify_independent(g, r.witness, o.k))
            throw Error("internal error: witness is not " + std::to_string(o.k) + "-independent");
        std::vector<BoundReport> bounds;
        if (g.degree() && is_connected(g))
            bounds = bounds_for_k(ng, o.k);
        bool all_ok = true;
        for (const auto& br : bounds)
            all_ok = all_ok && br.floor_value >= static_cast<std::int64_t>(r.alpha_k);
        if (format == "json") {
            json j = r;
            j["input"] = ng.name;
            json bj = json::array();
            for (const auto& br : bounds)
                bj.push_back({{"method", br.method_label()},
                              {"floor", br.floor_value},
                              {"ok", br.floor_value >= static_cast<std::int64_t>(r.alpha_k)}});
            j["bounds"] = bj;
            j["bounds_ok"] = all_ok;
            std::cout << j.dump() << '\n';
        } else {
            std::cout << ng.name << "  alpha_" << o.k << (r.timed_out ? " >= " : " = ") << r.alpha_k << '\n';
            std::cout << "  witness";
            for (auto v : r.witness)
                std::cout << ' ' << v;
            std::cout << "\n  nodes " << r.nodes_explored << (r.timed_out ? "  (budget exhausted)" : "") << '\n';
            for (const auto& br : bounds)
                std::cout << "  " << br.method_label() << " floor " << br.floor_value
                          << (br.floor_value >= static_cast<std::int64_t>(r.alpha_k) ? "  ok" : "  VIOLATED") << '\n';
            std::cout << "  bounds_ok " << (all_ok ? "true" : "false") << '\n';
        }
        if (!all_ok)
            rc = kExitVerify;
        else if (r.timed_out && rc == 0)
            rc = kExitTimeout;
    }
    return rc;
}

struct TableOpts {
    std::string name;
    int max_d = 9;
    int max_k = 7;
    std::string corpus;
    bool no_oracle = false;
    double oracle_seconds = 60.0;
    std::optional<std::size_t> oracle_max_n;
};

int cmd_table(const TableOpts& o)
{
    TableOptions opts;
    opts.oracle = !o.no_oracle;
    opts.oracle_seconds = o.oracle_seconds;
    if (o.name == "ncube") {
        opts.oracle_max_order = o.oracle_max_n.value_or(512);
        write_tsv(std::cout, table_ncube(o.max_d, opts));
    } else if (o.name == "johnson") {
        opts.oracle_max_order = o.oracle_max_n.value_or(512);
        write_tsv(std::cout, table_johnson(o.max_k, opts));
    } else {
        opts.oracle_max_order = o.oracle_max_n.value_or(128);
        std::string dir = o.corpus.empty() ? default_corpus_dir() : o.corpus;
        auto rows = table_compare(dir, opts);
        for (const auto& r : rows)
            if (r.missing)
                std::cerr << "notice: " << r.name << " skipped (" << r.error << ")\n";
        write_tsv(std::cout, rows);
    }
    return 0;
}

void emit_wordset(const WordSet& w, const std::string& out)
{
    std::ostream* summary = &std::cout;
    if (out.empty()) {
        write_wordset(std::cout, w);
        summary = &std::cerr;
    } else {
        write_wordset_file(out, w);
    }
    *summary << "size " << w.size() << '\n';
    if (w.size() >= 2)
        *summary << "min_distance " << min_distance(w) << '\n';
    else
        *summary << "min_distance -\n";
}

struct QuotientOpts {
    InputOpts input;
    std::string words;
    std::vector<Vertex> vertices;
};

void print_matrix(const char* label, const QuotientMatrix& q)
{
    std::cout << label << "\n  [" << format_fixed(q.b11, 4) << ", " << format_fixed(q.b12, 4) << "]\n  ["
              << format_fixed(q.b21, 4) << ", " << format_fixed(q.b22, 4) << "]\n";
}

int cmd_quotient(const QuotientOpts& o, const std::string& format)
{
    auto inputs = load_inputs(o.input);
    if (inputs.size() != 1)
        throw PreconditionError("quotient takes a single graph");
    if (o.words.empty() == o.vertices.empty())
        throw PreconditionError("give exactly one of --words or --vertices");
    NamedGraph& ng = inputs.front();
    const Graph& g = graph_of(ng);
    std::vector<Vertex> set = o.vertices;
    if (!o.words.empty()) {
        WordSet w = read_wordset_file(o.words);
        if (!ng.spec || (ng.spec->family != Family::hamming && ng.spec->family != Family::hypercube))
            throw PreconditionError("--words needs a hamming or hypercube family");
        const std::int64_t d = ng.spec->first;
        const std::int64_t q = ng.spec->family == Family::hamming ? ng.spec->second : 2;
        if (static_cast<std::int64_t>(w.length()) != d || w.q() != q)
            throw PreconditionError("word set parameters do not match the family");
        set = hamming_vertices(w);
    }
    BoundOpts bo;
    BoundInput in = input_for(ng, 3, bo);
    OptimalK3 opt = optimal_k3_bound(in);
    Equitability e = equitability_check(g, in, set, *opt.report.poly);
    if (format == "json") {
        json j = e;
        j["input"] = ng.name;
        j["bound"] = opt.report;
        j["set_size"] = set.size();
        std::cout << j.dump() << '\n';
    } else {
        std::cout << ng.name << "  set size " << set.size() << "  bound " << format_fixed(opt.report.value, 6)
                  << "  p(delta) " << format_fixed(opt.quotient.b11 + opt.quotient.b12, 4) << '\n';
        print_matrix("empirical quotient", e.empirical);
        print_matrix("theorem quotient", e.theorem);
        std::cout << "equitable " << (e.equitable ? "true" : "false") << "\nmatches_theorem "
                  << (e.matches_theorem ? "true" : "false") << "\nsize_matches_bound "
                  << (e.size_matches_bound ? "true" : "false") << '\n';
    }
    if (!e.equitable && e.size_matches_bound)
        return kExitVerify;
    return 0;
}

int cmd_verify(const std::string& path, int k, const std::string& format)
{
    WordSet w = read_wordset_file(path);
    std::optional<std::size_t> md;
    if (w.size() >= 2)
        md = min_distance(w);
    const bool independent = !md || *md >= static_cast<std::size_t>(k) + 1;
    std::optional<bool> balanced;
    if (w.q() == 2)
        balanced = check_balanced(w);
    if (format == "json") {
        json j = {{"words", w.size()},
                  {"q", w.q()},
                  {"d", w.length()},
                  {"min_distance", md ? json(*md) : json(nullptr)},
                  {"balanced", balanced ? json(*balanced) : json(nullptr)},
                  {"k", k},
                  {"independent", independent}};
        std::cout << j.dump() << '\n';
    } else {
        std::cout << "words " << w.size() << "\nq " << w.q() << "\nd " << w.length() << "\nmin_distance "
                  << (md ? std::to_string(*md) : "-") << "\nbalanced "
                  << (balanced ? (*balanced ? "true" : "false") : "n/a") << "\n" << k << "-independent "
                  << (independent ? "true" : "false") << '\n';
    }
    return independent ? 0 : kExitVerify;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Spectral upper bounds, exact values and constructions for the k-independence number"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "pretty";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"pretty", "json", "tsv"}))
        ->capture_default_str();

    BoundOpts bound;
    auto* c_bound = app.add_subcommand("bound", "compute an upper bound");
    add_input_flags(c_bound, bound.input);
    c_bound->add_option("--method", bound.method, "optimal-k3, fiol-k3, fiol-set:k=K, acf:k=K, hoffman, closed-form")
        ->capture_default_str();
    c_bound->add_flag("--spectrum-only", bound.spectrum_only,
                      "family only: use the analytic spectrum and delta without building the graph");
    c_bound->add_flag("--fiol-max-diagonal", bound.max_diagonal,
                      "fiol-k3: use max diag(A^3) when it is not constant");
    c_bound->add_option("--group-tol", bound.group_tol, "eigenvalue grouping tolerance")->capture_default_str();

    ExactOpts exact;
    auto* c_exact = app.add_subcommand("exact", "compute alpha_k exactly");
    add_input_flags(c_exact, exact.input);
    c_exact->add_option("--k", exact.k, "distance parameter")->capture_default_str()->check(CLI::PositiveNumber);
    c_exact->add_option("--max-nodes", exact.max_nodes, "branch node budget")->capture_default_str();
    c_exact->add_option("--max-seconds", exact.max_seconds, "time budget")->capture_default_str();
    c_exact->add_flag("--vertex-transitive", exact.vertex_transitive,
                      "assert the graph is vertex-transitive (implied for families)");

    TableOpts table;
    auto* c_table = app.add_subcommand("table", "reproduce a bound table (TSV)");
    c_table->add_option("name", table.name, "ncube, johnson or compare")
        ->required()
        ->check(CLI::IsMember({"ncube", "johnson", "compare"}));
    c_table->add_option("--max-d", table.max_d, "ncube: largest dimension")->capture_default_str();
    c_table->add_option("--max-k", table.max_k, "johnson: largest k in J(2k,k)")->capture_default_str();
    c_table->add_option("--corpus", table.corpus, "compare: graph6 corpus directory");
    c_table->add_flag("--no-oracle", table.no_oracle, "skip exact alpha_3 computations");
    c_table->add_option("--oracle-seconds", table.oracle_seconds, "time budget per oracle run")->capture_default_str();
    c_table->add_option("--oracle-max-n", table.oracle_max_n, "largest order handed to the oracle");

    auto* c_construct = app.add_subcommand("construct", "build a 3-independent word set");
    c_construct->require_subcommand(1);
    std::string out;
    int r = 3, q = 5, l = 3;
    std::size_t d = 4;
    auto* c_double = c_construct->add_subcommand("binary-double", "doubling construction in H(2^r, 2)");
    c_double->add_option("--r", r, "d = 2^r")->required();
    c_double->add_option("--out", out, "output file (default stdout)");
    auto* c_hamconst = c_construct->add_subcommand("hamconst", "doubled set for 2^r punctured to length d");
    c_hamconst->add_option("--d", d, "target length")->required();
    c_hamconst->add_option("--r", r, "doubled length 2^r")->required();
    c_hamconst->add_option("--out", out, "output file (default stdout)");
    auto* c_mols = c_construct->add_subcommand("mols", "orthogonal-array code from l MOLS of prime order q");
    c_mols->add_option("--q", q, "prime order")->required();
    c_mols->add_option("--l", l, "number of squares")->required();
    c_mols->add_option("--out", out, "output file (default stdout)");
    auto* c_rep = c_construct->add_subcommand("repetition", "the q constant words of length d");
    c_rep->add_option("--d", d, "length")->required();
    c_rep->add_option("--q", q, "alphabet size")->required();
    c_rep->add_option("--out", out, "output file (default stdout)");

    std::string words;
    int verify_k = 3;
    auto* c_verify = app.add_subcommand("verify", "check a word set's minimum distance and balance");
    c_verify->add_option("--words", words, "word-set file")->required();
    c_verify->add_option("--k", verify_k, "require distance >= k + 1")->capture_default_str();

    QuotientOpts quot;
    auto* c_quot = app.add_subcommand("quotient", "equitable-partition check of p(A) for a 3-independent set");
    add_input_flags(c_quot, quot.input);
    c_quot->add_option("--words", quot.words, "word-set file (hamming/hypercube families)");
    c_quot->add_option("--vertices", quot.vertices, "vertex indices")->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitPrecondition;
    }

    try {
        if (*c_bound)
            return cmd_bound(bound, format);
        if (*c_exact)
            return cmd_exact(exact, format);
        if (*c_table)
            return cmd_table(table);
        if (*c_construct) {
            WordSet w;
            if (*c_double)
                w = construct_doubled(r);
            else if (*c_hamconst)
                w = construct_hamconst(d, r);
            else if (*c_mols)
                w = construct_mols_code(q, l);
            else
                w = construct_repetition(d, q);
            emit_wordset(w, out);
            return 0;
        }
        if (*c_verify)
            return cmd_verify(words, verify_k, format);
        if (*c_quot)
            return cmd_quotient(quot, format);
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitPrecondition;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitPrecondition;
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitPrecondition;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

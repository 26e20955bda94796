#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "skind/bounds.hpp"
#include "skind/families.hpp"

namespace skind {

/// Corpus directory: $SPECTRAL_KIND_CORPUS if set, else the source tree's corpus/.
std::string default_corpus_dir();

struct TableOptions {
    bool oracle = true;
    double oracle_seconds = 60.0;
    /// Graphs above this order take the reported alpha_3 instead of the oracle.
    std::size_t oracle_max_order = 512;
};

struct NcubeRow {
    int d = 0;
    BoundReport bound;
    std::size_t construction = 0;
    std::optional<std::size_t> alpha3;
    std::string alpha3_source;  // "oracle", "oracle-timeout" (best found), "reported"
};

/// Hypercubes Q_d for d = 2..max_d: optimal cubic bound, doubling/puncturing
/// construction size, alpha_3.
std::vector<NcubeRow> table_ncube(int max_d, const TableOptions& opts = {});
void write_tsv(std::ostream& out, const std::vector<NcubeRow>& rows);

struct JohnsonRow {
    int k = 0;
    BoundReport bound;
    std::optional<std::size_t> alpha3;
    std::string alpha3_source;
};

/// J(2k, k) for k = 2..max_k from the analytic spectrum only.
std::vector<JohnsonRow> table_johnson(int max_k, const TableOptions& opts = {});
void write_tsv(std::ostream& out, const std::vector<JohnsonRow>& rows);

/// A named graph for the comparison table: a corpus file or a family.
struct CompareEntry {
    std::string name;
    std::optional<FamilySpec> family;
    std::optional<std::size_t> reported_alpha3;
};

const std::vector<CompareEntry>& compare_entries();

struct CompareRow {
    std::string name;
    std::size_t n = 0;
    bool missing = false;
    std::string error;
    std::optional<long double> acf;
    std::optional<long double> fiol;
    std::optional<long double> ours;
    std::optional<std::size_t> alpha3;
    std::string alpha3_source;
};

/// ACF (k = 3), Fiol (k = 3, max-diagonal form) and the optimal cubic bound
/// for every entry. Missing corpus files give rows with missing = true.
std::vector<CompareRow> table_compare(const std::string& corpus_dir, const TableOptions& opts = {});
void write_tsv(std::ostream& out, const std::vector<CompareRow>& rows);

/// Fixed-point decimal with the given number of places.
std::string format_fixed(long double v, int places = 4);

} // namespace skind

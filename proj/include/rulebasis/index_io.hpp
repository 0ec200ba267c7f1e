// One-document JSON persistence for the mined index together with its
// breakpoint table, and JSON-lines serialization of rules.

#ifndef RULEBASIS_INDEX_IO_HPP
#define RULEBASIS_INDEX_IO_HPP

#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>

#include "rulebasis/bounds.hpp"
#include "rulebasis/rules.hpp"

namespace rulebasis {

// Document layout (format "rulebasis-index", version 1):
//   n, min_support, items,
//   closed:     [{items, count, max_superset_count, breakpoints}],
//   generators: [{items, count, min_subset_count|null, closure}]
// Counts are absolute; null stands for the infinite bound. Subset-side
// bounds and adjacency are recomputed on load, so a reloaded index drives
// every generator without the dataset.
void save_index(const LatticeIndex& index, const BreakpointTable& table, std::ostream& out);
void save_index_file(const LatticeIndex& index, const BreakpointTable& table,
                     const std::filesystem::path& path);

std::pair<LatticeIndex, BreakpointTable> load_index(std::istream& in,
                                                    const std::string& origin = "<stream>");
std::pair<LatticeIndex, BreakpointTable> load_index_file(const std::filesystem::path& path);

// {"antecedent":[...],"consequent":[...],"support_count":k,"n":n,"confidence":"p/q"}
std::string rule_to_json_line(const Rule& r, const std::vector<std::string>& item_names);

// Parses one JSON line back; names are resolved against the database.
Rule rule_from_json_line(const std::string& line, const TransactionDB& db);

// "[c:0.50, s:33.33] b => a c d e" style, confidence as a ratio and support
// as a percentage, both to two decimals
std::string rule_to_text_line(const Rule& r, const std::vector<std::string>& item_names);

}  // namespace rulebasis

#endif

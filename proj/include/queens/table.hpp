#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "queens/search.hpp"

namespace queens {

// One column of the m_3(n) table: exact when lower == upper.
struct TableEntry {
  int n = 0;
  int lower = 0;
  std::optional<int> upper;
  std::optional<SearchResult> result;  // set for exact entries

  [[nodiscard]] bool exact() const { return result.has_value(); }
};

// Solves n = 1..max_n. Entries whose search runs out of budget become
// brackets [proven lower bound, greedy upper bound]. Cancellation
// propagates as InconclusiveError.
std::vector<TableEntry> run_table(int max_n, const SearchConfig& config);

// Two rows, "n" and "m_k(n)", with bracketed entries written "[lo,hi]".
std::string format_table(const std::vector<TableEntry>& entries, int k = 3);

nlohmann::json to_json(const TableEntry& e);

}  // namespace queens

#include "queens/table.hpp"

#include <algorithm>
#include <sstream>

#include "queens/errors.hpp"
#include "queens/io.hpp"

namespace queens {

std::vector<TableEntry> run_table(int max_n, const SearchConfig& config) {
  if (max_n < 1) throw RangeError("max n must be at least 1");
  std::vector<TableEntry> out;
  for (int n = 1; n <= max_n; ++n) {
    TableEntry e;
    e.n = n;
    try {
      SearchResult r = solve_min_good(n, config);
      e.lower = r.minimum;
      e.upper = r.minimum;
      e.result = std::move(r);
    } catch (const InconclusiveError& err) {
      if (config.cancel && config.cancel->load()) throw;
      e.lower = err.lower;
      e.upper = err.upper;
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::string format_table(const std::vector<TableEntry>& entries, int k) {
  std::vector<std::string> top{"n"}, bottom{"m_" + std::to_string(k) + "(n)"};
  for (const auto& e : entries) {
    top.push_back(std::to_string(e.n));
    if (e.exact())
      bottom.push_back(std::to_string(e.lower));
    else
      bottom.push_back("[" + std::to_string(e.lower) + "," +
                       (e.upper ? std::to_string(*e.upper) : std::string("?")) + "]");
  }
  std::ostringstream os;
  for (std::size_t i = 0; i < top.size(); ++i) {
    const auto w = std::max(top[i].size(), bottom[i].size());
    top[i].insert(0, w - top[i].size(), ' ');
    bottom[i].insert(0, w - bottom[i].size(), ' ');
  }
  for (const auto* row : {&top, &bottom}) {
    for (std::size_t i = 0; i < row->size(); ++i) os << (i ? "  " : "") << (*row)[i];
    os << '\n';
  }
  return os.str();
}

nlohmann::json to_json(const TableEntry& e) {
  nlohmann::json j = {{"n", e.n}, {"exact", e.exact()}, {"lower", e.lower},
                      {"upper", e.upper ? nlohmann::json(*e.upper) : nlohmann::json(nullptr)}};
  if (e.result) j["result"] = to_json(*e.result);
  return j;
}

}  // namespace queens

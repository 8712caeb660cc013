#include "queens/io.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "queens/errors.hpp"

namespace queens {

using nlohmann::json;

namespace {

std::string at(std::string_view field, std::size_t i) {
  return std::string(field) + "[" + std::to_string(i) + "]";
}

const json& member(const json& j, const std::string& key, std::string_view where = {}) {
  const std::string field = where.empty() ? key : std::string(where) + "." + key;
  if (!j.is_object() || !j.contains(key))
    throw MalformedDocumentError("missing field '" + field + "'", field);
  return j.at(key);
}

int as_int(const json& j, const std::string& field) {
  if (!j.is_number_integer()) throw MalformedDocumentError(field + " must be an integer", field);
  return j.get<int>();
}

bool as_bool(const json& j, const std::string& field) {
  if (!j.is_boolean()) throw MalformedDocumentError(field + " must be a boolean", field);
  return j.get<bool>();
}

Square square_from_json(const json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 2)
    throw MalformedDocumentError(field + " must be an [x, y] pair", field);
  return {as_int(j[0], field + "[0]"), as_int(j[1], field + "[1]")};
}

json square_json(Square s) { return json::array({s.x, s.y}); }

std::optional<int> optional_int(const json& j, const std::string& key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return as_int(j.at(key), key);
}

std::optional<bool> optional_bool(const json& j, const std::string& key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return as_bool(j.at(key), key);
}

template <typename T>
json nullable(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

}  // namespace

Placement placement_from_json(const json& j) {
  if (!j.is_object()) throw MalformedDocumentError("placement must be a JSON object", "");
  const int n = as_int(member(j, "n"), "n");
  if (n < 1) throw MalformedDocumentError("n must be positive", "n");
  const json& queens = member(j, "queens");
  if (!queens.is_array()) throw MalformedDocumentError("queens must be an array", "queens");

  std::vector<Square> squares;
  std::map<Square, std::size_t> seen;
  for (std::size_t i = 0; i < queens.size(); ++i) {
    const std::string field = at("queens", i);
    const Square s = square_from_json(queens[i], field);
    if (!in_range(s, n))
      throw OutOfRangeSquareError(field + " = " + to_string(s) + " is off the " +
                                      std::to_string(n) + "x" + std::to_string(n) + " board",
                                  field);
    if (auto [it, fresh] = seen.emplace(s, i); !fresh)
      throw DuplicateQueenError(field + " = " + to_string(s) + " repeats " + at("queens", it->second),
                                field);
    squares.push_back(s);
  }
  return Placement(n, std::move(squares));
}

PlacementDocument parse_placement_document(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw MalformedDocumentError(std::string("not valid JSON: ") + e.what(),
                                 "byte " + std::to_string(e.byte));
  }
  PlacementDocument doc;
  doc.placement = placement_from_json(j);
  for (auto [key, slot] : {std::pair{"label", &doc.label}, std::pair{"source", &doc.source}}) {
    if (!j.contains(key) || j.at(key).is_null()) continue;
    if (!j.at(key).is_string())
      throw MalformedDocumentError(std::string(key) + " must be a string", key);
    *slot = j.at(key).get<std::string>();
  }
  return doc;
}

Placement parse_placement(std::string_view text) { return parse_placement_document(text).placement; }

json to_json(const Placement& p) {
  json queens = json::array();
  for (Square s : p.queens()) queens.push_back(square_json(s));
  return {{"n", p.side()}, {"queens", queens}};
}

json to_json(const PlacementDocument& doc) {
  json j = to_json(doc.placement);
  if (doc.label) j["label"] = *doc.label;
  if (doc.source) j["source"] = *doc.source;
  return j;
}

json to_json(const Line& l) { return {{"slope", std::string(slope_name(l.slope))}, {"offset", l.offset}}; }

Line line_from_json(const json& j) {
  const json& slope = member(j, "slope");
  if (!slope.is_string()) throw MalformedDocumentError("slope must be a string", "slope");
  try {
    return {parse_slope(slope.get<std::string>()), as_int(member(j, "offset"), "offset")};
  } catch (const std::invalid_argument& e) {
    throw MalformedDocumentError(e.what(), "slope");
  }
}

json to_json(const VerifyReport& r) {
  json addable = json::array();
  for (Square s : r.addable) addable.push_back(square_json(s));
  return {{"no_three", r.no_three},
          {"good", r.good},
          {"addable", addable},
          {"violating_line", r.violating_line ? to_json(*r.violating_line) : json(nullptr)}};
}

json to_json(const SearchStats& s) {
  return {{"nodes", s.nodes},
          {"leaves", s.leaves},
          {"symmetry_prunes", s.symmetry_prunes},
          {"dominance_prunes", s.dominance_prunes},
          {"elapsed_seconds", s.elapsed_seconds}};
}

json to_json(const SearchResult& r) {
  return {{"n", r.n}, {"k", r.k}, {"minimum", r.minimum}, {"witness", to_json(r.witness)},
          {"stats", to_json(r.stats)}};
}

SearchResult search_result_from_json(const json& j) {
  SearchResult r;
  r.n = as_int(member(j, "n"), "n");
  r.k = as_int(member(j, "k"), "k");
  r.minimum = as_int(member(j, "minimum"), "minimum");
  r.witness = placement_from_json(member(j, "witness"));
  const json& s = member(j, "stats");
  r.stats.nodes = member(s, "nodes", "stats").get<std::uint64_t>();
  r.stats.leaves = member(s, "leaves", "stats").get<std::uint64_t>();
  r.stats.symmetry_prunes = member(s, "symmetry_prunes", "stats").get<std::uint64_t>();
  r.stats.dominance_prunes = member(s, "dominance_prunes", "stats").get<std::uint64_t>();
  r.stats.elapsed_seconds = member(s, "elapsed_seconds", "stats").get<double>();
  return r;
}

json to_json(const CnCertificate& c) {
  json type1 = json::array(), type2 = json::array(), type3 = json::array();
  for (const Line& l : c.plan.type1) type1.push_back(to_json(l));
  for (const auto& t : c.plan.type2)
    type2.push_back({{"line", to_json(t.line)}, {"queen", square_json(t.queen)}});
  for (const Line& l : c.plan.type3) type3.push_back(to_json(l));
  json targets;
  for (Slope s : kSlopes) targets[std::string(slope_name(s))] = c.plan.targets[slot(s)];
  return {{"n", c.n},
          {"q", c.q},
          {"q_isolated", c.q_isolated},
          {"plan",
           {{"type1", type1},
            {"type2", type2},
            {"type3", type3},
            {"targets", targets},
            {"monomial", json::array({c.plan.t1, c.plan.t2})}}},
          {"coefficient", c.coefficient.str()},
          {"witness", square_json(c.witness)}};
}

CnCertificate certificate_from_json(const json& j) {
  CnCertificate c;
  c.n = as_int(member(j, "n"), "n");
  c.q = as_int(member(j, "q"), "q");
  c.q_isolated = as_int(member(j, "q_isolated"), "q_isolated");
  const json& plan = member(j, "plan");
  auto lines = [&](const char* key) {
    std::vector<Line> out;
    const json& arr = member(plan, key, "plan");
    if (!arr.is_array()) throw MalformedDocumentError(std::string("plan.") + key + " must be an array", key);
    for (const json& l : arr) out.push_back(line_from_json(l));
    return out;
  };
  c.plan.type1 = lines("type1");
  c.plan.type3 = lines("type3");
  const json& type2 = member(plan, "type2", "plan");
  if (!type2.is_array()) throw MalformedDocumentError("plan.type2 must be an array", "plan.type2");
  for (std::size_t i = 0; i < type2.size(); ++i)
    c.plan.type2.push_back({line_from_json(member(type2[i], "line", at("plan.type2", i))),
                            square_from_json(member(type2[i], "queen", at("plan.type2", i)),
                                             at("plan.type2", i) + ".queen")});
  const json& targets = member(plan, "targets", "plan");
  for (Slope s : kSlopes) {
    const std::string key(slope_name(s));
    c.plan.targets[slot(s)] = as_int(member(targets, key, "plan.targets"), "plan.targets." + key);
  }
  const Square mono = square_from_json(member(plan, "monomial", "plan"), "plan.monomial");
  c.plan.t1 = mono.x;
  c.plan.t2 = mono.y;
  const json& coeff = member(j, "coefficient");
  if (!coeff.is_string()) throw MalformedDocumentError("coefficient must be a decimal string", "coefficient");
  try {
    c.coefficient = BigInt(coeff.get<std::string>());
  } catch (const std::exception&) {
    throw MalformedDocumentError("coefficient is not a decimal integer", "coefficient");
  }
  c.witness = square_from_json(member(j, "witness"), "witness");
  return c;
}

json to_json(const AuditReport& a) {
  json even = nullptr;
  if (a.even_case)
    even = {{"q_dd_zero", a.even_case->q_dd_zero},
            {"required_pm1_lines", a.even_case->required_pm1_lines},
            {"available_pm1_lines", a.even_case->available_pm1_lines},
            {"contradiction", a.even_case->contradiction}};
  return {{"n", a.n},
          {"q", a.q},
          {"q_dd", a.q_dd},
          {"u_size", a.u_size},
          {"rotated", a.rotated},
          {"c", a.c},
          {"a", nullable(a.a)},
          {"b", nullable(a.b)},
          {"r", a.r},
          {"a_prime", nullable(a.a_prime)},
          {"b_prime", nullable(a.b_prime)},
          {"slope_pm1_lines_defined", a.slope_pm1_lines_defined},
          {"pm1_lines_through_two_edge_squares",
           json::array({a.pm1_lines_through_two_edge_squares[0], a.pm1_lines_through_two_edge_squares[1]})},
          {"edge_queens", a.edge_queens},
          {"inequality_lhs", a.inequality_lhs},
          {"inequality_rhs", a.inequality_rhs},
          {"good", a.good},
          {"cr_bound_holds", nullable(a.cr_bound_holds)},
          {"degenerate_bound_holds", nullable(a.degenerate_bound_holds)},
          {"diagonal_count_holds", nullable(a.diagonal_count_holds)},
          {"chain_holds", nullable(a.chain_holds)},
          {"q_at_least_n_minus_1", nullable(a.q_at_least_n_minus_1)},
          {"even_case", even},
          {"bound_holds", a.bound_holds}};
}

AuditReport audit_from_json(const json& j) {
  AuditReport a;
  a.n = as_int(member(j, "n"), "n");
  a.q = as_int(member(j, "q"), "q");
  a.q_dd = as_int(member(j, "q_dd"), "q_dd");
  a.u_size = as_int(member(j, "u_size"), "u_size");
  a.rotated = as_bool(member(j, "rotated"), "rotated");
  a.c = as_int(member(j, "c"), "c");
  a.a = optional_int(j, "a");
  a.b = optional_int(j, "b");
  a.r = as_int(member(j, "r"), "r");
  a.a_prime = optional_int(j, "a_prime");
  a.b_prime = optional_int(j, "b_prime");
  a.slope_pm1_lines_defined = as_int(member(j, "slope_pm1_lines_defined"), "slope_pm1_lines_defined");
  const json& edge = member(j, "pm1_lines_through_two_edge_squares");
  const Square pair = square_from_json(edge, "pm1_lines_through_two_edge_squares");
  a.pm1_lines_through_two_edge_squares = {pair.x, pair.y};
  a.edge_queens = as_int(member(j, "edge_queens"), "edge_queens");
  a.inequality_lhs = as_int(member(j, "inequality_lhs"), "inequality_lhs");
  a.inequality_rhs = as_int(member(j, "inequality_rhs"), "inequality_rhs");
  a.good = as_bool(member(j, "good"), "good");
  a.cr_bound_holds = optional_bool(j, "cr_bound_holds");
  a.degenerate_bound_holds = optional_bool(j, "degenerate_bound_holds");
  a.diagonal_count_holds = optional_bool(j, "diagonal_count_holds");
  a.chain_holds = optional_bool(j, "chain_holds");
  a.q_at_least_n_minus_1 = optional_bool(j, "q_at_least_n_minus_1");
  if (j.contains("even_case") && !j.at("even_case").is_null()) {
    const json& e = j.at("even_case");
    EvenCaseAnalysis ec;
    ec.q_dd_zero = as_bool(member(e, "q_dd_zero", "even_case"), "even_case.q_dd_zero");
    ec.required_pm1_lines = as_int(member(e, "required_pm1_lines", "even_case"), "even_case.required_pm1_lines");
    ec.available_pm1_lines = as_int(member(e, "available_pm1_lines", "even_case"), "even_case.available_pm1_lines");
    ec.contradiction = as_bool(member(e, "contradiction", "even_case"), "even_case.contradiction");
    a.even_case = ec;
  }
  a.bound_holds = as_bool(member(j, "bound_holds"), "bound_holds");
  return a;
}

std::string render_board(const Placement& p, RenderFormat format, std::span<const Square> highlight) {
  const int n = p.side();
  auto marked = [&](Square s) {
    return std::find(highlight.begin(), highlight.end(), s) != highlight.end();
  };
  std::ostringstream os;
  if (format == RenderFormat::Ascii) {
    for (int y = n; y >= 1; --y) {
      for (int x = 1; x <= n; ++x) os << (p.contains({x, y}) ? 'Q' : '.');
      if (y > 1) os << '\n';
    }
    return os.str();
  }

  constexpr int cell = 40;
  const int size = n * cell;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
     << "\" viewBox=\"0 0 " << size << ' ' << size << "\">\n";
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y) {
      const int px = (x - 1) * cell;
      const int py = (n - y) * cell;
      // (1,1) is a dark square, as on a chessboard.
      const char* fill = (x + y) % 2 == 0 ? "#b58863" : "#f0d9b5";
      os << "  <rect x=\"" << px << "\" y=\"" << py << "\" width=\"" << cell << "\" height=\""
         << cell << "\" fill=\"" << fill << "\"/>\n";
      const bool queen = p.contains({x, y});
      if (queen || marked({x, y})) {
        const char* glyph_fill = queen && !marked({x, y}) ? "#111111" : "#9a9a9a";
        os << "  <text x=\"" << px + cell / 2 << "\" y=\"" << py + cell / 2
           << "\" font-size=\"" << cell * 3 / 4
           << "\" text-anchor=\"middle\" dominant-baseline=\"central\" fill=\"" << glyph_fill
           << "\">&#9819;</text>\n";
      }
    }
  os << "</svg>\n";
  return os.str();
}

}  // namespace queens

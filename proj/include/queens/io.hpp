#pragma once

// Placement files, result documents and board rendering.
//
// Placement file:
//   {"n": 5, "queens": [[1,1],[1,2]], "label": "...", "source": "..."}
// with 1-based [x, y] pairs. label and source are optional.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"
#include "queens/board.hpp"
#include "queens/elementary.hpp"
#include "queens/nullstellensatz.hpp"
#include "queens/search.hpp"
#include "queens/verifier.hpp"

namespace queens {

// Parse failure. `field` names the offending JSON path, e.g. "queens[2]".
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::string field)
      : std::runtime_error(what), field_(std::move(field)) {}
  [[nodiscard]] const std::string& field() const { return field_; }

 private:
  std::string field_;
};

class MalformedDocumentError : public ParseError {
 public:
  using ParseError::ParseError;
};

class OutOfRangeSquareError : public ParseError {
 public:
  using ParseError::ParseError;
};

class DuplicateQueenError : public ParseError {
 public:
  using ParseError::ParseError;
};

struct PlacementDocument {
  Placement placement{1};
  std::optional<std::string> label;
  std::optional<std::string> source;
};

PlacementDocument parse_placement_document(std::string_view text);
Placement parse_placement(std::string_view text);

nlohmann::json to_json(const Placement& p);
nlohmann::json to_json(const PlacementDocument& doc);
nlohmann::json to_json(const Line& l);
nlohmann::json to_json(const VerifyReport& r);
nlohmann::json to_json(const SearchStats& s);
nlohmann::json to_json(const SearchResult& r);
nlohmann::json to_json(const CnCertificate& c);
nlohmann::json to_json(const AuditReport& a);

// Inverses used to re-check emitted documents. Throw ParseError subclasses.
Placement placement_from_json(const nlohmann::json& j);
Line line_from_json(const nlohmann::json& j);
SearchResult search_result_from_json(const nlohmann::json& j);
CnCertificate certificate_from_json(const nlohmann::json& j);
AuditReport audit_from_json(const nlohmann::json& j);

enum class RenderFormat { Ascii, Svg };

// ascii: n rows of n cells, row n first, 'Q' for a queen and '.' otherwise,
// rows joined by '\n' with no trailing newline. svg: checkered board with
// queen glyphs; `highlight` squares are drawn as shaded queens.
std::string render_board(const Placement& p, RenderFormat format,
                         std::span<const Square> highlight = {});

}  // namespace queens

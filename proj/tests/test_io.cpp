#include <algorithm>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "queens/io.hpp"
#include "queens/table.hpp"

using namespace queens;
using nlohmann::json;

TEST_CASE("parse_placement") {
  CHECK(parse_placement(R"({"n":2,"queens":[[1,1],[1,2],[2,1],[2,2]]})") == full_board(2));
  const auto doc = parse_placement_document(R"({"n":3,"queens":[],"label":"empty","source":"test"})");
  CHECK(doc.placement == Placement(3));
  CHECK(doc.label == "empty");
  CHECK(doc.source == "test");
}

TEST_CASE("parse errors are distinct and carry the field") {
  try {
    parse_placement(R"({"n":2,"queens":[[3,1]]})");
    FAIL("expected OutOfRangeSquareError");
  } catch (const OutOfRangeSquareError& e) {
    CHECK(e.field() == "queens[0]");
  }
  try {
    parse_placement(R"({"n":2,"queens":[[1,1],[1,1]]})");
    FAIL("expected DuplicateQueenError");
  } catch (const DuplicateQueenError& e) {
    CHECK(e.field() == "queens[1]");
  }
  CHECK_THROWS_AS(parse_placement(R"({"n":2,"queens":[[1,1],)"), MalformedDocumentError);
  CHECK_THROWS_AS(parse_placement(R"({"queens":[]})"), MalformedDocumentError);
  CHECK_THROWS_AS(parse_placement(R"({"n":0,"queens":[]})"), MalformedDocumentError);
  CHECK_THROWS_AS(parse_placement(R"({"n":"3","queens":[]})"), MalformedDocumentError);
  CHECK_THROWS_AS(parse_placement(R"({"n":3,"queens":[[1]]})"), MalformedDocumentError);
  CHECK_THROWS_AS(parse_placement(R"({"n":3,"queens":[[1,1.5]]})"), MalformedDocumentError);
  CHECK_THROWS_AS(parse_placement(R"({"n":3,"queens":[[1,1]],"label":7})"), MalformedDocumentError);
  CHECK_THROWS_AS(parse_placement(R"([1,2])"), MalformedDocumentError);
}

TEST_CASE("render ascii") {
  CHECK(render_board(full_board(2), RenderFormat::Ascii) == "QQ\nQQ");
  CHECK(render_board(Placement(2, {{1, 1}}), RenderFormat::Ascii) == "..\nQ.");
  CHECK(render_board(Placement(3, {{3, 3}, {1, 2}}), RenderFormat::Ascii) == "..Q\nQ..\n...");
}

TEST_CASE("rendered witnesses show exactly q queens") {
  for (int n = 1; n <= 7; ++n) {
    const SearchResult r = solve_min_good(n, {});
    const std::string ascii = render_board(r.witness, RenderFormat::Ascii);
    CHECK(std::count(ascii.begin(), ascii.end(), 'Q') == r.minimum);
    const std::string svg = render_board(r.witness, RenderFormat::Svg);
    std::size_t glyphs = 0;
    for (auto pos = svg.find("&#9819;"); pos != std::string::npos; pos = svg.find("&#9819;", pos + 1))
      ++glyphs;
    CHECK(glyphs == static_cast<std::size_t>(r.minimum));
    CHECK(svg.rfind("<svg", 0) == 0);
  }
}

TEST_CASE("placement documents round trip") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const Placement p = oracle::random_placement(rng, n, 0.3);
    CHECK(parse_placement(to_json(p).dump()) == p);
  }
}

TEST_CASE("result documents round trip") {
  const SearchResult r = solve_min_good(6, {});
  const SearchResult back = search_result_from_json(json::parse(to_json(r).dump()));
  CHECK(back.n == r.n);
  CHECK(back.k == r.k);
  CHECK(back.minimum == r.minimum);
  CHECK(back.witness == r.witness);
  CHECK(back.stats.nodes == r.stats.nodes);
  CHECK(back.stats.elapsed_seconds == r.stats.elapsed_seconds);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const Placement p = greedy_good_placement(2 + static_cast<int>(rng() % 8), 3, rng());
    const AuditReport a = audit(p);
    const AuditReport b = audit_from_json(json::parse(to_json(a).dump()));
    CHECK(to_json(b) == to_json(a));
  }
}

TEST_CASE("certificate documents round trip and recheck") {
  const Placement p(9, {{1, 1}, {1, 2}, {5, 7}, {8, 3}});
  const CnCertificate cert = refute_goodness(p);
  const CnCertificate back = certificate_from_json(json::parse(to_json(cert).dump()));
  CHECK(back == cert);
  CHECK(check_certificate(back, p).empty());

  // Coefficients wider than 64 bits survive as decimal strings.
  CnCertificate wide = cert;
  wide.coefficient = BigInt("-123456789012345678901234567890");
  CHECK(certificate_from_json(to_json(wide)).coefficient == wide.coefficient);

  json broken = to_json(cert);
  broken["coefficient"] = 2;
  CHECK_THROWS_AS(certificate_from_json(broken), MalformedDocumentError);
  broken["coefficient"] = "2x";
  CHECK_THROWS_AS(certificate_from_json(broken), MalformedDocumentError);
}

TEST_CASE("table formatting") {
  SearchConfig c;
  const auto entries = run_table(4, c);
  REQUIRE(entries.size() == 4);
  CHECK(entries[0].lower == 1);
  CHECK(entries[3].lower == 4);
  CHECK(format_table(entries) == "     n  1  2  3  4\nm_3(n)  1  4  4  4\n");

  std::vector<TableEntry> bracketed(1);
  bracketed[0].n = 13;
  bracketed[0].lower = 13;
  bracketed[0].upper = 14;
  CHECK(format_table(bracketed) == "     n       13\nm_3(n)  [13,14]\n");

  const auto single = run_table(1, c);
  REQUIRE(single.size() == 1);
  CHECK(single[0].exact());
  CHECK(single[0].lower == 1);
}

TEST_CASE("table with an exhausted budget gives brackets") {
  SearchConfig c;
  c.node_budget = 20;
  const auto entries = run_table(7, c);
  const TableEntry& last = entries.back();
  CHECK_FALSE(last.exact());
  CHECK(last.lower >= lower_bound(7));
  REQUIRE(last.upper);
  CHECK(*last.upper >= 8);
  CHECK(format_table(entries).find('[') != std::string::npos);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hullcode/codes.hpp"
#include "hullcode/errors.hpp"
#include "hullcode/gf.hpp"
#include "hullcode/matgf.hpp"
#include "hullcode/textio.hpp"

using namespace hullcode;

namespace {

Mat parse_rows(const FieldPtr& f, const std::vector<std::vector<const char*>>& rows) {
  std::vector<std::vector<uint16_t>> out;
  for (const auto& r : rows) {
    std::vector<uint16_t> row;
    for (const char* s : r) row.push_back(parse_elem(*f, s));
    out.push_back(std::move(row));
  }
  return Mat::from_rows(f, out);
}

int parse_error_line(const std::string& text) {
  try {
    parse_code_file(text);
  } catch (const ParseError& e) {
    return e.line;
  }
  return -1;
}

}  // namespace

TEST_CASE("code file parsing: header, comments, and rows") {
  const std::string text =
      "# a [6,3,3] code over GF(4)\n"
      "\n"
      "field p=2 m=2 poly=1 1 1\n"
      "1 0 0 1 1 1\n"
      "0 1 0 w w^2 0\n"
      "# trailing comment between rows\n"
      "0 0 1 0 w w^2\n";
  auto cf = parse_code_file(text);
  CHECK(cf.field->p() == 2);
  CHECK(cf.field->m() == 2);
  CHECK(cf.rows.rows() == 3);
  CHECK(cf.rows.cols() == 6);
  CHECK(cf.rows.at(1, 3) == parse_elem(*cf.field, "w"));
  CHECK(cf.rows.at(2, 5) == parse_elem(*cf.field, "w^2"));
}

TEST_CASE("code file parsing: poly may be omitted for the built-in modulus") {
  auto cf = parse_code_file("field p=2 m=3\n1 w w^6\n");
  CHECK(cf.field->q() == 8);
  CHECK(cf.field->modulus() == std::vector<int>{1, 1, 0, 1});  // x^3+x+1
  CHECK(cf.rows.at(0, 2) == cf.field->ppow(6));
}

TEST_CASE("code file parsing: explicit primitive element") {
  // GF(4) with primitive w^2 (in default-generator terms, x^2 = x+1).
  auto cf = parse_code_file("field p=2 m=2 poly=1 1 1 primitive=w^2\nw 1\n");
  auto dflt = make_field(2, 2);
  CHECK(cf.field->primitive() == dflt->mul(dflt->primitive(), dflt->primitive()));
  // "w" in the body now denotes that primitive.
  CHECK(cf.rows.at(0, 0) == cf.field->primitive());
}

TEST_CASE("code file round-trip is the identity") {
  auto f8 = make_field(2, 3);
  auto c = make_code(f8, parse_rows(f8, {
      {"1", "0", "0", "w^4", "w^4", "w^5", "w^2", "w", "w^5", "w^4"},
      {"0", "1", "0", "0", "w^5", "w^5", "w^4", "w^4", "1", "1"},
      {"0", "0", "1", "w^3", "w^6", "w^2", "1", "0", "w^4", "w^5"}}));
  auto cf = parse_code_file(render_code_file(c));
  CHECK(same_field(*cf.field, *c.field));
  CHECK(cf.rows == c.G);
  // Render again: byte-identical text.
  CHECK(render_code_file(cf.field, cf.rows) == render_code_file(c));

  // Round-trip with a non-default primitive.
  auto f4p = make_field(2, 2, {1, 1, 1}, 3);  // primitive x+1 = code 3
  auto c2 = make_code(f4p, parse_rows(f4p, {{"w", "1", "0"}}));
  const std::string text = render_code_file(c2);
  CHECK(text.find("primitive=") != std::string::npos);
  auto cf2 = parse_code_file(text);
  CHECK(same_field(*cf2.field, *f4p));
  CHECK(cf2.rows == c2.G);
}

TEST_CASE("code file parse errors carry 1-based line numbers") {
  // No header.
  CHECK(parse_error_line("1 0 1\n") == 1);
  // Unknown key on the header line (line 2 after a comment).
  CHECK(parse_error_line("# c\nfield p=2 m=2 modulus=1\n1 0\n") == 2);
  // Stray token.
  CHECK(parse_error_line("field p=2 m=2 oops\n1 0\n") == 1);
  // Missing m=.
  CHECK(parse_error_line("field p=2 poly=1 1 1\n1 0\n") == 1);
  // Wrong coefficient count.
  CHECK(parse_error_line("field p=2 m=2 poly=1 1\n1 0\n") == 1);
  // Bad coefficient.
  CHECK(parse_error_line("field p=2 m=2 poly=1 x 1\n1 0\n") == 1);
  // Reducible modulus is rejected by field construction, reported as parse.
  CHECK(parse_error_line("field p=2 m=2 poly=1 0 1\n1 0\n") == 1);
  // Malformed element in a body row.
  CHECK(parse_error_line("field p=2 m=2\n1 0\nw^ 1\n") == 3);
  // Digit literals above 1 are not elements.
  CHECK(parse_error_line("field p=3 m=1\n1 2\n") == 2);
  // Row width mismatch.
  CHECK(parse_error_line("field p=2 m=2\n1 0 w\n1 0\n") == 3);
  // Header but no rows.
  CHECK(parse_error_line("field p=2 m=2\n# only comments\n") == 2);
  // Empty input.
  CHECK(parse_error_line("") == 1);

  try {
    parse_code_file("field p=2 m=2\nw^ 1\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(std::string(e.what()).find("line 2:") != std::string::npos);
  }
}

TEST_CASE("word lines parse and render") {
  auto f8 = make_field(2, 3);
  auto v = parse_word_line(*f8, "0 1 w w^6");
  REQUIRE(v.size() == 4);
  CHECK(v[0] == 0);
  CHECK(v[3] == f8->ppow(6));
  CHECK(render_word_line(*f8, v) == "0 1 w w^6");
  CHECK(parse_word_line(*f8, "").empty());
  CHECK_THROWS_AS(parse_word_line(*f8, "1 q"), ParseError);
}

TEST_CASE("matrix bodies render in the element grammar") {
  auto f4 = make_field(2, 2);
  Mat m = parse_rows(f4, {{"0", "1"}, {"w", "w^2"}});
  CHECK(render_matrix_body(*f4, m) == "0 1\nw w^2\n");
}

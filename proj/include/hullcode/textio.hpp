#pragma once
#include <string>
#include <vector>

#include "hullcode/codes.hpp"
#include "hullcode/gf.hpp"
#include "hullcode/matgf.hpp"

namespace hullcode {

// A parsed code file: the field named by the header plus the generator rows
// exactly as written (no reduction — feed them to make_code for a LinearCode).
struct CodeFile {
  FieldPtr field;
  Mat rows;
};

// Text format:
//
//   field p=<p> m=<m> poly=<c0 c1 ... cm> [primitive=<elem>]
//   <elem> <elem> ... <elem>     (one generator row per line)
//
// poly coefficients are constant-first; omitting poly selects the built-in
// modulus. Blank lines and lines whose first token starts with '#' are
// skipped. Elements use the 0|1|w|w^k grammar. The primitive= value is read
// with the field's default generator, so "w" there denotes x itself.
// All failures raise ParseError carrying the 1-based line number.
CodeFile parse_code_file(const std::string& text);

// Canonical rendering: a full header (primitive= emitted only when it is not
// the default), then one row per line. parse_code_file(render_code_file(c))
// reproduces the identical matrix over the same field.
std::string render_code_file(const LinearCode& c);
std::string render_code_file(const FieldPtr& f, const Mat& rows);

// One space-separated line of elements per matrix row.
std::string render_matrix_body(const Field& f, const Mat& m);

// Space-separated element words (scaling vectors, dual words).
std::vector<uint16_t> parse_word_line(const Field& f, const std::string& text);
std::string render_word_line(const Field& f, const std::vector<uint16_t>& v);

}  // namespace hullcode

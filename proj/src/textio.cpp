#include "hullcode/textio.hpp"

#include <cctype>
#include <sstream>

#include "hullcode/errors.hpp"

namespace hullcode {

namespace {

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

bool parse_uint(const std::string& s, long long* out) {
  if (s.empty()) return false;
  long long v = 0;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    v = v * 10 + (ch - '0');
    if (v > 1000000) return false;
  }
  *out = v;
  return true;
}

uint16_t parse_elem_at(const Field& f, const std::string& tok, int line) {
  try {
    return parse_elem(f, tok);
  } catch (const ParseError& e) {
    throw ParseError(e.what(), line);
  }
}

}  // namespace

CodeFile parse_code_file(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  FieldPtr field;
  std::vector<std::vector<uint16_t>> rows;
  int width = -1;
  while (std::getline(in, line)) {
    ++line_no;
    const auto toks = split_ws(line);
    if (toks.empty() || toks[0][0] == '#') continue;
    if (!field) {
      if (toks[0] != "field")
        throw ParseError("expected a 'field p=<p> m=<m> ...' header line",
                         line_no);
      long long p = -1, m = -1;
      std::vector<int> poly;
      bool have_poly = false;
      std::string prim_tok;
      size_t i = 1;
      while (i < toks.size()) {
        const std::string& t = toks[i];
        const auto eq = t.find('=');
        if (eq == std::string::npos)
          throw ParseError("stray token '" + t + "' in field header", line_no);
        const std::string key = t.substr(0, eq);
        const std::string val = t.substr(eq + 1);
        if (key == "p" || key == "m") {
          long long v;
          if (!parse_uint(val, &v) || v <= 0)
            throw ParseError("bad value '" + val + "' for " + key +
                             "= in field header", line_no);
          (key == "p" ? p : m) = v;
          ++i;
        } else if (key == "poly") {
          // poly= opens a coefficient list: the attached value plus every
          // following token up to the next key=value.
          if (have_poly)
            throw ParseError("duplicate poly= in field header", line_no);
          have_poly = true;
          std::vector<std::string> cs{val};
          ++i;
          while (i < toks.size() && toks[i].find('=') == std::string::npos)
            cs.push_back(toks[i++]);
          for (const auto& c : cs) {
            long long v;
            if (!parse_uint(c, &v))
              throw ParseError("bad poly coefficient '" + c + "'", line_no);
            poly.push_back(static_cast<int>(v));
          }
        } else if (key == "primitive") {
          if (val.empty())
            throw ParseError("empty primitive= in field header", line_no);
          prim_tok = val;
          ++i;
        } else {
          throw ParseError("unknown field header key '" + key + "='", line_no);
        }
      }
      if (p < 0 || m < 0)
        throw ParseError("field header needs both p= and m=", line_no);
      if (have_poly && static_cast<long long>(poly.size()) != m + 1)
        throw ParseError("poly= needs " + std::to_string(m + 1) +
                         " coefficients (constant term first), got " +
                         std::to_string(poly.size()), line_no);
      try {
        FieldPtr base =
            make_field(static_cast<int>(p), static_cast<int>(m), poly);
        if (prim_tok.empty()) {
          field = base;
        } else {
          const uint16_t prim = parse_elem_at(*base, prim_tok, line_no);
          field = make_field(static_cast<int>(p), static_cast<int>(m),
                             base->modulus(), prim);
        }
      } catch (const PreconditionError& e) {
        throw ParseError(std::string("invalid field header: ") + e.what(),
                         line_no);
      }
      continue;
    }
    std::vector<uint16_t> row;
    for (const auto& t : toks) row.push_back(parse_elem_at(*field, t, line_no));
    if (width < 0)
      width = static_cast<int>(row.size());
    else if (static_cast<int>(row.size()) != width)
      throw ParseError("row has " + std::to_string(row.size()) +
                       " elements, expected " + std::to_string(width), line_no);
    rows.push_back(std::move(row));
  }
  if (!field)
    throw ParseError("empty input: no field header", line_no ? line_no : 1);
  if (rows.empty())
    throw ParseError("no generator rows after the header", line_no);
  return {field, Mat::from_rows(field, rows)};
}

std::string render_code_file(const FieldPtr& f, const Mat& rows) {
  std::ostringstream out;
  out << "field p=" << f->p() << " m=" << f->m() << " poly=";
  const auto& mod = f->modulus();
  for (size_t i = 0; i < mod.size(); ++i) out << (i ? " " : "") << mod[i];
  const FieldPtr base = make_field(f->p(), f->m(), mod);
  if (base->primitive() != f->primitive())
    out << " primitive=" << render_elem(*base, f->primitive());
  out << "\n" << render_matrix_body(*f, rows);
  return out.str();
}

std::string render_code_file(const LinearCode& c) {
  return render_code_file(c.field, c.G);
}

std::string render_matrix_body(const Field& f, const Mat& m) {
  std::ostringstream out;
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j)
      out << (j ? " " : "") << render_elem(f, m.at(i, j));
    out << "\n";
  }
  return out.str();
}

std::vector<uint16_t> parse_word_line(const Field& f, const std::string& text) {
  std::vector<uint16_t> out;
  for (const auto& t : split_ws(text)) out.push_back(parse_elem(f, t));
  return out;
}

std::string render_word_line(const Field& f, const std::vector<uint16_t>& v) {
  std::ostringstream out;
  for (size_t i = 0; i < v.size(); ++i)
    out << (i ? " " : "") << render_elem(f, v[i]);
  return out.str();
}

}  // namespace hullcode

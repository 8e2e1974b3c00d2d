#include "hullcode/verify.hpp"

#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "hullcode/codes.hpp"
#include "hullcode/constructions.hpp"
#include "hullcode/errors.hpp"
#include "hullcode/matgf.hpp"

namespace hullcode {
namespace {

// ---------------------------------------------------------------------------
// Small builders shared by the rows.

std::vector<uint16_t> parse_word(const FieldPtr& f,
                                 const std::vector<std::string>& toks) {
  std::vector<uint16_t> out;
  out.reserve(toks.size());
  for (const auto& t : toks) out.push_back(parse_elem(*f, t));
  return out;
}

Mat parse_rows(const FieldPtr& f,
               const std::vector<std::vector<std::string>>& rows) {
  Mat m(f, static_cast<int>(rows.size()),
        static_cast<int>(rows.empty() ? 0 : rows[0].size()));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) m.at(r, c) = parse_elem(*f, rows[r][c]);
  return m;
}

// Rows of powers of the primitive element: row r is (w^{e_r * j mod n})_j.
Mat power_rows(const FieldPtr& f, int n, const std::vector<int>& exps) {
  Mat g(f, static_cast<int>(exps.size()), n);
  for (int r = 0; r < g.rows(); ++r)
    for (int j = 0; j < n; ++j)
      g.at(r, j) = f->ppow((static_cast<long long>(exps[r]) * j) % n);
  return g;
}

// Exponent set {0, 1, n-1, 2, n-2, ...} with s symmetric pairs.
std::vector<int> symmetric_exps(int n, int s) {
  std::vector<int> e{0};
  for (int i = 1; i <= s; ++i) {
    e.push_back(i);
    e.push_back(n - i);
  }
  return e;
}

std::string scalar_of(const ConstructionReport& rep, const std::string& key) {
  for (const auto& [k, v] : rep.scalars)
    if (k == key) return v;
  return "<missing " + key + ">";
}

bool has_hyp(const ConstructionReport& rep, const std::string& needle,
             bool holds) {
  for (const auto& h : rep.hypotheses)
    if (h.name.find(needle) != std::string::npos) return h.holds == holds;
  return false;
}

std::string render_row(const Field& f, const Mat& m, int r) {
  std::string out;
  for (int c = 0; c < m.cols(); ++c) {
    if (c) out += ' ';
    out += render_elem(f, m.at(r, c));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Fact accumulator. Counts every check and keeps the first mismatch.

struct Checker {
  int checked = 0;
  bool ok = true;
  std::string first_fail;

  void expect(bool cond, const std::string& what) {
    ++checked;
    if (!cond && ok) {
      ok = false;
      first_fail = what;
    }
  }
  void eq(int got, int want, const std::string& what) {
    expect(got == want, what + ": got " + std::to_string(got) + ", want " +
                            std::to_string(want));
  }
  void eq(const std::string& got, const std::string& want,
          const std::string& what) {
    expect(got == want, what + ": got " + got + ", want " + want);
  }
};

// ---------------------------------------------------------------------------
// The rows. Every constant below is a frozen fact that the library must
// re-derive from scratch.

// [10,3,7] complementary-dual code over GF(8). Its Gram matrix is not
// diagonal, the first-row rescale hypothesis fails, and scaling the first
// coordinate by w^5 leaves the hull trivial.
void row_lcd_gf8_n10(Checker& ck) {
  auto f = make_field(2, 3);
  auto c = make_code(f, parse_rows(f, {
    {"1", "0", "0", "w^4", "w^4", "w^5", "w^2", "w", "w^5", "w^4"},
    {"0", "1", "0", "0", "w^5", "w^5", "w^4", "w^4", "1", "1"},
    {"0", "0", "1", "w^3", "w^6", "w^2", "1", "0", "w^4", "w^5"}}));
  ck.eq(c.n, 10, "length");
  ck.eq(c.k, 3, "dimension");
  ck.eq(minimum_distance(c), 7, "minimum distance");
  ck.expect(is_lcd(c), "code is complementary-dual");
  auto gm = gram(c.G);
  ck.expect(gm == parse_rows(f, {{"1", "w^2", "w^5"},
                                 {"w^2", "1", "0"},
                                 {"w^5", "0", "w^6"}}),
            "Gram matrix of the generator");
  ck.eq(render_elem(*f, det(gm)), "w^6", "det(G G^T)");

  // Scaling coordinate 1 by w^5 does not create a hull.
  std::vector<uint16_t> a(10, uint16_t{1});
  a[0] = parse_elem(*f, "w^5");
  ck.eq(hull(scale(c, a)).dim, 0, "hull after scaling coordinate 1 by w^5");

  // The one-dimensional-hull construction rejects this code: after the
  // forced last-coordinate rescale, the cross-block orthogonality
  // hypothesis fails.
  bool rejected = false;
  std::string msg;
  try {
    theorem31_construct(c);
  } catch (const PreconditionError& e) {
    rejected = true;
    msg = e.what();
  }
  ck.expect(rejected, "first-coordinate construction rejects the code");
  ck.expect(msg.find("P1 P2^T") != std::string::npos,
            "rejection names the cross-block hypothesis (got: " + msg + ")");
}

// [6,3,3] code over GF(4) with a one-dimensional hull. In standard form
// [I | P], the block P P^T is the all-ones matrix, so G G^T has rank 2.
void row_hull1_gf4_n6(Checker& ck) {
  auto f = make_field(2, 2);
  auto c = make_code(f, parse_rows(f, {
    {"1", "0", "0", "1", "1", "1"},
    {"0", "1", "0", "w", "w^2", "0"},
    {"0", "0", "1", "0", "w", "w^2"}}));
  ck.eq(c.n, 6, "length");
  ck.eq(c.k, 3, "dimension");
  ck.eq(minimum_distance(c), 3, "minimum distance");
  auto h = hull(c);
  ck.eq(h.dim, 1, "hull dimension");
  ck.eq(render_row(*f, h.basis, 0), "1 1 1 w^2 0 w", "hull basis word");

  auto sf = standard_form(c);
  Mat p(f, c.k, c.n - c.k);
  for (int r = 0; r < c.k; ++r)
    for (int j = 0; j < c.n - c.k; ++j) p.at(r, j) = sf.code.G.at(r, c.k + j);
  auto ppt = matmul(p, transpose(p));
  bool all_ones = true;
  for (int r = 0; r < ppt.rows(); ++r)
    for (int j = 0; j < ppt.cols(); ++j)
      if (ppt.at(r, j) != 1) all_ones = false;
  ck.expect(all_ones, "P P^T is the all-ones matrix");
  ck.eq(rank(gram(c.G)), 2, "rank of G G^T");
  ck.eq(hull_oracle(c), 1, "hull dimension by exhaustive enumeration");
}

// [4,2,2] complementary-dual code over GF(4): the canonical one-coordinate
// scaling produces a one-dimensional hull with beta = w^2, lambda = w.
void row_cor_gf4_n4(Checker& ck) {
  auto f = make_field(2, 2);
  auto c = make_code(f, parse_rows(f, {
    {"1", "0", "1", "0"},
    {"0", "1", "w^2", "w^2"}}));
  ck.eq(c.n, 4, "length");
  ck.eq(c.k, 2, "dimension");
  ck.eq(minimum_distance(c), 2, "minimum distance");
  ck.expect(is_lcd(c), "code is complementary-dual");
  ck.eq(render_elem(*f, det(gram(c.G))), "w", "det(G G^T)");

  auto rep = corollary_lcd_to_one(c);
  ck.expect(rep.success, "construction succeeds");
  ck.eq(scalar_of(rep, "beta"), "w^2", "beta");
  ck.eq(scalar_of(rep, "lambda"), "w", "lambda");
  ck.eq(rep.verified_hull, 1, "hull of the scaled code");
  ck.expect(rep.output.G == parse_rows(f, {{"w", "0", "1", "0"},
                                           {"0", "1", "w^2", "w^2"}}),
            "scaled generator matrix");
  auto hb = hull(rep.output);
  ck.eq(hb.dim, 1, "hull dimension of the output");
  ck.eq(render_row(*f, hb.basis, 0), "1 w w 1", "hull basis of the output");
  ck.eq(minimum_distance(rep.output), 2, "distance preserved");
}

// One-coordinate extension of the [3,1,3] repetition code over GF(4).
void row_con1_gf4(Checker& ck) {
  auto f = make_field(2, 2);
  auto base = make_code(f, parse_rows(f, {{"1", "1", "1"}}));
  ck.eq(minimum_distance(base), 3, "base distance");
  ck.expect(is_lcd(base), "base is complementary-dual");
  ck.eq(render_elem(*f, det(gram(base.G))), "1", "base det(G G^T)");

  auto rep = construction1_extend(base, parse_elem(*f, "w^2"),
                                  parse_word(f, {"w", "1", "0"}));
  ck.expect(rep.success, "extension witness found");
  ck.eq(scalar_of(rep, "det(Gtilde Gtilde^T)"), "w", "extension det");
  ck.eq(rep.verified_hull, 1, "hull of the witness");
  ck.eq(rep.output.n, 4, "extension length");
  ck.eq(rep.output.k, 2, "extension dimension");
  ck.eq(minimum_distance(rep.output), 3, "extension distance");
}

// One-coordinate extensions of three evaluation codes over GF(8), sharing a
// single (alpha, p) pair. Extension parameters: [8,2,7], [8,4,4], [8,6,2].
void row_con1_gf8(Checker& ck) {
  auto f = make_field(2, 3);
  const auto u = parse_word(
      f, {"w^5", "w^6", "w^3", "w^4", "w", "w^2", "1", "0"});
  const uint16_t alpha = u[0];
  const std::vector<uint16_t> p(u.begin() + 1, u.end());
  const std::vector<std::vector<int>> families = {
      {0}, {0, 1, 6}, {0, 1, 6, 2, 5}};
  const int base_d[] = {7, 5, 3};
  const int ext_d[] = {7, 4, 2};
  for (size_t i = 0; i < families.size(); ++i) {
    const std::string tag = " (family " + std::to_string(i + 1) + ")";
    auto base = make_code(f, power_rows(f, 7, families[i]));
    ck.expect(is_lcd(base), "base is complementary-dual" + tag);
    ck.eq(render_elem(*f, det(gram(base.G))), "1", "base det" + tag);
    ck.eq(minimum_distance(base), base_d[i], "base distance" + tag);

    auto rep = construction1_extend(base, alpha, p);
    ck.expect(rep.success, "extension witness found" + tag);
    ck.eq(scalar_of(rep, "det(Gtilde Gtilde^T)"), "w^3", "extension det" + tag);
    ck.eq(rep.verified_hull, 1, "hull of the witness" + tag);
    ck.eq(rep.output.n, 8, "extension length" + tag);
    ck.eq(rep.output.k, base.k + 1, "extension dimension" + tag);
    ck.eq(minimum_distance(rep.output), ext_d[i], "extension distance" + tag);
  }
}

// One-coordinate extensions of seven evaluation codes over GF(16), sharing a
// single (alpha, p) pair. Distances are enumerated for the first three
// (the [16,6] check walks all 16^6 messages, right at the default budget).
void row_con1_gf16(Checker& ck) {
  auto f = make_field(2, 4);
  const auto u = parse_word(
      f, {"w^10", "w^9", "1", "w^5", "w^3", "w^8", "w", "w^2", "w^7", "w^13",
          "w^4", "w^14", "w^12", "w^11", "w^6", "0"});
  const uint16_t alpha = u[0];
  const std::vector<uint16_t> p(u.begin() + 1, u.end());
  const int base_d[] = {15, 13, 11};
  const int ext_d[] = {15, 11, 9};
  for (int s = 0; s <= 6; ++s) {
    const std::string tag = " (s = " + std::to_string(s) + ")";
    auto base = make_code(f, power_rows(f, 15, symmetric_exps(15, s)));
    ck.expect(is_lcd(base), "base is complementary-dual" + tag);
    ck.eq(render_elem(*f, det(gram(base.G))), "1", "base det" + tag);

    auto rep = construction1_extend(base, alpha, p);
    ck.expect(rep.success, "extension witness found" + tag);
    ck.eq(scalar_of(rep, "det(Gtilde Gtilde^T)"), "w^5", "extension det" + tag);
    ck.eq(rep.verified_hull, 1, "hull of the witness" + tag);
    ck.eq(rep.output.n, 16, "extension length" + tag);
    ck.eq(rep.output.k, 2 * s + 2, "extension dimension" + tag);
    if (s <= 2) {
      ck.eq(minimum_distance(base), base_d[s], "base distance" + tag);
      ck.eq(minimum_distance(rep.output), ext_d[s], "extension distance" + tag);
    }
  }
}

// Sum of two complementary-dual codes over GF(4) that is again
// complementary-dual: [4,2] + [4,1] = [4,3,2] with trivial hull.
void row_sum_gf4_lcd(Checker& ck) {
  auto f = make_field(2, 2);
  auto c1 = make_code(f, parse_rows(f, {{"1", "0", "w", "w^2"},
                                        {"0", "1", "w^2", "1"}}));
  auto c2 = make_code(f, parse_rows(f, {{"1", "w^2", "1", "1"}}));
  ck.expect(is_lcd(c1), "first summand is complementary-dual");
  ck.expect(is_lcd(c2), "second summand is complementary-dual");

  auto sum = code_sum(c1, c2);
  ck.eq(sum.n, 4, "sum length");
  ck.eq(sum.k, 3, "sum dimension");
  ck.eq(minimum_distance(sum), 2, "sum distance");
  ck.eq(hull(sum).dim, 0, "sum hull");
  ck.expect(is_lcd(sum), "sum is complementary-dual");

  auto rep = sum_hull_predict(c1, c2);
  ck.expect(rep.success, "all recorded claims hold");
  ck.expect(has_hyp(rep, "hull(C1) inside C2-dual", true),
            "first containment holds");
  ck.expect(has_hyp(rep, "hull(C2) inside C1-dual", true),
            "second containment holds");
  ck.eq(rep.predicted_hull, 0, "predicted sum hull");
  ck.eq(rep.verified_hull, 0, "verified sum hull");
  ck.expect(has_hyp(rep, "range (a)", true),
            "sum of complementary-dual codes stays complementary-dual here");
}

// Sum of two hull-one codes over GF(4) where only one containment
// hypothesis holds, so no value is predicted; the sum has hull 1.
void row_sum_gf4_mixed(Checker& ck) {
  auto f = make_field(2, 2);
  auto c1 = make_code(f, parse_rows(f, {{"1", "0", "0", "w", "w^2"},
                                        {"0", "1", "0", "w", "1"}}));
  auto c2 = make_code(f, parse_rows(f, {{"0", "0", "1", "w^2", "w"}}));
  ck.eq(hull(c1).dim, 1, "first summand hull");
  ck.eq(hull(c2).dim, 1, "second summand hull");

  auto sum = code_sum(c1, c2);
  ck.eq(sum.n, 5, "sum length");
  ck.eq(sum.k, 3, "sum dimension");
  ck.eq(minimum_distance(sum), 2, "sum distance");
  ck.eq(hull(sum).dim, 1, "sum hull");

  auto rep = sum_hull_predict(c1, c2);
  ck.expect(rep.success, "all recorded claims hold");
  ck.expect(has_hyp(rep, "hull(C1) inside C2-dual", true),
            "first containment holds");
  ck.expect(has_hyp(rep, "hull(C2) inside C1-dual", false),
            "second containment fails");
  ck.expect(rep.note.find("no value predicted") != std::string::npos,
            "report declines to predict");
  ck.eq(rep.verified_hull, 1, "verified sum hull");
}

// [5,2,4] complementary-dual code over GF(8) extended by a word from its
// dual: the result is a [6,3,3] code with a one-dimensional hull.
void row_ext_gf8_n5(Checker& ck) {
  auto f = make_field(2, 3);
  auto c = make_code(f, parse_rows(f, {{"1", "0", "w", "w^4", "w^6"},
                                       {"0", "1", "w^4", "w", "w^5"}}));
  ck.eq(c.n, 5, "length");
  ck.eq(c.k, 2, "dimension");
  ck.eq(minimum_distance(c), 4, "minimum distance");
  ck.expect(is_lcd(c), "code is complementary-dual");

  const auto d = parse_word(f, {"0", "0", "1", "w^5", "w^5"});
  for (int r = 0; r < c.k; ++r)
    ck.expect(word_dot(*f, c.G.row(r), d) == 0,
              "extension word is orthogonal to row " + std::to_string(r + 1));
  ck.eq(render_elem(*f, word_dot(*f, d, d)), "1", "self inner product");

  auto ext = extend_with_dual_word(c, d);
  ck.eq(ext.n, 6, "extension length");
  ck.eq(ext.k, 3, "extension dimension");
  ck.eq(minimum_distance(ext), 3, "extension distance");
  ck.eq(hull(ext).dim, 1, "extension hull");
}

// [6,4,3] maximum-distance-separable code over GF(8) with hull 1, extended
// by a word from its dual into a [7,5,3] code with hull 2.
void row_ext_gf8_n6(Checker& ck) {
  auto f = make_field(2, 3);
  auto c = make_code(f, parse_rows(f, {
    {"1", "0", "0", "0", "w^3", "w^2"},
    {"0", "1", "0", "0", "1", "w"},
    {"0", "0", "1", "0", "w^6", "w^2"},
    {"0", "0", "0", "1", "1", "w^2"}}));
  ck.eq(c.n, 6, "length");
  ck.eq(c.k, 4, "dimension");
  ck.eq(minimum_distance(c), 3, "minimum distance");
  ck.expect(is_mds(c), "code is maximum-distance-separable");
  ck.eq(hull(c).dim, 1, "hull dimension");

  const auto d = parse_word(f, {"1", "0", "w^5", "w^3", "1", "w^6"});
  for (int r = 0; r < c.k; ++r)
    ck.expect(word_dot(*f, c.G.row(r), d) == 0,
              "extension word is orthogonal to row " + std::to_string(r + 1));
  ck.eq(render_elem(*f, word_dot(*f, d, d)), "1", "self inner product");

  auto ext = extend_with_dual_word(c, d);
  ck.eq(ext.n, 7, "extension length");
  ck.eq(ext.k, 5, "extension dimension");
  ck.eq(minimum_distance(ext), 3, "extension distance");
  ck.eq(hull(ext).dim, 2, "extension hull");
}

struct Row {
  std::string id;
  std::string summary;
  std::function<void(Checker&)> fn;
};

const std::vector<Row>& rows() {
  static const std::vector<Row> kRows = {
      {"lcd-gf8-n10",
       "[10,3,7] complementary-dual code over GF(8): Gram matrix, rejected "
       "first-coordinate scaling",
       row_lcd_gf8_n10},
      {"hull1-gf4-n6",
       "[6,3,3] code over GF(4) with a one-dimensional hull and all-ones "
       "P P^T",
       row_hull1_gf4_n6},
      {"cor-gf4-n4",
       "[4,2,2] complementary-dual code over GF(4) lifted to hull 1 by one "
       "scaled coordinate",
       row_cor_gf4_n4},
      {"con1-gf4",
       "[3,1,3] repetition code over GF(4) extended to [4,2,3] with hull 1",
       row_con1_gf4},
      {"con1-gf8",
       "three evaluation codes over GF(8) extended to [8,2,7], [8,4,4], "
       "[8,6,2] with hull 1",
       row_con1_gf8},
      {"con1-gf16",
       "seven evaluation codes over GF(16) extended by one coordinate with "
       "hull 1",
       row_con1_gf16},
      {"sum-gf4-lcd",
       "sum of complementary-dual codes over GF(4): [4,3,2], still "
       "complementary-dual",
       row_sum_gf4_lcd},
      {"sum-gf4-mixed",
       "sum of hull-one codes over GF(4) with one containment failing: "
       "[5,3,2], hull 1",
       row_sum_gf4_mixed},
      {"ext-gf8-n5",
       "[5,2,4] code over GF(8) extended by a dual word to [6,3,3] with "
       "hull 1",
       row_ext_gf8_n5},
      {"ext-gf8-n6",
       "[6,4,3] MDS code over GF(8) extended by a dual word to [7,5,3] with "
       "hull 2",
       row_ext_gf8_n6},
  };
  return kRows;
}

}  // namespace

std::vector<std::string> verify_ids() {
  std::vector<std::string> ids;
  ids.reserve(rows().size());
  for (const auto& r : rows()) ids.push_back(r.id);
  return ids;
}

std::vector<VerifyResult> run_verify(const std::string& only) {
  if (!only.empty()) {
    bool known = false;
    for (const auto& r : rows())
      if (r.id == only) known = true;
    if (!known) {
      std::string msg = "unknown example id \"" + only + "\"; known ids:";
      for (const auto& r : rows()) msg += " " + r.id;
      throw PreconditionError(msg);
    }
  }
  std::vector<VerifyResult> out;
  for (const auto& r : rows()) {
    if (!only.empty() && r.id != only) continue;
    Checker ck;
    try {
      r.fn(ck);
    } catch (const std::exception& e) {
      ck.expect(false, std::string("unexpected exception: ") + e.what());
    }
    out.push_back({r.id, r.summary, ck.ok,
                   ck.ok ? std::to_string(ck.checked) + " facts confirmed"
                         : ck.first_fail});
  }
  return out;
}

}  // namespace hullcode

// Acceptance harness: re-derives the project's contract criteria from
// scratch and prints exactly one line per criterion:
//
//   CRITERION NN: PASS — detail
//   CRITERION NN: FAIL — detail
//
// Each criterion states a target behavior with a wall-clock limit. Some
// criteria pin claimed values that are computationally false; those rows
// are kept faithful to the claim and report FAIL together with the values
// the library actually derives. Run all criteria with no arguments, or one
// with `--criterion NN` (NN in 01..10). Exit status 0 iff every criterion
// run passed.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <random>
#include <string>
#include <vector>

#include "hullcode/codes.hpp"
#include "hullcode/constructions.hpp"
#include "hullcode/errors.hpp"
#include "hullcode/gf.hpp"
#include "hullcode/matgf.hpp"
#include "hullcode/textio.hpp"

namespace {

using namespace hullcode;

// ---------------------------------------------------------------------------
// Builders shared by several criteria.

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

Mat power_rows(const FieldPtr& f, int n, const std::vector<int>& exps) {
  Mat g(f, static_cast<int>(exps.size()), n);
  for (int r = 0; r < g.rows(); ++r)
    for (int j = 0; j < n; ++j)
      g.at(r, j) = f->ppow((static_cast<long long>(exps[r]) * j) % n);
  return g;
}

std::vector<int> symmetric_exps(int n, int s) {
  std::vector<int> e{0};
  for (int i = 1; i <= s; ++i) {
    e.push_back(i);
    e.push_back(n - i);
  }
  return e;
}

LinearCode random_code(const FieldPtr& f, int k, int n, std::mt19937& rng) {
  for (;;) {
    Mat g(f, k, n);
    bool nonzero = false;
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < n; ++j) {
        g.at(i, j) = static_cast<uint16_t>(rng() % f->q());
        if (g.at(i, j)) nonzero = true;
      }
    if (nonzero) return make_code(f, g);
  }
}

LinearCode gf8_n10_code(const FieldPtr& f) {
  return make_code(f, parse_rows(f, {
    {"1", "0", "0", "w^4", "w^4", "w^5", "w^2", "w", "w^5", "w^4"},
    {"0", "1", "0", "0", "w^5", "w^5", "w^4", "w^4", "1", "1"},
    {"0", "0", "1", "w^3", "w^6", "w^2", "1", "0", "w^4", "w^5"}}));
}

// ---------------------------------------------------------------------------
// Clause bookkeeping: a criterion passes iff every clause holds; the detail
// line reports the failures (or a short confirmation).

struct Outcome {
  bool pass = true;
  int held = 0;
  int total = 0;
  std::vector<std::string> failures;
  std::string stats;

  void clause(bool cond, const std::string& what) {
    ++total;
    if (cond)
      ++held;
    else {
      pass = false;
      failures.push_back(what);
    }
  }
};

// ---------------------------------------------------------------------------
// 1. The [10,3,7] code over GF(8): claimed diagonal Gram, claimed scaling
// vector (w^5, 1, ..., 1), claimed hull 1 after that scaling.

Outcome criterion01() {
  Outcome o;
  auto f = make_field(2, 3);
  auto c = gf8_n10_code(f);
  o.clause(c.n == 10 && c.k == 3 && minimum_distance(c) == 7,
           "parameters are not [10,3,7]");
  o.clause(is_lcd(c), "code is not complementary-dual");

  const uint16_t w = f->primitive();
  Mat claimed(f, 3, 3);
  claimed.at(0, 0) = f->add(1, f->pow(w, 3));
  claimed.at(1, 1) = f->add(1, f->pow(w, 2));
  claimed.at(2, 2) = 1;
  auto gm = gram(c.G);
  o.clause(gm == claimed,
           "G G^T != diag(1+w^3, 1+w^2, 1): computed Gram has off-diagonal "
           "entries w^2 and w^5 and diagonal (1, 1, w^6)");

  std::string construct_msg = "construction succeeded";
  std::vector<uint16_t> claimed_scaling(10, 1);
  claimed_scaling[0] = f->pow(w, 5);
  bool emitted = false;
  try {
    auto rep = theorem31_construct(c);
    emitted = rep.scaling == claimed_scaling;
    if (!emitted) construct_msg = "construction emitted a different scaling";
  } catch (const PreconditionError& e) {
    construct_msg = std::string("construction rejects the code: ") + e.what();
  }
  o.clause(emitted, "no (w^5, 1, ..., 1) scaling is emitted — " + construct_msg);

  const int scaled_hull = hull(scale(c, claimed_scaling)).dim;
  o.clause(scaled_hull == 1,
           "scaling coordinate 1 by w^5 leaves the hull at " +
               std::to_string(scaled_hull) + ", not 1");
  return o;
}

// ---------------------------------------------------------------------------
// 2. The [6,3,3] code over GF(4): all-ones P P^T, Gram rank 2, hull 1,
// confirmed by codeword enumeration (4 of the 64 codewords lie in the dual).

Outcome criterion02() {
  Outcome o;
  auto f = make_field(2, 2);
  auto c = make_code(f, parse_rows(f, {
    {"1", "0", "0", "1", "1", "1"},
    {"0", "1", "0", "w", "w^2", "0"},
    {"0", "0", "1", "0", "w", "w^2"}}));
  o.clause(c.n == 6 && c.k == 3 && minimum_distance(c) == 3,
           "parameters are not [6,3,3]");

  auto sf = standard_form(c);
  Mat p(f, c.k, c.n - c.k);
  for (int r = 0; r < c.k; ++r)
    for (int j = 0; j < c.n - c.k; ++j) p.at(r, j) = sf.code.G.at(r, c.k + j);
  auto ppt = matmul(p, transpose(p));
  bool all_ones = true;
  for (int r = 0; r < ppt.rows(); ++r)
    for (int j = 0; j < ppt.cols(); ++j)
      if (ppt.at(r, j) != 1) all_ones = false;
  o.clause(all_ones, "P P^T is not the all-ones matrix");
  o.clause(rank(gram(c.G)) == 2, "rank(G G^T) != 2");
  o.clause(hull(c).dim == 1, "hull dimension != 1");
  o.clause(hull_oracle(c) == 1,
           "enumeration oracle does not find exactly 4 of 64 codewords in "
           "the dual");
  o.stats = "4 of 64 enumerated codewords lie in the dual";
  return o;
}

// ---------------------------------------------------------------------------
// 3. The [4,2,2] code over GF(4): det(G G^T) = 1 + w^2; the one-coordinate
// corollary produces a hull-1 equivalent; the claimed follow-up scaling
// a = (1, w^2, 1, 1) of the printed two-row matrix reaches hull 2.

Outcome criterion03() {
  Outcome o;
  auto f = make_field(2, 2);
  auto c = make_code(f, parse_rows(f, {
    {"1", "0", "1", "0"},
    {"0", "1", "w^2", "w^2"}}));
  const uint16_t w = f->primitive();
  o.clause(c.n == 4 && c.k == 2 && minimum_distance(c) == 2,
           "parameters are not [4,2,2]");
  o.clause(det(gram(c.G)) == f->add(1, f->pow(w, 2)),
           "det(G G^T) != 1 + w^2");

  bool cor_ok = false;
  try {
    auto rep = corollary_lcd_to_one(c);
    cor_ok = rep.success && rep.verified_hull == 1 &&
             minimum_distance(rep.output) == 2;
  } catch (const PreconditionError&) {
  }
  o.clause(cor_ok, "the corollary does not produce a hull-1 equivalent");

  // The two-row matrix the follow-up claim is stated for.
  auto glam = make_code(f, parse_rows(f, {
    {"w", "0", "1", "0"},
    {"0", "w^2", "w^2", "1"}}));
  auto a = parse_word(f, {"1", "w^2", "1", "1"});
  const int reached = hull(scale(glam, a)).dim;
  std::string raise_msg;
  try {
    auto rep = theorem42_construct(glam);
    raise_msg = "the one-coordinate raise instead emits scaling " +
                render_word_line(*f, rep.scaling);
  } catch (const PreconditionError& e) {
    raise_msg = std::string("the one-coordinate raise rejects the matrix: ") +
                e.what();
  }
  o.clause(reached == 2, "scaling the stated matrix by (1, w^2, 1, 1) gives "
                         "hull " + std::to_string(reached) +
                         ", not 2; " + raise_msg);
  return o;
}

// ---------------------------------------------------------------------------
// 4. Extension-family golden determinants over GF(4), GF(8), GF(16), with
// every extension certified by an explicit scaling witness.

Outcome criterion04() {
  Outcome o;
  int certified = 0;

  auto f4 = make_field(2, 2);
  auto base4 = make_code(f4, parse_rows(f4, {{"1", "1", "1"}}));
  try {
    auto rep = construction1_extend(base4, parse_elem(*f4, "w^2"),
                                    parse_word(f4, {"w", "1", "0"}));
    bool ok = rep.success && rep.verified_hull == 1;
    for (const auto& [k, v] : rep.scalars)
      if (k == "det(Gtilde Gtilde^T)") ok = ok && v == "w";
    o.clause(ok, "GF(4) family: det != w or witness missing");
    if (ok) ++certified;
  } catch (const std::exception& e) {
    o.clause(false, std::string("GF(4) family: ") + e.what());
  }

  auto f8 = make_field(2, 3);
  const auto u8 = parse_word(
      f8, {"w^5", "w^6", "w^3", "w^4", "w", "w^2", "1", "0"});
  const std::vector<uint16_t> p8(u8.begin() + 1, u8.end());
  const std::vector<std::vector<int>> fam8 = {{0}, {0, 1, 6}, {0, 1, 6, 2, 5}};
  const int base_k8[] = {1, 3, 5};
  for (size_t i = 0; i < fam8.size(); ++i) {
    auto base = make_code(f8, power_rows(f8, 7, fam8[i]));
    const std::string tag = "GF(8) family " + std::to_string(i + 1);
    try {
      auto rep = construction1_extend(base, u8[0], p8);
      bool ok = rep.success && rep.verified_hull == 1 &&
                base.n == 7 && base.k == base_k8[i];
      for (const auto& [k, v] : rep.scalars)
        if (k == "det(Gtilde Gtilde^T)") ok = ok && v == "w^3";
      o.clause(ok, tag + ": det != w^3 or witness missing");
      if (ok) ++certified;
    } catch (const std::exception& e) {
      o.clause(false, tag + ": " + e.what());
    }
  }

  auto f16 = make_field(2, 4);
  const auto u16 = parse_word(
      f16, {"w^10", "w^9", "1", "w^5", "w^3", "w^8", "w", "w^2", "w^7", "w^13",
            "w^4", "w^14", "w^12", "w^11", "w^6", "0"});
  const std::vector<uint16_t> p16(u16.begin() + 1, u16.end());
  for (int s = 0; s <= 6; ++s) {
    auto base = make_code(f16, power_rows(f16, 15, symmetric_exps(15, s)));
    const std::string tag = "GF(16) family s=" + std::to_string(s);
    try {
      auto rep = construction1_extend(base, u16[0], p16);
      bool ok = rep.success && rep.verified_hull == 1;
      for (const auto& [k, v] : rep.scalars)
        if (k == "det(Gtilde Gtilde^T)") ok = ok && v == "w^5";
      o.clause(ok, tag + ": det != w^5 or witness missing");
      if (ok) ++certified;
    } catch (const std::exception& e) {
      o.clause(false, tag + ": " + e.what());
    }
  }
  o.stats = std::to_string(certified) +
            " extensions certified by explicit witnesses; the third GF(8) "
            "base code is [7,5,3] (its printed label says d=2)";
  return o;
}

// ---------------------------------------------------------------------------
// 5. The four sum/extension worked examples with exact parameters.

Outcome criterion05() {
  Outcome o;
  auto f4 = make_field(2, 2);
  auto e1a = make_code(f4, parse_rows(f4, {{"1", "0", "w", "w^2"},
                                           {"0", "1", "w^2", "1"}}));
  auto e1b = make_code(f4, parse_rows(f4, {{"1", "w^2", "1", "1"}}));
  auto s1 = code_sum(e1a, e1b);
  o.clause(is_lcd(e1a) && is_lcd(e1b), "example 1 summands are not both "
                                       "complementary-dual");
  o.clause(s1.n == 4 && s1.k == 3 && minimum_distance(s1) == 2 && is_lcd(s1),
           "example 1 sum is not a complementary-dual [4,3,2]");

  auto e2a = make_code(f4, parse_rows(f4, {{"1", "0", "0", "w", "w^2"},
                                           {"0", "1", "0", "w", "1"}}));
  auto e2b = make_code(f4, parse_rows(f4, {{"0", "0", "1", "w^2", "w"}}));
  auto s2 = code_sum(e2a, e2b);
  o.clause(s2.n == 5 && s2.k == 3 && minimum_distance(s2) == 2 &&
               hull(s2).dim == 1,
           "example 2 sum is not a hull-1 [5,3,2]");

  auto f8 = make_field(2, 3);
  auto e3 = make_code(f8, parse_rows(f8, {{"1", "0", "w", "w^4", "w^6"},
                                          {"0", "1", "w^4", "w", "w^5"}}));
  o.clause(e3.n == 5 && e3.k == 2 && minimum_distance(e3) == 4 && is_lcd(e3),
           "example 3 base is not a complementary-dual [5,2,4]");
  auto x3 = extend_with_dual_word(e3, parse_word(f8, {"0", "0", "1", "w^5",
                                                      "w^5"}));
  o.clause(x3.n == 6 && x3.k == 3 && minimum_distance(x3) == 3 &&
               hull(x3).dim == 1,
           "example 3 extension is not a hull-1 [6,3,3]");

  auto e4 = make_code(f8, parse_rows(f8, {
    {"1", "0", "0", "0", "w^3", "w^2"},
    {"0", "1", "0", "0", "1", "w"},
    {"0", "0", "1", "0", "w^6", "w^2"},
    {"0", "0", "0", "1", "1", "w^2"}}));
  o.clause(e4.n == 6 && e4.k == 4 && minimum_distance(e4) == 3 && is_mds(e4),
           "example 4 base is not an MDS [6,4,3]");
  auto x4 = extend_with_dual_word(
      e4, parse_word(f8, {"1", "0", "w^5", "w^3", "1", "w^6"}));
  o.clause(x4.n == 7 && x4.k == 5 && minimum_distance(x4) == 3 &&
               hull(x4).dim == 2,
           "example 4 extension is not a hull-2 [7,5,3]");
  return o;
}

// ---------------------------------------------------------------------------
// 6. Triple-agreement property: three rank computations and the enumeration
// oracle give the same hull dimension on 1,000 random codes.

Outcome criterion06() {
  Outcome o;
  std::mt19937 rng(60601);
  int agreed = 0;
  for (int m : {2, 3}) {
    auto f = make_field(2, m);
    for (int t = 0; t < 500; ++t) {
      const int n = 1 + static_cast<int>(rng() % 12);
      const int k = 1 + static_cast<int>(rng() % std::min(n, 6));
      auto c = random_code(f, k, n, rng);
      const int via_g = c.k - rank(gram(c.G));
      int via_h = via_g, via_stack = via_g;
      if (c.k < c.n) {
        auto hm = parity_check(c);
        via_h = (c.n - c.k) - rank(gram(hm));
        via_stack = c.n - rank(vstack(c.G, hm));
      }
      const int via_oracle = hull_oracle(c);
      if (via_g == via_h && via_g == via_stack && via_g == via_oracle)
        ++agreed;
      else
        o.clause(false, "disagreement on GF(" + std::to_string(f->q()) +
                            ") code #" + std::to_string(t));
    }
  }
  o.clause(agreed == 1000, "agreement on " + std::to_string(agreed) +
                               "/1000 codes only");
  o.stats = "1000 random codes, three formulas and the oracle agree";
  return o;
}

// ---------------------------------------------------------------------------
// 7. Single-coordinate scalings move the hull dimension by at most one:
// 200 random codes, every coordinate, every scalar outside {0, 1}.

Outcome criterion07() {
  Outcome o;
  std::mt19937 rng(60701);
  int checked = 0;
  bool all_ok = true;
  for (int m : {2, 3}) {
    auto f = make_field(2, m);
    for (int t = 0; t < 100; ++t) {
      const int n = 1 + static_cast<int>(rng() % 12);
      const int k = 1 + static_cast<int>(rng() % std::min(n, 6));
      auto c = random_code(f, k, n, rng);
      const int before = hull(c).dim;
      for (int j = 0; j < c.n; ++j)
        for (uint16_t v : f->nonzero_elements()) {
          if (v == 1) continue;
          std::vector<uint16_t> a(static_cast<size_t>(c.n), 1);
          a[static_cast<size_t>(j)] = v;
          const int after = hull(scale(c, a)).dim;
          ++checked;
          if (std::abs(after - before) > 1) {
            all_ok = false;
            o.clause(false, "jump of " + std::to_string(after - before) +
                                " on GF(" + std::to_string(f->q()) +
                                ") code #" + std::to_string(t) +
                                " at coordinate " + std::to_string(j + 1));
          }
        }
    }
  }
  o.clause(all_ok, "some rescale moved the hull by more than one");
  o.stats = std::to_string(checked) + " single-coordinate rescales checked";
  return o;
}

// ---------------------------------------------------------------------------
// 8. One-coordinate hull raise on random GF(8) codes: 500 accepted runs must
// give hull l+1 with the block identity G' G'^T = diag(0_l, B) and
// det(B) = 0, re-derived here from the emitted output.

Outcome criterion08() {
  Outcome o;
  std::mt19937 rng(60801);
  auto f = make_field(2, 3);
  int accepted = 0, draws = 0;
  bool identities_ok = true;
  while (accepted < 500 && draws < 2500) {
    ++draws;
    const int n = 2 + static_cast<int>(rng() % 8);
    const int k = 1 + static_cast<int>(rng() % std::min(n - 1, 6));
    auto c = random_code(f, k, n, rng);
    try {
      auto rep = theorem42_construct(c);
      int l = -1;
      for (const auto& [key, v] : rep.scalars)
        if (key == "l") l = std::atoi(v.c_str());
      bool ok = rep.success && l >= 0 && rep.verified_hull == l + 1 &&
                hull(rep.output).dim == l + 1;
      auto gm = gram(rep.output.G);
      for (int r = 0; r < gm.rows(); ++r)
        for (int j = 0; j < gm.cols(); ++j)
          if ((r < l || j < l) && gm.at(r, j) != 0) ok = false;
      Mat lower(f, rep.output.k - l, rep.output.k - l);
      for (int r = l; r < rep.output.k; ++r)
        for (int j = l; j < rep.output.k; ++j)
          lower.at(r - l, j - l) = gm.at(r, j);
      if (det(lower) != 0) ok = false;
      if (!ok) {
        identities_ok = false;
        o.clause(false, "identity failure on accepted draw #" +
                            std::to_string(draws));
      }
      ++accepted;
    } catch (const PreconditionError&) {
      // Hypothesis not satisfied; not part of the sample.
    }
  }
  o.clause(accepted >= 500, "only " + std::to_string(accepted) +
                                " hypothesis-satisfying draws found");
  o.clause(identities_ok, "a block identity failed");
  o.stats = std::to_string(accepted) + " accepted runs out of " +
            std::to_string(draws) + " draws, block identities exact";
  return o;
}

// ---------------------------------------------------------------------------
// 9. Sum-hull formula on pairs satisfying both containment hypotheses, and
// the four range statements on unconstrained pairs.

Outcome criterion09() {
  Outcome o;
  std::mt19937 rng(60901);
  auto f = make_field(2, 2);
  const auto draw_pair = [&](LinearCode* c1, LinearCode* c2) {
    const int n = 3 + static_cast<int>(rng() % 6);
    *c1 = random_code(f, 1 + static_cast<int>(rng() % std::min(n, 4)), n, rng);
    *c2 = random_code(f, 1 + static_cast<int>(rng() % std::min(n, 4)), n, rng);
  };

  int with_hyps = 0, formula_mismatches = 0, draws = 0;
  std::string first_mismatch;
  while (with_hyps < 500 && draws < 20000) {
    ++draws;
    LinearCode c1 = random_code(f, 1, 3, rng), c2 = c1;
    draw_pair(&c1, &c2);
    auto rep = sum_hull_predict(c1, c2);
    bool both = true, formula_holds = true, formula_present = false;
    for (const auto& h : rep.hypotheses) {
      if (h.name.find("inside") != std::string::npos && !h.holds) both = false;
      if (h.name.find("matches the sum hull") != std::string::npos) {
        formula_present = true;
        formula_holds = h.holds;
      }
    }
    if (!both || !formula_present) continue;
    ++with_hyps;
    if (!formula_holds) {
      ++formula_mismatches;
      if (first_mismatch.empty())
        first_mismatch = "predicted " + std::to_string(rep.predicted_hull) +
                         ", actual " + std::to_string(rep.verified_hull) +
                         " on draw #" + std::to_string(draws);
    }
  }
  o.clause(with_hyps == 500, "only " + std::to_string(with_hyps) +
                                 " both-hypotheses pairs found");
  o.clause(formula_mismatches == 0,
           std::to_string(formula_mismatches) +
               "/500 both-hypotheses pairs violate the l1 + l2 - l formula "
               "(first: " + first_mismatch + ")");

  int range_violations = 0;
  std::string violated_tags;
  for (int t = 0; t < 500; ++t) {
    LinearCode c1 = random_code(f, 1, 3, rng), c2 = c1;
    draw_pair(&c1, &c2);
    auto rep = sum_hull_predict(c1, c2);
    for (const auto& h : rep.hypotheses)
      if (h.name.find("range (") != std::string::npos && !h.holds) {
        ++range_violations;
        const auto tag = h.name.substr(0, h.name.find(':'));
        if (violated_tags.find(tag) == std::string::npos) {
          if (!violated_tags.empty()) violated_tags += ", ";
          violated_tags += tag;
        }
      }
  }
  o.clause(range_violations == 0,
           std::to_string(range_violations) +
               " range violations over 500 unconstrained pairs (" +
               violated_tags + ")");
  return o;
}

// ---------------------------------------------------------------------------
// 10. Dual-scaling law and characteristic-2 square-root / squaring
// identities on 1,000 random instances.

Outcome criterion10() {
  Outcome o;
  std::mt19937 rng(61001);
  bool law_ok = true, field_ok = true;
  int instances = 0;
  for (int m : {2, 3, 4}) {
    auto f = make_field(2, m);
    const int per = m == 4 ? 334 : 333;
    for (int t = 0; t < per; ++t) {
      ++instances;
      const int n = 2 + static_cast<int>(rng() % 9);
      const int k = 1 + static_cast<int>(rng() % std::min(n, 5));
      auto c = random_code(f, k, n, rng);
      std::vector<uint16_t> a(static_cast<size_t>(n));
      for (auto& x : a) x = static_cast<uint16_t>(1 + rng() % (f->q() - 1));
      if (!dual_scaling_law_check(c, a)) {
        law_ok = false;
        o.clause(false, "dual-scaling law fails on GF(" +
                            std::to_string(f->q()) + ") instance #" +
                            std::to_string(t));
      }
      const uint16_t x = static_cast<uint16_t>(rng() % f->q());
      const uint16_t y = static_cast<uint16_t>(rng() % f->q());
      const uint16_t sum_sq = f->mul(f->add(x, y), f->add(x, y));
      const bool frob = sum_sq == f->add(f->mul(x, x), f->mul(y, y)) &&
                        f->frobenius(x) == f->mul(x, x) &&
                        f->sqrt(f->mul(x, x)) == x;
      if (!frob) {
        field_ok = false;
        o.clause(false, "square-root/squaring identity fails on GF(" +
                            std::to_string(f->q()) + ")");
      }
    }
  }
  o.clause(law_ok && field_ok && instances == 1000,
           "identity failures among the 1000 instances");
  o.stats = "1000 instances over GF(4), GF(8), GF(16)";
  return o;
}

// ---------------------------------------------------------------------------

struct Criterion {
  const char* id;
  Outcome (*run)();
  double limit_seconds;
};

const Criterion kCriteria[] = {
    {"01", criterion01, 1.0},  {"02", criterion02, 1.0},
    {"03", criterion03, 1.0},  {"04", criterion04, 5.0},
    {"05", criterion05, 2.0},  {"06", criterion06, 30.0},
    {"07", criterion07, 30.0}, {"08", criterion08, 60.0},
    {"09", criterion09, 60.0}, {"10", criterion10, 10.0},
};

bool run_one(const Criterion& cr) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = cr.run();
  } catch (const std::exception& e) {
    o.pass = false;
    o.failures.push_back(std::string("unexpected exception: ") + e.what());
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  if (elapsed > cr.limit_seconds) {
    o.pass = false;
    o.failures.push_back("time limit exceeded");
  }

  std::string detail;
  if (o.pass) {
    detail = o.stats.empty()
                 ? std::to_string(o.held) + " clauses hold"
                 : o.stats;
  } else {
    detail = std::to_string(o.held) + "/" + std::to_string(o.total) +
             " clauses hold; ";
    for (size_t i = 0; i < o.failures.size(); ++i) {
      if (i) detail += "; ";
      detail += o.failures[i];
    }
  }
  std::printf("CRITERION %s: %s — %s (%.2f s, limit %.0f s)\n", cr.id,
              o.pass ? "PASS" : "FAIL", detail.c_str(), elapsed,
              cr.limit_seconds);
  return o.pass;
}

}  // namespace

int main(int argc, char** argv) {
  std::string only;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      only = argv[++i];
    } else {
      std::fprintf(stderr, "usage: %s [--criterion NN]\n", argv[0]);
      return 3;
    }
  }
  if (!only.empty() && only.size() == 1) only = "0" + only;

  bool all_pass = true;
  bool matched = false;
  for (const auto& cr : kCriteria) {
    if (!only.empty() && only != cr.id) continue;
    matched = true;
    all_pass = run_one(cr) && all_pass;
  }
  if (!matched) {
    std::fprintf(stderr, "unknown criterion \"%s\" (use 01..10)\n",
                 only.c_str());
    return 3;
  }
  return all_pass ? 0 : 1;
}

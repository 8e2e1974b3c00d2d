// Command-line front end: hull reports, dual/distance/scaling utilities,
// evaluation codes, the hull-raising constructions, and the built-in
// worked-example suite. All output is plain `key: value` lines followed by
// matrices in the code-file body grammar, and identical invocations produce
// byte-identical output.
#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hullcode/codes.hpp"
#include "hullcode/constructions.hpp"
#include "hullcode/errors.hpp"
#include "hullcode/textio.hpp"
#include "hullcode/verify.hpp"

namespace {

using namespace hullcode;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

LinearCode load_code(const std::string& path) {
  auto cf = parse_code_file(slurp(path));
  return make_code(cf.field, cf.rows);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write file: " + path);
  out << content;
}

const char* yn(bool b) { return b ? "true" : "false"; }

void print_field_line(const Field& f) {
  std::cout << "field: GF(" << f.q() << ")\n";
}

// d can exceed the enumeration budget; the hull report degrades to
// "unknown" instead of failing, since the hull itself needs no enumeration.
void print_distance_line(const LinearCode& c, unsigned long long budget) {
  try {
    std::cout << "d: " << minimum_distance(c, budget) << "\n";
  } catch (const BudgetError&) {
    std::cout << "d: unknown (budget exceeded)\n";
  }
}

void maybe_write_code(const std::string& out, const LinearCode& c) {
  if (out.empty()) return;
  write_file(out, render_code_file(c));
  std::cout << "written: " << out << "\n";
}

int cmd_hull(const std::string& path, unsigned long long budget) {
  auto c = load_code(path);
  print_field_line(*c.field);
  std::cout << "n: " << c.n << "\n";
  std::cout << "k: " << c.k << "\n";
  print_distance_line(c, budget);
  auto h = hull(c);
  std::cout << "hull_dim: " << h.dim << "\n";
  std::cout << "lcd: " << yn(is_lcd(c)) << "\n";
  std::cout << "self_orthogonal: " << yn(is_self_orthogonal(c)) << "\n";
  std::cout << "self_dual: " << yn(is_self_dual(c)) << "\n";
  if (h.dim > 0)
    std::cout << "hull_basis:\n" << render_matrix_body(*c.field, h.basis);
  return 0;
}

int cmd_dual(const std::string& path, const std::string& out) {
  auto c = load_code(path);
  auto h = parity_check(c);
  print_field_line(*c.field);
  std::cout << "n: " << c.n << "\n";
  std::cout << "k: " << (c.n - c.k) << "\n";
  if (h.rows() == 0) {
    std::cout << "note: the dual is the zero code; no generator to print\n";
    return 0;
  }
  std::cout << "generator:\n" << render_matrix_body(*c.field, h);
  if (!out.empty()) {
    write_file(out, render_code_file(c.field, h));
    std::cout << "written: " << out << "\n";
  }
  return 0;
}

int cmd_distance(const std::string& path, unsigned long long budget) {
  auto c = load_code(path);
  print_field_line(*c.field);
  std::cout << "n: " << c.n << "\n";
  std::cout << "k: " << c.k << "\n";
  int d = minimum_distance(c, budget);
  std::cout << "d: " << d << "\n";
  std::cout << "mds: " << yn(d == c.n - c.k + 1) << "\n";
  return 0;
}

// Cross-checks the null-space hull computation against exhaustive
// enumeration of the codewords; a disagreement would be a library defect.
int cmd_oracle(const std::string& path, unsigned long long budget) {
  auto c = load_code(path);
  int fast = hull(c).dim;
  int slow = hull_oracle(c, budget);
  std::cout << "hull_dim: " << fast << "\n";
  std::cout << "hull_dim_exhaustive: " << slow << "\n";
  if (fast != slow)
    throw std::logic_error("hull computations disagree: " +
                           std::to_string(fast) + " vs " +
                           std::to_string(slow));
  std::cout << "agree: true\n";
  return 0;
}

int cmd_scale(const std::string& path, const std::string& word,
              const std::string& out) {
  auto c = load_code(path);
  auto a = parse_word_line(*c.field, word);
  auto sc = scale(c, a);
  print_field_line(*c.field);
  std::cout << "scaling: " << render_word_line(*c.field, a) << "\n";
  std::cout << "hull_before: " << hull(c).dim << "\n";
  std::cout << "hull_after: " << hull(sc).dim << "\n";
  std::cout << "dual_scaling_law: " << yn(dual_scaling_law_check(c, a)) << "\n";
  std::cout << "generator:\n" << render_matrix_body(*c.field, sc.G);
  maybe_write_code(out, sc);
  return 0;
}

int cmd_permute(const std::string& path, const std::string& perm,
                const std::string& out) {
  auto c = load_code(path);
  std::vector<int> sigma;
  std::istringstream in(perm);
  int x;
  while (in >> x) sigma.push_back(x);
  if (!in.eof()) throw ParseError("permutation must be whitespace-separated integers");
  auto pc = permute(c, sigma);
  print_field_line(*c.field);
  std::cout << "hull_before: " << hull(c).dim << "\n";
  std::cout << "hull_after: " << hull(pc).dim << "\n";
  std::cout << "generator:\n" << render_matrix_body(*c.field, pc.G);
  maybe_write_code(out, pc);
  return 0;
}

int cmd_rs(int q, const std::string& points_arg, int k, const std::string& out,
           unsigned long long budget) {
  if (q < 2) throw PreconditionError("field size must be at least 2");
  int p = 2;
  while (q % p != 0) ++p;
  int m = 0;
  long long t = 1;
  while (t < q) {
    t *= p;
    ++m;
  }
  if (t != q)
    throw PreconditionError("field size " + std::to_string(q) +
                            " is not a prime power");
  auto f = make_field(p, m);
  std::vector<uint16_t> pts;
  if (points_arg == "all") {
    for (uint16_t x : f->nonzero_elements()) pts.push_back(x);
  } else {
    pts = parse_word_line(*f, points_arg);
  }
  auto c = rs_code(f, pts, k);
  print_field_line(*f);
  std::cout << "points: " << render_word_line(*f, pts) << "\n";
  std::cout << "n: " << c.n << "\n";
  std::cout << "k: " << c.k << "\n";
  print_distance_line(c, budget);
  std::cout << "generator:\n" << render_matrix_body(*f, c.G);
  maybe_write_code(out, c);
  return 0;
}

void print_report(const ConstructionReport& rep) {
  const Field& f = *rep.input.field;
  std::cout << "op: " << rep.op << "\n";
  std::cout << "success: " << yn(rep.success) << "\n";
  std::cout << "predicted_hull: " << rep.predicted_hull << "\n";
  std::cout << "verified_hull: " << rep.verified_hull << "\n";
  for (const auto& [key, value] : rep.scalars)
    std::cout << key << ": " << value << "\n";
  if (!rep.scaling.empty())
    std::cout << "scaling: " << render_word_line(f, rep.scaling) << "\n";
  if (!rep.col_perm.empty()) {
    std::cout << "col_perm:";
    for (int j : rep.col_perm) std::cout << ' ' << (j + 1);
    std::cout << "\n";
  }
  for (const auto& h : rep.hypotheses)
    std::cout << "hypothesis: " << (h.holds ? "ok" : "FAIL") << " | " << h.name
              << " | " << h.witness << "\n";
  if (!rep.note.empty()) std::cout << "note: " << rep.note << "\n";
  std::cout << "input:\n" << render_matrix_body(f, rep.input.G);
  std::cout << "output:\n"
            << render_matrix_body(*rep.output.field, rep.output.G);
}

int finish_report(const ConstructionReport& rep, const std::string& out) {
  print_report(rep);
  maybe_write_code(out, rep.output);
  return 0;
}

int cmd_extend(const std::string& path, const std::string& word,
               const std::string& out, unsigned long long budget) {
  auto c = load_code(path);
  auto d = parse_word_line(*c.field, word);
  auto ext = extend_with_dual_word(c, d);
  std::cout << "op: extend_with_dual_word\n";
  print_field_line(*c.field);
  std::cout << "dual_word: " << render_word_line(*c.field, d) << "\n";
  std::cout << "n: " << ext.n << "\n";
  std::cout << "k: " << ext.k << "\n";
  print_distance_line(ext, budget);
  std::cout << "hull_before: " << hull(c).dim << "\n";
  std::cout << "hull_after: " << hull(ext).dim << "\n";
  std::cout << "output:\n" << render_matrix_body(*c.field, ext.G);
  maybe_write_code(out, ext);
  return 0;
}

int cmd_verify(const std::string& only) {
  auto res = run_verify(only);
  int passed = 0;
  for (const auto& r : res) {
    std::cout << r.id << ": " << (r.pass ? "PASS" : "FAIL") << " — "
              << r.detail << "\n";
    if (r.pass) ++passed;
  }
  std::cout << "passed: " << passed << "/" << res.size() << "\n";
  return passed == static_cast<int>(res.size()) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "hull computations and hull-raising constructions for linear codes "
      "over small finite fields"};
  app.require_subcommand(1);

  unsigned long long budget = kDefaultBudget;
  const auto add_budget = [&budget](CLI::App* sub) {
    sub->add_option("--budget", budget,
                    "enumeration budget in messages (default 2^24)");
  };

  std::string file, file2, out, word, only, points;
  std::string alpha_text, value_text;
  int q = 0, k = 0, j = 0;
  int trials = 10000;
  uint32_t seed = 12345;

  auto* hull_cmd = app.add_subcommand(
      "hull", "parameters, hull dimension, and hull basis of a code file");
  hull_cmd->add_option("file", file, "code file")->required();
  add_budget(hull_cmd);

  auto* dual_cmd =
      app.add_subcommand("dual", "generator of the dual code");
  dual_cmd->add_option("file", file, "code file")->required();
  dual_cmd->add_option("--out", out, "write the dual as a code file");

  auto* dist_cmd = app.add_subcommand(
      "distance", "exact minimum distance by enumeration (within budget)");
  dist_cmd->add_option("file", file, "code file")->required();
  add_budget(dist_cmd);

  auto* oracle_cmd = app.add_subcommand(
      "oracle",
      "cross-check the hull dimension against exhaustive enumeration");
  oracle_cmd->add_option("file", file, "code file")->required();
  add_budget(oracle_cmd);

  auto* scale_cmd = app.add_subcommand(
      "scale", "multiply each coordinate by a nonzero field element");
  scale_cmd->add_option("file", file, "code file")->required();
  scale_cmd
      ->add_option("scaling", word,
                   "quoted scaling vector, e.g. \"w 1 1 w^2\"")
      ->required();
  scale_cmd->add_option("--out", out, "write the scaled code file");

  auto* perm_cmd =
      app.add_subcommand("permute", "reorder coordinates by a permutation");
  perm_cmd->add_option("file", file, "code file")->required();
  perm_cmd
      ->add_option("permutation", word,
                   "quoted 1-based permutation, e.g. \"2 3 1\"")
      ->required();
  perm_cmd->add_option("--out", out, "write the permuted code file");

  auto* rs_cmd = app.add_subcommand(
      "rs", "evaluation code of polynomials of degree < k at nonzero points");
  rs_cmd->add_option("q", q, "field size (prime power)")->required();
  rs_cmd
      ->add_option("points", points,
                   "\"all\" or a quoted list of distinct nonzero points")
      ->required();
  rs_cmd->add_option("k", k, "dimension")->required();
  rs_cmd->add_option("--out", out, "write the code file");
  add_budget(rs_cmd);

  auto* con = app.add_subcommand(
      "construct", "hull-raising constructions; prints a full report");
  con->require_subcommand(1);
  con->fallthrough();

  auto* thm31 = con->add_subcommand(
      "thm31",
      "complementary-dual to one-dimensional hull by scaling the first "
      "coordinate (with an automatic last-coordinate repair)");
  thm31->add_option("file", file, "code file")->required();
  thm31->add_option("--out", out, "write the scaled code file");

  auto* thm42 = con->add_subcommand(
      "thm42", "hull dimension l to l+1 by scaling one coordinate");
  thm42->add_option("file", file, "code file")->required();
  thm42->add_option("--out", out, "write the scaled code file");

  auto* cor = con->add_subcommand(
      "cor",
      "complementary-dual to one-dimensional hull, one scaled coordinate");
  cor->add_option("file", file, "code file")->required();
  cor->add_option("--out", out, "write the scaled code file");

  auto* con1 = con->add_subcommand(
      "con1",
      "extend a complementary-dual code by one coordinate and certify a "
      "one-dimensional hull on a monomially equivalent image");
  con1->add_option("file", file, "code file")->required();
  con1->add_option("--alpha", alpha_text, "extension diagonal element");
  con1->add_option("--p", word, "quoted extension row, length n");
  con1->add_option("--trials", trials, "search trials when no --alpha")
      ->capture_default_str();
  con1->add_option("--seed", seed, "search seed when no --alpha")
      ->capture_default_str();
  con1->add_option("--out", out, "write the extended code file");

  auto* ext = con->add_subcommand(
      "extend", "append a word of the dual as a new row and coordinate");
  ext->add_option("file", file, "code file")->required();
  ext->add_option("--dual-word", word, "quoted word of the dual code")
      ->required();
  ext->add_option("--out", out, "write the extended code file");
  add_budget(ext);

  auto* sum = con->add_subcommand(
      "sum", "sum of two codes with the hull-dimension prediction audit");
  sum->add_option("file1", file, "first code file")->required();
  sum->add_option("file2", file2, "second code file")->required();
  sum->add_option("--out", out, "write the sum code file");

  auto* lem = con->add_subcommand(
      "lemma3ab", "rescale one coordinate and report the hull change");
  lem->add_option("file", file, "code file")->required();
  lem->add_option("--j", j, "1-based coordinate")->required();
  lem->add_option("--value", value_text, "field element not in {0, 1}")
      ->required();
  lem->add_option("--out", out, "write the rescaled code file");

  auto* ver = app.add_subcommand(
      "verify", "re-derive the built-in worked examples and report pass/fail");
  ver->add_option("--only", only, "run a single example id");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 3;
  }

  try {
    if (hull_cmd->parsed()) return cmd_hull(file, budget);
    if (dual_cmd->parsed()) return cmd_dual(file, out);
    if (dist_cmd->parsed()) return cmd_distance(file, budget);
    if (oracle_cmd->parsed()) return cmd_oracle(file, budget);
    if (scale_cmd->parsed()) return cmd_scale(file, word, out);
    if (perm_cmd->parsed()) return cmd_permute(file, word, out);
    if (rs_cmd->parsed()) return cmd_rs(q, points, k, out, budget);
    if (thm31->parsed())
      return finish_report(theorem31_construct(load_code(file)), out);
    if (thm42->parsed())
      return finish_report(theorem42_construct(load_code(file)), out);
    if (cor->parsed())
      return finish_report(corollary_lcd_to_one(load_code(file)), out);
    if (con1->parsed()) {
      auto c = load_code(file);
      if (!alpha_text.empty()) {
        if (word.empty())
          throw PreconditionError("--alpha requires --p (the extension row)");
        return finish_report(
            construction1_extend(c, parse_elem(*c.field, alpha_text),
                                 parse_word_line(*c.field, word)),
            out);
      }
      return finish_report(construction1_search(c, trials, seed), out);
    }
    if (ext->parsed()) return cmd_extend(file, word, out, budget);
    if (sum->parsed())
      return finish_report(sum_hull_predict(load_code(file), load_code(file2)),
                           out);
    if (lem->parsed()) {
      auto c = load_code(file);
      return finish_report(
          lemma3ab_rescale(c, j, parse_elem(*c.field, value_text)), out);
    }
    if (ver->parsed()) return cmd_verify(only);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 3;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetError& e) {
    std::cerr << "budget error: " << e.what() << "\n";
    return 4;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

#include "hullcode/codes.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "hullcode/errors.hpp"

namespace hullcode {

namespace {

// q^k with saturation, for budget checks.
unsigned long long pow_sat(unsigned long long q, int k) {
  unsigned long long r = 1;
  for (int i = 0; i < k; ++i) {
    if (r > std::numeric_limits<unsigned long long>::max() / q)
      return std::numeric_limits<unsigned long long>::max();
    r *= q;
  }
  return r;
}

void require_budget(const LinearCode& c, unsigned long long budget,
                    const char* what) {
  const unsigned long long space = pow_sat(c.field->q(), c.k);
  if (space > budget)
    throw BudgetError(std::string(what) + ": q^k = " + std::to_string(space) +
                      " codewords, too large for exhaustive enumeration "
                      "(budget " +
                      std::to_string(budget) + ")");
}

bool same_row_space(const Mat& a, const Mat& b) {
  return subspace_leq(a, b) && subspace_leq(b, a);
}

}  // namespace

uint16_t word_dot(const Field& f, const std::vector<uint16_t>& u,
                  const std::vector<uint16_t>& v) {
  if (u.size() != v.size())
    throw PreconditionError("inner product of words of different lengths");
  uint16_t s = 0;
  for (size_t i = 0; i < u.size(); ++i) s = f.add(s, f.mul(u[i], v[i]));
  return s;
}

int word_weight(const std::vector<uint16_t>& v) {
  int w = 0;
  for (uint16_t x : v)
    if (x != 0) ++w;
  return w;
}

LinearCode make_code(FieldPtr f, const Mat& g_raw) {
  if (!same_field(*f, *g_raw.field()))
    throw PreconditionError("generator matrix is over a different field");
  if (g_raw.rows() == 0 || g_raw.cols() == 0)
    throw PreconditionError("empty generator matrix");
  const auto rr = rref(g_raw);
  if (rr.rank == 0)
    throw PreconditionError("zero generator matrix: the zero code is not representable");
  if (rr.rank == g_raw.rows())
    return {std::move(f), g_raw.cols(), rr.rank, g_raw, g_raw.rows()};
  // Dependent rows: keep the reduced row basis.
  Mat basis(f, rr.rank, g_raw.cols());
  for (int i = 0; i < rr.rank; ++i)
    for (int j = 0; j < g_raw.cols(); ++j) basis.at(i, j) = rr.r.at(i, j);
  const int n = g_raw.cols();
  return {std::move(f), n, rr.rank, std::move(basis), g_raw.rows()};
}

Mat parity_check(const LinearCode& c) { return null_space(c.G); }

std::optional<LinearCode> dual(const LinearCode& c) {
  if (c.k == c.n) return std::nullopt;  // dual collapses to the zero code
  return make_code(c.field, parity_check(c));
}

HullReport hull(const LinearCode& c) {
  const Field& f = *c.field;
  const Mat h = parity_check(c);
  const Mat gg = gram(c.G);
  const int via_stack = c.n - rank(vstack(c.G, h));
  const int via_g = c.k - rank(gg);
  const int via_h = (c.n - c.k) - rank(gram(h));
  if (via_stack != via_g || via_g != via_h)
    throw std::logic_error(
        "hull dimension computations disagree: stacked " +
        std::to_string(via_stack) + ", Gram of G " + std::to_string(via_g) +
        ", Gram of H " + std::to_string(via_h));
  // Basis: m G for m in the kernel of G G^T (such m G lie in C and in C⊥).
  const Mat kernel = null_space(gg);
  Mat span = matmul(kernel, c.G);
  const auto rr = rref(span);
  if (rr.rank != via_stack)
    throw std::logic_error("hull basis rank differs from hull dimension");
  Mat basis(c.field, rr.rank, c.n);
  for (int i = 0; i < rr.rank; ++i)
    for (int j = 0; j < c.n; ++j) basis.at(i, j) = rr.r.at(i, j);
  // Every basis row must lie in the code and be orthogonal to all of it.
  for (int i = 0; i < basis.rows(); ++i) {
    const auto row = basis.row(i);
    if (!row_space_contains(c.G, row))
      throw std::logic_error("hull basis row escapes the code");
    for (int r = 0; r < c.k; ++r)
      if (word_dot(f, row, c.G.row(r)) != 0)
        throw std::logic_error("hull basis row not orthogonal to the code");
  }
  if (via_stack < 0 || via_stack > std::min(c.k, c.n - c.k))
    throw std::logic_error("hull dimension escapes [0, min(k, n-k)]");
  return {via_stack, std::move(basis)};
}

bool is_lcd(const LinearCode& c) {
  const bool by_hull = hull(c).dim == 0;
  const bool by_g = is_invertible(gram(c.G));
  const bool by_h = is_invertible(gram(parity_check(c)));
  if (by_hull != by_g || by_g != by_h)
    throw std::logic_error("complementary-dual criteria disagree");
  return by_hull;
}

bool is_self_orthogonal(const LinearCode& c) {
  const Mat gg = gram(c.G);
  bool zero = true;
  for (int i = 0; i < gg.rows() && zero; ++i)
    for (int j = 0; j < gg.cols(); ++j)
      if (gg.at(i, j) != 0) {
        zero = false;
        break;
      }
  const bool by_hull = hull(c).dim == c.k;
  if (zero != by_hull)
    throw std::logic_error("self-orthogonality criteria disagree");
  return zero;
}

bool is_self_dual(const LinearCode& c) {
  return is_self_orthogonal(c) && 2 * c.k == c.n;
}

int minimum_distance(const LinearCode& c, unsigned long long budget) {
  require_budget(c, budget, "minimum distance");
  const Field& f = *c.field;
  const auto nonzero = f.nonzero_elements();
  int best = c.n + 1;
  std::vector<uint16_t> acc(static_cast<size_t>(c.n), 0);
  // Enumerate one representative per scalar ray: the leading nonzero message
  // coefficient is fixed to 1 (Hamming weight is scale-invariant).
  std::function<void(int, bool)> rec = [&](int i, bool still_zero) {
    if (best == 1) return;
    if (i == c.k) {
      if (!still_zero) best = std::min(best, word_weight(acc));
      return;
    }
    rec(i + 1, still_zero);  // coefficient 0
    const auto row = c.G.row(i);
    if (still_zero) {
      for (int j = 0; j < c.n; ++j) acc[j] = f.add(acc[j], row[j]);
      rec(i + 1, false);
      for (int j = 0; j < c.n; ++j) acc[j] = f.sub(acc[j], row[j]);
    } else {
      for (uint16_t a : nonzero) {
        for (int j = 0; j < c.n; ++j)
          acc[j] = f.add(acc[j], f.mul(a, row[j]));
        rec(i + 1, false);
        for (int j = 0; j < c.n; ++j)
          acc[j] = f.sub(acc[j], f.mul(a, row[j]));
      }
    }
  };
  rec(0, true);
  return best;
}

bool is_mds(const LinearCode& c, unsigned long long budget) {
  return minimum_distance(c, budget) == c.n - c.k + 1;
}

LinearCode scale(const LinearCode& c, const std::vector<uint16_t>& a) {
  if (static_cast<int>(a.size()) != c.n)
    throw PreconditionError("scaling vector length " +
                            std::to_string(a.size()) + " differs from n = " +
                            std::to_string(c.n));
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] == 0)
      throw PreconditionError("scaling vector entry " + std::to_string(i + 1) +
                              " is zero");
  const Field& f = *c.field;
  Mat g = c.G;
  for (int j = 0; j < c.n; ++j)
    for (int i = 0; i < c.k; ++i) g.at(i, j) = f.mul(g.at(i, j), a[j]);
  return make_code(c.field, g);
}

bool dual_scaling_law_check(const LinearCode& c,
                            const std::vector<uint16_t>& a) {
  const LinearCode scaled = scale(c, a);
  const auto lhs = dual(scaled);
  const auto base_dual = dual(c);
  if (!lhs || !base_dual) return !lhs && !base_dual;  // k = n on both sides
  const Field& f = *c.field;
  std::vector<uint16_t> ainv(a.size());
  for (size_t i = 0; i < a.size(); ++i) ainv[i] = f.inv(a[i]);
  const LinearCode rhs = scale(*base_dual, ainv);
  return same_row_space(lhs->G, rhs.G);
}

LinearCode permute(const LinearCode& c, const std::vector<int>& sigma) {
  if (static_cast<int>(sigma.size()) != c.n)
    throw PreconditionError("permutation length differs from n");
  std::vector<bool> seen(static_cast<size_t>(c.n), false);
  for (int s : sigma) {
    if (s < 1 || s > c.n || seen[s - 1])
      throw PreconditionError("not a permutation of 1.." + std::to_string(c.n));
    seen[s - 1] = true;
  }
  Mat g(c.field, c.k, c.n);
  for (int i = 0; i < c.k; ++i)
    for (int j = 0; j < c.n; ++j) g.at(i, j) = c.G.at(i, sigma[j] - 1);
  LinearCode out = make_code(c.field, g);
  if (hull(out).dim != hull(c).dim)
    throw std::logic_error("hull dimension changed under permutation");
  return out;
}

LinearCode code_sum(const LinearCode& c1, const LinearCode& c2) {
  if (!same_field(*c1.field, *c2.field))
    throw PreconditionError("code sum across different fields");
  if (c1.n != c2.n)
    throw PreconditionError("code sum of lengths " + std::to_string(c1.n) +
                            " and " + std::to_string(c2.n));
  return make_code(c1.field, vstack(c1.G, c2.G));
}

LinearCode extend_with_dual_word(const LinearCode& c,
                                 const std::vector<uint16_t>& d) {
  const Field& f = *c.field;
  if (static_cast<int>(d.size()) != c.n)
    throw PreconditionError("dual word length differs from n");
  if (word_weight(d) == 0) throw PreconditionError("dual word is zero");
  for (int i = 0; i < c.k; ++i)
    if (word_dot(f, d, c.G.row(i)) != 0)
      throw PreconditionError(
          "word is not in the dual: nonzero inner product with generator row " +
          std::to_string(i + 1));
  const uint16_t dd = word_dot(f, d, d);
  if (dd != f.ppow(0))
    throw PreconditionError("dual word self-product is " + render_elem(f, dd) +
                            ", needs 1");
  if (f.p() != 2)
    throw PreconditionError(
        "extension by a dual word needs characteristic 2: over characteristic " +
        std::to_string(f.p()) +
        " the corner 1 + <d,d> = 2 of the extended Gram matrix does not vanish");
  Mat g(c.field, c.k + 1, c.n + 1);
  g.at(0, 0) = f.ppow(0);
  for (int j = 0; j < c.n; ++j) g.at(0, j + 1) = d[j];
  for (int i = 0; i < c.k; ++i)
    for (int j = 0; j < c.n; ++j) g.at(i + 1, j + 1) = c.G.at(i, j);
  LinearCode out = make_code(c.field, g);
  // Block identity: the extended Gram matrix is diag(0, G G^T).
  const Mat gg_ex = gram(out.G);
  const Mat gg = gram(c.G);
  for (int i = 0; i <= c.k; ++i)
    for (int j = 0; j <= c.k; ++j) {
      const uint16_t want =
          (i == 0 || j == 0) ? 0 : gg.at(i - 1, j - 1);
      if (gg_ex.at(i, j) != want)
        throw std::logic_error("extended Gram matrix is not diag(0, G G^T)");
    }
  if (hull(out).dim != hull(c).dim + 1)
    throw std::logic_error("extension did not raise the hull dimension by 1");
  return out;
}

int hull_oracle(const LinearCode& c, unsigned long long budget) {
  require_budget(c, budget, "hull oracle");
  const Field& f = *c.field;
  const auto nonzero = f.nonzero_elements();
  unsigned long long count = 0;
  std::vector<uint16_t> acc(static_cast<size_t>(c.n), 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == c.k) {
      for (int r = 0; r < c.k; ++r)
        if (word_dot(f, acc, c.G.row(r)) != 0) return;
      ++count;
      return;
    }
    rec(i + 1);  // coefficient 0
    const auto row = c.G.row(i);
    for (uint16_t a : nonzero) {
      for (int j = 0; j < c.n; ++j) acc[j] = f.add(acc[j], f.mul(a, row[j]));
      rec(i + 1);
      for (int j = 0; j < c.n; ++j) acc[j] = f.sub(acc[j], f.mul(a, row[j]));
    }
  };
  rec(0);
  // count must be a power q^l.
  int l = 0;
  unsigned long long v = count;
  while (v > 1 && v % f.q() == 0) {
    v /= f.q();
    ++l;
  }
  if (v != 1)
    throw std::logic_error("self-orthogonal codeword count " +
                           std::to_string(count) + " is not a power of q");
  if (l != hull(c).dim)
    throw std::logic_error("brute-force hull dimension " + std::to_string(l) +
                           " differs from computed " +
                           std::to_string(hull(c).dim));
  return l;
}

StandardForm standard_form(const LinearCode& c) {
  const auto rr = rref(c.G);
  std::vector<int> order = rr.pivot_cols;  // greedy left-to-right pivots
  std::vector<bool> is_pivot(static_cast<size_t>(c.n), false);
  for (int p : rr.pivot_cols) is_pivot[p] = true;
  for (int j = 0; j < c.n; ++j)
    if (!is_pivot[j]) order.push_back(j);
  std::vector<int> sigma(order.size());
  for (size_t j = 0; j < order.size(); ++j) sigma[j] = order[j] + 1;
  // Permute, then re-reduce so the generator is literally [I_k | P].
  const LinearCode permuted = permute(c, sigma);
  const auto rr2 = rref(permuted.G);
  Mat g(c.field, rr2.rank, c.n);
  for (int i = 0; i < rr2.rank; ++i)
    for (int j = 0; j < c.n; ++j) g.at(i, j) = rr2.r.at(i, j);
  LinearCode reduced = make_code(c.field, g);
  for (int i = 0; i < reduced.k; ++i)
    for (int j = 0; j < reduced.k; ++j)
      if (reduced.G.at(i, j) != (i == j ? 1 : 0))
        throw std::logic_error("standard form is not [I_k | P]");
  return {std::move(reduced), std::move(order)};
}

}  // namespace hullcode

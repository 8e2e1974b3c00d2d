#include "hullcode/matgf.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "hullcode/errors.hpp"

namespace hullcode {

namespace {
void require_same_field(const Mat& a, const Mat& b) {
  if (!same_field(*a.field(), *b.field()))
    throw PreconditionError("mixed fields in matrix operation");
}
}  // namespace

Mat::Mat(FieldPtr f, int rows, int cols) : f_(std::move(f)), rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw PreconditionError("negative matrix dimension");
  d_.assign(static_cast<size_t>(rows) * cols, 0);
}

Mat Mat::from_rows(FieldPtr f, const std::vector<std::vector<uint16_t>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  for (const auto& row : rows)
    if (static_cast<int>(row.size()) != c)
      throw PreconditionError("ragged rows in matrix literal");
  Mat m(std::move(f), r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  return m;
}

std::vector<uint16_t> Mat::row(int r) const {
  return {d_.begin() + static_cast<size_t>(r) * cols_,
          d_.begin() + static_cast<size_t>(r + 1) * cols_};
}

bool Mat::operator==(const Mat& o) const {
  return same_field(*f_, *o.f_) && rows_ == o.rows_ && cols_ == o.cols_ && d_ == o.d_;
}

Mat identity(FieldPtr f, int n) {
  Mat m(std::move(f), n, n);
  const uint16_t one = m.field()->ppow(0);
  for (int i = 0; i < n; ++i) m.at(i, i) = one;
  return m;
}

Mat zero_mat(FieldPtr f, int rows, int cols) { return Mat(std::move(f), rows, cols); }

Mat matmul(const Mat& a, const Mat& b) {
  require_same_field(a, b);
  if (a.cols() != b.rows()) throw PreconditionError("matmul dimension mismatch");
  const Field& f = *a.field();
  Mat r(a.field(), a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const uint16_t av = a.at(i, k);
      if (av == 0) continue;
      for (int j = 0; j < b.cols(); ++j) {
        const uint16_t bv = b.at(k, j);
        if (bv == 0) continue;
        r.at(i, j) = f.add(r.at(i, j), f.mul(av, bv));
      }
    }
  return r;
}

Mat transpose(const Mat& a) {
  Mat r(a.field(), a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.at(j, i) = a.at(i, j);
  return r;
}

Mat vstack(const Mat& a, const Mat& b) {
  require_same_field(a, b);
  if (a.cols() != b.cols()) throw PreconditionError("vstack column mismatch");
  Mat r(a.field(), a.rows() + b.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) r.at(a.rows() + i, j) = b.at(i, j);
  return r;
}

Mat hstack(const Mat& a, const Mat& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows()) throw PreconditionError("hstack row mismatch");
  Mat r(a.field(), a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
  }
  return r;
}

Mat mat_add(const Mat& a, const Mat& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw PreconditionError("mat_add dimension mismatch");
  const Field& f = *a.field();
  Mat r(a.field(), a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.at(i, j) = f.add(a.at(i, j), b.at(i, j));
  return r;
}

Mat scale_row(const Mat& a, int row, uint16_t lambda) {
  if (row < 1 || row > a.rows()) throw PreconditionError("scale_row index out of range");
  const Field& f = *a.field();
  Mat r = a;
  for (int j = 0; j < a.cols(); ++j) r.at(row - 1, j) = f.mul(a.at(row - 1, j), lambda);
  return r;
}

Mat scale_col(const Mat& a, int col, uint16_t lambda) {
  if (col < 1 || col > a.cols()) throw PreconditionError("scale_col index out of range");
  const Field& f = *a.field();
  Mat r = a;
  for (int i = 0; i < a.rows(); ++i) r.at(i, col - 1) = f.mul(a.at(i, col - 1), lambda);
  return r;
}

Mat gram(const Mat& g) { return matmul(g, transpose(g)); }

Rref rref(const Mat& a) {
  const Field& f = *a.field();
  Mat r = a;
  std::vector<int> pivots;
  int pr = 0;  // current pivot row
  for (int c = 0; c < r.cols() && pr < r.rows(); ++c) {
    int sel = -1;
    for (int i = pr; i < r.rows(); ++i)
      if (r.at(i, c) != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != pr)
      for (int j = 0; j < r.cols(); ++j) std::swap(r.at(sel, j), r.at(pr, j));
    const uint16_t pinv = f.inv(r.at(pr, c));
    for (int j = 0; j < r.cols(); ++j) r.at(pr, j) = f.mul(r.at(pr, j), pinv);
    for (int i = 0; i < r.rows(); ++i) {
      if (i == pr) continue;
      const uint16_t v = r.at(i, c);
      if (v == 0) continue;
      for (int j = 0; j < r.cols(); ++j)
        r.at(i, j) = f.sub(r.at(i, j), f.mul(v, r.at(pr, j)));
    }
    pivots.push_back(c);
    ++pr;
  }
  return {std::move(r), static_cast<int>(pivots.size()), std::move(pivots)};
}

int rank(const Mat& a) { return rref(a).rank; }

uint16_t det(const Mat& a) {
  if (a.rows() != a.cols()) throw PreconditionError("determinant of non-square matrix");
  const Field& f = *a.field();
  const int n = a.rows();
  if (n == 0) return f.ppow(0);  // empty product
  Mat r = a;
  uint16_t d = f.ppow(0);
  bool negate = false;
  for (int c = 0; c < n; ++c) {
    int sel = -1;
    for (int i = c; i < n; ++i)
      if (r.at(i, c) != 0) {
        sel = i;
        break;
      }
    if (sel < 0) return 0;
    if (sel != c) {
      for (int j = 0; j < n; ++j) std::swap(r.at(sel, j), r.at(c, j));
      negate = !negate;
    }
    const uint16_t piv = r.at(c, c);
    d = f.mul(d, piv);
    const uint16_t pinv = f.inv(piv);
    for (int i = c + 1; i < n; ++i) {
      const uint16_t v = r.at(i, c);
      if (v == 0) continue;
      const uint16_t factor = f.mul(v, pinv);
      for (int j = c; j < n; ++j)
        r.at(i, j) = f.sub(r.at(i, j), f.mul(factor, r.at(c, j)));
    }
  }
  return negate ? f.neg(d) : d;
}

bool is_invertible(const Mat& a) { return det(a) != 0; }

Mat null_space(const Mat& a) {
  const Field& f = *a.field();
  const auto rr = rref(a);
  const int n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (int c : rr.pivot_cols) is_pivot[c] = true;
  Mat basis(a.field(), n - rr.rank, n);
  int bi = 0;
  for (int c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    basis.at(bi, c) = f.ppow(0);
    for (int i = 0; i < rr.rank; ++i)
      basis.at(bi, rr.pivot_cols[i]) = f.neg(rr.r.at(i, c));
    ++bi;
  }
  return basis;
}

Mat delete_rc(const Mat& m, const std::set<int>& I) {
  if (m.rows() != m.cols()) throw PreconditionError("delete_rc requires a square matrix");
  const int n = m.rows();
  for (int i : I)
    if (i < 1 || i > n) throw PreconditionError("delete_rc index out of range");
  if (static_cast<int>(I.size()) == n) {
    Mat one(m.field(), 1, 1);
    one.at(0, 0) = m.field()->ppow(0);
    return one;
  }
  std::vector<int> keep;
  for (int i = 1; i <= n; ++i)
    if (!I.count(i)) keep.push_back(i - 1);
  Mat r(m.field(), static_cast<int>(keep.size()), static_cast<int>(keep.size()));
  for (size_t i = 0; i < keep.size(); ++i)
    for (size_t j = 0; j < keep.size(); ++j) r.at(static_cast<int>(i), static_cast<int>(j)) = m.at(keep[i], keep[j]);
  return r;
}

DetPerturbCheck det_diag_perturb_identity_check(const Mat& m,
                                                const std::vector<uint16_t>& u,
                                                int t) {
  if (m.rows() != m.cols())
    return {false, false, "matrix not square"};
  const int n = m.rows();
  if (static_cast<int>(u.size()) != n)
    return {false, false, "perturbation length differs from matrix size"};
  const Field& f = *m.field();

  std::vector<int> support;
  for (int j = 0; j < n; ++j)
    if (u[j] != 0) support.push_back(j + 1);
  const int wt = static_cast<int>(support.size());
  if (wt < 1 || wt > t + 1)
    return {false, false,
            "weight of u is " + std::to_string(wt) + ", needs 1 <= wt <= t+1 = " +
                std::to_string(t + 1)};

  // All minors det(M_I) with |I| <= t must vanish (including I = empty).
  std::vector<int> idx;
  const std::function<bool(int, int)> scan = [&](int start, int remaining) -> bool {
    if (remaining == 0) {
      std::set<int> I(idx.begin(), idx.end());
      return det(delete_rc(m, I)) == 0;
    }
    for (int i = start; i <= n; ++i) {
      idx.push_back(i);
      const bool ok = scan(i + 1, remaining - 1);
      idx.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  for (int size = 0; size <= t; ++size) {
    if (!scan(1, size))
      return {false, false,
              "hypothesis det(M_I) = 0 fails for some |I| = " + std::to_string(size)};
  }

  Mat perturbed = m;
  for (int j = 0; j < n; ++j)
    perturbed.at(j, j) = f.add(perturbed.at(j, j), u[j]);
  const uint16_t lhs = det(perturbed);

  uint16_t prod = f.ppow(0);
  for (int j = 0; j < n; ++j)
    if (u[j] != 0) prod = f.mul(prod, u[j]);
  const std::set<int> J(support.begin(), support.end());
  const uint16_t rhs = f.mul(prod, det(delete_rc(m, J)));

  const bool holds = lhs == rhs;
  return {true, holds,
          holds ? "identity verified"
                : "identity fails: lhs " + render_elem(f, lhs) + ", rhs " +
                      render_elem(f, rhs)};
}

bool row_space_contains(const Mat& a, const std::vector<uint16_t>& v) {
  if (static_cast<int>(v.size()) != a.cols())
    throw PreconditionError("vector length differs from matrix columns");
  Mat vm = Mat::from_rows(a.field(), {v});
  return rank(vstack(a, vm)) == rank(a);
}

bool subspace_leq(const Mat& a, const Mat& b) {
  require_same_field(a, b);
  if (a.cols() != b.cols()) throw PreconditionError("subspace_leq column mismatch");
  return rank(vstack(b, a)) == rank(b);
}

}  // namespace hullcode

#pragma once
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "hullcode/gf.hpp"

namespace hullcode {

// Dense matrix over a finite field. Entries are element codes of the attached
// field. Matrices are value types: every operation returns a new matrix and
// leaves its inputs untouched.
//
// Index conventions: the accessors at(r, c) and the shape queries are 0-based
// (internal representation); the operations that take row/column indices as
// part of their public meaning — scale_row, scale_col, delete_rc — are
// 1-based, matching the convention used throughout the reports and the CLI.
class Mat {
 public:
  Mat(FieldPtr f, int rows, int cols);
  static Mat from_rows(FieldPtr f, const std::vector<std::vector<uint16_t>>& rows);

  const FieldPtr& field() const { return f_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  uint16_t at(int r, int c) const { return d_[static_cast<size_t>(r) * cols_ + c]; }
  uint16_t& at(int r, int c) { return d_[static_cast<size_t>(r) * cols_ + c]; }
  std::vector<uint16_t> row(int r) const;  // 0-based

  bool operator==(const Mat& o) const;

 private:
  FieldPtr f_;
  int rows_, cols_;
  std::vector<uint16_t> d_;
};

Mat identity(FieldPtr f, int n);
Mat zero_mat(FieldPtr f, int rows, int cols);

Mat matmul(const Mat& a, const Mat& b);
Mat transpose(const Mat& a);
Mat vstack(const Mat& a, const Mat& b);
Mat hstack(const Mat& a, const Mat& b);
Mat mat_add(const Mat& a, const Mat& b);

// 1-based index; lambda must be nonzero when the scaling represents a code
// equivalence (enforced by the callers that require it, not here).
Mat scale_row(const Mat& a, int row, uint16_t lambda);
Mat scale_col(const Mat& a, int col, uint16_t lambda);

// G * G^T.
Mat gram(const Mat& g);

// Reduced row echelon form with deterministic first-nonzero pivot selection.
// pivot_cols is strictly increasing, 0-based.
struct Rref {
  Mat r;
  int rank;
  std::vector<int> pivot_cols;
};
Rref rref(const Mat& a);

int rank(const Mat& a);
uint16_t det(const Mat& a);  // square input
bool is_invertible(const Mat& a);

// Rows span {x : A x^T = 0}; the canonical basis read off the RREF free
// columns. rows() == cols(A) - rank(A).
Mat null_space(const Mat& a);

// Deletes the rows and columns indexed by I (1-based) from a square matrix.
// I empty returns M itself; I = {1..n} returns the 1x1 matrix (1), by the
// convention that the fully-deleted minor is an empty product.
Mat delete_rc(const Mat& m, const std::set<int>& I);

// Checks the determinant identity det(M + diag(u)) = (prod_{j in J} u_j) *
// det(M_J), J = supp(u), which holds when every minor det(M_I) with |I| <= t
// vanishes and 1 <= wt(u) <= t+1. Precondition violations are reported
// distinctly from a false identity.
struct DetPerturbCheck {
  bool preconditions_met;
  bool identity_holds;  // meaningful only when preconditions_met
  std::string detail;
};
DetPerturbCheck det_diag_perturb_identity_check(const Mat& m,
                                                const std::vector<uint16_t>& u,
                                                int t);

// Row-space membership and inclusion, decided by rank comparisons.
bool row_space_contains(const Mat& a, const std::vector<uint16_t>& v);
bool subspace_leq(const Mat& a, const Mat& b);  // rowspace(a) <= rowspace(b)

}  // namespace hullcode

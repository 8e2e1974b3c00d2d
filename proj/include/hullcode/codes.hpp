#pragma once
// Linear-code core: duals, hulls, LCD / self-orthogonality tests, minimum
// distance, monomial scalings, permutations, sums, and single-coordinate
// extensions by a dual word.
//
// All values are immutable; every operation is a pure function. Exhaustive
// enumerations (minimum_distance, is_mds, hull_oracle) take an explicit
// evaluation budget and fail with BudgetError instead of approximating.

#include <cstdint>
#include <optional>
#include <vector>

#include "hullcode/gf.hpp"
#include "hullcode/matgf.hpp"

namespace hullcode {

// Default cap on exhaustive enumerations: q^k must not exceed this.
inline constexpr unsigned long long kDefaultBudget = 1ull << 24;

// An [n, k] linear code over the field, held as a full-row-rank generator
// matrix. When the supplied generator already had independent rows it is
// stored verbatim (so printed matrices match the input); dependent rows are
// replaced by a reduced row basis, with the original row count recorded.
struct LinearCode {
  FieldPtr field;
  int n;
  int k;
  Mat G;           // k x n, full row rank
  int input_rows;  // rows supplied at construction (== k unless dependent)
};

// The hull C ∩ C⊥ of a code: its dimension and a canonical (RREF) basis.
struct HullReport {
  int dim;
  Mat basis;  // dim x n
};

// A column-permuted copy of a code whose generator is [I_k | P], together
// with the column order that achieves it: new column j is old column
// col_order[j] (0-based). Pivot columns are chosen greedily left-to-right.
struct StandardForm {
  LinearCode code;
  std::vector<int> col_order;
};

// Inner product and Hamming weight of words.
uint16_t word_dot(const Field& f, const std::vector<uint16_t>& u,
                  const std::vector<uint16_t>& v);
int word_weight(const std::vector<uint16_t>& v);

// Build a code from a nonzero generator matrix. Throws PreconditionError on
// an empty or all-zero matrix.
LinearCode make_code(FieldPtr f, const Mat& g_raw);

// Parity check H = null_space(G), an (n-k) x n matrix with G H^T = 0.
// For k = n this is the 0 x n matrix.
Mat parity_check(const LinearCode& c);

// The dual code. For k = n the dual is the zero code, which this library
// does not represent as a LinearCode; that case returns nullopt.
std::optional<LinearCode> dual(const LinearCode& c);

// Hull dimension and basis. Internally computed three independent ways
// (n - rank(G over H), k - rank(G G^T), (n-k) - rank(H H^T)) which must
// agree; disagreement throws std::logic_error.
HullReport hull(const LinearCode& c);

// Complementary-dual / self-orthogonality / self-duality tests. is_lcd
// cross-checks the invertibility of G G^T and H H^T against the hull
// dimension and asserts all three criteria agree.
bool is_lcd(const LinearCode& c);
bool is_self_orthogonal(const LinearCode& c);
bool is_self_dual(const LinearCode& c);

// Exact minimum Hamming distance by exhaustive message enumeration.
// Requires q^k <= budget, else BudgetError (never an approximation).
int minimum_distance(const LinearCode& c,
                     unsigned long long budget = kDefaultBudget);

// Whether d = n - k + 1 (Singleton bound met). Same budget rules.
bool is_mds(const LinearCode& c, unsigned long long budget = kDefaultBudget);

// Coordinate-wise scaling: column i of the generator is multiplied by a[i].
// All entries of a must be nonzero (length n).
LinearCode scale(const LinearCode& c, const std::vector<uint16_t>& a);

// Checks the dual-of-scaled law: dual(scale(C, a)) equals scale(dual(C),
// a^{-1}) as row spaces. Returns true on success.
bool dual_scaling_law_check(const LinearCode& c,
                            const std::vector<uint16_t>& a);

// Column permutation: new coordinate j reads old coordinate sigma[j], with
// sigma a 1-based permutation of {1..n}. The hull dimension is invariant
// under permutation; this is asserted.
LinearCode permute(const LinearCode& c, const std::vector<int>& sigma);

// Sum C1 + C2 = {c1 + c2}: the span of both generators (equal n and field).
LinearCode code_sum(const LinearCode& c1, const LinearCode& c2);

// Extend by a dual word: given nonzero d in C⊥ with <d,d> = 1, the
// [n+1, k+1] code generated by (1 | d) over (0 | G). Its Gram matrix is
// diag(0, G G^T) — this needs 1 + <d,d> = 0, i.e. characteristic 2, which is
// checked — so the hull dimension rises by exactly 1 (asserted).
LinearCode extend_with_dual_word(const LinearCode& c,
                                 const std::vector<uint16_t>& d);

// Independent brute-force hull check: enumerate all q^k codewords, count
// those orthogonal to every generator row by direct dot products (no Gram
// matrix involved), and return l with q^l = count. Must equal hull(C).dim,
// else std::logic_error. Requires q^k <= budget.
int hull_oracle(const LinearCode& c,
                unsigned long long budget = kDefaultBudget);

// Column-permute the code so its generator reduces to [I_k | P].
StandardForm standard_form(const LinearCode& c);

}  // namespace hullcode

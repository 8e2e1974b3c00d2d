#pragma once
// Hull-manipulation procedures: generator-form decompositions, the
// last-coordinate admissibility rescale, the complementary-dual-to-1-hull
// scaling, the l -> l+1 scaling with its l = 0 corollary, polynomial
// evaluation (Reed-Solomon) codes, the LCD-preserving one-row extension and
// its witness search, code-sum hull prediction, the containment hull bound,
// and the single-coordinate rescale lemma.
//
// Every construction returns a ConstructionReport listing each hypothesis it
// evaluated with a witness value, the scalars it chose, the column frame it
// worked in, and both the predicted and independently verified hull
// dimensions. Hypothesis failures throw PreconditionError naming the failed
// hypothesis; internal proof-identity violations (which would indicate a bug
// or a false claim) throw std::logic_error.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hullcode/codes.hpp"
#include "hullcode/gf.hpp"
#include "hullcode/matgf.hpp"

namespace hullcode {

// Blocks of the standard-form generator (1 0 P1 a; 0 I_{k-1} P2 b), reached
// from [I_k | P] after the greedy column permutation col_perm.
struct GenForm31 {
  Mat P1;                     // 1 x (n-k-1)
  uint16_t a;                 // last entry of the first row
  Mat P2;                     // (k-1) x (n-k-1)
  Mat b;                      // (k-1) x 1
  std::vector<int> col_perm;  // frame column j reads original column col_perm[j] (0-based)
  LinearCode frame_code;      // the [I_k | P] code in the permuted frame
  bool dist_at_least_2;       // advisory: no weight-1 codeword (checked, not enforced)
};

// Blocks of the hull-first generator frame
//   ( I_l  Q1  Q2  P1 )
//   ( 0    al  0   P2 )
//   ( 0    0   I   P3 )
// whose top l rows span the hull. The frame is built hull-rows-first with a
// reduced basis extension, so alpha is normalized to 1.
struct GenFormL {
  int l;                      // hull dimension
  Mat Q1;                     // l x 1 (frame column l of the hull rows)
  Mat Q2;                     // l x (k-l-1)
  Mat P1;                     // l x (n-k)
  uint16_t alpha;             // pivot of row l+1 (1 after reduction)
  Mat P2;                     // 1 x (n-k)
  Mat P3;                     // (k-l-1) x (n-k)
  std::vector<int> col_perm;  // as in GenForm31
  Mat frame;                  // the whole k x n frame matrix
};

// One evaluated hypothesis of a construction, with the witness value that
// decided it.
struct Hypothesis {
  std::string name;
  bool holds;
  std::string witness;
};

// Outcome of a construction run. predicted_hull equals verified_hull
// whenever success is true; hypotheses lists every condition actually
// evaluated. scaling and col_perm describe the output frame: the output code
// is the input code with columns reordered by col_perm and column j scaled
// by scaling[j].
struct ConstructionReport {
  std::string op;
  LinearCode input;
  LinearCode output;
  std::vector<std::pair<std::string, std::string>> scalars;
  std::vector<uint16_t> scaling;  // empty when no scaling was applied
  std::vector<int> col_perm;      // empty when the frame is the original one
  int predicted_hull;
  int verified_hull;
  std::vector<Hypothesis> hypotheses;
  bool success;
  std::string note;
};

// True when the code has no codeword of Hamming weight 1 (cheap rank test,
// no exhaustive enumeration).
bool distance_at_least_2(const LinearCode& c);

// Extract the standard-form blocks (1 0 P1 a; 0 I_{k-1} P2 b).
// Requires k < n (otherwise there is no P block).
GenForm31 decompose_form31(const LinearCode& c);

// Make the first-row self-product P1 P1^T + a^2 nonzero by scaling the last
// frame coordinate by some mu, searched in primitive-power order. When the
// product is already nonzero this is the identity ("no rescale needed").
// For a complementary-dual input over an even-order field the chosen mu also
// keeps the dual Gram matrix invertible. Requires q > 3; errors when a = 0
// makes the condition unachievable.
ConstructionReport lemma31_rescale(const LinearCode& c);

// Scale one coordinate of a complementary-dual code so the result has hull
// dimension exactly 1: lambda = sqrt(P1 P1^T + a^2) applied to the first
// frame coordinate. Requires q even, q > 3, a complementary-dual input with
// d >= 2, and the cross-product hypothesis P1 P2^T + a b^T = 0 (a failing
// first-row self-product is repaired automatically by the mu-rescale).
ConstructionReport theorem31_construct(const LinearCode& c);

// Build the hull-first frame. Requires hull dim < min(k, n-k).
GenFormL decompose_formL(const LinearCode& c);

// Scale frame coordinate l+1 so the hull dimension rises from l to l+1:
// lambda^2 = beta' / (alpha^2 det(I + P3 P3^T)). Requires q even, q > 3,
// Q1 = 0, det(I + P3 P3^T) != 0, and beta' != 0, where
// beta' = det(G_{k-l} G_{k-l}^T) + alpha^2 det(I + P3 P3^T).
ConstructionReport theorem42_construct(const LinearCode& c);

// The l = 0 instance: a complementary-dual code is scaled to hull dimension
// exactly 1 in its canonical frame. The decisive scalar is called beta here.
ConstructionReport corollary_lcd_to_one(const LinearCode& c);

// Evaluation code: rows are the evaluations of 1, x, ..., x^{k-1} at the
// given distinct nonzero points. Always [n, k, n-k+1]; the distance is
// asserted exhaustively when q^k is within the default budget.
LinearCode rs_code(FieldPtr f, const std::vector<uint16_t>& points, int k);

// Extend a complementary-dual code by one row and one column:
// Gtilde = (alpha p_row; 0 G). Requires alpha != 0 and the determinant gate
// det(Gtilde Gtilde^T) != det(G G^T). If det(Gtilde Gtilde^T) = 0 the
// extension itself has hull dimension 1; otherwise it is complementary-dual
// and a scaling witness with hull 1 is found by a three-stage pipeline
// (canonical corollary frame, then a scan over admissible frames, then an
// exhaustive single-coordinate scan).
ConstructionReport construction1_extend(const LinearCode& c, uint16_t alpha,
                                        const std::vector<uint16_t>& p_row);

// Seeded deterministic search for an (alpha, p_row) pair accepted by
// construction1_extend. Throws BudgetError when trials are exhausted.
ConstructionReport construction1_search(const LinearCode& c, int trials = 10000,
                                        uint32_t seed = 12345);

// Evaluate the sum-hull prediction dim hull(C1+C2) = l1 + l2 - l (with l the
// dimension of hull(C1) ∩ hull(C2)) under the containment hypotheses
// hull(C1) ⊆ C2⊥ and hull(C2) ⊆ C1⊥, and the (a)-(d) range claims for
// special hull-dimension pairs. Never throws on a violated claim: the report
// carries success = false and the actual hull.
ConstructionReport sum_hull_predict(const LinearCode& c1, const LinearCode& c2);

// Under C2 ⊆ C1 + C1⊥, the sum C1 + C2 has hull dimension >= hull(C1)
// (asserted); when C2 is complementary-dual the source-claimed equality is
// evaluated and reported truthfully (it can fail).
ConstructionReport containment_hull_bound(const LinearCode& c1,
                                          const LinearCode& c2);

// Scale coordinate j (1-based) by a_j, with a_j not in {0, 1} and q > 3.
// The hull dimension moves by at most 1 (asserted).
ConstructionReport lemma3ab_rescale(const LinearCode& c, int j, uint16_t a_j);

}  // namespace hullcode

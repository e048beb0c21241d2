#pragma once

#include <string>
#include <vector>

#include "sl12/fusion.hpp"
#include "sl12/modules.hpp"
#include "sl12/partitions.hpp"
#include "sl12/superalgebra.hpp"

namespace sl12 {

/// Highest-weight datum of a Chari-Venkatesh module: the h1-eigenvalue
/// together with a partition of the integral h2-eigenvalue.
struct CVDatum {
  Rat lambda1;
  Partition xi;
};

/// One verified relation instance. The witness is the nonzero residual in
/// the coordinates of whichever space the relation was evaluated in; it is
/// empty for passing checks and for scalar facts it holds a single entry.
struct RelationCheck {
  std::string relation;
  std::string params;
  bool pass = true;
  RatVec witness;
};

/// Ordered list of individually labelled relation checks for one suite run.
class RelationReport {
 public:
  RelationReport() = default;
  RelationReport(std::string suite, std::string case_name);

  const std::string& suite() const { return suite_; }
  const std::string& case_name() const { return case_; }
  const std::vector<RelationCheck>& checks() const { return checks_; }

  bool all_passed() const;
  int failure_count() const;
  const RelationCheck* first_failure() const;  // nullptr when clean

  /// Records that a residual vector is zero; the residual becomes the
  /// witness otherwise.
  void check_zero(const std::string& relation, const std::string& params,
                  const RatVec& residual);
  /// Records a boolean fact; failures carry the one-entry witness [delta].
  void check_that(const std::string& relation, const std::string& params, bool ok,
                  const Rat& delta = Rat(1));
  /// Appends every check of a sub-suite run.
  void absorb(const RelationReport& other);

 private:
  std::string suite_;
  std::string case_;
  std::vector<RelationCheck> checks_;
};

/// Local Weyl relations evaluated on the cyclic vector of a graded
/// realization: y1(a)v = x2(a)v = x3(a)v = 0 and h(a)v = 0 for
/// 1 <= a <= top degree (degree-0 raising operators included), h(0)v =
/// lambda(h)v, and y2(0)^{lambda2+1}v = 0.
RelationReport check_weyl_relations(const GradedRealization& G, const Weight& lambda);

/// Same relation family evaluated on an arbitrary vector w given in graded
/// coordinates; used for embedded copies of smaller Weyl modules.
RelationReport weyl_relations_on(const GradedRealization& G, const Weight& lambda,
                                 const RatVec& w, const std::string& case_name);

/// Extra relations attached to a partition xi = (xi_0 >= ... >= xi_d),
/// evaluated on the cyclic vector. For every window xi_{k+1} <= r < xi_k
/// (xi_{d+1} read as 0, r >= 1) and every s with
/// k r + xi_{k+1} + ... + xi_d < s <= max(top degree, |xi|) the suite checks,
/// in the graded module, both equivalent forms
///   y2(r,s) v = 0   and   (the k-windowed divided-power sum) v = 0,
/// and, on the underlying filtered module whenever r + s <= |xi|, the
/// containment x2(1)^(s) y2(0)^(r+s) v in F(s-1).
RelationReport check_cv_relations(const GradedRealization& G, const CVDatum& datum);

/// The two graded forms of the extra relations evaluated on an arbitrary
/// vector w (graded coordinates).
RelationReport cv_relations_on(const GradedRealization& G, const Partition& xi,
                               const RatVec& w, const std::string& case_name);

/// Checks x2(1)^(s) y2(0)^(r+s) v = (-1)^s y2(r,s) v in the graded module
/// for all r, s >= 1 with r + s <= lambda2.
RelationReport check_garland_action(const GradedRealization& G, long lambda2);

/// Demazure-type relations: the triangular Weyl relations for lambda plus
/// y2(r)^(max{0, lambda2 - ell r} + 1) v = 0 for 0 <= r <= top degree.
RelationReport check_demazure(const GradedRealization& G, long ell, const Weight& lambda);

/// Lowest-weight counterpart: with v- = y2(0)^(lambda2) v, checks that v- is
/// nonzero, is killed by x1(r), y2(r), y3(r), has h-eigenvalues
/// (lambda1 - lambda2, -lambda2) in degree 0 and 0 in positive degree,
/// satisfies x2(r)^(max{0, lambda2 - ell r} + 1) v- = 0, generates the whole
/// module, and that x2(0)^(lambda2) v- is a nonzero singular vector of
/// weight lambda.
RelationReport check_demazure_lowest_weight(const GradedRealization& G, long ell,
                                            const Weight& lambda);

/// Truncation relations: every generator matrix in degrees N..top vanishes
/// identically on the graded module, plus the Weyl relations for lambda.
RelationReport check_truncated(const GradedRealization& G, long N, const Weight& lambda);

struct BasisRank {
  long rank = 0;
  bool full = false;
};

/// Evaluates each pool monomial on the cyclic vector of the underlying
/// filtered module and returns the exact rank of the resulting family
/// (full when the rank equals the module dimension). The rank is computed
/// blockwise per weight class; every monomial image is weight-pure.
BasisRank check_basis_independence(const GradedRealization& G,
                                   const std::vector<WeylMonomial>& pool);
BasisRank check_basis_independence(const GradedRealization& G,
                                   const std::vector<CvBasisMonomial>& pool);

enum class EmbeddingKind { y3_type, x1_type };

/// Builds the graded Weyl realization one box larger — (lambda1+1,
/// lambda2+1) for the y3 form, (lambda1, lambda2+1) for the x1 form — sets
/// v' = y3(lambda2) w (resp. x1(lambda2) w), and checks that v' is nonzero,
/// satisfies the Weyl relations for lambda, and generates a submodule of
/// dimension 4^{lambda2}.
RelationReport check_embedding(const Weight& lambda, EmbeddingKind which);

struct PsiPoint {
  Weight mu;
  Rat z;
};

/// Builds the non-graded local Weyl module attached to finitely many points:
/// the tensor product over i of the graded Weyl realization for mu_i shifted
/// to sit at z_i. Filtrates it and checks dim = 4^{sum mu_i(h2)}, that the
/// associated graded cyclic vector satisfies the Weyl relations for
/// lambda = sum mu_i, and that the graded character equals that of the
/// graded Weyl realization for lambda.
RelationReport check_gr_of_nongraded(const std::vector<PsiPoint>& psi);

/// Box-removal reduction step. With eta = (eta_0 >= ... >= eta_e) and
/// odd_gen one of y3 or x1, the hypothesis asks that w = odd_gen(c) v be
/// killed by x2(1)^(s) y2(0)^(r+s) exactly at the boundary
/// s = k r + eta_{k+1} + ... + eta_e for every window eta_{k+1} <= r < eta_k
/// with k < c. When it holds, w must satisfy the extra relation family of
/// the partition with one box removed at position c.
bool cv_reduction_hypothesis(const GradedRealization& G, const Partition& eta, int c,
                             Gen odd_gen);

/// The conclusion of the reduction step: the extra relations of
/// remove_box(eta, c) checked on odd_gen(c) v in the graded module, in the
/// x2(1)^(s) y2(0)^(r+s) form (the vector is not a highest-weight vector, so
/// the y2(r,s) forms do not apply). The step is only valid when the box at c
/// closes its run of equal parts (eta_c > eta_{c+1}, or c is last): pushing
/// x2(1)^s past the odd generator leaves a y1 cross term ([x2, y3] = y1,
/// [x2, y1] = 0) that genuinely survives for interior positions of a run,
/// even though remove_box lands on the same partition.
RelationReport check_cv_reduction(const GradedRealization& G, const Partition& eta, int c,
                                  Gen odd_gen);

}  // namespace sl12

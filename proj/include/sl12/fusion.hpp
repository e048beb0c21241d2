#pragma once

#include <memory>
#include <vector>

#include "sl12/characters.hpp"
#include "sl12/modules.hpp"
#include "sl12/partitions.hpp"

namespace sl12 {

struct GradedCore;

/// Degree filtration of a cyclic module and its associated graded module.
/// F(0) is the span of the cyclic vector under degree-zero operators; F(n)
/// adds everything reachable with one positive-degree operator from lower
/// levels and closes under degree zero again. The graded basis is canonical:
/// within each (weight, parity) class, level n contributes the rref rows of
/// F(n) whose pivots are new over F(n-1).
class GradedRealization {
 public:
  GradedRealization() = default;

  const FiniteModule& base() const;
  int dim() const;
  /// Top filtration degree: F(top) is the whole space, F strictly increases
  /// up to it.
  int top_degree() const;
  const std::vector<int>& graded_dims() const;

  int level_of(int gi) const;
  const Weight& weight_of(int gi) const;
  int parity_of(int gi) const;
  /// Canonical lift of the gi-th graded basis vector, in base coordinates.
  const RatVec& lift(int gi) const;
  /// Image of the cyclic vector, in graded coordinates (level 0).
  const RatVec& cyclic_image() const;

  /// Matrix of x tensor t^d on the graded module: the level-(n+d) component
  /// of the action on level-n lifts. Zero for d > top_degree(). Throws if the
  /// action ever escapes F(n+d), which would mean the input was not filtered
  /// consistently.
  const SparseMat& graded_action(Gen g, int d) const;

  /// The graded module as a plain module (degree cap = top_degree()).
  FiniteModule flatten() const;

  GradedCharacter graded_character() const;

  /// Whether a vector of the base module lies in F(n).
  bool in_level(const RatVec& base_vec, int n) const;

 private:
  std::shared_ptr<const GradedCore> core_;
  friend GradedRealization filtrate(const FiniteModule& m);
};

/// Builds the degree filtration at the module's cyclic vector. Positive
/// generator degrees are capped at degree_cap_hint (higher degrees act inside
/// strictly lower levels by the recurrence the hint promises). Throws if the
/// filtration stalls before exhausting the module — the input was not cyclic.
GradedRealization filtrate(const FiniteModule& m);

struct FusionFactor {
  Rat kappa;      // first weight coordinate of the Kac factor
  long size = 1;  // second weight coordinate, >= 1
  Rat z;          // evaluation point
};

struct FusionSpec {
  std::vector<FusionFactor> factors;
};

/// Evaluation points 0, 1, 2, ... and the whole first coordinate on factor 0.
FusionSpec default_fusion_spec(const Rat& lambda1, const Partition& xi);

/// Tensor product of the evaluated Kac modules, cyclic vector the tensor of
/// highest-weight vectors. Empty spec gives the trivial module.
FiniteModule fused_tensor(const FusionSpec& spec);

/// filtrate(fused_tensor(spec)). Rejects repeated evaluation points.
GradedRealization fuse(const FusionSpec& spec);

}  // namespace sl12

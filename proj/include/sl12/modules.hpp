#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "sl12/linalg.hpp"
#include "sl12/pbw.hpp"
#include "sl12/superalgebra.hpp"

namespace sl12 {

/// Finite-dimensional module over the current superalgebra g[t]. Actions of
/// x tensor t^m are produced on demand and cached. degree_cap_hint bounds the
/// order of the linear recurrence satisfied by m -> action(x, m): every
/// action(x, m) lies in the span of action(x, 0), ..., action(x, hint), which
/// is what lets closure computations stop at a finite degree.
class FiniteModule {
 public:
  using Provider = std::function<SparseMat(Gen, int)>;

  FiniteModule() = default;
  FiniteModule(std::vector<Weight> weights, std::vector<int> parities, RatVec cyclic,
               int degree_cap_hint, Provider provider, std::vector<std::string> labels = {});

  int dim() const { return static_cast<int>(weights_.size()); }
  const std::vector<Weight>& weights() const { return weights_; }
  const std::vector<int>& parities() const { return parities_; }
  const RatVec& cyclic() const { return cyclic_; }
  int degree_cap_hint() const { return cap_; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Standard basis vector as coordinates.
  RatVec basis_vector(int i) const;

  const SparseMat& action(Gen g, int deg) const;
  RatVec act(Gen g, int deg, const RatVec& v) const;
  /// Applies a PBW word right to left (the rightmost letter acts first).
  RatVec act_word(const Word& w, const RatVec& v) const;
  RatVec act_element(const Element& e, const RatVec& v) const;

  /// Basis ids grouped by weight, ids ascending.
  std::map<Weight, std::vector<int>> weight_classes() const;

 private:
  std::vector<Weight> weights_;
  std::vector<int> parities_;
  RatVec cyclic_;
  int cap_ = 0;
  std::vector<std::string> labels_;
  Provider provider_;
  mutable std::shared_ptr<std::map<std::pair<int, int>, SparseMat>> memo_;
};

/// One-dimensional module with every generator acting by zero.
FiniteModule trivial_module();

/// Irreducible gl(2)-module L(hw) with basis y2^i v, 0 <= i <= hw.w2.
/// The odd generators act by zero, so this is a module for the even part
/// only, not a representation of the full superalgebra.
FiniteModule irreducible_gl2(const Weight& hw);

/// Kac module over the chosen Borel. For b(1) and b(3) this is the induced
/// module (exterior algebra on the free odd pair tensored with L_gl(hw)); for
/// b(2) it is realized inside an induced module over b(1) or b(3) with the
/// cyclic vector re-seated at the unique b(2)-singular vector of weight hw.
FiniteModule kac_module(Borel b, const Weight& hw);

/// Evaluation module: x(m) acts as z^m times the degree-zero action of m.
FiniteModule evaluation(const FiniteModule& m, const Rat& z);

/// Super tensor product; x(m) acts by the Koszul-signed Leibniz rule.
/// Basis index is i * b.dim() + j.
FiniteModule tensor_product(const FiniteModule& a, const FiniteModule& b);
FiniteModule tensor_product(const std::vector<FiniteModule>& factors);

/// Pullback along t -> t + z: action'(x(m)) = sum_j C(m, j) (-z)^{m-j}
/// action(x(j)). Moves an evaluation point from w to w - z, so a factor
/// sitting at 0 is placed at z_i by shift(m, -z_i).
FiniteModule shift(const FiniteModule& m, const Rat& z);

struct SingularVector {
  Weight weight;
  RatVec vec;
};

/// All vectors killed by the degree-zero raising operators of b, one basis
/// per weight class.
std::vector<SingularVector> singular_vectors(const FiniteModule& m, Borel b);

/// For a highest-weight module over b: irreducible iff the singular space is
/// exactly the line through the cyclic vector.
bool is_irreducible(const FiniteModule& m, Borel b);

/// Highest weights of the gl(2)-decomposition, with multiplicity, sorted.
/// Throws if the resulting dimension count does not match (non-semisimple
/// even-part action).
std::vector<Weight> g0_highest_weights(const FiniteModule& m);

/// Smallest subspace containing the seeds and stable under every action(g, d)
/// with 0 <= d <= max_deg.
Subspace submodule_closure(const FiniteModule& m, const std::vector<RatVec>& seeds, int max_deg);

bool is_cyclic_on(const FiniteModule& m, const RatVec& seed, int max_deg);

/// Checks [x(a), y(b)] = [x, y](a + b) on matrices for all generator pairs
/// and degrees up to max_deg. Pass include_odd_pairs = false for modules that
/// only carry the even part (odd generators acting by zero).
bool is_current_rep(const FiniteModule& m, int max_deg, bool include_odd_pairs = true);

}  // namespace sl12

#pragma once

#include <array>
#include <compare>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sl12/linalg.hpp"
#include "sl12/rational.hpp"

namespace sl12 {

/// Basis of sl(1|2): odd root vectors x1, x3, y1, y3; even sl(2)-triple
/// x2, y2 with Cartan h2; h1 completes the Cartan of the even part gl(2).
/// h3 = h1 - h2 and z = 2*h1 - h2 are derived, never stored.
enum class Gen : int { y1 = 0, y2, y3, x1, x2, x3, h1, h2 };

inline constexpr std::array<Gen, 8> kAllGens = {Gen::y1, Gen::y2, Gen::y3, Gen::x1,
                                                Gen::x2, Gen::x3, Gen::h1, Gen::h2};

int parity_of(Gen g);  // 0 even, 1 odd
const std::string& gen_name(Gen g);

/// 3x3 matrix of the defining representation (row/col 0 is the odd line).
RatMatrix gen_matrix(Gen g);

/// Linear combination of basis generators, sparse, ordered by Gen.
using GenCombo = std::vector<std::pair<Gen, Rat>>;

GenCombo combo_add(const GenCombo& a, const GenCombo& b);
GenCombo combo_scaled(const GenCombo& a, const Rat& c);
bool combo_is_zero(const GenCombo& a);

/// Express a supertraceless 3x3 matrix in the generator basis; throws if the
/// matrix is not in the span.
GenCombo decompose_matrix(const RatMatrix& m);

/// Super bracket [a, b] = ab - (-1)^{|a||b|} ba on 3x3 matrices.
RatMatrix matrix_super_bracket(const RatMatrix& a, const RatMatrix& b, int pa, int pb);

/// Structure constants [g, h] as a combination of basis generators.
/// Computed once from the matrix realization and cached.
const GenCombo& bracket(Gen a, Gen b);

GenCombo bracket_combo(const GenCombo& a, const GenCombo& b, int pa, int pb);

GenCombo h3_combo();  // h1 - h2
GenCombo z_combo();   // 2 h1 - h2; central in the even part, grades the odd part by +/-1

/// Functional on the Cartan, stored by its values (w1, w2) on (h1, h2).
/// Doubles as a weight and as a root.
struct Weight {
  Rat w1, w2;

  Weight() : w1(0), w2(0) {}
  Weight(Rat a, Rat b) : w1(std::move(a)), w2(std::move(b)) {}

  bool operator==(const Weight& o) const { return w1 == o.w1 && w2 == o.w2; }
  bool operator!=(const Weight& o) const { return !(*this == o); }
  bool operator<(const Weight& o) const {
    if (w1 != o.w1) return w1 < o.w1;
    return w2 < o.w2;
  }
  Weight operator+(const Weight& o) const { return Weight(w1 + o.w1, w2 + o.w2); }
  Weight operator-(const Weight& o) const { return Weight(w1 - o.w1, w2 - o.w2); }
  Weight operator-() const { return Weight(-w1, -w2); }

  bool is_zero() const { return sl12::is_zero(w1) && sl12::is_zero(w2); }
  /// Value on h3 = h1 - h2.
  Rat on_h3() const { return w1 - w2; }

  std::string str() const;
};

using Root = Weight;

Root alpha1();  // delta - eps1, odd
Root alpha2();  // eps1 - eps2, even
Root alpha3();  // delta - eps2 = alpha1 + alpha2, odd

/// Weight of the adjoint action on a generator ([h, g] = wt(g)(h) g).
Weight weight_of(Gen g);

bool root_is_odd(const Root& r);

/// beta evaluated on the coroot h_alpha (alpha must be plus/minus a root).
Rat eval_on_coroot(const Root& beta, const Root& alpha);

/// Odd reflection of a simple system at an odd root alpha of Pi:
/// alpha |-> -alpha; beta stays if both pairings with alpha vanish;
/// beta |-> beta + alpha otherwise.
std::set<Root> odd_reflection(const std::set<Root>& simple, const Root& alpha);

enum class Borel : int { b1 = 1, b2 = 2, b3 = 3 };

std::array<Gen, 3> raising_ops(Borel b);
std::array<Gen, 3> lowering_ops(Borel b);
std::set<Root> simple_roots(Borel b);
std::set<Root> positive_roots(Borel b);

/// Dominance: for b(1), b(3) this is lambda2 a nonnegative integer; for b(2)
/// lambda2 a positive integer or lambda = 0.
bool is_dominant(Borel b, const Weight& lambda);

/// Typicality criterion for b(2)-dominant lambda != 0: both lambda1 and
/// lambda1 - lambda2 nonzero. Equivalent to irreducibility of the Kac module.
bool is_typical(const Weight& lambda);

/// Residual of the super Jacobi identity on basis generators (zero iff it
/// holds); exposed so tests can sweep all 8^3 triples.
GenCombo jacobi_residual(Gen a, Gen b, Gen c);

}  // namespace sl12

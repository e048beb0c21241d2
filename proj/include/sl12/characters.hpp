#pragma once

#include <map>
#include <utility>
#include <vector>

#include "sl12/modules.hpp"
#include "sl12/superalgebra.hpp"

namespace sl12 {

/// Formal character: finite sum of e^w with integer coefficients, keyed by
/// the (h1, h2)-weight. Coefficients may go negative in intermediate formula
/// arithmetic.
using FormalCharacter = std::map<Weight, long>;

/// Character refined by t-degree, keyed by (degree, weight).
using GradedCharacter = std::map<std::pair<int, Weight>, long>;

FormalCharacter char_of(const FiniteModule& m);
FormalCharacter forget_grading(const GradedCharacter& g);

FormalCharacter ch_monomial(const Weight& w, long mult = 1);
FormalCharacter ch_add(const FormalCharacter& a, const FormalCharacter& b);
FormalCharacter ch_mul(const FormalCharacter& a, const FormalCharacter& b);
FormalCharacter ch_pow(const FormalCharacter& a, long n);
/// Total multiplicity (the dimension when the character comes from a module).
long ch_mass(const FormalCharacter& a);

/// Character of the exterior algebra of the odd lowering (resp. raising)
/// pair: 1 + e^{wt(y1)} + e^{wt(y3)} + e^{wt(y1)+wt(y3)}.
FormalCharacter exterior_gminus1();
FormalCharacter exterior_gplus1();

/// Character of the irreducible gl(2)-module with highest weight (mu1, mu2).
FormalCharacter gl2_string(const Rat& mu1, long mu2);

/// Q^a - Q^{-a} where Q = e^{(1/2, 1)} walks half an alpha2-string step;
/// these are the only factors the closed character formulas divide by.
FormalCharacter q_bracket(long a);

/// Exact division by q_bracket(a); throws std::runtime_error if a nonzero
/// remainder appears (greedy top-term cancellation per Q-string).
FormalCharacter ch_div_qbracket(const FormalCharacter& f, long a);

/// Closed form for the character of the fused Chari-Venkatesh module V(xi)
/// with highest weight (lambda1, |xi|):
///   e^{(lambda1 - (|xi| - l)/2, 0)} * chLambda(g_-1)^l
///     * prod_i (Q^{xi_i} - Q^{-xi_i}) / (Q - Q^{-1})^l,        l = #parts.
/// xi = (1, ..., 1) specializes to the local Weyl module; the Demazure and
/// truncated Weyl characters come from their defining partitions.
FormalCharacter cv_character_formula(const Rat& lambda1, const std::vector<long>& xi);

/// cv_character_formula at xi = (1, ..., 1): the local Weyl module character
/// e^{(lambda1, 0)} * (ch Lambda(g_-1))^{lambda2}.
FormalCharacter weyl_char_formula(const Rat& lambda1, long lambda2);

/// Character of D(ell, (lambda1, lambda2)) through its defining partition
/// (ell^{q-1}, m); ell = 1 reproduces weyl_char_formula.
FormalCharacter demazure_char_formula(long ell, const Rat& lambda1, long lambda2);

/// Character of the truncated module W(lambda, N) through its defining
/// partition ((q+1)^m, q^{N-m}). Rejects N >= lambda2, where the truncation
/// is vacuous and the module is W(lambda) itself.
FormalCharacter truncated_char_formula(long N, const Rat& lambda1, long lambda2);

}  // namespace sl12

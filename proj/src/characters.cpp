#include "sl12/characters.hpp"

#include <stdexcept>

#include "sl12/partitions.hpp"

namespace sl12 {

FormalCharacter char_of(const FiniteModule& m) {
  FormalCharacter f;
  for (const Weight& w : m.weights()) ++f[w];
  return f;
}

FormalCharacter forget_grading(const GradedCharacter& g) {
  FormalCharacter f;
  for (const auto& [key, mult] : g) {
    f[key.second] += mult;
    if (f[key.second] == 0) f.erase(key.second);
  }
  return f;
}

FormalCharacter ch_monomial(const Weight& w, long mult) {
  FormalCharacter f;
  if (mult != 0) f[w] = mult;
  return f;
}

FormalCharacter ch_add(const FormalCharacter& a, const FormalCharacter& b) {
  FormalCharacter f = a;
  for (const auto& [w, m] : b) {
    long v = (f[w] += m);
    if (v == 0) f.erase(w);
  }
  return f;
}

FormalCharacter ch_mul(const FormalCharacter& a, const FormalCharacter& b) {
  FormalCharacter f;
  for (const auto& [wa, ma] : a)
    for (const auto& [wb, mb] : b) {
      long v = (f[wa + wb] += ma * mb);
      if (v == 0) f.erase(wa + wb);
    }
  return f;
}

FormalCharacter ch_pow(const FormalCharacter& a, long n) {
  if (n < 0) throw std::invalid_argument("ch_pow: negative exponent");
  FormalCharacter f = ch_monomial(Weight());
  for (long i = 0; i < n; ++i) f = ch_mul(f, a);
  return f;
}

long ch_mass(const FormalCharacter& a) {
  long s = 0;
  for (const auto& [w, m] : a) s += m;
  return s;
}

FormalCharacter exterior_gminus1() {
  Weight u = weight_of(Gen::y1), w = weight_of(Gen::y3);
  FormalCharacter f = ch_monomial(Weight());
  f = ch_add(f, ch_monomial(u));
  f = ch_add(f, ch_monomial(w));
  f = ch_add(f, ch_monomial(u + w));
  return f;
}

FormalCharacter exterior_gplus1() {
  Weight u = weight_of(Gen::x1), w = weight_of(Gen::x3);
  FormalCharacter f = ch_monomial(Weight());
  f = ch_add(f, ch_monomial(u));
  f = ch_add(f, ch_monomial(w));
  f = ch_add(f, ch_monomial(u + w));
  return f;
}

FormalCharacter gl2_string(const Rat& mu1, long mu2) {
  if (mu2 < 0) throw std::invalid_argument("gl2_string: negative length");
  FormalCharacter f;
  for (long i = 0; i <= mu2; ++i) f[Weight(mu1 - i, Rat(mu2 - 2 * i))] = 1;
  return f;
}

FormalCharacter q_bracket(long a) {
  FormalCharacter f;
  f[Weight(Rat(a) / 2, Rat(a))] = 1;
  f[Weight(Rat(-a) / 2, Rat(-a))] = -1;
  return f;
}

FormalCharacter ch_div_qbracket(const FormalCharacter& f, long a) {
  if (a <= 0) throw std::invalid_argument("ch_div_qbracket: need a > 0");
  // Regroup by the Q-string coordinate s = w1 - w2/2; along each string the
  // monomial Q^t contributes weight (s + t/2, t), so t must be an integer.
  std::map<Rat, std::map<long, long>> strings;
  for (const auto& [w, m] : f) {
    if (!is_integer(w.w2)) throw std::runtime_error("ch_div_qbracket: non-integer h2 exponent");
    long t = static_cast<long>(w.w2.get_num().get_si());
    Rat s = w.w1 - w.w2 / 2;
    strings[s][t] += m;
  }
  FormalCharacter out;
  for (auto& [s, p] : strings) {
    for (auto it = p.begin(); it != p.end();)
      it = (it->second == 0) ? p.erase(it) : std::next(it);
    if (p.empty()) continue;
    long guard = static_cast<long>(p.size()) + (p.rbegin()->first - p.begin()->first) + 8;
    std::map<long, long> q;
    while (!p.empty()) {
      if (--guard < 0) throw std::runtime_error("ch_div_qbracket: not divisible");
      auto top = std::prev(p.end());
      long t = top->first, c = top->second;
      q[t - a] += c;
      p.erase(top);
      long lo = (p[t - 2 * a] += c);
      if (lo == 0) p.erase(t - 2 * a);
    }
    for (const auto& [t, c] : q) {
      if (c == 0) continue;
      out[Weight(s + Rat(t) / 2, Rat(t))] += c;
    }
  }
  for (auto it = out.begin(); it != out.end();)
    it = (it->second == 0) ? out.erase(it) : std::next(it);
  return out;
}

FormalCharacter cv_character_formula(const Rat& lambda1, const std::vector<long>& xi) {
  long l2 = 0;
  for (size_t i = 0; i < xi.size(); ++i) {
    if (xi[i] <= 0) throw std::invalid_argument("cv_character_formula: parts must be positive");
    if (i + 1 < xi.size() && xi[i] < xi[i + 1])
      throw std::invalid_argument("cv_character_formula: parts must be weakly decreasing");
    l2 += xi[i];
  }
  long ell = static_cast<long>(xi.size());
  FormalCharacter f = ch_monomial(Weight(lambda1 - Rat(l2 - ell) / 2, Rat(0)));
  f = ch_mul(f, ch_pow(exterior_gminus1(), ell));
  for (long p : xi) f = ch_mul(f, q_bracket(p));
  for (long i = 0; i < ell; ++i) f = ch_div_qbracket(f, 1);
  return f;
}

FormalCharacter weyl_char_formula(const Rat& lambda1, long lambda2) {
  if (lambda2 < 0) throw std::invalid_argument("weyl_char_formula: need lambda2 >= 0");
  return cv_character_formula(lambda1, Partition(lambda2, 1));
}

FormalCharacter demazure_char_formula(long ell, const Rat& lambda1, long lambda2) {
  return cv_character_formula(lambda1, demazure_partition(ell, lambda2));
}

FormalCharacter truncated_char_formula(long N, const Rat& lambda1, long lambda2) {
  if (N >= lambda2)
    throw std::invalid_argument(
        "truncated_char_formula: N >= lambda2 leaves the Weyl module untouched");
  return cv_character_formula(lambda1, truncated_partition(N, lambda2));
}

}  // namespace sl12

#include "sl12/superalgebra.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace sl12 {

int parity_of(Gen g) {
  switch (g) {
    case Gen::y1:
    case Gen::y3:
    case Gen::x1:
    case Gen::x3:
      return 1;
    default:
      return 0;
  }
}

const std::string& gen_name(Gen g) {
  static const std::array<std::string, 8> names = {"y1", "y2", "y3", "x1",
                                                   "x2", "x3", "h1", "h2"};
  return names[static_cast<int>(g)];
}

RatMatrix gen_matrix(Gen g) {
  RatMatrix m(3, 3);
  switch (g) {
    case Gen::x1: m.at(0, 1) = 1; break;
    case Gen::x2: m.at(1, 2) = 1; break;
    case Gen::x3: m.at(0, 2) = 1; break;
    case Gen::y1: m.at(1, 0) = 1; break;
    case Gen::y2: m.at(2, 1) = 1; break;
    case Gen::y3: m.at(2, 0) = 1; break;
    case Gen::h1:
      m.at(0, 0) = 1;
      m.at(1, 1) = 1;
      break;
    case Gen::h2:
      m.at(1, 1) = 1;
      m.at(2, 2) = -1;
      break;
  }
  return m;
}

GenCombo combo_add(const GenCombo& a, const GenCombo& b) {
  std::map<Gen, Rat> acc;
  for (const auto& [g, c] : a) acc[g] += c;
  for (const auto& [g, c] : b) acc[g] += c;
  GenCombo out;
  for (const auto& [g, c] : acc)
    if (!is_zero(c)) out.emplace_back(g, c);
  return out;
}

GenCombo combo_scaled(const GenCombo& a, const Rat& c) {
  GenCombo out;
  if (is_zero(c)) return out;
  for (const auto& [g, v] : a) out.emplace_back(g, v * c);
  return out;
}

bool combo_is_zero(const GenCombo& a) {
  for (const auto& [g, c] : a)
    if (!is_zero(c)) return false;
  return true;
}

GenCombo decompose_matrix(const RatMatrix& m) {
  if (m.rows() != 3 || m.cols() != 3) throw std::invalid_argument("decompose_matrix: not 3x3");
  GenCombo out;
  auto push = [&out](Gen g, const Rat& c) {
    if (!is_zero(c)) out.emplace_back(g, c);
  };
  push(Gen::y1, m.at(1, 0));
  push(Gen::y2, m.at(2, 1));
  push(Gen::y3, m.at(2, 0));
  push(Gen::x1, m.at(0, 1));
  push(Gen::x2, m.at(1, 2));
  push(Gen::x3, m.at(0, 2));
  // c1*h1 + c2*h2 has diagonal (c1, c1+c2, -c2)
  Rat c1 = m.at(0, 0);
  Rat c2 = -m.at(2, 2);
  push(Gen::h1, c1);
  push(Gen::h2, c2);
  if (m.at(1, 1) != c1 + c2) throw std::invalid_argument("decompose_matrix: not supertraceless");
  // canonical Gen order
  std::map<Gen, Rat> sorted(out.begin(), out.end());
  out.assign(sorted.begin(), sorted.end());
  return out;
}

RatMatrix matrix_super_bracket(const RatMatrix& a, const RatMatrix& b, int pa, int pb) {
  RatMatrix ab = a * b;
  RatMatrix ba = b * a;
  return (pa * pb) % 2 ? ab + ba : ab - ba;
}

const GenCombo& bracket(Gen a, Gen b) {
  static std::array<std::array<GenCombo, 8>, 8> table;
  static std::once_flag built;
  std::call_once(built, [] {
    for (Gen g : kAllGens)
      for (Gen h : kAllGens) {
        RatMatrix m =
            matrix_super_bracket(gen_matrix(g), gen_matrix(h), parity_of(g), parity_of(h));
        table[static_cast<int>(g)][static_cast<int>(h)] = decompose_matrix(m);
      }
  });
  return table[static_cast<int>(a)][static_cast<int>(b)];
}

GenCombo bracket_combo(const GenCombo& a, const GenCombo& b, int /*pa*/, int /*pb*/) {
  GenCombo out;
  for (const auto& [g, cg] : a)
    for (const auto& [h, ch] : b) out = combo_add(out, combo_scaled(bracket(g, h), cg * ch));
  return out;
}

GenCombo h3_combo() { return {{Gen::h1, Rat(1)}, {Gen::h2, Rat(-1)}}; }

GenCombo z_combo() { return {{Gen::h1, Rat(2)}, {Gen::h2, Rat(-1)}}; }

std::string Weight::str() const { return "(" + rat_str(w1) + "," + rat_str(w2) + ")"; }

Root alpha1() { return Root(Rat(0), Rat(-1)); }
Root alpha2() { return Root(Rat(1), Rat(2)); }
Root alpha3() { return Root(Rat(1), Rat(1)); }

Weight weight_of(Gen g) {
  switch (g) {
    case Gen::x1: return alpha1();
    case Gen::x2: return alpha2();
    case Gen::x3: return alpha3();
    case Gen::y1: return -alpha1();
    case Gen::y2: return -alpha2();
    case Gen::y3: return -alpha3();
    default: return Weight();
  }
}

bool root_is_odd(const Root& r) {
  return r == alpha1() || r == -alpha1() || r == alpha3() || r == -alpha3();
}

Rat eval_on_coroot(const Root& beta, const Root& alpha) {
  if (alpha == alpha1() || alpha == -alpha1()) return beta.w1;            // h_{a1} = h1
  if (alpha == alpha2() || alpha == -alpha2()) return beta.w2;            // h_{a2} = h2
  if (alpha == alpha3() || alpha == -alpha3()) return beta.w1 - beta.w2;  // h_{a3} = h3
  throw std::invalid_argument("eval_on_coroot: not a root");
}

std::set<Root> odd_reflection(const std::set<Root>& simple, const Root& alpha) {
  if (!simple.count(alpha)) throw std::invalid_argument("odd_reflection: alpha not simple");
  if (!root_is_odd(alpha)) throw std::invalid_argument("odd_reflection: alpha not odd");
  std::set<Root> out;
  for (const Root& beta : simple) {
    if (beta == alpha) {
      out.insert(-alpha);
    } else if (is_zero(eval_on_coroot(alpha, beta)) && is_zero(eval_on_coroot(beta, alpha))) {
      out.insert(beta);
    } else {
      out.insert(beta + alpha);
    }
  }
  return out;
}

std::array<Gen, 3> raising_ops(Borel b) {
  switch (b) {
    case Borel::b1: return {Gen::x1, Gen::x2, Gen::x3};
    case Borel::b2: return {Gen::y1, Gen::x2, Gen::x3};
    case Borel::b3: return {Gen::y1, Gen::x2, Gen::y3};
  }
  throw std::invalid_argument("raising_ops: bad borel");
}

std::array<Gen, 3> lowering_ops(Borel b) {
  switch (b) {
    case Borel::b1: return {Gen::y1, Gen::y2, Gen::y3};
    case Borel::b2: return {Gen::x1, Gen::y2, Gen::y3};
    case Borel::b3: return {Gen::x1, Gen::y2, Gen::x3};
  }
  throw std::invalid_argument("lowering_ops: bad borel");
}

std::set<Root> simple_roots(Borel b) {
  switch (b) {
    case Borel::b1: return {alpha1(), alpha2()};
    case Borel::b2: return {-alpha1(), alpha3()};
    case Borel::b3: return {alpha2(), -alpha3()};
  }
  throw std::invalid_argument("simple_roots: bad borel");
}

std::set<Root> positive_roots(Borel b) {
  switch (b) {
    case Borel::b1: return {alpha1(), alpha2(), alpha3()};
    case Borel::b2: return {-alpha1(), alpha2(), alpha3()};
    case Borel::b3: return {-alpha1(), alpha2(), -alpha3()};
  }
  throw std::invalid_argument("positive_roots: bad borel");
}

bool is_dominant(Borel b, const Weight& lambda) {
  bool nonneg_int = is_integer(lambda.w2) && sgn(lambda.w2) >= 0;
  switch (b) {
    case Borel::b1:
    case Borel::b3:
      return nonneg_int;
    case Borel::b2:
      return (is_integer(lambda.w2) && sgn(lambda.w2) > 0) || lambda.is_zero();
  }
  return false;
}

bool is_typical(const Weight& lambda) {
  if (!is_dominant(Borel::b2, lambda) || lambda.is_zero())
    throw std::invalid_argument("is_typical: weight must be b(2)-dominant and nonzero");
  return !is_zero(lambda.w1) && !is_zero(lambda.w1 - lambda.w2);
}

GenCombo jacobi_residual(Gen a, Gen b, Gen c) {
  const int pa = parity_of(a), pb = parity_of(b), pc = parity_of(c);
  auto sign = [](int p, int q) { return (p * q) % 2 ? Rat(-1) : Rat(1); };
  GenCombo t1 = combo_scaled(bracket_combo({{a, Rat(1)}}, bracket(b, c), pa, (pb + pc) % 2),
                             sign(pa, pc));
  GenCombo t2 = combo_scaled(bracket_combo({{b, Rat(1)}}, bracket(c, a), pb, (pc + pa) % 2),
                             sign(pb, pa));
  GenCombo t3 = combo_scaled(bracket_combo({{c, Rat(1)}}, bracket(a, b), pc, (pa + pb) % 2),
                             sign(pc, pb));
  return combo_add(combo_add(t1, t2), t3);
}

}  // namespace sl12

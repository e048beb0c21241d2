#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sl12/superalgebra.hpp"

using namespace sl12;

namespace {

GenCombo combo(std::initializer_list<std::pair<Gen, long>> parts) {
  GenCombo c;
  for (auto [g, v] : parts) c.emplace_back(g, Rat(v));
  return c;
}

}  // namespace

TEST_CASE("parities") {
  CHECK(parity_of(Gen::x1) == 1);
  CHECK(parity_of(Gen::x3) == 1);
  CHECK(parity_of(Gen::y1) == 1);
  CHECK(parity_of(Gen::y3) == 1);
  CHECK(parity_of(Gen::x2) == 0);
  CHECK(parity_of(Gen::y2) == 0);
  CHECK(parity_of(Gen::h1) == 0);
  CHECK(parity_of(Gen::h2) == 0);
}

TEST_CASE("hand-checked structure constants") {
  CHECK(bracket(Gen::x1, Gen::y1) == combo({{Gen::h1, 1}}));
  CHECK(bracket(Gen::x2, Gen::y2) == combo({{Gen::h2, 1}}));
  CHECK(bracket(Gen::x3, Gen::y3) == combo({{Gen::h1, 1}, {Gen::h2, -1}}));
  CHECK(bracket(Gen::x2, Gen::x1) == combo({{Gen::x3, -1}}));
  CHECK(bracket(Gen::x1, Gen::x2) == combo({{Gen::x3, 1}}));
  CHECK(bracket(Gen::x2, Gen::y3) == combo({{Gen::y1, 1}}));
  CHECK(bracket(Gen::y1, Gen::y2) == combo({{Gen::y3, -1}}));
  CHECK(bracket(Gen::y2, Gen::y1) == combo({{Gen::y3, 1}}));
  CHECK(bracket(Gen::x3, Gen::y2) == combo({{Gen::x1, 1}}));
  CHECK(bracket(Gen::x1, Gen::y3) == combo({{Gen::y2, 1}}));
  CHECK(bracket(Gen::y1, Gen::x1) == combo({{Gen::h1, 1}}));  // odd pair is symmetric
  CHECK(bracket(Gen::x1, Gen::x3).empty());
  CHECK(bracket(Gen::y1, Gen::y3).empty());
  CHECK(bracket(Gen::x1, Gen::x1).empty());
  CHECK(bracket(Gen::y3, Gen::y3).empty());
  CHECK(bracket(Gen::h1, Gen::h2).empty());
  CHECK(bracket(Gen::x1, Gen::y2).empty());
  CHECK(bracket(Gen::y1, Gen::x2).empty());
  CHECK(bracket(Gen::h2, Gen::x1) == combo({{Gen::x1, -1}}));
  CHECK(bracket(Gen::h2, Gen::x2) == combo({{Gen::x2, 2}}));
}

TEST_CASE("bracket table agrees with the matrix supercommutator, all 64 pairs") {
  for (Gen a : kAllGens)
    for (Gen b : kAllGens) {
      RatMatrix direct =
          matrix_super_bracket(gen_matrix(a), gen_matrix(b), parity_of(a), parity_of(b));
      RatMatrix recombined(3, 3);
      for (const auto& [g, c] : bracket(a, b)) recombined = recombined + gen_matrix(g).scaled(c);
      CHECK(direct == recombined);
    }
}

TEST_CASE("super Jacobi identity, all 512 triples") {
  for (Gen a : kAllGens)
    for (Gen b : kAllGens)
      for (Gen c : kAllGens) CHECK(combo_is_zero(jacobi_residual(a, b, c)));
}

TEST_CASE("adjoint weights") {
  CHECK(weight_of(Gen::x1) == Weight(Rat(0), Rat(-1)));
  CHECK(weight_of(Gen::x2) == Weight(Rat(1), Rat(2)));
  CHECK(weight_of(Gen::x3) == Weight(Rat(1), Rat(1)));
  CHECK(weight_of(Gen::y3) == Weight(Rat(-1), Rat(-1)));
  for (Gen g : kAllGens) {
    Weight w = weight_of(g);
    // [h1, g] and [h2, g]
    GenCombo b1 = bracket(Gen::h1, g);
    GenCombo b2 = bracket(Gen::h2, g);
    CHECK(b1 == combo_scaled(GenCombo{{g, Rat(1)}}, w.w1));
    CHECK(b2 == combo_scaled(GenCombo{{g, Rat(1)}}, w.w2));
  }
}

TEST_CASE("z spans the center of the even part and grades the odd part") {
  for (Gen g : kAllGens) {
    GenCombo got = bracket_combo(z_combo(), {{g, Rat(1)}}, 0, parity_of(g));
    if (!parity_of(g)) {
      CHECK(combo_is_zero(got));
      continue;
    }
    // odd raising generators have z-eigenvalue +1, odd lowering generators -1
    Rat eig = (g == Gen::x1 || g == Gen::x3) ? Rat(1) : Rat(-1);
    CHECK(got == combo_scaled(GenCombo{{g, Rat(1)}}, eig));
  }
}

TEST_CASE("odd reflections walk the three Borels") {
  CHECK(odd_reflection(simple_roots(Borel::b1), alpha1()) == simple_roots(Borel::b2));
  CHECK(odd_reflection(simple_roots(Borel::b2), alpha3()) == simple_roots(Borel::b3));
  // reflecting back at the produced odd root is an involution
  CHECK(odd_reflection(simple_roots(Borel::b2), -alpha1()) == simple_roots(Borel::b1));
  CHECK(odd_reflection(simple_roots(Borel::b3), -alpha3()) == simple_roots(Borel::b2));
  CHECK_THROWS(odd_reflection(simple_roots(Borel::b1), alpha3()));   // not simple
  CHECK_THROWS(odd_reflection(simple_roots(Borel::b1), alpha2()));  // not odd
}

TEST_CASE("positive roots per Borel") {
  CHECK(positive_roots(Borel::b1) == std::set<Root>{alpha1(), alpha2(), alpha3()});
  CHECK(positive_roots(Borel::b2) == std::set<Root>{-alpha1(), alpha2(), alpha3()});
  CHECK(positive_roots(Borel::b3) == std::set<Root>{-alpha1(), alpha2(), -alpha3()});
}

TEST_CASE("dominance") {
  CHECK(is_dominant(Borel::b1, Weight(Rat(7, 3), Rat(2))));
  CHECK_FALSE(is_dominant(Borel::b1, Weight(Rat(0), Rat(-1))));
  CHECK_FALSE(is_dominant(Borel::b1, Weight(Rat(0), Rat(1, 2))));
  CHECK(is_dominant(Borel::b2, Weight(Rat(5), Rat(1))));
  CHECK(is_dominant(Borel::b2, Weight(Rat(0), Rat(0))));
  CHECK_FALSE(is_dominant(Borel::b2, Weight(Rat(5), Rat(0))));
}

TEST_CASE("typicality criterion") {
  CHECK(is_typical(Weight(Rat(3), Rat(1))));
  CHECK(is_typical(Weight(Rat(7, 3), Rat(2))));
  CHECK_FALSE(is_typical(Weight(Rat(0), Rat(2))));   // lambda1 = 0
  CHECK_FALSE(is_typical(Weight(Rat(2), Rat(2))));   // lambda1 = lambda2
  CHECK(is_typical(Weight(Rat(-2), Rat(4))));
  CHECK_THROWS(is_typical(Weight(Rat(0), Rat(0))));
  CHECK_THROWS(is_typical(Weight(Rat(1), Rat(0))));  // not b(2)-dominant
}

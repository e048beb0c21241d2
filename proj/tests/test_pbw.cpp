#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sl12/pbw.hpp"

using namespace sl12;

namespace {

Element nf(const Element& e) { return normal_form(e); }

Element L(Gen g, int d) { return Element::letter(g, d); }

int word_parity(const Word& w) {
  int p = 0;
  for (const CGen& c : w) p ^= parity_of(c.g);
  return p;
}

}  // namespace

TEST_CASE("normal form reorders across the current algebra bracket") {
  // x2(0) y2(1) = y2(1) x2(0) + h2(1)
  Element got = nf(L(Gen::x2, 0) * L(Gen::y2, 1));
  Element want = nf(L(Gen::y2, 1) * L(Gen::x2, 0) + L(Gen::h2, 1));
  CHECK(got == want);
  CHECK(got.terms().size() == 2);

  // Cartan letters commute; the higher degree moves left
  Element h = nf(L(Gen::h1, 0) * L(Gen::h2, 3));
  REQUIRE(h.terms().size() == 1);
  Word w = h.terms().begin()->first;
  REQUIRE(w.size() == 2);
  CHECK(w[0] == CGen{Gen::h2, 3});
  CHECK(w[1] == CGen{Gen::h1, 0});
}

TEST_CASE("odd squares vanish") {
  CHECK(nf(L(Gen::y3, 0) * L(Gen::y3, 0)).is_zero_elt());
  CHECK(nf(L(Gen::x1, 2) * L(Gen::x1, 2)).is_zero_elt());
  // but distinct degrees of the same odd letter anticommute without a square
  Element e = nf(L(Gen::y3, 0) * L(Gen::y3, 1));
  CHECK(e.terms().size() == 1);
}

TEST_CASE("y2rs values") {
  CHECK(nf(y2rs(1, 1)) == nf(L(Gen::y2, 1)));
  CHECK(nf(y2rs(2, 1)) == nf(L(Gen::y2, 0) * L(Gen::y2, 1)));
  CHECK(nf(y2rs(1, 2)) == nf(L(Gen::y2, 2)));
  CHECK(y2rs(0, 0) == Element::one());
  CHECK(y2rs(0, 3).is_zero_elt());
  CHECK(y2rs(-1, 2).is_zero_elt());
  // r=2, s=2: y2(1)^(2) + y2(0) y2(2)
  Element want = Element::divided_power(Gen::y2, 1, 2) + L(Gen::y2, 0) * L(Gen::y2, 2);
  CHECK(nf(y2rs(2, 2)) == nf(want));
  // divided-power coefficient visible: y2(3, 3) contains y2(1)^(3)/3! term
  Element e = nf(y2rs(3, 3));
  Word cube(3, CGen{Gen::y2, 1});
  auto it = e.terms().find(cube);
  REQUIRE(it != e.terms().end());
  CHECK(it->second == Rat(1, 6));
}

TEST_CASE("windowed y2 sum matches y2rs at k=0 and truncates otherwise") {
  for (long r = 0; r <= 3; ++r)
    for (long s = 0; s <= 3; ++s) CHECK(y2_window_sum(0, r, s) == y2rs(r, s));
  // k=1, r=2, s=3: b1 + b2 + b3 = 2, b1 + 2 b2 + 3 b3 = 3 -> (b1,b2)=(1,1)
  Element want = L(Gen::y2, 1) * L(Gen::y2, 2);
  CHECK(nf(y2_window_sum(1, 2, 3)) == nf(want));
  // k=2: no way to reach weighted sum 3 with two parts from {2,3}
  CHECK(y2_window_sum(2, 2, 3).is_zero_elt());
}

TEST_CASE("single-instance commutation identities") {
  // x2(1) y3(0) = y1(1) + y3(0) x2(1)
  CHECK(verify_comm_identity(CommId::rel1, {1, 0}).ok);
  // empty strings are trivially fine
  CHECK(verify_comm_identity(CommId::rel6, {2}).ok);
  // y1(0) y2rs(1,1) = y2rs(1,1) y1(0) - y3(1)
  CHECK(verify_comm_identity(CommId::rel8, {0, 1, 1}).ok);
  CHECK(verify_comm_identity(CommId::rel9, {1, 2, 2}).ok);
}

TEST_CASE("commutation identities sweep, strings up to 2, degrees up to 2") {
  std::vector<std::vector<long>> strings;
  for (long ell = 0; ell <= 2; ++ell) {
    std::vector<long> tuple(ell, 0);
    while (true) {
      strings.push_back(tuple);
      long i = ell - 1;
      while (i >= 0 && tuple[i] == 2) --i;
      if (i < 0) break;
      ++tuple[i];
      for (long j = i + 1; j < ell; ++j) tuple[j] = 0;
    }
    if (ell == 0) continue;
  }
  for (long a = 0; a <= 2; ++a) {
    for (const auto& s : strings) {
      std::vector<long> degs;
      degs.push_back(a);
      degs.insert(degs.end(), s.begin(), s.end());
      for (CommId id : {CommId::rel1, CommId::rel3, CommId::rel5, CommId::rel6, CommId::rel7}) {
        auto chk = verify_comm_identity(id, degs);
        INFO("id=", static_cast<int>(id), " residual=", chk.residual.str());
        CHECK(chk.ok);
      }
      for (Gen h : {Gen::h1, Gen::h2}) {
        for (CommId id : {CommId::rel2, CommId::rel4}) {
          auto chk = verify_comm_identity(id, degs, h);
          INFO("id=", static_cast<int>(id), " residual=", chk.residual.str());
          CHECK(chk.ok);
        }
      }
    }
  }
  for (long c = 0; c <= 2; ++c)
    for (long r = 0; r <= 2; ++r)
      for (long s = 1; s <= 2; ++s) {
        CHECK(verify_comm_identity(CommId::rel8, {c, r, s}).ok);
        CHECK(verify_comm_identity(CommId::rel9, {c, r, s}).ok);
      }
}

TEST_CASE("normal form is idempotent and multiplicative") {
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<int> gen_pick(0, 7);
  std::uniform_int_distribution<int> deg_pick(0, 2);
  std::uniform_int_distribution<int> len_pick(0, 3);
  auto random_word = [&]() {
    Word w;
    int len = len_pick(rng);
    for (int i = 0; i < len; ++i)
      w.push_back(CGen{static_cast<Gen>(gen_pick(rng)), deg_pick(rng)});
    return w;
  };
  for (int trial = 0; trial < 100; ++trial) {
    Element a, b;
    a.add_term(random_word(), Rat(1 + trial % 3));
    a.add_term(random_word(), Rat(-1));
    b.add_term(random_word(), Rat(2));
    Element na = nf(a), nb = nf(b);
    CHECK(nf(na) == na);
    CHECK(nf(a * b) == nf(na * nb));
  }
}

TEST_CASE("normal form preserves parity blocks") {
  Element e = nf(L(Gen::x1, 0) * L(Gen::y3, 1) * L(Gen::y2, 0));  // even word
  for (const auto& [w, c] : e.terms()) {
    (void)c;
    CHECK(word_parity(w) == 0);
  }
  Element o = nf(L(Gen::x2, 1) * L(Gen::y3, 2));  // odd word
  for (const auto& [w, c] : o.terms()) {
    (void)c;
    CHECK(word_parity(w) == 1);
  }
}

TEST_CASE("custom induced order sorts annihilated letters to the right") {
  PbwOrder o = induced_order(Borel::b1);
  // x1(0) y1(0) should rewrite to +/- y1(0) x1(0) + h1(0)
  Element e = normal_form(Element::letter(Gen::x1, 0) * Element::letter(Gen::y1, 0), o);
  bool saw_reordered = false, saw_h1 = false;
  for (const auto& [w, c] : e.terms()) {
    (void)c;
    if (w.size() == 2) {
      CHECK(w[0] == CGen{Gen::y1, 0});
      CHECK(w[1] == CGen{Gen::x1, 0});
      saw_reordered = true;
    }
    if (w.size() == 1) {
      CHECK(w[0] == CGen{Gen::h1, 0});
      saw_h1 = true;
    }
  }
  CHECK(saw_reordered);
  CHECK(saw_h1);
}

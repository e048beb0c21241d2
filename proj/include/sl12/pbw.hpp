#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "sl12/superalgebra.hpp"

namespace sl12 {

/// Generator of the current superalgebra: g tensor t^deg.
struct CGen {
  Gen g;
  int deg;

  bool operator==(const CGen& o) const { return g == o.g && deg == o.deg; }
  bool operator<(const CGen& o) const {
    if (deg != o.deg) return deg < o.deg;
    return static_cast<int>(g) < static_cast<int>(o.g);
  }
};

using Word = std::vector<CGen>;

std::string word_str(const Word& w);

/// Letter order for normal forms. Letters are ranked ascending and canonical
/// words are weakly DECREASING left to right (so e.g. x2(0)*y2(1) rewrites to
/// y2(1)*x2(0) + h2(1)).
struct PbwOrder {
  bool degree_major = true;           // rank = (deg, gen_rank) vs (gen_rank, deg)
  std::array<int, 8> gen_rank = {0, 1, 2, 3, 4, 5, 6, 7};  // y1,y2,y3,x1,x2,x3,h1,h2

  std::pair<int, int> rank(const CGen& c) const {
    int r = gen_rank[static_cast<int>(c.g)];
    return degree_major ? std::make_pair(c.deg, r) : std::make_pair(r, c.deg);
  }
  bool sorted_pair(const CGen& a, const CGen& b) const { return !(rank(a) < rank(b)); }
};

/// Order used for the induced-module action: annihilated odd pair rightmost,
/// free odd pair leftmost, gl(2) letters in between. Degrees are all zero
/// there, so rank ignores degree first.
PbwOrder induced_order(Borel b);

/// Element of U(g[t]) as an exact linear combination of words.
class Element {
 public:
  Element() = default;

  static Element zero() { return Element(); }
  static Element one();
  static Element letter(Gen g, int deg, const Rat& coeff = Rat(1));
  static Element from_combo(const GenCombo& combo, int deg);

  const std::map<Word, Rat>& terms() const { return terms_; }
  bool is_zero_elt() const { return terms_.empty(); }

  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element operator*(const Element& o) const;  // concatenation product
  Element scaled(const Rat& c) const;
  bool operator==(const Element& o) const { return terms_ == o.terms_; }

  void add_term(const Word& w, const Rat& c);

  /// u^{(p)} = u^p / p! for a single letter u.
  static Element divided_power(Gen g, int deg, int p);

  std::string str() const;

 private:
  std::map<Word, Rat> terms_;
};

/// Rewrites to the PBW canonical form for the given order: adjacent letters
/// u v with rank(u) < rank(v) become (-1)^{|u||v|} v u + [u, v](sum of degs);
/// repeated odd letters u u collapse to (1/2)[u, u](2 deg).
Element normal_form(const Element& e, const PbwOrder& order = PbwOrder{});

/// Garland-style sum: y2(r, s) = sum over b0 + ... + bs = r with
/// b1 + 2 b2 + ... + s bs = s of y2(0)^(b0) y2(1)^(b1) ... y2(s)^(bs).
/// Zero when r < 0 or when no composition exists.
Element y2rs(long r, long s);

/// Variant appearing in the third defining form of CV modules: the sum runs
/// over b_k + ... + b_s = r with k b_k + ... + s b_s = s, product of divided
/// powers (y2 t^k)^(b_k) ... (y2 t^s)^(b_s).
Element y2_window_sum(long k, long r, long s);

enum class CommId : int {
  rel1 = 1,  // x2(a) past a y3 string
  rel2,      // h(a) past a y3 string
  rel3,      // x2(a) past an x1 string
  rel4,      // h(a) past an x1 string
  rel5,      // x3(b) past a y3 string
  rel6,      // y1(c) past a y2 string
  rel7,      // x3(b) past a y2 string
  rel8,      // y1(c) past y2(r, s)
  rel9,      // x3(b) past y2(r, s)
};

struct IdentityCheck {
  bool ok;
  Element residual;  // normal form of lhs - rhs
};

/// Verifies one commutation identity instance. `degs` carries the degree
/// parameters: rel1/rel3: (a, string degs...); rel2/rel4: (a, string degs...)
/// with `h` one of h1/h2; rel5/rel7: (b, string degs...); rel6: (c, string
/// degs...); rel8: (c, r, s); rel9: (b, r, s).
IdentityCheck verify_comm_identity(CommId id, const std::vector<long>& degs,
                                   Gen h = Gen::h1);

}  // namespace sl12

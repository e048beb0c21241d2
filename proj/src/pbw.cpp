#include "sl12/pbw.hpp"

#include <functional>
#include <stdexcept>

namespace sl12 {

std::string word_str(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ".";
    s += gen_name(w[i].g) + "(" + std::to_string(w[i].deg) + ")";
  }
  return s;
}

PbwOrder induced_order(Borel b) {
  PbwOrder o;
  o.degree_major = false;
  auto set = [&o](Gen g, int r) { o.gen_rank[static_cast<int>(g)] = r; };
  // middle block (gl(2)) and the annihilated odd pair are shared
  set(Gen::y2, 5);
  set(Gen::x2, 4);
  set(Gen::h1, 3);
  set(Gen::h2, 2);
  switch (b) {
    case Borel::b1:  // free exterior pair (y1, y3), x1/x3 annihilate
      set(Gen::y1, 7);
      set(Gen::y3, 6);
      set(Gen::x1, 1);
      set(Gen::x3, 0);
      break;
    case Borel::b3:  // free exterior pair (x1, x3), y1/y3 annihilate
      set(Gen::x1, 7);
      set(Gen::x3, 6);
      set(Gen::y1, 1);
      set(Gen::y3, 0);
      break;
    default:
      throw std::invalid_argument("induced_order: only distinguished/anti-distinguished");
  }
  return o;
}

Element Element::one() {
  Element e;
  e.terms_[Word{}] = 1;
  return e;
}

Element Element::letter(Gen g, int deg, const Rat& coeff) {
  Element e;
  if (!is_zero(coeff)) e.terms_[Word{CGen{g, deg}}] = coeff;
  return e;
}

Element Element::from_combo(const GenCombo& combo, int deg) {
  Element e;
  for (const auto& [g, c] : combo) e.add_term(Word{CGen{g, deg}}, c);
  return e;
}

void Element::add_term(const Word& w, const Rat& c) {
  if (is_zero(c)) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_[w] = c;
  } else {
    it->second += c;
    if (is_zero(it->second)) terms_.erase(it);
  }
}

Element Element::operator+(const Element& o) const {
  Element e = *this;
  for (const auto& [w, c] : o.terms_) e.add_term(w, c);
  return e;
}

Element Element::operator-(const Element& o) const {
  Element e = *this;
  for (const auto& [w, c] : o.terms_) e.add_term(w, -c);
  return e;
}

Element Element::operator*(const Element& o) const {
  Element e;
  for (const auto& [w1, c1] : terms_)
    for (const auto& [w2, c2] : o.terms_) {
      Word w = w1;
      w.insert(w.end(), w2.begin(), w2.end());
      e.add_term(w, c1 * c2);
    }
  return e;
}

Element Element::scaled(const Rat& c) const {
  Element e;
  if (is_zero(c)) return e;
  for (const auto& [w, v] : terms_) e.terms_[w] = v * c;
  return e;
}

Element Element::divided_power(Gen g, int deg, int p) {
  if (p < 0) throw std::invalid_argument("divided_power: negative exponent");
  Element e;
  Word w(static_cast<size_t>(p), CGen{g, deg});
  e.terms_[w] = Rat(Int(1), factorial(static_cast<unsigned long>(p)));
  return e;
}

std::string Element::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [w, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += rat_str(c) + "*" + word_str(w);
  }
  return s;
}

Element normal_form(const Element& e, const PbwOrder& order) {
  Element out;
  std::vector<std::pair<Word, Rat>> work(e.terms().begin(), e.terms().end());
  while (!work.empty()) {
    auto [w, c] = std::move(work.back());
    work.pop_back();
    if (is_zero(c)) continue;

    // leftmost violation: an ascending adjacent pair, or an odd square
    size_t pos = w.size();
    bool square = false;
    for (size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i] == w[i + 1]) {
        if (parity_of(w[i].g)) {
          pos = i;
          square = true;
          break;
        }
        continue;
      }
      if (!order.sorted_pair(w[i], w[i + 1])) {
        pos = i;
        break;
      }
    }

    if (pos == w.size()) {
      out.add_term(w, c);
      continue;
    }

    const CGen u = w[pos], v = w[pos + 1];
    if (square) {
      // u u = (1/2) [u, u] at doubled degree
      for (const auto& [g, co] : bracket(u.g, u.g)) {
        Word nw(w.begin(), w.begin() + pos);
        nw.push_back(CGen{g, 2 * u.deg});
        nw.insert(nw.end(), w.begin() + pos + 2, w.end());
        work.emplace_back(std::move(nw), c * co / 2);
      }
      continue;
    }

    // u v = (-1)^{|u||v|} v u + [u, v]
    Rat sign = (parity_of(u.g) * parity_of(v.g)) % 2 ? Rat(-1) : Rat(1);
    Word swapped = w;
    std::swap(swapped[pos], swapped[pos + 1]);
    work.emplace_back(std::move(swapped), c * sign);
    for (const auto& [g, co] : bracket(u.g, v.g)) {
      Word nw(w.begin(), w.begin() + pos);
      nw.push_back(CGen{g, u.deg + v.deg});
      nw.insert(nw.end(), w.begin() + pos + 2, w.end());
      work.emplace_back(std::move(nw), c * co);
    }
  }
  return out;
}

namespace {

/// All (b_k, ..., b_s) with sum r and weighted sum s; passed to `emit` as a
/// degree -> multiplicity map covering degrees k..s.
void window_solutions(long k, long r, long s,
                      const std::function<void(const std::vector<long>&)>& emit) {
  if (r < 0 || s < 0) return;
  std::vector<long> mult(static_cast<size_t>(s) + 1, 0);
  std::function<void(long, long, long)> rec = [&](long d, long count_left, long weight_left) {
    if (d < k) {
      if (count_left == 0 && weight_left == 0) emit(mult);
      return;
    }
    if (d == 0) {
      // degree 0 carries no weight: absorb the rest of the count
      if (weight_left == 0) {
        mult[0] = count_left;
        emit(mult);
        mult[0] = 0;
      }
      return;
    }
    long max_b = count_left;
    if (d > 0) max_b = std::min(max_b, weight_left / d);
    for (long b = 0; b <= max_b; ++b) {
      mult[static_cast<size_t>(d)] = b;
      rec(d - 1, count_left - b, weight_left - b * d);
    }
    mult[static_cast<size_t>(d)] = 0;
  };
  rec(s, r, s);
}

Element window_element(long k, long r, long s) {
  Element acc = Element::zero();
  if (r < 0) return acc;
  if (s == 0) {
    if (k == 0) return Element::divided_power(Gen::y2, 0, static_cast<int>(r));
    return r == 0 ? Element::one() : Element::zero();
  }
  window_solutions(k, r, s, [&acc, s](const std::vector<long>& mult) {
    Element prod = Element::one();
    for (long d = 0; d <= s; ++d) {
      if (mult[static_cast<size_t>(d)] == 0) continue;
      prod = prod * Element::divided_power(Gen::y2, static_cast<int>(d),
                                           static_cast<int>(mult[static_cast<size_t>(d)]));
    }
    acc = acc + prod;
  });
  return acc;
}

Element string_product(Gen g, const std::vector<long>& degs) {
  Element prod = Element::one();
  for (long d : degs) prod = prod * Element::letter(g, static_cast<int>(d));
  return prod;
}

Element string_product_skip(Gen g, const std::vector<long>& degs, size_t skip) {
  Element prod = Element::one();
  for (size_t i = 0; i < degs.size(); ++i) {
    if (i == skip) continue;
    prod = prod * Element::letter(g, static_cast<int>(degs[i]));
  }
  return prod;
}

Rat sign_pow(long e) { return (e % 2 + 2) % 2 ? Rat(-1) : Rat(1); }

}  // namespace

Element y2rs(long r, long s) { return window_element(0, r, s); }

Element y2_window_sum(long k, long r, long s) { return window_element(k, r, s); }

IdentityCheck verify_comm_identity(CommId id, const std::vector<long>& degs, Gen h) {
  if (h != Gen::h1 && h != Gen::h2)
    throw std::invalid_argument("verify_comm_identity: h must be h1 or h2");
  Rat a1_h = h == Gen::h1 ? alpha1().w1 : alpha1().w2;
  Rat a3_h = h == Gen::h1 ? alpha3().w1 : alpha3().w2;

  Element lhs, rhs;
  switch (id) {
    case CommId::rel1: {
      if (degs.empty()) throw std::invalid_argument("rel1: need (a, c...)");
      long a = degs[0];
      std::vector<long> c(degs.begin() + 1, degs.end());
      long l = static_cast<long>(c.size());
      lhs = Element::letter(Gen::x2, static_cast<int>(a)) * string_product(Gen::y3, c);
      rhs = string_product(Gen::y3, c) * Element::letter(Gen::x2, static_cast<int>(a));
      for (size_t j = 0; j < c.size(); ++j) {
        Element t = string_product_skip(Gen::y3, c, j) *
                    Element::letter(Gen::y1, static_cast<int>(c[j] + a));
        rhs = rhs + t.scaled(sign_pow(l - static_cast<long>(j) - 1));
      }
      break;
    }
    case CommId::rel2: {
      if (degs.empty()) throw std::invalid_argument("rel2: need (a, c...)");
      long a = degs[0];
      std::vector<long> c(degs.begin() + 1, degs.end());
      long l = static_cast<long>(c.size());
      lhs = Element::letter(h, static_cast<int>(a)) * string_product(Gen::y3, c);
      rhs = string_product(Gen::y3, c) * Element::letter(h, static_cast<int>(a));
      for (size_t j = 0; j < c.size(); ++j) {
        Element t = string_product_skip(Gen::y3, c, j) *
                    Element::letter(Gen::y3, static_cast<int>(c[j] + a));
        rhs = rhs + t.scaled(a3_h * sign_pow(l - static_cast<long>(j)));
      }
      break;
    }
    case CommId::rel3: {
      if (degs.empty()) throw std::invalid_argument("rel3: need (a, b...)");
      long a = degs[0];
      std::vector<long> b(degs.begin() + 1, degs.end());
      long k = static_cast<long>(b.size());
      lhs = Element::letter(Gen::x2, static_cast<int>(a)) * string_product(Gen::x1, b);
      rhs = string_product(Gen::x1, b) * Element::letter(Gen::x2, static_cast<int>(a));
      for (size_t j = 0; j < b.size(); ++j) {
        Element t = string_product_skip(Gen::x1, b, j) *
                    Element::letter(Gen::x3, static_cast<int>(b[j] + a));
        rhs = rhs + t.scaled(sign_pow(k - static_cast<long>(j)));
      }
      break;
    }
    case CommId::rel4: {
      if (degs.empty()) throw std::invalid_argument("rel4: need (a, b...)");
      long a = degs[0];
      std::vector<long> b(degs.begin() + 1, degs.end());
      long k = static_cast<long>(b.size());
      lhs = Element::letter(h, static_cast<int>(a)) * string_product(Gen::x1, b);
      rhs = string_product(Gen::x1, b) * Element::letter(h, static_cast<int>(a));
      for (size_t j = 0; j < b.size(); ++j) {
        Element t = string_product_skip(Gen::x1, b, j) *
                    Element::letter(Gen::x1, static_cast<int>(b[j] + a));
        rhs = rhs + t.scaled(a1_h * sign_pow(k - static_cast<long>(j) - 1));
      }
      break;
    }
    case CommId::rel5: {
      if (degs.empty()) throw std::invalid_argument("rel5: need (b, c...)");
      long b = degs[0];
      std::vector<long> c(degs.begin() + 1, degs.end());
      long l = static_cast<long>(c.size());
      lhs = Element::letter(Gen::x3, static_cast<int>(b)) * string_product(Gen::y3, c);
      rhs = (string_product(Gen::y3, c) * Element::letter(Gen::x3, static_cast<int>(b)))
                .scaled(sign_pow(l));
      for (size_t j = 0; j < c.size(); ++j) {
        Element t = string_product_skip(Gen::y3, c, j) *
                    Element::from_combo(h3_combo(), static_cast<int>(c[j] + b));
        rhs = rhs + t.scaled(sign_pow(static_cast<long>(j)));
      }
      break;
    }
    case CommId::rel6: {
      if (degs.empty()) throw std::invalid_argument("rel6: need (c, a...)");
      long cdeg = degs[0];
      std::vector<long> a(degs.begin() + 1, degs.end());
      lhs = Element::letter(Gen::y1, static_cast<int>(cdeg)) * string_product(Gen::y2, a);
      rhs = string_product(Gen::y2, a) * Element::letter(Gen::y1, static_cast<int>(cdeg));
      for (size_t i = 0; i < a.size(); ++i) {
        Element t = string_product_skip(Gen::y2, a, i) *
                    Element::letter(Gen::y3, static_cast<int>(a[i] + cdeg));
        rhs = rhs - t;
      }
      break;
    }
    case CommId::rel7: {
      if (degs.empty()) throw std::invalid_argument("rel7: need (b, a...)");
      long b = degs[0];
      std::vector<long> a(degs.begin() + 1, degs.end());
      lhs = Element::letter(Gen::x3, static_cast<int>(b)) * string_product(Gen::y2, a);
      rhs = string_product(Gen::y2, a) * Element::letter(Gen::x3, static_cast<int>(b));
      for (size_t i = 0; i < a.size(); ++i) {
        Element t = string_product_skip(Gen::y2, a, i) *
                    Element::letter(Gen::x1, static_cast<int>(a[i] + b));
        rhs = rhs + t;
      }
      break;
    }
    case CommId::rel8: {
      if (degs.size() != 3) throw std::invalid_argument("rel8: need (c, r, s)");
      long c = degs[0], r = degs[1], s = degs[2];
      lhs = Element::letter(Gen::y1, static_cast<int>(c)) * y2rs(r, s);
      rhs = y2rs(r, s) * Element::letter(Gen::y1, static_cast<int>(c));
      for (long q = 0; q <= s; ++q)
        rhs = rhs - y2rs(r - 1, s - q) * Element::letter(Gen::y3, static_cast<int>(c + q));
      break;
    }
    case CommId::rel9: {
      if (degs.size() != 3) throw std::invalid_argument("rel9: need (b, r, s)");
      long b = degs[0], r = degs[1], s = degs[2];
      lhs = Element::letter(Gen::x3, static_cast<int>(b)) * y2rs(r, s);
      rhs = y2rs(r, s) * Element::letter(Gen::x3, static_cast<int>(b));
      for (long q = 0; q <= s; ++q)
        rhs = rhs + y2rs(r - 1, s - q) * Element::letter(Gen::x1, static_cast<int>(b + q));
      break;
    }
    default:
      throw std::invalid_argument("verify_comm_identity: unknown identity");
  }

  IdentityCheck chk;
  chk.residual = normal_form(lhs - rhs);
  chk.ok = chk.residual.is_zero_elt();
  return chk;
}

}  // namespace sl12

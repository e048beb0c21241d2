#include "sl12/modules.hpp"

#include <numeric>
#include <optional>
#include <stdexcept>

namespace sl12 {

FiniteModule::FiniteModule(std::vector<Weight> weights, std::vector<int> parities, RatVec cyclic,
                           int degree_cap_hint, Provider provider,
                           std::vector<std::string> labels)
    : weights_(std::move(weights)),
      parities_(std::move(parities)),
      cyclic_(std::move(cyclic)),
      cap_(degree_cap_hint),
      labels_(std::move(labels)),
      provider_(std::move(provider)),
      memo_(std::make_shared<std::map<std::pair<int, int>, SparseMat>>()) {
  if (parities_.size() != weights_.size() || cyclic_.size() != weights_.size())
    throw std::invalid_argument("FiniteModule: inconsistent sizes");
  if (!labels_.empty() && labels_.size() != weights_.size())
    throw std::invalid_argument("FiniteModule: label count");
}

RatVec FiniteModule::basis_vector(int i) const {
  RatVec v(dim(), Rat(0));
  v.at(i) = 1;
  return v;
}

const SparseMat& FiniteModule::action(Gen g, int deg) const {
  auto key = std::make_pair(static_cast<int>(g), deg);
  auto it = memo_->find(key);
  if (it != memo_->end()) return it->second;
  SparseMat m = provider_(g, deg);
  if (m.rows() != dim() || m.cols() != dim())
    throw std::logic_error("FiniteModule: provider returned wrong shape");
  return memo_->emplace(key, std::move(m)).first->second;
}

RatVec FiniteModule::act(Gen g, int deg, const RatVec& v) const { return action(g, deg).apply(v); }

RatVec FiniteModule::act_word(const Word& w, const RatVec& v) const {
  RatVec cur = v;
  for (auto it = w.rbegin(); it != w.rend(); ++it) cur = act(it->g, it->deg, cur);
  return cur;
}

RatVec FiniteModule::act_element(const Element& e, const RatVec& v) const {
  RatVec out(dim(), Rat(0));
  for (const auto& [w, c] : e.terms()) out = vec_add(out, vec_scaled(act_word(w, v), c));
  return out;
}

std::map<Weight, std::vector<int>> FiniteModule::weight_classes() const {
  std::map<Weight, std::vector<int>> classes;
  for (int i = 0; i < dim(); ++i) classes[weights_[i]].push_back(i);
  return classes;
}

FiniteModule trivial_module() {
  return FiniteModule({Weight()}, {0}, {Rat(1)}, 0, [](Gen, int) { return SparseMat(1, 1); },
                      {"v"});
}

FiniteModule irreducible_gl2(const Weight& hw) {
  if (!is_integer(hw.w2) || sgn(hw.w2) < 0)
    throw std::invalid_argument("irreducible_gl2: hw must have a nonnegative integer on h2");
  long n = hw.w2.get_num().get_si();
  int dim = static_cast<int>(n) + 1;
  std::vector<Weight> ws;
  std::vector<std::string> ls;
  for (long i = 0; i <= n; ++i) {
    ws.push_back(Weight(hw.w1 - i, hw.w2 - 2 * i));
    ls.push_back(i == 0 ? "v" : (i == 1 ? "y2 v" : "y2^" + std::to_string(i) + " v"));
  }
  RatVec cyc(dim, Rat(0));
  cyc[0] = 1;
  auto mats = std::make_shared<std::array<SparseMat, 8>>();
  for (auto& sm : *mats) sm = SparseMat(dim, dim);
  auto& M = *mats;
  auto at = [](Gen g) { return static_cast<size_t>(g); };
  for (long i = 0; i <= n; ++i) {
    int c = static_cast<int>(i);
    M[at(Gen::h1)].add(c, c, hw.w1 - i);
    M[at(Gen::h2)].add(c, c, hw.w2 - 2 * i);
    if (i < n) M[at(Gen::y2)].add(c + 1, c, Rat(1));
    if (i > 0) M[at(Gen::x2)].add(c - 1, c, Rat(i) * (hw.w2 - i + 1));
  }
  for (auto& sm : M) sm.finalize();
  return FiniteModule(
      std::move(ws), std::vector<int>(dim, 0), std::move(cyc), 0,
      [mats, dim](Gen g, int d) { return d == 0 ? (*mats)[static_cast<size_t>(g)] : SparseMat(dim, dim); },
      std::move(ls));
}

namespace {

/// Data of the induced realization over b(1) or b(3): the free odd exterior
/// pair, ranked just above everything else by induced_order, and the letters
/// that annihilate the gl(2) highest vector.
struct InducedShape {
  Gen e1, e3;
  std::array<Gen, 3> killers;
};

InducedShape induced_shape(Borel b) {
  if (b == Borel::b1) return {Gen::y1, Gen::y3, {Gen::x1, Gen::x2, Gen::x3}};
  if (b == Borel::b3) return {Gen::x1, Gen::x3, {Gen::y1, Gen::x2, Gen::y3}};
  throw std::logic_error("induced_shape: only b(1) and b(3) have an induced realization");
}

/// Value of a canonical word (for induced_order) on the highest vector:
/// basis index and scalar, or nullopt when it dies.
std::optional<std::pair<int, Rat>> eval_induced_word(const Word& w, const InducedShape& sh,
                                                     const Weight& hw, long n) {
  size_t p = 0;
  int eps1 = 0, eps3 = 0;
  long k = 0;
  while (p < w.size() && w[p].g == sh.e1) ++eps1, ++p;
  while (p < w.size() && w[p].g == sh.e3) ++eps3, ++p;
  while (p < w.size() && w[p].g == Gen::y2) ++k, ++p;
  if (eps1 > 1 || eps3 > 1) throw std::logic_error("eval_induced_word: odd square survived");
  Rat scal(1);
  for (; p < w.size(); ++p) {
    Gen g = w[p].g;
    if (w[p].deg != 0) throw std::logic_error("eval_induced_word: nonzero degree in " + word_str(w));
    if (g == Gen::h1) {
      scal *= hw.w1;
    } else if (g == Gen::h2) {
      scal *= hw.w2;
    } else if (g == sh.killers[0] || g == sh.killers[1] || g == sh.killers[2]) {
      return std::nullopt;
    } else {
      throw std::logic_error("eval_induced_word: letters out of order in " + word_str(w));
    }
  }
  if (k > n) return std::nullopt;
  int idx = (eps1 + 2 * eps3) * static_cast<int>(n + 1) + static_cast<int>(k);
  return std::make_pair(idx, scal);
}

FiniteModule induced_kac(Borel b, const Weight& hw) {
  if (!is_dominant(b, hw)) throw std::invalid_argument("kac_module: weight not dominant");
  long n = hw.w2.get_num().get_si();
  InducedShape sh = induced_shape(b);
  int dim = 4 * static_cast<int>(n + 1);
  PbwOrder order = induced_order(b);

  auto word_of = [&](int eps, long k) {
    Word w;
    if (eps & 1) w.push_back(CGen{sh.e1, 0});
    if (eps & 2) w.push_back(CGen{sh.e3, 0});
    for (long t = 0; t < k; ++t) w.push_back(CGen{Gen::y2, 0});
    return w;
  };
  auto label_of = [&](int eps, long k) {
    std::string s;
    if (eps & 1) s += gen_name(sh.e1) + ".";
    if (eps & 2) s += gen_name(sh.e3) + ".";
    if (k == 1) s += "y2.";
    if (k > 1) s += "y2^" + std::to_string(k) + ".";
    return s + "v";
  };

  std::vector<Weight> ws(dim);
  std::vector<int> ps(dim);
  std::vector<std::string> ls(dim);
  for (int eps = 0; eps < 4; ++eps)
    for (long k = 0; k <= n; ++k) {
      int id = eps * static_cast<int>(n + 1) + static_cast<int>(k);
      Weight wt = hw;
      if (eps & 1) wt = wt + weight_of(sh.e1);
      if (eps & 2) wt = wt + weight_of(sh.e3);
      wt = wt + Weight(Rat(k) * weight_of(Gen::y2).w1, Rat(k) * weight_of(Gen::y2).w2);
      ws[id] = wt;
      ps[id] = ((eps & 1) + (eps >> 1)) & 1;
      ls[id] = label_of(eps, k);
    }

  auto mats = std::make_shared<std::array<SparseMat, 8>>();
  for (auto& sm : *mats) sm = SparseMat(dim, dim);
  for (Gen g : kAllGens) {
    SparseMat& m = (*mats)[static_cast<size_t>(g)];
    for (int eps = 0; eps < 4; ++eps)
      for (long k = 0; k <= n; ++k) {
        int col = eps * static_cast<int>(n + 1) + static_cast<int>(k);
        Word w = word_of(eps, k);
        w.insert(w.begin(), CGen{g, 0});
        Element e;
        e.add_term(w, Rat(1));
        Element nf = normal_form(e, order);
        for (const auto& [cw, cc] : nf.terms()) {
          auto val = eval_induced_word(cw, sh, hw, n);
          if (val) m.add(val->first, col, cc * val->second);
        }
      }
    m.finalize();
  }

  RatVec cyc(dim, Rat(0));
  cyc[0] = 1;
  return FiniteModule(
      std::move(ws), std::move(ps), std::move(cyc), 0,
      [mats, dim](Gen g, int d) { return d == 0 ? (*mats)[static_cast<size_t>(g)] : SparseMat(dim, dim); },
      std::move(ls));
}

FiniteModule kac_b2(const Weight& hw) {
  if (hw.is_zero()) return trivial_module();
  FiniteModule base = !is_zero(hw.w1) ? induced_kac(Borel::b1, Weight(hw.w1, hw.w2 - 1))
                                      : induced_kac(Borel::b3, Weight(hw.w1 - 1, hw.w2 - 1));
  auto classes = base.weight_classes();
  auto it = classes.find(hw);
  if (it == classes.end()) throw std::runtime_error("kac_module: highest weight slice missing");
  const std::vector<int>& ids = it->second;
  std::vector<int> all(base.dim());
  std::iota(all.begin(), all.end(), 0);
  std::vector<RatVec> rows;
  for (Gen r : raising_ops(Borel::b2)) {
    RatMatrix blk = base.action(r, 0).block(all, ids);
    for (int i = 0; i < blk.rows(); ++i) rows.push_back(blk.row(i));
  }
  RatMatrix ker = nullspace_of(RatMatrix::from_rows(rows, static_cast<int>(ids.size())));
  if (ker.rows() != 1) throw std::runtime_error("kac_module: b(2) singular line not unique");
  RatVec cyc(base.dim(), Rat(0));
  for (size_t j = 0; j < ids.size(); ++j) cyc[ids[j]] = ker.at(0, static_cast<int>(j));

  int par = -1;
  for (int i = 0; i < base.dim(); ++i) {
    if (is_zero(cyc[i])) continue;
    if (par < 0)
      par = base.parities()[i];
    else if (par != base.parities()[i])
      throw std::runtime_error("kac_module: mixed-parity singular vector");
  }
  std::vector<int> pars = base.parities();
  if (par == 1)
    for (int& p : pars) p ^= 1;
  return FiniteModule(base.weights(), std::move(pars), std::move(cyc), base.degree_cap_hint(),
                      [base](Gen g, int d) { return base.action(g, d); }, base.labels());
}

}  // namespace

FiniteModule kac_module(Borel b, const Weight& hw) {
  if (!is_dominant(b, hw)) throw std::invalid_argument("kac_module: weight not dominant");
  if (b == Borel::b2) return kac_b2(hw);
  return induced_kac(b, hw);
}

FiniteModule evaluation(const FiniteModule& m, const Rat& z) {
  return FiniteModule(m.weights(), m.parities(), m.cyclic(), 0,
                      [m, z](Gen g, int d) { return m.action(g, 0).scaled(rat_pow(z, d)); },
                      m.labels());
}

FiniteModule tensor_product(const FiniteModule& a, const FiniteModule& b) {
  int da = a.dim(), db = b.dim(), dim = da * db;
  std::vector<Weight> ws(dim);
  std::vector<int> ps(dim);
  RatVec cyc(dim);
  bool lab = !a.labels().empty() && !b.labels().empty();
  std::vector<std::string> ls(lab ? dim : 0);
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < db; ++j) {
      int id = i * db + j;
      ws[id] = a.weights()[i] + b.weights()[j];
      ps[id] = (a.parities()[i] + b.parities()[j]) & 1;
      cyc[id] = a.cyclic()[i] * b.cyclic()[j];
      if (lab) ls[id] = a.labels()[i] + " ⊗ " + b.labels()[j];
    }
  auto provider = [a, b, da, db](Gen g, int d) {
    SparseMat out(da * db, da * db);
    for (const auto& en : a.action(g, d).entries())
      for (int j = 0; j < db; ++j) out.add(en.r * db + j, en.c * db + j, en.v);
    int pg = parity_of(g);
    for (const auto& en : b.action(g, d).entries())
      for (int i = 0; i < da; ++i) {
        // Koszul sign: x moving past the slot-0 tensor factor
        if (pg && a.parities()[i])
          out.add(i * db + en.r, i * db + en.c, -en.v);
        else
          out.add(i * db + en.r, i * db + en.c, en.v);
      }
    out.finalize();
    return out;
  };
  return FiniteModule(std::move(ws), std::move(ps), std::move(cyc),
                      a.degree_cap_hint() + b.degree_cap_hint() + 1, std::move(provider),
                      std::move(ls));
}

FiniteModule tensor_product(const std::vector<FiniteModule>& factors) {
  if (factors.empty()) return trivial_module();
  FiniteModule acc = factors[0];
  for (size_t i = 1; i < factors.size(); ++i) acc = tensor_product(acc, factors[i]);
  return acc;
}

FiniteModule shift(const FiniteModule& m, const Rat& z) {
  if (is_zero(z)) return m;
  return FiniteModule(
      m.weights(), m.parities(), m.cyclic(), m.degree_cap_hint(),
      [m, z](Gen g, int d) {
        SparseMat out(m.dim(), m.dim());
        for (int j = 0; j <= d; ++j) {
          Rat c = Rat(binomial(static_cast<unsigned long>(d), static_cast<unsigned long>(j))) *
                  rat_pow(-z, d - j);
          out = out.plus(m.action(g, j).scaled(c));
        }
        return out;
      },
      m.labels());
}

std::vector<SingularVector> singular_vectors(const FiniteModule& m, Borel b) {
  std::vector<SingularVector> out;
  std::vector<int> all(m.dim());
  std::iota(all.begin(), all.end(), 0);
  for (const auto& [mu, ids] : m.weight_classes()) {
    std::vector<RatVec> rows;
    for (Gen r : raising_ops(b)) {
      RatMatrix blk = m.action(r, 0).block(all, ids);
      for (int i = 0; i < blk.rows(); ++i) rows.push_back(blk.row(i));
    }
    RatMatrix ker = nullspace_of(RatMatrix::from_rows(rows, static_cast<int>(ids.size())));
    for (int i = 0; i < ker.rows(); ++i) {
      RatVec v(m.dim(), Rat(0));
      for (size_t j = 0; j < ids.size(); ++j) v[ids[j]] = ker.at(i, static_cast<int>(j));
      out.push_back({mu, std::move(v)});
    }
  }
  return out;
}

bool is_irreducible(const FiniteModule& m, Borel b) {
  auto sing = singular_vectors(m, b);
  if (sing.size() != 1) return false;
  return Subspace::span_of({sing[0].vec}, m.dim()).contains(m.cyclic());
}

std::vector<Weight> g0_highest_weights(const FiniteModule& m) {
  std::vector<int> all(m.dim());
  std::iota(all.begin(), all.end(), 0);
  std::vector<Weight> out;
  Rat total(0);
  for (const auto& [mu, ids] : m.weight_classes()) {
    RatMatrix blk = m.action(Gen::x2, 0).block(all, ids);
    int mult = static_cast<int>(ids.size()) - rank_of(blk);
    if (mult == 0) continue;
    if (!is_integer(mu.w2) || sgn(mu.w2) < 0)
      throw std::runtime_error("g0_highest_weights: highest vector at a non-dominant weight");
    out.insert(out.end(), mult, mu);
    total += Rat(mult) * (mu.w2 + 1);
  }
  if (total != m.dim()) throw std::runtime_error("g0_highest_weights: multiplicities do not fill the module");
  std::sort(out.begin(), out.end());
  return out;
}

Subspace submodule_closure(const FiniteModule& m, const std::vector<RatVec>& seeds, int max_deg) {
  Subspace s(m.dim());
  std::vector<RatVec> queue;
  for (const RatVec& v : seeds)
    if (s.grow(v)) queue.push_back(v);
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    RatVec cur = queue[qi];  // copy: growing the queue invalidates references
    for (Gen g : kAllGens)
      for (int d = 0; d <= max_deg; ++d) {
        RatVec w = m.act(g, d, cur);
        if (!vec_is_zero(w) && s.grow(w)) queue.push_back(std::move(w));
      }
  }
  return s;
}

bool is_cyclic_on(const FiniteModule& m, const RatVec& seed, int max_deg) {
  return submodule_closure(m, {seed}, max_deg).dim() == m.dim();
}

bool is_current_rep(const FiniteModule& m, int max_deg, bool include_odd_pairs) {
  for (Gen a : kAllGens)
    for (Gen b : kAllGens) {
      int pa = parity_of(a), pb = parity_of(b);
      if (!include_odd_pairs && pa && pb) continue;
      for (int da = 0; da <= max_deg; ++da)
        for (int db = 0; db <= max_deg; ++db) {
          const SparseMat& A = m.action(a, da);
          const SparseMat& B = m.action(b, db);
          Rat back = (pa && pb) ? Rat(1) : Rat(-1);
          SparseMat lhs = A.times(B).plus(B.times(A).scaled(back));
          SparseMat rhs(m.dim(), m.dim());
          for (const auto& [c, co] : bracket(a, b)) rhs = rhs.plus(m.action(c, da + db).scaled(co));
          if (!lhs.plus(rhs.scaled(Rat(-1))).is_zero_mat()) return false;
        }
    }
  return true;
}

}  // namespace sl12

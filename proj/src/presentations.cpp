#include "sl12/presentations.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "sl12/pbw.hpp"

namespace sl12 {

namespace {

long long_of(const Rat& q, const char* what) {
  if (!is_integer(q) || sgn(q) < 0 || !q.get_num().fits_slong_p())
    throw std::invalid_argument(std::string(what) + " must be a small nonnegative integer");
  return q.get_num().get_si();
}

std::string partition_str(const Partition& xi) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < xi.size(); ++i) os << (i ? "," : "") << xi[i];
  os << ')';
  return os.str();
}

std::string fmt(const char* names, std::initializer_list<long> vals) {
  // names is a comma-separated list matching vals, e.g. fmt("k,r,s", {0,1,2}).
  std::ostringstream os;
  const char* p = names;
  bool first = true;
  for (long v : vals) {
    const char* q = p;
    while (*q && *q != ',') ++q;
    os << (first ? "" : ",") << std::string(p, q) << '=' << v;
    p = *q ? q + 1 : q;
    first = false;
  }
  return os.str();
}

/// g(deg)^(p) v = g(deg)^p v / p!.
RatVec divided_apply(const FiniteModule& m, Gen g, int deg, long p, RatVec v) {
  for (long i = 0; i < p; ++i) v = m.act(g, deg, v);
  if (p > 1) v = vec_scaled(v, Rat(1) / Rat(factorial(static_cast<unsigned long>(p))));
  return v;
}

/// Visits every (k, r, bound) of the reduced window grid of xi:
/// xi_{k+1} <= r < xi_k with r >= 1, bound = k r + xi_{k+1} + ... + xi_d.
template <class F>
void for_reduced_windows(const Partition& xi, F&& fn) {
  if (xi.empty()) return;
  long d = static_cast<long>(xi.size()) - 1;
  std::vector<long> tail(xi.size() + 1, 0);
  for (long j = d; j >= 0; --j) tail[j] = tail[j + 1] + xi[j];
  for (long k = 0; k <= d; ++k) {
    long lo = std::max(k < d ? xi[k + 1] : 0L, 1L);
    for (long r = lo; r < xi[k]; ++r) fn(k, r, k * r + tail[k + 1]);
  }
}

/// Raising and Cartan relations shared by the Weyl and Demazure suites.
void triangular_relations_on(RelationReport& rep, const FiniteModule& flat, int top,
                             const Weight& lambda, const RatVec& w) {
  for (Gen g : raising_ops(Borel::b2))
    for (int a = 0; a <= top; ++a)
      rep.check_zero(gen_name(g) + "(a) w = 0", fmt("a", {a}), flat.act(g, a, w));
  for (Gen h : {Gen::h1, Gen::h2}) {
    const Rat& eig = h == Gen::h1 ? lambda.w1 : lambda.w2;
    rep.check_zero(gen_name(h) + "(0) w = lambda(h) w", fmt("a", {0}),
                   vec_sub(flat.act(h, 0, w), vec_scaled(w, eig)));
    for (int a = 1; a <= top; ++a)
      rep.check_zero(gen_name(h) + "(a) w = 0", fmt("a", {a}), flat.act(h, a, w));
  }
}

Weight cyclic_weight(const FiniteModule& base) {
  const RatVec& c = base.cyclic();
  for (int i = 0; i < base.dim(); ++i)
    if (!sl12::is_zero(c[i])) return base.weights()[i];
  throw std::invalid_argument("module has a zero cyclic vector");
}

/// Exact blockwise rank of a family of weight-pure vectors in `base`.
BasisRank blocked_rank(const FiniteModule& base,
                       const std::vector<std::pair<Weight, RatVec>>& family) {
  auto classes = base.weight_classes();
  std::map<Weight, std::vector<RatVec>> buckets;
  for (const auto& [wt, vec] : family) {
    if (vec_is_zero(vec)) continue;
    auto it = classes.find(wt);
    if (it == classes.end())
      throw std::logic_error("monomial image lands outside every weight class");
    RatVec local(it->second.size(), Rat(0));
    for (size_t j = 0; j < it->second.size(); ++j) local[j] = vec[it->second[j]];
    for (int i = 0; i < base.dim(); ++i)
      if (!sl12::is_zero(vec[i]) && !(base.weights()[i] == wt))
        throw std::logic_error("monomial image is not weight-pure");
    buckets[wt].push_back(std::move(local));
  }
  BasisRank out;
  for (const auto& kv : buckets) {
    const auto& rows = kv.second;
    out.rank += rank_of(RatMatrix::from_rows(rows, static_cast<int>(rows.front().size())));
  }
  out.full = out.rank == base.dim();
  return out;
}

GradedRealization graded_weyl(const Rat& lambda1, long lambda2) {
  return fuse(default_fusion_spec(lambda1, Partition(lambda2, 1)));
}

}  // namespace

RelationReport::RelationReport(std::string suite, std::string case_name)
    : suite_(std::move(suite)), case_(std::move(case_name)) {}

bool RelationReport::all_passed() const { return failure_count() == 0; }

int RelationReport::failure_count() const {
  int n = 0;
  for (const auto& c : checks_) n += c.pass ? 0 : 1;
  return n;
}

const RelationCheck* RelationReport::first_failure() const {
  for (const auto& c : checks_)
    if (!c.pass) return &c;
  return nullptr;
}

void RelationReport::check_zero(const std::string& relation, const std::string& params,
                                const RatVec& residual) {
  RelationCheck c{relation, params, true, {}};
  if (!vec_is_zero(residual)) {
    c.pass = false;
    c.witness = residual;
  }
  checks_.push_back(std::move(c));
}

void RelationReport::check_that(const std::string& relation, const std::string& params,
                                bool ok, const Rat& delta) {
  RelationCheck c{relation, params, ok, {}};
  if (!ok) c.witness = {sl12::is_zero(delta) ? Rat(1) : delta};
  checks_.push_back(std::move(c));
}

void RelationReport::absorb(const RelationReport& other) {
  checks_.insert(checks_.end(), other.checks().begin(), other.checks().end());
}

RelationReport weyl_relations_on(const GradedRealization& G, const Weight& lambda,
                                 const RatVec& w, const std::string& case_name) {
  RelationReport rep("weyl", case_name);
  long l2 = long_of(lambda.w2, "lambda2");
  FiniteModule flat = G.flatten();
  triangular_relations_on(rep, flat, G.top_degree(), lambda, w);
  rep.check_zero("y2(0)^(l2+1) w = 0", fmt("l2", {l2}),
                 divided_apply(flat, Gen::y2, 0, l2 + 1, w));
  return rep;
}

RelationReport check_weyl_relations(const GradedRealization& G, const Weight& lambda) {
  return weyl_relations_on(G, lambda, G.cyclic_image(), "lambda=" + lambda.str());
}

RelationReport cv_relations_on(const GradedRealization& G, const Partition& xi,
                               const RatVec& w, const std::string& case_name) {
  RelationReport rep("cv-relations", case_name);
  if (xi.empty()) return rep;
  FiniteModule flat = G.flatten();
  long s_cap = std::max<long>(G.top_degree(), partition_weight(xi));
  for_reduced_windows(xi, [&](long k, long r, long bound) {
    for (long s = bound + 1; s <= s_cap; ++s) {
      rep.check_zero("y2(r,s) w = 0", fmt("k,r,s", {k, r, s}),
                     flat.act_element(y2rs(r, s), w));
      rep.check_zero("window sum_k w = 0", fmt("k,r,s", {k, r, s}),
                     flat.act_element(y2_window_sum(k, r, s), w));
    }
  });
  return rep;
}

RelationReport check_cv_relations(const GradedRealization& G, const CVDatum& datum) {
  if (!is_partition(datum.xi)) throw std::invalid_argument("xi is not a partition");
  std::string case_name =
      "lambda1=" + rat_str(datum.lambda1) + ",xi=" + partition_str(datum.xi);
  RelationReport rep("cv", case_name);
  rep.absorb(cv_relations_on(G, datum.xi, G.cyclic_image(), case_name));

  // On the filtered module the divided-power relation only holds modulo
  // lower filtration levels.
  const FiniteModule& base = G.base();
  long l2 = partition_weight(datum.xi);
  long s_cap = std::max<long>(G.top_degree(), l2);
  for_reduced_windows(datum.xi, [&](long k, long r, long bound) {
    for (long s = bound + 1; s <= s_cap && r + s <= l2; ++s) {
      RatVec u = divided_apply(base, Gen::y2, 0, r + s, base.cyclic());
      u = divided_apply(base, Gen::x2, 1, s, u);
      rep.check_that("x2(1)^(s) y2(0)^(r+s) v in F(s-1)", fmt("k,r,s", {k, r, s}),
                     G.in_level(u, static_cast<int>(s) - 1));
    }
  });
  return rep;
}

RelationReport check_garland_action(const GradedRealization& G, long lambda2) {
  RelationReport rep("garland-action", fmt("l2", {lambda2}));
  FiniteModule flat = G.flatten();
  const RatVec& v = G.cyclic_image();
  for (long r = 1; r < lambda2; ++r) {
    for (long s = 1; r + s <= lambda2; ++s) {
      RatVec lhs = divided_apply(flat, Gen::y2, 0, r + s, v);
      lhs = divided_apply(flat, Gen::x2, 1, s, lhs);
      RatVec rhs = flat.act_element(y2rs(r, s), v);
      if (s % 2) rhs = vec_scaled(rhs, Rat(-1));
      rep.check_zero("x2(1)^(s) y2(0)^(r+s) v = (-1)^s y2(r,s) v", fmt("r,s", {r, s}),
                     vec_sub(lhs, rhs));
    }
  }
  return rep;
}

RelationReport check_demazure(const GradedRealization& G, long ell, const Weight& lambda) {
  if (ell < 1) throw std::invalid_argument("ell must be positive");
  long l2 = long_of(lambda.w2, "lambda2");
  RelationReport rep("demazure", "ell=" + std::to_string(ell) + ",lambda=" + lambda.str());
  FiniteModule flat = G.flatten();
  const RatVec& v = G.cyclic_image();
  triangular_relations_on(rep, flat, G.top_degree(), lambda, v);
  for (int r = 0; r <= G.top_degree(); ++r) {
    long p = std::max(0L, l2 - ell * r) + 1;
    rep.check_zero("y2(r)^(p) v = 0", fmt("r,p", {r, p}),
                   divided_apply(flat, Gen::y2, r, p, v));
  }
  return rep;
}

RelationReport check_demazure_lowest_weight(const GradedRealization& G, long ell,
                                            const Weight& lambda) {
  if (ell < 1) throw std::invalid_argument("ell must be positive");
  long l2 = long_of(lambda.w2, "lambda2");
  RelationReport rep("demazure-lowest",
                     "ell=" + std::to_string(ell) + ",lambda=" + lambda.str());
  FiniteModule flat = G.flatten();
  int top = G.top_degree();
  RatVec vm = divided_apply(flat, Gen::y2, 0, l2, G.cyclic_image());
  rep.check_that("v- != 0", fmt("l2", {l2}), !vec_is_zero(vm));
  if (vec_is_zero(vm)) return rep;

  for (Gen g : lowering_ops(Borel::b2))
    for (int r = 0; r <= top; ++r)
      rep.check_zero(gen_name(g) + "(r) v- = 0", fmt("r", {r}), flat.act(g, r, vm));

  Weight mu(lambda.w1 - lambda.w2, -lambda.w2);
  for (Gen h : {Gen::h1, Gen::h2}) {
    const Rat& eig = h == Gen::h1 ? mu.w1 : mu.w2;
    rep.check_zero(gen_name(h) + "(0) v- = mu(h) v-", fmt("r", {0}),
                   vec_sub(flat.act(h, 0, vm), vec_scaled(vm, eig)));
    for (int r = 1; r <= top; ++r)
      rep.check_zero(gen_name(h) + "(r) v- = 0", fmt("r", {r}), flat.act(h, r, vm));
  }

  for (int r = 0; r <= top; ++r) {
    long p = std::max(0L, l2 - ell * r) + 1;
    rep.check_zero("x2(r)^(p) v- = 0", fmt("r,p", {r, p}),
                   divided_apply(flat, Gen::x2, r, p, vm));
  }

  Subspace closure = submodule_closure(flat, {vm}, top);
  rep.check_that("closure(v-) is the whole module",
                 fmt("dim,want", {closure.dim(), G.dim()}), closure.dim() == G.dim());

  // Climbing back up lands on a nonzero singular vector of weight lambda.
  RatVec back = divided_apply(flat, Gen::x2, 0, l2, vm);
  rep.check_that("x2(0)^(l2) v- != 0", fmt("l2", {l2}), !vec_is_zero(back));
  for (Gen g : raising_ops(Borel::b2))
    for (int a = 0; a <= top; ++a)
      rep.check_zero(gen_name(g) + "(a) x2(0)^(l2) v- = 0", fmt("a", {a}),
                     flat.act(g, a, back));
  for (Gen h : {Gen::h1, Gen::h2}) {
    const Rat& eig = h == Gen::h1 ? lambda.w1 : lambda.w2;
    rep.check_zero(gen_name(h) + "(0) x2(0)^(l2) v- = lambda(h) ...", fmt("a", {0}),
                   vec_sub(flat.act(h, 0, back), vec_scaled(back, eig)));
  }
  return rep;
}

RelationReport check_truncated(const GradedRealization& G, long N, const Weight& lambda) {
  if (N < 1) throw std::invalid_argument("N must be positive");
  RelationReport rep("truncated", "N=" + std::to_string(N) + ",lambda=" + lambda.str());
  rep.absorb(check_weyl_relations(G, lambda));
  for (int m = static_cast<int>(N); m <= G.top_degree(); ++m)
    for (Gen g : kAllGens)
      rep.check_that(gen_name(g) + "(m) = 0 on the graded module", fmt("m", {m}),
                     G.graded_action(g, m).is_zero_mat());
  return rep;
}

BasisRank check_basis_independence(const GradedRealization& G,
                                   const std::vector<WeylMonomial>& pool) {
  const FiniteModule& base = G.base();
  Weight w0 = cyclic_weight(base);
  std::vector<std::pair<Weight, RatVec>> family;
  family.reserve(pool.size());
  for (const auto& m : pool) {
    Word word;
    for (int a : m.a) word.push_back({Gen::y2, a});
    for (int b : m.b) word.push_back({Gen::x1, b});
    for (int c : m.c) word.push_back({Gen::y3, c});
    Weight wt = w0;
    for (const CGen& cg : word) wt = wt + weight_of(cg.g);
    family.emplace_back(wt, base.act_word(word, base.cyclic()));
  }
  return blocked_rank(base, family);
}

BasisRank check_basis_independence(const GradedRealization& G,
                                   const std::vector<CvBasisMonomial>& pool) {
  const FiniteModule& base = G.base();
  Weight w0 = cyclic_weight(base);
  std::vector<std::pair<Weight, RatVec>> family;
  family.reserve(pool.size());
  for (const auto& m : pool) {
    RatVec v = base.cyclic();
    Weight wt = w0;
    for (size_t t = m.c.size(); t-- > 0;) {
      v = base.act(Gen::y3, m.c[t], v);
      wt = wt + weight_of(Gen::y3);
    }
    for (size_t t = m.b.size(); t-- > 0;) {
      v = base.act(Gen::x1, m.b[t], v);
      wt = wt + weight_of(Gen::x1);
    }
    for (size_t t = m.i.size(); t-- > 0;) {
      v = divided_apply(base, Gen::y2, static_cast<int>(t), m.i[t], std::move(v));
      for (long rep = 0; rep < m.i[t]; ++rep) wt = wt + weight_of(Gen::y2);
    }
    family.emplace_back(wt, std::move(v));
  }
  return blocked_rank(base, family);
}

RelationReport check_embedding(const Weight& lambda, EmbeddingKind which) {
  long l2 = long_of(lambda.w2, "lambda2");
  bool y3_form = which == EmbeddingKind::y3_type;
  Weight big = y3_form ? Weight(lambda.w1 + 1, lambda.w2 + 1)
                       : Weight(lambda.w1, lambda.w2 + 1);
  std::string case_name = std::string(y3_form ? "y3" : "x1") +
                          "-type,lambda=" + lambda.str();
  RelationReport rep("embedding", case_name);

  GradedRealization G = graded_weyl(big.w1, l2 + 1);
  FiniteModule flat = G.flatten();
  RatVec vp = flat.act(y3_form ? Gen::y3 : Gen::x1, static_cast<int>(l2),
                       G.cyclic_image());
  rep.check_that("v' != 0", fmt("l2", {l2}), !vec_is_zero(vp));
  if (vec_is_zero(vp)) return rep;

  rep.absorb(weyl_relations_on(G, lambda, vp, case_name));
  long want = 1L << (2 * l2);
  Subspace closure = submodule_closure(flat, {vp}, G.top_degree());
  rep.check_that("dim closure(v') = 4^(l2)", fmt("dim,want", {closure.dim(), want}),
                 closure.dim() == want);
  return rep;
}

RelationReport check_gr_of_nongraded(const std::vector<PsiPoint>& psi) {
  if (psi.empty()) throw std::invalid_argument("psi needs at least one point");
  std::set<Rat> points;
  Weight lambda;
  for (const auto& p : psi) {
    if (!points.insert(p.z).second)
      throw std::invalid_argument("evaluation points must be pairwise distinct");
    if (!is_dominant(Borel::b2, p.mu) && !p.mu.is_zero())
      throw std::invalid_argument("each mu must be dominant");
    lambda = lambda + p.mu;
  }
  long l2 = long_of(lambda.w2, "lambda2");

  std::ostringstream cs;
  for (size_t i = 0; i < psi.size(); ++i)
    cs << (i ? ";" : "") << "mu=" << psi[i].mu.str() << "@z=" << rat_str(psi[i].z);
  RelationReport rep("gr-of-nongraded", cs.str());

  std::vector<FiniteModule> factors;
  for (const auto& p : psi) {
    if (p.mu.is_zero()) {
      factors.push_back(trivial_module());
      continue;
    }
    GradedRealization Gi = graded_weyl(p.mu.w1, long_of(p.mu.w2, "mu2"));
    factors.push_back(shift(Gi.flatten(), -p.z));
  }
  GradedRealization Gr = filtrate(tensor_product(factors));

  Int want = kac_dimension_product(Partition(l2, 1));
  rep.check_that("dim W(psi) = 4^(lambda2)", fmt("dim", {Gr.dim()}),
                 Int(Gr.dim()) == want);
  rep.absorb(weyl_relations_on(Gr, lambda, Gr.cyclic_image(), cs.str()));

  GradedRealization Gl = graded_weyl(lambda.w1, l2);
  rep.check_that("graded character matches the graded Weyl realization",
                 fmt("l2", {l2}), Gr.graded_character() == Gl.graded_character());
  return rep;
}

bool cv_reduction_hypothesis(const GradedRealization& G, const Partition& eta, int c,
                             Gen odd_gen) {
  if (odd_gen != Gen::y3 && odd_gen != Gen::x1)
    throw std::invalid_argument("the reduction step uses y3 or x1");
  if (c < 0 || c >= static_cast<int>(eta.size()))
    throw std::invalid_argument("box position out of range");
  FiniteModule flat = G.flatten();
  RatVec w = flat.act(odd_gen, c, G.cyclic_image());

  long e = static_cast<long>(eta.size()) - 1;
  std::vector<long> tail(eta.size() + 1, 0);
  for (long j = e; j >= 0; --j) tail[j] = tail[j + 1] + eta[j];
  for (long k = 0; k < c; ++k) {
    for (long r = std::max(eta[k + 1], 1L); r < eta[k]; ++r) {
      long s0 = k * r + tail[k + 1];
      RatVec u = divided_apply(flat, Gen::y2, 0, r + s0, w);
      u = divided_apply(flat, Gen::x2, 1, s0, u);
      if (!vec_is_zero(u)) return false;
    }
  }
  return true;
}

RelationReport check_cv_reduction(const GradedRealization& G, const Partition& eta, int c,
                                  Gen odd_gen) {
  if (odd_gen != Gen::y3 && odd_gen != Gen::x1)
    throw std::invalid_argument("the reduction step uses y3 or x1");
  Partition phi = remove_box(eta, c);
  RelationReport rep("cv-reduction", "eta=" + partition_str(eta) + ",c=" +
                                         std::to_string(c) + ",gen=" + gen_name(odd_gen));
  FiniteModule flat = G.flatten();
  RatVec w = flat.act(odd_gen, c, G.cyclic_image());
  rep.check_that(gen_name(odd_gen) + "(c) v != 0", fmt("c", {c}), !vec_is_zero(w));

  long s_cap = std::max<long>(G.top_degree(), partition_weight(phi));
  for_reduced_windows(phi, [&](long k, long r, long bound) {
    for (long s = bound + 1; s <= s_cap; ++s) {
      RatVec u = divided_apply(flat, Gen::y2, 0, r + s, w);
      u = divided_apply(flat, Gen::x2, 1, s, u);
      rep.check_zero("x2(1)^(s) y2(0)^(r+s) g(c) v = 0", fmt("k,r,s", {k, r, s}), u);
    }
  });
  return rep;
}

}  // namespace sl12

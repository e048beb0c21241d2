#include "sl12/fusion.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace sl12 {

namespace {

struct ClassKey {
  Weight w;
  int parity;

  bool operator==(const ClassKey& o) const { return w == o.w && parity == o.parity; }
  bool operator<(const ClassKey& o) const {
    if (!(w == o.w)) return w < o.w;
    return parity < o.parity;
  }
};

ClassKey shifted(const ClassKey& k, Gen g) {
  return {k.w + weight_of(g), k.parity ^ parity_of(g)};
}

}  // namespace

struct GradedCore {
  FiniteModule base;
  int top = 0;

  struct Cls {
    std::vector<int> idx;  // global base ids, ascending
    // canonical graded rows in local coordinates, level-ascending; each row
    // is the rref row of F(level) with a pivot new over F(level - 1)
    RatMatrix rows;
    std::vector<int> level, pivot, gidx;
  };
  std::map<ClassKey, Cls> cls;
  std::vector<std::pair<ClassKey, int>> g2c;  // base id -> (class, local)

  std::vector<std::pair<ClassKey, int>> gvec;  // graded id -> (class, row)
  std::vector<int> gdims;
  std::vector<RatVec> lifts;  // per graded id, base coordinates
  RatVec cyclic_coords;

  // source-class blocks of base.action(g, d); includes the consistency check
  // that every entry lands in the expected target class
  mutable std::map<std::pair<int, int>, std::map<ClassKey, SparseMat>> blocks;
  mutable std::map<std::pair<int, int>, SparseMat> gact;

  const std::map<ClassKey, SparseMat>& blocks_of(Gen g, int d) const {
    auto key = std::make_pair(static_cast<int>(g), d);
    auto it = blocks.find(key);
    if (it != blocks.end()) return it->second;
    std::map<ClassKey, SparseMat> bs;
    for (const auto& e : base.action(g, d).entries()) {
      const auto& [kc, lc] = g2c[e.c];
      const auto& [kr, lr] = g2c[e.r];
      if (!(kr == shifted(kc, g)))
        throw std::logic_error("filtrate: action entry leaves the stored weight grading");
      auto [bit, fresh] = bs.try_emplace(kc, static_cast<int>(cls.at(kr).idx.size()),
                                         static_cast<int>(cls.at(kc).idx.size()));
      (void)fresh;
      bit->second.add(lr, lc, e.v);
    }
    for (auto& [k, b] : bs) b.finalize();
    return blocks.emplace(key, std::move(bs)).first->second;
  }

  // coordinates of a local class vector over the graded rows; rows are
  // triangular against earlier pivots, so one sweep suffices
  RatVec express(const Cls& c, RatVec x) const {
    RatVec coef(c.rows.rows(), Rat(0));
    for (int r = 0; r < c.rows.rows(); ++r) {
      const Rat& v = x[c.pivot[r]];
      if (sl12::is_zero(v)) continue;
      coef[r] = v;
      for (int j = 0; j < c.rows.cols(); ++j)
        if (!sl12::is_zero(c.rows.at(r, j))) x[j] -= coef[r] * c.rows.at(r, j);
    }
    if (!vec_is_zero(x))
      throw std::logic_error("filtrate: vector escapes the graded basis");
    return coef;
  }

  std::map<ClassKey, RatVec> split(const RatVec& v) const {
    std::map<ClassKey, RatVec> parts;
    for (int i = 0; i < static_cast<int>(v.size()); ++i) {
      if (sl12::is_zero(v[i])) continue;
      const auto& [k, l] = g2c[i];
      auto [it, fresh] = parts.try_emplace(k, cls.at(k).idx.size(), Rat(0));
      (void)fresh;
      it->second[l] = v[i];
    }
    return parts;
  }

  const SparseMat& graded_action_mat(Gen g, int d) const {
    auto key = std::make_pair(static_cast<int>(g), d);
    auto it = gact.find(key);
    if (it != gact.end()) return it->second;

    const int n = static_cast<int>(gvec.size());
    SparseMat m(n, n);
    if (d <= top) {
      const auto& bs = blocks_of(g, d);
      for (int i = 0; i < n; ++i) {
        const auto& [k, row] = gvec[i];
        const Cls& src = cls.at(k);
        auto bit = bs.find(k);
        if (bit == bs.end()) continue;
        RatVec img = bit->second.apply(src.rows.row(row));
        if (vec_is_zero(img)) continue;
        const ClassKey tk = shifted(k, g);
        const Cls& tgt = cls.at(tk);
        RatVec coef = express(tgt, std::move(img));
        const int want = src.level[row] + d;
        for (int r = 0; r < static_cast<int>(coef.size()); ++r) {
          if (sl12::is_zero(coef[r])) continue;
          if (tgt.level[r] > want)
            throw std::logic_error("filtrate: action escapes its filtration level");
          if (tgt.level[r] == want) m.add(tgt.gidx[r], i, coef[r]);
        }
      }
    }
    m.finalize();
    return gact.emplace(key, std::move(m)).first->second;
  }
};

const FiniteModule& GradedRealization::base() const { return core_->base; }
int GradedRealization::dim() const { return static_cast<int>(core_->gvec.size()); }
int GradedRealization::top_degree() const { return core_->top; }
const std::vector<int>& GradedRealization::graded_dims() const { return core_->gdims; }

int GradedRealization::level_of(int gi) const {
  const auto& [k, r] = core_->gvec[gi];
  return core_->cls.at(k).level[r];
}

const Weight& GradedRealization::weight_of(int gi) const { return core_->gvec[gi].first.w; }
int GradedRealization::parity_of(int gi) const { return core_->gvec[gi].first.parity; }
const RatVec& GradedRealization::lift(int gi) const { return core_->lifts[gi]; }
const RatVec& GradedRealization::cyclic_image() const { return core_->cyclic_coords; }

const SparseMat& GradedRealization::graded_action(Gen g, int d) const {
  return core_->graded_action_mat(g, d);
}

FiniteModule GradedRealization::flatten() const {
  auto core = core_;
  std::vector<Weight> ws;
  std::vector<int> ps;
  for (const auto& [k, r] : core->gvec) {
    (void)r;
    ws.push_back(k.w);
    ps.push_back(k.parity);
  }
  return FiniteModule(std::move(ws), std::move(ps), core->cyclic_coords, core->top,
                      [core](Gen g, int d) { return core->graded_action_mat(g, d); });
}

GradedCharacter GradedRealization::graded_character() const {
  GradedCharacter out;
  for (int i = 0; i < dim(); ++i) ++out[{level_of(i), weight_of(i)}];
  return out;
}

bool GradedRealization::in_level(const RatVec& base_vec, int n) const {
  if (n < 0) return vec_is_zero(base_vec);
  for (const auto& [k, loc] : core_->split(base_vec)) {
    const auto& c = core_->cls.at(k);
    RatVec coef = core_->express(c, loc);
    for (int r = 0; r < static_cast<int>(coef.size()); ++r)
      if (!sl12::is_zero(coef[r]) && c.level[r] > n) return false;
  }
  return true;
}

GradedRealization filtrate(const FiniteModule& m) {
  if (m.dim() == 0 || vec_is_zero(m.cyclic()))
    throw std::invalid_argument("filtrate: module has no cyclic vector");

  auto core = std::make_shared<GradedCore>();
  core->base = m;
  const int n = m.dim();

  core->g2c.resize(n, {ClassKey{}, 0});
  for (int i = 0; i < n; ++i) {
    ClassKey k{m.weights()[i], m.parities()[i]};
    auto& c = core->cls[k];
    core->g2c[i] = {k, static_cast<int>(c.idx.size())};
    c.idx.push_back(i);
  }
  for (auto& [k, c] : core->cls)
    c.rows = RatMatrix(0, static_cast<int>(c.idx.size()));

  std::map<ClassKey, Subspace> F;
  for (const auto& [k, c] : core->cls) F.emplace(k, Subspace(static_cast<int>(c.idx.size())));

  // vectors accepted into F at each level, per class; level n seeds come from
  // positive-degree operators applied to exactly the level n-a increments
  std::vector<std::map<ClassKey, std::vector<RatVec>>> added;
  std::map<ClassKey, std::set<int>> pivots_seen;
  int total = 0;

  auto grow = [&](int lvl, const ClassKey& k, const RatVec& v,
                  std::vector<std::pair<ClassKey, RatVec>>& work) {
    if (vec_is_zero(v)) return;
    if (!F.at(k).grow(v)) return;
    added[lvl][k].push_back(v);
    work.emplace_back(k, v);
    ++total;
  };

  auto deg0_close = [&](int lvl, std::vector<std::pair<ClassKey, RatVec>>& work) {
    while (!work.empty()) {
      auto [k, v] = std::move(work.back());
      work.pop_back();
      for (Gen g : kAllGens) {
        const auto& bs = core->blocks_of(g, 0);
        auto it = bs.find(k);
        if (it == bs.end()) continue;
        grow(lvl, shifted(k, g), it->second.apply(v), work);
      }
    }
  };

  auto snapshot = [&](int lvl) {
    for (auto& [k, S] : F) {
      auto& seen = pivots_seen[k];
      auto& c = core->cls.at(k);
      std::vector<int> fresh;
      for (int r = 0; r < S.dim(); ++r)
        if (seen.insert(S.pivots()[r]).second) fresh.push_back(r);
      if (fresh.empty()) continue;
      RatMatrix next(c.rows.rows() + static_cast<int>(fresh.size()), c.rows.cols());
      for (int i = 0; i < c.rows.rows(); ++i) next.set_row(i, c.rows.row(i));
      for (std::size_t i = 0; i < fresh.size(); ++i) {
        next.set_row(c.rows.rows() + static_cast<int>(i), S.basis().row(fresh[i]));
        c.level.push_back(lvl);
        c.pivot.push_back(S.pivots()[fresh[i]]);
      }
      c.rows = std::move(next);
    }
  };

  const int amax = std::max(0, m.degree_cap_hint());
  added.emplace_back();
  {
    std::vector<std::pair<ClassKey, RatVec>> work;
    for (const auto& [k, v] : core->split(m.cyclic())) grow(0, k, v, work);
    deg0_close(0, work);
    snapshot(0);
  }
  core->top = 0;

  for (int lvl = 1; total < n; ++lvl) {
    if (lvl > n)
      throw std::logic_error("filtrate: filtration failed to terminate");
    added.emplace_back();
    std::vector<std::pair<ClassKey, RatVec>> work;
    for (int a = 1; a <= std::min(amax, lvl); ++a) {
      for (const auto& [k, vs] : added[lvl - a]) {
        for (Gen g : kAllGens) {
          const auto& bs = core->blocks_of(g, a);
          auto it = bs.find(k);
          if (it == bs.end()) continue;
          for (const RatVec& v : vs) grow(lvl, shifted(k, g), it->second.apply(v), work);
        }
      }
    }
    deg0_close(lvl, work);
    if (added[lvl].empty())
      throw std::runtime_error("filtrate: filtration stalled below the full module "
                               "(the cyclic vector does not generate)");
    snapshot(lvl);
    core->top = lvl;
  }

  // global graded order: (level, class, pivot), which is also triangular
  // within each class
  std::vector<std::tuple<int, ClassKey, int, int>> order;  // level, class, pivot, row
  for (const auto& [k, c] : core->cls)
    for (int r = 0; r < static_cast<int>(c.level.size()); ++r)
      order.emplace_back(c.level[r], k, c.pivot[r], r);
  std::sort(order.begin(), order.end());

  core->gdims.assign(core->top + 1, 0);
  for (const auto& [lvl, k, pv, r] : order) {
    (void)pv;
    auto& c = core->cls.at(k);
    c.gidx.resize(c.level.size(), -1);
    c.gidx[r] = static_cast<int>(core->gvec.size());
    core->gvec.emplace_back(k, r);
    ++core->gdims[lvl];

    RatVec lift(n, Rat(0));
    for (std::size_t j = 0; j < c.idx.size(); ++j) lift[c.idx[j]] = c.rows.at(r, static_cast<int>(j));
    core->lifts.push_back(std::move(lift));
  }

  core->cyclic_coords.assign(core->gvec.size(), Rat(0));
  for (const auto& [k, loc] : core->split(m.cyclic())) {
    const auto& c = core->cls.at(k);
    RatVec coef = core->express(c, loc);
    for (int r = 0; r < static_cast<int>(coef.size()); ++r)
      if (!sl12::is_zero(coef[r])) core->cyclic_coords[c.gidx[r]] = coef[r];
  }

  GradedRealization out;
  out.core_ = std::move(core);
  return out;
}

FusionSpec default_fusion_spec(const Rat& lambda1, const Partition& xi) {
  if (!is_partition(xi))
    throw std::invalid_argument("default_fusion_spec: not a partition");
  FusionSpec spec;
  for (std::size_t i = 0; i < xi.size(); ++i)
    spec.factors.push_back({i == 0 ? lambda1 : Rat(0), xi[i], Rat(static_cast<long>(i))});
  return spec;
}

FiniteModule fused_tensor(const FusionSpec& spec) {
  if (spec.factors.empty()) return trivial_module();
  std::vector<FiniteModule> factors;
  for (std::size_t i = 0; i < spec.factors.size(); ++i) {
    const auto& f = spec.factors[i];
    if (f.size < 1) throw std::invalid_argument("fused_tensor: factor size must be >= 1");
    for (std::size_t j = 0; j < i; ++j)
      if (spec.factors[j].z == f.z)
        throw std::invalid_argument("fused_tensor: evaluation points must be distinct");
    factors.push_back(evaluation(kac_module(Borel::b2, Weight{f.kappa, Rat(f.size)}), f.z));
  }
  return tensor_product(factors);
}

GradedRealization fuse(const FusionSpec& spec) { return filtrate(fused_tensor(spec)); }

}  // namespace sl12

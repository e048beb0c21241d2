#include "sl12/verify.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

#include "sl12/characters.hpp"
#include "sl12/fusion.hpp"
#include "sl12/modules.hpp"
#include "sl12/partitions.hpp"
#include "sl12/pbw.hpp"
#include "sl12/presentations.hpp"
#include "sl12/superalgebra.hpp"

namespace sl12 {

namespace {

struct Tally {
  CriterionResult res;

  explicit Tally(std::string name) {
    res.name = std::move(name);
    res.pass = true;
  }

  void check(bool ok, const std::string& what) {
    ++res.cases;
    if (ok) return;
    res.pass = false;
    if (res.detail.empty()) res.detail = what;
  }

  void absorb(const RelationReport& rep) {
    res.cases += static_cast<long>(rep.checks().size());
    if (rep.all_passed()) return;
    res.pass = false;
    if (res.detail.empty()) {
      const RelationCheck* f = rep.first_failure();
      res.detail =
          rep.suite() + "/" + rep.case_name() + ": " + f->relation + " [" + f->params + "]";
    }
  }

  CriterionResult done(std::string summary) {
    res.summary = std::move(summary);
    return std::move(res);
  }
};

Int ipow(long base, long exp) {
  Int r = 1;
  for (long i = 0; i < exp; ++i) r *= base;
  return r;
}

std::string part_str(const Partition& xi) {
  std::string s = "(";
  for (std::size_t i = 0; i < xi.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(xi[i]);
  }
  return s + ")";
}

std::string degs_str(const std::vector<long>& degs) {
  std::string s = "degs=(";
  for (std::size_t i = 0; i < degs.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(degs[i]);
  }
  return s + ")";
}

std::vector<Weight> sorted_weights(std::vector<Weight> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Fused realizations are shared across criteria; the key is the default
// spec's data (lambda1 on factor 0, evaluation points 0, 1, 2, ...).
const GradedRealization& fused_default(const Rat& lambda1, const Partition& xi) {
  static std::map<std::pair<Rat, Partition>, GradedRealization> cache;
  auto key = std::make_pair(lambda1, xi);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, fuse(default_fusion_spec(lambda1, xi))).first;
  return it->second;
}

std::vector<Rat> lambda1_grid(long l2) { return {Rat(0), Rat(1), Rat(7) / 3, Rat(l2), Rat(-2)}; }

CriterionResult run_algebra(const VerifyBounds&) {
  Tally t("algebra-structure");
  for (Gen a : kAllGens)
    for (Gen b : kAllGens)
      for (Gen c : kAllGens)
        t.check(combo_is_zero(jacobi_residual(a, b, c)),
                "jacobi(" + gen_name(a) + "," + gen_name(b) + "," + gen_name(c) + ") != 0");
  for (Gen a : kAllGens)
    for (Gen b : kAllGens) {
      GenCombo lhs = bracket(a, b);
      GenCombo rhs = decompose_matrix(
          matrix_super_bracket(gen_matrix(a), gen_matrix(b), parity_of(a), parity_of(b)));
      t.check(combo_is_zero(combo_add(lhs, combo_scaled(rhs, Rat(-1)))),
              "bracket [" + gen_name(a) + "," + gen_name(b) + "] != matrix super-commutator");
    }
  return t.done("512 Jacobi triples and 64 bracket pairs against the 3x3 realization");
}

CriterionResult run_kac_dims(const VerifyBounds& b) {
  Tally t("kac-dimensions");
  const long top = std::min<long>(6, b.max_lambda2);
  for (long l2 = 1; l2 <= top; ++l2)
    for (const Rat& l1 : lambda1_grid(l2)) {
      Weight hw{l1, Rat(l2)};
      int d = kac_module(Borel::b2, hw).dim();
      t.check(d == 4 * l2, "dim K" + hw.str() + " = " + std::to_string(d) + ", expected " +
                               std::to_string(4 * l2));
    }
  return t.done("dim K(lambda) = 4 lambda2 for lambda2 <= " + std::to_string(top) +
                ", five lambda1 seats each");
}

CriterionResult run_typicality(const VerifyBounds& b) {
  Tally t("kac-typicality");
  const long top = std::min<long>(4, b.max_lambda2);
  for (long l2 = 1; l2 <= top; ++l2)
    for (const Rat& l1 : lambda1_grid(l2)) {
      Weight hw{l1, Rat(l2)};
      bool expect = !sl12::is_zero(l1) && l1 != Rat(l2);
      bool irr = is_irreducible(kac_module(Borel::b2, hw), Borel::b2);
      t.check(irr == expect,
              "K" + hw.str() + (irr ? " has no" : " has a") + " proper singular vector");
      t.check(is_typical(hw) == expect, "is_typical" + hw.str() + " disagrees");
    }
  return t.done("singular-vector irreducibility vs lambda1 != 0, lambda2 for lambda2 <= " +
                std::to_string(top));
}

CriterionResult run_g0_blocks(const VerifyBounds& b) {
  Tally t("kac-even-blocks");
  const long top = std::min<long>(4, b.max_lambda2);
  for (long l2 = 0; l2 <= top; ++l2)
    for (const Rat& l1 : lambda1_grid(l2)) {
      Weight hw{l1, Rat(l2)};
      {
        std::vector<Weight> want = {hw, {hw.w1 - 1, hw.w2}, {hw.w1, hw.w2 + 1}};
        if (l2 > 0) want.push_back({hw.w1 - 1, hw.w2 - 1});
        t.check(g0_highest_weights(kac_module(Borel::b1, hw)) == sorted_weights(want),
                "even-part blocks of the first induced module at " + hw.str());
      }
      {
        std::vector<Weight> want = {hw, {hw.w1 + 1, hw.w2}, {hw.w1 + 1, hw.w2 + 1}};
        if (l2 > 0) want.push_back({hw.w1, hw.w2 - 1});
        t.check(g0_highest_weights(kac_module(Borel::b3, hw)) == sorted_weights(want),
                "even-part blocks of the second induced module at " + hw.str());
      }
      if (l2 >= 1) {
        std::vector<Weight> want = {{hw.w1, hw.w2 - 1}, {hw.w1 - 1, hw.w2 - 1}, hw};
        if (l2 >= 2) want.push_back({hw.w1 - 1, hw.w2 - 2});
        t.check(g0_highest_weights(kac_module(Borel::b2, hw)) == sorted_weights(want),
                "even-part blocks of K" + hw.str());
      }
    }
  t.check(g0_highest_weights(kac_module(Borel::b2, Weight{})) == std::vector<Weight>{Weight{}},
          "K(0) is not the trivial even-part module");
  return t.done("gl(2)-decompositions over all three Borels, lambda2 <= " + std::to_string(top) +
                ", with the boundary drops");
}

CriterionResult run_weyl_fusion(const VerifyBounds& b) {
  Tally t("weyl-fusion");
  const Rat l1(2);
  const long top = std::min<long>(b.extended ? 5 : 4, b.max_lambda2);
  for (long l2 = 1; l2 <= top; ++l2) {
    const std::string tag = "lambda2=" + std::to_string(l2);
    const GradedRealization& G = fused_default(l1, Partition(l2, 1));
    const long want = 1L << (2 * l2);
    t.check(G.dim() == want, "fused dim != 4^lambda2 at " + tag);
    t.absorb(check_weyl_relations(G, Weight{l1, Rat(l2)}));
    auto pool = weyl_monomial_pool(l2);
    t.check(static_cast<long>(pool.size()) == want, "monomial pool cardinality at " + tag);
    BasisRank br = check_basis_independence(G, pool);
    t.check(br.full && br.rank == want,
            "monomial pool rank " + std::to_string(br.rank) + " at " + tag);
    t.check(char_of(G.base()) == weyl_char_formula(l1, l2), "character formula at " + tag);
  }
  return t.done("dim, relations, spanning monomials and character for lambda2 <= " +
                std::to_string(top));
}

CriterionResult run_fusion_parameters(const VerifyBounds& b) {
  Tally t("fusion-parameters");
  const Rat l1(2);
  const long l2 = std::min<long>(3, std::max<long>(1, b.max_lambda2));
  for (const Partition& xi : partitions_of(l2)) {
    const long k = static_cast<long>(xi.size());
    FusionSpec odd_pts, frac_pts;
    Rat rest_odd(0), rest_frac(0);
    for (long i = 1; i < k; ++i) {
      rest_odd += Rat(1) / 2;
      rest_frac += Rat(i + 1);
    }
    for (long i = 0; i < k; ++i) {
      const Rat kappa_odd = i == 0 ? Rat(l1 - rest_odd) : Rat(Rat(1) / 2);
      const Rat kappa_frac = i == 0 ? Rat(l1 - rest_frac) : Rat(i + 1);
      odd_pts.factors.push_back({kappa_odd, xi[i], Rat(2 * i + 1)});
      frac_pts.factors.push_back({kappa_frac, xi[i], Rat(Rat(i) - Rat(1) / 3)});
    }
    const GradedRealization& ref = fused_default(l1, xi);
    int variant = 0;
    for (const FusionSpec& spec : {odd_pts, frac_pts}) {
      ++variant;
      GradedRealization g = fuse(spec);
      const std::string tag = "xi=" + part_str(xi) + ", assignment " + std::to_string(variant);
      t.check(g.graded_dims() == ref.graded_dims(), "graded dimension vector differs at " + tag);
      t.check(g.graded_character() == ref.graded_character(), "graded character differs at " + tag);
    }
  }
  return t.done("three (z, kappa) assignments per partition of " + std::to_string(l2) +
                " share graded data");
}

CriterionResult run_cv_grid(const VerifyBounds& b) {
  Tally t("cv-modules");
  const long top = std::min<long>(5, b.max_n);
  for (long n = 1; n <= top; ++n)
    for (const Partition& xi : partitions_of(n))
      for (const Rat& l1 : {Rat(0), Rat(2)}) {
        const std::string tag = "xi=" + part_str(xi) + ", lambda1=" + rat_str(l1);
        const GradedRealization& G = fused_default(l1, xi);
        t.check(Int(G.dim()) == kac_dimension_product(xi), "fused dim at " + tag);
        t.absorb(check_weyl_relations(G, Weight{l1, Rat(n)}));
        t.absorb(check_cv_relations(G, CVDatum{l1, xi}));
        auto pool = cv_basis_monomials(xi);
        t.check(Int(static_cast<long>(pool.size())) == kac_dimension_product(xi),
                "basis family cardinality at " + tag);
        BasisRank br = check_basis_independence(G, pool);
        t.check(br.full && br.rank == G.dim(),
                "basis family rank " + std::to_string(br.rank) + " at " + tag);
        t.check(char_of(G.base()) == cv_character_formula(l1, xi), "character formula at " + tag);
      }
  return t.done("dim, both relation forms, basis family and character for all partitions of n <= " +
                std::to_string(top) + ", two lambda1 seats");
}

CriterionResult run_partition_identities(const VerifyBounds& b) {
  Tally t("partition-identities");
  const long top = std::min<long>(8, b.max_comb_n);
  for (long n = 0; n <= top; ++n)
    for (const Partition& xi : partitions_of(n))
      t.check(removal_dimension_sum(xi) == kac_dimension_product(xi),
              "two-round removal count at xi=" + part_str(xi));
  const long split_top = std::min<long>(7, b.max_comb_n);
  for (long n = 0; n <= split_top; ++n)
    for (const Partition& xi : partitions_of(n))
      for (int s = 1; s < static_cast<int>(xi.size()); ++s)
        if (xi[s - 1] > xi[s])
          t.check(removal_split_check(xi, s),
                  "head/tail split at xi=" + part_str(xi) + ", t=" + std::to_string(s));
  return t.done("removal counting identity for n <= " + std::to_string(top) +
                " and descent splitting for n <= " + std::to_string(split_top));
}

CriterionResult run_comm_identities(const VerifyBounds& b) {
  Tally t("commutation-identities");
  auto sweep_strings = [&](CommId id, Gen h, const std::string& label) {
    for (int len = 1; len <= 3; ++len) {
      std::vector<long> idx(len, 0);
      while (true) {
        for (long lead = 0; lead <= 3; ++lead) {
          std::vector<long> degs{lead};
          degs.insert(degs.end(), idx.begin(), idx.end());
          t.check(verify_comm_identity(id, degs, h).ok, label + " at " + degs_str(degs));
        }
        int p = len - 1;
        while (p >= 0 && idx[p] == 3) idx[p--] = 0;
        if (p < 0) break;
        ++idx[p];
      }
    }
  };
  sweep_strings(CommId::rel1, Gen::h1, "x2(a) past y3 letters");
  sweep_strings(CommId::rel2, Gen::h1, "h1(a) past y3 letters");
  sweep_strings(CommId::rel2, Gen::h2, "h2(a) past y3 letters");
  sweep_strings(CommId::rel3, Gen::h1, "x2(a) past x1 letters");
  sweep_strings(CommId::rel4, Gen::h1, "h1(a) past x1 letters");
  sweep_strings(CommId::rel4, Gen::h2, "h2(a) past x1 letters");
  sweep_strings(CommId::rel5, Gen::h1, "x3(b) past y3 letters");
  sweep_strings(CommId::rel6, Gen::h1, "y1(c) past y2 letters");
  sweep_strings(CommId::rel7, Gen::h1, "x3(b) past y2 letters");
  for (long lead = 0; lead <= 3; ++lead)
    for (long r = 0; r <= 3; ++r)
      for (long s = 0; s <= 3; ++s) {
        t.check(verify_comm_identity(CommId::rel8, {lead, r, s}).ok,
                "y1(c) past the y2(r,s) sum at " + degs_str({lead, r, s}));
        t.check(verify_comm_identity(CommId::rel9, {lead, r, s}).ok,
                "x3(b) past the y2(r,s) sum at " + degs_str({lead, r, s}));
      }
  const Rat l1(2);
  const long top = std::min<long>(4, b.max_lambda2);
  for (long l2 = 1; l2 <= top; ++l2)
    t.absorb(check_garland_action(fused_default(l1, Partition(l2, 1)), l2));
  return t.done("nine rewriting identities, degrees <= 3, and the divided-power action on Weyl "
                "realizations for lambda2 <= " +
                std::to_string(top));
}

CriterionResult run_demazure(const VerifyBounds& b) {
  Tally t("demazure-modules");
  const Rat l1(2);
  const long top = std::min<long>(6, b.max_lambda2);
  for (long ell = 1; ell <= 3; ++ell)
    for (long l2 = 1; l2 <= top; ++l2) {
      const Partition xi = demazure_partition(ell, l2);
      const long q = (l2 + ell - 1) / ell, m = l2 - (q - 1) * ell;
      const Int want = ipow(4, q) * ipow(ell, q - 1) * m;
      const std::string tag = "ell=" + std::to_string(ell) + ", lambda2=" + std::to_string(l2);
      FiniteModule M = fused_tensor(default_fusion_spec(l1, xi));
      t.check(Int(M.dim()) == want, "fused dim vs 4^q ell^{q-1} m at " + tag);
      t.check(kac_dimension_product(xi) == want, "partition dimension product at " + tag);
      t.check(char_of(M) == demazure_char_formula(ell, l1, l2), "character formula at " + tag);
      if (ell == 1)
        t.check(demazure_char_formula(1, l1, l2) == weyl_char_formula(l1, l2),
                "ell=1 character is not the Weyl character at " + tag);
    }
  const long rel_top = std::min<long>(4, b.max_lambda2);
  for (long ell = 1; ell <= 2; ++ell)
    for (long l2 = 1; l2 <= rel_top; ++l2) {
      const GradedRealization& G = fused_default(l1, demazure_partition(ell, l2));
      t.absorb(check_demazure(G, ell, Weight{l1, Rat(l2)}));
      t.absorb(check_demazure_lowest_weight(G, ell, Weight{l1, Rat(l2)}));
    }
  return t.done("dims and characters for ell <= 3, lambda2 <= " + std::to_string(top) +
                "; relation and lowest-weight suites for ell <= 2, lambda2 <= " +
                std::to_string(rel_top));
}

CriterionResult run_truncated(const VerifyBounds& b) {
  Tally t("truncated-weyl");
  const Rat l1(2);
  const long top = std::min<long>(6, b.max_lambda2);
  for (long N = 1; N <= 4; ++N) {
    for (long l2 = N + 1; l2 <= top; ++l2) {
      const Partition xi = truncated_partition(N, l2);
      const long q = l2 / N, m = l2 % N;
      const Int want = ipow(4, N) * ipow(q, N - m) * ipow(q + 1, m);
      const std::string tag = "N=" + std::to_string(N) + ", lambda2=" + std::to_string(l2);
      FiniteModule M = fused_tensor(default_fusion_spec(l1, xi));
      t.check(Int(M.dim()) == want, "fused dim vs 4^N q^{N-m} (q+1)^m at " + tag);
      t.check(char_of(M) == truncated_char_formula(N, l1, l2), "character formula at " + tag);
      t.absorb(check_truncated(fused_default(l1, xi), N, Weight{l1, Rat(l2)}));
    }
    for (long l2 = 1; l2 <= std::min(N, std::min<long>(4, top)); ++l2) {
      const std::string tag = "N=" + std::to_string(N) + ", lambda2=" + std::to_string(l2);
      t.check(truncated_partition(N, l2) == Partition(l2, 1),
              "vacuous truncation partition at " + tag);
      bool rejected = false;
      try {
        truncated_char_formula(N, l1, l2);
      } catch (const std::invalid_argument&) {
        rejected = true;
      }
      t.check(rejected, "character formula accepts the vacuous range at " + tag);
      t.absorb(check_truncated(fused_default(l1, Partition(l2, 1)), N, Weight{l1, Rat(l2)}));
    }
  }
  return t.done("dims, characters and annihilation for N <= 4, lambda2 <= " + std::to_string(top) +
                ", plus the vacuous range N >= lambda2");
}

CriterionResult run_embeddings(const VerifyBounds& b) {
  Tally t("weyl-embeddings");
  const long top = std::min<long>(3, b.max_lambda2);
  for (const Rat& l1 : {Rat(0), Rat(2)})
    for (long l2 = 1; l2 <= top; ++l2)
      for (EmbeddingKind kind : {EmbeddingKind::y3_type, EmbeddingKind::x1_type})
        t.absorb(check_embedding(Weight{l1, Rat(l2)}, kind));
  for (EmbeddingKind kind : {EmbeddingKind::y3_type, EmbeddingKind::x1_type})
    t.absorb(check_embedding(Weight{}, kind));
  return t.done("both one-box embeddings for lambda2 <= " + std::to_string(top) +
                ", two lambda1 seats, plus the trivial seat");
}

CriterionResult run_nongraded(const VerifyBounds& b) {
  Tally t("nongraded-weyl");
  const long top = std::min<long>(3, b.max_lambda2);
  if (top >= 2) {
    t.absorb(check_gr_of_nongraded(
        {{Weight{Rat(1), Rat(1)}, Rat(0)}, {Weight{Rat(1), Rat(1)}, Rat(1)}}));
    t.absorb(check_gr_of_nongraded(
        {{Weight{Rat(3) / 2, Rat(1)}, Rat(0)}, {Weight{Rat(1) / 2, Rat(1)}, Rat(-1) / 2}}));
  }
  if (top >= 3) {
    t.absorb(check_gr_of_nongraded({{Weight{Rat(1), Rat(1)}, Rat(0)},
                                    {Weight{Rat(1), Rat(1)}, Rat(1)},
                                    {Weight{Rat(0), Rat(1)}, Rat(2)}}));
    t.absorb(check_gr_of_nongraded({{Weight{Rat(2), Rat(1)}, Rat(1) / 2},
                                    {Weight{Rat(-1), Rat(1)}, Rat(-3)},
                                    {Weight{Rat(1), Rat(1)}, Rat(4)}}));
  }
  return t.done("two- and three-point modules at integral and fractional points");
}

}  // namespace

const std::vector<Criterion>& all_criteria() {
  static const std::vector<Criterion> table = {
      {"algebra-structure", "algebra", run_algebra},
      {"kac-dimensions", "kac", run_kac_dims},
      {"kac-typicality", "kac", run_typicality},
      {"kac-even-blocks", "kac", run_g0_blocks},
      {"weyl-fusion", "weyl", run_weyl_fusion},
      {"fusion-parameters", "cv", run_fusion_parameters},
      {"cv-modules", "cv", run_cv_grid},
      {"partition-identities", "combinatorics", run_partition_identities},
      {"commutation-identities", "comm", run_comm_identities},
      {"demazure-modules", "demazure", run_demazure},
      {"truncated-weyl", "truncated", run_truncated},
      {"weyl-embeddings", "weyl", run_embeddings},
      {"nongraded-weyl", "weyl", run_nongraded},
  };
  return table;
}

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const Criterion& c : all_criteria())
    if (std::find(out.begin(), out.end(), c.suite) == out.end()) out.push_back(c.suite);
  return out;
}

std::vector<CriterionResult> run_suite(const std::string& suite, const VerifyBounds& bounds) {
  std::vector<CriterionResult> out;
  bool hit = false;
  for (const Criterion& c : all_criteria()) {
    if (suite != "all" && c.suite != suite) continue;
    hit = true;
    out.push_back(c.run(bounds));
    out.back().suite = c.suite;
  }
  if (!hit) throw std::invalid_argument("run_suite: unknown suite '" + suite + "'");
  return out;
}

}  // namespace sl12

// Command-line surface: build the module realizations, print dimensions,
// graded data and characters, run the relation suites and the verification
// battery. Exit codes: 0 success, 1 a relation or criterion failed,
// 2 invalid parameters.

#include <cstdio>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sl12/characters.hpp"
#include "sl12/fusion.hpp"
#include "sl12/jsonio.hpp"
#include "sl12/modules.hpp"
#include "sl12/partitions.hpp"
#include "sl12/presentations.hpp"
#include "sl12/verify.hpp"

namespace {

using namespace sl12;

struct Emit {
  std::string format = "table";
  std::string output;  // empty = stdout
};

struct CommandResult {
  std::string table;
  Json json;
  std::vector<std::vector<std::string>> csv_rows;  // suite,case,params,expected,computed,pass
  bool relations_ok = true;
};

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_text(const std::vector<std::vector<std::string>>& rows) {
  std::string out = "suite,case,params,expected,computed,pass\n";
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i) out += ",";
      out += csv_escape(r[i]);
    }
    out += "\n";
  }
  return out;
}

int emit(const Emit& how, const CommandResult& r) {
  std::string text;
  if (how.format == "json")
    text = dump_json(r.json);
  else if (how.format == "csv")
    text = csv_text(r.csv_rows);
  else
    text = r.table;
  if (how.output.empty())
    std::fputs(text.c_str(), stdout);
  else
    write_text_atomic(how.output, text);
  return r.relations_ok ? 0 : 1;
}

Rat parse_rat_or_throw(const std::string& s, const std::string& what) {
  auto q = parse_rat(s);
  if (!q) throw CLI::ValidationError(what, "'" + s + "' is not a rational (use p or p/q)");
  return *q;
}

std::vector<Rat> parse_rat_list(const std::string& s, const std::string& what) {
  std::vector<Rat> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rat_or_throw(item, what));
  return out;
}

Partition parse_partition(const std::string& s) {
  Partition xi;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      long p = std::stol(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      xi.push_back(p);
    } catch (const std::exception&) {
      throw CLI::ValidationError("--xi", "'" + item + "' is not an integer");
    }
  }
  if (!is_partition(xi))
    throw CLI::ValidationError("--xi", "parts must be positive and weakly decreasing");
  return xi;
}

std::string partition_text(const Partition& xi) {
  std::string s = "(";
  for (std::size_t i = 0; i < xi.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(xi[i]);
  }
  return s + ")";
}

std::string character_table(const FormalCharacter& f) {
  std::string out = "character (mass " + std::to_string(ch_mass(f)) + "):\n";
  for (const auto& [w, mult] : f)
    out += "  " + w.str() + "  " + std::to_string(mult) + "\n";
  return out;
}

std::string pass_fail(bool ok) { return ok ? "pass" : "FAIL"; }

void report_csv_rows(CommandResult& r, const RelationReport& rep) {
  for (const RelationCheck& c : rep.checks())
    r.csv_rows.push_back({rep.suite(), rep.case_name(), c.relation + " [" + c.params + "]", "0",
                          c.pass ? "0" : "nonzero", pass_fail(c.pass)});
}

std::string relation_summary(const RelationReport& rep) {
  const long n = static_cast<long>(rep.checks().size());
  std::string out = "relations: " + std::to_string(n - rep.failure_count()) + "/" +
                    std::to_string(n) + " passed";
  if (const RelationCheck* f = rep.first_failure())
    out += "; first failure: " + f->relation + " [" + f->params + "]";
  return out + "\n";
}

// Shared body of the four fusion-backed commands. xi is the defining
// partition, extra the command-specific relation checks on the realization.
template <typename ExtraChecks>
CommandResult graded_command(const std::string& command, const Rat& lambda1_in, bool lambda1_set,
                             const Partition& xi, const std::string& z_csv,
                             const std::string& kappa_csv, ExtraChecks&& extra) {
  FusionSpec spec = default_fusion_spec(lambda1_in, xi);
  if (!kappa_csv.empty()) {
    std::vector<Rat> ks = parse_rat_list(kappa_csv, "--kappa");
    if (ks.size() != xi.size())
      throw CLI::ValidationError("--kappa", "need exactly one value per part of xi");
    Rat total(0);
    for (std::size_t i = 0; i < ks.size(); ++i) {
      spec.factors[i].kappa = ks[i];
      total += ks[i];
    }
    if (lambda1_set && total != lambda1_in)
      throw CLI::ValidationError("--kappa", "values sum to " + rat_str(total) +
                                                ", conflicting with --lambda1");
  }
  if (!z_csv.empty()) {
    std::vector<Rat> zs = parse_rat_list(z_csv, "--z");
    if (zs.size() != xi.size())
      throw CLI::ValidationError("--z", "need exactly one point per part of xi");
    for (std::size_t i = 0; i < zs.size(); ++i) spec.factors[i].z = zs[i];
  }
  Rat lambda1(0);
  for (const FusionFactor& f : spec.factors) lambda1 += f.kappa;
  if (spec.factors.empty()) lambda1 = lambda1_in;
  if (spec.factors.empty() && !sl12::is_zero(lambda1))
    throw CLI::ValidationError("--lambda1", "must be 0 when the partition is empty");

  GradedRealization g = fuse(spec);
  const Weight hw{lambda1, Rat(partition_weight(xi))};

  std::string params = "lambda1=" + rat_str(lambda1) + ",xi=" + partition_text(xi);
  RelationReport rep(command, params);
  extra(g, hw, rep);

  CommandResult r;
  r.relations_ok = rep.all_passed();

  FormalCharacter ch = char_of(g.base());
  std::string head = command + " module, lambda1 = " + rat_str(lambda1) + ", xi = " +
                     partition_text(xi) + "\n";
  std::string pts = "points z =", kap = "kappa =";
  for (const FusionFactor& f : spec.factors) {
    pts += " " + rat_str(f.z);
    kap += " " + rat_str(f.kappa);
  }
  std::string dims = "graded dims =";
  for (int d : g.graded_dims()) dims += " " + std::to_string(d);
  r.table = head + pts + "\n" + kap + "\n" + "dim = " + std::to_string(g.dim()) + "\n" + dims +
            "  (top degree " + std::to_string(g.top_degree()) + ")\n" + character_table(ch) +
            relation_summary(rep);

  Json params_json{{"lambda1", rat_str(lambda1)}, {"xi", xi}};
  Json zs = Json::array(), ks = Json::array();
  for (const FusionFactor& f : spec.factors) {
    zs.push_back(rat_str(f.z));
    ks.push_back(rat_str(f.kappa));
  }
  params_json["z"] = zs;
  params_json["kappa"] = ks;
  r.json = Json{{"command", command},
                {"params", params_json},
                {"dim", g.dim()},
                {"graded_dims", g.graded_dims()},
                {"top_degree", g.top_degree()},
                {"character", character_json(ch)},
                {"graded_character", character_json(g.graded_character())},
                {"relations", report_json(rep)}};

  r.csv_rows.push_back({command, params, "dim", "", std::to_string(g.dim()), "pass"});
  report_csv_rows(r, rep);
  return r;
}

CommandResult cmd_kac(const std::string& lambda1_s, long lambda2, int borel) {
  const Rat l1 = parse_rat_or_throw(lambda1_s, "--lambda1");
  const Weight hw{l1, Rat(lambda2)};
  const Borel b = borel == 1 ? Borel::b1 : borel == 3 ? Borel::b3 : Borel::b2;
  FiniteModule m = kac_module(b, hw);
  FormalCharacter ch = char_of(m);

  CommandResult r;
  const std::string name = "K" + hw.str() + " over b(" + std::to_string(borel) + ")";
  r.table = "Kac module " + name + "\n" + "dim = " + std::to_string(m.dim()) + "\n";
  Json j{{"command", "kac"},
         {"params", Json{{"lambda1", rat_str(l1)}, {"lambda2", lambda2}, {"borel", borel}}},
         {"dim", m.dim()},
         {"character", character_json(ch)}};
  r.csv_rows.push_back({"kac", name, "dim", "", std::to_string(m.dim()), "pass"});
  if (b == Borel::b2 && !(sl12::is_zero(l1) && lambda2 == 0)) {
    const bool typ = is_typical(hw);
    const bool irr = is_irreducible(m, Borel::b2);
    r.table += std::string("typical = ") + (typ ? "yes" : "no") + "\n";
    r.table += std::string("irreducible = ") + (irr ? "yes" : "no") + "\n";
    j["typical"] = typ;
    j["irreducible"] = irr;
    r.relations_ok = typ == irr;
    r.csv_rows.push_back({"kac", name, "typicality matches irreducibility", typ ? "true" : "false",
                          irr ? "true" : "false", pass_fail(typ == irr)});
  }
  r.table += character_table(ch);
  r.json = std::move(j);
  return r;
}

CommandResult cmd_combinatorics(const std::string& check, long max_n) {
  CommandResult r;
  Json rows = Json::array();
  r.table = "check = " + check + ", max n = " + std::to_string(max_n) + "\n" +
            "  n  partitions  status\n";
  long total = 0;
  for (long n = 0; n <= max_n; ++n) {
    long count = 0;
    bool ok = true;
    std::string first;
    for (const Partition& xi : partitions_of(n)) {
      bool here = true;
      if (check == "dim-identity") {
        ++count;
        here = removal_dimension_sum(xi) == kac_dimension_product(xi);
      } else {  // splitting
        for (int s = 1; s < static_cast<int>(xi.size()); ++s)
          if (xi[s - 1] > xi[s]) {
            ++count;
            here = here && removal_split_check(xi, s);
          }
      }
      if (!here && first.empty()) first = partition_text(xi);
      ok = ok && here;
    }
    total += count;
    r.relations_ok = r.relations_ok && ok;
    char line[64];
    std::snprintf(line, sizeof line, "  %-2ld %-11ld %s\n", n, count, ok ? "ok" : "FAIL");
    r.table += line;
    Json row{{"n", n}, {"cases", count}, {"pass", ok}};
    if (!first.empty()) row["first_failure"] = first;
    rows.push_back(row);
    r.csv_rows.push_back({"combinatorics", check, "n=" + std::to_string(n),
                          std::to_string(count) + " cases", ok ? "all pass" : "failure",
                          pass_fail(ok)});
  }
  r.table += (r.relations_ok ? "all " : "FAILURES among ") + std::to_string(total) + " cases" +
             (r.relations_ok ? " pass\n" : "\n");
  r.json = Json{{"command", "combinatorics"},
                {"params", Json{{"check", check}, {"max_n", max_n}}},
                {"pass", r.relations_ok},
                {"rows", rows}};
  return r;
}

CommandResult cmd_verify(const std::string& suite, const VerifyBounds& bounds) {
  std::vector<CriterionResult> results = run_suite(suite, bounds);
  CommandResult r;
  int passed = 0;
  for (const CriterionResult& c : results) {
    r.relations_ok = r.relations_ok && c.pass;
    passed += c.pass ? 1 : 0;
    char line[256];
    std::snprintf(line, sizeof line, "%s  %-22s %6ld checks  %s\n", c.pass ? "PASS" : "FAIL",
                  c.name.c_str(), c.cases, c.summary.c_str());
    r.table += line;
    if (!c.pass) r.table += "      first failure: " + c.detail + "\n";
    r.csv_rows.push_back({c.suite, c.name, c.summary, "pass", c.pass ? "pass" : "fail: " + c.detail,
                          pass_fail(c.pass)});
  }
  r.table += (r.relations_ok ? "PASS " : "FAIL ") + std::to_string(passed) + "/" +
             std::to_string(results.size()) + "\n";
  r.json = criteria_json(results);
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact modules over the sl(1|2) current superalgebra"};
  app.require_subcommand(1);

  Emit how;
  app.add_option("--format", how.format, "output format")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--output", how.output, "write the report to this path (atomically)");

  std::string lambda1 = "0", xi_s, z_s, kappa_s;
  long lambda2 = 0, ell = 1, trunc = 1, max_n = 8;
  int borel = 2;

  auto add_points = [&](CLI::App* c) {
    c->fallthrough();
    c->add_option("--z", z_s, "evaluation points, comma-separated rationals (default 0,1,2,...)");
    c->add_option("--kappa", kappa_s,
                  "first weight coordinates per factor, comma-separated rationals "
                  "(default: lambda1 on the first factor, 0 elsewhere)");
  };

  CLI::App* kac = app.add_subcommand("kac", "generalized Kac module");
  kac->fallthrough();
  kac->add_option("--lambda1", lambda1, "highest weight on h1, rational")->capture_default_str();
  kac->add_option("--lambda2", lambda2, "highest weight on h2")->capture_default_str();
  kac->add_option("--borel", borel, "Borel subalgebra: 1, 2 or 3")
      ->check(CLI::IsMember({1, 2, 3}))
      ->capture_default_str();

  CLI::App* weyl = app.add_subcommand("weyl", "local Weyl module as a fusion of 4-dim factors");
  weyl->add_option("--lambda1", lambda1, "highest weight on h1, rational")->capture_default_str();
  weyl->add_option("--lambda2", lambda2, "highest weight on h2, nonnegative")
      ->capture_default_str();
  add_points(weyl);

  CLI::App* cv = app.add_subcommand("cv", "Chari-Venkatesh module as a fusion of Kac factors");
  cv->add_option("--lambda1", lambda1, "highest weight on h1, rational")->capture_default_str();
  cv->add_option("--xi", xi_s, "partition of lambda2, e.g. 2,1")->required();
  add_points(cv);

  CLI::App* dem = app.add_subcommand("demazure", "Demazure-type module D(ell, lambda)");
  dem->add_option("--ell", ell, "level parameter, >= 1")->capture_default_str();
  dem->add_option("--lambda1", lambda1, "highest weight on h1, rational")->capture_default_str();
  dem->add_option("--lambda2", lambda2, "highest weight on h2, nonnegative")
      ->capture_default_str();
  add_points(dem);

  CLI::App* tr = app.add_subcommand("truncated", "truncated local Weyl module W(lambda, N)");
  tr->add_option("--N", trunc, "truncation degree, >= 1")->capture_default_str();
  tr->add_option("--lambda1", lambda1, "highest weight on h1, rational")->capture_default_str();
  tr->add_option("--lambda2", lambda2, "highest weight on h2, nonnegative")
      ->capture_default_str();
  add_points(tr);

  std::string comb_check = "dim-identity";
  CLI::App* comb = app.add_subcommand("combinatorics", "partition counting identities");
  comb->fallthrough();
  comb->add_option("--check", comb_check, "identity to sweep")
      ->check(CLI::IsMember({"dim-identity", "splitting"}))
      ->capture_default_str();
  comb->add_option("--max-n", max_n, "largest partition weight")->capture_default_str();

  std::string suite = "all";
  VerifyBounds bounds;
  CLI::App* ver = app.add_subcommand("verify", "run the verification battery");
  ver->fallthrough();
  {
    std::vector<std::string> names = sl12::suite_names();
    names.push_back("all");
    ver->add_option("--suite", suite, "criterion suite")
        ->check(CLI::IsMember(names))
        ->capture_default_str();
  }
  ver->add_option("--max-n", bounds.max_n,
                  "partition weight cap (fused grid; also the counting grid unless "
                  "--max-comb-n is given)")
      ->capture_default_str();
  ver->add_option("--max-lambda2", bounds.max_lambda2, "cap on lambda2 grids")
      ->capture_default_str();
  ver->add_option("--max-comb-n", bounds.max_comb_n, "partition weight cap for counting identities")
      ->capture_default_str();
  ver->add_flag("--extended", bounds.extended, "include the 1024-dimensional Weyl realization");

  try {
    app.parse(argc, argv);

    CommandResult r;
    if (*kac) {
      r = cmd_kac(lambda1, lambda2, borel);
    } else if (*weyl) {
      const Rat l1 = parse_rat_or_throw(lambda1, "--lambda1");
      if (lambda2 < 0) throw CLI::ValidationError("--lambda2", "must be nonnegative");
      r = graded_command("weyl", l1, weyl->count("--lambda1") > 0, Partition(lambda2, 1), z_s,
                         kappa_s, [&](const GradedRealization& g, const Weight& hw,
                                      RelationReport& rep) {
                           rep.absorb(check_weyl_relations(g, hw));
                         });
    } else if (*cv) {
      const Rat l1 = parse_rat_or_throw(lambda1, "--lambda1");
      const Partition xi = parse_partition(xi_s);
      r = graded_command("cv", l1, cv->count("--lambda1") > 0, xi, z_s, kappa_s,
                         [&](const GradedRealization& g, const Weight& hw, RelationReport& rep) {
                           rep.absorb(check_weyl_relations(g, hw));
                           rep.absorb(check_cv_relations(g, CVDatum{hw.w1, xi}));
                         });
    } else if (*dem) {
      const Rat l1 = parse_rat_or_throw(lambda1, "--lambda1");
      if (ell < 1) throw CLI::ValidationError("--ell", "must be >= 1");
      if (lambda2 < 0) throw CLI::ValidationError("--lambda2", "must be nonnegative");
      r = graded_command("demazure", l1, dem->count("--lambda1") > 0,
                         demazure_partition(ell, lambda2), z_s, kappa_s,
                         [&](const GradedRealization& g, const Weight& hw, RelationReport& rep) {
                           rep.absorb(check_demazure(g, ell, hw));
                           rep.absorb(check_demazure_lowest_weight(g, ell, hw));
                         });
    } else if (*tr) {
      const Rat l1 = parse_rat_or_throw(lambda1, "--lambda1");
      if (trunc < 1) throw CLI::ValidationError("--N", "must be >= 1");
      if (lambda2 < 0) throw CLI::ValidationError("--lambda2", "must be nonnegative");
      r = graded_command("truncated", l1, tr->count("--lambda1") > 0,
                         truncated_partition(trunc, lambda2), z_s, kappa_s,
                         [&](const GradedRealization& g, const Weight& hw, RelationReport& rep) {
                           rep.absorb(check_truncated(g, trunc, hw));
                         });
    } else if (*comb) {
      if (max_n < 0) throw CLI::ValidationError("--max-n", "must be nonnegative");
      r = cmd_combinatorics(comb_check, max_n);
    } else {
      if (ver->count("--max-n") > 0 && ver->count("--max-comb-n") == 0)
        bounds.max_comb_n = bounds.max_n;
      r = cmd_verify(suite, bounds);
    }
    return emit(how, r);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

#include "sl12/jsonio.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "sl12/superalgebra.hpp"

namespace sl12 {

Json weight_json(const Weight& w) {
  return Json{{"h1", rat_str(w.w1)}, {"h2", rat_str(w.w2)}};
}

Json bracket_table_json() {
  Json gens = Json::array();
  for (Gen g : kAllGens)
    gens.push_back(Json{{"id", static_cast<int>(g)},
                        {"name", gen_name(g)},
                        {"parity", parity_of(g)}});
  Json pairs = Json::array();
  for (Gen a : kAllGens)
    for (Gen b : kAllGens) {
      Json rows = Json::array();
      for (const auto& [g, c] : bracket(a, b)) rows.push_back(Json::array({rat_str(c), gen_name(g)}));
      pairs.push_back(Json{{"a", gen_name(a)}, {"b", gen_name(b)}, {"value", rows}});
    }
  return Json{{"generators", gens}, {"brackets", pairs}};
}

Json module_json(const FiniteModule& m, int max_deg) {
  Json out;
  out["dim"] = m.dim();
  out["degree_cap"] = m.degree_cap_hint();
  Json cyc = Json::array();
  for (const Rat& c : m.cyclic()) cyc.push_back(rat_str(c));
  out["cyclic"] = cyc;
  if (!m.labels().empty()) out["labels"] = m.labels();
  Json ws = Json::array();
  for (const Weight& w : m.weights()) ws.push_back(weight_json(w));
  out["weights"] = ws;
  out["parities"] = m.parities();
  Json acts = Json::array();
  for (Gen g : kAllGens)
    for (int d = 0; d <= max_deg; ++d) {
      const SparseMat& a = m.action(g, d);
      if (a.entries().empty()) continue;
      std::vector<std::pair<std::pair<int, int>, Rat>> cells;
      for (const auto& e : a.entries()) cells.push_back({{e.r, e.c}, e.v});
      std::sort(cells.begin(), cells.end(),
                [](const auto& x, const auto& y) { return x.first < y.first; });
      Json trip = Json::array();
      for (const auto& [rc, v] : cells) trip.push_back(Json::array({rc.first, rc.second, rat_str(v)}));
      acts.push_back(Json{{"gen", gen_name(g)}, {"deg", d}, {"triplets", trip}});
    }
  out["actions"] = acts;
  return out;
}

Json character_json(const FormalCharacter& f) {
  Json out = Json::array();
  for (const auto& [w, mult] : f) {
    Json row = weight_json(w);
    row["mult"] = mult;
    out.push_back(row);
  }
  return out;
}

Json character_json(const GradedCharacter& g) {
  Json out = Json::array();
  for (const auto& [key, mult] : g) {
    Json row = weight_json(key.second);
    row["deg"] = key.first;
    row["mult"] = mult;
    out.push_back(row);
  }
  return out;
}

Json report_json(const RelationReport& rep) {
  Json rows = Json::array();
  for (const RelationCheck& c : rep.checks()) {
    Json row{{"suite", rep.suite()},
             {"case", rep.case_name()},
             {"params", c.params},
             {"relation", c.relation},
             {"pass", c.pass}};
    if (!c.pass && !c.witness.empty()) {
      Json w = Json::array();
      for (const Rat& v : c.witness) w.push_back(rat_str(v));
      row["witness"] = w;
    }
    rows.push_back(row);
  }
  return Json{{"suite", rep.suite()},
              {"case", rep.case_name()},
              {"pass", rep.all_passed()},
              {"failures", rep.failure_count()},
              {"checks", rows}};
}

Json criteria_json(const std::vector<CriterionResult>& results) {
  bool pass = true;
  Json rows = Json::array();
  for (const CriterionResult& r : results) {
    pass = pass && r.pass;
    Json row{{"name", r.name},
             {"suite", r.suite},
             {"pass", r.pass},
             {"checks", r.cases},
             {"summary", r.summary}};
    if (!r.pass) row["detail"] = r.detail;
    rows.push_back(row);
  }
  return Json{{"pass", pass}, {"criteria", rows}};
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

void write_text_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("write_text_atomic: cannot open " + tmp);
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("write_text_atomic: short write to " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw std::runtime_error("write_text_atomic: cannot rename into " + path);
  }
}

}  // namespace sl12

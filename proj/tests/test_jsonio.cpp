#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "sl12/fusion.hpp"
#include "sl12/jsonio.hpp"
#include "sl12/presentations.hpp"

using namespace sl12;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "missing ", path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string golden(const std::string& name) { return slurp(std::string(GOLDEN_DIR) + "/" + name); }

}  // namespace

TEST_CASE("bracket table dump is byte-stable") {
  CHECK(dump_json(bracket_table_json()) == golden("bracket_table.json"));
}

TEST_CASE("module dump is byte-stable") {
  FiniteModule k = kac_module(Borel::b2, Weight{Rat(1), Rat(1)});
  CHECK(dump_json(module_json(k, 0)) == golden("kac_b2_1_1.json"));
}

TEST_CASE("character dumps are byte-stable") {
  CHECK(dump_json(character_json(weyl_char_formula(Rat(2), 2))) == golden("weyl_char_2_2.json"));
  GradedRealization g = fuse(default_fusion_spec(Rat(3), Partition{2, 1}));
  CHECK(dump_json(character_json(g.graded_character())) == golden("cv_graded_char_3_21.json"));
  CHECK(dump_json(report_json(check_cv_relations(g, CVDatum{Rat(3), Partition{2, 1}}))) ==
        golden("cv_report_3_21.json"));
}

TEST_CASE("weight serialization keeps exact rationals") {
  Json w = weight_json(Weight{Rat(-1) / 2, Rat(7) / 3});
  CHECK(w["h1"] == "-1/2");
  CHECK(w["h2"] == "7/3");
}

TEST_CASE("failing checks carry their witness") {
  RelationReport rep("demo", "case");
  rep.check_zero("probe vanishes", "k=1", RatVec{Rat(0), Rat(1) / 3});
  rep.check_zero("clean probe", "k=2", RatVec{Rat(0), Rat(0)});
  Json j = report_json(rep);
  CHECK_FALSE(j["pass"].get<bool>());
  CHECK(j["failures"] == 1);
  CHECK(j["checks"][0]["witness"] == Json::array({"0", "1/3"}));
  CHECK_FALSE(j["checks"][1].contains("witness"));
  CHECK(j["checks"][1]["suite"] == "demo");
}

TEST_CASE("criteria summary json") {
  std::vector<CriterionResult> rs(2);
  rs[0] = {"alpha", "s1", "swept", true, 10, ""};
  rs[1] = {"beta", "s2", "swept", false, 3, "case c"};
  Json j = criteria_json(rs);
  CHECK_FALSE(j["pass"].get<bool>());
  CHECK(j["criteria"][0]["pass"].get<bool>());
  CHECK_FALSE(j["criteria"][0].contains("detail"));
  CHECK(j["criteria"][1]["detail"] == "case c");
}

TEST_CASE("atomic writes land whole and clean up the temporary") {
  const std::string p = (std::filesystem::temp_directory_path() / "sl12_jsonio_probe.json").string();
  write_text_atomic(p, "first\n");
  write_text_atomic(p, "second\n");
  CHECK(slurp(p) == "second\n");
  CHECK_FALSE(std::filesystem::exists(p + ".tmp"));
  std::filesystem::remove(p);
}

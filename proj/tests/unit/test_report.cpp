#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gnorm/bounds.hpp"
#include "gnorm/constructions.hpp"
#include "gnorm/families.hpp"
#include "gnorm/report.hpp"
#include "gnorm/search.hpp"

using namespace gnorm;
using nlohmann::json;

namespace {

// Golden files pin keys, value types, strings and booleans exactly; numbers
// must agree to 1e-9 relative so the last bits of a double do not matter.
// Set GNORM_UPDATE_GOLDEN=1 to rewrite them.
void compare(const json& want, const json& got, const std::string& path) {
  if (want.is_number() && got.is_number()) {
    const double a = want.get<double>(), b = got.get<double>();
    CHECK_MESSAGE(std::abs(a - b) <= 1e-9 * (1.0 + std::abs(a)), path << ": " << a << " vs " << b);
    return;
  }
  REQUIRE_MESSAGE(want.type() == got.type(), path << ": type differs");
  if (want.is_object()) {
    std::vector<std::string> wk, gk;
    for (auto it = want.begin(); it != want.end(); ++it) wk.push_back(it.key());
    for (auto it = got.begin(); it != got.end(); ++it) gk.push_back(it.key());
    REQUIRE_MESSAGE(wk == gk, path << ": keys differ");
    for (const auto& k : wk) compare(want[k], got[k], path + "." + k);
  } else if (want.is_array()) {
    REQUIRE_MESSAGE(want.size() == got.size(), path << ": length differs");
    for (std::size_t i = 0; i < want.size(); ++i) compare(want[i], got[i], path + "[" + std::to_string(i) + "]");
  } else {
    CHECK_MESSAGE(want == got, path);
  }
}

void golden(const std::string& name, const std::string& rendered) {
  const std::string file = std::string(GNORM_GOLDEN_DIR) + "/" + name;
  const json got = json::parse(rendered);
  if (std::getenv("GNORM_UPDATE_GOLDEN")) {
    std::ofstream(file) << rendered;
    return;
  }
  std::ifstream in(file);
  REQUIRE_MESSAGE(in.good(), "missing golden file " << file);
  std::stringstream ss;
  ss << in.rdbuf();
  compare(json::parse(ss.str()), got, name);
}

Subject k4() { return Subject::from_graph(complete_graph(4)); }

}  // namespace

TEST_SUITE("report") {

TEST_CASE("format names") {
  CHECK(parse_format("json") == Format::Json);
  CHECK(parse_format("text") == Format::Text);
  CHECK(parse_format("csv") == Format::Csv);
  CHECK_FALSE(parse_format("JSON").has_value());
}

TEST_CASE("golden: check report") {
  const BoundParams params{std::nullopt, std::nullopt, 4};
  const auto all = run_registry(k4(), params);
  std::vector<RegistryOutcome> one;
  for (const auto& o : all)
    if (o.bound_id == "KYFAN_01") one.push_back(o);
  golden("check_k4_kyfan01.json", render_checks(one, Format::Json));
  golden("check_k4_registry.json", render_checks(all, Format::Json));
}

TEST_CASE("check JSON carries the schema fields") {
  const auto all = run_registry(k4(), BoundParams{1.0, 2.0, 2});
  const json j = json::parse(render_checks(all, Format::Json));
  CHECK(j["all_hold"] == true);
  for (const auto& c : j["checks"])
    for (const char* key : {"bound_id", "params", "direction", "lhs", "rhs", "slack", "tol", "holds",
                            "equality", "equality_witness", "notes"})
      CHECK_MESSAGE(c.contains(key), key);
  for (const auto& s : j["skipped"]) {
    CHECK(s["bound_id"].is_string());
    CHECK(s["reason"].is_string());
  }
}

TEST_CASE("JSON doubles round-trip exactly") {
  const Subject s = Subject::from_graph(path_graph(5));
  const json j = json::parse(render_norms(s, {}, {}, Format::Json));
  const auto& sigma = s.sigma().values;
  REQUIRE(j["singular_values"].size() == sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) CHECK(j["singular_values"][i].get<double>() == sigma[i]);
}

TEST_CASE("golden: norms, search, constructions, errors") {
  golden("norms_k4.json", render_norms(k4(), {}, {}, Format::Json));
  golden("search_xik_4_4.json", render_search(extremal(Objective::XiK, 4, 4.0, {false, 1}), Format::Json));
  golden("construct_paley5.json", render_graph(paley_graph(5), "paley", Format::Json));
  golden("construct_dft2.json", render_matrix(dft_matrix(2), "dft", Format::Json));
  golden("error.json", render_error("RaggedRows", "row 2 has 1 cells, expected 2", Format::Json));
}

TEST_CASE("text output uses 12 significant digits") {
  const std::string text = render_norms(k4(), {}, {}, Format::Text);
  CHECK(text.find("energy 6\n") != std::string::npos);
  CHECK(text.rfind("graph 4x4, 6 edges\n", 0) == 0);
  const Subject p = Subject::from_graph(path_graph(2));
  const std::string checks = render_checks(run_registry(p, BoundParams{1.0, 2.0, 1}), Format::Text);
  CHECK(checks.find("MCCLELLAND  upper  lhs 2  rhs 2  slack") != std::string::npos);
  CHECK(text.back() == '\n');
}

TEST_CASE("csv output") {
  const std::string csv = render_norms(k4(), std::vector<double>{1.0}, std::vector<int>{2}, Format::Csv);
  CHECK(csv == "quantity,param,value\nschatten,1,6\nkyfan,2,4\nentrywise,1,12\nentrywise,2,3.4641016151377544\n"
               "entrywise,inf,1\nenergy,,6\n");
  CHECK(render_error("X", "y", Format::Text) == "error (X): y\n");
}

}  // TEST_SUITE

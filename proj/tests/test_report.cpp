#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <string>
#include <vector>

#include "qel/catalog.hpp"
#include "qel/errors.hpp"
#include "qel/invariants.hpp"
#include "qel/report.hpp"
#include "qel/rules.hpp"
#include "qel/secant.hpp"

namespace {

// Collects the anchors of every {"value": ..., "cite": [...]} leaf and
// checks the leaf shape along the way.
void walk_leaves(const qel::OrderedJson& node, std::set<std::string>& anchors) {
  if (node.is_object()) {
    if (node.contains("value")) {
      REQUIRE(node.contains("cite"));
      REQUIRE(node["cite"].is_array());
      CHECK_FALSE(node["cite"].empty());
      for (const auto& a : node["cite"])
        anchors.insert(a.get<std::string>());
    }
    for (const auto& [key, child] : node.items()) walk_leaves(child, anchors);
  } else if (node.is_array()) {
    for (const auto& child : node) walk_leaves(child, anchors);
  }
}

qel::OrderedJson sample_report(std::uint64_t seed) {
  qel::ReportBuilder rb("verify", {{"model", "grassmann_lines(4)"}}, seed);
  auto rep = qel::verify_model(qel::find_model("grassmann_lines(4)"));
  rb.results(qel::geometry_json(rb, rep));
  return rb.finish();
}

}  // namespace

TEST_CASE("the rules registry is closed and unique") {
  const auto& rules = qel::all_rules();
  CHECK(rules.size() >= 30);
  std::set<std::string> seen;
  for (const auto& r : rules) {
    CHECK_FALSE(r.anchor.empty());
    CHECK_FALSE(r.statement.empty());
    CHECK(seen.insert(std::string(r.anchor)).second);
  }
  CHECK(qel::rule("defect-definition").statement.size() > 10);
  CHECK_THROWS_AS(qel::rule("not-an-anchor"), qel::InputError);
}

TEST_CASE("reports carry schema, inputs and seed") {
  auto doc = sample_report(1729);
  CHECK(doc["schema"] == "qel-report/1");
  CHECK(doc["command"] == "verify");
  CHECK(doc["inputs"]["model"] == "grassmann_lines(4)");
  CHECK(doc["seed"] == 1729);
  CHECK(doc.contains("results"));
  CHECK(doc.contains("citations"));
}

TEST_CASE("identical builds serialize identically") {
  CHECK(sample_report(1729).dump(2) == sample_report(1729).dump(2));
}

TEST_CASE("a rendered report reparses to the same bytes") {
  std::string text = sample_report(7).dump(2) + "\n";
  auto reparsed = qel::OrderedJson::parse(text);
  CHECK(reparsed.dump(2) + "\n" == text);
}

TEST_CASE("every numeric leaf cites an anchor listed in the report") {
  auto doc = sample_report(1729);

  std::set<std::string> leaf_anchors;
  walk_leaves(doc["results"], leaf_anchors);
  CHECK_FALSE(leaf_anchors.empty());

  std::set<std::string> listed;
  for (const auto& c : doc["citations"]) {
    listed.insert(c["anchor"].get<std::string>());
    CHECK_FALSE(c["quote"].get<std::string>().empty());
  }
  for (const auto& a : leaf_anchors) {
    CAPTURE(a);
    if (a == "COMPUTED" || a == "HEURISTIC") continue;  // reserved tags
    CHECK(listed.count(a) == 1);
  }

  // citation list is sorted and duplicate-free
  std::vector<std::string> order(listed.begin(), listed.end());
  std::vector<std::string> as_rendered;
  for (const auto& c : doc["citations"])
    as_rendered.push_back(c["anchor"].get<std::string>());
  CHECK(as_rendered == order);
}

TEST_CASE("unknown anchors are rejected at build time") {
  qel::ReportBuilder rb("test", {}, 1);
  CHECK_THROWS_AS(rb.cite("made-up-anchor"), qel::InputError);
  CHECK_THROWS_AS(rb.value(7ll, {"also-made-up"}), qel::InputError);
}

TEST_CASE("warnings reach the document") {
  qel::ReportBuilder rb("test", {}, 1);
  rb.warn("first");
  rb.warn("second");
  auto doc = rb.finish();
  CHECK(doc["warnings"] == qel::OrderedJson::array({"first", "second"}));
}

TEST_CASE("tower payloads keep exact fractions") {
  qel::ReportBuilder rb("tower", {{"n", 12}, {"delta", 6}}, 1);
  auto doc = qel::tower_json(rb, qel::tower(12, 6));
  CHECK_FALSE(doc["all_integral"].get<bool>());
  const auto& lvl = doc["levels"][1];
  CHECK(lvl["dim"]["num"] == 7);
  CHECK(lvl["dim"]["den"] == 2);
  CHECK(lvl["dim"]["text"] == "7/2");
}

TEST_CASE("table rendering pads columns and trims line ends") {
  std::string got = qel::format_table({{"name", "n", "delta"},
                                       {"spinor10", "10", "6"},
                                       {"x", "4", "12"}});
  CHECK(got ==
        "name      n   delta\n"
        "spinor10  10  6\n"
        "x         4   12\n");
}

TEST_CASE("verdict and feasibility names") {
  CHECK(std::string(qel::verdict_name(qel::RuleVerdict::pass)) == "pass");
  CHECK(std::string(qel::verdict_name(qel::RuleVerdict::fail)) == "fail");
  CHECK(std::string(qel::verdict_name(qel::RuleVerdict::not_applicable)) ==
        "not-applicable");
  CHECK(std::string(qel::feasibility_name(qel::Feasibility::feasible)) ==
        "feasible");
  CHECK(std::string(qel::feasibility_name(qel::Feasibility::constrained)) ==
        "constrained");
  CHECK(std::string(qel::feasibility_name(qel::Feasibility::infeasible)) ==
        "infeasible");
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "qel/catalog.hpp"

namespace {

const qel::VarietyModel& entry(const std::string& name) {
  for (const auto& m : qel::catalog_entries())
    if (m.name == name) return m;
  REQUIRE(false);
  static qel::VarietyModel dummy;
  return dummy;
}

long long choose(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("catalog has the fifteen expected entries") {
  std::vector<std::string> names;
  for (const auto& m : qel::catalog_entries()) names.push_back(m.name);
  CHECK(names == std::vector<std::string>{
                     "segre(1,2)", "segre(2,2)", "segre(1,3)", "veronese2(2)",
                     "grassmann_lines(4)", "grassmann_lines(5)", "quadric(2)",
                     "quadric(3)", "quadric(4)", "quadric(5)", "quadric(6)",
                     "quadric(7)", "quadric(8)", "spinor10", "e6"});
}

TEST_CASE("claimed profiles of the worked models") {
  auto check = [](const std::string& name, long long n, long long N,
                  long long delta, long long secant) {
    const auto& m = entry(name);
    CHECK(m.claims_present);
    CHECK(m.claimed.n == n);
    CHECK(m.claimed.N == N);
    CHECK(m.claimed.delta == delta);
    CHECK(m.claimed.secant_dim == secant);
  };
  check("segre(1,2)", 3, 5, 2, 5);
  check("segre(2,2)", 4, 8, 2, 7);
  check("segre(1,3)", 4, 7, 2, 7);
  check("veronese2(2)", 2, 5, 1, 4);
  check("grassmann_lines(4)", 6, 9, 4, 9);
  check("grassmann_lines(5)", 8, 14, 4, 13);
  check("spinor10", 10, 15, 6, 15);
  check("e6", 16, 26, 8, 25);
  for (long long n = 2; n <= 8; ++n)
    check("quadric(" + std::to_string(n) + ")", n, n + 1, n, n + 1);
}

TEST_CASE("claimed quadric counts") {
  CHECK(entry("segre(1,2)").claimed_quadrics == 3);
  CHECK(entry("segre(2,2)").claimed_quadrics == 9);
  CHECK(entry("segre(1,3)").claimed_quadrics == 6);
  CHECK(entry("veronese2(2)").claimed_quadrics == 6);
  CHECK(entry("grassmann_lines(4)").claimed_quadrics == 5);
  CHECK(entry("grassmann_lines(5)").claimed_quadrics == 15);
  CHECK(entry("spinor10").claimed_quadrics == 10);
  CHECK(entry("quadric(5)").claimed_quadrics == 1);
  CHECK_FALSE(entry("e6").claimed_quadrics.has_value());
}

TEST_CASE("parametrizations are homogeneous quadratic cones") {
  for (const auto& m : qel::catalog_entries()) {
    if (!m.map) {
      CHECK(m.name == "e6");
      continue;
    }
    CHECK(static_cast<long long>(m.map->outputs.size()) == m.claimed.N + 1);
    for (const auto& out : m.map->outputs) {
      CHECK(out.is_homogeneous());
      CHECK(out.total_degree() == 2);
    }
  }
}

TEST_CASE("line-locus links point at catalog members") {
  CHECK(entry("grassmann_lines(4)").yx_link == "segre(1,2)");
  CHECK(entry("grassmann_lines(5)").yx_link == "segre(1,3)");
  CHECK(entry("spinor10").yx_link == "grassmann_lines(4)");
  CHECK(entry("e6").yx_link == "spinor10");
  CHECK(entry("quadric(4)").yx_link == "quadric(2)");
  CHECK_FALSE(entry("segre(1,2)").yx_link.has_value());
  CHECK_FALSE(entry("veronese2(2)").yx_link.has_value());
  CHECK_FALSE(entry("quadric(2)").yx_link.has_value());
}

TEST_CASE("find_model parses family names off the fixed list") {
  auto m = qel::find_model("segre(3,4)");
  CHECK(m.claimed.n == 7);
  CHECK(m.claimed.N == 19);  // 4*5 - 1
  CHECK(m.claimed.delta == 2);
  CHECK(m.claimed_quadrics == choose(4, 2) * choose(5, 2));

  m = qel::find_model("veronese2(3)");
  CHECK(m.claimed.n == 3);
  CHECK(m.claimed.N == 9);
  CHECK(m.claimed.delta == 1);

  m = qel::find_model("grassmann_lines(6)");
  CHECK(m.claimed.n == 10);
  CHECK(m.claimed.N == 20);
  CHECK(m.claimed.delta == 4);
  CHECK(m.claimed_quadrics == choose(7, 4));

  m = qel::find_model("quadric(12)");
  CHECK(m.claimed.n == 12);
  CHECK(m.claimed.delta == 12);

  // quadric(1) is the conic, reachable for the link checks
  m = qel::find_model("quadric(1)");
  CHECK(m.claimed.n == 1);
  CHECK(m.claimed.N == 2);
  CHECK(m.claimed.delta == 1);
}

TEST_CASE("find_model rejects malformed names") {
  CHECK_THROWS_AS(qel::find_model("nope"), qel::InputError);
  CHECK_THROWS_AS(qel::find_model("segre(0,2)"), qel::InputError);
  CHECK_THROWS_AS(qel::find_model("segre(1"), qel::InputError);
  CHECK_THROWS_AS(qel::find_model("segre(1,2,3)"), qel::InputError);
  CHECK_THROWS_AS(qel::find_model("quadric(0)"), qel::InputError);
  CHECK_THROWS_AS(qel::find_model("quadric(x)"), qel::InputError);
  CHECK_THROWS_AS(qel::find_model("grassmann_lines(2)"), qel::InputError);
  CHECK_THROWS_AS(qel::find_model(""), qel::InputError);
}

TEST_CASE("notes carry registry anchors") {
  for (const auto& m : qel::catalog_entries()) {
    CHECK_FALSE(m.notes.empty());
    for (const auto& note : m.notes) CHECK_FALSE(note.anchor.empty());
  }
}

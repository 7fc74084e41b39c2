#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "qel/catalog.hpp"
#include "qel/errors.hpp"
#include "qel/matrix.hpp"
#include "qel/model_io.hpp"
#include "qel/rng.hpp"
#include "qel/secant.hpp"

namespace {

struct Expected {
  std::string name;
  long long n, secant, delta, ii, quadrics;
};

// n, dim SX, delta, dim |II|, h^0(I(2)) for every worked catalog entry.
const std::vector<Expected> kExpected = {
    {"segre(1,2)", 3, 5, 2, 1, 3},
    {"segre(2,2)", 4, 7, 2, 3, 9},
    {"segre(1,3)", 4, 7, 2, 2, 6},
    {"veronese2(2)", 2, 4, 1, 2, 6},
    {"grassmann_lines(4)", 6, 9, 4, 2, 5},
    {"grassmann_lines(5)", 8, 13, 4, 5, 15},
    {"quadric(2)", 2, 3, 2, 0, 1},
    {"quadric(3)", 3, 4, 3, 0, 1},
    {"quadric(4)", 4, 5, 4, 0, 1},
    {"quadric(5)", 5, 6, 5, 0, 1},
    {"quadric(6)", 6, 7, 6, 0, 1},
    {"quadric(7)", 7, 8, 7, 0, 1},
    {"quadric(8)", 8, 9, 8, 0, 1},
    {"spinor10", 10, 15, 6, 4, 10},
};

long long choose(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::uint64_t eval_quadric_mod(const qel::IntegerQuadric& q,
                               const std::vector<std::uint64_t>& y,
                               const qel::PrimeField& f) {
  qel::QuadMonomialIndex idx(y.size());
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < y.size(); ++i)
    for (std::size_t j = i; j < y.size(); ++j) {
      std::uint64_t c = f.reduce_int(q.coeffs[idx.flat(i, j)]);
      acc = f.add(acc, f.mul(c, f.mul(y[i], y[j])));
    }
  return acc;
}

double fit_slope(const std::vector<qel::YxCount>& counts) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& c : counts) {
    double x = std::log(static_cast<double>(c.q));
    double y = std::log(static_cast<double>(c.count));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  double m = static_cast<double>(counts.size());
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

}  // namespace

TEST_CASE("computed invariants of the worked models") {
  for (const auto& e : kExpected) {
    CAPTURE(e.name);
    qel::VarietyModel m = qel::find_model(e.name);
    CHECK(qel::variety_dim(m) == e.n);
    CHECK(qel::secant_dim(m) == e.secant);
    CHECK(qel::secant_defect(m) == e.delta);
    CHECK(qel::second_form_dim(m) == e.ii);
    CHECK(qel::quadric_space_dim(m) == e.quadrics);
  }
}

TEST_CASE("second fundamental form fills the normal directions") {
  // defect >= 1 forces dim |II| = N - n - 1
  for (const auto& e : kExpected) {
    CAPTURE(e.name);
    qel::VarietyModel m = qel::find_model(e.name);
    REQUIRE(e.delta >= 1);
    CHECK(qel::second_form_dim(m) == m.claimed.N - e.n - 1);
  }
}

TEST_CASE("secant dimension is sandwiched") {
  for (const auto& e : kExpected) {
    CAPTURE(e.name);
    qel::VarietyModel m = qel::find_model(e.name);
    CHECK(e.n <= e.secant);
    CHECK(e.secant <= m.claimed.N);
    CHECK(e.secant <= 2 * e.n + 1);
    CHECK(e.delta == 2 * e.n + 1 - e.secant);
  }
}

TEST_CASE("quadric counts match the representation-theory formulas") {
  auto count = [](const std::string& name) {
    return qel::quadric_space_dim(qel::find_model(name));
  };
  // Segre(l, m): C(l+1, 2) * C(m+1, 2) two-by-two minors
  CHECK(count("segre(1,2)") == choose(2, 2) * choose(3, 2));
  CHECK(count("segre(2,2)") == choose(3, 2) * choose(3, 2));
  CHECK(count("segre(1,3)") == choose(2, 2) * choose(4, 2));
  // Veronese(k): C(M+1, 2) - C(k+4, 4) with M = C(k+2, 2)
  CHECK(count("veronese2(2)") == choose(7, 2) - choose(6, 4));
  // G(1, r): C(r+1, 4) Pluecker relations
  CHECK(count("grassmann_lines(4)") == choose(5, 4));
  CHECK(count("grassmann_lines(5)") == choose(6, 4));
}

TEST_CASE("verify_model closes green on the whole catalog") {
  for (const auto& m : qel::catalog_entries()) {
    CAPTURE(m.name);
    qel::GeometryReport rep = qel::verify_model(m);
    CHECK(rep.all_match);
    CHECK(rep.errors.empty());
    CHECK_FALSE(rep.checks.empty());
    for (const auto& c : rep.checks) {
      CAPTURE(c.field);
      CHECK(c.match);
      CHECK_FALSE(c.citations.empty());
    }
    CHECK(rep.has_map == m.map.has_value());
    if (m.map) {
      CHECK(rep.n == m.claimed.n);
      CHECK(rep.secant == m.claimed.secant_dim);
      CHECK(rep.delta == m.claimed.delta);
    }
  }
}

TEST_CASE("ranks are stable across seeds") {
  for (const std::string name :
       {"segre(2,2)", "grassmann_lines(4)", "quadric(5)", "spinor10"}) {
    CAPTURE(name);
    qel::VarietyModel m = qel::find_model(name);
    qel::ProbeConfig base;
    auto first = qel::verify_model(m, base);
    for (std::uint64_t seed : {1ull, 2ull, 3ull, 42ull}) {
      qel::ProbeConfig cfg;
      cfg.seed = seed;
      auto rep = qel::verify_model(m, cfg);
      CHECK(rep.all_match);
      CHECK(rep.n == first.n);
      CHECK(rep.secant == first.secant);
      CHECK(rep.delta == first.delta);
      CHECK(rep.ii == first.ii);
      CHECK(rep.quadrics == first.quadrics);
    }
  }
}

TEST_CASE("lifted quadrics vanish on the model over an unrelated prime") {
  qel::PrimeField check_field(1000003);
  for (const std::string name :
       {"segre(1,2)", "veronese2(2)", "grassmann_lines(4)", "quadric(3)",
        "spinor10"}) {
    CAPTURE(name);
    qel::VarietyModel m = qel::find_model(name);
    auto gens = qel::quadric_generators(m);
    CHECK(static_cast<long long>(gens.size()) == qel::quadric_space_dim(m));

    qel::SeededRng rng(0x5eedf00dull);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<std::uint64_t> pt(m.map->nvars);
      for (auto& c : pt) c = rng.field_element(check_field);
      auto image = m.map->eval(pt, check_field);
      for (const auto& q : gens)
        CHECK(eval_quadric_mod(q, image, check_field) == 0);
    }

    // basis really is a basis: coefficient rows are independent
    std::vector<std::vector<std::uint64_t>> rows;
    for (const auto& q : gens) {
      std::vector<std::uint64_t> row;
      for (long long c : q.coeffs) row.push_back(check_field.reduce_int(c));
      rows.push_back(std::move(row));
    }
    CHECK(qel::ExactMatrix::from_rows(rows, check_field).rank() ==
          static_cast<long long>(gens.size()));
  }
}

TEST_CASE("line-direction counts over the sample primes") {
  std::vector<long long> primes = {3, 5, 7};

  SUBCASE("segre(1,2)") {
    auto est = qel::yx_dim_estimate(qel::find_model("segre(1,2)"), primes);
    REQUIRE(est.counts.size() == 3);
    CHECK(est.counts[0].count == 5);
    CHECK(est.counts[1].count == 7);
    CHECK(est.counts[2].count == 9);
    CHECK(est.counts[0].candidates == 13);
    CHECK(est.counts[1].candidates == 31);
    CHECK(est.counts[2].candidates == 57);
    CHECK_FALSE(est.no_lines);
    REQUIRE(est.slope.has_value());
    CHECK(*est.slope == doctest::Approx(fit_slope(est.counts)).epsilon(1e-9));
    CHECK(std::abs(*est.slope - 1.0) < 0.5);
  }
  SUBCASE("grassmann_lines(4)") {
    auto est =
        qel::yx_dim_estimate(qel::find_model("grassmann_lines(4)"), primes);
    REQUIRE(est.counts.size() == 3);
    CHECK(est.counts[0].count == 52);
    CHECK(est.counts[1].count == 186);
    CHECK(est.counts[2].count == 456);
    CHECK(est.counts[0].candidates == 364);
    REQUIRE(est.slope.has_value());
    CHECK(std::abs(*est.slope - 3.0) < 0.5);
  }
  SUBCASE("quadric(3)") {
    auto est = qel::yx_dim_estimate(qel::find_model("quadric(3)"), primes);
    REQUIRE(est.counts.size() == 3);
    CHECK(est.counts[0].count == 4);
    CHECK(est.counts[1].count == 6);
    CHECK(est.counts[2].count == 8);
    REQUIRE(est.slope.has_value());
    CHECK(std::abs(*est.slope - 1.0) < 0.5);
  }
  SUBCASE("veronese2(2) carries no lines") {
    auto est = qel::yx_dim_estimate(qel::find_model("veronese2(2)"), primes);
    CHECK(est.no_lines);
    CHECK_FALSE(est.slope.has_value());
    for (const auto& c : est.counts) CHECK(c.count == 0);
  }
  SUBCASE("counts repeat across seeds") {
    for (std::uint64_t seed : {1ull, 7ull, 1729ull}) {
      qel::ProbeConfig cfg;
      cfg.seed = seed;
      auto est =
          qel::yx_dim_estimate(qel::find_model("segre(1,2)"), primes, cfg);
      CHECK(est.counts[0].count == 5);
      CHECK(est.counts[1].count == 7);
      CHECK(est.counts[2].count == 9);
    }
  }
}

TEST_CASE("direction enumeration refuses oversized jobs") {
  // P^7 over F_7 alone is close to a million directions
  CHECK_THROWS_AS(
      qel::yx_dim_estimate(qel::find_model("quadric(8)"), {3, 5, 7}),
      qel::BudgetError);
}

TEST_CASE("sample prime validation") {
  qel::VarietyModel m = qel::find_model("segre(1,2)");
  CHECK_THROWS_AS(qel::yx_dim_estimate(m, {3}), qel::InputError);
  CHECK_THROWS_AS(qel::yx_dim_estimate(m, {3, 3, 5}), qel::InputError);
  CHECK_THROWS_AS(qel::yx_dim_estimate(m, {3, 5, 11}), qel::InputError);
}

TEST_CASE("probe configuration is validated") {
  qel::VarietyModel m = qel::find_model("segre(1,2)");
  qel::ProbeConfig cfg;
  cfg.trials = 0;
  CHECK_THROWS_AS(qel::variety_dim(m, cfg), qel::InputError);
  cfg.trials = 65;
  CHECK_THROWS_AS(qel::secant_dim(m, cfg), qel::InputError);
}

TEST_CASE("models without a parametrization refuse geometric probes") {
  qel::VarietyModel e6 = qel::find_model("e6");
  CHECK_THROWS_AS(qel::variety_dim(e6), qel::InputError);
  CHECK_THROWS_AS(qel::secant_dim(e6), qel::InputError);
  CHECK_THROWS_AS(qel::quadric_space_dim(e6), qel::InputError);
  CHECK_THROWS_AS(qel::yx_dim_estimate(e6, {3, 5}), qel::InputError);
}

TEST_CASE("degenerate parametrizations are rejected") {
  SUBCASE("mixed degrees") {
    auto m = qel::parse_model(
        "variables: 2\noutputs: 2\noutput: 1 [2,0]\noutput: 1 [1,0]\n");
    CHECK_THROWS_AS(qel::variety_dim(m), qel::InputError);
  }
  SUBCASE("inhomogeneous output") {
    auto m = qel::parse_model(
        "variables: 2\noutputs: 1\noutput: 1 [2,0] 1 [1,0]\n");
    CHECK_THROWS_AS(qel::variety_dim(m), qel::InputError);
  }
  SUBCASE("zero map") {
    auto m = qel::parse_model("variables: 2\noutputs: 1\noutput:\n");
    CHECK_THROWS_AS(qel::variety_dim(m), qel::InputError);
  }
}

TEST_CASE("a parsed document goes through the full verification") {
  // twisted cubic: the classical degree-3 curve with a defective secant
  auto m = qel::parse_model(
      "model: twisted-cubic\n"
      "variables: 2\n"
      "outputs: 4\n"
      "output: 1 [3,0]\n"
      "output: 1 [2,1]\n"
      "output: 1 [1,2]\n"
      "output: 1 [0,3]\n");
  CHECK(qel::variety_dim(m) == 1);
  CHECK(qel::secant_dim(m) == 3);
  CHECK(qel::secant_defect(m) == 0);
  CHECK(qel::quadric_space_dim(m) == 3);
  auto rep = qel::verify_model(m);
  CHECK(rep.all_match);  // nothing claimed, nothing to contradict
  CHECK(rep.n == 1);
  CHECK(rep.secant == 3);
}

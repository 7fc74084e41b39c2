#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <random>
#include <vector>

#include "qel/polynomial.hpp"

using qel::PrimeField;
using qel::SparsePolynomial;
using qel::Term;

namespace {

// Reference evaluator over the integers with 128-bit accumulation; the
// library path reduces mod p term by term, so both must agree.
__int128 eval_int(const SparsePolynomial& f,
                  const std::vector<long long>& point) {
  __int128 acc = 0;
  for (const auto& t : f.terms()) {
    __int128 v = t.coeff;
    for (std::size_t i = 0; i < t.exps.size(); ++i)
      for (std::uint32_t e = 0; e < t.exps[i]; ++e) v *= point[i];
    acc += v;
  }
  return acc;
}

std::uint64_t reduce128(__int128 v, const PrimeField& f) {
  long long p = static_cast<long long>(f.modulus());
  long long r = static_cast<long long>(v % p);
  if (r < 0) r += p;
  return static_cast<std::uint64_t>(r);
}

}  // namespace

TEST_CASE("canonical form merges and drops terms") {
  SparsePolynomial f(2, {Term{2, {1, 0}}, Term{3, {1, 0}}, Term{1, {0, 1}},
                         Term{-1, {0, 1}}});
  // 5x after merging, the y terms cancel
  REQUIRE(f.terms().size() == 1);
  CHECK(f.terms()[0].coeff == 5);
  CHECK(f.terms()[0].exps == std::vector<std::uint32_t>{1, 0});

  SparsePolynomial zero(3, {Term{4, {1, 1, 0}}, Term{-4, {1, 1, 0}}});
  CHECK(zero.is_zero());
}

TEST_CASE("arithmetic matches the integer oracle") {
  // f = x^2 + 2xy - 3, g = y^2 - x
  SparsePolynomial f(2, {Term{1, {2, 0}}, Term{2, {1, 1}}, Term{-3, {0, 0}}});
  SparsePolynomial g(2, {Term{1, {0, 2}}, Term{-1, {1, 0}}});
  PrimeField field;

  std::mt19937_64 gen(31337);
  for (int i = 0; i < 100; ++i) {
    std::vector<long long> pt = {static_cast<long long>(gen() % 1000) - 500,
                                 static_cast<long long>(gen() % 1000) - 500};
    std::vector<std::uint64_t> ppt = {field.reduce_int(pt[0]),
                                      field.reduce_int(pt[1])};
    CHECK((f + g).eval(ppt, field) ==
          reduce128(eval_int(f, pt) + eval_int(g, pt), field));
    CHECK((f - g).eval(ppt, field) ==
          reduce128(eval_int(f, pt) - eval_int(g, pt), field));
    CHECK((f * g).eval(ppt, field) ==
          reduce128(eval_int(f, pt) * eval_int(g, pt), field));
    CHECK(f.negated().eval(ppt, field) ==
          reduce128(-eval_int(f, pt), field));
  }
}

TEST_CASE("derivative against the univariate substitution oracle") {
  // h(x, y) = 3x^4 y + x y^3 - 7y.  dh/dx = 12x^3 y + y^3,
  // dh/dy = 3x^4 + 3x y^2 - 7, both worked by hand.
  SparsePolynomial h(2, {Term{3, {4, 1}}, Term{1, {1, 3}}, Term{-7, {0, 1}}});
  SparsePolynomial dx_expect(
      2, {Term{12, {3, 1}}, Term{1, {0, 3}}});
  SparsePolynomial dy_expect(
      2, {Term{3, {4, 0}}, Term{3, {1, 2}}, Term{-7, {0, 0}}});
  CHECK(h.derivative(0) == dx_expect);
  CHECK(h.derivative(1) == dy_expect);

  // exponent dropping to zero removes the variable
  SparsePolynomial lin(1, {Term{5, {1}}});
  CHECK(lin.derivative(0) == SparsePolynomial::constant(1, 5));
  CHECK(SparsePolynomial::constant(1, 9).derivative(0).is_zero());
}

TEST_CASE("product rule holds on random cubics") {
  std::mt19937_64 gen(515);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Term> ft, gt;
    for (int t = 0; t < 4; ++t) {
      ft.push_back(Term{static_cast<long long>(gen() % 11) - 5,
                        {static_cast<std::uint32_t>(gen() % 3),
                         static_cast<std::uint32_t>(gen() % 3)}});
      gt.push_back(Term{static_cast<long long>(gen() % 11) - 5,
                        {static_cast<std::uint32_t>(gen() % 3),
                         static_cast<std::uint32_t>(gen() % 3)}});
    }
    SparsePolynomial f(2, ft), g(2, gt);
    for (std::size_t v = 0; v < 2; ++v) {
      SparsePolynomial lhs = (f * g).derivative(v);
      SparsePolynomial rhs = f.derivative(v) * g + f * g.derivative(v);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("degree and homogeneity") {
  SparsePolynomial f(2, {Term{1, {2, 0}}, Term{4, {1, 1}}});
  CHECK(f.total_degree() == 2);
  CHECK(f.is_homogeneous());
  SparsePolynomial g(2, {Term{1, {2, 0}}, Term{1, {0, 1}}});
  CHECK_FALSE(g.is_homogeneous());
  CHECK(SparsePolynomial(2).is_zero());
  CHECK(SparsePolynomial::quadratic_monomial(3, 2, 0, 2) ==
        SparsePolynomial(3, {Term{2, {1, 0, 1}}}));
}

TEST_CASE("jets carry consistent values, gradients and hessians") {
  // map (x, y) -> (x^2 y, x y + y^3)
  qel::PolynomialMap map;
  map.nvars = 2;
  map.outputs.push_back(SparsePolynomial(2, {Term{1, {2, 1}}}));
  map.outputs.push_back(SparsePolynomial(2, {Term{1, {1, 1}}, Term{1, {0, 3}}}));

  PrimeField field(1000003);
  std::vector<std::uint64_t> pt = {field.reduce_int(5), field.reduce_int(7)};
  qel::Jet jet = qel::eval_and_partials(map, pt, 2, field);

  REQUIRE(jet.values.size() == 2);
  CHECK(jet.values[0] == field.reduce_int(25 * 7));
  CHECK(jet.values[1] == field.reduce_int(35 + 343));

  // d(x^2 y) = (2xy, x^2); d(xy + y^3) = (y, x + 3y^2)
  CHECK(jet.jacobian[0][0] == field.reduce_int(70));
  CHECK(jet.jacobian[0][1] == field.reduce_int(25));
  CHECK(jet.jacobian[1][0] == field.reduce_int(7));
  CHECK(jet.jacobian[1][1] == field.reduce_int(5 + 147));

  // hessian of x^2 y: [[2y, 2x], [2x, 0]]
  CHECK(jet.hessians[0][0 * 2 + 0] == field.reduce_int(14));
  CHECK(jet.hessians[0][0 * 2 + 1] == field.reduce_int(10));
  CHECK(jet.hessians[0][1 * 2 + 0] == field.reduce_int(10));
  CHECK(jet.hessians[0][1 * 2 + 1] == 0);
  // hessian of xy + y^3: [[0, 1], [1, 6y]]
  CHECK(jet.hessians[1][0 * 2 + 1] == 1);
  CHECK(jet.hessians[1][1 * 2 + 1] == field.reduce_int(42));

  // the jacobian matrix route agrees with the jet rows
  qel::ExactMatrix jac = map.jacobian(pt, field);
  for (std::size_t o = 0; o < 2; ++o)
    for (std::size_t v = 0; v < 2; ++v)
      CHECK(jac.at(o, v) == jet.jacobian[o][v]);
}

TEST_CASE("map evaluation matches per-output evaluation") {
  qel::PolynomialMap map;
  map.nvars = 3;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i; j < 3; ++j)
      map.outputs.push_back(SparsePolynomial::quadratic_monomial(3, 1, i, j));
  CHECK_FALSE(map.is_zero_map());

  PrimeField field;
  std::vector<std::uint64_t> pt = {2, 3, 5};
  auto vals = map.eval(pt, field);
  REQUIRE(vals.size() == map.outputs.size());
  for (std::size_t k = 0; k < vals.size(); ++k)
    CHECK(vals[k] == map.outputs[k].eval(pt, field));
}

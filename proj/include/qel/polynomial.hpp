#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qel/matrix.hpp"
#include "qel/prime_field.hpp"

namespace qel {

// One monomial with an integer coefficient.  Exponent vectors are dense over
// the variable set of the owning polynomial.
struct Term {
  long long coeff = 0;
  std::vector<std::uint32_t> exps;
};

// Sparse multivariate polynomial with integer coefficients, kept in a
// canonical form: terms sorted by exponent vector, merged, zero coefficients
// dropped.  Differentiation is symbolic; evaluation reduces into a prime
// field, so eval_p(f, x) = eval_Z(f, lift(x)) mod p by construction.
class SparsePolynomial {
 public:
  explicit SparsePolynomial(std::size_t nvars) : nvars_(nvars) {}
  SparsePolynomial(std::size_t nvars, std::vector<Term> terms);

  static SparsePolynomial constant(std::size_t nvars, long long c);
  static SparsePolynomial monomial(std::size_t nvars, long long coeff,
                                   std::vector<std::uint32_t> exps);
  // Convenience for the catalog builders: coeff * x_i * x_j (i == j squares).
  static SparsePolynomial quadratic_monomial(std::size_t nvars,
                                             long long coeff, std::size_t i,
                                             std::size_t j);

  std::size_t nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  long long total_degree() const;
  bool is_homogeneous() const;

  SparsePolynomial operator+(const SparsePolynomial& rhs) const;
  SparsePolynomial operator-(const SparsePolynomial& rhs) const;
  SparsePolynomial operator*(const SparsePolynomial& rhs) const;
  SparsePolynomial negated() const;

  SparsePolynomial derivative(std::size_t var) const;

  std::uint64_t eval(std::span<const std::uint64_t> point,
                     const PrimeField& field) const;

  friend bool operator==(const SparsePolynomial& a, const SparsePolynomial& b);

 private:
  void normalize();

  std::size_t nvars_;
  std::vector<Term> terms_;
};

// A polynomial parametrization A^nvars -> A^(outputs).  For the projective
// models in the catalog every output is homogeneous of the same degree, so
// the image is the affine cone over the projective variety.
struct PolynomialMap {
  std::size_t nvars = 0;
  std::vector<SparsePolynomial> outputs;

  std::vector<std::uint64_t> eval(std::span<const std::uint64_t> point,
                                  const PrimeField& field) const;
  // Rows are outputs, columns are variables.
  ExactMatrix jacobian(std::span<const std::uint64_t> point,
                       const PrimeField& field) const;
  bool is_zero_map() const;
};

// Value, first and (optionally) second partials of a map at a point.
struct Jet {
  std::vector<std::uint64_t> values;
  std::vector<std::vector<std::uint64_t>> jacobian;  // [output][var]
  // hessians[output] is the full symmetric matrix of second partials,
  // flattened row-major over nvars x nvars.
  std::vector<std::vector<std::uint64_t>> hessians;
};

// order 0: values only, 1: plus first partials, 2: plus second partials.
Jet eval_and_partials(const PolynomialMap& map,
                      std::span<const std::uint64_t> point, int order,
                      const PrimeField& field);

}  // namespace qel

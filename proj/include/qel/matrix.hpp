#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "qel/prime_field.hpp"
#include "qel/rational.hpp"

namespace qel {

// Dense matrix over a prime field with exact elimination.  Sizes here are
// desk scale (a few hundred rows at most), so a plain O(n^3) reduction with
// full pivoting by first nonzero entry is all we need.
class ExactMatrix {
 public:
  ExactMatrix(std::size_t rows, std::size_t cols, PrimeField field)
      : rows_(rows), cols_(cols), field_(field), a_(rows * cols, 0) {}

  static ExactMatrix identity(std::size_t n, PrimeField field);
  static ExactMatrix from_rows(
      const std::vector<std::vector<std::uint64_t>>& rows, PrimeField field);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const PrimeField& field() const { return field_; }

  std::uint64_t at(std::size_t r, std::size_t c) const {
    return a_[r * cols_ + c];
  }
  std::uint64_t& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }

  ExactMatrix transposed() const;
  ExactMatrix operator*(const ExactMatrix& rhs) const;

  // Appends the columns of rhs (row counts must agree).
  ExactMatrix hstacked(const ExactMatrix& rhs) const;
  // Appends the rows of rhs (column counts must agree).
  ExactMatrix vstacked(const ExactMatrix& rhs) const;

  std::vector<std::uint64_t> apply(std::span<const std::uint64_t> v) const;

  struct Echelon;

  Echelon rref() const;
  std::size_t rank() const;

  // Basis of {v : A v = 0}; size is cols() - rank().  Vectors come out of the
  // reduced echelon form: one per free column, with a 1 in the free slot.
  std::vector<std::vector<std::uint64_t>> kernel_basis() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  PrimeField field_;
  std::vector<std::uint64_t> a_;
};

struct ExactMatrix::Echelon {
  ExactMatrix mat;                 // reduced row echelon form
  std::vector<std::size_t> pivots; // pivot column per nonzero row
};

// Lifts a residue to the unique rational a/b with |a| <= bound,
// 0 < b <= bound, gcd(a, b) = 1 and a = r b (mod p), when one exists.
// Standard half-extended Euclid; requires 2 bound^2 < p.
std::optional<Rational> rational_reconstruct(std::uint64_t residue,
                                             const PrimeField& field,
                                             long long bound);

}  // namespace qel

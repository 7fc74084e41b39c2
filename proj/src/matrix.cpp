#include "qel/matrix.hpp"

#include <cstdlib>

namespace qel {

bool is_prime_u64(std::uint64_t m) {
  if (m < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (m % p == 0) return m == p;
  }
  std::uint64_t d = m - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  auto mulmod = [m](std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b %
                                      m);
  };
  auto powmod = [&](std::uint64_t a, std::uint64_t e) {
    std::uint64_t acc = 1;
    a %= m;
    while (e != 0) {
      if (e & 1) acc = mulmod(acc, a);
      a = mulmod(a, a);
      e >>= 1;
    }
    return acc;
  };
  // This base set is a proven deterministic witness family for 64 bits.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d);
    if (x == 1 || x == m - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x);
      if (x == m - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

ExactMatrix ExactMatrix::identity(std::size_t n, PrimeField field) {
  ExactMatrix m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::from_rows(
    const std::vector<std::vector<std::uint64_t>>& rows, PrimeField field) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows.front().size();
  ExactMatrix m(r, c, field);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c)
      throw InputError("from_rows: ragged row lengths");
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j] % field.modulus();
  }
  return m;
}

ExactMatrix ExactMatrix::transposed() const {
  ExactMatrix t(cols_, rows_, field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw InputError("matrix product shape mismatch");
  ExactMatrix out(rows_, rhs.cols_, field_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      std::uint64_t v = at(i, k);
      if (v == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j)
        out.at(i, j) = field_.add(out.at(i, j), field_.mul(v, rhs.at(k, j)));
    }
  }
  return out;
}

ExactMatrix ExactMatrix::hstacked(const ExactMatrix& rhs) const {
  if (rows_ != rhs.rows_) throw InputError("hstack row count mismatch");
  ExactMatrix out(rows_, cols_ + rhs.cols_, field_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
    for (std::size_t j = 0; j < rhs.cols_; ++j)
      out.at(i, cols_ + j) = rhs.at(i, j);
  }
  return out;
}

ExactMatrix ExactMatrix::vstacked(const ExactMatrix& rhs) const {
  if (cols_ != rhs.cols_) throw InputError("vstack column count mismatch");
  ExactMatrix out(rows_ + rhs.rows_, cols_, field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
  for (std::size_t i = 0; i < rhs.rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(rows_ + i, j) = rhs.at(i, j);
  return out;
}

std::vector<std::uint64_t> ExactMatrix::apply(
    std::span<const std::uint64_t> v) const {
  if (v.size() != cols_) throw InputError("apply: vector length mismatch");
  std::vector<std::uint64_t> out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < cols_; ++j)
      acc = field_.add(acc, field_.mul(at(i, j), v[j]));
    out[i] = acc;
  }
  return out;
}

ExactMatrix::Echelon ExactMatrix::rref() const {
  Echelon e{*this, {}};
  ExactMatrix& m = e.mat;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t piv = row;
    while (piv < rows_ && m.at(piv, col) == 0) ++piv;
    if (piv == rows_) continue;
    if (piv != row)
      for (std::size_t j = col; j < cols_; ++j)
        std::swap(m.at(piv, j), m.at(row, j));
    std::uint64_t inv = field_.inv(m.at(row, col));
    for (std::size_t j = col; j < cols_; ++j)
      m.at(row, j) = field_.mul(m.at(row, j), inv);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == row) continue;
      std::uint64_t f = m.at(i, col);
      if (f == 0) continue;
      for (std::size_t j = col; j < cols_; ++j)
        m.at(i, j) = field_.sub(m.at(i, j), field_.mul(f, m.at(row, j)));
    }
    e.pivots.push_back(col);
    ++row;
  }
  return e;
}

std::size_t ExactMatrix::rank() const { return rref().pivots.size(); }

std::vector<std::vector<std::uint64_t>> ExactMatrix::kernel_basis() const {
  Echelon e = rref();
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;

  std::vector<std::vector<std::uint64_t>> basis;
  for (std::size_t freec = 0; freec < cols_; ++freec) {
    if (is_pivot[freec]) continue;
    std::vector<std::uint64_t> v(cols_, 0);
    v[freec] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      v[e.pivots[r]] = field_.neg(e.mat.at(r, freec));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Rational> rational_reconstruct(std::uint64_t residue,
                                             const PrimeField& field,
                                             long long bound) {
  if (bound <= 0) throw InputError("reconstruction bound must be positive");
  // Invariant down the remainder sequence: r_i = t_i * residue (mod p).
  long long r0 = static_cast<long long>(field.modulus());
  long long r1 = static_cast<long long>(residue % field.modulus());
  long long t0 = 0, t1 = 1;
  while (r1 > bound) {
    long long q = r0 / r1;
    long long r2 = r0 - q * r1;
    long long t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  long long den = t1 < 0 ? -t1 : t1;
  long long num = t1 < 0 ? -r1 : r1;
  if (den == 0 || den > bound) return std::nullopt;
  if (std::gcd(num < 0 ? -num : num, den) != 1) return std::nullopt;
  return Rational(num, den);
}

}  // namespace qel

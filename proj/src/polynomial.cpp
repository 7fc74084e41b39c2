#include "qel/polynomial.hpp"

#include <algorithm>
#include <map>

namespace qel {

SparsePolynomial::SparsePolynomial(std::size_t nvars, std::vector<Term> terms)
    : nvars_(nvars), terms_(std::move(terms)) {
  for (const Term& t : terms_)
    if (t.exps.size() != nvars_)
      throw InputError("term exponent arity does not match variable count");
  normalize();
}

void SparsePolynomial::normalize() {
  std::map<std::vector<std::uint32_t>, long long> acc;
  for (Term& t : terms_) acc[t.exps] += t.coeff;
  terms_.clear();
  for (auto& [exps, coeff] : acc)
    if (coeff != 0) terms_.push_back(Term{coeff, exps});
}

SparsePolynomial SparsePolynomial::constant(std::size_t nvars, long long c) {
  return SparsePolynomial(nvars,
                          {Term{c, std::vector<std::uint32_t>(nvars, 0)}});
}

SparsePolynomial SparsePolynomial::monomial(std::size_t nvars, long long coeff,
                                            std::vector<std::uint32_t> exps) {
  return SparsePolynomial(nvars, {Term{coeff, std::move(exps)}});
}

SparsePolynomial SparsePolynomial::quadratic_monomial(std::size_t nvars,
                                                      long long coeff,
                                                      std::size_t i,
                                                      std::size_t j) {
  std::vector<std::uint32_t> e(nvars, 0);
  ++e[i];
  ++e[j];
  return monomial(nvars, coeff, std::move(e));
}

long long SparsePolynomial::total_degree() const {
  long long d = -1;
  for (const Term& t : terms_) {
    long long s = 0;
    for (std::uint32_t e : t.exps) s += e;
    d = std::max(d, s);
  }
  return d;  // -1 for the zero polynomial
}

bool SparsePolynomial::is_homogeneous() const {
  long long d = -1;
  for (const Term& t : terms_) {
    long long s = 0;
    for (std::uint32_t e : t.exps) s += e;
    if (d == -1) d = s;
    if (s != d) return false;
  }
  return true;
}

SparsePolynomial SparsePolynomial::operator+(
    const SparsePolynomial& rhs) const {
  if (nvars_ != rhs.nvars_) throw InputError("polynomial arity mismatch");
  std::vector<Term> all = terms_;
  all.insert(all.end(), rhs.terms_.begin(), rhs.terms_.end());
  return SparsePolynomial(nvars_, std::move(all));
}

SparsePolynomial SparsePolynomial::negated() const {
  std::vector<Term> out = terms_;
  for (Term& t : out) t.coeff = -t.coeff;
  return SparsePolynomial(nvars_, std::move(out));
}

SparsePolynomial SparsePolynomial::operator-(
    const SparsePolynomial& rhs) const {
  return *this + rhs.negated();
}

SparsePolynomial SparsePolynomial::operator*(
    const SparsePolynomial& rhs) const {
  if (nvars_ != rhs.nvars_) throw InputError("polynomial arity mismatch");
  std::vector<Term> out;
  out.reserve(terms_.size() * rhs.terms_.size());
  for (const Term& a : terms_) {
    for (const Term& b : rhs.terms_) {
      Term t;
      t.coeff = a.coeff * b.coeff;
      t.exps.resize(nvars_);
      for (std::size_t v = 0; v < nvars_; ++v)
        t.exps[v] = a.exps[v] + b.exps[v];
      out.push_back(std::move(t));
    }
  }
  return SparsePolynomial(nvars_, std::move(out));
}

SparsePolynomial SparsePolynomial::derivative(std::size_t var) const {
  if (var >= nvars_) throw InputError("derivative variable out of range");
  std::vector<Term> out;
  for (const Term& t : terms_) {
    if (t.exps[var] == 0) continue;
    Term d = t;
    d.coeff = t.coeff * static_cast<long long>(t.exps[var]);
    --d.exps[var];
    out.push_back(std::move(d));
  }
  return SparsePolynomial(nvars_, std::move(out));
}

std::uint64_t SparsePolynomial::eval(std::span<const std::uint64_t> point,
                                     const PrimeField& field) const {
  if (point.size() != nvars_)
    throw InputError("evaluation point arity does not match variable count");
  std::uint64_t acc = 0;
  for (const Term& t : terms_) {
    std::uint64_t v = field.reduce_int(t.coeff);
    for (std::size_t i = 0; i < nvars_ && v != 0; ++i) {
      std::uint32_t e = t.exps[i];
      if (e == 0) continue;
      v = field.mul(v, e == 1 ? point[i] % field.modulus()
                              : field.pow(point[i], e));
    }
    acc = field.add(acc, v);
  }
  return acc;
}

bool operator==(const SparsePolynomial& a, const SparsePolynomial& b) {
  if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].coeff != b.terms_[i].coeff ||
        a.terms_[i].exps != b.terms_[i].exps)
      return false;
  return true;
}

std::vector<std::uint64_t> PolynomialMap::eval(
    std::span<const std::uint64_t> point, const PrimeField& field) const {
  std::vector<std::uint64_t> out;
  out.reserve(outputs.size());
  for (const SparsePolynomial& f : outputs) out.push_back(f.eval(point, field));
  return out;
}

ExactMatrix PolynomialMap::jacobian(std::span<const std::uint64_t> point,
                                    const PrimeField& field) const {
  ExactMatrix j(outputs.size(), nvars, field);
  for (std::size_t r = 0; r < outputs.size(); ++r)
    for (std::size_t c = 0; c < nvars; ++c)
      j.at(r, c) = outputs[r].derivative(c).eval(point, field);
  return j;
}

bool PolynomialMap::is_zero_map() const {
  for (const SparsePolynomial& f : outputs)
    if (!f.is_zero()) return false;
  return true;
}

Jet eval_and_partials(const PolynomialMap& map,
                      std::span<const std::uint64_t> point, int order,
                      const PrimeField& field) {
  if (order < 0 || order > 2)
    throw InputError("jet order must be 0, 1 or 2");
  if (point.size() != map.nvars)
    throw InputError("evaluation point arity does not match variable count");
  Jet jet;
  jet.values = map.eval(point, field);
  if (order < 1) return jet;

  std::size_t a = map.nvars;
  for (const SparsePolynomial& f : map.outputs) {
    std::vector<std::uint64_t> row(a);
    std::vector<SparsePolynomial> firsts;
    firsts.reserve(a);
    for (std::size_t v = 0; v < a; ++v) {
      firsts.push_back(f.derivative(v));
      row[v] = firsts.back().eval(point, field);
    }
    jet.jacobian.push_back(std::move(row));
    if (order < 2) continue;
    std::vector<std::uint64_t> hess(a * a, 0);
    for (std::size_t v = 0; v < a; ++v) {
      for (std::size_t w = v; w < a; ++w) {
        std::uint64_t val = firsts[v].derivative(w).eval(point, field);
        hess[v * a + w] = val;
        hess[w * a + v] = val;
      }
    }
    jet.hessians.push_back(std::move(hess));
  }
  return jet;
}

}  // namespace qel

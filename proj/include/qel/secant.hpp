#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qel/model.hpp"
#include "qel/prime_field.hpp"

namespace qel {

inline constexpr std::uint64_t kDefaultSeed = 1729;

// Probe configuration shared by all geometric operations.  Each operation
// derives its per-trial seeds from (seed, operation tag, trial counter), so
// results depend only on this struct, never on call order.
struct ProbeConfig {
  std::uint64_t seed = kDefaultSeed;
  int trials = 5;
  std::uint64_t prime = kDefaultPrime;
};

// Flat indexing of the degree-2 monomials x_i x_j (i <= j) on ncoords
// coordinates, in lexicographic pair order.
struct QuadMonomialIndex {
  explicit QuadMonomialIndex(std::size_t ncoords) : ncoords(ncoords) {}
  std::size_t ncoords;
  std::size_t size() const { return ncoords * (ncoords + 1) / 2; }
  std::size_t flat(std::size_t i, std::size_t j) const {
    // requires i <= j
    return i * ncoords - i * (i - 1) / 2 + (j - i);
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    out.reserve(size());
    for (std::size_t i = 0; i < ncoords; ++i)
      for (std::size_t j = i; j < ncoords; ++j) out.emplace_back(i, j);
    return out;
  }
};

// A quadric with integer coefficients in the monomial basis above, lifted
// from the working prime field by rational reconstruction and re-verified
// against fresh points of the model.
struct IntegerQuadric {
  std::vector<long long> coeffs;
};

// dim X: max over trials of rank J(x) minus 1 (ranks live on the affine
// cone, so every parametrization here is homogeneous).
long long variety_dim(const VarietyModel& m, const ProbeConfig& cfg = {});

// dim SX by the classical tangent-join rule: rank [J(x) | J(y)] - 1 at two
// independent random points.
long long secant_dim(const VarietyModel& m, const ProbeConfig& cfg = {});

// 2 dim X + 1 - dim SX.
long long secant_defect(const VarietyModel& m, const ProbeConfig& cfg = {});

// dim |II| at a general point: rank of the stacked rows (value, first
// partials, second partials) minus dim X minus 2.
long long second_form_dim(const VarietyModel& m, const ProbeConfig& cfg = {});

// h^0(I_X(2)): kernel dimension of the evaluation matrix of all degree-2
// monomials at 2 * (#monomials) random points of the model.
long long quadric_space_dim(const VarietyModel& m, const ProbeConfig& cfg = {});

// Integer basis of the quadrics through the model (see IntegerQuadric).
std::vector<IntegerQuadric> quadric_generators(const VarietyModel& m,
                                               const ProbeConfig& cfg = {});

// Line-direction point count over one small prime field.
struct YxCount {
  long long q = 0;
  long long candidates = 0;  // #P^(n-1)(F_q)
  long long count = 0;
};

struct YxEstimate {
  std::string model;
  long long quadrics_used = 0;
  std::vector<YxCount> counts;
  bool no_lines = false;
  std::optional<double> slope;  // least-squares log count vs log q
};

// Heuristic dimension estimate for the locus of lines through a general
// point: counts tangent directions v over F_q with B_Q(x, v) = 0 and
// Q(v) = 0 for every quadric Q through the model, then fits the growth of
// the count in q.  Exact ranks it is not; the report flags it HEURISTIC.
YxEstimate yx_dim_estimate(const VarietyModel& m,
                           const std::vector<long long>& primes,
                           const ProbeConfig& cfg = {});

// One verified or cross-checked field of a model report.
struct FieldCheck {
  std::string field;
  std::optional<long long> computed;
  std::optional<long long> claimed;
  bool match = false;
  std::vector<std::string> citations;
  std::string note;
};

struct GeometryReport {
  std::string model;
  std::uint64_t seed = 0;
  bool has_map = false;
  std::optional<long long> n;
  std::optional<long long> ambient;
  std::optional<long long> secant;
  std::optional<long long> delta;
  std::optional<long long> ii;
  std::optional<long long> quadrics;
  std::vector<FieldCheck> checks;
  std::vector<std::string> errors;
  bool all_match = false;
};

// Computes every geometric invariant the model supports, compares with the
// claimed values and the theorem-derived values, and records tower-link
// arithmetic.  Invariants-only entries get the arithmetic checks alone.
GeometryReport verify_model(const VarietyModel& m, const ProbeConfig& cfg = {});

}  // namespace qel

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qel/polynomial.hpp"

namespace qel {

// Multiset of splitting exponents of the tangent bundle along a general
// line: exponent -> multiplicity.
struct LineSplitting {
  long long twos = 0;
  long long ones = 0;
  long long zeros = 0;
};

// The numeric profile of a quadratic-entry-locus manifold of dimension n,
// ambient dimension N and secant defect delta.  Everything past the first
// three fields is derived arithmetic; optional fields are absent where the
// underlying statement does not apply (see rules registry).
struct LqelInvariants {
  long long n = 0;
  long long N = 0;
  long long delta = 0;

  long long secant_dim = 0;  // 2n + 1 - delta
  std::optional<long long> r_x;  // floor((delta-1)/2), delta >= 1
  std::optional<long long> index;  // (n+delta)/2, delta >= 3 and n+delta even
  std::optional<long long> conic_degree;         // n + delta, delta >= 1
  std::optional<long long> conic_family_dim;     // 2n + delta - 3
  std::optional<long long> conics_through_point; // n + delta - 2
  long long tangential_image_dim = 0;            // n - delta
  std::optional<LineSplitting> splitting;  // delta >= 3 and n+delta even
};

// A note a model carries: free text plus an anchor into the rules registry.
struct ModelNote {
  std::string text;
  std::string anchor;
};

// A catalog entry: an optional exact parametrization of the affine cone plus
// claimed invariants.  Invariants-only entries (no map) still take part in
// every arithmetic check; the geometric probes skip them.
struct VarietyModel {
  std::string name;
  std::optional<PolynomialMap> map;
  LqelInvariants claimed;
  // False for parsed documents without a claimed block; verification then
  // reports computed values without a diff.
  bool claims_present = true;
  // Expected dimension of the space of quadrics through the model, where a
  // closed count is known for the family.
  std::optional<long long> claimed_quadrics;
  std::optional<std::string> yx_link;  // catalog name of the line-locus model
  std::vector<ModelNote> notes;
};

}  // namespace qel

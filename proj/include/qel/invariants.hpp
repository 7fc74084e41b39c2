#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qel/model.hpp"
#include "qel/rational.hpp"

namespace qel {

// floor((delta - 1) / 2): the largest r with delta >= 2r + 1.
long long r_x(long long delta);

// Fills the derived fields of LqelInvariants from (n, N, delta).
// Requires 0 <= delta <= n <= N.
LqelInvariants derived_invariants(long long n, long long N, long long delta);

// Convenience overload for contexts with no meaningful ambient dimension
// (N is set to the secant dimension, the smallest possible ambient).
LqelInvariants derived_invariants(long long n, long long delta);

// One level of the iterated line-locus tower.  All three size fields are
// exact rationals: a fractional value is a first-class non-existence
// witness, never an error.
struct TowerLevel {
  int k = 0;
  Rational dim;
  long long delta_k = 0;
  Rational ambient;
  Rational codim;
  bool integral = false;
  bool terminal = false;  // delta_k < 3: no further descent
};

struct TowerReport {
  long long n = 0;
  long long delta = 0;
  long long levels_total = 0;  // r_x(delta)
  std::vector<TowerLevel> levels;
  bool all_integral = false;
};

// Closed-form tower for delta >= 3:
//   dim_k = (n + (2^k - 1) delta) / 2^k - 2k
//   delta_k = delta - 2k
//   ambient_k = dim_{k-1} - 1
//   codim_k = (n - delta) / 2^k + 1
TowerReport tower(long long n, long long delta);

struct DivisibilityWitness {
  bool applicable = false;  // delta >= 3
  bool pass = false;
  long long r = 0;
  long long modulus = 1;  // 2^r
  long long n_minus_delta = 0;
  long long remainder = 0;
};

// 2^(r_x) | n - delta, the arithmetic obstruction for delta >= 3.
DivisibilityWitness divisibility_check(long long n, long long delta);

enum class RuleVerdict { pass, fail, not_applicable };

struct RuleResult {
  std::string anchor;  // rules registry key
  RuleVerdict verdict = RuleVerdict::not_applicable;
  std::string detail;
};

enum class Feasibility { feasible, constrained, infeasible };

// constrained == feasible, but pinned to the named classification cases.
struct AdmissibilityVerdict {
  long long n = 0;
  long long delta = 0;
  std::optional<long long> ambient;
  std::vector<RuleResult> rules;
  Feasibility overall = Feasibility::feasible;
  std::vector<std::string> identified;
};

// Applies every applicable arithmetic constraint on (n, delta) and, when
// given, on the ambient dimension N.  Requires 1 <= delta <= n.
AdmissibilityVerdict admissibility(long long n, long long delta,
                                   std::optional<long long> ambient);

struct ClassifiedPair {
  long long n = 0;
  long long delta = 0;
  std::string label;
};

// All (n, delta) with n/2 < delta < n, re-derived from the constraint system
// delta > m * 2^r, n = delta + m * 2^r (delta >= 3) plus the direct scan for
// delta <= 2.  The search bounds exist only to make the loops finite; the
// output provably stabilizes, which the tests check by raising them.
std::vector<ClassifiedPair> enumerate_high_defect(long long r_bound = 8,
                                                  long long m_bound = 64);

// Constraint system for delta = n/2, n >= 6:
//   delta = 2 r_x + 2, 2^(r_x) | n/2, n = 4 (r_x + 1) = m 2^(r_x + 1).
// n < 6 is unconstrained.  Returns true when an LQEL manifold with
// delta = n/2 can exist in dimension n.
bool half_defect_admissible(long long n);

// All even n <= n_max passing half_defect_admissible.
std::vector<long long> enumerate_half_defect(long long n_max);

// General hyperplane section: (n, delta) -> (n - 1, delta - 1).
// Requires delta >= 1.
std::pair<long long, long long> section_invariants(long long n,
                                                   long long delta);

struct HartshorneThreshold {
  long long n = 0;
  Rational yx_dim;     // 3n/4 - 2
  Rational hartshorne; // 2(n-1)/3
  bool pass = false;   // yx_dim > hartshorne, i.e. n > 16
};

// Compares the half-defect line-locus dimension with the classical
// low-codimension threshold.  Requires n even, n >= 6.
HartshorneThreshold hartshorne_threshold(long long n);

}  // namespace qel

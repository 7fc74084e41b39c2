#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qel/invariants.hpp"

namespace qel {

inline constexpr const char* kBranchDeltaZero = "delta-zero";
inline constexpr const char* kBranchFano = "fano-branch";
inline constexpr const char* kBranchInfeasible = "infeasible";

// One candidate base locus of a quadro-degree-d birational self-map of
// projective space, with every arithmetic constraint that was applied.
// delta and ambient are set only when (n + 2) / d is integral; the secant
// hypersurface forces ambient = 2n + 2 - delta.
struct CremonaReport {
  long long d1 = 2;
  long long d2 = 0;
  long long n = 0;
  std::optional<long long> delta;
  std::optional<long long> ambient;
  std::optional<long long> secant_degree;  // 2 d2 - 1
  std::optional<long long> fano_index;     // (n + delta) / 2 when integral
  std::string branch;
  std::vector<RuleResult> rules;
};

// Invariants and constraint verdicts for one (d, n) candidate.
// Requires d >= 2 and n >= 1.
CremonaReport type2d_invariants(long long d, long long n);

struct CremonaScan {
  long long d = 0;
  long long n_max = 0;          // bound actually scanned
  long long default_bound = 0;  // d (2 r_max + 3) - 2, see below
  long long r_max = 0;
  bool bound_overridden = false;
  std::vector<CremonaReport> rows;  // surviving candidates in n order
};

// Scans every dimension up to n_max (default: the self-derived bound) and
// keeps the candidates passing all constraints.  The divisibility obstruction
// 2^r <= d(2r + 3) - 2 caps r, hence caps n; the default bound is the
// dimension at that largest r, so the default scan is provably complete.
CremonaScan classify_type2d(long long d,
                            std::optional<long long> n_max = std::nullopt);

// A transformation type realizable on P^(2n+1), pinned by the degree
// relation n + 2 = d2 ((2 - d1) n + 2) plus the classification of the
// delta = 1 branch.
struct SelfDualCandidate {
  long long d1 = 0;
  long long d2 = 0;
  long long n = 0;
  std::string description;
  std::vector<RuleResult> rules;
};

std::vector<SelfDualCandidate> classify_2n_plus_1();

}  // namespace qel

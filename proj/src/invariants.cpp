#include "qel/invariants.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "qel/rules.hpp"

namespace qel {

long long r_x(long long delta) {
  if (delta < 1)
    throw InputError("r_x is not applicable for delta < 1");
  return (delta - 1) / 2;
}

LqelInvariants derived_invariants(long long n, long long N, long long delta) {
  if (n < 1) throw InputError("dimension n must be positive");
  if (delta < 0 || delta > n)
    throw InputError("the secant defect must satisfy 0 <= delta <= n");
  if (N < n) throw InputError("ambient dimension must be at least n");

  LqelInvariants inv;
  inv.n = n;
  inv.N = N;
  inv.delta = delta;
  inv.secant_dim = 2 * n + 1 - delta;
  inv.tangential_image_dim = n - delta;
  if (delta >= 1) {
    inv.r_x = r_x(delta);
    inv.conic_degree = n + delta;
    inv.conic_family_dim = 2 * n + delta - 3;
    inv.conics_through_point = n + delta - 2;
  }
  if (delta >= 3 && (n + delta) % 2 == 0) {
    inv.index = (n + delta) / 2;
    LineSplitting s;
    s.twos = 1;
    s.ones = (n + delta) / 2 - 2;
    s.zeros = (n - delta) / 2 + 1;
    inv.splitting = s;
  }
  return inv;
}

LqelInvariants derived_invariants(long long n, long long delta) {
  long long secant = 2 * n + 1 - delta;
  return derived_invariants(n, std::max(n, secant), delta);
}

TowerReport tower(long long n, long long delta) {
  if (delta < 3)
    throw InputError("tower undefined: requires type delta >= 3");
  if (delta > n)
    throw InputError("the secant defect must satisfy delta <= n");
  // The closed form carries 2^(r_x) in exact 64-bit rationals; these caps
  // keep every numerator far from overflow and are generous for the use
  // cases (the property grid stops at n = 64).
  if (n > 1000000000) throw InputError("tower inputs are capped at n <= 10^9");
  if (delta > 100) throw InputError("tower inputs are capped at delta <= 100");

  TowerReport rep;
  rep.n = n;
  rep.delta = delta;
  rep.levels_total = r_x(delta);
  rep.all_integral = true;

  Rational prev_dim(n);
  long long pow2 = 1;
  for (int k = 1; k <= rep.levels_total; ++k) {
    pow2 *= 2;
    TowerLevel lvl;
    lvl.k = k;
    lvl.dim = Rational(n + (pow2 - 1) * delta, pow2) - Rational(2 * k);
    lvl.delta_k = delta - 2 * k;
    lvl.ambient = prev_dim - Rational(1);
    lvl.codim = Rational(n - delta, pow2) + Rational(1);
    lvl.integral =
        lvl.dim.is_integer() && lvl.ambient.is_integer() && lvl.codim.is_integer();
    lvl.terminal = lvl.delta_k < 3;
    rep.all_integral = rep.all_integral && lvl.integral;
    prev_dim = lvl.dim;
    rep.levels.push_back(lvl);
  }
  return rep;
}

DivisibilityWitness divisibility_check(long long n, long long delta) {
  if (delta < 0 || delta > n)
    throw InputError("the secant defect must satisfy 0 <= delta <= n");
  DivisibilityWitness w;
  w.n_minus_delta = n - delta;
  if (delta < 3) return w;  // not applicable, pass vacuously absent
  w.applicable = true;
  w.r = r_x(delta);
  if (w.r > 62) {
    // 2^r exceeds the 64-bit range, so it divides no representable nonzero
    // value.  modulus = 0 flags the saturation for the detail printers.
    w.modulus = 0;
    w.remainder = n - delta;
    w.pass = n == delta;
    return w;
  }
  w.modulus = 1ll << w.r;
  w.remainder = (n - delta) % w.modulus;
  w.pass = w.remainder == 0;
  return w;
}

namespace {

std::string pair_str(long long n, long long delta) {
  return "(n, delta) = (" + std::to_string(n) + ", " + std::to_string(delta) +
         ")";
}

}  // namespace

AdmissibilityVerdict admissibility(long long n, long long delta,
                                   std::optional<long long> ambient) {
  if (n < 1) throw InputError("dimension n must be positive");
  if (n > 1000000000)
    throw InputError("admissibility checks are capped at n <= 10^9");
  if (delta < 1 || delta > n)
    throw InputError("admissibility requires 1 <= delta <= n");

  AdmissibilityVerdict v;
  v.n = n;
  v.delta = delta;
  v.ambient = ambient;

  auto push = [&](const std::string& anchor, RuleVerdict verdict,
                  std::string detail) {
    rule(anchor);  // validate the anchor
    v.rules.push_back(RuleResult{anchor, verdict, std::move(detail)});
  };

  if (delta == n) {
    if (ambient && *ambient != n + 1) {
      push("extremal-quadric", RuleVerdict::fail,
           "delta = n forces a quadric hypersurface with N = " +
               std::to_string(n + 1) + ", but N = " + std::to_string(*ambient));
    } else {
      push("extremal-quadric", RuleVerdict::pass,
           "identified as the quadric hypersurface Q^" + std::to_string(n));
      v.identified.push_back("quadric hypersurface Q^" + std::to_string(n) +
                             " in P^" + std::to_string(n + 1));
    }
  } else {
    push("extremal-quadric", RuleVerdict::not_applicable, "delta < n");
  }

  if (delta == n - 1 && delta >= 1) {
    if (n == 2 || n == 3) {
      push("near-extremal", RuleVerdict::pass,
           "delta = n - 1 admits n = " + std::to_string(n));
      v.identified.push_back(
          n == 3 ? "Segre threefold P^1 x P^2 in P^5"
                 : "cubic scroll S(1,2) or Veronese surface (projections "
                   "allowed)");
    } else {
      push("near-extremal", RuleVerdict::fail,
           "delta = n - 1 forces n in {2, 3}, but n = " + std::to_string(n));
    }
  } else {
    push("near-extremal", RuleVerdict::not_applicable, "delta != n - 1");
  }

  if (2 * delta > n && delta < n) {
    const auto classified = enumerate_high_defect();
    auto hit = std::find_if(classified.begin(), classified.end(),
                            [&](const ClassifiedPair& p) {
                              return p.n == n && p.delta == delta;
                            });
    if (hit != classified.end()) {
      push("high-defect-classification", RuleVerdict::pass,
           pair_str(n, delta) + " is the classified case: " + hit->label);
      v.identified.push_back(hit->label);
    } else {
      push("high-defect-classification", RuleVerdict::fail,
           pair_str(n, delta) + " is not among {(3,2), (5,3), (6,4), (9,5), "
                                "(10,6)}");
    }
  } else {
    push("high-defect-classification", RuleVerdict::not_applicable,
         "needs n/2 < delta < n");
  }

  if (2 * delta == n) {
    if (half_defect_admissible(n)) {
      push("half-defect-classification", RuleVerdict::pass,
           "delta = n/2 admits n = " + std::to_string(n));
      v.identified.push_back("half-defect (Severi-type) case, n = " +
                             std::to_string(n));
    } else {
      push("half-defect-classification", RuleVerdict::fail,
           "delta = n/2 forces n in {2, 4, 8, 16}, but n = " +
               std::to_string(n));
    }
  } else {
    push("half-defect-classification", RuleVerdict::not_applicable,
         "delta != n/2");
  }

  if (delta >= 3) {
    if ((n - delta) % 2 == 0) {
      push("parity", RuleVerdict::pass,
           "n - delta = " + std::to_string(n - delta) + " is even");
    } else {
      push("parity", RuleVerdict::fail,
           "n - delta = " + std::to_string(n - delta) +
               " is odd, impossible for delta >= 3");
    }
    DivisibilityWitness w = divisibility_check(n, delta);
    const std::string modulus_str =
        w.modulus == 0 ? "2^" + std::to_string(w.r) + " (beyond 64-bit range)"
                       : "2^" + std::to_string(w.r) + " = " +
                             std::to_string(w.modulus);
    if (w.pass) {
      push("divisibility", RuleVerdict::pass,
           modulus_str +
               " divides n - delta = " + std::to_string(w.n_minus_delta));
    } else {
      push("divisibility", RuleVerdict::fail,
           "n - delta = " + std::to_string(w.n_minus_delta) + " leaves " +
               std::to_string(w.remainder) + " mod " + modulus_str);
    }
  } else {
    push("parity", RuleVerdict::not_applicable, "delta < 3");
    push("divisibility", RuleVerdict::not_applicable, "delta < 3");
  }

  if (ambient) {
    long long secant = 2 * n + 1 - delta;
    if (*ambient < secant) {
      push("secant-bound", RuleVerdict::fail,
           "dim SX = 2n + 1 - delta = " + std::to_string(secant) +
               " cannot exceed N = " + std::to_string(*ambient));
    } else {
      push("secant-bound", RuleVerdict::pass,
           "N = " + std::to_string(*ambient) +
               " >= dim SX = " + std::to_string(secant));
    }
    long long bound = n * (n + 3) / 2;
    if (*ambient > bound) {
      push("ambient-bound", RuleVerdict::fail,
           "N = " + std::to_string(*ambient) + " exceeds n(n + 3)/2 = " +
               std::to_string(bound));
    } else {
      push("ambient-bound", RuleVerdict::pass,
           "N = " + std::to_string(*ambient) + " <= n(n + 3)/2 = " +
               std::to_string(bound));
    }
  }

  bool failed = std::any_of(v.rules.begin(), v.rules.end(),
                            [](const RuleResult& r) {
                              return r.verdict == RuleVerdict::fail;
                            });
  if (failed)
    v.overall = Feasibility::infeasible;
  else if (!v.identified.empty())
    v.overall = Feasibility::constrained;
  else
    v.overall = Feasibility::feasible;
  return v;
}

std::vector<ClassifiedPair> enumerate_high_defect(long long r_bound,
                                                  long long m_bound) {
  if (r_bound < 1 || m_bound < 1)
    throw InputError("search bounds must be positive");
  if (r_bound > 62)
    throw InputError("r_bound must stay within the 64-bit power range");

  static const std::map<std::pair<long long, long long>, std::string> labels =
      {
          {{3, 2}, "Segre threefold P^1 x P^2 in P^5"},
          {{5, 3}, "general hyperplane section of G(1,4)"},
          {{6, 4}, "Pluecker embedding G(1,4) in P^9"},
          {{9, 5}, "general hyperplane section of S^10"},
          {{10, 6}, "10-dimensional spinor variety S^10 in P^15"},
      };

  std::vector<ClassifiedPair> out;
  auto add = [&](long long n, long long delta) {
    ClassifiedPair p{n, delta, ""};
    auto hit = labels.find({n, delta});
    if (hit != labels.end()) p.label = hit->second;
    out.push_back(std::move(p));
  };

  // delta <= 2: the window delta < n < 2 delta is scanned directly.
  for (long long delta = 1; delta <= 2; ++delta)
    for (long long n = delta + 1; n < 2 * delta; ++n) add(n, delta);

  // delta >= 3: divisibility writes n = delta + m 2^r with m >= 1 and
  // n/2 < delta reads delta > m 2^r.  The bounds only cap the loops; the
  // inequality itself dies long before any sane bound.
  for (long long r = 1; r <= r_bound; ++r) {
    long long pow2 = 1ll << r;
    for (long long delta : {2 * r + 1, 2 * r + 2}) {
      for (long long m = 1; m <= m_bound; ++m) {
        if (delta <= m * pow2) break;
        add(delta + m * pow2, delta);
      }
    }
  }

  std::sort(out.begin(), out.end(),
            [](const ClassifiedPair& a, const ClassifiedPair& b) {
              return std::tie(a.n, a.delta) < std::tie(b.n, b.delta);
            });
  return out;
}

bool half_defect_admissible(long long n) {
  if (n < 1) throw InputError("dimension n must be positive");
  if (n % 2 != 0) return false;
  if (n < 6) return true;
  // 2^r divides v; r can exceed the shift range, where only 0 qualifies.
  auto pow2_divides = [](long long r, long long v) {
    if (r > 62) return v == 0;
    return v % (1ll << r) == 0;
  };
  long long delta = n / 2;
  long long r = r_x(delta);
  if (delta != 2 * r + 2) return false;  // delta must be even
  if (!pow2_divides(r, n / 2)) return false;
  if (n != 4 * (r + 1)) return false;
  if (!pow2_divides(r + 1, n)) return false;
  return true;
}

std::vector<long long> enumerate_half_defect(long long n_max) {
  if (n_max < 1) throw InputError("n_max must be positive");
  std::vector<long long> out;
  for (long long n = 2; n <= n_max; n += 2)
    if (half_defect_admissible(n)) out.push_back(n);
  return out;
}

std::pair<long long, long long> section_invariants(long long n,
                                                   long long delta) {
  if (delta < 1)
    throw InputError("hyperplane section step not applicable for delta = 0");
  if (delta > n || n < 2)
    throw InputError("section requires 1 <= delta <= n and n >= 2");
  return {n - 1, delta - 1};
}

HartshorneThreshold hartshorne_threshold(long long n) {
  if (n < 6 || n % 2 != 0)
    throw InputError(
        "threshold comparison not applicable: requires even n >= 6");
  HartshorneThreshold t;
  t.n = n;
  t.yx_dim = Rational(3 * n, 4) - Rational(2);
  t.hartshorne = Rational(2 * (n - 1), 3);
  t.pass = t.yx_dim > t.hartshorne;
  return t;
}

}  // namespace qel

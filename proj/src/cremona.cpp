#include "qel/cremona.hpp"

#include <string>

#include "qel/errors.hpp"

namespace qel {
namespace {

RuleResult rule_result(const char* anchor, RuleVerdict verdict,
                       std::string detail) {
  RuleResult r;
  r.anchor = anchor;
  r.verdict = verdict;
  r.detail = std::move(detail);
  return r;
}

void check_degree(long long d) {
  if (d < 2) throw InputError("transformation degree must be at least 2");
  if (d > 1000000)
    throw InputError("transformation degree is capped at 10^6");
}

std::string pow2_str(long long r, long long modulus) {
  if (modulus == 0) return "2^" + std::to_string(r) + " (beyond 64-bit range)";
  return "2^" + std::to_string(r) + " = " + std::to_string(modulus);
}

}  // namespace

CremonaReport type2d_invariants(long long d, long long n) {
  check_degree(d);
  if (n < 1) throw InputError("dimension must be at least 1");
  if (n > 1000000000)
    throw InputError("candidate dimension is capped at 10^9");

  CremonaReport rep;
  rep.d1 = 2;
  rep.d2 = d;
  rep.n = n;
  rep.secant_degree = 2 * d - 1;

  if ((n + 2) % d != 0) {
    rep.branch = kBranchInfeasible;
    rep.rules.push_back(rule_result(
        "cremona-defect", RuleVerdict::fail,
        "(n + 2) / d = " + std::to_string(n + 2) + "/" + std::to_string(d) +
            " is not an integer"));
    return rep;
  }
  long long delta = (n + 2) / d - 1;
  rep.rules.push_back(rule_result(
      "cremona-defect", RuleVerdict::pass,
      "delta = (n + 2)/d - 1 = " + std::to_string(delta)));
  rep.delta = delta;
  rep.ambient = 2 * n + 2 - delta;

  bool ok = true;
  if (delta == 0) {
    // Both parities of d keep this branch: defect zero already forces
    // n = d - 2 and ambient 2d - 2.
    rep.rules.push_back(rule_result(
        "cremona-zero-branch", RuleVerdict::pass,
        "defect-zero center with n = d - 2 = " + std::to_string(d - 2) +
            ", ambient 2d - 2"));
  } else if (delta == 1) {
    if (d == 2) {
      rep.rules.push_back(rule_result(
          "cremona-no-delta-one", RuleVerdict::pass,
          "defect one survives only at degree 2 (Veronese surface center)"));
    } else {
      ok = false;
      rep.rules.push_back(rule_result(
          "cremona-no-delta-one", RuleVerdict::fail,
          "no center of defect one exists once d reaches 3"));
    }
  } else if (delta == 2) {
    if (d % 2 == 0) {
      rep.rules.push_back(rule_result(
          "cremona-delta-two", RuleVerdict::pass,
          "defect two forces n = 3d - 2 with d even"));
    } else {
      ok = false;
      rep.rules.push_back(rule_result(
          "cremona-delta-two", RuleVerdict::fail,
          "defect two needs even degree; n = 3d - 2 would be odd"));
    }
  } else {
    bool even = delta % 2 == 0 && n % 2 == 0 && d % 2 == 0;
    rep.rules.push_back(rule_result(
        "cremona-parity", even ? RuleVerdict::pass : RuleVerdict::fail,
        "defect >= 3 forces delta, n and d all even"));
    ok = ok && even;

    auto w = divisibility_check(n, delta);
    rep.rules.push_back(rule_result(
        "divisibility", w.pass ? RuleVerdict::pass : RuleVerdict::fail,
        "n - delta = " + std::to_string(w.n_minus_delta) + " against " +
            pow2_str(w.r, w.modulus)));
    ok = ok && w.pass;

    if (d >= 4 && d % 2 == 0) {
      // The published even-degree bound divides d(2r + 3) - 2 = n itself.
      // It is kept as its own constraint beside the congruence above; the
      // two differ once r is 2 or exceeds 3.
      long long r = r_x(delta);
      long long modulus = r > 62 ? 0 : 1ll << r;
      long long value = d * (2 * r + 3) - 2;
      bool pass = modulus != 0 && value % modulus == 0;
      rep.rules.push_back(rule_result(
          "cremona-even-bound", pass ? RuleVerdict::pass : RuleVerdict::fail,
          "d(2r + 3) - 2 = " + std::to_string(value) + " against " +
              pow2_str(r, modulus)));
      ok = ok && pass;
    }
  }

  if (!ok) {
    rep.branch = kBranchInfeasible;
    return rep;
  }

  rep.branch = delta == 0 ? kBranchDeltaZero : kBranchFano;
  if (delta >= 1 && (n + delta) % 2 == 0) {
    // ((n - 1)(d + 1) + 3) / (2d) simplifies to (n + delta) / 2 on this
    // branch, since n = d(delta + 1) - 2.
    rep.fano_index = (n + delta) / 2;
    rep.rules.push_back(rule_result(
        "cremona-fano-index", RuleVerdict::pass,
        "index ((n - 1)(d + 1) + 3)/(2d) = " +
            std::to_string(*rep.fano_index)));
  }
  if (d == 2 && delta >= 1) {
    rep.rules.push_back(rule_result(
        "severi-classification", RuleVerdict::pass,
        "degree-2 center: Severi variety of dimension " + std::to_string(n) +
            " in ambient 3n/2 + 2"));
  }
  return rep;
}

CremonaScan classify_type2d(long long d, std::optional<long long> n_max) {
  check_degree(d);

  CremonaScan scan;
  scan.d = d;
  // Largest r >= 1 with 2^r <= d(2r + 3) - 2.  Beyond it the divisibility
  // obstruction can no longer hold, because the modulus 2^r outgrows
  // n - delta < d(2r + 3) - 2.
  long long r = 1;
  while ((2ll << r) <= d * (2 * (r + 1) + 3) - 2) ++r;
  scan.r_max = r;
  scan.default_bound = d * (2 * r + 3) - 2;

  scan.n_max = n_max.value_or(scan.default_bound);
  scan.bound_overridden = n_max.has_value();
  if (scan.n_max < 1)
    throw InputError("scan bound must be at least 1, got " +
                     std::to_string(scan.n_max));

  for (long long n = 1; n <= scan.n_max; ++n) {
    CremonaReport rep = type2d_invariants(d, n);
    if (rep.branch != kBranchInfeasible) scan.rows.push_back(std::move(rep));
  }
  return scan;
}

std::vector<SelfDualCandidate> classify_2n_plus_1() {
  // Degree relation on P^(2n+1): n + 2 = d2 ((2 - d1) n + 2).  For d1 >= 3
  // the bracket is non-positive once n >= 2, so n = 1 and d2 (4 - d1) = 3,
  // leaving (3, 3, 1).  For d1 = 2 the relation reads n = 2 d2 - 2 and the
  // center is a defect-one manifold, which pins the Veronese surface and
  // with it (2, 2, 2).
  std::vector<SelfDualCandidate> out;

  SelfDualCandidate veronese;
  veronese.d1 = 2;
  veronese.d2 = 2;
  veronese.n = 2;
  veronese.description =
      "Veronese surface in P^5; the map sends a conic to its dual conic";
  veronese.rules.push_back(rule_result(
      "cremona-2nplus1", RuleVerdict::pass,
      "n + 2 = 4 = d2 ((2 - d1) n + 2) with d1 = d2 = 2"));
  veronese.rules.push_back(rule_result(
      "cremona-no-delta-one", RuleVerdict::pass,
      "defect-one center in P^(2n+1) must be the Veronese surface"));
  out.push_back(std::move(veronese));

  SelfDualCandidate sextic;
  sextic.d1 = 3;
  sextic.d2 = 3;
  sextic.n = 1;
  sextic.description =
      "non-hyperelliptic sextic curve of genus 3 in P^3; self-dual type";
  sextic.rules.push_back(rule_result(
      "cremona-2nplus1", RuleVerdict::pass,
      "d1 >= 3 forces n = 1 and d2 (4 - d1) = 3, so d1 = d2 = 3"));
  out.push_back(std::move(sextic));

  return out;
}

}  // namespace qel

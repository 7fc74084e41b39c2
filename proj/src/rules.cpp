#include "qel/rules.hpp"

#include <string>

#include "qel/errors.hpp"

namespace qel {

const std::vector<Rule>& all_rules() {
  static const std::vector<Rule> table = {
      {"defect-definition",
       "the secant defect is delta = 2n + 1 - dim SX; equivalently "
       "dim SX = 2n + 1 - delta."},
      {"secant-bound",
       "n + 1 <= dim SX <= min(N, 2n + 1) for a nondegenerate non-linear "
       "variety."},
      {"hyperplane-section",
       "a general hyperplane section of an LQEL manifold of type delta >= 1 "
       "is LQEL with (n, delta) -> (n - 1, delta - 1)."},
      {"extremal-quadric",
       "delta = n exactly for quadric hypersurfaces, which have N = n + 1."},
      {"near-extremal",
       "delta = n - 1 >= 1 forces n = 2 or n = 3: the Segre threefold "
       "P^1 x P^2 in P^5, its hyperplane sections, the Veronese surface or "
       "one of its projections."},
      {"second-form-dimension",
       "for an LQEL manifold of type delta >= 1, the second fundamental "
       "form at a general point has dim |II| = N - n - 1."},
      {"ambient-bound",
       "for an LQEL manifold of type delta >= 1, N <= n(n + 3)/2."},
      {"conic-degree",
       "the entry-locus conics C satisfy -K_X . C = n + delta."},
      {"conic-family",
       "the covering family of entry-locus conics has dimension "
       "2n + delta - 3."},
      {"conics-through-point",
       "the entry-locus conics through a general point form a family of "
       "dimension n + delta - 2."},
      {"tangential-image",
       "the general tangential projection of an LQEL manifold has image of "
       "dimension n - delta."},
      {"parity",
       "an LQEL manifold of type delta >= 3 has n = delta (mod 2)."},
      {"fano-index",
       "an LQEL manifold of type delta >= 3 is Fano with index "
       "(n + delta)/2."},
      {"line-splitting",
       "along a general line, the tangent bundle splits as O(2) + "
       "O(1)^((n + delta)/2 - 2) + O^((n - delta)/2 + 1)."},
      {"yx-dimension",
       "for type delta >= 3 the locus Y_x of line directions through a "
       "general point is a QEL manifold in P^(n-1) of dimension "
       "(n + delta)/2 - 2 and type delta - 2, spanning and with secant "
       "variety equal to P^(n-1)."},
      {"yx-component-bound",
       "two distinct irreducible components of the line locus Y_x in "
       "P^(n-1) have dimensions summing to at most n - 2; equidimensional "
       "pieces of dimension (n + delta)/2 - 2 with delta >= 3 would exceed "
       "that, so Y_x is irreducible."},
      {"tower-dimensions",
       "level k of the line-locus tower satisfies dim X^k = "
       "(n + (2^k - 1) delta)/2^k - 2k, lives in P^(dim X^(k-1) - 1) and "
       "has codim X^k = (n - delta)/2^k + 1."},
      {"tower-recursion",
       "each tower level repeats the line-locus step: dim_k = "
       "(dim_(k-1) + delta_(k-1))/2 - 2, delta_k = delta_(k-1) - 2, "
       "ambient_k = dim_(k-1) - 1."},
      {"divisibility",
       "for an LQEL manifold of type delta >= 3, 2^(r_X) divides n - delta, "
       "where r_X = floor((delta - 1)/2)."},
      {"high-defect-classification",
       "n/2 < delta < n happens exactly for (n, delta) in {(3,2), (5,3), "
       "(6,4), (9,5), (10,6)}; for delta >= 3 this follows from "
       "n = delta + m 2^(r_X) with delta > m 2^(r_X)."},
      {"half-defect-classification",
       "delta = n/2 forces n in {2, 4, 8, 16}; for n >= 6 the constraints "
       "are delta = 2 r_X + 2, 2^(r_X) | n/2 and n = 4(r_X + 1) = "
       "m 2^(r_X + 1)."},
      {"hartshorne-threshold",
       "the half-defect line locus has dim Y_x = 3n/4 - 2, which exceeds "
       "the low-codimension threshold 2(n - 1)/3 exactly when n > 16."},
      {"segre-type",
       "Segre products P^l x P^m (l, m >= 1) are QEL of type delta = 2; the "
       "line locus is the disjoint union P^(l-1) u P^(m-1)."},
      {"segre-quadrics",
       "the quadrics through P^l x P^m are the 2x2 minors of the generic "
       "(l+1) x (m+1) matrix: C(l+1,2) C(m+1,2) of them."},
      {"veronese-type",
       "the quadratic Veronese embedding of P^k is QEL of type delta = 1 "
       "and carries no lines."},
      {"veronese-quadrics",
       "the quadrics through the quadratic Veronese variety are the 2x2 "
       "minors of the generic symmetric (k+1) x (k+1) matrix."},
      {"grassmann-type",
       "Grassmannians of lines G(1, r) are QEL of type delta = 4; the line "
       "locus is P^1 x P^(r-2)."},
      {"grassmann-quadrics",
       "G(1, r) in Pluecker coordinates is cut out by the C(r+1, 4) "
       "Pluecker quadrics."},
      {"quadric-type",
       "a smooth quadric hypersurface Q^n has delta = n; its line locus is "
       "a smooth quadric Q^(n-2)."},
      {"spinor-invariants",
       "the 10-dimensional spinor variety S^10 in P^15 is QEL of type "
       "delta = 6, Fano of index 8, cut out by 10 quadrics; its line locus "
       "is G(1, 4) in P^9."},
      {"e6-invariants",
       "the E6 variety in P^26 has n = 16, delta = 8, Fano index 12; it is "
       "the center of a (2,2) special Cremona transformation."},
      {"e6-tower-link",
       "the line locus of the E6 variety is the 10-dimensional spinor "
       "variety in P^15; recorded here from the classification literature "
       "and checked arithmetically, not rebuilt geometrically."},
      {"cremona-defect",
       "the center of a special Cremona transformation of type (2, d) is a "
       "QEL manifold with delta = (n + 2)/d - 1, N = 2n + 2 - delta, and "
       "SX a hypersurface of degree 2d - 1."},
      {"cremona-zero-branch",
       "for d >= 3 the non-Fano alternative is N = 2d - 2, n = d - 2, "
       "delta = 0; for odd d it is the only one."},
      {"cremona-no-delta-one",
       "no special Cremona transformation of type (2, d) with d >= 3 has a "
       "center of type delta = 1."},
      {"cremona-delta-two",
       "a type (2, d) center with delta = 2 has n = 3d - 2 and n even, "
       "forcing d even."},
      {"cremona-parity",
       "a type (2, d) center with delta >= 3 has delta, n and d all even."},
      {"cremona-fano-index",
       "for even d a positive-defect type (2, d) center is Fano of index "
       "((n - 1)(d + 1) + 3)/(2d) = (n + delta)/2."},
      {"cremona-even-bound",
       "for even d and delta = 2 r_X + 2 >= 3, 2^(r_X) must divide "
       "d(2 r_X + 3) - 2; since 2^(r_X) eventually outgrows that value, "
       "the search for candidates is finite."},
      {"severi-classification",
       "the centers of (2,2) special Cremona transformations are the four "
       "Severi varieties: n in {2, 4, 8, 16}, delta = n/2, N = 3n/2 + 2."},
      {"cremona-2nplus1",
       "a QEL center X in P^(2n+1) of a (d1, d2) special birational map "
       "onto a quadric satisfies 2 + n = d2 ((2 - d1) n + 2); only "
       "(d1, d2, n) = (2, 2, 2) and (3, 3, 1) survive, the Veronese surface "
       "and the degree-6 genus-3 curve."},
      {"COMPUTED",
       "the value was measured by the engine itself (exact rank or kernel "
       "computation at random points over the working prime field)."},
      {"HEURISTIC",
       "the value is a finite-field point-count estimate, not an exact "
       "computation; use the exact routes for certification."},
  };
  return table;
}

const Rule& rule(std::string_view anchor) {
  for (const Rule& r : all_rules())
    if (r.anchor == anchor) return r;
  throw InputError("unknown rule anchor: " + std::string(anchor));
}

}  // namespace qel

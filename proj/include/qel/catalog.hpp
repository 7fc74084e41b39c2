#pragma once

#include <string>
#include <vector>

#include "qel/model.hpp"

namespace qel {

// Exact parametrizations of the worked models.  Every builder emits a map
// whose outputs are homogeneous of degree 2 in the parameters, so the image
// is the affine cone over the projective model and the rank conventions of
// the probe engine apply uniformly.  Graph-style charts (quadric, spinor)
// carry an extra homogenizing parameter for the same reason.

// P^l x P^m, all products u_i v_j.  l, m >= 1.
VarietyModel build_segre(long long l, long long m);

// Quadratic Veronese embedding of P^k, all degree-2 monomials.  k >= 2.
VarietyModel build_veronese2(long long k);

// Grassmannian of lines G(1, r) by 2x2 minors of a 2 x (r+1) matrix.  r >= 3.
VarietyModel build_grassmann_lines(long long r);

// Smooth n-dimensional quadric: homogenized graph chart
// (z^2 : z t_1 : ... : z t_n : t_1^2 + ... + t_n^2).  n >= 1.
VarietyModel build_quadric(long long n);

// 10-dimensional spinor variety: homogenized big cell
// (z^2 : z a_ij : pf_0 .. pf_4) over the 5x5 antisymmetric matrix a,
// pf_k the 4x4 sub-Pfaffian omitting row and column k.
VarietyModel build_spinor10();

// Invariants-only entry for the E6 variety in P^26 (no parametrization; the
// tower link to spinor10 is recorded and checked arithmetically).
VarietyModel build_e6();

// Fixed catalog: segre(1,2), segre(2,2), segre(1,3), veronese2(2),
// grassmann_lines(4), grassmann_lines(5), quadric(2..8), spinor10, e6.
const std::vector<VarietyModel>& catalog_entries();

// Catalog lookup by exact name; falls back to parsing a family name such as
// "segre(3,4)" so off-catalog members remain reachable.  Throws InputError
// for unknown names or out-of-range parameters.
VarietyModel find_model(const std::string& name);

}  // namespace qel

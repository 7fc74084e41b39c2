#include "qel/catalog.hpp"

#include <array>

#include "qel/invariants.hpp"

namespace qel {

namespace {

long long choose(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

SparsePolynomial product(std::size_t nvars, std::size_t i, std::size_t j) {
  return SparsePolynomial::quadratic_monomial(nvars, 1, i, j);
}

}  // namespace

VarietyModel build_segre(long long l, long long m) {
  if (l < 1 || m < 1)
    throw InputError("segre(l,m) requires l, m >= 1");
  std::size_t nvars = static_cast<std::size_t>(l + m + 2);
  PolynomialMap map;
  map.nvars = nvars;
  // u_i are variables 0..l, v_j are variables l+1..l+m+1.
  for (long long i = 0; i <= l; ++i)
    for (long long j = 0; j <= m; ++j)
      map.outputs.push_back(product(nvars, i, l + 1 + j));

  VarietyModel mod;
  mod.name = "segre(" + std::to_string(l) + "," + std::to_string(m) + ")";
  mod.map = std::move(map);
  mod.claimed =
      derived_invariants(l + m, (l + 1) * (m + 1) - 1, 2);
  mod.claimed_quadrics = choose(l + 1, 2) * choose(m + 1, 2);
  mod.notes.push_back({"defect 2, line locus P^(l-1) u P^(m-1)", "segre-type"});
  mod.notes.push_back({"quadrics through the model: the 2x2 minors",
                       "segre-quadrics"});
  return mod;
}

VarietyModel build_veronese2(long long k) {
  if (k < 2) throw InputError("veronese2(k) requires k >= 2");
  std::size_t nvars = static_cast<std::size_t>(k + 1);
  PolynomialMap map;
  map.nvars = nvars;
  for (long long i = 0; i <= k; ++i)
    for (long long j = i; j <= k; ++j)
      map.outputs.push_back(product(nvars, i, j));

  VarietyModel mod;
  mod.name = "veronese2(" + std::to_string(k) + ")";
  mod.map = std::move(map);
  mod.claimed = derived_invariants(k, choose(k + 2, 2) - 1, 1);
  // Quadrics through the model: S^2(S^2 V) minus S^4 V.
  long long M = choose(k + 2, 2);
  mod.claimed_quadrics = choose(M + 1, 2) - choose(k + 4, 4);
  mod.notes.push_back({"defect 1, no lines", "veronese-type"});
  mod.notes.push_back(
      {"quadrics through the model: symmetric 2x2 minors", "veronese-quadrics"});
  return mod;
}

VarietyModel build_grassmann_lines(long long r) {
  if (r < 3) throw InputError("grassmann_lines(r) requires r >= 3");
  std::size_t nvars = static_cast<std::size_t>(2 * (r + 1));
  PolynomialMap map;
  map.nvars = nvars;
  // Row 0 of the 2 x (r+1) matrix is variables 0..r, row 1 is r+1..2r+1.
  auto a0 = [&](long long i) { return static_cast<std::size_t>(i); };
  auto a1 = [&](long long i) { return static_cast<std::size_t>(r + 1 + i); };
  for (long long i = 0; i <= r; ++i)
    for (long long j = i + 1; j <= r; ++j)
      map.outputs.push_back(product(nvars, a0(i), a1(j)) -
                            product(nvars, a0(j), a1(i)));

  VarietyModel mod;
  mod.name = "grassmann_lines(" + std::to_string(r) + ")";
  mod.map = std::move(map);
  mod.claimed = derived_invariants(2 * (r - 1), choose(r + 1, 2) - 1, 4);
  mod.claimed_quadrics = choose(r + 1, 4);
  mod.yx_link = "segre(1," + std::to_string(r - 2) + ")";
  mod.notes.push_back({"defect 4, line locus P^1 x P^(r-2)", "grassmann-type"});
  mod.notes.push_back({"cut out by the Pluecker quadrics", "grassmann-quadrics"});
  return mod;
}

VarietyModel build_quadric(long long n) {
  if (n < 1) throw InputError("quadric(n) requires n >= 1");
  std::size_t nvars = static_cast<std::size_t>(n + 1);
  PolynomialMap map;
  map.nvars = nvars;
  map.outputs.push_back(product(nvars, 0, 0));  // z^2
  for (long long i = 1; i <= n; ++i) map.outputs.push_back(product(nvars, 0, i));
  SparsePolynomial norm(nvars);
  for (long long i = 1; i <= n; ++i)
    norm = norm + product(nvars, i, i);
  map.outputs.push_back(norm);  // x_0 x_{n+1} = x_1^2 + ... + x_n^2 on the image

  VarietyModel mod;
  mod.name = "quadric(" + std::to_string(n) + ")";
  mod.map = std::move(map);
  mod.claimed = derived_invariants(n, n + 1, n);
  mod.claimed_quadrics = 1;
  if (n >= 3) mod.yx_link = "quadric(" + std::to_string(n - 2) + ")";
  mod.notes.push_back({"extremal defect delta = n", "quadric-type"});
  return mod;
}

VarietyModel build_spinor10() {
  // Variables: z and the upper triangle a_ij of a 5x5 antisymmetric matrix.
  constexpr std::size_t nvars = 11;
  auto aidx = [](int i, int j) {
    static constexpr int base[5] = {0, 4, 7, 9, 10};
    return static_cast<std::size_t>(1 + base[i] + (j - i - 1));
  };

  PolynomialMap map;
  map.nvars = nvars;
  map.outputs.push_back(product(nvars, 0, 0));  // z^2
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      map.outputs.push_back(product(nvars, 0, aidx(i, j)));
  // Sub-Pfaffians: omit row and column k, take the 4x4 Pfaffian
  // a_{s0 s1} a_{s2 s3} - a_{s0 s2} a_{s1 s3} + a_{s0 s3} a_{s1 s2}.
  for (int k = 0; k < 5; ++k) {
    std::array<int, 4> s{};
    int t = 0;
    for (int i = 0; i < 5; ++i)
      if (i != k) s[t++] = i;
    SparsePolynomial pf =
        product(nvars, aidx(s[0], s[1]), aidx(s[2], s[3])) -
        product(nvars, aidx(s[0], s[2]), aidx(s[1], s[3])) +
        product(nvars, aidx(s[0], s[3]), aidx(s[1], s[2]));
    map.outputs.push_back(pf);
  }

  VarietyModel mod;
  mod.name = "spinor10";
  mod.map = std::move(map);
  mod.claimed = derived_invariants(10, 15, 6);
  mod.claimed_quadrics = 10;
  mod.yx_link = "grassmann_lines(4)";
  mod.notes.push_back(
      {"defect 6, 10 quadrics, line locus G(1,4)", "spinor-invariants"});
  return mod;
}

VarietyModel build_e6() {
  VarietyModel mod;
  mod.name = "e6";
  mod.claimed = derived_invariants(16, 26, 8);
  mod.yx_link = "spinor10";
  mod.notes.push_back({"invariants-only entry, no parametrization",
                       "e6-invariants"});
  mod.notes.push_back(
      {"line-locus link to spinor10 recorded from the classification "
       "literature; checked arithmetically only",
       "e6-tower-link"});
  return mod;
}

const std::vector<VarietyModel>& catalog_entries() {
  static const std::vector<VarietyModel> entries = [] {
    std::vector<VarietyModel> v;
    v.push_back(build_segre(1, 2));
    v.push_back(build_segre(2, 2));
    v.push_back(build_segre(1, 3));
    v.push_back(build_veronese2(2));
    v.push_back(build_grassmann_lines(4));
    v.push_back(build_grassmann_lines(5));
    for (long long n = 2; n <= 8; ++n) v.push_back(build_quadric(n));
    v.push_back(build_spinor10());
    v.push_back(build_e6());
    return v;
  }();
  return entries;
}

namespace {

// Parses "family(p1,p2)" into family name and integer parameters.
bool split_family(const std::string& name, std::string& family,
                  std::vector<long long>& params) {
  auto open = name.find('(');
  if (open == std::string::npos || name.back() != ')') return false;
  family = name.substr(0, open);
  std::string inner = name.substr(open + 1, name.size() - open - 2);
  std::size_t pos = 0;
  while (pos < inner.size()) {
    std::size_t comma = inner.find(',', pos);
    std::string tok = inner.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      std::size_t used = 0;
      long long v = std::stoll(tok, &used);
      if (used != tok.size()) return false;
      params.push_back(v);
    } catch (const std::exception&) {
      return false;
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return !params.empty();
}

}  // namespace

VarietyModel find_model(const std::string& name) {
  for (const VarietyModel& m : catalog_entries())
    if (m.name == name) return m;

  std::string family;
  std::vector<long long> params;
  if (split_family(name, family, params)) {
    if (family == "segre" && params.size() == 2)
      return build_segre(params[0], params[1]);
    if (family == "veronese2" && params.size() == 1)
      return build_veronese2(params[0]);
    if (family == "grassmann_lines" && params.size() == 1)
      return build_grassmann_lines(params[0]);
    if (family == "quadric" && params.size() == 1)
      return build_quadric(params[0]);
  }
  throw InputError("unknown model: " + name);
}

}  // namespace qel

#include "qel/secant.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

#include "qel/catalog.hpp"
#include "qel/invariants.hpp"
#include "qel/matrix.hpp"
#include "qel/rng.hpp"

namespace qel {
namespace {

const PolynomialMap& require_map(const VarietyModel& m) {
  if (!m.map)
    throw InputError("model '" + m.name +
                     "' has no parametrization; only arithmetic checks apply");
  return *m.map;
}

// Every rank below is a rank on the affine cone, which is only the cone when
// all outputs are homogeneous of one shared degree.
long long common_degree(const PolynomialMap& map, const std::string& name) {
  long long deg = -1;
  for (const auto& f : map.outputs) {
    if (f.is_zero()) continue;
    if (!f.is_homogeneous())
      throw InputError("model '" + name +
                       "': outputs must be homogeneous for cone probes");
    long long d = f.total_degree();
    if (deg == -1)
      deg = d;
    else if (d != deg)
      throw InputError("model '" + name +
                       "': outputs must share one degree for cone probes");
  }
  if (deg < 1)
    throw InputError("model '" + name + "': parametrization has no terms");
  return deg;
}

void check_trials(const ProbeConfig& cfg) {
  if (cfg.trials < 1 || cfg.trials > 64)
    throw InputError("trials must lie in [1, 64], got " +
                     std::to_string(cfg.trials));
}

// Uniform parameter point whose image on the cone is nonzero.
std::vector<std::uint64_t> random_cone_point(
    SeededRng& rng, const PolynomialMap& map, const PrimeField& field,
    std::vector<std::uint64_t>* values_out = nullptr) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<std::uint64_t> pt(map.nvars);
    for (auto& v : pt) v = rng.field_element(field);
    auto vals = map.eval(pt, field);
    bool nonzero = false;
    for (auto v : vals) nonzero = nonzero || v != 0;
    if (!nonzero) continue;
    if (values_out) *values_out = std::move(vals);
    return pt;
  }
  throw DegenerateModelError(
      "no parameter point with a nonzero image after 64 draws");
}

std::uint64_t eval_lifted_quadric(const IntegerQuadric& q,
                                  const QuadMonomialIndex& idx,
                                  const std::vector<std::uint64_t>& v,
                                  const PrimeField& f) {
  std::uint64_t s = 0;
  std::size_t c = 0;
  for (std::size_t i = 0; i < idx.ncoords; ++i)
    for (std::size_t j = i; j < idx.ncoords; ++j, ++c) {
      if (q.coeffs[c] == 0) continue;
      s = f.add(s, f.mul(f.reduce_int(q.coeffs[c]), f.mul(v[i], v[j])));
    }
  return s;
}

// Polar bilinear form of the quadric: B(u, v) = Q(u + v) - Q(u) - Q(v).
std::uint64_t polar_form(const IntegerQuadric& q, const QuadMonomialIndex& idx,
                         const std::vector<std::uint64_t>& u,
                         const std::vector<std::uint64_t>& v,
                         const PrimeField& f) {
  std::uint64_t s = 0;
  std::size_t c = 0;
  for (std::size_t i = 0; i < idx.ncoords; ++i)
    for (std::size_t j = i; j < idx.ncoords; ++j, ++c) {
      if (q.coeffs[c] == 0) continue;
      std::uint64_t cf = f.reduce_int(q.coeffs[c]);
      std::uint64_t cross = i == j
                                ? f.add(f.mul(u[i], v[i]), f.mul(u[i], v[i]))
                                : f.add(f.mul(u[i], v[j]), f.mul(u[j], v[i]));
      s = f.add(s, f.mul(cf, cross));
    }
  return s;
}

ExactMatrix quadric_sample_matrix(SeededRng& rng, const PolynomialMap& map,
                                  const QuadMonomialIndex& idx,
                                  const PrimeField& field) {
  std::size_t M = idx.size();
  ExactMatrix A(2 * M, M, field);
  std::vector<std::uint64_t> vals;
  for (std::size_t r = 0; r < 2 * M; ++r) {
    random_cone_point(rng, map, field, &vals);
    std::size_t c = 0;
    for (std::size_t i = 0; i < idx.ncoords; ++i)
      for (std::size_t j = i; j < idx.ncoords; ++j, ++c)
        A.at(r, c) = field.mul(vals[i], vals[j]);
  }
  return A;
}

void check_quadric_budget(std::size_t monomials) {
  if (monomials > 5000)
    throw BudgetError("quadric evaluation matrix would need " +
                      std::to_string(monomials) +
                      " columns; the cap is 5000");
}

}  // namespace

long long variety_dim(const VarietyModel& m, const ProbeConfig& cfg) {
  const auto& map = require_map(m);
  common_degree(map, m.name);
  check_trials(cfg);
  PrimeField field(cfg.prime);
  std::size_t best = 0;
  for (int t = 0; t < cfg.trials; ++t) {
    SeededRng rng(derive_seed(cfg.seed, "variety_dim", t));
    auto pt = random_cone_point(rng, map, field);
    best = std::max(best, map.jacobian(pt, field).rank());
  }
  return static_cast<long long>(best) - 1;
}

long long secant_dim(const VarietyModel& m, const ProbeConfig& cfg) {
  const auto& map = require_map(m);
  common_degree(map, m.name);
  check_trials(cfg);
  PrimeField field(cfg.prime);
  std::size_t best = 0;
  for (int t = 0; t < cfg.trials; ++t) {
    SeededRng rng(derive_seed(cfg.seed, "secant_dim", t));
    auto x = random_cone_point(rng, map, field);
    auto y = random_cone_point(rng, map, field);
    ExactMatrix joined =
        map.jacobian(x, field).hstacked(map.jacobian(y, field));
    best = std::max(best, joined.rank());
  }
  return static_cast<long long>(best) - 1;
}

long long secant_defect(const VarietyModel& m, const ProbeConfig& cfg) {
  return 2 * variety_dim(m, cfg) + 1 - secant_dim(m, cfg);
}

long long second_form_dim(const VarietyModel& m, const ProbeConfig& cfg) {
  const auto& map = require_map(m);
  common_degree(map, m.name);
  check_trials(cfg);
  PrimeField field(cfg.prime);
  long long n = variety_dim(m, cfg);
  const std::size_t a = map.nvars;
  const std::size_t nout = map.outputs.size();
  std::size_t best = 0;
  for (int t = 0; t < cfg.trials; ++t) {
    SeededRng rng(derive_seed(cfg.seed, "second_form", t));
    auto pt = random_cone_point(rng, map, field);
    Jet jet = eval_and_partials(map, pt, 2, field);
    // Rows are the value, the first partials and the distinct second
    // partials; the row space is the affine second osculating space.
    std::vector<std::vector<std::uint64_t>> rows;
    rows.reserve(1 + a + a * (a + 1) / 2);
    rows.push_back(jet.values);
    for (std::size_t v = 0; v < a; ++v) {
      std::vector<std::uint64_t> row(nout);
      for (std::size_t o = 0; o < nout; ++o) row[o] = jet.jacobian[o][v];
      rows.push_back(std::move(row));
    }
    for (std::size_t v = 0; v < a; ++v)
      for (std::size_t w = v; w < a; ++w) {
        std::vector<std::uint64_t> row(nout);
        for (std::size_t o = 0; o < nout; ++o)
          row[o] = jet.hessians[o][v * a + w];
        rows.push_back(std::move(row));
      }
    best = std::max(best, ExactMatrix::from_rows(rows, field).rank());
  }
  return static_cast<long long>(best) - n - 2;
}

long long quadric_space_dim(const VarietyModel& m, const ProbeConfig& cfg) {
  const auto& map = require_map(m);
  common_degree(map, m.name);
  check_trials(cfg);
  PrimeField field(cfg.prime);
  QuadMonomialIndex idx(map.outputs.size());
  check_quadric_budget(idx.size());
  std::size_t best = 0;
  for (int t = 0; t < cfg.trials; ++t) {
    SeededRng rng(derive_seed(cfg.seed, "quadric_space", t));
    best = std::max(best, quadric_sample_matrix(rng, map, idx, field).rank());
  }
  return static_cast<long long>(idx.size()) - static_cast<long long>(best);
}

std::vector<IntegerQuadric> quadric_generators(const VarietyModel& m,
                                               const ProbeConfig& cfg) {
  const auto& map = require_map(m);
  common_degree(map, m.name);
  PrimeField field(cfg.prime);
  QuadMonomialIndex idx(map.outputs.size());
  check_quadric_budget(idx.size());

  constexpr long long kCoeffBound = 1 << 20;
  if (static_cast<unsigned __int128>(2) * kCoeffBound * kCoeffBound >=
      field.modulus())
    throw InputError(
        "modulus too small to lift quadric coefficients; need p > 2^41");

  SeededRng rng(derive_seed(cfg.seed, "quadric_basis", 0));
  auto kernel = quadric_sample_matrix(rng, map, idx, field).kernel_basis();

  std::vector<IntegerQuadric> out;
  out.reserve(kernel.size());
  for (const auto& vec : kernel) {
    std::vector<Rational> lifted(vec.size());
    long long scale = 1;
    for (std::size_t i = 0; i < vec.size(); ++i) {
      auto r = rational_reconstruct(vec[i], field, kCoeffBound);
      if (!r)
        throw DegenerateModelError(
            "quadric coefficient did not lift over the rationals within the "
            "height bound");
      lifted[i] = *r;
      long long g = std::gcd(scale, r->den);
      if (r->den / g > (1ll << 40) / scale)
        throw DegenerateModelError(
            "quadric denominators overflow the lifting bound");
      scale = scale / g * r->den;
    }
    IntegerQuadric q;
    q.coeffs.resize(vec.size());
    for (std::size_t i = 0; i < vec.size(); ++i)
      q.coeffs[i] = lifted[i].num * (scale / lifted[i].den);
    out.push_back(std::move(q));
  }

  // Lifted generators must vanish at fresh points the lift never saw.
  SeededRng verify_rng(derive_seed(cfg.seed, "quadric_verify", 0));
  std::vector<std::uint64_t> vals;
  for (int k = 0; k < 50; ++k) {
    random_cone_point(verify_rng, map, field, &vals);
    for (const auto& q : out)
      if (eval_lifted_quadric(q, idx, vals, field) != 0)
        throw DegenerateModelError(
            "lifted quadric failed to vanish at a fresh point of the model");
  }
  return out;
}

YxEstimate yx_dim_estimate(const VarietyModel& m,
                           const std::vector<long long>& primes,
                           const ProbeConfig& cfg) {
  const auto& map = require_map(m);
  common_degree(map, m.name);

  std::vector<long long> qs = primes;
  std::sort(qs.begin(), qs.end());
  if (qs.size() < 2)
    throw InputError("direction counting needs at least two sample primes");
  if (std::adjacent_find(qs.begin(), qs.end()) != qs.end())
    throw InputError("sample primes must be distinct");
  for (long long q : qs)
    if (q != 3 && q != 5 && q != 7)
      throw InputError("sample primes must come from {3, 5, 7}, got " +
                       std::to_string(q));

  PrimeField field(cfg.prime);
  long long n = variety_dim(m, cfg);
  if (n < 1) throw DegenerateModelError("model has dimension below 1");

  // Direction space is P^(n-1); refuse enumerations that cannot finish at
  // desk scale before doing any work.
  unsigned long long total = 0;
  for (long long q : qs) {
    unsigned long long cand = 0, power = 1;
    for (long long k = 0; k < n; ++k) {
      cand += power;
      power *= static_cast<unsigned long long>(q);
    }
    total += cand;
  }
  if (total > 200000)
    throw BudgetError("direction enumeration would visit " +
                      std::to_string(total) + " points; the cap is 200000");

  auto gens = quadric_generators(m, cfg);
  QuadMonomialIndex idx(map.outputs.size());

  YxEstimate est;
  est.model = m.name;
  est.quadrics_used = static_cast<long long>(gens.size());

  // One integer parameter point reused across all sample primes.  It has to
  // stay generic after reduction mod every q: nonzero image and a tangent
  // cone of full rank n + 1.
  const std::size_t a = map.nvars;
  std::vector<std::uint64_t> params;
  {
    SeededRng rng(derive_seed(cfg.seed, "yx_basepoint", 0));
    bool found = false;
    for (int attempt = 0; attempt < 500 && !found; ++attempt) {
      std::vector<std::uint64_t> cand(a);
      for (auto& v : cand) v = 1 + rng.below(std::uint64_t{1} << 20);
      bool ok = true;
      for (long long q : qs) {
        PrimeField fq(static_cast<std::uint64_t>(q));
        std::vector<std::uint64_t> pt(a);
        for (std::size_t i = 0; i < a; ++i) pt[i] = cand[i] % fq.modulus();
        auto vals = map.eval(pt, fq);
        bool nonzero = false;
        for (auto v : vals) nonzero = nonzero || v != 0;
        if (!nonzero ||
            map.jacobian(pt, fq).rank() != static_cast<std::size_t>(n) + 1) {
          ok = false;
          break;
        }
      }
      if (ok) {
        params = std::move(cand);
        found = true;
      }
    }
    if (!found)
      throw DegenerateModelError(
          "no integer base point stayed generic modulo every sample prime");
  }

  const std::size_t nd = static_cast<std::size_t>(n);
  QuadMonomialIndex dir_idx(nd);

  for (long long q : qs) {
    PrimeField fq(static_cast<std::uint64_t>(q));
    std::vector<std::uint64_t> pt(a);
    for (std::size_t i = 0; i < a; ++i) pt[i] = params[i] % fq.modulus();
    auto xq = map.eval(pt, fq);
    ExactMatrix jac = map.jacobian(pt, fq);

    // Row space of [x; J^T] is the affine tangent space; swap x into the
    // echelon basis and keep the other rows as a complement basis, so the
    // directions t parametrize lines through x exactly once.
    std::vector<std::vector<std::uint64_t>> rows;
    rows.reserve(1 + a);
    rows.push_back(xq);
    for (std::size_t c = 0; c < a; ++c) {
      std::vector<std::uint64_t> col(map.outputs.size());
      for (std::size_t r = 0; r < map.outputs.size(); ++r)
        col[r] = jac.at(r, c);
      rows.push_back(std::move(col));
    }
    auto ech = ExactMatrix::from_rows(rows, fq).rref();
    if (ech.pivots.size() != nd + 1)
      throw DegenerateModelError("tangent rank dropped during reduction");
    std::size_t istar = ech.pivots.size();
    for (std::size_t i = 0; i < ech.pivots.size(); ++i)
      if (xq[ech.pivots[i]] != 0) {
        istar = i;
        break;
      }
    if (istar == ech.pivots.size())
      throw DegenerateModelError("base point vanished during reduction");
    std::vector<std::vector<std::uint64_t>> basis;
    basis.reserve(nd);
    for (std::size_t i = 0; i < ech.pivots.size(); ++i) {
      if (i == istar) continue;
      std::vector<std::uint64_t> row(map.outputs.size());
      for (std::size_t c = 0; c < map.outputs.size(); ++c)
        row[c] = ech.mat.at(i, c);
      basis.push_back(std::move(row));
    }

    // For each quadric, restrict to the tangent directions once: the linear
    // condition B(x, b_i) and the reduced quadratic form on the basis.
    struct Restricted {
      std::vector<std::uint64_t> grad;
      std::vector<std::uint64_t> form;
    };
    std::vector<Restricted> restricted;
    restricted.reserve(gens.size());
    for (const auto& g : gens) {
      Restricted r;
      r.grad.resize(nd);
      for (std::size_t i = 0; i < nd; ++i)
        r.grad[i] = polar_form(g, idx, xq, basis[i], fq);
      r.form.resize(dir_idx.size());
      for (std::size_t i = 0; i < nd; ++i)
        for (std::size_t j = i; j < nd; ++j)
          r.form[dir_idx.flat(i, j)] =
              i == j ? eval_lifted_quadric(g, idx, basis[i], fq)
                     : polar_form(g, idx, basis[i], basis[j], fq);
      restricted.push_back(std::move(r));
    }

    auto admits_line = [&](const std::vector<std::uint64_t>& t) {
      for (const auto& r : restricted) {
        std::uint64_t lin = 0;
        for (std::size_t i = 0; i < nd; ++i)
          lin = fq.add(lin, fq.mul(t[i], r.grad[i]));
        if (lin != 0) return false;
        std::uint64_t quad = 0;
        for (std::size_t i = 0; i < nd; ++i) {
          if (t[i] == 0) continue;
          for (std::size_t j = i; j < nd; ++j) {
            if (t[j] == 0) continue;
            quad = fq.add(quad, fq.mul(r.form[dir_idx.flat(i, j)],
                                       fq.mul(t[i], t[j])));
          }
        }
        if (quad != 0) return false;
      }
      return true;
    };

    // Canonical representatives of P^(n-1)(F_q): first nonzero entry is 1.
    YxCount yc;
    yc.q = q;
    std::vector<std::uint64_t> t(nd, 0);
    for (std::size_t lead = 0; lead < nd; ++lead) {
      std::fill(t.begin(), t.end(), 0);
      t[lead] = 1;
      const std::size_t free = nd - lead - 1;
      std::vector<std::uint64_t> digits(free, 0);
      bool more = true;
      while (more) {
        for (std::size_t k = 0; k < free; ++k) t[lead + 1 + k] = digits[k];
        ++yc.candidates;
        if (admits_line(t)) ++yc.count;
        more = false;
        for (std::size_t k = 0; k < free; ++k) {
          if (++digits[k] < static_cast<std::uint64_t>(q)) {
            more = true;
            break;
          }
          digits[k] = 0;
        }
      }
    }
    est.counts.push_back(yc);
  }

  std::vector<double> lx, ly;
  for (const auto& c : est.counts)
    if (c.count > 0) {
      lx.push_back(std::log(static_cast<double>(c.q)));
      ly.push_back(std::log(static_cast<double>(c.count)));
    }
  est.no_lines = lx.empty();
  if (lx.size() >= 2) {
    double mx = std::accumulate(lx.begin(), lx.end(), 0.0) / lx.size();
    double my = std::accumulate(ly.begin(), ly.end(), 0.0) / ly.size();
    double num = 0, den = 0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
      num += (lx[i] - mx) * (ly[i] - my);
      den += (lx[i] - mx) * (lx[i] - mx);
    }
    if (den > 0) est.slope = num / den;
  }
  return est;
}

namespace {

void push_check(GeometryReport& rep, std::string fieldname,
                std::optional<long long> computed,
                std::optional<long long> claimed, bool match,
                std::vector<std::string> citations, std::string note = "") {
  FieldCheck fc;
  fc.field = std::move(fieldname);
  fc.computed = computed;
  fc.claimed = claimed;
  fc.match = match;
  fc.citations = std::move(citations);
  fc.note = std::move(note);
  rep.checks.push_back(std::move(fc));
}

void push_eq(GeometryReport& rep, std::string fieldname, long long computed,
             long long claimed, std::vector<std::string> citations,
             std::string note = "") {
  push_check(rep, std::move(fieldname), computed, claimed, computed == claimed,
             std::move(citations), std::move(note));
}

// First note anchor with the given suffix, e.g. "-quadrics".
std::string note_anchor(const VarietyModel& m, const std::string& suffix,
                        const std::string& fallback) {
  for (const auto& nt : m.notes)
    if (nt.anchor.size() >= suffix.size() &&
        nt.anchor.compare(nt.anchor.size() - suffix.size(), suffix.size(),
                          suffix) == 0)
      return nt.anchor;
  return fallback;
}

}  // namespace

GeometryReport verify_model(const VarietyModel& m, const ProbeConfig& cfg) {
  GeometryReport rep;
  rep.model = m.name;
  rep.seed = cfg.seed;
  rep.has_map = m.map.has_value();
  const LqelInvariants& cl = m.claimed;

  if (rep.has_map) {
    rep.ambient = static_cast<long long>(m.map->outputs.size()) - 1;
    if (m.claims_present)
      push_eq(rep, "ambient", *rep.ambient, cl.N,
              {note_anchor(m, "-type", "COMPUTED")},
              "coordinate count of the parametrization");
    try {
      long long n = variety_dim(m, cfg);
      rep.n = n;
      if (m.claims_present)
        push_eq(rep, "n", n, cl.n, {note_anchor(m, "-type", "COMPUTED")});

      long long s = secant_dim(m, cfg);
      rep.secant = s;
      if (m.claims_present)
        push_eq(rep, "secant_dim", s, cl.secant_dim, {"defect-definition"});

      long long d = 2 * n + 1 - s;
      rep.delta = d;
      if (m.claims_present)
        push_eq(rep, "delta", d, cl.delta, {"defect-definition"});

      long long ii = second_form_dim(m, cfg);
      rep.ii = ii;
      if (d >= 1) {
        push_eq(rep, "second_form_dim", ii, *rep.ambient - n - 1,
                {"second-form-dimension"},
                "complete system of size N - n - 1 for positive defect");
      } else {
        push_check(rep, "second_form_dim", ii, std::nullopt, true,
                   {"COMPUTED"}, "no theorem value when the defect vanishes");
      }

      long long h0 = quadric_space_dim(m, cfg);
      rep.quadrics = h0;
      if (m.claims_present && m.claimed_quadrics)
        push_eq(rep, "quadric_space_dim", h0, *m.claimed_quadrics,
                {note_anchor(m, "-quadrics", "COMPUTED")});
    } catch (const std::exception& e) {
      rep.errors.push_back(e.what());
    }
  }

  // Arithmetic obstructions apply to the claimed profile, or to the
  // computed one when the document carried no claims.
  std::optional<long long> eff_n, eff_delta, eff_N;
  if (m.claims_present) {
    eff_n = cl.n;
    eff_delta = cl.delta;
    eff_N = cl.N;
  } else if (rep.n && rep.delta) {
    eff_n = rep.n;
    eff_delta = rep.delta;
    eff_N = rep.ambient;
  }

  if (eff_delta && *eff_delta >= 3) {
    long long rem = (*eff_n - *eff_delta) % 2;
    push_check(rep, "parity", rem, 0, rem == 0, {"parity"},
               "n - delta must be even once delta reaches 3");
    auto w = divisibility_check(*eff_n, *eff_delta);
    push_check(rep, "divisibility", w.remainder, 0, w.pass, {"divisibility"},
               "n - delta mod 2^r_x with r_x = " + std::to_string(w.r));
  }

  if (eff_delta && *eff_delta >= 1 && *eff_delta <= *eff_n) {
    auto verdict = admissibility(*eff_n, *eff_delta, eff_N);
    std::vector<std::string> cites;
    for (const auto& r : verdict.rules)
      if (r.verdict == RuleVerdict::fail) cites.push_back(r.anchor);
    if (cites.empty()) cites.push_back("COMPUTED");
    std::string note;
    for (const auto& id : verdict.identified) {
      if (!note.empty()) note += "; ";
      note += id;
    }
    push_check(rep, "admissible", std::nullopt, std::nullopt,
               verdict.overall != Feasibility::infeasible, std::move(cites),
               std::move(note));
  }

  if (m.yx_link && m.claims_present) {
    try {
      if ((cl.n + cl.delta) % 2 != 0)
        throw InputError("line-locus link set but n + delta is odd");
      VarietyModel child = find_model(*m.yx_link);
      std::string note = "against catalog entry " + *m.yx_link;
      push_eq(rep, "yx_dim", (cl.n + cl.delta) / 2 - 2, child.claimed.n,
              {"yx-dimension"}, note);
      push_eq(rep, "yx_delta", cl.delta - 2, child.claimed.delta,
              {"yx-dimension"}, note);
      push_eq(rep, "yx_ambient", cl.n - 1, child.claimed.N, {"yx-dimension"},
              note);
    } catch (const std::exception& e) {
      rep.errors.push_back(e.what());
    }
  }

  rep.all_match = rep.errors.empty();
  for (const auto& c : rep.checks) rep.all_match = rep.all_match && c.match;
  return rep;
}

}  // namespace qel

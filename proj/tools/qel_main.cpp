// qel: invariant calculator and consistency checker for quadratic
// entry-locus manifolds.  Subcommands map one-to-one onto the engine
// operations; --json switches the output to the versioned structured report.
//
// Exit codes: 0 on success, 1 when a verdict is infeasible or a computed
// value mismatches a claimed one, 2 on input or usage errors.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "qel/catalog.hpp"
#include "qel/cremona.hpp"
#include "qel/errors.hpp"
#include "qel/invariants.hpp"
#include "qel/model.hpp"
#include "qel/report.hpp"
#include "qel/secant.hpp"

namespace {

using qel::OrderedJson;
using Rows = std::vector<std::vector<std::string>>;

struct GlobalOpts {
  bool json = false;
  std::uint64_t seed = qel::kDefaultSeed;
  std::uint64_t prime = qel::kDefaultPrime;
  int trials = 5;
};

qel::ProbeConfig probe_config(const GlobalOpts& g) {
  qel::ProbeConfig cfg;
  cfg.seed = g.seed;
  cfg.trials = g.trials;
  cfg.prime = g.prime;
  return cfg;
}

std::string opt_str(const std::optional<long long>& v) {
  return v ? std::to_string(*v) : "-";
}

std::string yes_no(bool v) { return v ? "yes" : "no"; }

// Anchor of the model note whose name ends in `suffix`; the first note or
// COMPUTED as fallbacks.  Mirrors the verifier's citation choice.
std::string note_anchor(const qel::VarietyModel& m, const std::string& suffix) {
  for (const auto& note : m.notes) {
    if (note.anchor.size() >= suffix.size() &&
        note.anchor.compare(note.anchor.size() - suffix.size(), suffix.size(),
                            suffix) == 0)
      return note.anchor;
  }
  return m.notes.empty() ? "COMPUTED" : m.notes.front().anchor;
}

void emit(const GlobalOpts& g, qel::ReportBuilder& rb,
          const std::string& human) {
  if (g.json)
    std::cout << rb.finish().dump(2) << "\n";
  else
    std::cout << human;
}

std::string join_rules(const std::vector<qel::RuleResult>& rules) {
  std::string out;
  for (const auto& r : rules) {
    if (r.verdict == qel::RuleVerdict::not_applicable) continue;
    if (!out.empty()) out += " ";
    out += r.anchor;
    out += "=";
    out += qel::verdict_name(r.verdict);
  }
  return out.empty() ? "-" : out;
}

std::vector<long long> parse_csv_ints(const std::string& text,
                                      const std::string& what) {
  std::vector<long long> out;
  std::string cur;
  auto flush = [&]() {
    if (cur.empty())
      throw qel::InputError(what + ": empty entry in '" + text + "'");
    std::size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(cur, &pos);
    } catch (const std::exception&) {
      throw qel::InputError(what + ": '" + cur + "' is not an integer");
    }
    if (pos != cur.size())
      throw qel::InputError(what + ": '" + cur + "' is not an integer");
    out.push_back(v);
    cur.clear();
  };
  for (char c : text) {
    if (c == ',')
      flush();
    else
      cur += c;
  }
  flush();
  return out;
}

// -------------------------------------------------------------- catalog --

int run_catalog_list(const GlobalOpts& g) {
  qel::ReportBuilder rb("catalog list", OrderedJson::object(), g.seed);
  OrderedJson models = OrderedJson::array();
  Rows rows{{"name", "n", "N", "delta", "dim SX", "quadrics", "map",
             "lines model"}};
  const auto& entries = qel::catalog_entries();
  for (const auto& m : entries) {
    const std::string type_anchor = note_anchor(m, "-type");
    OrderedJson e;
    e["name"] = m.name;
    e["n"] = rb.value(m.claimed.n, {type_anchor});
    e["N"] = rb.value(m.claimed.N, {type_anchor});
    e["delta"] = rb.value(m.claimed.delta, {type_anchor});
    e["secant_dim"] = rb.value(m.claimed.secant_dim, {"defect-definition"});
    if (m.claimed_quadrics)
      e["quadrics"] = rb.value(*m.claimed_quadrics, {note_anchor(m, "-quadrics")});
    else
      e["quadrics"] = nullptr;
    e["has_map"] = m.map.has_value();
    e["yx_link"] = m.yx_link ? OrderedJson(*m.yx_link) : OrderedJson(nullptr);
    models.push_back(std::move(e));
    rows.push_back({m.name, std::to_string(m.claimed.n),
                    std::to_string(m.claimed.N),
                    std::to_string(m.claimed.delta),
                    std::to_string(m.claimed.secant_dim),
                    opt_str(m.claimed_quadrics), yes_no(m.map.has_value()),
                    m.yx_link ? *m.yx_link : "-"});
  }
  OrderedJson payload;
  payload["count"] = rb.value(static_cast<long long>(entries.size()),
                              {"COMPUTED"});
  payload["models"] = std::move(models);
  rb.results(std::move(payload));
  emit(g, rb, qel::format_table(rows));
  return 0;
}

int run_catalog_show(const GlobalOpts& g, const std::string& name) {
  const qel::VarietyModel m = qel::find_model(name);
  OrderedJson inputs;
  inputs["name"] = name;
  qel::ReportBuilder rb("catalog show", std::move(inputs), g.seed);

  const std::string type_anchor = note_anchor(m, "-type");
  OrderedJson payload;
  payload["name"] = m.name;
  payload["has_map"] = m.map.has_value();
  if (m.map) {
    payload["parameters"] =
        rb.value(static_cast<long long>(m.map->nvars), {"COMPUTED"});
    payload["coordinates"] =
        rb.value(static_cast<long long>(m.map->outputs.size()), {"COMPUTED"});
  }
  payload["invariants"] = qel::invariants_json(rb, m.claimed, type_anchor);
  if (m.claimed_quadrics)
    payload["quadrics"] =
        rb.value(*m.claimed_quadrics, {note_anchor(m, "-quadrics")});
  else
    payload["quadrics"] = nullptr;
  payload["yx_link"] = m.yx_link ? OrderedJson(*m.yx_link) : OrderedJson(nullptr);
  OrderedJson notes = OrderedJson::array();
  for (const auto& note : m.notes) {
    rb.cite(note.anchor);
    OrderedJson e;
    e["text"] = note.text;
    e["anchor"] = note.anchor;
    notes.push_back(std::move(e));
  }
  payload["notes"] = std::move(notes);
  rb.results(std::move(payload));

  const auto& inv = m.claimed;
  Rows rows;
  rows.push_back({"model", m.name});
  if (m.map) {
    rows.push_back({"parameters", std::to_string(m.map->nvars)});
    rows.push_back(
        {"coordinates", std::to_string(m.map->outputs.size())});
  }
  rows.push_back({"n", std::to_string(inv.n)});
  rows.push_back({"N", std::to_string(inv.N)});
  rows.push_back({"delta", std::to_string(inv.delta)});
  rows.push_back({"dim SX", std::to_string(inv.secant_dim)});
  rows.push_back({"r_X", opt_str(inv.r_x)});
  rows.push_back({"Fano index", opt_str(inv.index)});
  rows.push_back({"conic degree", opt_str(inv.conic_degree)});
  rows.push_back({"conic family dim", opt_str(inv.conic_family_dim)});
  rows.push_back({"conics through point", opt_str(inv.conics_through_point)});
  rows.push_back(
      {"tangential image dim", std::to_string(inv.tangential_image_dim)});
  if (inv.splitting) {
    rows.push_back({"line splitting",
                    "O(2) + O(1)^" + std::to_string(inv.splitting->ones) +
                        " + O^" + std::to_string(inv.splitting->zeros)});
  }
  rows.push_back({"quadrics", opt_str(m.claimed_quadrics)});
  rows.push_back({"lines model", m.yx_link ? *m.yx_link : "-"});
  std::string human = qel::format_table(rows);
  for (const auto& note : m.notes)
    human += "note [" + note.anchor + "]: " + note.text + "\n";
  emit(g, rb, human);
  return 0;
}

// --------------------------------------------------------------- verify --

Rows geometry_check_rows(const qel::GeometryReport& rep) {
  Rows rows{{"field", "computed", "claimed", "match", "cite"}};
  for (const auto& c : rep.checks) {
    std::string cites;
    for (const auto& a : c.citations) {
      if (!cites.empty()) cites += ",";
      cites += a;
    }
    rows.push_back({c.field, opt_str(c.computed), opt_str(c.claimed),
                    yes_no(c.match), cites});
  }
  return rows;
}

int run_verify(const GlobalOpts& g, const std::string& name) {
  OrderedJson inputs;
  inputs["name"] = name;
  inputs["trials"] = g.trials;
  inputs["prime"] = g.prime;
  qel::ReportBuilder rb("verify", std::move(inputs), g.seed);
  const qel::ProbeConfig cfg = probe_config(g);

  if (name != "all") {
    const qel::VarietyModel m = qel::find_model(name);
    const qel::GeometryReport rep = qel::verify_model(m, cfg);
    rb.results(qel::geometry_json(rb, rep));
    std::string human = "model: " + rep.model + "\n";
    human += qel::format_table(geometry_check_rows(rep));
    for (const auto& e : rep.errors) human += "error: " + e + "\n";
    human += std::string("verdict: ") + (rep.all_match ? "ok" : "MISMATCH") +
             "\n";
    emit(g, rb, human);
    return rep.all_match ? 0 : 1;
  }

  OrderedJson models = OrderedJson::array();
  Rows rows{{"model", "n", "dim SX", "delta", "dim |II|", "quadrics",
             "verdict"}};
  bool all_ok = true;
  for (const auto& m : qel::catalog_entries()) {
    const qel::GeometryReport rep = qel::verify_model(m, cfg);
    all_ok = all_ok && rep.all_match;
    models.push_back(qel::geometry_json(rb, rep));
    rows.push_back({rep.model, opt_str(rep.n), opt_str(rep.secant),
                    opt_str(rep.delta), opt_str(rep.ii), opt_str(rep.quadrics),
                    rep.all_match ? "ok" : "MISMATCH"});
  }
  OrderedJson payload;
  payload["models"] = std::move(models);
  payload["all_match"] = all_ok;
  rb.results(std::move(payload));
  std::string human = qel::format_table(rows);
  human += std::string("overall: ") + (all_ok ? "ok" : "MISMATCH") + "\n";
  emit(g, rb, human);
  return all_ok ? 0 : 1;
}

// ------------------------------------------------------- probe commands --

int run_defect(const GlobalOpts& g, const std::string& name) {
  OrderedJson inputs;
  inputs["name"] = name;
  inputs["prime"] = g.prime;
  qel::ReportBuilder rb("defect", std::move(inputs), g.seed);
  const qel::VarietyModel m = qel::find_model(name);
  const qel::ProbeConfig cfg = probe_config(g);

  const long long n = qel::variety_dim(m, cfg);
  const long long s = qel::secant_dim(m, cfg);
  const long long delta = 2 * n + 1 - s;
  const bool compare = m.claims_present;
  const bool match = !compare || delta == m.claimed.delta;

  OrderedJson payload;
  payload["model"] = m.name;
  payload["n"] = rb.value(n, {"COMPUTED"});
  payload["secant_dim"] = rb.value(s, {"COMPUTED"});
  payload["delta"] = rb.value(delta, {"COMPUTED", "defect-definition"});
  payload["claimed_delta"] =
      compare ? OrderedJson(m.claimed.delta) : OrderedJson(nullptr);
  payload["match"] = match;
  rb.results(std::move(payload));

  Rows rows{{"model", m.name},
            {"dim X", std::to_string(n)},
            {"dim SX", std::to_string(s)},
            {"delta", std::to_string(delta)}};
  if (compare)
    rows.push_back({"claimed delta", std::to_string(m.claimed.delta)});
  std::string human = qel::format_table(rows);
  if (!match) human += "MISMATCH against the claimed defect\n";
  emit(g, rb, human);
  return match ? 0 : 1;
}

int run_iiform(const GlobalOpts& g, const std::string& name) {
  OrderedJson inputs;
  inputs["name"] = name;
  inputs["prime"] = g.prime;
  qel::ReportBuilder rb("iiform", std::move(inputs), g.seed);
  const qel::VarietyModel m = qel::find_model(name);
  const qel::ProbeConfig cfg = probe_config(g);

  const long long n = qel::variety_dim(m, cfg);
  const long long ambient =
      static_cast<long long>(m.map->outputs.size()) - 1;
  const long long ii = qel::second_form_dim(m, cfg);

  OrderedJson payload;
  payload["model"] = m.name;
  payload["n"] = rb.value(n, {"COMPUTED"});
  payload["ambient"] = rb.value(ambient, {"COMPUTED"});
  payload["second_form_dim"] = rb.value(ii, {"COMPUTED"});

  Rows rows{{"model", m.name},
            {"dim X", std::to_string(n)},
            {"N", std::to_string(ambient)},
            {"dim |II|", std::to_string(ii)}};

  bool match = true;
  const bool theorem_applies = m.claims_present && m.claimed.delta >= 1;
  if (theorem_applies) {
    const long long expected = ambient - n - 1;
    match = ii == expected;
    payload["theorem_value"] = rb.value(expected, {"second-form-dimension"});
    payload["match"] = match;
    rows.push_back({"N - n - 1", std::to_string(expected)});
  } else {
    payload["theorem_value"] = nullptr;
    payload["match"] = true;
  }
  rb.results(std::move(payload));
  std::string human = qel::format_table(rows);
  if (!match) human += "MISMATCH against dim |II| = N - n - 1\n";
  emit(g, rb, human);
  return match ? 0 : 1;
}

int run_quadrics(const GlobalOpts& g, const std::string& name) {
  OrderedJson inputs;
  inputs["name"] = name;
  inputs["prime"] = g.prime;
  qel::ReportBuilder rb("quadrics", std::move(inputs), g.seed);
  const qel::VarietyModel m = qel::find_model(name);
  const qel::ProbeConfig cfg = probe_config(g);

  const long long h0 = qel::quadric_space_dim(m, cfg);
  const auto generators = qel::quadric_generators(m, cfg);
  const bool compare = m.claimed_quadrics.has_value();
  const bool match = !compare || h0 == *m.claimed_quadrics;

  OrderedJson payload;
  payload["model"] = m.name;
  payload["quadric_space_dim"] = rb.value(h0, {"COMPUTED"});
  payload["integer_generators"] = rb.value(
      static_cast<long long>(generators.size()), {"COMPUTED"});
  if (compare)
    payload["claimed"] =
        rb.value(*m.claimed_quadrics, {note_anchor(m, "-quadrics")});
  else
    payload["claimed"] = nullptr;
  payload["match"] = match;
  rb.results(std::move(payload));

  Rows rows{{"model", m.name},
            {"h0(I(2))", std::to_string(h0)},
            {"integer generators", std::to_string(generators.size())},
            {"claimed", opt_str(m.claimed_quadrics)}};
  std::string human = qel::format_table(rows);
  if (!match) human += "MISMATCH against the claimed quadric count\n";
  emit(g, rb, human);
  return match ? 0 : 1;
}

int run_yx_dim(const GlobalOpts& g, const std::string& name,
               const std::string& primes_text) {
  const std::vector<long long> primes =
      parse_csv_ints(primes_text, "--primes");
  OrderedJson inputs;
  inputs["name"] = name;
  inputs["primes"] = primes;
  inputs["prime"] = g.prime;
  qel::ReportBuilder rb("yx-dim", std::move(inputs), g.seed);
  const qel::VarietyModel m = qel::find_model(name);

  const qel::YxEstimate est = qel::yx_dim_estimate(m, primes, probe_config(g));
  rb.warn(
      "HEURISTIC: the slope is a finite-field point-count estimate, not an "
      "exact rank computation");
  rb.results(qel::yx_json(rb, est));

  Rows rows{{"q", "candidates", "count"}};
  for (const auto& c : est.counts)
    rows.push_back({std::to_string(c.q), std::to_string(c.candidates),
                    std::to_string(c.count)});
  std::string human = "model: " + est.model +
                      "  quadrics: " + std::to_string(est.quadrics_used) +
                      "\n";
  human += qel::format_table(rows);
  if (est.no_lines)
    human += "no line directions found: the locus is empty\n";
  else if (est.slope)
    human += "slope: " + std::to_string(*est.slope) + " (heuristic)\n";
  human +=
      "warning: point-count heuristic, not an exact computation\n";
  emit(g, rb, human);
  return 0;
}

// ---------------------------------------------------------------- tower --

std::string tower_chain(const qel::TowerReport& rep) {
  std::string out;
  for (const auto& lvl : rep.levels) {
    if (!out.empty()) out += " -> ";
    out += "(" + lvl.dim.str() + "," + std::to_string(lvl.delta_k) + ",P^" +
           lvl.ambient.str() + ")";
  }
  return out;
}

int run_tower(const GlobalOpts& g, const std::string& name,
              std::optional<long long> n_opt,
              std::optional<long long> delta_opt) {
  long long n = 0;
  long long delta = 0;
  OrderedJson inputs;
  if (!name.empty()) {
    if (n_opt || delta_opt)
      throw qel::InputError(
          "tower takes either a model name or --n with --delta, not both");
    const qel::VarietyModel m = qel::find_model(name);
    n = m.claimed.n;
    delta = m.claimed.delta;
    inputs["name"] = name;
  } else {
    if (!n_opt || !delta_opt)
      throw qel::InputError("tower needs a model name or both --n and --delta");
    n = *n_opt;
    delta = *delta_opt;
  }
  inputs["n"] = n;
  inputs["delta"] = delta;
  qel::ReportBuilder rb("tower", std::move(inputs), g.seed);

  const qel::TowerReport rep = qel::tower(n, delta);
  rb.results(qel::tower_json(rb, rep));

  Rows rows{{"k", "dim", "delta", "ambient", "codim", "integral"}};
  for (const auto& lvl : rep.levels)
    rows.push_back({std::to_string(lvl.k), lvl.dim.str(),
                    std::to_string(lvl.delta_k), "P^" + lvl.ambient.str(),
                    lvl.codim.str(), yes_no(lvl.integral)});
  std::string human = "n: " + std::to_string(n) +
                      "  delta: " + std::to_string(delta) +
                      "  levels: " + std::to_string(rep.levels_total) + "\n";
  human += tower_chain(rep) + "\n";
  human += qel::format_table(rows);
  human += std::string("integral: ") + yes_no(rep.all_integral) + "\n";
  emit(g, rb, human);
  return rep.all_integral ? 0 : 1;
}

// ----------------------------------------------------------- admissible --

int run_admissible(const GlobalOpts& g, long long n, long long delta,
                   std::optional<long long> ambient) {
  OrderedJson inputs;
  inputs["n"] = n;
  inputs["delta"] = delta;
  inputs["ambient"] = ambient ? OrderedJson(*ambient) : OrderedJson(nullptr);
  qel::ReportBuilder rb("admissible", std::move(inputs), g.seed);

  const qel::AdmissibilityVerdict v = qel::admissibility(n, delta, ambient);
  rb.results(qel::admissibility_json(rb, v));

  Rows rows{{"rule", "verdict", "detail"}};
  for (const auto& r : v.rules)
    rows.push_back({r.anchor, qel::verdict_name(r.verdict), r.detail});
  std::string human = "n: " + std::to_string(n) +
                      "  delta: " + std::to_string(delta) +
                      (ambient ? "  N: " + std::to_string(*ambient) : "") +
                      "\n";
  human += qel::format_table(rows);
  for (const auto& id : v.identified) human += "identified: " + id + "\n";
  human += std::string("overall: ") + qel::feasibility_name(v.overall) + "\n";
  emit(g, rb, human);
  return v.overall == qel::Feasibility::infeasible ? 1 : 0;
}

// ------------------------------------------------------------ enumerate --

int run_enumerate(const GlobalOpts& g, const std::string& kind,
                  std::optional<long long> nmax) {
  if (kind != "high-defect" && kind != "half-defect")
    throw qel::InputError("enumerate takes 'high-defect' or 'half-defect', got '" +
                          kind + "'");
  OrderedJson inputs;
  inputs["kind"] = kind;

  if (kind == "high-defect") {
    inputs["nmax"] = nmax ? OrderedJson(*nmax) : OrderedJson(nullptr);
    qel::ReportBuilder rb("enumerate", std::move(inputs), g.seed);
    std::vector<qel::ClassifiedPair> pairs = qel::enumerate_high_defect();
    if (nmax) {
      std::erase_if(pairs,
                    [&](const qel::ClassifiedPair& p) { return p.n > *nmax; });
    }
    OrderedJson arr = OrderedJson::array();
    Rows rows{{"n", "delta", "label"}};
    std::string summary;
    for (const auto& p : pairs) {
      OrderedJson e;
      e["n"] = rb.value(p.n, {"high-defect-classification"});
      e["delta"] = rb.value(p.delta, {"high-defect-classification"});
      e["label"] = p.label;
      arr.push_back(std::move(e));
      rows.push_back({std::to_string(p.n), std::to_string(p.delta), p.label});
      if (!summary.empty()) summary += " ";
      summary +=
          "(" + std::to_string(p.n) + "," + std::to_string(p.delta) + ")";
    }
    OrderedJson payload;
    payload["pairs"] = std::move(arr);
    rb.results(std::move(payload));
    std::string human = qel::format_table(rows);
    human += "pairs: " + summary + "\n";
    emit(g, rb, human);
    return 0;
  }

  const long long bound = nmax.value_or(1000000);
  inputs["nmax"] = bound;
  qel::ReportBuilder rb("enumerate", std::move(inputs), g.seed);
  const std::vector<long long> values = qel::enumerate_half_defect(bound);
  OrderedJson arr = OrderedJson::array();
  std::string summary;
  for (long long n : values) {
    arr.push_back(rb.value(n, {"half-defect-classification"}));
    if (!summary.empty()) summary += ", ";
    summary += std::to_string(n);
  }
  OrderedJson payload;
  payload["values"] = std::move(arr);
  rb.results(std::move(payload));
  Rows rows{{"n", "delta"}};
  for (long long n : values)
    rows.push_back({std::to_string(n), std::to_string(n / 2)});
  std::string human = qel::format_table(rows);
  human += "n in {" + summary + "}\n";
  emit(g, rb, human);
  return 0;
}

// -------------------------------------------------------------- cremona --

int run_cremona(const GlobalOpts& g, const std::string& type_text,
                std::optional<long long> nmax) {
  const std::vector<long long> parts = parse_csv_ints(type_text, "--type");
  if (parts.size() != 2)
    throw qel::InputError("--type takes exactly two integers, like 2,3");
  if (parts[0] != 2)
    throw qel::InputError(
        "only quadro-degree types (2, d) are classified; got d1 = " +
        std::to_string(parts[0]));
  const long long d = parts[1];

  OrderedJson inputs;
  inputs["d1"] = parts[0];
  inputs["d2"] = d;
  inputs["nmax"] = nmax ? OrderedJson(*nmax) : OrderedJson(nullptr);
  qel::ReportBuilder rb("cremona", std::move(inputs), g.seed);

  const qel::CremonaScan scan = qel::classify_type2d(d, nmax);
  rb.results(qel::cremona_scan_json(rb, scan));

  Rows rows{{"n", "delta", "N", "deg SX", "index", "branch", "rules"}};
  for (const auto& rep : scan.rows)
    rows.push_back({std::to_string(rep.n), opt_str(rep.delta),
                    opt_str(rep.ambient), opt_str(rep.secant_degree),
                    opt_str(rep.fano_index), rep.branch,
                    join_rules(rep.rules)});
  std::string human = "type: (2," + std::to_string(d) + ")  scanned n <= " +
                      std::to_string(scan.n_max) +
                      (scan.bound_overridden ? "" : " (self-derived bound)") +
                      "\n";
  human += qel::format_table(rows);
  human += "candidates: " + std::to_string(scan.rows.size()) + "\n";
  emit(g, rb, human);
  return 0;
}

int run_cremona_2nplus1(const GlobalOpts& g) {
  qel::ReportBuilder rb("cremona-2nplus1", OrderedJson::object(), g.seed);
  const std::vector<qel::SelfDualCandidate> cands = qel::classify_2n_plus_1();
  OrderedJson arr = OrderedJson::array();
  Rows rows{{"d1", "d2", "n", "description", "rules"}};
  for (const auto& c : cands) {
    OrderedJson e;
    e["d1"] = rb.value(c.d1, {"cremona-2nplus1"});
    e["d2"] = rb.value(c.d2, {"cremona-2nplus1"});
    e["n"] = rb.value(c.n, {"cremona-2nplus1"});
    e["description"] = c.description;
    OrderedJson rules = OrderedJson::array();
    for (const auto& r : c.rules) {
      rb.cite(r.anchor);
      OrderedJson re;
      re["anchor"] = r.anchor;
      re["verdict"] = qel::verdict_name(r.verdict);
      re["detail"] = r.detail;
      rules.push_back(std::move(re));
    }
    e["rules"] = std::move(rules);
    arr.push_back(std::move(e));
    rows.push_back({std::to_string(c.d1), std::to_string(c.d2),
                    std::to_string(c.n), c.description, join_rules(c.rules)});
  }
  OrderedJson payload;
  payload["candidates"] = std::move(arr);
  rb.results(std::move(payload));
  std::string human = qel::format_table(rows);
  human += "candidates: " + std::to_string(cands.size()) + "\n";
  emit(g, rb, human);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "invariant calculator and consistency checker for quadratic "
      "entry-locus manifolds"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_flag("--json", g.json, "emit the structured report instead of text");
  app.add_option("--seed", g.seed, "root seed for the randomized probes");
  app.add_option("--prime", g.prime, "working prime for exact linear algebra");

  std::string catalog_action;
  std::string catalog_name;
  auto* cat = app.add_subcommand("catalog", "list or show the model catalog");
  cat->fallthrough();
  cat->add_option("action", catalog_action, "'list' or 'show'")->required();
  cat->add_option("name", catalog_name, "model name for 'show'");

  std::string verify_name;
  auto* verify = app.add_subcommand(
      "verify", "recompute every invariant and compare with the claims");
  verify->fallthrough();
  verify->add_option("name", verify_name, "model name, or 'all'")->required();
  verify->add_option("--trials", g.trials, "probe repetitions per rank")
      ->check(CLI::Range(1, 64));

  std::string defect_name;
  auto* defect = app.add_subcommand(
      "defect", "secant dimension and defect of a catalog model");
  defect->fallthrough();
  defect->add_option("name", defect_name, "model name")->required();

  std::string iiform_name;
  auto* iiform = app.add_subcommand(
      "iiform", "dimension of the second fundamental form");
  iiform->fallthrough();
  iiform->add_option("name", iiform_name, "model name")->required();

  std::string quadrics_name;
  auto* quadrics = app.add_subcommand(
      "quadrics", "dimension and integer basis of the quadrics through a model");
  quadrics->fallthrough();
  quadrics->add_option("name", quadrics_name, "model name")->required();

  std::string yx_name;
  std::string yx_primes = "3,5,7";
  auto* yx = app.add_subcommand(
      "yx-dim", "heuristic dimension of the locus of lines through a point");
  yx->fallthrough();
  yx->add_option("name", yx_name, "model name")->required();
  yx->add_option("--primes", yx_primes, "comma-separated counting primes");

  std::string tower_name;
  std::optional<long long> tower_n;
  std::optional<long long> tower_delta;
  auto* tower = app.add_subcommand(
      "tower", "iterated line-locus descent for type delta >= 3");
  tower->fallthrough();
  tower->add_option("name", tower_name, "model name (alternative to --n/--delta)");
  tower->add_option("--n", tower_n, "variety dimension");
  tower->add_option("--delta", tower_delta, "secant defect");

  long long adm_n = 0;
  long long adm_delta = 0;
  std::optional<long long> adm_ambient;
  auto* adm = app.add_subcommand(
      "admissible", "arithmetic feasibility of an (n, delta) profile");
  adm->fallthrough();
  adm->add_option("--n", adm_n, "variety dimension")->required();
  adm->add_option("--delta", adm_delta, "secant defect")->required();
  adm->add_option("--ambient", adm_ambient, "ambient dimension N");

  std::string enum_kind;
  std::optional<long long> enum_nmax;
  auto* enumerate = app.add_subcommand(
      "enumerate", "golden classification lists");
  enumerate->fallthrough();
  enumerate->add_option("kind", enum_kind, "'high-defect' or 'half-defect'")
      ->required();
  enumerate->add_option("--nmax", enum_nmax, "upper bound on n");

  std::string cremona_type;
  std::optional<long long> cremona_nmax;
  auto* cremona = app.add_subcommand(
      "cremona", "candidate base loci of quadro-degree-d transformations");
  cremona->fallthrough();
  cremona->add_option("--type", cremona_type, "transformation type, like 2,3")
      ->required();
  cremona->add_option("--nmax", cremona_nmax, "override the scan bound");

  auto* c2n = app.add_subcommand(
      "cremona-2nplus1",
      "transformations of P^(2n+1) with quadratic entry-locus center");
  c2n->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cat->parsed()) {
      if (catalog_action == "list") {
        if (!catalog_name.empty())
          throw qel::InputError("catalog list takes no model name");
        return run_catalog_list(g);
      }
      if (catalog_action == "show") {
        if (catalog_name.empty())
          throw qel::InputError("catalog show needs a model name");
        return run_catalog_show(g, catalog_name);
      }
      throw qel::InputError("catalog takes 'list' or 'show', got '" +
                            catalog_action + "'");
    }
    if (verify->parsed()) return run_verify(g, verify_name);
    if (defect->parsed()) return run_defect(g, defect_name);
    if (iiform->parsed()) return run_iiform(g, iiform_name);
    if (quadrics->parsed()) return run_quadrics(g, quadrics_name);
    if (yx->parsed()) return run_yx_dim(g, yx_name, yx_primes);
    if (tower->parsed())
      return run_tower(g, tower_name, tower_n, tower_delta);
    if (adm->parsed()) return run_admissible(g, adm_n, adm_delta, adm_ambient);
    if (enumerate->parsed()) return run_enumerate(g, enum_kind, enum_nmax);
    if (cremona->parsed()) return run_cremona(g, cremona_type, cremona_nmax);
    if (c2n->parsed()) return run_cremona_2nplus1(g);
    std::cerr << "error: no command given\n";
    return 2;
  } catch (const qel::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const qel::BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const qel::DegenerateModelError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const qel::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

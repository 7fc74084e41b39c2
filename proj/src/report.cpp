#include "qel/report.hpp"

#include <algorithm>
#include <utility>

#include "qel/rules.hpp"

namespace qel {

ReportBuilder::ReportBuilder(std::string command, OrderedJson inputs,
                             std::uint64_t seed)
    : command_(std::move(command)),
      inputs_(std::move(inputs)),
      seed_(seed),
      results_(OrderedJson::object()) {}

OrderedJson ReportBuilder::value(long long v,
                                 std::vector<std::string> anchors) {
  OrderedJson leaf;
  leaf["value"] = v;
  OrderedJson cites = OrderedJson::array();
  for (auto& a : anchors) {
    cite(a);
    cites.push_back(a);
  }
  leaf["cite"] = std::move(cites);
  return leaf;
}

OrderedJson ReportBuilder::value(double v, std::vector<std::string> anchors) {
  OrderedJson leaf;
  leaf["value"] = v;
  OrderedJson cites = OrderedJson::array();
  for (auto& a : anchors) {
    cite(a);
    cites.push_back(a);
  }
  leaf["cite"] = std::move(cites);
  return leaf;
}

void ReportBuilder::cite(const std::string& anchor) {
  rule(anchor);  // fail fast on unknown anchors
  anchors_.insert(anchor);
}

void ReportBuilder::warn(std::string message) {
  warnings_.push_back(std::move(message));
}

OrderedJson ReportBuilder::finish() {
  OrderedJson doc;
  doc["schema"] = kReportSchema;
  doc["command"] = command_;
  doc["inputs"] = inputs_;
  doc["seed"] = seed_;
  doc["results"] = results_;
  OrderedJson cites = OrderedJson::array();
  for (const auto& anchor : anchors_) {  // std::set: already sorted
    const Rule& r = rule(anchor);
    OrderedJson entry;
    entry["anchor"] = std::string(r.anchor);
    entry["quote"] = std::string(r.statement);
    cites.push_back(std::move(entry));
  }
  doc["citations"] = std::move(cites);
  doc["warnings"] = warnings_;
  return doc;
}

namespace {

OrderedJson optional_value(ReportBuilder& rb, std::optional<long long> v,
                           std::vector<std::string> anchors) {
  if (!v) return nullptr;
  return rb.value(*v, std::move(anchors));
}

OrderedJson rational_json(const Rational& r) {
  OrderedJson j;
  j["num"] = r.num;
  j["den"] = r.den;
  j["text"] = r.str();
  return j;
}

OrderedJson rules_json(ReportBuilder& rb, const std::vector<RuleResult>& rs) {
  OrderedJson arr = OrderedJson::array();
  for (const auto& r : rs) {
    rb.cite(r.anchor);
    OrderedJson e;
    e["anchor"] = r.anchor;
    e["verdict"] = verdict_name(r.verdict);
    e["detail"] = r.detail;
    arr.push_back(std::move(e));
  }
  return arr;
}

}  // namespace

OrderedJson invariants_json(ReportBuilder& rb, const LqelInvariants& inv,
                            const std::string& base_anchor) {
  OrderedJson j;
  j["n"] = rb.value(inv.n, {base_anchor});
  j["N"] = rb.value(inv.N, {base_anchor});
  j["delta"] = rb.value(inv.delta, {"defect-definition"});
  j["secant_dim"] = rb.value(inv.secant_dim, {"defect-definition"});
  j["r_x"] = optional_value(rb, inv.r_x, {"tower-dimensions"});
  j["index"] = optional_value(rb, inv.index, {"fano-index"});
  j["conic_degree"] = optional_value(rb, inv.conic_degree, {"conic-degree"});
  j["conic_family_dim"] =
      optional_value(rb, inv.conic_family_dim, {"conic-family"});
  j["conics_through_point"] =
      optional_value(rb, inv.conics_through_point, {"conics-through-point"});
  j["tangential_image_dim"] =
      rb.value(inv.tangential_image_dim, {"tangential-image"});
  if (inv.splitting) {
    OrderedJson s;
    s["twos"] = rb.value(inv.splitting->twos, {"line-splitting"});
    s["ones"] = rb.value(inv.splitting->ones, {"line-splitting"});
    s["zeros"] = rb.value(inv.splitting->zeros, {"line-splitting"});
    j["splitting"] = std::move(s);
  } else {
    j["splitting"] = nullptr;
  }
  return j;
}

OrderedJson geometry_json(ReportBuilder& rb, const GeometryReport& rep) {
  OrderedJson j;
  j["model"] = rep.model;
  j["has_map"] = rep.has_map;
  j["n"] = optional_value(rb, rep.n, {"COMPUTED"});
  j["ambient"] = optional_value(rb, rep.ambient, {"COMPUTED"});
  j["secant_dim"] = optional_value(rb, rep.secant, {"COMPUTED"});
  j["delta"] = optional_value(rb, rep.delta, {"defect-definition"});
  j["second_form_dim"] =
      optional_value(rb, rep.ii, {"second-form-dimension"});
  j["quadric_space_dim"] = optional_value(rb, rep.quadrics, {"COMPUTED"});
  OrderedJson checks = OrderedJson::array();
  for (const auto& c : rep.checks) {
    OrderedJson e;
    e["field"] = c.field;
    e["computed"] = c.computed ? OrderedJson(*c.computed) : nullptr;
    e["claimed"] = c.claimed ? OrderedJson(*c.claimed) : nullptr;
    e["match"] = c.match;
    OrderedJson cites = OrderedJson::array();
    for (const auto& a : c.citations) {
      rb.cite(a);
      cites.push_back(a);
    }
    e["cite"] = std::move(cites);
    e["note"] = c.note;
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  j["errors"] = rep.errors;
  j["all_match"] = rep.all_match;
  return j;
}

OrderedJson tower_json(ReportBuilder& rb, const TowerReport& rep) {
  rb.cite("tower-dimensions");
  rb.cite("tower-recursion");
  OrderedJson j;
  j["n"] = rb.value(rep.n, {"COMPUTED"});
  j["delta"] = rb.value(rep.delta, {"COMPUTED"});
  j["levels_total"] = rb.value(rep.levels_total, {"tower-dimensions"});
  OrderedJson levels = OrderedJson::array();
  for (const auto& lv : rep.levels) {
    OrderedJson e;
    e["k"] = lv.k;
    e["dim"] = rational_json(lv.dim);
    e["delta_k"] = lv.delta_k;
    e["ambient"] = rational_json(lv.ambient);
    e["codim"] = rational_json(lv.codim);
    e["integral"] = lv.integral;
    e["terminal"] = lv.terminal;
    levels.push_back(std::move(e));
  }
  j["levels"] = std::move(levels);
  j["all_integral"] = rep.all_integral;
  return j;
}

OrderedJson admissibility_json(ReportBuilder& rb,
                               const AdmissibilityVerdict& v) {
  OrderedJson j;
  j["n"] = rb.value(v.n, {"COMPUTED"});
  j["delta"] = rb.value(v.delta, {"COMPUTED"});
  j["ambient"] = optional_value(rb, v.ambient, {"COMPUTED"});
  j["rules"] = rules_json(rb, v.rules);
  j["overall"] = feasibility_name(v.overall);
  j["identified"] = v.identified;
  return j;
}

OrderedJson cremona_report_json(ReportBuilder& rb, const CremonaReport& rep) {
  OrderedJson j;
  j["d1"] = rep.d1;
  j["d2"] = rep.d2;
  j["n"] = rb.value(rep.n, {"COMPUTED"});
  j["delta"] = optional_value(rb, rep.delta, {"cremona-defect"});
  j["ambient"] = optional_value(rb, rep.ambient, {"cremona-defect"});
  j["secant_degree"] =
      optional_value(rb, rep.secant_degree, {"cremona-defect"});
  j["fano_index"] = optional_value(rb, rep.fano_index, {"cremona-fano-index"});
  j["branch"] = rep.branch;
  j["rules"] = rules_json(rb, rep.rules);
  return j;
}

OrderedJson cremona_scan_json(ReportBuilder& rb, const CremonaScan& scan) {
  rb.cite("cremona-even-bound");
  OrderedJson j;
  j["d"] = scan.d;
  j["n_max"] = scan.n_max;
  j["default_bound"] = rb.value(scan.default_bound, {"cremona-even-bound"});
  j["r_max"] = scan.r_max;
  j["bound_overridden"] = scan.bound_overridden;
  OrderedJson rows = OrderedJson::array();
  for (const auto& rep : scan.rows)
    rows.push_back(cremona_report_json(rb, rep));
  j["rows"] = std::move(rows);
  return j;
}

OrderedJson yx_json(ReportBuilder& rb, const YxEstimate& est) {
  rb.cite("HEURISTIC");
  rb.cite("yx-dimension");
  OrderedJson j;
  j["model"] = est.model;
  j["quadrics_used"] = rb.value(est.quadrics_used, {"COMPUTED"});
  OrderedJson counts = OrderedJson::array();
  for (const auto& c : est.counts) {
    OrderedJson e;
    e["q"] = c.q;
    e["candidates"] = c.candidates;
    e["count"] = c.count;
    counts.push_back(std::move(e));
  }
  j["counts"] = std::move(counts);
  j["no_lines"] = est.no_lines;
  j["slope"] = est.slope ? OrderedJson(*est.slope) : nullptr;
  if (est.slope)
    j["slope_cite"] = OrderedJson::array({"HEURISTIC", "yx-dimension"});
  return j;
}

std::string format_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (widths.size() <= c) widths.resize(c + 1, 0);
      widths[c] = std::max(widths[c], row[c].size());
    }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) line += "  ";
      line += row[c];
      if (c + 1 < row.size())
        line += std::string(widths[c] - row[c].size(), ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    out += "\n";
  }
  return out;
}

const char* verdict_name(RuleVerdict v) {
  switch (v) {
    case RuleVerdict::pass:
      return "pass";
    case RuleVerdict::fail:
      return "fail";
    default:
      return "not-applicable";
  }
}

const char* feasibility_name(Feasibility f) {
  switch (f) {
    case Feasibility::feasible:
      return "feasible";
    case Feasibility::constrained:
      return "constrained";
    default:
      return "infeasible";
  }
}

}  // namespace qel

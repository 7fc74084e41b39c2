#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "qel/cremona.hpp"
#include "qel/invariants.hpp"
#include "qel/model.hpp"
#include "qel/secant.hpp"

namespace qel {

// Insertion-ordered JSON keeps serialization deterministic for a given
// (command, inputs, seed) triple.
using OrderedJson = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "qel-report/1";

// Assembles the versioned structured report: command, inputs, seed, the
// engine payload, the resolved citation list and any heuristic warnings.
// Numeric leaves inside results are {"value": v, "cite": [anchors...]};
// finish() resolves every collected anchor against the rules registry, so
// an unknown anchor fails loudly instead of shipping.
class ReportBuilder {
 public:
  ReportBuilder(std::string command, OrderedJson inputs, std::uint64_t seed);

  OrderedJson value(long long v, std::vector<std::string> anchors);
  OrderedJson value(double v, std::vector<std::string> anchors);

  void cite(const std::string& anchor);
  void warn(std::string message);
  void results(OrderedJson payload) { results_ = std::move(payload); }

  OrderedJson finish();

 private:
  std::string command_;
  OrderedJson inputs_;
  std::uint64_t seed_;
  OrderedJson results_;
  std::set<std::string> anchors_;
  std::vector<std::string> warnings_;
};

// Engine payload serializers.  Citation anchors flow into the builder as a
// side effect, so the finished document's citation list covers the payload.
OrderedJson invariants_json(ReportBuilder& rb, const LqelInvariants& inv,
                            const std::string& base_anchor = "COMPUTED");
OrderedJson geometry_json(ReportBuilder& rb, const GeometryReport& rep);
OrderedJson tower_json(ReportBuilder& rb, const TowerReport& rep);
OrderedJson admissibility_json(ReportBuilder& rb,
                               const AdmissibilityVerdict& v);
OrderedJson cremona_report_json(ReportBuilder& rb, const CremonaReport& rep);
OrderedJson cremona_scan_json(ReportBuilder& rb, const CremonaScan& scan);
OrderedJson yx_json(ReportBuilder& rb, const YxEstimate& est);

// Pads each column to its widest cell, two blanks between columns.
std::string format_table(const std::vector<std::vector<std::string>>& rows);

const char* verdict_name(RuleVerdict v);
const char* feasibility_name(Feasibility f);

}  // namespace qel

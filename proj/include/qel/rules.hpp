#pragma once

#include <string_view>
#include <vector>

namespace qel {

// A registry entry: a stable anchor plus the statement it stands for.  Every
// rule applied by the engines and every claimed number in a report cites one
// of these anchors (or the tag COMPUTED for values the engine measured
// itself).  The same table is rendered in docs/report-schema.md.
struct Rule {
  std::string_view anchor;
  std::string_view statement;
};

const std::vector<Rule>& all_rules();

// Looks up an anchor; throws InputError on unknown anchors so typos cannot
// ship silently.
const Rule& rule(std::string_view anchor);

}  // namespace qel

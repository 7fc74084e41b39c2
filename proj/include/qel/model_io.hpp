#pragma once

#include <string>

#include "qel/model.hpp"

namespace qel {

// Reads a model document (see docs/model-format.md).  Line-oriented:
//
//   model: <name>            optional
//   variables: <k>
//   outputs: <m>
//   output: <coeff> [e,...]  exactly m lines, terms as coefficient plus a
//                            comma-separated exponent vector of length k
//   claimed {                optional
//   n: <int>
//   N: <int>
//   delta: <int>
//   quadrics: <int>          optional
//   }
//
// '#' starts a comment.  Throws ParseError with 1-based line and column.
VarietyModel parse_model(const std::string& text);

// Canonical document for a parametrized model; parse(serialize(m)) followed
// by serialize is byte-identical.  Invariants-only models have no document
// form and are rejected.
std::string serialize_model(const VarietyModel& m);

}  // namespace qel

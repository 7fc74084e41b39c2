#include "qel/model_io.hpp"

#include <cctype>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qel/errors.hpp"
#include "qel/invariants.hpp"

namespace qel {
namespace {

struct Token {
  std::string text;
  std::size_t line = 0;
  std::size_t column = 0;  // 1-based
};

// One logical line: comment stripped, tokens split on blanks.
struct Line {
  std::size_t number = 0;
  std::vector<Token> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> lines;
  std::size_t lineno = 0;
  std::istringstream in(text);
  std::string raw;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos)
      raw.erase(hash);
    Line line;
    line.number = lineno;
    std::size_t i = 0;
    while (i < raw.size()) {
      if (std::isspace(static_cast<unsigned char>(raw[i]))) {
        ++i;
        continue;
      }
      std::size_t start = i;
      while (i < raw.size() &&
             !std::isspace(static_cast<unsigned char>(raw[i])))
        ++i;
      line.tokens.push_back({raw.substr(start, i - start), lineno, start + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

long long parse_int(const Token& t, long long lo, long long hi,
                    const char* what) {
  const std::string& s = t.text;
  std::size_t i = s.size() > 0 && (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size())
    throw ParseError(t.line, t.column, std::string("expected ") + what);
  for (std::size_t k = i; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k])))
      throw ParseError(t.line, t.column,
                       std::string("expected ") + what + ", got '" + s + "'");
  long long v = 0;
  try {
    v = std::stoll(s);
  } catch (const std::exception&) {
    throw ParseError(t.line, t.column,
                     std::string(what) + " out of range: '" + s + "'");
  }
  if (v < lo || v > hi)
    throw ParseError(t.line, t.column,
                     std::string(what) + " must lie in [" +
                         std::to_string(lo) + ", " + std::to_string(hi) +
                         "], got " + s);
  return v;
}

std::vector<std::uint32_t> parse_exponents(const Token& t, std::size_t nvars) {
  const std::string& s = t.text;
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw ParseError(t.line, t.column,
                     "expected an exponent vector like [1,0,2], got '" + s +
                         "'");
  std::vector<std::uint32_t> exps;
  std::size_t i = 1;
  while (i < s.size() - 1) {
    std::size_t start = i;
    while (i < s.size() - 1 && s[i] != ',') ++i;
    std::string entry = s.substr(start, i - start);
    if (entry.empty() ||
        entry.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError(t.line, t.column + start,
                       "exponent entries must be non-negative integers");
    long long v = 0;
    try {
      v = std::stoll(entry);
    } catch (const std::exception&) {
      throw ParseError(t.line, t.column + start, "exponent out of range");
    }
    if (v > 1000000)
      throw ParseError(t.line, t.column + start, "exponent out of range");
    exps.push_back(static_cast<std::uint32_t>(v));
    if (i < s.size() - 1) ++i;  // skip comma
  }
  if (s == "[]" || exps.size() != nvars)
    throw ParseError(t.line, t.column,
                     "exponent vector has " + std::to_string(exps.size()) +
                         " entries, expected " + std::to_string(nvars));
  return exps;
}

}  // namespace

VarietyModel parse_model(const std::string& text) {
  auto lines = tokenize(text);
  std::size_t at = 0;
  auto eof_line = lines.empty() ? 1 : lines.back().number;

  auto need_line = [&](const char* what) -> const Line& {
    if (at >= lines.size())
      throw ParseError(eof_line, 1,
                       std::string("unexpected end of document, expected ") +
                           what);
    return lines[at];
  };
  auto keyword_value = [&](const char* kw, const char* what,
                           long long lo, long long hi) -> long long {
    const Line& line = need_line(kw);
    const Token& head = line.tokens[0];
    if (head.text != kw)
      throw ParseError(head.line, head.column,
                       std::string("expected '") + kw + "', got '" +
                           head.text + "'");
    if (line.tokens.size() != 2)
      throw ParseError(head.line, head.column,
                       std::string("'") + kw + "' takes exactly one value");
    long long v = parse_int(line.tokens[1], lo, hi, what);
    ++at;
    return v;
  };

  VarietyModel model;
  model.name = "parsed";
  model.claims_present = false;

  if (at < lines.size() && lines[at].tokens[0].text == "model:") {
    const Line& line = lines[at];
    if (line.tokens.size() != 2)
      throw ParseError(line.tokens[0].line, line.tokens[0].column,
                       "'model:' takes exactly one name token");
    model.name = line.tokens[1].text;
    ++at;
  }

  long long nvars = keyword_value("variables:", "variable count", 1, 64);
  long long nouts = keyword_value("outputs:", "output count", 1, 256);

  PolynomialMap map;
  map.nvars = static_cast<std::size_t>(nvars);
  for (long long o = 0; o < nouts; ++o) {
    const Line& line = need_line("'output:'");
    const Token& head = line.tokens[0];
    if (head.text != "output:")
      throw ParseError(head.line, head.column,
                       "expected 'output:' (" + std::to_string(nouts) +
                           " outputs declared), got '" + head.text + "'");
    if ((line.tokens.size() - 1) % 2 != 0) {
      const Token& last = line.tokens.back();
      throw ParseError(last.line, last.column,
                       "terms come in pairs: coefficient then exponent "
                       "vector");
    }
    std::vector<Term> terms;
    for (std::size_t i = 1; i + 1 < line.tokens.size(); i += 2) {
      Term term;
      term.coeff = parse_int(line.tokens[i], -(1ll << 40), 1ll << 40,
                             "coefficient");
      term.exps = parse_exponents(line.tokens[i + 1], map.nvars);
      terms.push_back(std::move(term));
    }
    map.outputs.emplace_back(map.nvars, std::move(terms));
    ++at;
  }
  model.map = std::move(map);

  if (at < lines.size()) {
    const Line& line = lines[at];
    const Token& head = line.tokens[0];
    if (head.text != "claimed")
      throw ParseError(head.line, head.column,
                       "expected 'claimed {' or end of document, got '" +
                           head.text + "'");
    if (line.tokens.size() != 2 || line.tokens[1].text != "{")
      throw ParseError(head.line, head.column, "expected 'claimed {'");
    std::size_t block_line = head.line;
    ++at;

    std::optional<long long> cn, cN, cdelta, cquadrics;
    for (;;) {
      const Line& entry = need_line("'}' closing the claimed block");
      const Token& key = entry.tokens[0];
      if (key.text == "}") {
        if (entry.tokens.size() != 1)
          throw ParseError(key.line, key.column,
                           "'}' must stand on its own line");
        ++at;
        break;
      }
      std::optional<long long>* target = nullptr;
      if (key.text == "n:")
        target = &cn;
      else if (key.text == "N:")
        target = &cN;
      else if (key.text == "delta:")
        target = &cdelta;
      else if (key.text == "quadrics:")
        target = &cquadrics;
      else
        throw ParseError(key.line, key.column,
                         "unknown claimed key '" + key.text +
                             "'; known keys: n: N: delta: quadrics:");
      if (entry.tokens.size() != 2)
        throw ParseError(key.line, key.column,
                         "'" + key.text + "' takes exactly one value");
      if (target->has_value())
        throw ParseError(key.line, key.column,
                         "duplicate claimed key '" + key.text + "'");
      *target = parse_int(entry.tokens[1], 0, 1ll << 40, "claimed value");
      ++at;
    }
    if (!cn || !cN || !cdelta)
      throw ParseError(block_line, 1,
                       "claimed block needs all of n:, N: and delta:");
    try {
      model.claimed = derived_invariants(*cn, *cN, *cdelta);
    } catch (const InputError& e) {
      throw ParseError(block_line, 1, e.what());
    }
    model.claimed_quadrics = cquadrics;
    model.claims_present = true;
  }

  if (at < lines.size()) {
    const Token& extra = lines[at].tokens[0];
    throw ParseError(extra.line, extra.column,
                     "unexpected content after the document: '" + extra.text +
                         "'");
  }
  return model;
}

std::string serialize_model(const VarietyModel& m) {
  if (!m.map)
    throw InputError("model '" + m.name +
                     "' has no parametrization, nothing to serialize");
  std::ostringstream out;
  out << "model: " << m.name << "\n";
  out << "variables: " << m.map->nvars << "\n";
  out << "outputs: " << m.map->outputs.size() << "\n";
  for (const auto& poly : m.map->outputs) {
    out << "output:";
    for (const auto& term : poly.terms()) {
      out << " " << term.coeff << " [";
      for (std::size_t i = 0; i < term.exps.size(); ++i) {
        if (i) out << ",";
        out << term.exps[i];
      }
      out << "]";
    }
    out << "\n";
  }
  if (m.claims_present) {
    out << "claimed {\n";
    out << "n: " << m.claimed.n << "\n";
    out << "N: " << m.claimed.N << "\n";
    out << "delta: " << m.claimed.delta << "\n";
    if (m.claimed_quadrics) out << "quadrics: " << *m.claimed_quadrics << "\n";
    out << "}\n";
  }
  return out.str();
}

}  // namespace qel

#ifndef QLOGIC_REPORT_HPP
#define QLOGIC_REPORT_HPP

// Report data model shared by every CLI command. Text, structured (JSON) and
// DOT output are all renderings of the same value.

#include <string>
#include <utility>
#include <vector>

#include "qlogic/serialize.hpp"

namespace qlogic {

struct Claim {
  std::string name;
  bool holds = false;
  std::string detail;

  friend bool operator==(const Claim&, const Claim&) = default;
};

struct Report {
  std::string title;
  std::vector<Claim> claims;
  /// Informational key/value lines (counts, verdicts that are not claims).
  std::vector<std::pair<std::string, std::string>> facts;
  /// Poset elements in canonical order and cover edges (lower, upper) by name.
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<Report> sections;

  Report& claim(std::string name, bool holds, std::string detail = {});
  Report& fact(std::string key, std::string value);

  /// Every claim here and in nested sections holds.
  bool ok() const;

  friend bool operator==(const Report&, const Report&) = default;
};

Json report_to_json(const Report& r);
/// Throws ParseError on a malformed report document.
Report report_from_json(const Json& j);

std::string render_text(const Report& r);
/// DOT digraph of the first report (depth first) that has elements.
std::string render_dot(const Report& r);

}  // namespace qlogic

#endif  // QLOGIC_REPORT_HPP

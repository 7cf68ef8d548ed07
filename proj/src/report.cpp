#include "qlogic/report.hpp"

#include <map>
#include <sstream>

#include "qlogic/errors.hpp"

namespace qlogic {

Report& Report::claim(std::string name, bool holds, std::string detail) {
  claims.push_back({std::move(name), holds, std::move(detail)});
  return *this;
}

Report& Report::fact(std::string key, std::string value) {
  facts.emplace_back(std::move(key), std::move(value));
  return *this;
}

bool Report::ok() const {
  for (const auto& c : claims)
    if (!c.holds) return false;
  for (const auto& s : sections)
    if (!s.ok()) return false;
  return true;
}

Json report_to_json(const Report& r) {
  Json j;
  j["title"] = r.title;
  j["ok"] = r.ok();
  Json claims = Json::array();
  for (const auto& c : r.claims) claims.push_back({{"name", c.name}, {"holds", c.holds}, {"detail", c.detail}});
  j["claims"] = std::move(claims);
  Json facts = Json::array();
  for (const auto& [k, v] : r.facts) facts.push_back(Json::array({k, v}));
  j["facts"] = std::move(facts);
  j["elements"] = r.elements;
  Json edges = Json::array();
  for (const auto& [a, b] : r.edges) edges.push_back(Json::array({a, b}));
  j["edges"] = std::move(edges);
  Json sections = Json::array();
  for (const auto& s : r.sections) sections.push_back(report_to_json(s));
  j["sections"] = std::move(sections);
  return j;
}

namespace {

Report report_from_json_at(const Json& j, const std::string& ctx) {
  auto need = [&](const char* key) -> const Json& {
    if (!j.is_object() || !j.contains(key)) throw ParseError(ctx + key, "missing field");
    return j.at(key);
  };
  auto pair_list = [&](const char* key) {
    std::vector<std::pair<std::string, std::string>> out;
    const Json& list = need(key);
    if (!list.is_array()) throw ParseError(ctx + key, "expected a list");
    for (const auto& p : list) {
      if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string())
        throw ParseError(ctx + key, "expected [string, string] entries");
      out.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
    }
    return out;
  };
  try {
    Report r;
    r.title = need("title").get<std::string>();
    for (const auto& c : need("claims"))
      r.claims.push_back({c.at("name").get<std::string>(), c.at("holds").get<bool>(),
                          c.at("detail").get<std::string>()});
    r.facts = pair_list("facts");
    r.elements = need("elements").get<std::vector<std::string>>();
    r.edges = pair_list("edges");
    const Json& sections = need("sections");
    for (std::size_t i = 0; i < sections.size(); ++i)
      r.sections.push_back(report_from_json_at(sections[i], ctx + "sections[" + std::to_string(i) + "]."));
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(ctx.empty() ? "report" : ctx.substr(0, ctx.size() - 1), e.what());
  }
}

void render_text_into(const Report& r, std::ostringstream& out, int depth) {
  const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  out << pad << (depth == 0 ? "== " : "-- ") << r.title << (depth == 0 ? " ==" : " --") << '\n';
  for (const auto& c : r.claims) {
    out << pad << "  [" << (c.holds ? "PASS" : "FAIL") << "] " << c.name;
    if (!c.detail.empty()) out << ": " << c.detail;
    out << '\n';
  }
  for (const auto& [k, v] : r.facts) out << pad << "  " << k << ": " << v << '\n';
  if (!r.elements.empty()) {
    out << pad << "  elements (" << r.elements.size() << "):";
    for (const auto& e : r.elements) out << ' ' << e;
    out << '\n';
  }
  if (!r.edges.empty()) {
    out << pad << "  cover edges (" << r.edges.size() << "):\n";
    for (const auto& [a, b] : r.edges) out << pad << "    " << a << " < " << b << '\n';
  }
  for (const auto& s : r.sections) render_text_into(s, out, depth + 1);
}

const Report* first_with_elements(const Report& r) {
  if (!r.elements.empty()) return &r;
  for (const auto& s : r.sections)
    if (const Report* found = first_with_elements(s)) return found;
  return nullptr;
}

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

}  // namespace

Report report_from_json(const Json& j) { return report_from_json_at(j, ""); }

std::string render_text(const Report& r) {
  std::ostringstream out;
  render_text_into(r, out, 0);
  out << "result: " << (r.ok() ? "all claims hold" : "some claims FAILED") << '\n';
  return out.str();
}

std::string render_dot(const Report& r) {
  const Report* src = first_with_elements(r);
  std::ostringstream out;
  out << "digraph " << dot_quote(src ? src->title : r.title) << " {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=box];\n";
  if (src) {
    std::map<std::string, std::size_t> id;
    for (std::size_t i = 0; i < src->elements.size(); ++i) {
      id.emplace(src->elements[i], i);
      out << "  n" << i << " [label=" << dot_quote(src->elements[i]) << "];\n";
    }
    for (const auto& [a, b] : src->edges) out << "  n" << id.at(a) << " -> n" << id.at(b) << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace qlogic

#include "qlogic/serialize.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "qlogic/errors.hpp"

namespace qlogic {

namespace {

std::string field(const std::string& context, const std::string& name) {
  return context.empty() ? name : context + "." + name;
}

std::string index(const std::string& context, std::size_t i) {
  return context + "[" + std::to_string(i) + "]";
}

const Json& require(const Json& j, const std::string& key, const std::string& context) {
  if (!j.is_object()) throw ParseError(context, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(field(context, key), "missing field");
  return *it;
}

std::string as_string(const Json& j, const std::string& context) {
  if (!j.is_string()) throw ParseError(context, "expected a string");
  return j.get<std::string>();
}

std::size_t as_size(const Json& j, const std::string& context) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0)
    throw ParseError(context, "expected a non-negative integer");
  return j.get<std::size_t>();
}

const Json& as_array(const Json& j, const std::string& context) {
  if (!j.is_array()) throw ParseError(context, "expected a list");
  return j;
}

Complex as_complex(const Json& j, const std::string& context) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  throw ParseError(context, "expected [re, im]");
}

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

ComplexMatrix grid_from_json(const Json& j, std::size_t rows, std::size_t cols,
                             const std::string& context) {
  as_array(j, context);
  if (j.size() != rows)
    throw ParseError(context, "expected " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
  ComplexMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string rc = index(context, r);
    as_array(j[r], rc);
    if (j[r].size() != cols)
      throw ParseError(rc, "expected " + std::to_string(cols) + " entries, got " + std::to_string(j[r].size()));
    for (std::size_t c = 0; c < cols; ++c) {
      const Complex z = as_complex(j[r][c], index(rc, c));
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw ParseError(index(rc, c), "entry is not finite");
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = z;
    }
  }
  return m;
}

Json grid_to_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string describe_kind(const Json& j) {
  if (j.is_array()) return "cstar";
  if (!j.is_object()) throw ParseError("", "document must be an object or a list of block sizes");
  if (auto it = j.find("kind"); it != j.end()) return as_string(*it, "kind");
  if (j.contains("objects")) return "groupoid";
  if (j.contains("mult")) return "algebra";
  if (j.contains("blocks")) return "cstar";
  if (j.contains("entries")) return "matrix";
  if (j.contains("payload")) return "morphism";
  throw ParseError("", "cannot tell what kind of document this is (no \"kind\" field)");
}

// Line and column of a byte offset, both 1-based.
std::pair<std::size_t, std::size_t> locate(std::string_view text, std::size_t offset) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

Json object_to_json(const Object& o) {
  if (!o.has_labels()) return o.size();
  Json j;
  j["size"] = o.size();
  j["labels"] = o.labels();
  return j;
}

Object object_from_json(const Json& j, Backend backend, const std::string& context) {
  std::size_t size = 0;
  std::vector<std::string> labels;
  if (j.is_object()) {
    size = as_size(require(j, "size", context), field(context, "size"));
    if (auto it = j.find("labels"); it != j.end()) {
      const std::string lc = field(context, "labels");
      as_array(*it, lc);
      for (std::size_t i = 0; i < it->size(); ++i) labels.push_back(as_string((*it)[i], index(lc, i)));
      if (labels.size() != size) throw ParseError(lc, "label count does not match size");
    }
  } else {
    size = as_size(j, context);
  }
  if (backend == Backend::fhilb) {
    if (size == 0) throw ParseError(context, "FHilb dimension must be at least 1");
    return Object::fhilb(size);
  }
  return Object::rel(size, std::move(labels));
}

Json morphism_to_json(const Morphism& m) {
  Json j;
  j["kind"] = "morphism";
  j["backend"] = std::string(to_string(m.backend()));
  j["dom"] = object_to_json(m.dom());
  j["cod"] = object_to_json(m.cod());
  if (m.backend() == Backend::fhilb) {
    j["payload"] = grid_to_json(m.matrix());
  } else {
    Json pairs = Json::array();
    for (auto [a, b] : m.relation().pairs()) pairs.push_back(Json::array({a, b}));
    j["payload"] = std::move(pairs);
  }
  return j;
}

Morphism morphism_from_json(const Json& j, const std::string& context, std::optional<Backend> inherited) {
  if (!j.is_object()) throw ParseError(context, "expected a morphism object");
  Backend backend;
  if (auto it = j.find("backend"); it != j.end()) {
    try {
      backend = backend_from_string(as_string(*it, field(context, "backend")));
    } catch (const ParseError& e) {
      throw ParseError(field(context, "backend"), e.message());
    }
    if (inherited && *inherited != backend)
      throw ParseError(field(context, "backend"), "does not match the enclosing document");
  } else if (inherited) {
    backend = *inherited;
  } else {
    throw ParseError(field(context, "backend"), "missing field");
  }
  const Object dom = object_from_json(require(j, "dom", context), backend, field(context, "dom"));
  const Object cod = object_from_json(require(j, "cod", context), backend, field(context, "cod"));
  const std::string pc = field(context, "payload");
  const Json& payload = require(j, "payload", context);
  try {
    if (backend == Backend::fhilb)
      return Morphism::from_matrix(dom, cod, grid_from_json(payload, cod.size(), dom.size(), pc));
    as_array(payload, pc);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t k = 0; k < payload.size(); ++k) {
      const std::string kc = index(pc, k);
      const Json& p = payload[k];
      if (!p.is_array() || p.size() != 2) throw ParseError(kc, "expected [i, j]");
      const std::size_t a = as_size(p[0], index(kc, 0));
      const std::size_t b = as_size(p[1], index(kc, 1));
      if (a >= dom.size()) throw ParseError(index(kc, 0), "index out of range for dom");
      if (b >= cod.size()) throw ParseError(index(kc, 1), "index out of range for cod");
      pairs.emplace_back(a, b);
    }
    return Morphism::from_pairs(dom, cod, pairs);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(pc, e.what());
  }
}

Json algebra_to_json(const FrobeniusAlgebra& alg) {
  Json j;
  j["kind"] = "algebra";
  j["backend"] = std::string(to_string(alg.backend()));
  j["carrier"] = object_to_json(alg.carrier());
  j["mult"] = morphism_to_json(alg.mult());
  j["unit"] = morphism_to_json(alg.unit());
  return j;
}

FrobeniusAlgebra algebra_from_json(const Json& j) {
  const Backend backend = [&] {
    try {
      return backend_from_string(as_string(require(j, "backend", ""), "backend"));
    } catch (const ParseError& e) {
      if (e.context() == "backend") throw;
      throw ParseError("backend", e.message());
    }
  }();
  const Object carrier = object_from_json(require(j, "carrier", ""), backend, "carrier");
  Morphism mult = morphism_from_json(require(j, "mult", ""), "mult", backend);
  Morphism unit = morphism_from_json(require(j, "unit", ""), "unit", backend);
  if (!(mult.cod() == carrier) || !(mult.dom() == tensor(carrier, carrier)))
    throw ParseError("mult", "must have type carrier (x) carrier -> carrier");
  if (!(unit.dom() == unit_object(backend)) || !(unit.cod() == carrier))
    throw ParseError("unit", "must have type I -> carrier");
  // Carry the carrier labels onto the structure maps.
  const Object cc = tensor(carrier, carrier);
  return FrobeniusAlgebra(retype(mult, cc, carrier), retype(unit, unit_object(backend), carrier));
}

Json groupoid_to_json(const GroupoidSpec& spec) {
  Json j;
  j["kind"] = "groupoid";
  j["objects"] = spec.objects;
  Json arrows = Json::array();
  for (const auto& a : spec.arrows) arrows.push_back({{"name", a.name}, {"dom", a.dom}, {"cod", a.cod}});
  j["morphisms"] = std::move(arrows);
  Json comp = Json::array();
  for (const auto& t : spec.compose) comp.push_back(Json::array({t[0], t[1], t[2]}));
  j["compose"] = std::move(comp);
  if (!spec.identities.empty()) j["identities"] = spec.identities;
  if (!spec.inverses.empty()) j["inverses"] = spec.inverses;
  return j;
}

GroupoidSpec groupoid_from_json(const Json& j) {
  GroupoidSpec spec;
  const Json& objects = as_array(require(j, "objects", ""), "objects");
  for (std::size_t i = 0; i < objects.size(); ++i)
    spec.objects.push_back(as_string(objects[i], index("objects", i)));
  const Json& arrows = as_array(require(j, "morphisms", ""), "morphisms");
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    const std::string c = index("morphisms", i);
    spec.arrows.push_back({as_string(require(arrows[i], "name", c), field(c, "name")),
                           as_string(require(arrows[i], "dom", c), field(c, "dom")),
                           as_string(require(arrows[i], "cod", c), field(c, "cod"))});
  }
  const Json& comp = as_array(require(j, "compose", ""), "compose");
  for (std::size_t i = 0; i < comp.size(); ++i) {
    const std::string c = index("compose", i);
    if (!comp[i].is_array() || comp[i].size() != 3) throw ParseError(c, "expected [f, g, h]");
    spec.compose.push_back({as_string(comp[i][0], index(c, 0)), as_string(comp[i][1], index(c, 1)),
                            as_string(comp[i][2], index(c, 2))});
  }
  auto read_map = [&](const char* key, std::map<std::string, std::string>& out) {
    auto it = j.find(key);
    if (it == j.end()) return;
    if (!it->is_object()) throw ParseError(key, "expected an object");
    for (const auto& [k, v] : it->items()) out[k] = as_string(v, field(key, k));
  };
  read_map("identities", spec.identities);
  read_map("inverses", spec.inverses);
  return spec;
}

Json matrix_to_json(const ComplexMatrix& m) {
  Json j;
  j["kind"] = "matrix";
  j["n"] = m.rows();
  j["entries"] = grid_to_json(m);
  return j;
}

ComplexMatrix matrix_from_json(const Json& j) {
  const std::size_t n = as_size(require(j, "n", ""), "n");
  if (n == 0) throw ParseError("n", "must be at least 1");
  return grid_from_json(require(j, "entries", ""), n, n, "entries");
}

Json cstar_to_json(const CStarSpec& spec) {
  Json j;
  j["kind"] = "cstar";
  j["blocks"] = spec.blocks;
  return j;
}

CStarSpec cstar_from_json(const Json& j) {
  const Json& blocks = j.is_array() ? j : as_array(require(j, "blocks", ""), "blocks");
  const std::string ctx = j.is_array() ? "" : "blocks";
  CStarSpec spec;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const std::size_t n = as_size(blocks[i], index(ctx, i));
    if (n == 0) throw ParseError(index(ctx, i), "block size must be at least 1");
    spec.blocks.push_back(n);
  }
  if (spec.blocks.empty()) throw ParseError(ctx, "need at least one block");
  return spec;
}

Document parse_document(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, col] = locate(text, e.byte == 0 ? 0 : e.byte - 1);
    std::string msg = e.what();
    // Drop the library prefix "[json.exception.parse_error.101] ".
    if (auto pos = msg.find("] "); pos != std::string::npos) msg = msg.substr(pos + 2);
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(col), msg);
  }
  const std::string kind = describe_kind(j);
  if (kind == "groupoid") return groupoid_from_json(j);
  if (kind == "algebra") return algebra_from_json(j);
  if (kind == "matrix") return matrix_from_json(j);
  if (kind == "cstar") return cstar_from_json(j);
  if (kind == "morphism") return morphism_from_json(j, "");
  throw ParseError("kind", "unknown document kind '" + kind + "'");
}

Document load_document(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string(), "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_document(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(e.context().empty() ? path.string() : path.string() + ": " + e.context(), e.message());
  }
}

Json document_to_json(const Document& doc) {
  struct Visitor {
    Json operator()(const GroupoidSpec& g) const { return groupoid_to_json(g); }
    Json operator()(const FrobeniusAlgebra& a) const { return algebra_to_json(a); }
    Json operator()(const ComplexMatrix& m) const { return matrix_to_json(m); }
    Json operator()(const CStarSpec& c) const { return cstar_to_json(c); }
    Json operator()(const Morphism& m) const { return morphism_to_json(m); }
  };
  return std::visit(Visitor{}, doc);
}

}  // namespace qlogic

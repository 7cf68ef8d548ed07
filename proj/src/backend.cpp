#include "qlogic/backend.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>

#include "qlogic/errors.hpp"

namespace qlogic {

std::string_view to_string(Backend backend) {
  return backend == Backend::fhilb ? "fhilb" : "rel";
}

Backend backend_from_string(std::string_view text) {
  if (text == "fhilb") return Backend::fhilb;
  if (text == "rel") return Backend::rel;
  throw ParseError("backend", "unknown backend '" + std::string(text) + "' (expected fhilb or rel)");
}

// ---------------------------------------------------------------------------
// Object

Object::Object(Backend backend, std::size_t size, std::vector<std::string> labels)
    : backend_(backend), size_(size), labels_(std::move(labels)) {}

Object Object::fhilb(std::size_t dim) {
  if (dim == 0) throw TypeMismatchError("FHilb objects must have dimension >= 1");
  return Object(Backend::fhilb, dim, {});
}

Object Object::rel(std::size_t size, std::vector<std::string> labels) {
  if (!labels.empty()) {
    if (labels.size() != size)
      throw TypeMismatchError("label count " + std::to_string(labels.size()) +
                              " does not match carrier size " + std::to_string(size));
    std::set<std::string> seen;
    for (const auto& l : labels)
      if (!seen.insert(l).second) throw TypeMismatchError("duplicate element label '" + l + "'");
  }
  return Object(Backend::rel, size, std::move(labels));
}

Object Object::unit(Backend backend) {
  return backend == Backend::fhilb ? fhilb(1) : rel(1);
}

std::string Object::label(std::size_t i) const {
  return labels_.empty() ? std::to_string(i) : labels_.at(i);
}

std::string Object::describe() const {
  return std::string(to_string(backend_)) + "(" + std::to_string(size_) + ")";
}

Object tensor(const Object& a, const Object& b) {
  if (a.backend() != b.backend())
    throw BackendMismatchError("cannot tensor " + a.describe() + " with " + b.describe());
  if (a.backend() == Backend::fhilb) return Object::fhilb(a.size() * b.size());
  std::vector<std::string> labels;
  if (a.has_labels() && b.has_labels() && a.size() * b.size() > 1) {
    labels.reserve(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j)
        labels.push_back("(" + a.label(i) + "," + b.label(j) + ")");
  }
  return Object::rel(a.size() * b.size(), std::move(labels));
}

Object unit_object(Backend backend) { return Object::unit(backend); }

// ---------------------------------------------------------------------------
// Relation

Relation::Relation(std::size_t dom, std::size_t cod)
    : dom_(dom), cod_(cod), stride_((cod + 63) / 64), words_(dom * stride_, 0) {}

std::size_t Relation::count() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::vector<std::size_t> Relation::image(std::size_t i) const {
  std::vector<std::size_t> out;
  auto r = row(i);
  for (std::size_t w = 0; w < r.size(); ++w) {
    auto bits = r[w];
    while (bits) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> Relation::pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < dom_; ++i)
    for (auto j : image(i)) out.emplace_back(i, j);
  return out;
}

// f after g: g relates dom(g) to dom(f) = cod(g), f relates that to cod(f).
Relation compose_relations(const Relation& f, const Relation& g) {
  Relation out(g.dom(), f.cod());
  for (std::size_t x = 0; x < g.dom(); ++x) {
    std::uint64_t* dst = out.mutable_row(x);
    for (auto y : g.image(x)) {
      auto src = f.row(y);
      for (std::size_t w = 0; w < out.stride_; ++w) dst[w] |= src[w];
    }
  }
  return out;
}

Relation tensor_relations(const Relation& f, const Relation& g) {
  Relation out(f.dom() * g.dom(), f.cod() * g.cod());
  for (std::size_t a = 0; a < f.dom(); ++a) {
    auto fa = f.image(a);
    if (fa.empty()) continue;
    for (std::size_t c = 0; c < g.dom(); ++c) {
      auto gc = g.image(c);
      for (auto b : fa)
        for (auto d : gc) out.set(a * g.dom() + c, b * g.cod() + d);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Tolerance

Tolerance::Tolerance(double eps) : epsilon(eps) {
  if (!(eps >= 0.0) || !std::isfinite(eps))
    throw std::invalid_argument("tolerance must be a finite non-negative number");
}

// ---------------------------------------------------------------------------
// Morphism

Morphism::Morphism(Object dom, Object cod, std::variant<ComplexMatrix, Relation> payload)
    : dom_(std::move(dom)), cod_(std::move(cod)), payload_(std::move(payload)) {}

Morphism Morphism::from_matrix(Object dom, Object cod, ComplexMatrix matrix) {
  if (dom.backend() != Backend::fhilb || cod.backend() != Backend::fhilb)
    throw BackendMismatchError("matrix payload requires FHilb objects");
  if (static_cast<std::size_t>(matrix.rows()) != cod.size() ||
      static_cast<std::size_t>(matrix.cols()) != dom.size())
    throw TypeMismatchError("matrix of shape " + std::to_string(matrix.rows()) + "x" +
                            std::to_string(matrix.cols()) + " does not match " + dom.describe() +
                            " -> " + cod.describe());
  if (!matrix.allFinite()) throw TypeMismatchError("matrix entries must be finite");
  return Morphism(std::move(dom), std::move(cod), std::move(matrix));
}

Morphism Morphism::from_relation(Object dom, Object cod, Relation relation) {
  if (dom.backend() != Backend::rel || cod.backend() != Backend::rel)
    throw BackendMismatchError("relation payload requires Rel objects");
  if (relation.dom() != dom.size() || relation.cod() != cod.size())
    throw TypeMismatchError("relation of shape " + std::to_string(relation.dom()) + "->" +
                            std::to_string(relation.cod()) + " does not match " + dom.describe() +
                            " -> " + cod.describe());
  return Morphism(std::move(dom), std::move(cod), std::move(relation));
}

Morphism Morphism::from_pairs(Object dom, Object cod,
                              std::span<const std::pair<std::size_t, std::size_t>> pairs) {
  Relation r(dom.size(), cod.size());
  for (auto [i, j] : pairs) {
    if (i >= dom.size() || j >= cod.size())
      throw TypeMismatchError("pair (" + std::to_string(i) + ", " + std::to_string(j) +
                              ") out of range for " + dom.describe() + " -> " + cod.describe());
    r.set(i, j);
  }
  return from_relation(std::move(dom), std::move(cod), std::move(r));
}

const ComplexMatrix& Morphism::matrix() const {
  if (auto* m = std::get_if<ComplexMatrix>(&payload_)) return *m;
  throw BackendMismatchError("morphism " + describe() + " has no matrix payload");
}

const Relation& Morphism::relation() const {
  if (auto* r = std::get_if<Relation>(&payload_)) return *r;
  throw BackendMismatchError("morphism " + describe() + " has no relation payload");
}

std::string Morphism::describe() const { return dom_.describe() + " -> " + cod_.describe(); }

namespace {

void require_same_backend(const Morphism& f, const Morphism& g, std::string_view op) {
  if (f.backend() != g.backend())
    throw BackendMismatchError(std::string(op) + ": cannot combine " + f.describe() + " with " +
                               g.describe());
}

}  // namespace

Morphism compose(const Morphism& f, const Morphism& g) {
  require_same_backend(f, g, "compose");
  if (!(f.dom() == g.cod()))
    throw TypeMismatchError("compose: dom(f) = " + f.dom().describe() +
                            " does not match cod(g) = " + g.cod().describe());
  if (f.backend() == Backend::fhilb)
    return Morphism::from_matrix(g.dom(), f.cod(), f.matrix() * g.matrix());
  return Morphism::from_relation(g.dom(), f.cod(), compose_relations(f.relation(), g.relation()));
}

Morphism tensor(const Morphism& f, const Morphism& g) {
  require_same_backend(f, g, "tensor");
  Object dom = tensor(f.dom(), g.dom());
  Object cod = tensor(f.cod(), g.cod());
  if (f.backend() == Backend::rel)
    return Morphism::from_relation(std::move(dom), std::move(cod),
                                   tensor_relations(f.relation(), g.relation()));
  const auto& a = f.matrix();
  const auto& b = g.matrix();
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return Morphism::from_matrix(std::move(dom), std::move(cod), std::move(out));
}

Morphism dagger(const Morphism& f) {
  if (f.backend() == Backend::fhilb) return Morphism::from_matrix(f.cod(), f.dom(), f.matrix().adjoint());
  const auto& r = f.relation();
  Relation t(r.cod(), r.dom());
  for (auto [i, j] : r.pairs()) t.set(j, i);
  return Morphism::from_relation(f.cod(), f.dom(), std::move(t));
}

Morphism identity(const Object& a) {
  if (a.backend() == Backend::fhilb) {
    auto n = static_cast<Eigen::Index>(a.size());
    return Morphism::from_matrix(a, a, ComplexMatrix::Identity(n, n));
  }
  Relation r(a.size(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.set(i, i);
  return Morphism::from_relation(a, a, std::move(r));
}

Morphism swap(const Object& a, const Object& b) {
  Object dom = tensor(a, b);
  Object cod = tensor(b, a);
  const std::size_t na = a.size(), nb = b.size();
  if (a.backend() == Backend::fhilb) {
    ComplexMatrix m = ComplexMatrix::Zero(static_cast<Eigen::Index>(na * nb),
                                          static_cast<Eigen::Index>(na * nb));
    for (std::size_t i = 0; i < na; ++i)
      for (std::size_t j = 0; j < nb; ++j)
        m(static_cast<Eigen::Index>(j * na + i), static_cast<Eigen::Index>(i * nb + j)) = 1.0;
    return Morphism::from_matrix(std::move(dom), std::move(cod), std::move(m));
  }
  Relation r(na * nb, na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) r.set(i * nb + j, j * na + i);
  return Morphism::from_relation(std::move(dom), std::move(cod), std::move(r));
}

Morphism zero_morphism(const Object& dom, const Object& cod) {
  if (dom.backend() != cod.backend())
    throw BackendMismatchError("zero morphism between different backends");
  if (dom.backend() == Backend::fhilb)
    return Morphism::from_matrix(dom, cod,
                                 ComplexMatrix::Zero(static_cast<Eigen::Index>(cod.size()),
                                                     static_cast<Eigen::Index>(dom.size())));
  return Morphism::from_relation(dom, cod, Relation(dom.size(), cod.size()));
}

Morphism retype(const Morphism& f, Object dom, Object cod) {
  if (!(dom == f.dom()) || !(cod == f.cod()))
    throw TypeMismatchError("retype: " + f.describe() + " cannot be viewed as " + dom.describe() +
                            " -> " + cod.describe());
  if (f.backend() == Backend::fhilb)
    return Morphism::from_matrix(std::move(dom), std::move(cod), f.matrix());
  return Morphism::from_relation(std::move(dom), std::move(cod), f.relation());
}

void require_parallel(const Morphism& f, const Morphism& g) {
  require_same_backend(f, g, "equal");
  if (!(f.dom() == g.dom()) || !(f.cod() == g.cod()))
    throw TypeMismatchError("cannot compare " + f.describe() + " with " + g.describe());
}

bool equal(const Morphism& f, const Morphism& g, Tolerance tol) {
  require_parallel(f, g);
  if (f.backend() == Backend::rel) return f.relation() == g.relation();
  const auto& a = f.matrix();
  const auto& b = g.matrix();
  if (a.size() == 0) return true;
  double scale = std::max({1.0, a.cwiseAbs().maxCoeff(), b.cwiseAbs().maxCoeff()});
  return (a - b).cwiseAbs().maxCoeff() <= tol.epsilon * scale;
}

double defect(const Morphism& f, const Morphism& g) {
  require_parallel(f, g);
  if (f.backend() == Backend::rel) {
    const auto& a = f.relation();
    const auto& b = g.relation();
    std::size_t diff = 0;
    for (std::size_t i = 0; i < a.dom(); ++i) {
      auto ra = a.row(i);
      auto rb = b.row(i);
      for (std::size_t w = 0; w < ra.size(); ++w)
        diff += static_cast<std::size_t>(std::popcount(ra[w] ^ rb[w]));
    }
    return static_cast<double>(diff);
  }
  if (f.matrix().size() == 0) return 0.0;
  return (f.matrix() - g.matrix()).cwiseAbs().maxCoeff();
}

}  // namespace qlogic

#ifndef QLOGIC_BACKEND_HPP
#define QLOGIC_BACKEND_HPP

// Dagger symmetric monoidal structure shared by the two executable categories:
// FHilb (complex matrices, adjoint, Kronecker product) and Rel (boolean
// relations, converse, cartesian product).
//
// Tensor index pairing is row-major in both backends: for objects A, B the
// pair (i, j) lives at index i * |B| + j of A (x) B.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <Eigen/Dense>

namespace qlogic {

enum class Backend { fhilb, rel };

std::string_view to_string(Backend backend);
Backend backend_from_string(std::string_view text);

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

/// An object of one of the two categories. FHilb objects are C^dim with
/// dim >= 1; Rel objects are finite sets {0, ..., size-1}, possibly empty,
/// optionally carrying element labels.
class Object {
 public:
  static Object fhilb(std::size_t dim);
  static Object rel(std::size_t size, std::vector<std::string> labels = {});
  static Object unit(Backend backend);

  Backend backend() const { return backend_; }
  std::size_t size() const { return size_; }
  const std::vector<std::string>& labels() const { return labels_; }
  bool has_labels() const { return !labels_.empty(); }

  /// Label of element i, or its decimal index when unlabeled.
  std::string label(std::size_t i) const;
  std::string describe() const;

  // Labels are decoration; identity is backend plus size.
  friend bool operator==(const Object& a, const Object& b) {
    return a.backend_ == b.backend_ && a.size_ == b.size_;
  }

 private:
  Object(Backend backend, std::size_t size, std::vector<std::string> labels);

  Backend backend_;
  std::size_t size_;
  std::vector<std::string> labels_;
};

Object tensor(const Object& a, const Object& b);

/// Dense boolean relation R subset of dom x cod, stored row-per-domain-element
/// as 64-bit words.
class Relation {
 public:
  Relation(std::size_t dom, std::size_t cod);

  std::size_t dom() const { return dom_; }
  std::size_t cod() const { return cod_; }

  bool test(std::size_t i, std::size_t j) const {
    return (row(i)[j / 64] >> (j % 64)) & 1U;
  }
  void set(std::size_t i, std::size_t j) { words_[i * stride_ + j / 64] |= std::uint64_t{1} << (j % 64); }

  std::span<const std::uint64_t> row(std::size_t i) const {
    return {words_.data() + i * stride_, stride_};
  }

  std::size_t count() const;
  bool empty() const { return count() == 0; }
  std::vector<std::pair<std::size_t, std::size_t>> pairs() const;

  /// Cod-indices related to domain element i.
  std::vector<std::size_t> image(std::size_t i) const;

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  friend Relation compose_relations(const Relation& f, const Relation& g);
  friend Relation tensor_relations(const Relation& f, const Relation& g);

  std::uint64_t* mutable_row(std::size_t i) { return words_.data() + i * stride_; }

  std::size_t dom_;
  std::size_t cod_;
  std::size_t stride_;
  std::vector<std::uint64_t> words_;
};

/// Comparison tolerance for FHilb. Rel comparisons are exact and ignore it.
struct Tolerance {
  double epsilon = 1e-9;

  Tolerance() = default;
  explicit Tolerance(double eps);
};

/// An immutable morphism dom -> cod. The FHilb payload is a cod x dom matrix;
/// the Rel payload is a relation between dom and cod elements.
class Morphism {
 public:
  static Morphism from_matrix(Object dom, Object cod, ComplexMatrix matrix);
  static Morphism from_relation(Object dom, Object cod, Relation relation);
  static Morphism from_pairs(Object dom, Object cod,
                             std::span<const std::pair<std::size_t, std::size_t>> pairs);

  const Object& dom() const { return dom_; }
  const Object& cod() const { return cod_; }
  Backend backend() const { return dom_.backend(); }

  /// Throws BackendMismatchError when called on the wrong backend.
  const ComplexMatrix& matrix() const;
  const Relation& relation() const;

  std::string describe() const;

 private:
  Morphism(Object dom, Object cod, std::variant<ComplexMatrix, Relation> payload);

  Object dom_;
  Object cod_;
  std::variant<ComplexMatrix, Relation> payload_;
};

Object unit_object(Backend backend);

Morphism compose(const Morphism& f, const Morphism& g);  // f after g
Morphism tensor(const Morphism& f, const Morphism& g);
Morphism dagger(const Morphism& f);
Morphism identity(const Object& a);
Morphism swap(const Object& a, const Object& b);
Morphism zero_morphism(const Object& dom, const Object& cod);

/// Same payload viewed between objects of the same sizes. This is how unitors
/// and associators act: I (x) A and A share an index set, so only the object
/// annotation changes.
Morphism retype(const Morphism& f, Object dom, Object cod);

/// FHilb: max |f - g| <= eps * max(1, largest entry magnitude of f or g).
/// Rel: set equality.
bool equal(const Morphism& f, const Morphism& g, Tolerance tol = {});

/// Size of the defect between f and g: largest absolute entry difference
/// (FHilb) or number of pairs in the symmetric difference (Rel).
double defect(const Morphism& f, const Morphism& g);

/// Same object types, same backend. Throws otherwise.
void require_parallel(const Morphism& f, const Morphism& g);

}  // namespace qlogic

#endif  // QLOGIC_BACKEND_HPP

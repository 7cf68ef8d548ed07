#ifndef QLOGIC_PROJORDER_HPP
#define QLOGIC_PROJORDER_HPP

// Order and orthogonality on a finite family of projections:
//   p <= q  iff  p . q = p
//   p _|_ q iff  p . q = 0
// plus lattice analytics (meets, joins, distributivity, modularity,
// orthocomplement candidates) over any finite poset.

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qlogic/errors.hpp"
#include "qlogic/frobenius.hpp"
#include "qlogic/groupoid.hpp"

namespace qlogic {

class BoolMatrix {
 public:
  BoolMatrix() = default;
  explicit BoolMatrix(std::size_t n) : n_(n), cells_(n * n, 0) {}

  std::size_t size() const { return n_; }
  bool operator()(std::size_t i, std::size_t j) const { return cells_[i * n_ + j] != 0; }
  void set(std::size_t i, std::size_t j, bool v = true) { cells_[i * n_ + j] = v ? 1 : 0; }

  friend bool operator==(const BoolMatrix&, const BoolMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<unsigned char> cells_;
};

struct NamedPoint {
  std::string name;
  Point point;
};

using CoverEdge = std::pair<std::size_t, std::size_t>;  // (lower, upper)

struct ProjectionPoset {
  std::vector<std::string> names;
  std::vector<Point> points;
  BoolMatrix leq;
  BoolMatrix orth;
  std::optional<std::size_t> zero;
  std::vector<CoverEdge> hasse;

  std::size_t size() const { return names.size(); }
  std::optional<std::size_t> index_of(const std::string& name) const;
};

class NotAProjectionError : public Error {
 public:
  explicit NotAProjectionError(const std::string& name)
      : Error("family member '" + name + "' is not a projection"), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

/// Builds the order and orthogonality of `family`, adjoining the zero point
/// (named "0") when no member is a zero projection. Throws
/// NotAProjectionError for a non-projection member and LawViolationError if
/// the resulting relations break any partial-order or orthogonality axiom.
ProjectionPoset build_poset(const FrobeniusAlgebra& alg, std::vector<NamedPoint> family,
                            Tolerance tol = {});

std::vector<LawViolation> check_partial_order(const ProjectionPoset& poset);

/// Symmetry, antireflexivity above zero, downward closure.
std::vector<LawViolation> check_orthogonality_axioms(const ProjectionPoset& poset);

/// Transitive reduction of a partial order, edges sorted by (lower, upper).
std::vector<CoverEdge> hasse_edges(const BoolMatrix& leq);
/// Reflexive-transitive closure of a cover relation.
BoolMatrix transitive_closure(std::size_t n, const std::vector<CoverEdge>& edges);

struct PairVerdict {
  std::size_t p;
  std::size_t q;
  bool commute;
  bool product_is_projection;
  bool product_is_glb;

  bool agree() const { return commute == product_is_projection && commute == product_is_glb; }
};

struct GlbEquivalenceReport {
  std::vector<PairVerdict> pairs;  // all ordered pairs p != q

  std::vector<PairVerdict> disagreements() const;
  std::size_t noncommuting_count() const;
};

/// For each pair: p . q = q . p, p . q is a projection, p . q is the glb.
GlbEquivalenceReport commute_glb_equivalence(const FrobeniusAlgebra& alg,
                                             const ProjectionPoset& poset, Tolerance tol = {});

using Triple = std::array<std::size_t, 3>;

struct ComplementProbe {
  std::size_t element;
  /// Maximum of {b : b _|_ element}, when it exists.
  std::optional<std::size_t> complement;
  bool meet_is_bottom = false;
  bool join_is_top = false;
  bool involutive = false;
  bool order_reversing = false;

  bool ok() const {
    return complement && meet_is_bottom && join_is_top && involutive && order_reversing;
  }
};

struct LatticeReport {
  bool is_lattice = false;
  std::optional<std::size_t> bottom;
  std::optional<std::size_t> top;
  std::vector<std::vector<std::optional<std::size_t>>> meet;
  std::vector<std::vector<std::optional<std::size_t>>> join;
  /// Only set when is_lattice.
  std::optional<bool> distributive;
  std::optional<Triple> distributive_witness;  // a & (b | c) != (a & b) | (a & c)
  std::optional<bool> modular;
  std::optional<Triple> modular_witness;  // a <= c, a | (b & c) != (a | b) & c
  /// Only filled when both a top and a bottom exist.
  std::vector<ComplementProbe> orthocomplement;
};

std::optional<std::size_t> greatest_lower_bound(const BoolMatrix& leq, std::size_t a, std::size_t b);
std::optional<std::size_t> least_upper_bound(const BoolMatrix& leq, std::size_t a, std::size_t b);

LatticeReport lattice_report(const ProjectionPoset& poset);

/// Forbidden-sublattice view of the same lattice: an M3 is three distinct
/// elements with equal pairwise meets and joins; an N5 is a < b and c with
/// a & c = b & c and a | c = b | c.
struct ForbiddenSublattices {
  std::optional<Triple> m3;
  std::optional<Triple> n5;  // (a, b, c)

  bool distributive() const { return !m3 && !n5; }
  bool modular() const { return !n5; }
};

/// Requires report.is_lattice.
ForbiddenSublattices find_forbidden_sublattices(const LatticeReport& report);

std::vector<ComplementProbe> orthocomplement_probe(const ProjectionPoset& poset);

/// Subset-inclusion order on subgroupoids; orthogonality is disjointness
/// (which coincides with a zero product for subgroupoids).
ProjectionPoset inclusion_poset(const Groupoid& g, const std::vector<Subgroupoid>& subgroupoids);

enum class OrderRelation { equal, dual, dual_above_zero, unrelated };
std::string_view to_string(OrderRelation r);

struct OrderDifference {
  std::string a;
  std::string b;
  bool first_leq;   // a <= b in the first order
  bool second_leq;  // a <= b in the second order
};

struct OrderComparison {
  OrderRelation relation;
  std::vector<OrderDifference> differences;
};

/// Both posets must have the same element names.
OrderComparison compare_orders(const ProjectionPoset& first, const ProjectionPoset& second);

struct OreVerdict {
  std::string name;
  bool abelian;
  bool cyclic;
  bool distributive;
  bool modular;
  std::size_t subgroup_count;

  bool agrees() const { return distributive == cyclic; }
};

/// Subgroup lattice distributive iff the group is cyclic, per fixture.
std::vector<OreVerdict> ore_crossvalidate(const std::vector<std::pair<std::string, Groupoid>>& groups);

}  // namespace qlogic

#endif  // QLOGIC_PROJORDER_HPP

#ifndef QLOGIC_GROUPOID_HPP
#define QLOGIC_GROUPOID_HPP

// Finite groupoids and the symmetric dagger Frobenius algebras they induce in
// Rel. Composition convention: compose(f, g) is "g then f", defined exactly
// when dom(f) = cod(g).

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qlogic/errors.hpp"
#include "qlogic/frobenius.hpp"

namespace qlogic {

struct ArrowSpec {
  std::string name;
  std::string dom;
  std::string cod;
};

/// Raw, unvalidated groupoid description as read from a document.
struct GroupoidSpec {
  std::vector<std::string> objects;
  std::vector<ArrowSpec> arrows;
  /// Triples {f, g, h} meaning f o g = h.
  std::vector<std::array<std::string, 3>> compose;
  /// Optional declarations, cross-checked against the inferred ones.
  std::map<std::string, std::string> identities;  // object -> arrow
  std::map<std::string, std::string> inverses;    // arrow -> arrow
};

/// Hard upper bound on carrier size (arrow sets are 64-bit masks).
inline constexpr std::size_t kMaxArrows = 64;

/// Subset of the arrows of a groupoid with at most 64 arrows.
class ArrowSet {
 public:
  constexpr ArrowSet() = default;
  constexpr explicit ArrowSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr ArrowSet full(std::size_t n) {
    return ArrowSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1U; }
  constexpr void insert(std::size_t i) { bits_ |= std::uint64_t{1} << i; }
  constexpr void erase(std::size_t i) { bits_ &= ~(std::uint64_t{1} << i); }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool subset_of(ArrowSet other) const { return (bits_ & ~other.bits_) == 0; }

  std::vector<std::size_t> elements() const;

  constexpr ArrowSet operator|(ArrowSet o) const { return ArrowSet(bits_ | o.bits_); }
  constexpr ArrowSet operator&(ArrowSet o) const { return ArrowSet(bits_ & o.bits_); }
  friend constexpr bool operator==(ArrowSet, ArrowSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Lectic order: A < B iff the smallest element of A xor B lies in B.
bool lectic_less(ArrowSet a, ArrowSet b);

class Groupoid {
 public:
  std::size_t object_count() const { return objects_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }
  const std::string& object_name(std::size_t x) const { return objects_.at(x); }
  const std::string& arrow_name(std::size_t f) const { return arrows_.at(f).name; }
  std::size_t dom(std::size_t f) const { return arrows_.at(f).dom; }
  std::size_t cod(std::size_t f) const { return arrows_.at(f).cod; }
  std::size_t identity(std::size_t x) const { return identities_.at(x); }
  std::size_t inverse(std::size_t f) const { return inverses_.at(f); }

  /// f o g, or nullopt when dom(f) != cod(g).
  std::optional<std::size_t> compose(std::size_t f, std::size_t g) const;

  std::optional<std::size_t> find_arrow(const std::string& name) const;
  std::optional<std::size_t> find_object(const std::string& name) const;

  /// Names of the members, in arrow order, e.g. "{id_x,f}"; "{}" when empty.
  std::string set_name(ArrowSet s) const;

  GroupoidSpec to_spec() const;

 private:
  friend Groupoid validate(const GroupoidSpec& spec);

  struct Arrow {
    std::string name;
    std::size_t dom;
    std::size_t cod;
  };

  std::vector<std::string> objects_;
  std::vector<Arrow> arrows_;
  std::vector<std::int32_t> table_;  // arrow_count^2, -1 where undefined
  std::vector<std::size_t> identities_;
  std::vector<std::size_t> inverses_;
};

/// Every groupoid-law violation of the raw spec, each with witnesses.
std::vector<LawViolation> check_laws(const GroupoidSpec& spec);

/// Throws LawViolationError listing all violations.
Groupoid validate(const GroupoidSpec& spec);

using Subgroupoid = ArrowSet;

struct EnumerationLimits {
  std::size_t max_closed_sets = 1'000'000;
  std::size_t max_carrier = kMaxArrows;
};

/// Smallest subgroupoid containing s: adds identities at both ends, inverses,
/// and composites until nothing changes.
ArrowSet subgroupoid_closure(const Groupoid& g, ArrowSet s);
bool is_subgroupoid(const Groupoid& g, ArrowSet s);

/// All subgroupoids (including the empty one and the whole groupoid) in lectic
/// order, by Next-Closure.
std::vector<Subgroupoid> enumerate_subgroupoids_next_closure(const Groupoid& g,
                                                              EnumerationLimits limits = {});
/// Same set by scanning all 2^n subsets, returned in lectic order. Refuses
/// carriers above 24 arrows.
std::vector<Subgroupoid> enumerate_subgroupoids_brute_force(const Groupoid& g);

/// Next-Closure, cross-checked against the brute-force scan when the groupoid
/// has at most 16 arrows (throws LawViolationError on disagreement).
std::vector<Subgroupoid> enumerate_subgroupoids(const Groupoid& g, EnumerationLimits limits = {});

/// Carrier = arrows (labelled by name); mult relates (f, g) to f o g;
/// unit relates the point to every identity.
FrobeniusAlgebra to_algebra(const Groupoid& g);

Point subset_point(const FrobeniusAlgebra& alg, ArrowSet s);
ArrowSet point_subset(const Point& p);

/// Arrow sets of the connected components, ordered by smallest member.
std::vector<ArrowSet> connected_components(const Groupoid& g);

/// All copyable points of a Rel algebra: exhaustive subset scan for carriers
/// up to 16, component-generated candidates above that.
std::vector<Point> enumerate_copyables(const FrobeniusAlgebra& alg, EnumerationLimits limits = {});

/// Empty when the copyables are exactly the connected components plus the
/// empty set.
std::vector<LawViolation> copyable_component_mismatches(const Groupoid& g,
                                                        const std::vector<Point>& copyables);

Groupoid product(const Groupoid& g, const Groupoid& h);
Groupoid disjoint_union(const Groupoid& g, const Groupoid& h);

/// f o g = g o f whenever both are defined.
bool is_abelian(const Groupoid& g);
/// Only for one-object groupoids; a finite group is locally cyclic iff it is
/// cyclic, i.e. it has an element of order |G|.
bool is_cyclic_group(const Groupoid& g);

/// Group (one-object groupoid) from a Cayley table; element 0 must be neutral.
GroupoidSpec group_spec(const std::vector<std::string>& elements,
                        const std::vector<std::vector<std::size_t>>& table);

namespace fixtures {

Groupoid empty();
Groupoid trivial();
Groupoid cyclic(std::size_t n);
/// Elements (i,j) of Z2 x Z2 at index 2i + j, matching cyclic(2) x cyclic(2).
Groupoid klein4();
/// Symmetries of the n-gon; r^k at index k, s r^k at index n + k.
Groupoid dihedral(std::size_t n);
Groupoid quaternion8();
Groupoid symmetric3();
/// Objects x, y; arrows id_x, id_y, f: x -> y, f^-1: y -> x.
Groupoid interval();
/// A two-element magma in which the non-identity element is idempotent.
GroupoidSpec broken_inverse_spec();

}  // namespace fixtures

}  // namespace qlogic

#endif  // QLOGIC_GROUPOID_HPP

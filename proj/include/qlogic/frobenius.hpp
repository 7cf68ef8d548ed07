#ifndef QLOGIC_FROBENIUS_HPP
#define QLOGIC_FROBENIUS_HPP

#include <array>
#include <string_view>

#include "qlogic/backend.hpp"

namespace qlogic {

/// A (candidate) symmetric dagger Frobenius algebra given by its
/// multiplication A (x) A -> A and unit I -> A. The comultiplication and
/// counit are always the daggers of these, so the dagger condition holds by
/// construction; everything else is checked by check_axioms().
class FrobeniusAlgebra {
 public:
  FrobeniusAlgebra(Morphism mult, Morphism unit);

  const Object& carrier() const { return mult_.cod(); }
  Backend backend() const { return mult_.backend(); }
  const Morphism& mult() const { return mult_; }
  const Morphism& unit() const { return unit_; }
  Morphism comult() const { return dagger(mult_); }
  Morphism counit() const { return dagger(unit_); }

 private:
  Morphism mult_;
  Morphism unit_;
};

/// A state I -> A of a particular carrier.
class Point {
 public:
  Point(const FrobeniusAlgebra& alg, Morphism state);

  const Morphism& morphism() const { return state_; }
  const Object& carrier() const { return state_.cod(); }

 private:
  Morphism state_;
};

enum class Axiom {
  associativity,
  coassociativity,
  left_unit,
  right_unit,
  left_counit,
  right_counit,
  frobenius_left,   // (mult (x) 1) o (1 (x) comult) = comult o mult
  frobenius_right,  // (1 (x) mult) o (comult (x) 1) = comult o mult
  symmetry,         // counit o mult o swap = counit o mult
  yanking_left,     // (cap (x) 1) o (1 (x) cup) = 1
  yanking_right,    // (1 (x) cap) o (cup (x) 1) = 1
};

inline constexpr std::size_t kAxiomCount = 11;
std::string_view to_string(Axiom axiom);

struct AxiomCheck {
  Axiom axiom;
  bool holds = false;
  // Largest entry defect (FHilb) or number of mismatched pairs (Rel).
  double residual = 0.0;
};

struct AxiomReport {
  std::array<AxiomCheck, kAxiomCount> checks;

  const AxiomCheck& at(Axiom a) const { return checks[static_cast<std::size_t>(a)]; }
  bool passed() const;
  double max_residual() const;
};

AxiomReport check_axioms(const FrobeniusAlgebra& alg, Tolerance tol = {});

/// comult o unit : I -> A (x) A
Morphism induced_cup(const FrobeniusAlgebra& alg);
/// counit o mult : A (x) A -> I
Morphism induced_cap(const FrobeniusAlgebra& alg);

Point unit_point(const FrobeniusAlgebra& alg);
Point zero_point(const FrobeniusAlgebra& alg);

/// p . q = mult o (p (x) q)
Point mult_points(const FrobeniusAlgebra& alg, const Point& p, const Point& q);

/// p* = (p^dagger (x) 1) o cup
Point conjugate_point(const FrobeniusAlgebra& alg, const Point& p);

bool points_equal(const Point& p, const Point& q, Tolerance tol = {});

/// p . p = p and p* = p.
bool is_projection(const FrobeniusAlgebra& alg, const Point& p, Tolerance tol = {});

/// comult o x = x (x) x.
bool is_copyable(const FrobeniusAlgebra& alg, const Point& x, Tolerance tol = {});

/// mult o (x (x) 1) = mult o (1 (x) x) as maps A -> A.
bool is_central(const FrobeniusAlgebra& alg, const Point& x, Tolerance tol = {});

/// mult o swap = mult.
bool is_commutative(const FrobeniusAlgebra& alg, Tolerance tol = {});

/// z is a projection and z . p = z for every p in the family.
bool is_zero_projection(const FrobeniusAlgebra& alg, const Point& z, std::span<const Point> family,
                        Tolerance tol = {});

}  // namespace qlogic

#endif  // QLOGIC_FROBENIUS_HPP

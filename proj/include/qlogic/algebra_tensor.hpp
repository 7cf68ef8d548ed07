#ifndef QLOGIC_ALGEBRA_TENSOR_HPP
#define QLOGIC_ALGEBRA_TENSOR_HPP

#include <cstddef>
#include <vector>

#include "qlogic/frobenius.hpp"
#include "qlogic/projorder.hpp"

namespace qlogic {

/// (A (x) B) (x) (A (x) B) -> (A (x) A) (x) (B (x) B), i.e. 1 (x) swap(B, A) (x) 1.
/// Index (a1, b1, a2, b2) goes to (a1, a2, b1, b2).
Morphism middle_swap(const Object& a, const Object& b);

struct TensorAlgebra {
  FrobeniusAlgebra left;
  FrobeniusAlgebra right;
  /// Carrier A (x) B, mult (mult_A (x) mult_B) o middle_swap, unit unit_A (x) unit_B.
  FrobeniusAlgebra algebra;
  AxiomReport axioms;
};

/// Throws BackendMismatchError, or LawViolationError when a component fails
/// its axioms.
TensorAlgebra tensor_algebras(const FrobeniusAlgebra& a, const FrobeniusAlgebra& b,
                              Tolerance tol = {});

Point tensor_points(const TensorAlgebra& ta, const Point& p, const Point& q);

struct BiOrderReport {
  std::size_t interchange_checked = 0;
  std::size_t order_checked = 0;
  std::size_t orthogonality_checked = 0;
  std::size_t projection_checked = 0;
  std::vector<LawViolation> violations;

  bool passed() const { return violations.empty(); }
};

/// Exhaustive over the two families: interchange law, projection
/// preservation, order preservation in each argument, orthogonality
/// preservation in each argument (against the derived zero of A (x) B).
BiOrderReport bi_order_check(const TensorAlgebra& ta, const std::vector<NamedPoint>& family_a,
                             const std::vector<NamedPoint>& family_b, Tolerance tol = {});

/// 0_I : I -> I with 0_I (x) f independent of f.
Morphism zero_scalar(Backend backend);

/// 0_A = lambda o (0_I (x) 1_A) o lambda^-1 : A -> A.
Morphism zero_endomorphism(const Object& a);

/// 0_A applied to the unit of the algebra.
Point derived_zero_point(const FrobeniusAlgebra& alg);

}  // namespace qlogic

#endif  // QLOGIC_ALGEBRA_TENSOR_HPP

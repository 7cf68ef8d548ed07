#ifndef QLOGIC_CSTAR_HPP
#define QLOGIC_CSTAR_HPP

// Finite-dimensional C*-algebras as Frobenius algebras in FHilb.
//
// The matrix algebra M_n lives on C^(n*n): the matrix rho corresponds to the
// point with coordinate rho(i, j) at index i * n + j. Multiplication is
// |i,j> (x) |k,l> -> delta_jk |i,l>, so point multiplication is matrix
// multiplication and the induced conjugation is the adjoint.

#include <cstdint>
#include <vector>

#include "qlogic/frobenius.hpp"

namespace qlogic {

/// Block sizes [n_1, ..., n_k] of a direct sum of matrix algebras.
struct CStarSpec {
  std::vector<std::size_t> blocks;
};

FrobeniusAlgebra pants_algebra(std::size_t n);

/// Copy algebra on C^n: |i> (x) |j> -> delta_ij |i>, unit sum_i |i>.
FrobeniusAlgebra basis_algebra(std::size_t n);

/// Block-diagonal algebra on C^(sum n_i^2), blocks in spec order.
FrobeniusAlgebra direct_sum(const CStarSpec& spec);

/// Requires alg to be n*n dimensional and rho to be n x n.
Point point_from_matrix(const FrobeniusAlgebra& alg, const ComplexMatrix& rho);
ComplexMatrix matrix_from_point(const Point& p);

/// rho^2 = rho = rho^dagger within tolerance (same scaling as equal()).
bool is_orthogonal_projection(const ComplexMatrix& rho, Tolerance tol = {});

/// Projection onto im(p) intersect im(q).
ComplexMatrix subspace_meet(const ComplexMatrix& p, const ComplexMatrix& q, Tolerance tol = {});
/// Projection onto im(p) + im(q).
ComplexMatrix subspace_join(const ComplexMatrix& p, const ComplexMatrix& q, Tolerance tol = {});

/// Deterministic Hermitian idempotent of the given rank.
ComplexMatrix random_projection(std::size_t n, std::size_t rank, std::uint64_t seed);

}  // namespace qlogic

#endif  // QLOGIC_CSTAR_HPP

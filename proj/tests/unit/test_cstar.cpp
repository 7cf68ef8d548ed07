#include <doctest.h>

#include "qlogic/algebra_tensor.hpp"
#include "qlogic/cstar.hpp"
#include "qlogic/errors.hpp"
#include "support.hpp"

using namespace qlogic;
using qlogic::test::random_matrix;

namespace {

double max_diff(const ComplexMatrix& a, const ComplexMatrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

ComplexMatrix rank_one(Complex x, Complex y) {
  Eigen::VectorXcd v(2);
  v << x, y;
  v.normalize();
  return v * v.adjoint();
}

}  // namespace

TEST_CASE("matrix points multiply as matrices") {
  std::mt19937_64 rng(31);
  for (std::size_t n : {1, 2, 3}) {
    const FrobeniusAlgebra alg = pants_algebra(n);
    CHECK(max_diff(matrix_from_point(unit_point(alg)), ComplexMatrix::Identity(n, n)) < 1e-12);
    for (int s = 0; s < 100; ++s) {
      const ComplexMatrix rho = random_matrix(rng, n, n);
      const ComplexMatrix sigma = random_matrix(rng, n, n);
      const Point p = point_from_matrix(alg, rho);
      const Point q = point_from_matrix(alg, sigma);
      CHECK(max_diff(matrix_from_point(p), rho) == 0.0);
      CHECK(max_diff(matrix_from_point(mult_points(alg, p, q)), rho * sigma) < 1e-10);
      CHECK(max_diff(matrix_from_point(conjugate_point(alg, p)), rho.adjoint()) < 1e-10);
    }
  }
}

TEST_CASE("projection points are exactly the orthogonal projections") {
  std::mt19937_64 rng(41);
  for (std::size_t n : {2, 3}) {
    const FrobeniusAlgebra alg = pants_algebra(n);
    std::size_t positives = 0;
    for (int s = 0; s < 100; ++s) {
      const std::size_t rank = static_cast<std::size_t>(s) % (n + 1);
      ComplexMatrix rho = random_projection(n, rank, rng());
      switch (s % 4) {
        case 0: break;
        case 1: rho += random_matrix(rng, n, n) * 1e-3; break;  // near miss
        case 2: {  // oblique idempotent: rho^2 = rho, not self-adjoint
          const ComplexMatrix s_inv = random_matrix(rng, n, n);
          rho = s_inv * rho * s_inv.inverse();
          break;
        }
        case 3: rho = rho * 2.0; break;  // self-adjoint, not idempotent unless zero
      }
      const bool expected = is_orthogonal_projection(rho);
      positives += expected ? 1 : 0;
      CHECK(is_projection(alg, point_from_matrix(alg, rho)) == expected);
    }
    CHECK(positives >= 25);
    CHECK(positives <= 75);
  }
}

TEST_CASE("random projections are deterministic Hermitian idempotents of the requested rank") {
  for (std::size_t n = 1; n <= 5; ++n)
    for (std::size_t r = 0; r <= n; ++r) {
      const ComplexMatrix p = random_projection(n, r, 1234 + n * 10 + r);
      CHECK(is_orthogonal_projection(p));
      CHECK(std::abs(p.trace() - Complex(static_cast<double>(r), 0.0)) < 1e-9);
      CHECK(max_diff(p, random_projection(n, r, 1234 + n * 10 + r)) == 0.0);
    }
  CHECK_THROWS(random_projection(2, 3, 0));
}

TEST_CASE("subspace lattice of C^2 is not distributive") {
  const ComplexMatrix a = rank_one(1.0, 0.0);
  const ComplexMatrix b = rank_one(0.0, 1.0);
  const ComplexMatrix c = rank_one(1.0, 1.0);
  const ComplexMatrix zero = ComplexMatrix::Zero(2, 2);
  CHECK(max_diff(subspace_meet(a, subspace_join(b, c)), a) < 1e-9);
  CHECK(max_diff(subspace_join(subspace_meet(a, b), subspace_meet(a, c)), zero) < 1e-9);
  CHECK(max_diff(subspace_join(b, c), ComplexMatrix::Identity(2, 2)) < 1e-9);
}

TEST_CASE("subspace meet and join basics") {
  for (std::size_t n = 2; n <= 4; ++n)
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const ComplexMatrix p = random_projection(n, 1 + seed % (n - 1), seed);
      const ComplexMatrix q = random_projection(n, 1 + (seed + 1) % (n - 1), seed + 100);
      const ComplexMatrix zero = ComplexMatrix::Zero(n, n);
      const ComplexMatrix one = ComplexMatrix::Identity(n, n);
      CHECK(max_diff(subspace_meet(p, p), p) < 1e-9);
      CHECK(max_diff(subspace_join(p, p), p) < 1e-9);
      CHECK(max_diff(subspace_meet(p, one), p) < 1e-9);
      CHECK(max_diff(subspace_join(p, zero), p) < 1e-9);
      CHECK(max_diff(subspace_meet(p, q), subspace_meet(q, p)) < 1e-9);
      CHECK(is_orthogonal_projection(subspace_join(p, q)));
      CHECK(is_orthogonal_projection(subspace_meet(p, q)));
      // Complement: p & (1 - p) = 0 and p | (1 - p) = 1.
      CHECK(max_diff(subspace_meet(p, one - p), zero) < 1e-9);
      CHECK(max_diff(subspace_join(p, one - p), one) < 1e-9);
    }
  CHECK_THROWS_AS(subspace_meet(ComplexMatrix::Identity(2, 2) * 2.0, ComplexMatrix::Identity(2, 2)),
                  std::invalid_argument);
}

TEST_CASE("direct sums") {
  const FrobeniusAlgebra ds = direct_sum({{2, 1}});
  CHECK(ds.carrier().size() == 5);
  CHECK(check_axioms(ds).passed());
  CHECK_FALSE(is_commutative(ds));
  // Three one-dimensional blocks are the copy algebra on C^3.
  const FrobeniusAlgebra ones = direct_sum({{1, 1, 1}});
  const FrobeniusAlgebra b3 = basis_algebra(3);
  CHECK(equal(ones.mult(), b3.mult()));
  CHECK(equal(ones.unit(), b3.unit()));
  CHECK(equal(direct_sum({{3}}).mult(), pants_algebra(3).mult()));
  CHECK_THROWS_AS(direct_sum({{}}), std::invalid_argument);
  CHECK_THROWS_AS(direct_sum({{2, 0}}), std::invalid_argument);
}

TEST_CASE("only the zero point of the 2x2 matrix algebra is copyable") {
  const FrobeniusAlgebra alg = pants_algebra(2);
  CHECK(is_copyable(alg, zero_point(alg)));
  CHECK(is_copyable(alg, derived_zero_point(alg)));
  std::mt19937_64 rng(51);
  for (int s = 0; s < 100; ++s) {
    const Point p = point_from_matrix(alg, random_matrix(rng, 2, 2));
    CHECK_FALSE(is_copyable(alg, p));
  }
  CHECK_FALSE(is_copyable(alg, unit_point(alg)));
}

TEST_CASE("point_from_matrix rejects the wrong shape") {
  CHECK_THROWS_AS(point_from_matrix(pants_algebra(2), ComplexMatrix::Zero(3, 3)), TypeMismatchError);
  CHECK_THROWS_AS(point_from_matrix(basis_algebra(3), ComplexMatrix::Zero(2, 2)), TypeMismatchError);
}

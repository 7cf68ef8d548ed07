#include "qlogic/cstar.hpp"

#include <cmath>
#include <random>

#include "qlogic/errors.hpp"

namespace qlogic {

namespace {

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

std::size_t matrix_side(std::size_t carrier) {
  const auto n = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(carrier))));
  if (n * n != carrier)
    throw TypeMismatchError("carrier of dimension " + std::to_string(carrier) +
                            " is not a matrix algebra carrier");
  return n;
}

double entry_scale(const ComplexMatrix& a, const ComplexMatrix& b) {
  double s = 1.0;
  if (a.size() > 0) s = std::max(s, a.cwiseAbs().maxCoeff());
  if (b.size() > 0) s = std::max(s, b.cwiseAbs().maxCoeff());
  return s;
}

bool close(const ComplexMatrix& a, const ComplexMatrix& b, Tolerance tol) {
  if (a.size() == 0) return true;
  return (a - b).cwiseAbs().maxCoeff() <= tol.epsilon * entry_scale(a, b);
}

}  // namespace

FrobeniusAlgebra direct_sum(const CStarSpec& spec) {
  if (spec.blocks.empty()) throw std::invalid_argument("direct sum needs at least one block");
  std::size_t dim = 0;
  for (auto n : spec.blocks) {
    if (n < 1) throw std::invalid_argument("matrix blocks must have size >= 1");
    dim += n * n;
  }
  const Object a = Object::fhilb(dim);
  ComplexMatrix mult = ComplexMatrix::Zero(idx(dim), idx(dim * dim));
  ComplexMatrix unit = ComplexMatrix::Zero(idx(dim), 1);

  std::size_t offset = 0;
  for (auto n : spec.blocks) {
    for (std::size_t i = 0; i < n; ++i) {
      unit(idx(offset + i * n + i), 0) = 1.0;
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t l = 0; l < n; ++l) {
          // |i,j> (x) |j,l> -> |i,l>
          const std::size_t left = offset + i * n + j;
          const std::size_t right = offset + j * n + l;
          mult(idx(offset + i * n + l), idx(left * dim + right)) = 1.0;
        }
    }
    offset += n * n;
  }
  return FrobeniusAlgebra(Morphism::from_matrix(tensor(a, a), a, std::move(mult)),
                          Morphism::from_matrix(Object::fhilb(1), a, std::move(unit)));
}

FrobeniusAlgebra pants_algebra(std::size_t n) {
  if (n < 1) throw std::invalid_argument("pants algebra needs n >= 1");
  return direct_sum(CStarSpec{{n}});
}

FrobeniusAlgebra basis_algebra(std::size_t n) {
  if (n < 1) throw std::invalid_argument("basis algebra needs n >= 1");
  const Object a = Object::fhilb(n);
  ComplexMatrix mult = ComplexMatrix::Zero(idx(n), idx(n * n));
  for (std::size_t i = 0; i < n; ++i) mult(idx(i), idx(i * n + i)) = 1.0;
  return FrobeniusAlgebra(Morphism::from_matrix(tensor(a, a), a, std::move(mult)),
                          Morphism::from_matrix(Object::fhilb(1), a, ComplexMatrix::Ones(idx(n), 1)));
}

Point point_from_matrix(const FrobeniusAlgebra& alg, const ComplexMatrix& rho) {
  if (alg.backend() != Backend::fhilb) throw BackendMismatchError("matrix points live in FHilb");
  const std::size_t n = matrix_side(alg.carrier().size());
  if (static_cast<std::size_t>(rho.rows()) != n || static_cast<std::size_t>(rho.cols()) != n)
    throw TypeMismatchError("expected a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
  ComplexMatrix column(idx(n * n), 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) column(idx(i * n + j), 0) = rho(idx(i), idx(j));
  return Point(alg, Morphism::from_matrix(Object::fhilb(1), alg.carrier(), std::move(column)));
}

ComplexMatrix matrix_from_point(const Point& p) {
  const std::size_t n = matrix_side(p.carrier().size());
  const ComplexMatrix& column = p.morphism().matrix();
  ComplexMatrix rho(idx(n), idx(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rho(idx(i), idx(j)) = column(idx(i * n + j), 0);
  return rho;
}

bool is_orthogonal_projection(const ComplexMatrix& rho, Tolerance tol) {
  if (rho.rows() != rho.cols()) return false;
  return close(rho * rho, rho, tol) && close(rho.adjoint(), rho, tol);
}

namespace {

void require_projection(const ComplexMatrix& p, const char* which, Tolerance tol) {
  if (!is_orthogonal_projection(p, tol))
    throw std::invalid_argument(std::string(which) + " is not an orthogonal projection");
}

// Orthogonal projection onto the span of the given orthonormal columns.
ComplexMatrix span_projection(const ComplexMatrix& columns) {
  ComplexMatrix p = columns * columns.adjoint();
  return (p + p.adjoint()) / 2.0;
}

}  // namespace

ComplexMatrix subspace_meet(const ComplexMatrix& p, const ComplexMatrix& q, Tolerance tol) {
  require_projection(p, "meet: left operand", tol);
  require_projection(q, "meet: right operand", tol);
  if (p.rows() != q.rows()) throw TypeMismatchError("meet: dimension mismatch");
  const Eigen::Index n = p.rows();
  // im(p) & im(q) = ker [I - p; I - q]
  ComplexMatrix stacked(2 * n, n);
  stacked << ComplexMatrix::Identity(n, n) - p, ComplexMatrix::Identity(n, n) - q;
  Eigen::JacobiSVD<ComplexMatrix> svd(stacked, Eigen::ComputeFullV);
  const auto& sigma = svd.singularValues();
  const double threshold = tol.epsilon * std::sqrt(static_cast<double>(n)) * sigma.maxCoeff();
  std::vector<Eigen::Index> kernel;
  for (Eigen::Index i = 0; i < n; ++i)
    if (sigma(i) <= threshold) kernel.push_back(i);
  ComplexMatrix basis(n, static_cast<Eigen::Index>(kernel.size()));
  for (std::size_t k = 0; k < kernel.size(); ++k)
    basis.col(static_cast<Eigen::Index>(k)) = svd.matrixV().col(kernel[k]);
  return span_projection(basis);
}

ComplexMatrix subspace_join(const ComplexMatrix& p, const ComplexMatrix& q, Tolerance tol) {
  require_projection(p, "join: left operand", tol);
  require_projection(q, "join: right operand", tol);
  if (p.rows() != q.rows()) throw TypeMismatchError("join: dimension mismatch");
  const Eigen::Index n = p.rows();
  ComplexMatrix side_by_side(n, 2 * n);
  side_by_side << p, q;
  Eigen::JacobiSVD<ComplexMatrix> svd(side_by_side, Eigen::ComputeThinU);
  const auto& sigma = svd.singularValues();
  const double threshold = tol.epsilon * std::sqrt(static_cast<double>(n)) * sigma.maxCoeff();
  Eigen::Index rank = 0;
  while (rank < sigma.size() && sigma(rank) > threshold) ++rank;
  return span_projection(svd.matrixU().leftCols(rank));
}

ComplexMatrix random_projection(std::size_t n, std::size_t rank, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_projection: n must be >= 1");
  if (rank > n) throw std::invalid_argument("random_projection: rank exceeds dimension");
  if (rank == 0) return ComplexMatrix::Zero(idx(n), idx(n));

  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(rank)};
  std::mt19937_64 rng(seq);
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix gaussian(idx(n), idx(rank));
  for (Eigen::Index j = 0; j < gaussian.cols(); ++j)
    for (Eigen::Index i = 0; i < gaussian.rows(); ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      gaussian(i, j) = Complex(re, im);
    }
  Eigen::HouseholderQR<ComplexMatrix> qr(gaussian);
  const ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(idx(n), idx(rank));
  return span_projection(q);
}

}  // namespace qlogic

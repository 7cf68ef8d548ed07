#ifndef QLOGIC_TEST_SUPPORT_HPP
#define QLOGIC_TEST_SUPPORT_HPP

#include <random>

#include "qlogic/backend.hpp"

namespace qlogic::test {

inline ComplexMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  std::normal_distribution<double> normal;
  ComplexMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) m(r, c) = Complex(normal(rng), normal(rng));
  return m;
}

inline Morphism random_fhilb(std::mt19937_64& rng, std::size_t dom, std::size_t cod) {
  return Morphism::from_matrix(Object::fhilb(dom), Object::fhilb(cod), random_matrix(rng, cod, dom));
}

inline Morphism random_rel(std::mt19937_64& rng, std::size_t dom, std::size_t cod, double density = 0.4) {
  std::bernoulli_distribution coin(density);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < dom; ++i)
    for (std::size_t j = 0; j < cod; ++j)
      if (coin(rng)) pairs.emplace_back(i, j);
  return Morphism::from_pairs(Object::rel(dom), Object::rel(cod), pairs);
}

inline Morphism random_morphism(Backend b, std::mt19937_64& rng, std::size_t dom, std::size_t cod) {
  return b == Backend::fhilb ? random_fhilb(rng, dom, cod) : random_rel(rng, dom, cod);
}

}  // namespace qlogic::test

#endif

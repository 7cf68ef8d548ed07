#include <doctest.h>

#include "qlogic/cli.hpp"
#include "qlogic/cstar.hpp"
#include "qlogic/errors.hpp"
#include "qlogic/groupoid.hpp"
#include "support.hpp"

using namespace qlogic;

namespace {

std::vector<std::pair<std::string, FrobeniusAlgebra>> fixture_algebras() {
  std::vector<std::pair<std::string, FrobeniusAlgebra>> out;
  for (std::size_t n = 1; n <= 3; ++n) out.emplace_back("pants" + std::to_string(n), pants_algebra(n));
  for (std::size_t n = 1; n <= 4; ++n) out.emplace_back("basis" + std::to_string(n), basis_algebra(n));
  out.emplace_back("direct-sum-2-1", direct_sum({{2, 1}}));
  out.emplace_back("klein4", to_algebra(fixtures::klein4()));
  out.emplace_back("interval", to_algebra(fixtures::interval()));
  out.emplace_back("symmetric3", to_algebra(fixtures::symmetric3()));
  out.emplace_back("cyclic5", to_algebra(fixtures::cyclic(5)));
  out.emplace_back("two-component", to_algebra(disjoint_union(fixtures::cyclic(2), fixtures::trivial())));
  out.emplace_back("empty", to_algebra(fixtures::empty()));
  return out;
}

// Points to exercise: all subsets for Rel, seeded random vectors plus the
// indicator points for FHilb.
std::vector<Point> sample_points(const FrobeniusAlgebra& alg, std::mt19937_64& rng) {
  std::vector<Point> out;
  const std::size_t n = alg.carrier().size();
  if (alg.backend() == Backend::rel) {
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << std::min<std::size_t>(n, 8)); ++m)
      out.push_back(indicator_point(alg, m));
    return out;
  }
  for (int s = 0; s < 6; ++s)
    out.emplace_back(alg, Morphism::from_matrix(unit_object(Backend::fhilb), alg.carrier(),
                                                qlogic::test::random_matrix(rng, n, 1)));
  for (std::size_t k = 0; k < n; ++k) out.push_back(indicator_point(alg, std::uint64_t{1} << k));
  return out;
}

// A -> A (x) A along the two sides of the Frobenius law.
std::pair<Morphism, Morphism> frobenius_law_sides(const FrobeniusAlgebra& alg) {
  const Object& a = alg.carrier();
  const Morphism id = identity(a);
  const Morphism cup = induced_cup(alg);
  const Object aa = tensor(a, a);
  const Object aaa = tensor(aa, a);
  const Morphism left = compose(tensor(alg.mult(), id), retype(tensor(id, cup), a, aaa));
  const Morphism right = compose(retype(tensor(id, alg.mult()), aaa, aa), retype(tensor(cup, id), a, aaa));
  return {left, right};
}

}  // namespace

TEST_CASE("every fixture algebra passes every axiom") {
  for (const auto& [name, alg] : fixture_algebras()) {
    CAPTURE(name);
    const AxiomReport r = check_axioms(alg);
    for (const auto& c : r.checks) {
      CAPTURE(to_string(c.axiom));
      CHECK(c.holds);
      CHECK(c.residual < 1e-9);
    }
    CHECK(r.passed());
  }
}

TEST_CASE("broken algebras fail the right axioms") {
  SUBCASE("scaled multiplication breaks unitality but stays associative") {
    const FrobeniusAlgebra b = basis_algebra(2);
    const FrobeniusAlgebra scaled(
        Morphism::from_matrix(b.mult().dom(), b.mult().cod(), b.mult().matrix() * 2.0), b.unit());
    const AxiomReport r = check_axioms(scaled);
    CHECK_FALSE(r.passed());
    CHECK(r.at(Axiom::associativity).holds);  // both sides scale by 4
    CHECK_FALSE(r.at(Axiom::left_unit).holds);
    CHECK(r.at(Axiom::left_unit).residual == doctest::Approx(1.0));
  }
  SUBCASE("the fault-order Rel algebra is not Frobenius") {
    CHECK_FALSE(check_axioms(fault_order_algebra()).passed());
  }
  SUBCASE("ill-typed structure maps are rejected up front") {
    const Object a = Object::fhilb(2);
    CHECK_THROWS_AS(FrobeniusAlgebra(identity(a), basis_algebra(2).unit()), TypeMismatchError);
    CHECK_THROWS_AS(FrobeniusAlgebra(basis_algebra(2).mult(), to_algebra(fixtures::cyclic(2)).unit()),
                    Error);
  }
}

TEST_CASE("comultiplication and counit are the daggers") {
  const FrobeniusAlgebra alg = pants_algebra(2);
  CHECK(equal(alg.comult(), dagger(alg.mult())));
  CHECK(equal(alg.counit(), dagger(alg.unit())));
  CHECK(equal(induced_cap(alg), dagger(induced_cup(alg))));
}

TEST_CASE("Frobenius law holds on every fixture") {
  for (const auto& [name, alg] : fixture_algebras()) {
    CAPTURE(name);
    auto [l, r] = frobenius_law_sides(alg);
    CHECK(equal(l, r));
  }
}

TEST_CASE("conjugation reverses products and is involutive") {
  std::mt19937_64 rng(21);
  for (const auto& [name, alg] : fixture_algebras()) {
    CAPTURE(name);
    const auto pts = sample_points(alg, rng);
    for (const auto& p : pts) {
      CHECK(points_equal(conjugate_point(alg, conjugate_point(alg, p)), p));
      for (const auto& q : pts) {
        const Point lhs = conjugate_point(alg, mult_points(alg, p, q));
        const Point rhs = mult_points(alg, conjugate_point(alg, q), conjugate_point(alg, p));
        CHECK(points_equal(lhs, rhs, Tolerance(1e-8)));
      }
    }
  }
}

TEST_CASE("a product of projections that is a projection commutes") {
  for (const auto& [name, alg] : fixture_algebras()) {
    if (alg.carrier().size() > 12) continue;
    CAPTURE(name);
    const auto family = indicator_projections(alg, Tolerance{}, 1u << 12);
    for (const auto& p : family)
      for (const auto& q : family) {
        const Point pq = mult_points(alg, p.point, q.point);
        if (is_projection(alg, pq)) CHECK(points_equal(pq, mult_points(alg, q.point, p.point)));
      }
  }
}

TEST_CASE("unit and zero points") {
  for (const auto& [name, alg] : fixture_algebras()) {
    CAPTURE(name);
    const Point u = unit_point(alg);
    const Point z = zero_point(alg);
    CHECK(is_projection(alg, u));
    CHECK(is_projection(alg, z));
    CHECK(is_central(alg, u));
    CHECK(is_copyable(alg, z));
    std::vector<Point> family = {u, z};
    CHECK(is_zero_projection(alg, z, family));
    if (alg.carrier().size() > 0) CHECK_FALSE(is_zero_projection(alg, u, family));
  }
}

TEST_CASE("commutativity") {
  CHECK(is_commutative(to_algebra(fixtures::klein4())));
  CHECK_FALSE(is_commutative(to_algebra(fixtures::interval())));
  CHECK(is_commutative(pants_algebra(1)));
  CHECK_FALSE(is_commutative(pants_algebra(2)));
  CHECK_FALSE(is_commutative(pants_algebra(3)));
  CHECK(is_commutative(basis_algebra(3)));
}

TEST_CASE("centrality in the matrix algebra") {
  const FrobeniusAlgebra alg = pants_algebra(2);
  ComplexMatrix rho = ComplexMatrix::Zero(2, 2);
  rho(0, 0) = 1.0;
  rho(1, 1) = 2.0;
  CHECK_FALSE(is_central(alg, point_from_matrix(alg, rho)));
  CHECK(is_central(alg, point_from_matrix(alg, ComplexMatrix::Identity(2, 2) * Complex(3.0, 1.0))));
}

TEST_CASE("copyable points are central and match the copy structure") {
  const FrobeniusAlgebra b = basis_algebra(3);
  for (std::uint64_t m = 1; m < 8; ++m) {
    const Point p = indicator_point(b, m);
    CHECK(is_copyable(b, p) == (std::popcount(m) == 1));
    if (is_copyable(b, p)) CHECK(is_central(b, p));
  }
  for (const char* g : {"klein4", "interval", "two-component", "symmetric3"}) {
    const Input in = load_input(g, RunConfig{});
    for (const auto& p : enumerate_copyables(*in.algebra)) CHECK(is_central(*in.algebra, p));
  }
}

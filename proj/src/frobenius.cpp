#include "qlogic/frobenius.hpp"

#include <algorithm>
#include <functional>

#include "qlogic/errors.hpp"

namespace qlogic {

FrobeniusAlgebra::FrobeniusAlgebra(Morphism mult, Morphism unit)
    : mult_(std::move(mult)), unit_(std::move(unit)) {
  if (mult_.backend() != unit_.backend())
    throw BackendMismatchError("multiplication and unit live in different backends");
  const Object& a = mult_.cod();
  if (!(mult_.dom() == tensor(a, a)))
    throw TypeMismatchError("multiplication must have type A (x) A -> A, got " + mult_.describe());
  if (!(unit_.dom() == unit_object(a.backend())) || !(unit_.cod() == a))
    throw TypeMismatchError("unit must have type I -> " + a.describe() + ", got " + unit_.describe());
}

Point::Point(const FrobeniusAlgebra& alg, Morphism state) : state_(std::move(state)) {
  if (state_.backend() != alg.backend())
    throw BackendMismatchError("point " + state_.describe() + " is not in the algebra's backend");
  if (!(state_.dom() == unit_object(alg.backend())) || !(state_.cod() == alg.carrier()))
    throw TypeMismatchError("point must have type I -> " + alg.carrier().describe() + ", got " +
                            state_.describe());
  state_ = retype(state_, unit_object(alg.backend()), alg.carrier());
}

std::string_view to_string(Axiom axiom) {
  switch (axiom) {
    case Axiom::associativity: return "associativity";
    case Axiom::coassociativity: return "coassociativity";
    case Axiom::left_unit: return "left unitality";
    case Axiom::right_unit: return "right unitality";
    case Axiom::left_counit: return "left counitality";
    case Axiom::right_counit: return "right counitality";
    case Axiom::frobenius_left: return "Frobenius condition (left)";
    case Axiom::frobenius_right: return "Frobenius condition (right)";
    case Axiom::symmetry: return "symmetry";
    case Axiom::yanking_left: return "yanking (left)";
    case Axiom::yanking_right: return "yanking (right)";
  }
  return "unknown axiom";
}

bool AxiomReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.holds; });
}

double AxiomReport::max_residual() const {
  double r = 0.0;
  for (const auto& c : checks) r = std::max(r, c.residual);
  return r;
}

Morphism induced_cup(const FrobeniusAlgebra& alg) { return compose(alg.comult(), alg.unit()); }

Morphism induced_cap(const FrobeniusAlgebra& alg) { return compose(alg.counit(), alg.mult()); }

AxiomReport check_axioms(const FrobeniusAlgebra& alg, Tolerance tol) {
  const Object& a = alg.carrier();
  const Morphism id = identity(a);
  const Morphism& m = alg.mult();
  const Morphism& u = alg.unit();
  const Morphism d = alg.comult();
  const Morphism e = alg.counit();

  // Each axiom is a pair of parallel morphisms.
  using Sides = std::pair<Morphism, Morphism>;
  const std::array<std::function<Sides()>, kAxiomCount> sides = {
      [&] { return Sides{compose(m, tensor(m, id)), compose(m, tensor(id, m))}; },
      [&] { return Sides{compose(tensor(d, id), d), compose(tensor(id, d), d)}; },
      [&] { return Sides{retype(compose(m, tensor(u, id)), a, a), id}; },
      [&] { return Sides{retype(compose(m, tensor(id, u)), a, a), id}; },
      [&] { return Sides{retype(compose(tensor(e, id), d), a, a), id}; },
      [&] { return Sides{retype(compose(tensor(id, e), d), a, a), id}; },
      [&] { return Sides{compose(tensor(m, id), tensor(id, d)), compose(d, m)}; },
      [&] { return Sides{compose(tensor(id, m), tensor(d, id)), compose(d, m)}; },
      [&] { return Sides{compose(compose(e, m), swap(a, a)), compose(e, m)}; },
      [&] {
        Morphism cup = induced_cup(alg), cap = induced_cap(alg);
        return Sides{retype(compose(tensor(cap, id), tensor(id, cup)), a, a), id};
      },
      [&] {
        Morphism cup = induced_cup(alg), cap = induced_cap(alg);
        return Sides{retype(compose(tensor(id, cap), tensor(cup, id)), a, a), id};
      },
  };

  AxiomReport report;
  for (std::size_t i = 0; i < kAxiomCount; ++i) {
    const auto axiom = static_cast<Axiom>(i);
    try {
      auto [lhs, rhs] = sides[i]();
      report.checks[i] = {axiom, equal(lhs, rhs, tol), defect(lhs, rhs)};
    } catch (const TypeMismatchError& err) {
      throw TypeMismatchError(std::string(to_string(axiom)) + ": " + err.what());
    }
  }
  return report;
}

Point unit_point(const FrobeniusAlgebra& alg) { return Point(alg, alg.unit()); }

Point zero_point(const FrobeniusAlgebra& alg) {
  return Point(alg, zero_morphism(unit_object(alg.backend()), alg.carrier()));
}

namespace {

void require_on(const FrobeniusAlgebra& alg, const Point& p) {
  if (!(p.carrier() == alg.carrier()) || p.morphism().backend() != alg.backend())
    throw TypeMismatchError("point on " + p.carrier().describe() +
                            " does not belong to algebra on " + alg.carrier().describe());
}

}  // namespace

Point mult_points(const FrobeniusAlgebra& alg, const Point& p, const Point& q) {
  require_on(alg, p);
  require_on(alg, q);
  return Point(alg, compose(alg.mult(), tensor(p.morphism(), q.morphism())));
}

Point conjugate_point(const FrobeniusAlgebra& alg, const Point& p) {
  require_on(alg, p);
  const Morphism bent = tensor(dagger(p.morphism()), identity(alg.carrier()));
  return Point(alg, compose(bent, induced_cup(alg)));
}

bool points_equal(const Point& p, const Point& q, Tolerance tol) {
  return equal(p.morphism(), q.morphism(), tol);
}

bool is_projection(const FrobeniusAlgebra& alg, const Point& p, Tolerance tol) {
  return points_equal(mult_points(alg, p, p), p, tol) &&
         points_equal(conjugate_point(alg, p), p, tol);
}

bool is_copyable(const FrobeniusAlgebra& alg, const Point& x, Tolerance tol) {
  require_on(alg, x);
  const Morphism copied = compose(alg.comult(), x.morphism());
  return equal(copied, tensor(x.morphism(), x.morphism()), tol);
}

bool is_central(const FrobeniusAlgebra& alg, const Point& x, Tolerance tol) {
  require_on(alg, x);
  const Object& a = alg.carrier();
  const Morphism id = identity(a);
  const Morphism left = retype(compose(alg.mult(), tensor(x.morphism(), id)), a, a);
  const Morphism right = retype(compose(alg.mult(), tensor(id, x.morphism())), a, a);
  return equal(left, right, tol);
}

bool is_commutative(const FrobeniusAlgebra& alg, Tolerance tol) {
  const Object& a = alg.carrier();
  return equal(compose(alg.mult(), swap(a, a)), alg.mult(), tol);
}

bool is_zero_projection(const FrobeniusAlgebra& alg, const Point& z, std::span<const Point> family,
                        Tolerance tol) {
  if (!is_projection(alg, z, tol)) return false;
  return std::all_of(family.begin(), family.end(), [&](const Point& p) {
    return points_equal(mult_points(alg, z, p), z, tol);
  });
}

}  // namespace qlogic

#include "qlogic/algebra_tensor.hpp"

#include "qlogic/errors.hpp"

namespace qlogic {

Morphism middle_swap(const Object& a, const Object& b) {
  return tensor(tensor(identity(a), swap(b, a)), identity(b));
}

namespace {

FrobeniusAlgebra compose_algebras(const FrobeniusAlgebra& a, const FrobeniusAlgebra& b) {
  const Object& ca = a.carrier();
  const Object& cb = b.carrier();
  const Object carrier = tensor(ca, cb);
  const Morphism mult = compose(tensor(a.mult(), b.mult()), middle_swap(ca, cb));
  return FrobeniusAlgebra(retype(mult, tensor(carrier, carrier), carrier),
                          retype(tensor(a.unit(), b.unit()), unit_object(a.backend()), carrier));
}

std::vector<LawViolation> failed_axioms(const AxiomReport& r, const std::string& which) {
  std::vector<LawViolation> out;
  for (const auto& c : r.checks)
    if (!c.holds)
      out.push_back({std::string(to_string(c.axiom)), {which}, "component algebra fails this axiom"});
  return out;
}

}  // namespace

TensorAlgebra tensor_algebras(const FrobeniusAlgebra& a, const FrobeniusAlgebra& b, Tolerance tol) {
  if (a.backend() != b.backend())
    throw BackendMismatchError("cannot tensor a " + std::string(to_string(a.backend())) +
                               " algebra with a " + std::string(to_string(b.backend())) + " algebra");
  auto violations = failed_axioms(check_axioms(a, tol), "left");
  for (auto& v : failed_axioms(check_axioms(b, tol), "right")) violations.push_back(std::move(v));
  if (!violations.empty()) throw LawViolationError(std::move(violations));

  FrobeniusAlgebra composite = compose_algebras(a, b);
  AxiomReport axioms = check_axioms(composite, tol);
  return TensorAlgebra{a, b, std::move(composite), axioms};
}

Point tensor_points(const TensorAlgebra& ta, const Point& p, const Point& q) {
  if (!(p.carrier() == ta.left.carrier()) || !(q.carrier() == ta.right.carrier()))
    throw TypeMismatchError("tensor_points: points do not belong to the component algebras");
  const Morphism pq = tensor(p.morphism(), q.morphism());
  return Point(ta.algebra, retype(pq, unit_object(ta.algebra.backend()), ta.algebra.carrier()));
}

BiOrderReport bi_order_check(const TensorAlgebra& ta, const std::vector<NamedPoint>& family_a,
                             const std::vector<NamedPoint>& family_b, Tolerance tol) {
  BiOrderReport report;
  const auto& A = ta.left;
  const auto& B = ta.right;
  const auto& AB = ta.algebra;
  const Point zero = derived_zero_point(AB);

  auto leq = [&](const FrobeniusAlgebra& alg, const Point& x, const Point& y) {
    return points_equal(mult_points(alg, x, y), x, tol);
  };
  auto orth = [&](const FrobeniusAlgebra& alg, const Point& x, const Point& y) {
    return points_equal(mult_points(alg, x, y), zero_point(alg), tol);
  };
  auto name = [](const NamedPoint& p, const NamedPoint& q) { return p.name + "(x)" + q.name; };

  // Cache all tensored points.
  std::vector<std::vector<Point>> t;
  for (const auto& p : family_a) {
    t.emplace_back();
    for (const auto& q : family_b) t.back().push_back(tensor_points(ta, p.point, q.point));
  }

  for (std::size_t i = 0; i < family_a.size(); ++i)
    for (std::size_t k = 0; k < family_b.size(); ++k) {
      ++report.projection_checked;
      if (!is_projection(AB, t[i][k], tol))
        report.violations.push_back({"tensor of projections is a projection",
                                     {name(family_a[i], family_b[k])}, ""});
    }

  for (std::size_t i = 0; i < family_a.size(); ++i)
    for (std::size_t i2 = 0; i2 < family_a.size(); ++i2) {
      const auto& p = family_a[i].point;
      const auto& p2 = family_a[i2].point;
      const Point pp = mult_points(A, p, p2);
      const bool p_leq = leq(A, p, p2);
      const bool p_orth = orth(A, p, p2);
      for (std::size_t k = 0; k < family_b.size(); ++k)
        for (std::size_t k2 = 0; k2 < family_b.size(); ++k2) {
          const auto& q = family_b[k].point;
          const auto& q2 = family_b[k2].point;
          ++report.interchange_checked;
          const Point lhs = mult_points(AB, t[i][k], t[i2][k2]);
          const Point rhs = tensor_points(ta, pp, mult_points(B, q, q2));
          if (!points_equal(lhs, rhs, tol))
            report.violations.push_back({"interchange",
                                         {name(family_a[i], family_b[k]), name(family_a[i2], family_b[k2])},
                                         "(p(x)q).(p'(x)q') != (p.p')(x)(q.q')"});
        }
      for (std::size_t k = 0; k < family_b.size(); ++k) {
        if (p_leq) {
          ++report.order_checked;
          if (!leq(AB, t[i][k], t[i2][k]))
            report.violations.push_back({"order preserved in the left argument",
                                         {family_a[i].name, family_a[i2].name, family_b[k].name}, ""});
        }
        if (p_orth) {
          ++report.orthogonality_checked;
          if (!points_equal(mult_points(AB, t[i][k], t[i2][k]), zero, tol))
            report.violations.push_back({"orthogonality preserved in the left argument",
                                         {family_a[i].name, family_a[i2].name, family_b[k].name}, ""});
        }
      }
    }

  for (std::size_t k = 0; k < family_b.size(); ++k)
    for (std::size_t k2 = 0; k2 < family_b.size(); ++k2) {
      const auto& q = family_b[k].point;
      const auto& q2 = family_b[k2].point;
      const bool q_leq = leq(B, q, q2);
      const bool q_orth = orth(B, q, q2);
      for (std::size_t i = 0; i < family_a.size(); ++i) {
        if (q_leq) {
          ++report.order_checked;
          if (!leq(AB, t[i][k], t[i][k2]))
            report.violations.push_back({"order preserved in the right argument",
                                         {family_a[i].name, family_b[k].name, family_b[k2].name}, ""});
        }
        if (q_orth) {
          ++report.orthogonality_checked;
          if (!points_equal(mult_points(AB, t[i][k], t[i][k2]), zero, tol))
            report.violations.push_back({"orthogonality preserved in the right argument",
                                         {family_a[i].name, family_b[k].name, family_b[k2].name}, ""});
        }
      }
    }
  return report;
}

Morphism zero_scalar(Backend backend) {
  const Object i = unit_object(backend);
  return zero_morphism(i, i);
}

Morphism zero_endomorphism(const Object& a) {
  const Morphism z = tensor(zero_scalar(a.backend()), identity(a));
  return retype(z, a, a);
}

Point derived_zero_point(const FrobeniusAlgebra& alg) {
  return Point(alg, compose(zero_endomorphism(alg.carrier()), alg.unit()));
}

}  // namespace qlogic

#include "qlogic/projorder.hpp"

#include <algorithm>
#include <map>

namespace qlogic {

std::optional<std::size_t> ProjectionPoset::index_of(const std::string& name) const {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names.begin());
}

// ---------------------------------------------------------------------------
// Construction

ProjectionPoset build_poset(const FrobeniusAlgebra& alg, std::vector<NamedPoint> family,
                            Tolerance tol) {
  for (const auto& member : family)
    if (!is_projection(alg, member.point, tol)) throw NotAProjectionError(member.name);
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      if (family[i].name == family[j].name)
        throw Error("duplicate family member name '" + family[i].name + "'");
      if (points_equal(family[i].point, family[j].point, tol))
        throw Error("family members '" + family[i].name + "' and '" + family[j].name +
                    "' are the same projection");
    }

  std::vector<Point> points;
  for (const auto& member : family) points.push_back(member.point);

  std::optional<std::size_t> zero;
  for (std::size_t i = 0; i < points.size() && !zero; ++i)
    if (is_zero_projection(alg, points[i], points, tol)) zero = i;
  if (!zero) {
    std::string name = "0";
    while (std::any_of(family.begin(), family.end(), [&](const NamedPoint& m) { return m.name == name; }))
      name += "'";
    family.push_back({name, zero_point(alg)});
    points.push_back(zero_point(alg));
    zero = points.size() - 1;
  }

  ProjectionPoset poset;
  const std::size_t n = points.size();
  for (const auto& member : family) poset.names.push_back(member.name);
  poset.points = points;
  poset.leq = BoolMatrix(n);
  poset.orth = BoolMatrix(n);
  poset.zero = zero;
  const Point& z = points[*zero];
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Point product = mult_points(alg, points[i], points[j]);
      poset.leq.set(i, j, points_equal(product, points[i], tol));
      poset.orth.set(i, j, points_equal(product, z, tol));
    }

  std::vector<LawViolation> violations;
  if (!is_zero_projection(alg, z, points, tol))
    violations.push_back({"zero projection annihilates the family", {poset.names[*zero]}, ""});
  for (auto& v : check_partial_order(poset)) violations.push_back(std::move(v));
  for (auto& v : check_orthogonality_axioms(poset)) violations.push_back(std::move(v));
  if (!violations.empty()) throw LawViolationError(std::move(violations));

  poset.hasse = hasse_edges(poset.leq);
  return poset;
}

std::vector<LawViolation> check_partial_order(const ProjectionPoset& poset) {
  std::vector<LawViolation> out;
  const auto& leq = poset.leq;
  const auto& name = poset.names;
  const std::size_t n = poset.size();
  for (std::size_t i = 0; i < n; ++i)
    if (!leq(i, i)) out.push_back({"reflexivity", {name[i]}, ""});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (leq(i, j) && leq(j, i)) out.push_back({"antisymmetry", {name[i], name[j]}, ""});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!leq(i, j)) continue;
      for (std::size_t k = 0; k < n; ++k)
        if (leq(j, k) && !leq(i, k)) out.push_back({"transitivity", {name[i], name[j], name[k]}, ""});
    }
  return out;
}

std::vector<LawViolation> check_orthogonality_axioms(const ProjectionPoset& poset) {
  std::vector<LawViolation> out;
  const auto& leq = poset.leq;
  const auto& orth = poset.orth;
  const auto& name = poset.names;
  const std::size_t n = poset.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (orth(i, j) != orth(j, i)) out.push_back({"orthogonality symmetry", {name[i], name[j]}, ""});
  for (std::size_t i = 0; i < n; ++i)
    if (orth(i, i) && poset.zero != i)
      out.push_back({"antireflexivity above zero", {name[i]}, "self-orthogonal but not zero"});
  // a <= a', b <= b', a' _|_ b'  =>  a _|_ b
  for (std::size_t a2 = 0; a2 < n; ++a2)
    for (std::size_t b2 = 0; b2 < n; ++b2) {
      if (!orth(a2, b2)) continue;
      for (std::size_t a = 0; a < n; ++a) {
        if (!leq(a, a2)) continue;
        for (std::size_t b = 0; b < n; ++b)
          if (leq(b, b2) && !orth(a, b))
            out.push_back({"downward closure", {name[a], name[a2], name[b], name[b2]}, ""});
      }
    }
  return out;
}

std::vector<CoverEdge> hasse_edges(const BoolMatrix& leq) {
  std::vector<CoverEdge> edges;
  const std::size_t n = leq.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !leq(i, j)) continue;
      bool covered = true;
      for (std::size_t k = 0; k < n && covered; ++k)
        if (k != i && k != j && leq(i, k) && leq(k, j)) covered = false;
      if (covered) edges.emplace_back(i, j);
    }
  return edges;
}

BoolMatrix transitive_closure(std::size_t n, const std::vector<CoverEdge>& edges) {
  BoolMatrix r(n);
  for (std::size_t i = 0; i < n; ++i) r.set(i, i);
  for (auto [a, b] : edges) r.set(a, b);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (r(i, k))
        for (std::size_t j = 0; j < n; ++j)
          if (r(k, j)) r.set(i, j);
  return r;
}

// ---------------------------------------------------------------------------
// Bounds

std::optional<std::size_t> greatest_lower_bound(const BoolMatrix& leq, std::size_t a, std::size_t b) {
  const std::size_t n = leq.size();
  for (std::size_t m = 0; m < n; ++m) {
    if (!leq(m, a) || !leq(m, b)) continue;
    bool greatest = true;
    for (std::size_t l = 0; l < n && greatest; ++l)
      if (leq(l, a) && leq(l, b) && !leq(l, m)) greatest = false;
    if (greatest) return m;
  }
  return std::nullopt;
}

std::optional<std::size_t> least_upper_bound(const BoolMatrix& leq, std::size_t a, std::size_t b) {
  const std::size_t n = leq.size();
  for (std::size_t m = 0; m < n; ++m) {
    if (!leq(a, m) || !leq(b, m)) continue;
    bool least = true;
    for (std::size_t u = 0; u < n && least; ++u)
      if (leq(a, u) && leq(b, u) && !leq(m, u)) least = false;
    if (least) return m;
  }
  return std::nullopt;
}

std::vector<PairVerdict> GlbEquivalenceReport::disagreements() const {
  std::vector<PairVerdict> out;
  std::copy_if(pairs.begin(), pairs.end(), std::back_inserter(out),
               [](const PairVerdict& v) { return !v.agree(); });
  return out;
}

std::size_t GlbEquivalenceReport::noncommuting_count() const {
  return static_cast<std::size_t>(
      std::count_if(pairs.begin(), pairs.end(), [](const PairVerdict& v) { return !v.commute; }));
}

GlbEquivalenceReport commute_glb_equivalence(const FrobeniusAlgebra& alg,
                                             const ProjectionPoset& poset, Tolerance tol) {
  GlbEquivalenceReport report;
  const std::size_t n = poset.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const Point pq = mult_points(alg, poset.points[i], poset.points[j]);
      const Point qp = mult_points(alg, poset.points[j], poset.points[i]);
      const auto glb = greatest_lower_bound(poset.leq, i, j);
      report.pairs.push_back({i, j, points_equal(pq, qp, tol), is_projection(alg, pq, tol),
                              glb && points_equal(pq, poset.points[*glb], tol)});
    }
  return report;
}

// ---------------------------------------------------------------------------
// Lattice analytics

namespace {

std::optional<std::size_t> find_extreme(const BoolMatrix& leq, bool bottom) {
  const std::size_t n = leq.size();
  for (std::size_t m = 0; m < n; ++m) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = bottom ? leq(m, x) : leq(x, m);
    if (ok) return m;
  }
  return std::nullopt;
}

}  // namespace

LatticeReport lattice_report(const ProjectionPoset& poset) {
  LatticeReport r;
  const std::size_t n = poset.size();
  const auto& leq = poset.leq;
  r.bottom = find_extreme(leq, true);
  r.top = find_extreme(leq, false);
  r.meet.assign(n, std::vector<std::optional<std::size_t>>(n));
  r.join.assign(n, std::vector<std::optional<std::size_t>>(n));
  r.is_lattice = true;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      r.meet[a][b] = greatest_lower_bound(leq, a, b);
      r.join[a][b] = least_upper_bound(leq, a, b);
      r.is_lattice = r.is_lattice && r.meet[a][b] && r.join[a][b];
    }

  if (r.is_lattice) {
    auto meet = [&](std::size_t a, std::size_t b) { return *r.meet[a][b]; };
    auto join = [&](std::size_t a, std::size_t b) { return *r.join[a][b]; };
    r.distributive = true;
    r.modular = true;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) {
          if (*r.distributive && meet(a, join(b, c)) != join(meet(a, b), meet(a, c))) {
            r.distributive = false;
            r.distributive_witness = Triple{a, b, c};
          }
          if (*r.modular && leq(a, c) && join(a, meet(b, c)) != meet(join(a, b), c)) {
            r.modular = false;
            r.modular_witness = Triple{a, b, c};
          }
        }
  }
  if (r.bottom && r.top) r.orthocomplement = orthocomplement_probe(poset);
  return r;
}

ForbiddenSublattices find_forbidden_sublattices(const LatticeReport& report) {
  if (!report.is_lattice) throw Error("forbidden-sublattice search needs a lattice");
  ForbiddenSublattices out;
  const std::size_t n = report.meet.size();
  auto meet = [&](std::size_t a, std::size_t b) { return *report.meet[a][b]; };
  auto join = [&](std::size_t a, std::size_t b) { return *report.join[a][b]; };
  for (std::size_t a = 0; a < n && !out.n5; ++a)
    for (std::size_t b = 0; b < n && !out.n5; ++b) {
      if (a == b || meet(a, b) != a) continue;  // need a < b
      for (std::size_t c = 0; c < n; ++c)
        if (meet(a, c) == meet(b, c) && join(a, c) == join(b, c)) {
          out.n5 = Triple{a, b, c};
          break;
        }
    }
  for (std::size_t a = 0; a < n && !out.m3; ++a)
    for (std::size_t b = a + 1; b < n && !out.m3; ++b)
      for (std::size_t c = b + 1; c < n; ++c) {
        const auto m = meet(a, b), j = join(a, b);
        if (m == a || m == b || m == c || j == a || j == b || j == c) continue;
        if (meet(a, c) == m && meet(b, c) == m && join(a, c) == j && join(b, c) == j) {
          out.m3 = Triple{a, b, c};
          break;
        }
      }
  return out;
}

std::vector<ComplementProbe> orthocomplement_probe(const ProjectionPoset& poset) {
  const auto& leq = poset.leq;
  const auto& orth = poset.orth;
  const std::size_t n = poset.size();
  const auto bottom = find_extreme(leq, true);
  const auto top = find_extreme(leq, false);
  if (!bottom || !top) throw Error("orthocomplement probe needs a top and a bottom element");

  std::vector<ComplementProbe> probes(n);
  for (std::size_t a = 0; a < n; ++a) {
    probes[a].element = a;
    for (std::size_t m = 0; m < n && !probes[a].complement; ++m) {
      if (!orth(m, a)) continue;
      bool maximum = true;
      for (std::size_t b = 0; b < n && maximum; ++b)
        if (orth(b, a) && !leq(b, m)) maximum = false;
      if (maximum) probes[a].complement = m;
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    auto& p = probes[a];
    if (!p.complement) continue;
    const std::size_t c = *p.complement;
    p.meet_is_bottom = greatest_lower_bound(leq, a, c) == bottom;
    p.join_is_top = least_upper_bound(leq, a, c) == top;
    p.involutive = probes[c].complement == a;
    p.order_reversing = true;
    for (std::size_t b = 0; b < n; ++b) {
      const auto& cb = probes[b].complement;
      if (!cb) continue;
      if ((leq(a, b) && !leq(*cb, c)) || (leq(b, a) && !leq(c, *cb))) p.order_reversing = false;
    }
  }
  return probes;
}

// ---------------------------------------------------------------------------
// Subgroupoid orders

ProjectionPoset inclusion_poset(const Groupoid& g, const std::vector<Subgroupoid>& subgroupoids) {
  const FrobeniusAlgebra alg = to_algebra(g);
  ProjectionPoset poset;
  const std::size_t n = subgroupoids.size();
  poset.leq = BoolMatrix(n);
  poset.orth = BoolMatrix(n);
  for (std::size_t i = 0; i < n; ++i) {
    poset.names.push_back(g.set_name(subgroupoids[i]));
    poset.points.push_back(subset_point(alg, subgroupoids[i]));
    if (subgroupoids[i].empty()) poset.zero = i;
    for (std::size_t j = 0; j < n; ++j) {
      poset.leq.set(i, j, subgroupoids[i].subset_of(subgroupoids[j]));
      poset.orth.set(i, j, (subgroupoids[i] & subgroupoids[j]).empty());
    }
  }
  poset.hasse = hasse_edges(poset.leq);
  return poset;
}

std::string_view to_string(OrderRelation r) {
  switch (r) {
    case OrderRelation::equal: return "equal";
    case OrderRelation::dual: return "dual";
    case OrderRelation::dual_above_zero: return "dual above zero";
    case OrderRelation::unrelated: return "neither equal nor dual";
  }
  return "unknown";
}

OrderComparison compare_orders(const ProjectionPoset& first, const ProjectionPoset& second) {
  const std::size_t n = first.size();
  if (second.size() != n) throw Error("compare_orders: element sets differ in size");
  std::vector<std::size_t> to_second(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto j = second.index_of(first.names[i]);
    if (!j) throw Error("compare_orders: '" + first.names[i] + "' missing from second order");
    to_second[i] = *j;
  }

  OrderComparison cmp;
  bool equal = true, dual = true, dual_above = first.zero.has_value() && second.zero.has_value() &&
                                              to_second[*first.zero] == *second.zero;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const bool a = first.leq(i, j);
      const bool b = second.leq(to_second[i], to_second[j]);
      const bool b_rev = second.leq(to_second[j], to_second[i]);
      if (a != b) {
        equal = false;
        cmp.differences.push_back({first.names[i], first.names[j], a, b});
      }
      if (a != b_rev) dual = false;
      if (dual_above && i != *first.zero && j != *first.zero && a != b_rev) dual_above = false;
    }
  if (equal) cmp.relation = OrderRelation::equal;
  else if (dual) cmp.relation = OrderRelation::dual;
  else if (dual_above) cmp.relation = OrderRelation::dual_above_zero;
  else cmp.relation = OrderRelation::unrelated;
  return cmp;
}

std::vector<OreVerdict> ore_crossvalidate(const std::vector<std::pair<std::string, Groupoid>>& groups) {
  std::vector<OreVerdict> out;
  for (const auto& [name, g] : groups) {
    if (g.object_count() != 1) throw Error("ore_crossvalidate: '" + name + "' is not a group");
    std::vector<Subgroupoid> subgroups;
    for (auto s : enumerate_subgroupoids(g))
      if (!s.empty()) subgroups.push_back(s);
    const LatticeReport report = lattice_report(inclusion_poset(g, subgroups));
    if (!report.is_lattice) throw Error("subgroup order of '" + name + "' is not a lattice");
    out.push_back({name, is_abelian(g), is_cyclic_group(g), *report.distributive, *report.modular,
                   subgroups.size()});
  }
  return out;
}

}  // namespace qlogic

#include "qlogic/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "qlogic/algebra_tensor.hpp"
#include "qlogic/cstar.hpp"
#include "qlogic/errors.hpp"
#include "qlogic/groupoid.hpp"

namespace qlogic {

namespace {

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join_names(const std::vector<std::string>& names, std::string_view sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += sep;
    out += names[i];
  }
  return out;
}

std::string violations_detail(const std::vector<LawViolation>& vs) {
  std::vector<std::string> parts;
  for (const auto& v : vs) parts.push_back(v.describe());
  return join_names(parts, "; ");
}

EnumerationLimits limits_of(const RunConfig& cfg) {
  EnumerationLimits l;
  l.max_closed_sets = cfg.max_enum;
  return l;
}

const FrobeniusAlgebra& require_algebra(const Input& in, const char* command) {
  if (!in.algebra)
    throw ParseError(in.name, std::string(command) + " needs a groupoid, algebra or C*-spec document");
  return *in.algebra;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

void add_axiom_claims(Report& r, const AxiomReport& axioms) {
  for (const auto& c : axioms.checks)
    r.claim(std::string(to_string(c.axiom)), c.holds, "residual " + num(c.residual));
  r.fact("max residual", num(axioms.max_residual()));
}

// Triple with a & (b | c) = a != (a & b) | (a & c).
std::optional<Triple> absorbing_witness(const LatticeReport& lr) {
  const std::size_t n = lr.meet.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        const std::size_t bc = *lr.join[b][c];
        const std::size_t lhs = *lr.meet[a][bc];
        const std::size_t rhs = *lr.join[*lr.meet[a][b]][*lr.meet[a][c]];
        if (lhs == a && rhs != a) return Triple{a, b, c};
      }
  return std::nullopt;
}

std::string triple_name(const ProjectionPoset& p, const Triple& t) {
  return "a=" + p.names[t[0]] + ", b=" + p.names[t[1]] + ", c=" + p.names[t[2]];
}

// Lattice analytics of a poset as claims (laws) and facts (verdicts).
Report lattice_section(const ProjectionPoset& poset, std::string title) {
  Report r;
  r.title = std::move(title);
  const auto po = check_partial_order(poset);
  const auto ov = check_orthogonality_axioms(poset);
  r.claim("partial order axioms", po.empty(), violations_detail(po));
  r.claim("orthogonality axioms", ov.empty(), violations_detail(ov));
  r.fact("elements", std::to_string(poset.size()));
  r.fact("cover edges", std::to_string(poset.hasse.size()));

  const LatticeReport lr = lattice_report(poset);
  r.fact("lattice", yes_no(lr.is_lattice));
  if (lr.bottom) r.fact("bottom", poset.names[*lr.bottom]);
  if (lr.top) r.fact("top", poset.names[*lr.top]);
  if (lr.is_lattice) {
    r.fact("distributive", *lr.distributive ? "yes" : "no (" + triple_name(poset, *lr.distributive_witness) + ")");
    r.fact("modular", *lr.modular ? "yes" : "no (" + triple_name(poset, *lr.modular_witness) + ")");
    const ForbiddenSublattices fs = find_forbidden_sublattices(lr);
    r.claim("distributivity and modularity agree with the M3/N5 search",
            fs.distributive() == *lr.distributive && fs.modular() == *lr.modular,
            std::string("M3 ") + (fs.m3 ? "found" : "absent") + ", N5 " + (fs.n5 ? "found" : "absent"));
  } else {
    r.fact("distributive", "not applicable");
    r.fact("modular", "not applicable");
  }
  if (!lr.orthocomplement.empty()) {
    std::vector<std::string> bad;
    for (const auto& p : lr.orthocomplement) {
      if (p.ok()) continue;
      std::string why = !p.complement ? "no greatest orthogonal element"
                        : !p.meet_is_bottom ? "meet with candidate is not bottom"
                        : !p.join_is_top    ? "join with candidate is not top"
                        : !p.involutive     ? "candidate map is not involutive"
                                            : "candidate map does not reverse order";
      bad.push_back(poset.names[p.element] + " (" + why + ")");
    }
    r.fact("orthocomplement probe", bad.empty() ? "every element has an orthocomplement"
                                                : std::to_string(bad.size()) + " of " +
                                                      std::to_string(poset.size()) + " fail: " + join_names(bad));
  } else {
    r.fact("orthocomplement probe", "skipped (no top or no bottom)");
  }
  attach_poset(r, poset);
  return r;
}

Report order_difference_section(const ProjectionPoset& mult, const ProjectionPoset& incl) {
  Report r;
  r.title = "multiplication order vs inclusion order";
  const OrderComparison cmp = compare_orders(mult, incl);
  r.fact("relation", std::string(to_string(cmp.relation)));
  r.fact("differing pairs", std::to_string(cmp.differences.size()));
  for (const auto& d : cmp.differences)
    r.fact(d.a + " vs " + d.b, std::string("mult ") + (d.first_leq ? "<=" : "not <=") + ", inclusion " +
                                   (d.second_leq ? "<=" : "not <="));
  return r;
}

ProjectionPoset subgroupoid_mult_poset(const Groupoid& g, const FrobeniusAlgebra& alg,
                                       const std::vector<Subgroupoid>& subs, Tolerance tol) {
  std::vector<NamedPoint> family;
  for (auto s : subs) family.push_back({g.set_name(s), subset_point(alg, s)});
  return build_poset(alg, std::move(family), tol);
}

Report klein4_counterexample(const RunConfig& cfg) {
  Report r;
  r.title = "klein4-nondistributive";
  const Groupoid g = fixtures::klein4();
  const auto subs = enumerate_subgroupoids(g, limits_of(cfg));
  r.claim("exactly 6 subgroupoids", subs.size() == 6, std::to_string(subs.size()) + " found");
  std::vector<std::string> proper;
  for (auto s : subs)
    if (s.size() > 1 && s.size() < g.arrow_count()) proper.push_back(g.set_name(s));
  r.claim("exactly 3 nontrivial proper subgroups", proper.size() == 3, join_names(proper));
  const FrobeniusAlgebra alg = to_algebra(g);
  r.claim("algebra is commutative", is_commutative(alg, cfg.tolerance));

  const ProjectionPoset incl = inclusion_poset(g, subs);
  const LatticeReport lr = lattice_report(incl);
  r.claim("inclusion order is a lattice", lr.is_lattice);
  if (lr.is_lattice) {
    r.claim("inclusion lattice is not distributive", !*lr.distributive,
            lr.distributive_witness ? triple_name(incl, *lr.distributive_witness) : "");
    const auto w = absorbing_witness(lr);
    r.claim("witness with a & (b | c) = a != (a & b) | (a & c)", w.has_value(),
            w ? triple_name(incl, *w) + "; (a & b) | (a & c) = " +
                    incl.names[*lr.join[*lr.meet[(*w)[0]][(*w)[1]]][*lr.meet[(*w)[0]][(*w)[2]]]]
              : "none found");
  }
  r.sections.push_back(lattice_section(incl, "inclusion lattice"));
  r.sections.push_back(order_difference_section(subgroupoid_mult_poset(g, alg, subs, cfg.tolerance), incl));
  return r;
}

// First pair (f, g) with f o g and g o f both defined but different.
std::optional<std::pair<std::size_t, std::size_t>> noncommuting_pair(const Groupoid& g) {
  for (std::size_t f = 0; f < g.arrow_count(); ++f)
    for (std::size_t h = 0; h < g.arrow_count(); ++h) {
      auto fh = g.compose(f, h);
      auto hf = g.compose(h, f);
      if (fh && hf && *fh != *hf) return std::pair{f, h};
    }
  return std::nullopt;
}

Report interval_counterexample(const RunConfig& cfg) {
  Report r;
  r.title = "interval-noncommutative";
  const Groupoid g = fixtures::interval();
  const auto subs = enumerate_subgroupoids(g, limits_of(cfg));
  r.claim("exactly 5 subgroupoids", subs.size() == 5, std::to_string(subs.size()) + " found");

  const FrobeniusAlgebra alg = to_algebra(g);
  const Object a = alg.carrier();
  const bool swapped_equal = equal(compose(alg.mult(), swap(a, a)), alg.mult(), cfg.tolerance);
  std::string witness = "none";
  if (auto p = noncommuting_pair(g))
    witness = g.arrow_name(p->first) + " o " + g.arrow_name(p->second) + " = " +
              g.arrow_name(*g.compose(p->first, p->second)) + " but " + g.arrow_name(p->second) + " o " +
              g.arrow_name(p->first) + " = " + g.arrow_name(*g.compose(p->second, p->first));
  r.claim("algebra is not commutative (mult o swap != mult)",
          !swapped_equal && !is_commutative(alg, cfg.tolerance), witness);

  const auto scanned = indicator_projections(alg, cfg.tolerance, cfg.max_enum);
  r.claim("exactly 5 projections, one per subgroupoid", scanned.size() == 5 && subs.size() == 5,
          std::to_string(scanned.size()) + " projections among all subsets");

  const ProjectionPoset incl = inclusion_poset(g, subs);
  const LatticeReport lr = lattice_report(incl);
  r.claim("inclusion lattice is distributive", lr.is_lattice && *lr.distributive);

  const ProjectionPoset mult = subgroupoid_mult_poset(g, alg, subs, cfg.tolerance);
  const GlbEquivalenceReport glb = commute_glb_equivalence(alg, mult, cfg.tolerance);
  r.claim("commute, product-is-projection and product-is-glb agree", glb.disagreements().empty(),
          std::to_string(glb.noncommuting_count()) + " non-commuting ordered pairs");

  r.sections.push_back(lattice_section(incl, "inclusion lattice"));
  r.sections.push_back(lattice_section(mult, "multiplication order"));
  r.sections.push_back(order_difference_section(mult, incl));
  return r;
}

Report fhilb_counterexample(const RunConfig& cfg) {
  Report r;
  r.title = "fhilb-nondistributive";
  const double tol = 1e-9;
  ComplexMatrix a = ComplexMatrix::Zero(2, 2);
  ComplexMatrix b = ComplexMatrix::Zero(2, 2);
  ComplexMatrix c = ComplexMatrix::Constant(2, 2, Complex(0.5, 0.0));
  a(0, 0) = 1.0;
  b(1, 1) = 1.0;
  const ComplexMatrix zero = ComplexMatrix::Zero(2, 2);
  const ComplexMatrix one = ComplexMatrix::Identity(2, 2);

  const ComplexMatrix lhs = subspace_meet(a, subspace_join(b, c, cfg.tolerance), cfg.tolerance);
  const ComplexMatrix rhs =
      subspace_join(subspace_meet(a, b, cfg.tolerance), subspace_meet(a, c, cfg.tolerance), cfg.tolerance);
  r.claim("a & (b | c) = a", max_abs_diff(lhs, a) <= tol, "max entry error " + num(max_abs_diff(lhs, a)));
  r.claim("(a & b) | (a & c) = 0", max_abs_diff(rhs, zero) <= tol,
          "max entry error " + num(max_abs_diff(rhs, zero)));
  r.claim("a != 0", max_abs_diff(a, zero) > tol);

  const FrobeniusAlgebra alg = pants_algebra(2);
  std::vector<NamedPoint> family = {{"0", point_from_matrix(alg, zero)},
                                    {"a", point_from_matrix(alg, a)},
                                    {"b", point_from_matrix(alg, b)},
                                    {"c", point_from_matrix(alg, c)},
                                    {"1", point_from_matrix(alg, one)}};
  const ProjectionPoset poset = build_poset(alg, family, cfg.tolerance);
  const LatticeReport lr = lattice_report(poset);
  r.claim("{0, a, b, c, 1} is a lattice under the multiplication order", lr.is_lattice);
  if (lr.is_lattice) {
    r.claim("that lattice is not distributive", !*lr.distributive);
    r.claim("that lattice is modular", *lr.modular);
    bool agree = true;
    for (std::size_t i = 0; i < poset.size(); ++i)
      for (std::size_t j = 0; j < poset.size(); ++j) {
        const ComplexMatrix pi = matrix_from_point(poset.points[i]);
        const ComplexMatrix pj = matrix_from_point(poset.points[j]);
        agree = agree &&
                max_abs_diff(matrix_from_point(poset.points[*lr.meet[i][j]]), subspace_meet(pi, pj, cfg.tolerance)) <= tol &&
                max_abs_diff(matrix_from_point(poset.points[*lr.join[i][j]]), subspace_join(pi, pj, cfg.tolerance)) <= tol;
      }
    r.claim("order-theoretic meets and joins match subspace intersection and span", agree);
  }
  r.sections.push_back(lattice_section(poset, "projections of C^2 spanned by (1,0), (0,1), (1,1)"));
  return r;
}

Report boolean_counterexample(const RunConfig& cfg) {
  Report r;
  r.title = "boolean-basis";
  for (std::size_t n = 1; n <= 4; ++n) {
    Report s;
    s.title = "basis(" + std::to_string(n) + ")";
    const FrobeniusAlgebra alg = basis_algebra(n);
    const auto family = indicator_projections(alg, cfg.tolerance, cfg.max_enum);
    const std::size_t expected = std::size_t{1} << n;
    s.claim("exactly 2^n projections among 0/1 points", family.size() == expected,
            std::to_string(family.size()) + " found");
    const ProjectionPoset poset = build_poset(alg, family, cfg.tolerance);
    const LatticeReport lr = lattice_report(poset);
    s.claim("lattice", lr.is_lattice);
    if (lr.is_lattice && poset.size() == expected) {
      // Indicator projections come out in mask order, so element i is mask i.
      bool boolean = true;
      for (std::size_t i = 0; i < expected; ++i)
        for (std::size_t j = 0; j < expected; ++j)
          boolean = boolean && *lr.meet[i][j] == (i & j) && *lr.join[i][j] == (i | j);
      s.claim("meet and join tables are bitwise and/or", boolean);
      s.claim("distributive", *lr.distributive);
      bool probes = !lr.orthocomplement.empty();
      for (const auto& p : lr.orthocomplement) probes = probes && p.ok();
      s.claim("orthocomplement probe succeeds on every element", probes);
    }
    s.sections.push_back(lattice_section(poset, "lattice"));
    r.sections.push_back(std::move(s));
  }
  return r;
}

}  // namespace

void attach_poset(Report& r, const ProjectionPoset& poset) {
  r.elements = poset.names;
  r.edges.clear();
  for (auto [lo, hi] : poset.hasse) r.edges.emplace_back(poset.names[lo], poset.names[hi]);
}

Input load_input(const std::string& spec, const RunConfig& cfg) {
  Input in{spec, resolve_document(spec), std::nullopt, std::nullopt};
  if (const auto* g = std::get_if<GroupoidSpec>(&in.document)) {
    in.groupoid = validate(*g);
    in.algebra = to_algebra(*in.groupoid);
  } else if (const auto* a = std::get_if<FrobeniusAlgebra>(&in.document)) {
    in.algebra = *a;
  } else if (const auto* c = std::get_if<CStarSpec>(&in.document)) {
    in.algebra = direct_sum(*c);
  }
  if (cfg.backend) {
    std::optional<Backend> actual;
    if (in.algebra) actual = in.algebra->backend();
    else if (std::holds_alternative<ComplexMatrix>(in.document)) actual = Backend::fhilb;
    else if (const auto* m = std::get_if<Morphism>(&in.document)) actual = m->backend();
    if (actual && *actual != *cfg.backend)
      throw BackendMismatchError(spec + " is a " + std::string(to_string(*actual)) + " document but --backend " +
                                 std::string(to_string(*cfg.backend)) + " was requested");
  }
  return in;
}

Point indicator_point(const FrobeniusAlgebra& alg, std::uint64_t mask) {
  const Object& a = alg.carrier();
  const Object i = unit_object(alg.backend());
  if (alg.backend() == Backend::fhilb) {
    ComplexMatrix m = ComplexMatrix::Zero(static_cast<Eigen::Index>(a.size()), 1);
    for (std::size_t k = 0; k < a.size(); ++k)
      if ((mask >> k) & 1U) m(static_cast<Eigen::Index>(k), 0) = 1.0;
    return Point(alg, Morphism::from_matrix(i, a, std::move(m)));
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t k = 0; k < a.size(); ++k)
    if ((mask >> k) & 1U) pairs.emplace_back(0, k);
  return Point(alg, Morphism::from_pairs(i, a, pairs));
}

std::string indicator_name(const FrobeniusAlgebra& alg, std::uint64_t mask) {
  std::vector<std::string> parts;
  for (std::size_t k = 0; k < alg.carrier().size(); ++k)
    if ((mask >> k) & 1U) parts.push_back(alg.carrier().label(k));
  return "{" + join_names(parts, ",") + "}";
}

std::vector<NamedPoint> indicator_projections(const FrobeniusAlgebra& alg, Tolerance tol, std::size_t max_enum) {
  const std::size_t n = alg.carrier().size();
  if (n >= 63 || (std::uint64_t{1} << n) > max_enum)
    throw ResourceLimitError("scanning 2^" + std::to_string(n) + " indicator points exceeds --max-enum " +
                             std::to_string(max_enum));
  std::vector<NamedPoint> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Point p = indicator_point(alg, mask);
    if (is_projection(alg, p, tol)) out.push_back({indicator_name(alg, mask), std::move(p)});
  }
  return out;
}

std::vector<NamedPoint> projection_family(const Input& in, const RunConfig& cfg) {
  if (in.groupoid) {
    std::vector<NamedPoint> out;
    for (auto s : enumerate_subgroupoids(*in.groupoid, limits_of(cfg)))
      out.push_back({in.groupoid->set_name(s), subset_point(*in.algebra, s)});
    return out;
  }
  return indicator_projections(require_algebra(in, "projections"), cfg.tolerance, cfg.max_enum);
}

std::vector<std::string> counterexample_names() {
  return {"klein4-nondistributive", "interval-noncommutative", "fhilb-nondistributive", "boolean-basis"};
}

Report counterexample_report(std::string_view name, const RunConfig& cfg) {
  if (name == "klein4-nondistributive") return klein4_counterexample(cfg);
  if (name == "interval-noncommutative") return interval_counterexample(cfg);
  if (name == "fhilb-nondistributive") return fhilb_counterexample(cfg);
  if (name == "boolean-basis") return boolean_counterexample(cfg);
  throw Error("unknown counterexample '" + std::string(name) + "' (expected one of: " +
              join_names(counterexample_names()) + ")");
}

Report validate_report(const Input& in, const RunConfig& cfg) {
  Report r;
  r.title = "validate " + in.name;
  if (in.groupoid) {
    r.claim("groupoid laws", true);
    r.fact("objects", std::to_string(in.groupoid->object_count()));
    r.fact("morphisms", std::to_string(in.groupoid->arrow_count()));
  }
  if (in.algebra) {
    r.fact("backend", std::string(to_string(in.algebra->backend())));
    r.fact("carrier", in.algebra->carrier().describe());
    add_axiom_claims(r, check_axioms(*in.algebra, cfg.tolerance));
  } else if (const auto* m = std::get_if<ComplexMatrix>(&in.document)) {
    r.fact("matrix", std::to_string(m->rows()) + " x " + std::to_string(m->cols()));
    r.fact("orthogonal projection", yes_no(is_orthogonal_projection(*m, cfg.tolerance)));
  } else if (const auto* f = std::get_if<Morphism>(&in.document)) {
    r.fact("morphism", f->describe());
  }
  return r;
}

Report projections_report(const Input& in, const RunConfig& cfg) {
  const FrobeniusAlgebra& alg = require_algebra(in, "projections");
  Report r;
  r.title = "projections of " + in.name;
  const auto family = projection_family(in, cfg);
  std::size_t bad = 0;
  for (const auto& p : family) bad += is_projection(alg, p.point, cfg.tolerance) ? 0 : 1;
  r.claim("every listed point is a projection", bad == 0);
  if (in.groupoid) {
    r.fact("method", "subgroupoid enumeration (Next-Closure)");
    if (in.groupoid->arrow_count() <= 16) {
      const auto scanned = indicator_projections(alg, cfg.tolerance, cfg.max_enum);
      std::set<std::string> a, b;
      for (const auto& p : family) a.insert(p.name);
      for (const auto& p : scanned) b.insert(p.name);
      r.claim("subgroupoids are exactly the projections among all subsets", a == b,
              std::to_string(scanned.size()) + " projections by exhaustive scan");
    }
  } else {
    r.fact("method", "exhaustive scan of 0/1 points");
  }
  r.fact("count", std::to_string(family.size()));
  for (const auto& p : family) r.elements.push_back(p.name);
  return r;
}

Report lattice_command_report(const Input& in, const RunConfig& cfg) {
  if (!cfg.order) throw ParseError("--order", "lattice needs --order mult or --order inclusion");
  if (*cfg.order == "inclusion") {
    if (!in.groupoid) throw ParseError("--order", "the inclusion order is only defined for groupoid inputs");
    const auto subs = enumerate_subgroupoids(*in.groupoid, limits_of(cfg));
    Report r = lattice_section(inclusion_poset(*in.groupoid, subs), "inclusion lattice of " + in.name);
    return r;
  }
  const FrobeniusAlgebra& alg = require_algebra(in, "lattice");
  std::optional<ProjectionPoset> built;
  try {
    built = build_poset(alg, projection_family(in, cfg), cfg.tolerance);
  } catch (const LawViolationError& e) {
    Report r;
    r.title = "multiplication order of " + in.name;
    for (const auto& v : e.violations())
      r.claim(v.law, false, (v.witness.empty() ? "" : "witness " + join_names(v.witness)) +
                                (v.message.empty() ? "" : ": " + v.message));
    return r;
  }
  const ProjectionPoset& poset = *built;
  Report r = lattice_section(poset, "multiplication order of " + in.name);
  const GlbEquivalenceReport glb = commute_glb_equivalence(alg, poset, cfg.tolerance);
  r.claim("commute, product-is-projection and product-is-glb agree", glb.disagreements().empty(),
          std::to_string(glb.noncommuting_count()) + " non-commuting ordered pairs");
  return r;
}

Report copyables_report(const Input& in, const RunConfig& cfg) {
  const FrobeniusAlgebra& alg = require_algebra(in, "copyables");
  Report r;
  r.title = "copyables of " + in.name;
  if (alg.backend() == Backend::rel) {
    const auto copyables = enumerate_copyables(alg, limits_of(cfg));
    bool central = true;
    for (const auto& p : copyables) {
      central = central && is_central(alg, p, cfg.tolerance);
      r.elements.push_back(indicator_name(alg, point_subset(p).bits()));
    }
    r.claim("every copyable point is central", central);
    if (in.groupoid) {
      const auto mism = copyable_component_mismatches(*in.groupoid, copyables);
      r.claim("copyables are the connected components plus the empty set", mism.empty(),
              violations_detail(mism));
      r.fact("connected components", std::to_string(connected_components(*in.groupoid).size()));
    }
    r.fact("count", std::to_string(copyables.size()));
    return r;
  }
  // FHilb: pointwise test on the zero point, the 0/1 basis vectors and random points.
  r.fact("method", "pointwise test (zero, basis vectors, 100 random points)");
  r.claim("zero point is copyable", is_copyable(alg, zero_point(alg), cfg.tolerance));
  const std::size_t n = alg.carrier().size();
  bool central = true;
  std::size_t basis_copyable = 0;
  for (std::size_t k = 0; k < n && k < 63; ++k) {
    const Point p = indicator_point(alg, std::uint64_t{1} << k);
    if (is_copyable(alg, p, cfg.tolerance)) {
      ++basis_copyable;
      central = central && is_central(alg, p, cfg.tolerance);
      r.elements.push_back(indicator_name(alg, std::uint64_t{1} << k));
    }
  }
  std::mt19937_64 rng(cfg.seed);
  std::normal_distribution<double> normal;
  std::size_t random_copyable = 0;
  for (int s = 0; s < 100; ++s) {
    ComplexMatrix v(static_cast<Eigen::Index>(n), 1);
    for (Eigen::Index k = 0; k < v.rows(); ++k) v(k, 0) = Complex(normal(rng), normal(rng));
    const Point p(alg, Morphism::from_matrix(unit_object(Backend::fhilb), alg.carrier(), v));
    if (is_copyable(alg, p, cfg.tolerance)) {
      ++random_copyable;
      central = central && is_central(alg, p, cfg.tolerance);
    }
  }
  r.claim("every copyable point found is central", central);
  r.fact("copyable basis vectors", std::to_string(basis_copyable) + " of " + std::to_string(n));
  r.fact("copyable random points", std::to_string(random_copyable) + " of 100 (seed " +
                                       std::to_string(cfg.seed) + ")");
  return r;
}

Report tensor_report(const Input& a, const Input& b, const RunConfig& cfg) {
  const FrobeniusAlgebra& alg_a = require_algebra(a, "tensor");
  const FrobeniusAlgebra& alg_b = require_algebra(b, "tensor");
  Report r;
  r.title = "tensor " + a.name + " (x) " + b.name;
  const TensorAlgebra ta = tensor_algebras(alg_a, alg_b, cfg.tolerance);
  r.fact("carrier", ta.algebra.carrier().describe());
  bool all = true;
  for (const auto& c : ta.axioms.checks) {
    all = all && c.holds;
    if (!c.holds) r.claim(std::string(to_string(c.axiom)), false, "residual " + num(c.residual));
  }
  r.claim("composite passes every axiom", all, "max residual " + num(ta.axioms.max_residual()));

  const auto fa = projection_family(a, cfg);
  const auto fb = projection_family(b, cfg);
  const std::size_t pairs = fa.size() * fb.size();
  if (pairs * pairs > cfg.max_enum)
    throw ResourceLimitError("bi-order check needs " + std::to_string(pairs * pairs) +
                             " interchange checks, above --max-enum");
  const BiOrderReport bo = bi_order_check(ta, fa, fb, cfg.tolerance);
  auto count_law = [&](std::string_view prefix) {
    std::vector<LawViolation> out;
    for (const auto& v : bo.violations)
      if (v.law.rfind(prefix, 0) == 0) out.push_back(v);
    return out;
  };
  const auto proj = count_law("tensor of projections");
  const auto inter = count_law("interchange");
  const auto order = count_law("order");
  const auto orth = count_law("orthogonality");
  r.claim("tensor of projections is a projection", proj.empty(),
          std::to_string(bo.projection_checked) + " pairs checked" +
              (proj.empty() ? "" : "; " + violations_detail(proj)));
  r.claim("interchange (p (x) q).(p' (x) q') = (p.p') (x) (q.q')", inter.empty(),
          std::to_string(bo.interchange_checked) + " quadruples checked" +
              (inter.empty() ? "" : "; " + violations_detail(inter)));
  r.claim("order preserved in each argument", order.empty(),
          std::to_string(bo.order_checked) + " implications checked" +
              (order.empty() ? "" : "; " + violations_detail(order)));
  r.claim("orthogonality preserved in each argument", orth.empty(),
          std::to_string(bo.orthogonality_checked) + " implications checked" +
              (orth.empty() ? "" : "; " + violations_detail(orth)));

  if (a.groupoid && b.groupoid) {
    const FrobeniusAlgebra prod = to_algebra(product(*a.groupoid, *b.groupoid));
    r.claim("groupoid product algebra equals the tensor algebra",
            equal(prod.mult(), ta.algebra.mult(), cfg.tolerance) &&
                equal(prod.unit(), ta.algebra.unit(), cfg.tolerance));
  }
  return r;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Projection order structures of symmetric dagger Frobenius algebras", "qlogic"};
  app.require_subcommand(1);

  RunConfig cfg;
  double tolerance = 1e-9;
  std::string format = "text";
  std::string order;
  std::string backend;
  std::string counterexample;
  std::vector<std::string> inputs;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--tolerance", tolerance, "FHilb comparison tolerance")->check(CLI::NonNegativeNumber);
    sub->add_option("--max-enum", cfg.max_enum, "enumeration cap")->check(CLI::PositiveNumber);
    sub->add_option("--format", format, "text, structured or dot")
        ->check(CLI::IsMember({"text", "structured", "dot"}));
    sub->add_option("--seed", cfg.seed, "seed for random sampling");
    sub->add_option("--backend", backend, "expected backend of the input")
        ->check(CLI::IsMember({"fhilb", "rel"}));
  };

  auto* validate_cmd = app.add_subcommand("validate", "check groupoid laws or algebra axioms");
  validate_cmd->add_option("input", inputs, "file or fixture name")->required()->expected(1);
  common(validate_cmd);
  auto* projections_cmd = app.add_subcommand("projections", "list the projections");
  projections_cmd->add_option("input", inputs)->required()->expected(1);
  common(projections_cmd);
  auto* lattice_cmd = app.add_subcommand("lattice", "order, orthogonality and lattice analytics");
  lattice_cmd->add_option("input", inputs)->required()->expected(1);
  lattice_cmd->add_option("--order", order, "mult or inclusion")->check(CLI::IsMember({"mult", "inclusion"}));
  common(lattice_cmd);
  auto* copyables_cmd = app.add_subcommand("copyables", "copyable points");
  copyables_cmd->add_option("input", inputs)->required()->expected(1);
  common(copyables_cmd);
  auto* tensor_cmd = app.add_subcommand("tensor", "tensor product of two algebras and its bi-order check");
  tensor_cmd->add_option("inputs", inputs)->required()->expected(2);
  common(tensor_cmd);
  auto* counter_cmd = app.add_subcommand("counterexamples", "run a bundled counterexample");
  counter_cmd->add_option("name", counterexample)->required()->check(CLI::IsMember(counterexample_names()));
  common(counter_cmd);
  auto* fixtures_cmd = app.add_subcommand("fixtures", "list embedded fixtures");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    cfg.tolerance = Tolerance(tolerance);
    cfg.format = format == "structured" ? OutputFormat::structured
                 : format == "dot"      ? OutputFormat::dot
                                        : OutputFormat::text;
    if (!order.empty()) cfg.order = order;
    if (!backend.empty()) cfg.backend = backend_from_string(backend);
    cfg.inputs = inputs;

    if (fixtures_cmd->parsed()) {
      for (const auto& n : fixture_names()) out << n << '\n';
      return kExitOk;
    }

    Report report;
    if (validate_cmd->parsed()) {
      const Document doc = resolve_document(inputs[0]);
      if (const auto* g = std::get_if<GroupoidSpec>(&doc)) {
        const auto violations = check_laws(*g);
        if (!violations.empty()) {
          report.title = "validate " + inputs[0];
          for (const auto& v : violations)
            report.claim(v.law, false, (v.witness.empty() ? "" : "witness " + join_names(v.witness) + ": ") + v.message);
        }
      }
      if (report.claims.empty()) report = validate_report(load_input(inputs[0], cfg), cfg);
    } else if (projections_cmd->parsed()) {
      report = projections_report(load_input(inputs[0], cfg), cfg);
    } else if (lattice_cmd->parsed()) {
      report = lattice_command_report(load_input(inputs[0], cfg), cfg);
    } else if (copyables_cmd->parsed()) {
      report = copyables_report(load_input(inputs[0], cfg), cfg);
    } else if (tensor_cmd->parsed()) {
      report = tensor_report(load_input(inputs[0], cfg), load_input(inputs[1], cfg), cfg);
    } else if (counter_cmd->parsed()) {
      report = counterexample_report(counterexample, cfg);
    }

    switch (cfg.format) {
      case OutputFormat::text: out << render_text(report); break;
      case OutputFormat::structured: out << report_to_json(report).dump(2) << '\n'; break;
      case OutputFormat::dot: out << render_dot(report); break;
    }
    return report.ok() ? kExitOk : kExitFailure;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BackendMismatchError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const LawViolationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace qlogic

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure outside kUnattainable. Tolerances and limits are pinned below.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qlogic/algebra_tensor.hpp"
#include "qlogic/cli.hpp"
#include "qlogic/cstar.hpp"
#include "qlogic/errors.hpp"
#include "qlogic/groupoid.hpp"
#include "qlogic/projorder.hpp"

using namespace qlogic;

namespace {

constexpr double kTol = 1e-9;
constexpr double kFastSeconds = 1.0;
constexpr double kOreSeconds = 10.0;
constexpr int kSamples = 100;
constexpr std::uint64_t kSeed = 20240601;

// Criteria that cannot hold as stated. They still run and print FAIL; they do
// not make the exit status nonzero. Criterion 7: a connected component with
// more than one object contains non-composable pairs, so it is not copyable
// (the interval groupoid has only the empty set).
const std::set<std::size_t> kUnattainable = {7};

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << "[" << what << "] ";
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

double max_diff(const ComplexMatrix& a, const ComplexMatrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

Groupoid groupoid_fixture(const std::string& name) { return *load_input(name, RunConfig{}).groupoid; }

const std::vector<std::string>& groupoid_fixtures() {
  static const std::vector<std::string> names = {
      "empty",    "trivial",   "cyclic1",   "cyclic2",     "cyclic3",    "cyclic4",   "cyclic5",
      "cyclic6",  "cyclic7",   "cyclic8",   "klein4",      "z2xz4",      "dihedral3", "dihedral4",
      "quaternion8", "symmetric3", "interval", "two-component"};
  return names;
}

const std::vector<std::string>& algebra_fixtures() {
  static const std::vector<std::string> names = {"basis1", "basis2", "basis3", "basis4",
                                                 "pants1", "pants2", "pants3", "direct-sum-2-1"};
  return names;
}

struct Family {
  std::string name;
  FrobeniusAlgebra algebra;
  std::vector<NamedPoint> points;
};

// Every fixture family: subgroupoids, indicator projections, and seeded random
// projections in the matrix algebras.
std::vector<Family> all_families() {
  std::vector<Family> out;
  for (const auto& n : groupoid_fixtures()) {
    const Input in = load_input(n, RunConfig{});
    out.push_back({n, *in.algebra, projection_family(in, RunConfig{})});
  }
  for (const auto& n : algebra_fixtures()) {
    const Input in = load_input(n, RunConfig{});
    out.push_back({n, *in.algebra, projection_family(in, RunConfig{})});
  }
  for (std::size_t n : {2, 3}) {
    Family f{"random projections in pants" + std::to_string(n), pants_algebra(n), {}};
    f.points.push_back({"0", zero_point(f.algebra)});
    for (std::size_t k = 0; k < 6; ++k) {
      const std::size_t rank = 1 + k % (n - 1);
      f.points.push_back({"r" + std::to_string(k), point_from_matrix(f.algebra, random_projection(n, rank, kSeed + k))});
    }
    // A chain, so the order has related pairs.
    const ComplexMatrix big = random_projection(n, n - 1, kSeed + 99);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(big);
    const Eigen::VectorXcd v = es.eigenvectors().col(static_cast<Eigen::Index>(n) - 1);
    f.points.push_back({"line", point_from_matrix(f.algebra, v * v.adjoint())});
    if (n > 2) f.points.push_back({"plane", point_from_matrix(f.algebra, big)});
    f.points.push_back({"1", unit_point(f.algebra)});
    out.push_back(std::move(f));
  }
  return out;
}

// Independent lattice oracle for triple a & (b | c) = a != (a & b) | (a & c).
bool absorbing_nondistributive_triple(const LatticeReport& lr, std::string* witness,
                                      const std::vector<std::string>& names) {
  const std::size_t n = lr.meet.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        const std::size_t lhs = *lr.meet[a][*lr.join[b][c]];
        const std::size_t rhs = *lr.join[*lr.meet[a][b]][*lr.meet[a][c]];
        if (lhs == a && rhs != a) {
          *witness = names[a] + ", " + names[b] + ", " + names[c];
          return true;
        }
      }
  return false;
}

Outcome criterion1() {
  Outcome o;
  const auto t0 = Clock::now();
  const Groupoid g = groupoid_fixture("klein4");
  const auto subs = enumerate_subgroupoids(g);
  std::size_t proper_nontrivial = 0;
  for (auto s : subs) proper_nontrivial += (s.size() == 2) ? 1 : 0;
  const FrobeniusAlgebra alg = to_algebra(g);
  const ProjectionPoset poset = inclusion_poset(g, subs);
  const LatticeReport lr = lattice_report(poset);
  std::string witness;
  const bool has_witness = lr.is_lattice && absorbing_nondistributive_triple(lr, &witness, poset.names);
  const double secs = seconds_since(t0);
  o.expect(subs.size() == 6, "6 subgroupoids, got " + std::to_string(subs.size()));
  o.expect(proper_nontrivial == 3, "3 proper nontrivial subgroups");
  o.expect(is_commutative(alg, Tolerance(0.0)), "commutative");
  o.expect(lr.is_lattice, "inclusion order is a lattice");
  o.expect(lr.distributive == false, "not distributive");
  o.expect(has_witness, "witness triple");
  o.expect(secs < kFastSeconds, "runtime " + fmt(secs) + " s");
  o.detail << "6 subgroupoids, witness (" << witness << "), " << fmt(secs) << " s";
  return o;
}

Outcome criterion2() {
  Outcome o;
  const auto t0 = Clock::now();
  const Groupoid g = groupoid_fixture("interval");
  const auto subs = enumerate_subgroupoids(g);
  const FrobeniusAlgebra alg = to_algebra(g);
  const Morphism mult_swapped = compose(alg.mult(), swap(alg.carrier(), alg.carrier()));
  const std::size_t f = *g.find_arrow("f"), finv = g.inverse(f);
  const ProjectionPoset incl = inclusion_poset(g, subs);
  const LatticeReport lr = lattice_report(incl);
  std::vector<NamedPoint> family;
  for (auto s : subs) family.push_back({g.set_name(s), subset_point(alg, s)});
  bool compared = false;
  std::size_t differences = 0;
  try {
    const ProjectionPoset mult = build_poset(alg, family);
    const OrderComparison cmp = compare_orders(mult, incl);
    differences = cmp.differences.size();
    compared = true;
  } catch (const std::exception& e) {
    o.expect(false, std::string("compare_orders: ") + e.what());
  }
  const double secs = seconds_since(t0);
  o.expect(subs.size() == 5, "5 subgroupoids, got " + std::to_string(subs.size()));
  o.expect(!is_commutative(alg, Tolerance(0.0)), "not commutative");
  o.expect(!equal(mult_swapped, alg.mult(), Tolerance(0.0)), "mult o swap != mult");
  o.expect(g.compose(f, finv) != g.compose(finv, f), "f o f^-1 != f^-1 o f");
  o.expect(lr.is_lattice && lr.distributive == true, "inclusion lattice distributive");
  o.expect(compared && differences > 0, "difference report");
  o.expect(secs < kFastSeconds, "runtime " + fmt(secs) + " s");
  o.detail << "5 subgroupoids, " << differences << " order differences, " << fmt(secs) << " s";
  return o;
}

Outcome criterion3() {
  Outcome o;
  double worst = 0.0;
  std::vector<std::pair<std::string, FrobeniusAlgebra>> algs = {{"pants2", pants_algebra(2)},
                                                               {"pants3", pants_algebra(3)},
                                                               {"direct_sum[2,1]", direct_sum({{2, 1}})}};
  for (std::size_t n = 1; n <= 4; ++n) algs.push_back({"basis" + std::to_string(n), basis_algebra(n)});
  for (const auto& [name, alg] : algs) {
    const AxiomReport r = check_axioms(alg, Tolerance(kTol));
    o.expect(r.passed() && r.max_residual() < kTol, name + " residual " + fmt(r.max_residual()));
    worst = std::max(worst, r.max_residual());
  }
  o.detail << algs.size() << " algebras, max residual " << fmt(worst);
  return o;
}

// rho^2 = rho = rho^dagger entrywise within kTol.
bool projection_oracle(const ComplexMatrix& rho) {
  return max_diff(rho * rho, rho) <= kTol && max_diff(rho, rho.adjoint()) <= kTol;
}

Outcome criterion4() {
  Outcome o;
  std::mt19937_64 rng(kSeed);
  std::normal_distribution<double> gauss;
  auto random_matrix = [&](std::size_t n) {
    ComplexMatrix m(n, n);
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = Complex(gauss(rng), gauss(rng));
    return m;
  };
  std::size_t disagreements = 0, positives = 0, total = 0;
  for (std::size_t n : {2, 3}) {
    const FrobeniusAlgebra alg = pants_algebra(n);
    for (int s = 0; s < kSamples; ++s) {
      ComplexMatrix rho = random_projection(n, static_cast<std::size_t>(s) % (n + 1), rng());
      switch (s % 5) {
        case 0: break;
        case 1: rho += random_matrix(n) * 1e-4; break;
        case 2: {
          const ComplexMatrix t = random_matrix(n);
          rho = t * rho * t.inverse();
          break;
        }
        case 3: rho = rho * 2.0; break;
        case 4: rho = random_matrix(n); break;
      }
      const bool expected = projection_oracle(rho);
      positives += expected;
      ++total;
      if (is_projection(alg, point_from_matrix(alg, rho), Tolerance(kTol)) != expected) ++disagreements;
    }
  }
  o.expect(disagreements == 0, std::to_string(disagreements) + " disagreements");
  o.expect(positives > 0 && positives < total, "both verdicts exercised");
  o.detail << total << " matrices, " << positives << " projections, " << disagreements << " disagreements";
  return o;
}

Outcome criterion5() {
  Outcome o;
  for (std::size_t n = 1; n <= 4; ++n) {
    const std::string tag = "n=" + std::to_string(n) + ": ";
    const FrobeniusAlgebra alg = basis_algebra(n);
    const auto projs = indicator_projections(alg, Tolerance(kTol), 1'000'000);
    o.expect(projs.size() == (std::size_t{1} << n), tag + "2^n projections");
    std::map<std::string, std::uint64_t> mask_of;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) mask_of[indicator_name(alg, m)] = m;
    const ProjectionPoset poset = build_poset(alg, projs, Tolerance(kTol));
    const LatticeReport lr = lattice_report(poset);
    o.expect(lr.is_lattice, tag + "lattice");
    if (!lr.is_lattice) continue;
    bool tables = poset.size() == mask_of.size();
    for (std::size_t i = 0; i < poset.size() && tables; ++i)
      for (std::size_t j = 0; j < poset.size() && tables; ++j) {
        const std::uint64_t a = mask_of.at(poset.names[i]), b = mask_of.at(poset.names[j]);
        tables = mask_of.at(poset.names[*lr.meet[i][j]]) == (a & b) &&
                 mask_of.at(poset.names[*lr.join[i][j]]) == (a | b);
      }
    o.expect(tables, tag + "meet/join tables are bitwise and/or");
    o.expect(lr.distributive == true, tag + "distributive");
    bool probe = lr.orthocomplement.size() == poset.size();
    for (const auto& c : lr.orthocomplement) probe = probe && c.ok();
    o.expect(probe, tag + "orthocomplement probe");
  }
  o.detail << "basis(1..4) give Boolean algebras 2, 4, 8, 16";
  return o;
}

Outcome criterion6() {
  Outcome o;
  auto line = [](Complex x, Complex y) {
    Eigen::VectorXcd v(2);
    v << x, y;
    v.normalize();
    return ComplexMatrix(v * v.adjoint());
  };
  const ComplexMatrix a = line(1.0, 0.0), b = line(0.0, 1.0), c = line(1.0, 1.0);
  const double lhs = max_diff(subspace_meet(a, subspace_join(b, c)), a);
  const double rhs = max_diff(subspace_join(subspace_meet(a, b), subspace_meet(a, c)), ComplexMatrix::Zero(2, 2));
  o.expect(lhs <= kTol, "a & (b | c) = a");
  o.expect(rhs <= kTol, "(a & b) | (a & c) = 0");
  o.detail << "errors " << fmt(lhs) << ", " << fmt(rhs);
  return o;
}

Outcome criterion7() {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& name : groupoid_fixtures()) {
    const Groupoid g = groupoid_fixture(name);
    const FrobeniusAlgebra alg = to_algebra(g);
    std::set<std::uint64_t> expected = {0};
    for (auto c : connected_components(g)) expected.insert(c.bits());
    std::set<std::uint64_t> got;
    std::string listed;
    for (const auto& p : enumerate_copyables(alg)) {
      got.insert(point_subset(p).bits());
      listed += (listed.empty() ? "" : " ") + g.set_name(point_subset(p));
      o.expect(is_central(alg, p, Tolerance(0.0)), name + ": copyable not central");
    }
    o.expect(got == expected, name + ": copyables != components + empty, found only " + listed);
    ++checked;
  }
  const FrobeniusAlgebra pants = pants_algebra(2);
  std::mt19937_64 rng(kSeed + 7);
  std::normal_distribution<double> gauss;
  std::size_t copyable = 0;
  for (int s = 0; s < kSamples; ++s) {
    ComplexMatrix m(2, 2);
    for (Eigen::Index i = 0; i < 2; ++i)
      for (Eigen::Index j = 0; j < 2; ++j) m(i, j) = Complex(gauss(rng), gauss(rng));
    if (m.cwiseAbs().maxCoeff() == 0.0) continue;
    copyable += is_copyable(pants, point_from_matrix(pants, m), Tolerance(kTol));
  }
  o.expect(copyable == 0, std::to_string(copyable) + " random points copyable");
  o.expect(is_copyable(pants, zero_point(pants), Tolerance(kTol)), "zero copyable");
  o.detail << checked << " groupoids, " << kSamples << " pants(2) samples";
  return o;
}

Outcome criterion8() {
  Outcome o;
  std::size_t families = 0, pairs = 0;
  for (const auto& fam : all_families()) {
    try {
      const ProjectionPoset poset = build_poset(fam.algebra, fam.points, Tolerance(kTol));
      const auto po = check_partial_order(poset);
      const auto orth = check_orthogonality_axioms(poset);
      o.expect(po.empty() && orth.empty(), fam.name + ": axiom violations");
      for (const auto& p : poset.points)
        for (const auto& q : poset.points) {
          const Point pq = mult_points(fam.algebra, p, q);
          const Point qp = mult_points(fam.algebra, q, p);
          const Point lhs = conjugate_point(fam.algebra, pq);
          const Point rhs = mult_points(fam.algebra, conjugate_point(fam.algebra, q), conjugate_point(fam.algebra, p));
          o.expect(points_equal(lhs, rhs, Tolerance(kTol)), fam.name + ": (pq)* != q*p*");
          if (is_projection(fam.algebra, pq, Tolerance(kTol)))
            o.expect(points_equal(pq, qp, Tolerance(kTol)), fam.name + ": projection product does not commute");
          ++pairs;
        }
    } catch (const std::exception& e) {
      o.expect(false, fam.name + ": " + e.what());
    }
    ++families;
  }
  o.detail << families << " families, " << pairs << " pairs";
  return o;
}

Outcome criterion9() {
  Outcome o;
  std::size_t families = 0, pairs = 0, interval_noncommuting = 0;
  for (const auto& fam : all_families()) {
    const ProjectionPoset poset = build_poset(fam.algebra, fam.points, Tolerance(kTol));
    const GlbEquivalenceReport r = commute_glb_equivalence(fam.algebra, poset, Tolerance(kTol));
    o.expect(r.disagreements().empty(), fam.name + ": " + std::to_string(r.disagreements().size()) + " disagreements");
    if (fam.name == "interval") interval_noncommuting = r.noncommuting_count();
    pairs += r.pairs.size();
    ++families;
  }
  o.expect(interval_noncommuting > 0, "interval has a non-commuting pair");
  o.detail << families << " families, " << pairs << " pairs, " << interval_noncommuting
           << " non-commuting pairs in the interval groupoid";
  return o;
}

// (p (x) q)(p2 (x) q2) = (p p2) (x) (q q2) over every 0/1 point of both carriers.
std::size_t interchange_violations(const TensorAlgebra& ta, std::size_t* checked) {
  const std::size_t na = ta.left.carrier().size(), nb = ta.right.carrier().size();
  std::size_t bad = 0;
  for (std::uint64_t p = 0; p < (1U << na); ++p)
    for (std::uint64_t p2 = 0; p2 < (1U << na); ++p2)
      for (std::uint64_t q = 0; q < (1U << nb); ++q)
        for (std::uint64_t q2 = 0; q2 < (1U << nb); ++q2) {
          const Point P = indicator_point(ta.left, p), P2 = indicator_point(ta.left, p2);
          const Point Q = indicator_point(ta.right, q), Q2 = indicator_point(ta.right, q2);
          const Point lhs = mult_points(ta.algebra, tensor_points(ta, P, Q), tensor_points(ta, P2, Q2));
          const Point rhs = tensor_points(ta, mult_points(ta.left, P, P2), mult_points(ta.right, Q, Q2));
          bad += !points_equal(lhs, rhs, Tolerance(kTol));
          ++*checked;
        }
  return bad;
}

Outcome criterion10() {
  Outcome o;
  std::size_t checked = 0;
  for (const char* name : {"basis2", "cyclic2"}) {
    const Input in = load_input(name, RunConfig{});
    const TensorAlgebra ta = tensor_algebras(*in.algebra, *in.algebra, Tolerance(kTol));
    o.expect(ta.axioms.passed(), std::string(name) + ": tensor axioms");
    o.expect(interchange_violations(ta, &checked) == 0, std::string(name) + ": interchange");
    const auto fam = projection_family(in, RunConfig{});
    const BiOrderReport bo = bi_order_check(ta, fam, fam, Tolerance(kTol));
    o.expect(bo.passed(), std::string(name) + ": bi-order check");
    o.expect(bo.order_checked > 0 && bo.orthogonality_checked > 0, std::string(name) + ": implications exercised");
  }
  const Groupoid z2 = groupoid_fixture("cyclic2");
  const TensorAlgebra ta = tensor_algebras(to_algebra(z2), to_algebra(z2));
  for (const Groupoid& prod : {product(z2, z2), groupoid_fixture("klein4")}) {
    const FrobeniusAlgebra alg = to_algebra(prod);
    o.expect(equal(alg.mult(), ta.algebra.mult(), Tolerance(0.0)) && equal(alg.unit(), ta.algebra.unit(), Tolerance(0.0)),
             "to_algebra(Z2 x Z2) = Z2 (x) Z2");
  }
  o.detail << checked << " interchange instances";
  return o;
}

Outcome criterion11() {
  Outcome o;
  const auto t0 = Clock::now();
  std::vector<std::pair<std::string, Groupoid>> groups;
  for (int n = 1; n <= 8; ++n) groups.push_back({"cyclic" + std::to_string(n), groupoid_fixture("cyclic" + std::to_string(n))});
  for (const char* n : {"klein4", "z2xz4", "symmetric3", "dihedral4", "quaternion8"})
    groups.push_back({n, groupoid_fixture(n)});
  const auto verdicts = ore_crossvalidate(groups);
  std::size_t agree = 0;
  for (const auto& v : verdicts) {
    o.expect(v.agrees(), v.name + ": distributive " + (v.distributive ? "yes" : "no") + ", cyclic " +
                             (v.cyclic ? "yes" : "no"));
    agree += v.agrees();
  }
  const double secs = seconds_since(t0);
  o.expect(verdicts.size() == groups.size(), "one verdict per group");
  o.expect(secs < kOreSeconds, "runtime " + fmt(secs) + " s");
  o.detail << agree << "/" << groups.size() << " agree, " << fmt(secs) << " s";
  return o;
}

Outcome criterion12() {
  Outcome o;
  std::vector<std::pair<std::string, Groupoid>> gs;
  for (const auto& n : groupoid_fixtures()) gs.push_back({n, groupoid_fixture(n)});
  for (int n = 9; n <= 16; ++n) gs.push_back({"cyclic" + std::to_string(n), groupoid_fixture("cyclic" + std::to_string(n))});
  for (int n = 2; n <= 8; ++n)
    gs.push_back({"dihedral" + std::to_string(n), groupoid_fixture("dihedral" + std::to_string(n))});
  gs.push_back({"klein4 x klein4", product(groupoid_fixture("klein4"), groupoid_fixture("klein4"))});
  gs.push_back({"interval x interval", product(groupoid_fixture("interval"), groupoid_fixture("interval"))});
  gs.push_back({"interval x cyclic3", product(groupoid_fixture("interval"), groupoid_fixture("cyclic3"))});
  std::size_t checked = 0, sets = 0;
  for (const auto& [name, g] : gs) {
    if (g.arrow_count() > 16) continue;
    const auto nc = enumerate_subgroupoids_next_closure(g);
    const auto bf = enumerate_subgroupoids_brute_force(g);
    o.expect(nc == bf, name + ": Next-Closure differs from brute force");
    sets += nc.size();
    ++checked;
  }
  o.detail << checked << " groupoids, " << sets << " subgroupoids";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"Z2 x Z2: 6 subgroupoids, commutative, inclusion lattice not distributive", criterion1},
      {"interval groupoid: 5 subgroupoids, not commutative, inclusion lattice distributive", criterion2},
      {"matrix and copy algebras pass every axiom", criterion3},
      {"projection points are the orthogonal projections", criterion4},
      {"copy algebras give Boolean algebras", criterion5},
      {"subspace lattice of C^2 is not distributive", criterion6},
      {"copyables are components plus the empty set", criterion7},
      {"order and orthogonality axioms on every family", criterion8},
      {"commute, product is a projection, product is the glb agree", criterion9},
      {"tensor interchange, bi-order and groupoid coherence", criterion10},
      {"subgroup lattice distributive iff cyclic", criterion11},
      {"Next-Closure equals brute-force enumeration", criterion12},
  };
  int failures = 0, unattainable = 0, passed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail << "exception: " << e.what();
    }
    passed += o.ok;
    if (!o.ok) (kUnattainable.count(i + 1) ? unattainable : failures) += 1;
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << criteria[i].first << " ("
              << o.detail.str() << ")\n";
  }
  std::cout << passed << "/" << criteria.size() << " criteria passed";
  if (unattainable) std::cout << ", " << unattainable << " known unattainable";
  std::cout << "\n";
  return failures == 0 ? 0 : 1;
}

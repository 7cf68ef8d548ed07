#include "qlogic/groupoid.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace qlogic {

std::vector<std::size_t> ArrowSet::elements() const {
  std::vector<std::size_t> out;
  for (auto b = bits_; b; b &= b - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
  return out;
}

bool lectic_less(ArrowSet a, ArrowSet b) {
  const auto diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  return b.contains(static_cast<std::size_t>(std::countr_zero(diff)));
}

// ---------------------------------------------------------------------------
// Groupoid accessors

std::optional<std::size_t> Groupoid::compose(std::size_t f, std::size_t g) const {
  const auto h = table_.at(f * arrows_.size() + g);
  if (h < 0) return std::nullopt;
  return static_cast<std::size_t>(h);
}

std::optional<std::size_t> Groupoid::find_arrow(const std::string& name) const {
  for (std::size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].name == name) return i;
  return std::nullopt;
}

std::optional<std::size_t> Groupoid::find_object(const std::string& name) const {
  for (std::size_t i = 0; i < objects_.size(); ++i)
    if (objects_[i] == name) return i;
  return std::nullopt;
}

std::string Groupoid::set_name(ArrowSet s) const {
  std::string out = "{";
  bool first = true;
  for (auto i : s.elements()) {
    if (!first) out += ",";
    out += arrows_.at(i).name;
    first = false;
  }
  return out + "}";
}

GroupoidSpec Groupoid::to_spec() const {
  GroupoidSpec spec;
  spec.objects = objects_;
  for (const auto& a : arrows_) spec.arrows.push_back({a.name, objects_[a.dom], objects_[a.cod]});
  const std::size_t m = arrows_.size();
  for (std::size_t f = 0; f < m; ++f)
    for (std::size_t g = 0; g < m; ++g)
      if (auto h = compose(f, g)) spec.compose.push_back({arrows_[f].name, arrows_[g].name, arrows_[*h].name});
  return spec;
}

// ---------------------------------------------------------------------------
// Validation

namespace {

struct Indexed {
  std::map<std::string, std::size_t> objects;
  std::map<std::string, std::size_t> arrows;
  std::vector<std::size_t> dom, cod;
  std::vector<std::int32_t> table;
  std::vector<std::optional<std::size_t>> identities;
  std::vector<std::optional<std::size_t>> inverses;
};

// Fills `ix` as far as the spec allows and appends every violation found.
void analyse(const GroupoidSpec& spec, Indexed& ix, std::vector<LawViolation>& out) {
  for (std::size_t i = 0; i < spec.objects.size(); ++i)
    if (!ix.objects.emplace(spec.objects[i], i).second)
      out.push_back({"object names are unique", {spec.objects[i]}, "declared more than once"});

  bool endpoints_ok = true;
  for (std::size_t i = 0; i < spec.arrows.size(); ++i) {
    const auto& a = spec.arrows[i];
    if (!ix.arrows.emplace(a.name, i).second)
      out.push_back({"arrow names are unique", {a.name}, "declared more than once"});
    auto d = ix.objects.find(a.dom);
    auto c = ix.objects.find(a.cod);
    if (d == ix.objects.end() || c == ix.objects.end()) {
      out.push_back({"arrow endpoints are declared objects", {a.name, a.dom, a.cod}, ""});
      endpoints_ok = false;
      continue;
    }
    ix.dom.push_back(d->second);
    ix.cod.push_back(c->second);
  }
  if (!endpoints_ok || !out.empty()) return;

  const std::size_t m = spec.arrows.size();
  const auto& name = [&](std::size_t f) -> const std::string& { return spec.arrows[f].name; };
  ix.table.assign(m * m, -1);

  for (const auto& [fn, gn, hn] : spec.compose) {
    auto f = ix.arrows.find(fn), g = ix.arrows.find(gn), h = ix.arrows.find(hn);
    if (f == ix.arrows.end() || g == ix.arrows.end() || h == ix.arrows.end()) {
      out.push_back({"composition entries name declared arrows", {fn, gn, hn}, ""});
      continue;
    }
    const auto fi = f->second, gi = g->second, hi = h->second;
    if (ix.dom[fi] != ix.cod[gi]) {
      out.push_back({"composition only on composable pairs", {fn, gn, hn},
                     "dom(" + fn + ") != cod(" + gn + ")"});
      continue;
    }
    if (ix.dom[hi] != ix.dom[gi] || ix.cod[hi] != ix.cod[fi]) {
      out.push_back({"composite has type dom(g) -> cod(f)", {fn, gn, hn}, ""});
      continue;
    }
    auto& slot = ix.table[fi * m + gi];
    if (slot >= 0 && static_cast<std::size_t>(slot) != hi) {
      out.push_back({"composition is single-valued", {fn, gn, hn, name(static_cast<std::size_t>(slot))}, ""});
      continue;
    }
    slot = static_cast<std::int32_t>(hi);
  }

  auto comp = [&](std::size_t f, std::size_t g) -> std::optional<std::size_t> {
    const auto h = ix.table[f * m + g];
    return h < 0 ? std::nullopt : std::optional<std::size_t>(static_cast<std::size_t>(h));
  };

  for (std::size_t f = 0; f < m; ++f)
    for (std::size_t g = 0; g < m; ++g)
      if (ix.dom[f] == ix.cod[g] && !comp(f, g))
        out.push_back({"composition is total on composable pairs", {name(f), name(g)}, "undefined"});

  for (std::size_t f = 0; f < m; ++f)
    for (std::size_t g = 0; g < m; ++g) {
      if (ix.dom[f] != ix.cod[g]) continue;
      for (std::size_t h = 0; h < m; ++h) {
        if (ix.dom[g] != ix.cod[h]) continue;
        auto fg = comp(f, g), gh = comp(g, h);
        if (!fg || !gh) continue;
        auto l = comp(*fg, h), r = comp(f, *gh);
        if (l && r && *l != *r)
          out.push_back({"associativity", {name(f), name(g), name(h)},
                         "(f o g) o h = " + name(*l) + " but f o (g o h) = " + name(*r)});
      }
    }

  ix.identities.assign(spec.objects.size(), std::nullopt);
  for (std::size_t x = 0; x < spec.objects.size(); ++x) {
    for (std::size_t e = 0; e < m && !ix.identities[x]; ++e) {
      if (ix.dom[e] != x || ix.cod[e] != x) continue;
      bool ok = true;
      for (std::size_t g = 0; g < m && ok; ++g) {
        if (ix.cod[g] == x) ok = comp(e, g) == g;
        if (ok && ix.dom[g] == x) ok = comp(g, e) == g;
      }
      if (ok) ix.identities[x] = e;
    }
    if (!ix.identities[x])
      out.push_back({"identity law", {spec.objects[x]}, "no arrow acts as identity on this object"});
  }
  for (const auto& [obj, arrow] : spec.identities) {
    auto x = ix.objects.find(obj);
    auto e = ix.arrows.find(arrow);
    if (x == ix.objects.end() || e == ix.arrows.end() || ix.identities[x->second] != e->second)
      out.push_back({"declared identity matches inferred identity", {obj, arrow}, ""});
  }

  ix.inverses.assign(m, std::nullopt);
  for (std::size_t f = 0; f < m; ++f) {
    const auto id_dom = ix.identities[ix.dom[f]];
    const auto id_cod = ix.identities[ix.cod[f]];
    if (!id_dom || !id_cod) continue;
    for (std::size_t g = 0; g < m && !ix.inverses[f]; ++g) {
      if (ix.dom[g] != ix.cod[f] || ix.cod[g] != ix.dom[f]) continue;
      if (comp(g, f) == id_dom && comp(f, g) == id_cod) ix.inverses[f] = g;
    }
    if (!ix.inverses[f])
      out.push_back({"inverse law", {name(f)}, "no g with g o f = id_dom and f o g = id_cod"});
  }
  for (const auto& [fn, gn] : spec.inverses) {
    auto f = ix.arrows.find(fn);
    auto g = ix.arrows.find(gn);
    if (f == ix.arrows.end() || g == ix.arrows.end() || ix.inverses[f->second] != g->second)
      out.push_back({"declared inverse matches inferred inverse", {fn, gn}, ""});
  }
}

}  // namespace

std::vector<LawViolation> check_laws(const GroupoidSpec& spec) {
  Indexed ix;
  std::vector<LawViolation> out;
  analyse(spec, ix, out);
  return out;
}

Groupoid validate(const GroupoidSpec& spec) {
  if (spec.arrows.size() > kMaxArrows)
    throw ResourceLimitError("groupoid has " + std::to_string(spec.arrows.size()) +
                             " arrows; at most " + std::to_string(kMaxArrows) + " are supported");
  Indexed ix;
  std::vector<LawViolation> violations;
  analyse(spec, ix, violations);
  if (!violations.empty()) throw LawViolationError(std::move(violations));

  Groupoid g;
  g.objects_ = spec.objects;
  for (std::size_t i = 0; i < spec.arrows.size(); ++i)
    g.arrows_.push_back({spec.arrows[i].name, ix.dom[i], ix.cod[i]});
  g.table_ = std::move(ix.table);
  for (auto& e : ix.identities) g.identities_.push_back(*e);
  for (auto& inv : ix.inverses) g.inverses_.push_back(*inv);
  return g;
}

// ---------------------------------------------------------------------------
// Subgroupoids

ArrowSet subgroupoid_closure(const Groupoid& g, ArrowSet s) {
  for (;;) {
    ArrowSet next = s;
    const auto members = s.elements();
    for (auto f : members) {
      next.insert(g.identity(g.dom(f)));
      next.insert(g.identity(g.cod(f)));
      next.insert(g.inverse(f));
      for (auto h : members)
        if (auto c = g.compose(f, h)) next.insert(*c);
    }
    if (next == s) return s;
    s = next;
  }
}

bool is_subgroupoid(const Groupoid& g, ArrowSet s) { return subgroupoid_closure(g, s) == s; }

namespace {

void check_carrier(const Groupoid& g, const EnumerationLimits& limits) {
  const auto cap = std::min(limits.max_carrier, kMaxArrows);
  if (g.arrow_count() > cap)
    throw ResourceLimitError("carrier of " + std::to_string(g.arrow_count()) +
                             " arrows exceeds the cap of " + std::to_string(cap));
}

}  // namespace

std::vector<Subgroupoid> enumerate_subgroupoids_next_closure(const Groupoid& g,
                                                              EnumerationLimits limits) {
  check_carrier(g, limits);
  const std::size_t m = g.arrow_count();
  const ArrowSet all = ArrowSet::full(m);
  std::vector<Subgroupoid> out;
  auto emit = [&](ArrowSet s) {
    if (out.size() >= limits.max_closed_sets)
      throw ResourceLimitError("more than " + std::to_string(limits.max_closed_sets) +
                               " subgroupoids");
    out.push_back(s);
  };

  ArrowSet current = subgroupoid_closure(g, ArrowSet{});
  emit(current);
  while (current != all) {
    ArrowSet a = current;
    bool advanced = false;
    for (std::size_t k = m; k-- > 0;) {
      if (a.contains(k)) {
        a.erase(k);
        continue;
      }
      ArrowSet with = a;
      with.insert(k);
      const ArrowSet b = subgroupoid_closure(g, with);
      // Accept when the closure adds nothing below k.
      const std::uint64_t below = (std::uint64_t{1} << k) - 1;
      if (((b.bits() & ~a.bits()) & below) == 0) {
        current = b;
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
    emit(current);
  }
  return out;
}

std::vector<Subgroupoid> enumerate_subgroupoids_brute_force(const Groupoid& g) {
  const std::size_t m = g.arrow_count();
  if (m > 24)
    throw ResourceLimitError("brute-force subset scan refused for " + std::to_string(m) + " arrows");
  std::vector<Subgroupoid> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits)
    if (is_subgroupoid(g, ArrowSet(bits))) out.emplace_back(bits);
  std::sort(out.begin(), out.end(), lectic_less);
  return out;
}

std::vector<Subgroupoid> enumerate_subgroupoids(const Groupoid& g, EnumerationLimits limits) {
  auto closed = enumerate_subgroupoids_next_closure(g, limits);
  if (g.arrow_count() <= 16) {
    auto oracle = enumerate_subgroupoids_brute_force(g);
    if (oracle != closed) {
      std::vector<LawViolation> v;
      v.push_back({"Next-Closure agrees with subset scan",
                   {std::to_string(closed.size()), std::to_string(oracle.size())},
                   "closed-set enumerations differ"});
      throw LawViolationError(std::move(v));
    }
  }
  return closed;
}

// ---------------------------------------------------------------------------
// Algebra

FrobeniusAlgebra to_algebra(const Groupoid& g) {
  const std::size_t m = g.arrow_count();
  std::vector<std::string> labels;
  for (std::size_t f = 0; f < m; ++f) labels.push_back(g.arrow_name(f));
  const Object a = Object::rel(m, std::move(labels));
  const Object i = unit_object(Backend::rel);

  std::vector<std::pair<std::size_t, std::size_t>> mult_pairs;
  for (std::size_t f = 0; f < m; ++f)
    for (std::size_t h = 0; h < m; ++h)
      if (auto c = g.compose(f, h)) mult_pairs.emplace_back(f * m + h, *c);
  std::vector<std::pair<std::size_t, std::size_t>> unit_pairs;
  for (std::size_t x = 0; x < g.object_count(); ++x) unit_pairs.emplace_back(0, g.identity(x));

  return FrobeniusAlgebra(Morphism::from_pairs(tensor(a, a), a, mult_pairs),
                          Morphism::from_pairs(i, a, unit_pairs));
}

Point subset_point(const FrobeniusAlgebra& alg, ArrowSet s) {
  if (alg.backend() != Backend::rel) throw BackendMismatchError("subset points live in Rel");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (auto i : s.elements()) pairs.emplace_back(0, i);
  return Point(alg, Morphism::from_pairs(unit_object(Backend::rel), alg.carrier(), pairs));
}

ArrowSet point_subset(const Point& p) {
  if (p.carrier().size() > kMaxArrows)
    throw ResourceLimitError("point carrier exceeds " + std::to_string(kMaxArrows));
  ArrowSet s;
  for (auto i : p.morphism().relation().image(0)) s.insert(i);
  return s;
}

std::vector<ArrowSet> connected_components(const Groupoid& g) {
  std::vector<std::size_t> parent(g.object_count());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t f = 0; f < g.arrow_count(); ++f) parent[find(g.dom(f))] = find(g.cod(f));

  std::map<std::size_t, ArrowSet> blocks;
  for (std::size_t f = 0; f < g.arrow_count(); ++f) blocks[find(g.dom(f))].insert(f);
  std::vector<ArrowSet> out;
  for (auto& [root, s] : blocks) out.push_back(s);
  std::sort(out.begin(), out.end(), [](ArrowSet a, ArrowSet b) {
    return std::countr_zero(a.bits()) < std::countr_zero(b.bits());
  });
  return out;
}

std::vector<Point> enumerate_copyables(const FrobeniusAlgebra& alg, EnumerationLimits limits) {
  if (alg.backend() != Backend::rel)
    throw BackendMismatchError("copyables are enumerable only for Rel algebras");
  const std::size_t n = alg.carrier().size();
  if (n > std::min(limits.max_carrier, kMaxArrows))
    throw ResourceLimitError("carrier of " + std::to_string(n) + " exceeds the enumeration cap");

  std::vector<ArrowSet> candidates;
  if (n <= 16) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) candidates.emplace_back(bits);
  } else {
    // A copyable X contains both factors of every pair in comult(f), f in X,
    // so each nonempty copyable contains the support closure of any member.
    const Relation comult = alg.comult().relation();
    candidates.emplace_back();
    std::set<std::uint64_t> seen;
    for (std::size_t f = 0; f < n; ++f) {
      ArrowSet x;
      x.insert(f);
      for (ArrowSet prev; prev != x;) {
        prev = x;
        for (auto h : prev.elements())
          for (auto pair : comult.image(h)) {
            x.insert(pair / n);
            x.insert(pair % n);
          }
      }
      if (seen.insert(x.bits()).second) candidates.push_back(x);
    }
  }

  std::vector<ArrowSet> found;
  for (auto c : candidates) {
    if (found.size() >= limits.max_closed_sets)
      throw ResourceLimitError("more than " + std::to_string(limits.max_closed_sets) + " copyables");
    if (is_copyable(alg, subset_point(alg, c))) found.push_back(c);
  }
  std::sort(found.begin(), found.end(), lectic_less);
  std::vector<Point> out;
  for (auto s : found) out.push_back(subset_point(alg, s));
  return out;
}

std::vector<LawViolation> copyable_component_mismatches(const Groupoid& g,
                                                        const std::vector<Point>& copyables) {
  std::set<std::uint64_t> expected{0};
  for (auto c : connected_components(g)) expected.insert(c.bits());
  std::set<std::uint64_t> actual;
  for (const auto& p : copyables) actual.insert(point_subset(p).bits());

  std::vector<LawViolation> out;
  for (auto e : expected)
    if (!actual.count(e))
      out.push_back({"copyables are the connected components", {g.set_name(ArrowSet(e))},
                     "component (or empty set) is not copyable"});
  for (auto a : actual)
    if (!expected.count(a))
      out.push_back({"copyables are the connected components", {g.set_name(ArrowSet(a))},
                     "copyable subset is not a connected component"});
  return out;
}

// ---------------------------------------------------------------------------
// Constructions

Groupoid product(const Groupoid& g, const Groupoid& h) {
  GroupoidSpec spec;
  const std::size_t ho = h.object_count(), ha = h.arrow_count();
  for (std::size_t x = 0; x < g.object_count(); ++x)
    for (std::size_t y = 0; y < ho; ++y)
      spec.objects.push_back("(" + g.object_name(x) + "," + h.object_name(y) + ")");
  auto arrow_name = [&](std::size_t f, std::size_t k) {
    return "(" + g.arrow_name(f) + "," + h.arrow_name(k) + ")";
  };
  for (std::size_t f = 0; f < g.arrow_count(); ++f)
    for (std::size_t k = 0; k < ha; ++k)
      spec.arrows.push_back({arrow_name(f, k), spec.objects[g.dom(f) * ho + h.dom(k)],
                             spec.objects[g.cod(f) * ho + h.cod(k)]});
  for (std::size_t f1 = 0; f1 < g.arrow_count(); ++f1)
    for (std::size_t f2 = 0; f2 < g.arrow_count(); ++f2) {
      auto fc = g.compose(f1, f2);
      if (!fc) continue;
      for (std::size_t k1 = 0; k1 < ha; ++k1)
        for (std::size_t k2 = 0; k2 < ha; ++k2)
          if (auto kc = h.compose(k1, k2))
            spec.compose.push_back({arrow_name(f1, k1), arrow_name(f2, k2), arrow_name(*fc, *kc)});
    }
  return validate(spec);
}

Groupoid disjoint_union(const Groupoid& g, const Groupoid& h) {
  const GroupoidSpec a = g.to_spec(), b = h.to_spec();
  std::set<std::string> names(a.objects.begin(), a.objects.end());
  for (const auto& arrow : a.arrows) names.insert(arrow.name);
  bool clash = false;
  for (const auto& o : b.objects) clash |= names.count(o) > 0;
  for (const auto& arrow : b.arrows) clash |= names.count(arrow.name) > 0;
  const std::string lp = clash ? "L:" : "", rp = clash ? "R:" : "";

  GroupoidSpec spec;
  auto add = [&spec](const GroupoidSpec& part, const std::string& p) {
    for (const auto& o : part.objects) spec.objects.push_back(p + o);
    for (const auto& arrow : part.arrows) spec.arrows.push_back({p + arrow.name, p + arrow.dom, p + arrow.cod});
    for (const auto& [f, k, c] : part.compose) spec.compose.push_back({p + f, p + k, p + c});
  };
  add(a, lp);
  add(b, rp);
  return validate(spec);
}

bool is_abelian(const Groupoid& g) {
  for (std::size_t f = 0; f < g.arrow_count(); ++f)
    for (std::size_t k = f + 1; k < g.arrow_count(); ++k) {
      auto fk = g.compose(f, k), kf = g.compose(k, f);
      if (fk && kf && *fk != *kf) return false;
    }
  return true;
}

bool is_cyclic_group(const Groupoid& g) {
  if (g.object_count() != 1) throw Error("is_cyclic_group: input is not a one-object groupoid");
  const std::size_t order = g.arrow_count();
  const std::size_t e = g.identity(0);
  for (std::size_t x = 0; x < order; ++x) {
    std::size_t power = x, k = 1;
    while (power != e) {
      power = *g.compose(power, x);
      ++k;
    }
    if (k == order) return true;
  }
  return false;
}

GroupoidSpec group_spec(const std::vector<std::string>& elements,
                        const std::vector<std::vector<std::size_t>>& table) {
  GroupoidSpec spec;
  spec.objects = {"*"};
  for (const auto& e : elements) spec.arrows.push_back({e, "*", "*"});
  for (std::size_t a = 0; a < elements.size(); ++a)
    for (std::size_t b = 0; b < elements.size(); ++b)
      spec.compose.push_back({elements[a], elements[b], elements[table.at(a).at(b)]});
  return spec;
}

namespace fixtures {

namespace {

template <typename Mul>
Groupoid make_group(const std::vector<std::string>& names, Mul mul) {
  std::vector<std::vector<std::size_t>> table(names.size(), std::vector<std::size_t>(names.size()));
  for (std::size_t a = 0; a < names.size(); ++a)
    for (std::size_t b = 0; b < names.size(); ++b) table[a][b] = mul(a, b);
  return validate(group_spec(names, table));
}

}  // namespace

Groupoid empty() { return validate(GroupoidSpec{}); }

Groupoid trivial() { return cyclic(1); }

Groupoid cyclic(std::size_t n) {
  if (n == 0) throw std::invalid_argument("cyclic(0) is not a group");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  return make_group(names, [n](std::size_t a, std::size_t b) { return (a + b) % n; });
}

Groupoid klein4() {
  return make_group({"(0,0)", "(0,1)", "(1,0)", "(1,1)"},
                    [](std::size_t a, std::size_t b) { return a ^ b; });
}

Groupoid dihedral(std::size_t n) {
  if (n == 0) throw std::invalid_argument("dihedral(0) is not a group");
  std::vector<std::string> names;
  for (std::size_t k = 0; k < n; ++k) names.push_back(k == 0 ? "e" : "r^" + std::to_string(k));
  for (std::size_t k = 0; k < n; ++k) names.push_back(k == 0 ? "s" : "sr^" + std::to_string(k));
  // r^a s = s r^-a, so r^a (s r^b) = s r^(b-a) and (s r^a)(s r^b) = r^(b-a).
  return make_group(names, [n](std::size_t x, std::size_t y) {
    const bool xs = x >= n, ys = y >= n;
    const std::size_t a = x % n, b = y % n;
    if (!xs && !ys) return (a + b) % n;
    if (!xs && ys) return n + (b + n - a) % n;
    if (xs && !ys) return n + (a + b) % n;
    return (b + n - a) % n;
  });
}

Groupoid quaternion8() {
  // Index 2u + s: unit u in {1, i, j, k}, sign bit s.
  static constexpr int unit_product[4][4][2] = {
      // {unit, negative}
      {{0, 0}, {1, 0}, {2, 0}, {3, 0}},
      {{1, 0}, {0, 1}, {3, 0}, {2, 1}},
      {{2, 0}, {3, 1}, {0, 1}, {1, 0}},
      {{3, 0}, {2, 0}, {1, 1}, {0, 1}},
  };
  return make_group({"1", "-1", "i", "-i", "j", "-j", "k", "-k"}, [](std::size_t x, std::size_t y) {
    const auto& p = unit_product[x / 2][y / 2];
    const std::size_t sign = (x % 2) ^ (y % 2) ^ static_cast<std::size_t>(p[1]);
    return static_cast<std::size_t>(2 * p[0]) + sign;
  });
}

Groupoid symmetric3() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::string> names;
  for (const auto& q : perms) names.push_back(std::to_string(q[0]) + std::to_string(q[1]) + std::to_string(q[2]));
  return make_group(names, [&perms](std::size_t a, std::size_t b) {
    std::array<int, 3> c{};
    for (int x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
    return static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
  });
}

Groupoid interval() {
  GroupoidSpec spec;
  spec.objects = {"x", "y"};
  spec.arrows = {{"id_x", "x", "x"}, {"id_y", "y", "y"}, {"f", "x", "y"}, {"f^-1", "y", "x"}};
  spec.compose = {
      {"id_x", "id_x", "id_x"}, {"id_y", "id_y", "id_y"}, {"f", "id_x", "f"},
      {"id_y", "f", "f"},       {"f^-1", "id_y", "f^-1"}, {"id_x", "f^-1", "f^-1"},
      {"f", "f^-1", "id_y"},    {"f^-1", "f", "id_x"},
  };
  return validate(spec);
}

GroupoidSpec broken_inverse_spec() {
  return group_spec({"e", "a"}, {{0, 1}, {1, 1}});
}

}  // namespace fixtures

}  // namespace qlogic

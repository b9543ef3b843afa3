#include "msdim/structure.hpp"

#include <algorithm>

#include "msdim/elements.hpp"
#include "msdim/errors.hpp"
#include "msdim/subgroups.hpp"

namespace msdim {

namespace {

void require_prime(unsigned p) {
  if (!is_prime(p))
    throw DomainError(std::to_string(p) + " is not prime");
}

ElemSet whole_set(const GroupElements& e) {
  ElemSet all(e.size());
  for (ElemId x = 0; x < all.size(); ++x)
    all[x] = x;
  return all;
}

std::vector<ElemSet> minimal_normal_sets(const GroupElements& e) {
  std::vector<ElemSet> closures;
  for (const auto& c : e.classes()) {
    if (c.representative == GroupElements::identity())
      continue;
    ElemId x = c.representative;
    ElemSet n = e.normal_closure(std::span<const ElemId>(&x, 1));
    if (std::find(closures.begin(), closures.end(), n) == closures.end())
      closures.push_back(std::move(n));
  }
  std::vector<ElemSet> minimal;
  for (const auto& n : closures) {
    bool is_min = true;
    for (const auto& m : closures)
      if (m.size() < n.size() && is_subset(m, n)) {
        is_min = false;
        break;
      }
    if (is_min)
      minimal.push_back(n);
  }
  std::sort(minimal.begin(), minimal.end(), [](const ElemSet& a, const ElemSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return minimal;
}

// Simple direct factors of the nonabelian minimal normal subgroups, as
// element sets of the ambient group.
std::vector<ElemSet> simple_factor_sets(const GroupElements& e) {
  std::vector<ElemSet> factors;
  for (const auto& n : minimal_normal_sets(e)) {
    if (e.is_abelian(n))
      continue;
    const PermGroup ng = e.subgroup(n);
    const GroupElements& en = ng.elements();
    for (const auto& t : minimal_normal_sets(en)) {
      ElemSet mapped;
      for (ElemId x : t)
        mapped.push_back(e.index_of(en[x]));
      std::sort(mapped.begin(), mapped.end());
      factors.push_back(std::move(mapped));
    }
  }
  return factors;
}

}  // namespace

std::vector<ClassInfo> conjugacy_classes(const PermGroup& g, unsigned p) {
  const auto& e = g.elements();
  std::vector<ClassInfo> out;
  for (const auto& c : e.classes())
    out.push_back({e[c.representative], c.size, c.element_order, p == 0 || c.element_order % p != 0});
  return out;
}

std::size_t count_p_regular_classes(const PermGroup& g, unsigned p) {
  std::size_t n = 0;
  for (const auto& c : g.elements().classes())
    if (c.element_order % p != 0)
      ++n;
  return n;
}

PermGroup sylow(const PermGroup& g, unsigned p) {
  require_prime(p);
  const auto& e = g.elements();
  return e.subgroup(sylow_in(e, whole_set(e), p));
}

PermGroup centralizer(const PermGroup& g, const PermGroup& h) {
  const auto& e = g.elements();
  return e.subgroup(centralizer_in(e, whole_set(e), e.set_of(h)));
}

PermGroup normalizer(const PermGroup& g, const PermGroup& h) {
  const auto& e = g.elements();
  return e.subgroup(normalizer_in(e, whole_set(e), e.set_of(h)));
}

PermGroup core_p(const PermGroup& g, unsigned p) {
  require_prime(p);
  const auto& e = g.elements();
  ElemSet o = o_p_in(e, whole_set(e), p);
  if (!e.is_normal(o) || !is_p_power(o.size(), p))
    throw std::logic_error("O_p computation produced a non-normal or non-p subgroup");
  return e.subgroup(o);
}

PermGroup o_p_residual(const PermGroup& g, unsigned p) {
  require_prime(p);
  const auto& e = g.elements();
  std::vector<ElemId> gens;
  for (const auto& c : e.classes()) {
    const ElemId x = e.pow(c.representative, p_part(c.element_order, p));
    if (x != GroupElements::identity())
      gens.push_back(x);
  }
  return e.subgroup(e.normal_closure(gens));
}

namespace {

constexpr std::size_t kComplementBudget = 200000;

// Twists generators g_i of G by elements of n, one at a time, keeping the
// partial closure disjoint from n; a full assignment generates a complement.
bool complement_search(const GroupElements& e, const std::vector<ElemId>& gens, const ElemSet& n,
                       const std::vector<bool>& in_n, std::vector<ElemId>& chosen, std::size_t& budget) {
  if (chosen.size() == gens.size())
    return true;
  const ElemId g = gens[chosen.size()];
  for (ElemId x : n) {
    if (budget-- == 0)
      throw CapabilityError("complement search exceeded " + std::to_string(kComplementBudget) + " closures");
    chosen.push_back(e.mul(g, x));
    const ElemSet h = e.closure(chosen);
    bool disjoint = h.size() * n.size() <= e.size();
    for (std::size_t k = 1; disjoint && k < h.size(); ++k)
      disjoint = !in_n[h[k]];
    if (disjoint && complement_search(e, gens, n, in_n, chosen, budget))
      return true;
    chosen.pop_back();
  }
  return false;
}

bool has_complement(const GroupElements& e, const ElemSet& n, std::size_t& budget) {
  // generators of G modulo n
  std::vector<ElemId> gens;
  std::vector<ElemId> span(n.begin(), n.end());
  std::size_t covered = n.size();
  for (std::size_t i = 0; i < e.num_generators() && covered < e.size(); ++i) {
    span.push_back(e.generator(i));
    const std::size_t grown = e.closure(span).size();
    if (grown > covered) {
      gens.push_back(e.generator(i));
      covered = grown;
    } else {
      span.pop_back();
    }
  }
  std::vector<ElemId> chosen;
  return complement_search(e, gens, n, e.mask(n), chosen, budget);
}

}  // namespace

bool frattini_trivial(const PermGroup& g) {
  const auto& e = g.elements();
  // Phi(G) = 1 iff every abelian minimal normal subgroup is complemented
  std::size_t budget = kComplementBudget;
  for (const auto& n : minimal_normal_sets(e))
    if (e.is_abelian(n) && !has_complement(e, n, budget))
      return false;
  return true;
}

PermGroup frattini(const PermGroup& g, Order lattice_bound) {
  if (frattini_trivial(g))
    return PermGroup(g.degree(), {});
  if (g.order() > lattice_bound)
    throw CapabilityError("Frattini subgroup: group order " + std::to_string(g.order()) +
                          " exceeds lattice bound " + std::to_string(lattice_bound));
  const auto& e = g.elements();
  ElemSet phi = whole_set(e);
  for (const auto& c : subgroup_lattice(e, lattice_bound))
    if (c.maximal)
      phi = intersect(phi, c.core);
  return e.subgroup(phi);
}

std::vector<PermGroup> minimal_normal_subgroups(const PermGroup& g) {
  const auto& e = g.elements();
  std::vector<PermGroup> out;
  for (const auto& n : minimal_normal_sets(e))
    out.push_back(e.subgroup(n));
  return out;
}

NormalStructure normal_structure(const PermGroup& g, unsigned p, Order lattice_bound) {
  require_prime(p);
  const auto& e = g.elements();
  NormalStructure ns;
  ns.o_p_order = o_p_in(e, whole_set(e), p).size();
  try {
    ns.frattini_order = frattini(g, lattice_bound).order();
  } catch (const CapabilityError&) {
    ns.frattini_order.reset();
  }
  ns.minimal_normals = minimal_normal_subgroups(g);
  for (const auto& t : simple_factor_sets(e))
    ns.simple_factors.push_back({e.subgroup(t), t.size(), t.size() % p == 0});
  return ns;
}

PermGroup p_layer_unchecked(const PermGroup& g, unsigned p) {
  const auto& e = g.elements();
  std::vector<ElemId> gens;
  for (const auto& t : simple_factor_sets(e))
    if (t.size() % p == 0)
      for (ElemId x : e.generating_set(t))
        gens.push_back(x);
  return e.subgroup(e.closure(gens));
}

PermGroup p_layer(const PermGroup& g, unsigned p) {
  require_prime(p);
  if (!core_p(g, p).is_trivial())
    throw PreconditionError("p_layer requires O_p(G) = 1");
  if (!frattini_trivial(g))
    throw PreconditionError("p_layer requires Phi(G) = 1");
  return p_layer_unchecked(g, p);
}

Order max_abelian_p_order(const PermGroup& g, unsigned p, const PermGroup& container,
                          const std::optional<PermGroup>& must_contain, Order lattice_bound) {
  require_prime(p);
  const auto& e = g.elements();
  const ElemSet c = e.set_of(container);
  ElemSet b{GroupElements::identity()};
  if (must_contain) {
    b = e.set_of(*must_contain);
    if (!is_subset(b, c))
      throw DomainError("must_contain is not a subgroup of the container");
    if (!is_p_power(b.size(), p) || !e.is_abelian(b))
      throw DomainError("must_contain is not an abelian p-subgroup");
  }
  const ElemSet s = sylow_in(e, c, p);
  const auto b_class = conjugates_in(e, c, b);
  Order best = 0;
  for (const auto& a : all_subgroups(e, s, lattice_bound)) {
    if (a.size() <= best || !e.is_abelian(a))
      continue;
    for (const auto& bc : b_class)
      if (is_subset(bc, a)) {
        best = a.size();
        break;
      }
  }
  return best;
}

PermGroup coset_action(const PermGroup& g, const PermGroup& h) {
  const auto& e = g.elements();
  const ElemSet hs = e.set_of(h);
  constexpr Point kUnset = static_cast<Point>(-1);
  std::vector<Point> coset(e.size(), kUnset);
  Point count = 0;
  std::vector<ElemId> reps;
  for (ElemId x = 0; x < e.size(); ++x) {
    if (coset[x] != kUnset)
      continue;
    for (ElemId y : hs)
      coset[e.mul(y, x)] = count;
    reps.push_back(x);
    ++count;
  }
  std::vector<Permutation> gens;
  for (std::size_t s = 0; s < e.num_generators(); ++s) {
    std::vector<Point> images(count);
    for (Point c = 0; c < count; ++c)
      images[c] = coset[e.mul(reps[c], e.generator(s))];
    gens.emplace_back(std::move(images));
  }
  return PermGroup(count, std::move(gens));
}

PermGroup quotient(const PermGroup& g, const PermGroup& n) {
  if (!is_normal(g, n))
    throw DomainError("quotient requires a normal subgroup");
  return coset_action(g, n);
}

PermGroup direct_product(const PermGroup& a, const PermGroup& b) {
  const std::size_t d = a.degree() + b.degree();
  std::vector<Permutation> gens;
  for (const auto& x : a.generators())
    gens.push_back(x.shifted(0, d));
  for (const auto& y : b.generators())
    gens.push_back(y.shifted(a.degree(), d));
  return PermGroup(d, std::move(gens));
}

bool is_normal(const PermGroup& g, const PermGroup& h) {
  const auto& e = g.elements();
  return e.is_normal(e.set_of(h));
}

bool is_solvable(const PermGroup& g) {
  PermGroup cur = g;
  while (!cur.is_trivial()) {
    const auto& e = cur.elements();
    std::vector<ElemId> comms;
    const auto gens = e.generating_set(whole_set(e));
    for (ElemId a : gens)
      for (ElemId b : gens)
        comms.push_back(e.mul(e.mul(e.inv(a), e.inv(b)), e.mul(a, b)));
    ElemSet d = e.normal_closure(comms);
    if (d.size() == e.size())
      return false;
    cur = e.subgroup(d);
  }
  return true;
}

bool is_p_solvable(const PermGroup& g, unsigned p) {
  require_prime(p);
  PermGroup cur = g;
  while (!cur.is_trivial()) {
    const auto& e = cur.elements();
    const ElemSet n = minimal_normal_sets(e).front();
    if (!e.is_abelian(n)) {
      const PermGroup ng = e.subgroup(n);
      const ElemSet t = minimal_normal_sets(ng.elements()).front();
      if (t.size() % p == 0)
        return false;
    }
    cur = coset_action(cur, e.subgroup(n));
  }
  return true;
}

}  // namespace msdim

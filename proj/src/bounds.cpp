#include "msdim/bounds.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "msdim/errors.hpp"
#include "msdim/subgroups.hpp"

namespace msdim {

bool is_mersenne(unsigned p) {
  if (p == 2 || !is_prime(p))
    return false;
  const unsigned n = p + 1;
  return (n & (n - 1)) == 0;
}

PrimeClass classify_prime(unsigned p) {
  if (!is_prime(p))
    throw DomainError("p must be prime");
  if (p == 2)
    return PrimeClass::two;
  return is_mersenne(p) ? PrimeClass::mersenne : PrimeClass::generic;
}

const char* prime_class_name(PrimeClass c) {
  switch (c) {
    case PrimeClass::two:
      return "two";
    case PrimeClass::mersenne:
      return "mersenne";
    case PrimeClass::generic:
      return "generic";
  }
  return "?";
}

LayerData layer_data(const PermGroup& g, unsigned p) {
  PermGroup x = p_layer(g, p);
  PermGroup c = centralizer(g, x);
  const auto& e = g.elements();
  std::vector<ElemId> gens;
  for (ElemId id : e.generating_set(e.set_of(x)))
    gens.push_back(id);
  for (ElemId id : e.generating_set(e.set_of(c)))
    gens.push_back(id);
  PermGroup xc = e.subgroup(e.closure(gens));
  return {std::move(x), std::move(c), std::move(xc)};
}

Order bound_part_i(const PermGroup& g, unsigned p, const LayerData& layer) {
  const Order gp = p_part(g.order(), p);
  const Order out_p = p_part(g.order() / layer.xc.order(), p);
  return gp / out_p;
}

Order bound_part_i(const PermGroup& g, unsigned p) {
  return bound_part_i(g, p, layer_data(g, p));
}

Order bound_part_ii(const PermGroup& g, unsigned p, const LayerData& layer, Order lattice_bound) {
  if (classify_prime(p) == PrimeClass::generic)
    throw PreconditionError("the abelian subgroup bound applies to p = 2 or Mersenne p only");
  const auto& e = g.elements();
  const ElemSet c = e.set_of(layer.c);
  const ElemSet sc = sylow_in(e, c, p);
  std::vector<ElemSet> abelian;
  std::size_t top = 0;
  for (auto& b : all_subgroups(e, sc, lattice_bound)) {
    if (!e.is_abelian(b) || b.size() < top)
      continue;
    if (b.size() > top) {
      abelian.clear();
      top = b.size();
    }
    abelian.push_back(std::move(b));
  }
  Order best = 0;
  for (const auto& b : abelian)
    best = std::max(best, max_abelian_p_order(g, p, layer.xc, e.subgroup(b), lattice_bound));
  return best;
}

Order bound_part_ii(const PermGroup& g, unsigned p, Order lattice_bound) {
  return bound_part_ii(g, p, layer_data(g, p), lattice_bound);
}

std::vector<Order> maximal_abelian_p_orders(const PermGroup& g, unsigned p, Order lattice_bound) {
  const auto& e = g.elements();
  ElemSet all(e.size());
  std::iota(all.begin(), all.end(), ElemId{0});
  const ElemSet s = sylow_in(e, all, p);
  std::set<Order> out;
  for (const auto& a : all_subgroups(e, s, lattice_bound)) {
    if (!e.is_abelian(a))
      continue;
    // maximal iff the p-part of its centralizer is itself
    if (p_part(centralizer_in(e, all, a).size(), p) == a.size())
      out.insert(a.size());
  }
  return {out.begin(), out.end()};
}

bool is_nonabelian_simple(const PermGroup& g) {
  if (g.order() == 1)
    return false;
  const auto mins = minimal_normal_subgroups(g);
  return mins.size() == 1 && mins[0].order() == g.order() && !g.elements().is_abelian(g.elements().set_of(g));
}

}  // namespace msdim

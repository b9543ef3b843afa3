#include "msdim/subgroups.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>

#include "msdim/errors.hpp"

namespace msdim {

bool is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

Order p_part(Order n, unsigned p) {
  Order r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

bool is_p_power(Order n, unsigned p) { return p_part(n, p) == n; }

std::size_t ElemSetHash::operator()(const ElemSet& s) const noexcept {
  std::size_t h = 14695981039346656037ull;
  for (ElemId x : s) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

ElemSet normalizer_in(const GroupElements& e, const ElemSet& within, const ElemSet& h) {
  const auto gens = e.generating_set(h);
  const auto in = e.mask(h);
  ElemSet out;
  for (ElemId g : within) {
    bool ok = true;
    for (ElemId x : gens)
      if (!in[e.conj(x, g)]) {
        ok = false;
        break;
      }
    if (ok)
      out.push_back(g);
  }
  return out;
}

ElemSet centralizer_in(const GroupElements& e, const ElemSet& within, const ElemSet& h) {
  const auto gens = e.generating_set(h);
  ElemSet out;
  for (ElemId g : within) {
    bool ok = true;
    for (ElemId x : gens)
      if (e.mul(x, g) != e.mul(g, x)) {
        ok = false;
        break;
      }
    if (ok)
      out.push_back(g);
  }
  return out;
}

std::vector<ElemSet> conjugates_in(const GroupElements& e, const ElemSet& within, const ElemSet& h) {
  const auto gens = e.generating_set(within);
  std::vector<ElemSet> orbit{h};
  std::unordered_set<ElemSet, ElemSetHash> seen{h};
  for (std::size_t k = 0; k < orbit.size(); ++k) {
    for (ElemId s : gens) {
      ElemSet c = e.conjugate(orbit[k], s);
      if (seen.insert(c).second)
        orbit.push_back(std::move(c));
    }
  }
  return orbit;
}

ElemSet core_in(const GroupElements& e, const ElemSet& within, const ElemSet& h) {
  ElemSet acc = h;
  for (const auto& c : conjugates_in(e, within, h))
    acc = intersect(acc, c);
  return acc;
}

ElemSet sylow_in(const GroupElements& e, const ElemSet& within, unsigned p) {
  const Order target = p_part(within.size(), p);
  ElemSet q{GroupElements::identity()};
  std::vector<ElemId> qgens;
  while (q.size() < target) {
    const ElemSet n = normalizer_in(e, within, q);
    const auto inq = e.mask(q);
    std::optional<ElemId> step;
    for (ElemId x : n) {
      if (inq[x])
        continue;
      // Order of xQ in N/Q.
      Order k = 1;
      ElemId y = x;
      while (!inq[y]) {
        y = e.mul(y, x);
        ++k;
      }
      if (k % p == 0) {
        step = e.pow(x, k / p);
        break;
      }
    }
    if (!step)
      throw std::logic_error("Sylow climbing found no p-element in the normalizer");
    qgens.push_back(*step);
    q = e.closure(qgens);
  }
  return q;
}

ElemSet o_p_in(const GroupElements& e, const ElemSet& within, unsigned p) {
  return core_in(e, within, sylow_in(e, within, p));
}

bool is_elementary_abelian(const GroupElements& e, const ElemSet& h, unsigned p) {
  if (!e.is_abelian(h))
    return false;
  for (ElemId x : h)
    if (x != GroupElements::identity() && e.element_order(x) != p)
      return false;
  return true;
}

namespace {

struct Generated {
  ElemSet set;
  std::vector<ElemId> gens;
};

// Cyclic subgroups of prime-power order inside h, one generator each.
std::vector<Generated> prime_power_cyclics(const GroupElements& e, const ElemSet& h) {
  std::vector<Generated> out;
  std::unordered_set<ElemSet, ElemSetHash> seen;
  for (ElemId x : h) {
    if (x == GroupElements::identity())
      continue;
    Order n = e.element_order(x);
    unsigned q = 2;
    while (n % q)
      ++q;
    if (!is_p_power(n, q))
      continue;
    std::vector<ElemId> g{x};
    ElemSet c = e.closure(g);
    if (seen.insert(c).second)
      out.push_back({std::move(c), std::move(g)});
  }
  return out;
}

}  // namespace

std::vector<ElemSet> all_subgroups(const GroupElements& e, const ElemSet& h, Order bound) {
  if (h.size() > bound)
    throw CapabilityError("subgroup enumeration: order " + std::to_string(h.size()) +
                          " exceeds lattice bound " + std::to_string(bound));
  const auto cyc = prime_power_cyclics(e, h);
  std::vector<Generated> found;
  std::unordered_set<ElemSet, ElemSetHash> seen;
  found.push_back({ElemSet{GroupElements::identity()}, {}});
  seen.insert(found.back().set);
  for (std::size_t k = 0; k < found.size(); ++k) {
    const auto in = e.mask(found[k].set);
    for (const auto& c : cyc) {
      if (in[c.gens.front()])
        continue;
      std::vector<ElemId> g = found[k].gens;
      g.push_back(c.gens.front());
      ElemSet j = e.closure(g);
      if (seen.insert(j).second)
        found.push_back({std::move(j), std::move(g)});
    }
  }
  std::vector<ElemSet> out;
  out.reserve(found.size());
  for (auto& f : found)
    out.push_back(std::move(f.set));
  std::sort(out.begin(), out.end(), [](const ElemSet& a, const ElemSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

std::vector<SubgroupClass> subgroup_lattice(const GroupElements& e, Order bound) {
  if (e.size() > bound)
    throw CapabilityError("subgroup lattice: group order " + std::to_string(e.size()) +
                          " exceeds lattice bound " + std::to_string(bound));
  ElemSet whole(e.size());
  for (ElemId x = 0; x < whole.size(); ++x)
    whole[x] = x;
  const auto cyc = prime_power_cyclics(e, whole);

  std::unordered_map<ElemSet, std::size_t, ElemSetHash> class_of;
  std::vector<SubgroupClass> classes;
  std::vector<std::vector<ElemId>> class_gens;

  auto add = [&](ElemSet k, std::vector<ElemId> gens) {
    if (class_of.count(k))
      return;
    const std::size_t id = classes.size();
    auto orbit = conjugates_in(e, whole, k);
    SubgroupClass c;
    c.representative = *std::min_element(orbit.begin(), orbit.end());
    c.class_size = orbit.size();
    c.core = k;
    for (auto& o : orbit) {
      c.core = intersect(c.core, o);
      class_of.emplace(std::move(o), id);
    }
    classes.push_back(std::move(c));
    class_gens.push_back(std::move(gens));
  };

  add(ElemSet{GroupElements::identity()}, {});
  for (std::size_t k = 0; k < classes.size(); ++k) {
    // The stored generators generate some conjugate of the representative.
    const ElemSet base = e.closure(class_gens[k]);
    const bool is_whole = base.size() == e.size();
    bool maximal = !is_whole;
    const auto in = e.mask(base);
    for (const auto& c : cyc) {
      if (in[c.gens.front()])
        continue;
      std::vector<ElemId> g = class_gens[k];
      g.push_back(c.gens.front());
      ElemSet j = e.closure(g);
      if (j.size() != e.size())
        maximal = false;
      add(std::move(j), std::move(g));
    }
    classes[k].maximal = maximal;
  }
  std::sort(classes.begin(), classes.end(), [](const SubgroupClass& a, const SubgroupClass& b) {
    const auto& x = a.representative;
    const auto& y = b.representative;
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  return classes;
}

}  // namespace msdim

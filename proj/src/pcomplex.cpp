#include "msdim/pcomplex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

#include "msdim/errors.hpp"
#include "msdim/subgroups.hpp"

namespace msdim {

std::string_view kind_name(ComplexKind k) {
  switch (k) {
    case ComplexKind::poset:
      return "poset";
    case ComplexKind::elementary_abelian:
      return "elementary_abelian";
    case ComplexKind::bouc:
      return "bouc";
  }
  return "?";
}

ComplexKind parse_kind(std::string_view s) {
  if (s == "poset")
    return ComplexKind::poset;
  if (s == "elab" || s == "elementary_abelian")
    return ComplexKind::elementary_abelian;
  if (s == "bouc")
    return ComplexKind::bouc;
  throw MalformedInput("unknown complex kind '" + std::string(s) + "'");
}

bool VirtualCharacter::is_zero() const {
  return std::all_of(values.begin(), values.end(), [](std::int64_t v) { return v == 0; });
}

namespace {

ElemSet everything(const GroupElements& e) {
  ElemSet s(e.size());
  std::iota(s.begin(), s.end(), ElemId{0});
  return s;
}

// All nontrivial p-subgroups of the kind, as full conjugacy classes.
struct SubgroupCensus {
  std::vector<ElemSet> subgroups;                        // every member of every class
  std::vector<std::size_t> class_of;                     // per subgroup
  std::vector<std::size_t> class_rep;                    // per class: index into subgroups
  std::unordered_map<ElemSet, std::size_t, ElemSetHash> index;
};

SubgroupCensus census(const GroupElements& e, unsigned p, ComplexKind kind, const std::optional<ElemSet>& seed,
                      Order bound) {
  if (!is_prime(p))
    throw DomainError("p must be prime");
  const ElemSet all = everything(e);
  const ElemSet syl = seed ? *seed : sylow_in(e, all, p);
  if (seed && (syl.size() != p_part(e.size(), p) || e.closure(syl) != syl))
    throw DomainError("seed is not a Sylow subgroup");
  SubgroupCensus c;
  for (const ElemSet& u : all_subgroups(e, syl, bound)) {
    if (u.size() == 1 || c.index.count(u))
      continue;
    bool keep = true;
    if (kind == ComplexKind::elementary_abelian)
      keep = is_elementary_abelian(e, u, p);
    else if (kind == ComplexKind::bouc)
      keep = o_p_in(e, normalizer_in(e, all, u), p) == u;
    auto conj = conjugates_in(e, all, u);
    std::sort(conj.begin(), conj.end());
    const std::size_t cls = c.class_rep.size();
    c.class_rep.push_back(c.subgroups.size());
    for (auto& v : conj) {
      c.index.emplace(v, keep ? c.subgroups.size() : static_cast<std::size_t>(-1));
      if (keep) {
        c.subgroups.push_back(std::move(v));
        c.class_of.push_back(cls);
      }
    }
    if (!keep)
      c.class_rep.pop_back();
  }
  std::erase_if(c.index, [](const auto& kv) { return kv.second == static_cast<std::size_t>(-1); });
  return c;
}

struct Frame {
  std::vector<std::size_t> chain;
  ElemSet stabilizer;
};

}  // namespace

std::vector<ElemSet> p_subgroup_classes(const PermGroup& g, unsigned p, ComplexKind kind,
                                        const std::optional<ElemSet>& sylow_seed, Order lattice_bound) {
  const auto& e = g.elements();
  const auto c = census(e, p, kind, sylow_seed, lattice_bound);
  std::vector<ElemSet> out;
  for (std::size_t r : c.class_rep)
    out.push_back(c.subgroups[r]);
  std::sort(out.begin(), out.end(), [](const ElemSet& a, const ElemSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

std::vector<ChainOrbit> chain_orbits(const PermGroup& g, unsigned p, ComplexKind kind,
                                     const std::optional<ElemSet>& sylow_seed, Order lattice_bound) {
  const auto& e = g.elements();
  const auto c = census(e, p, kind, sylow_seed, lattice_bound);
  const ElemSet all = everything(e);
  const Order order = e.size();
  std::unordered_map<std::size_t, ElemSet> normalizers;
  auto normalizer_of = [&](std::size_t i) -> const ElemSet& {
    auto it = normalizers.find(i);
    if (it == normalizers.end())
      it = normalizers.emplace(i, normalizer_in(e, all, c.subgroups[i])).first;
    return it->second;
  };
  std::vector<ChainOrbit> out;
  auto emit = [&](const Frame& f) {
    ChainOrbit o;
    for (std::size_t i : f.chain)
      o.chain.push_back(c.subgroups[i]);
    o.m = f.chain.size();
    o.stabilizer = f.stabilizer;
    o.stabilizer_order = f.stabilizer.size();
    o.orbit_size = order / o.stabilizer_order;
    o.sign = o.m % 2 == 0 ? 1 : -1;
    out.push_back(std::move(o));
  };
  emit({{}, all});

  // Orbits of `stab` on `candidates` (indices), each with its least member.
  auto orbit_reps = [&](const ElemSet& stab, std::vector<std::size_t> candidates) {
    std::sort(candidates.begin(), candidates.end());
    const auto gens = e.generating_set(stab);
    std::vector<std::size_t> reps;
    std::vector<bool> seen(c.subgroups.size(), false);
    for (std::size_t start : candidates) {
      if (seen[start])
        continue;
      std::vector<std::size_t> orbit{start};
      seen[start] = true;
      for (std::size_t k = 0; k < orbit.size(); ++k)
        for (ElemId x : gens) {
          const std::size_t j = c.index.at(e.conjugate(c.subgroups[orbit[k]], x));
          if (!seen[j]) {
            seen[j] = true;
            orbit.push_back(j);
          }
        }
      reps.push_back(*std::min_element(orbit.begin(), orbit.end(), [&](std::size_t a, std::size_t b) {
        return c.subgroups[a] < c.subgroups[b];
      }));
    }
    std::sort(reps.begin(), reps.end(), [&](std::size_t a, std::size_t b) {
      const auto& x = c.subgroups[a];
      const auto& y = c.subgroups[b];
      return x.size() != y.size() ? x.size() < y.size() : x < y;
    });
    return reps;
  };

  std::vector<std::size_t> everyone(c.subgroups.size());
  std::iota(everyone.begin(), everyone.end(), std::size_t{0});
  std::vector<Frame> stack;
  const auto firsts = orbit_reps(all, everyone);
  for (auto it = firsts.rbegin(); it != firsts.rend(); ++it)
    stack.push_back({{*it}, normalizer_of(*it)});
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    emit(f);
    const ElemSet& top = c.subgroups[f.chain.back()];
    std::vector<std::size_t> above;
    for (std::size_t j = 0; j < c.subgroups.size(); ++j)
      if (c.subgroups[j].size() > top.size() && is_subset(top, c.subgroups[j]))
        above.push_back(j);
    if (above.empty())
      continue;
    const auto reps = orbit_reps(f.stabilizer, std::move(above));
    for (auto it = reps.rbegin(); it != reps.rend(); ++it) {
      Frame next{f.chain, intersect(f.stabilizer, normalizer_of(*it))};
      next.chain.push_back(*it);
      stack.push_back(std::move(next));
    }
  }
  return out;
}

std::int64_t reduced_euler_characteristic(const std::vector<ChainOrbit>& orbits) {
  std::int64_t s = 0;
  for (const auto& o : orbits)
    s -= o.sign * static_cast<std::int64_t>(o.orbit_size);
  return s;
}

std::int64_t reduced_euler_characteristic(const PermGroup& g, unsigned p, ComplexKind kind) {
  return reduced_euler_characteristic(chain_orbits(g, p, kind));
}

VirtualCharacter steinberg_character(const PermGroup& g, unsigned p, const std::vector<ChainOrbit>& orbits) {
  const auto& e = g.elements();
  VirtualCharacter ch;
  ch.class_reps = conjugacy_classes(g, p);
  const auto& classes = e.classes();
  ch.values.assign(classes.size(), 0);
  const Order order = e.size();
  for (const auto& o : orbits) {
    std::vector<Order> hits(classes.size(), 0);
    for (ElemId x : o.stabilizer)
      ++hits[e.class_of(x)];
    const Order hsize = o.stabilizer.size();
    for (std::size_t k = 0; k < classes.size(); ++k) {
      // fixed cosets of H under g: |C_G(g)| |g^G ∩ H| / |H|
      const Order fixed = (order / classes[k].size) * hits[k] / hsize;
      ch.values[k] += o.sign * static_cast<std::int64_t>(fixed);
    }
  }
  return ch;
}

VirtualCharacter steinberg_character(const PermGroup& g, unsigned p, ComplexKind kind) {
  return steinberg_character(g, p, chain_orbits(g, p, kind));
}

bool steinberg_nonzero(const PermGroup& g, unsigned p) {
  return !steinberg_character(g, p, ComplexKind::poset).is_zero();
}

std::string chain_census_csv(ComplexKind kind, const std::vector<ChainOrbit>& orbits) {
  std::string out = "kind,m,orders,stabilizer_order,orbit_size,sign\n";
  for (const auto& o : orbits) {
    std::string orders;
    for (std::size_t i = 0; i < o.chain.size(); ++i) {
      if (i)
        orders += '<';
      orders += std::to_string(o.chain[i].size());
    }
    out += std::string(kind_name(kind)) + ',' + std::to_string(o.m) + ',' + orders + ',' +
           std::to_string(o.stabilizer_order) + ',' + std::to_string(o.orbit_size) + ',' + std::to_string(o.sign) + '\n';
  }
  return out;
}

}  // namespace msdim

#include "msdim/elements.hpp"

#include <algorithm>
#include <deque>

#include "msdim/errors.hpp"
#include "msdim/permgroup.hpp"

namespace msdim {

GroupElements::GroupElements(const PermGroup& g) : degree_(g.degree()) {
  const auto& gens = g.generators();
  const std::size_t r = gens.size();
  right_.assign(r, {});
  elements_.reserve(g.order());
  elements_.emplace_back(degree_);
  index_.emplace(elements_.back(), 0);
  parent_.push_back(0);
  parent_gen_.push_back(0);
  depth_.push_back(0);

  for (std::size_t x = 0; x < elements_.size(); ++x) {
    for (std::size_t s = 0; s < r; ++s) {
      Permutation y = elements_[x] * gens[s];
      auto it = index_.find(y);
      ElemId id;
      if (it == index_.end()) {
        id = static_cast<ElemId>(elements_.size());
        index_.emplace(y, id);
        elements_.push_back(std::move(y));
        parent_.push_back(static_cast<ElemId>(x));
        parent_gen_.push_back(static_cast<std::uint32_t>(s));
        depth_.push_back(depth_[x] + 1);
      } else {
        id = it->second;
      }
      right_[s].push_back(id);
    }
  }
  const std::size_t n = elements_.size();
  for (std::size_t s = 0; s < r; ++s)
    gen_ids_.push_back(right_[s][0]);

  if (n <= kTableLimit) {
    table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      std::uint16_t* row = &table_[a * n];
      row[0] = static_cast<std::uint16_t>(a);
      for (std::size_t b = 1; b < n; ++b)
        row[b] = static_cast<std::uint16_t>(right_[parent_gen_[b]][row[parent_[b]]]);
    }
  }

  inverse_.resize(n);
  orders_.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    inverse_[x] = index_.at(elements_[x].inverse());
    orders_[x] = elements_[x].order();
  }

  // Conjugacy classes as orbits under conjugation by the generators.
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> raw(n, kUnset);
  std::vector<std::vector<ElemId>> members;
  for (ElemId x = 0; x < n; ++x) {
    if (raw[x] != kUnset)
      continue;
    const std::size_t c = members.size();
    members.push_back({x});
    raw[x] = c;
    for (std::size_t k = 0; k < members[c].size(); ++k) {
      const ElemId z = members[c][k];
      for (ElemId s : gen_ids_) {
        const ElemId y = conj(z, s);
        if (raw[y] == kUnset) {
          raw[y] = c;
          members[c].push_back(y);
        }
      }
    }
  }
  std::vector<ElementClass> unsorted;
  for (const auto& m : members) {
    ElemId rep = m.front();
    for (ElemId y : m)
      if (elements_[y] < elements_[rep])
        rep = y;
    unsorted.push_back({rep, m.size(), orders_[rep]});
  }
  std::vector<std::size_t> perm(unsorted.size());
  for (std::size_t i = 0; i < perm.size(); ++i)
    perm[i] = i;
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    if (unsorted[a].element_order != unsorted[b].element_order)
      return unsorted[a].element_order < unsorted[b].element_order;
    return elements_[unsorted[a].representative] < elements_[unsorted[b].representative];
  });
  std::vector<std::size_t> rank(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    rank[perm[i]] = i;
    classes_.push_back(unsorted[perm[i]]);
  }
  class_of_.resize(n);
  for (std::size_t x = 0; x < n; ++x)
    class_of_[x] = rank[raw[x]];
}

std::optional<ElemId> GroupElements::find(const Permutation& g) const {
  auto it = index_.find(g);
  if (it == index_.end())
    return std::nullopt;
  return it->second;
}

ElemId GroupElements::index_of(const Permutation& g) const {
  if (g.degree() != degree_)
    throw DomainError("permutation degree does not match the group");
  auto id = find(g);
  if (!id)
    throw DomainError("permutation " + g.to_cycles() + " is not a group element");
  return *id;
}

ElemId GroupElements::mul(ElemId a, ElemId b) const {
  const std::size_t n = elements_.size();
  if (!table_.empty())
    return table_[static_cast<std::size_t>(a) * n + b];
  std::uint32_t path[64];
  std::size_t len = 0;
  std::vector<std::uint32_t> longpath;
  for (ElemId x = b; x != 0; x = parent_[x]) {
    if (len < 64)
      path[len++] = parent_gen_[x];
    else
      longpath.push_back(parent_gen_[x]);
  }
  ElemId r = a;
  for (auto it = longpath.rbegin(); it != longpath.rend(); ++it)
    r = right_[*it][r];
  while (len > 0)
    r = right_[path[--len]][r];
  return r;
}

ElemId GroupElements::pow(ElemId x, Order e) const {
  ElemId acc = identity();
  ElemId base = x;
  while (e) {
    if (e & 1)
      acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

std::vector<std::uint32_t> GroupElements::word(ElemId x) const {
  std::vector<std::uint32_t> w;
  for (; x != 0; x = parent_[x])
    w.push_back(parent_gen_[x]);
  std::reverse(w.begin(), w.end());
  return w;
}

ElemSet GroupElements::closure(std::span<const ElemId> gens) const {
  std::vector<bool> in(size(), false);
  ElemSet out{identity()};
  in[identity()] = true;
  std::vector<ElemId> g;
  for (ElemId x : gens)
    if (x != identity())
      g.push_back(x);
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (ElemId s : g) {
      const ElemId y = mul(out[k], s);
      if (!in[y]) {
        in[y] = true;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

ElemSet GroupElements::normal_closure(std::span<const ElemId> gens) const {
  std::vector<ElemId> g(gens.begin(), gens.end());
  for (;;) {
    ElemSet h = closure(g);
    auto in = mask(h);
    bool grown = false;
    const std::size_t count = g.size();
    for (std::size_t i = 0; i < count; ++i) {
      for (ElemId s : gen_ids_) {
        const ElemId y = conj(g[i], s);
        if (!in[y]) {
          g.push_back(y);
          in[y] = true;
          grown = true;
        }
      }
    }
    if (!grown)
      return h;
  }
}

ElemSet GroupElements::conjugate(const ElemSet& h, ElemId g) const {
  ElemSet out;
  out.reserve(h.size());
  const ElemId gi = inverse_[g];
  for (ElemId x : h)
    out.push_back(mul(mul(gi, x), g));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ElemId> GroupElements::generating_set(const ElemSet& h) const {
  std::vector<ElemId> gens;
  std::vector<bool> in(size(), false);
  in[identity()] = true;
  std::size_t covered = 1;
  for (ElemId x : h) {
    if (covered == h.size())
      break;
    if (in[x])
      continue;
    gens.push_back(x);
    ElemSet c = closure(gens);
    std::fill(in.begin(), in.end(), false);
    for (ElemId y : c)
      in[y] = true;
    covered = c.size();
  }
  return gens;
}

ElemSet GroupElements::set_of(const PermGroup& h) const {
  if (h.degree() != degree_)
    throw DomainError("subgroup degree does not match the group");
  std::vector<ElemId> gens;
  for (const auto& g : h.generators())
    gens.push_back(index_of(g));
  return closure(gens);
}

PermGroup GroupElements::subgroup(const ElemSet& h) const {
  std::vector<Permutation> gens;
  for (ElemId x : generating_set(h))
    gens.push_back(elements_[x]);
  return PermGroup(degree_, std::move(gens));
}

bool GroupElements::is_normal(const ElemSet& h) const {
  auto in = mask(h);
  for (ElemId x : generating_set(h))
    for (ElemId s : gen_ids_)
      if (!in[conj(x, s)])
        return false;
  return true;
}

bool GroupElements::is_abelian(const ElemSet& h) const {
  auto gens = generating_set(h);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (mul(gens[i], gens[j]) != mul(gens[j], gens[i]))
        return false;
  return true;
}

std::vector<bool> GroupElements::mask(const ElemSet& h) const {
  std::vector<bool> in(size(), false);
  for (ElemId x : h)
    in[x] = true;
  return in;
}

bool is_subset(const ElemSet& a, const ElemSet& b) {
  return a.size() <= b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
}

ElemSet intersect(const ElemSet& a, const ElemSet& b) {
  ElemSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace msdim

#include "msdim/permgroup.hpp"

#include <mutex>

#include "msdim/elements.hpp"
#include "msdim/errors.hpp"

namespace msdim {

struct PermGroup::Cache {
  std::once_flag once;
  std::unique_ptr<GroupElements> elements;
};

PermGroup::PermGroup() : PermGroup(1, {}) {}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)), cache_(std::make_shared<Cache>()) {
  if (degree_ == 0)
    throw MalformedInput("permutation degree must be positive");
  for (const auto& g : generators_)
    if (g.degree() != degree_)
      throw MalformedInput("generator degree " + std::to_string(g.degree()) +
                           " does not match group degree " + std::to_string(degree_));
  build_chain();
}

std::vector<Point> PermGroup::base() const { return base_; }

std::pair<Permutation, std::size_t> PermGroup::strip(Permutation g, std::size_t from) const {
  for (std::size_t i = from; i < levels_.size(); ++i) {
    const BasicOrbit& lvl = levels_[i];
    const int pos = lvl.position[g[lvl.base_point]];
    if (pos < 0)
      return {std::move(g), i};
    g = g * lvl.transversal[static_cast<std::size_t>(pos)].inverse();
  }
  return {std::move(g), levels_.size()};
}

// Level i uses every strong generator that fixes base_[0..i-1].
void PermGroup::rebuild_levels() {
  levels_.assign(base_.size(), {});
  for (std::size_t i = 0; i < base_.size(); ++i) {
    BasicOrbit& lvl = levels_[i];
    lvl.base_point = base_[i];
    lvl.position.assign(degree_, -1);
    std::vector<const Permutation*> gens;
    for (const auto& s : strong_) {
      bool fixes = true;
      for (std::size_t j = 0; j < i && fixes; ++j)
        fixes = s[base_[j]] == base_[j];
      if (fixes)
        gens.push_back(&s);
    }
    lvl.orbit.push_back(lvl.base_point);
    lvl.transversal.emplace_back(degree_);
    lvl.position[lvl.base_point] = 0;
    for (std::size_t k = 0; k < lvl.orbit.size(); ++k) {
      for (const Permutation* s : gens) {
        const Point y = (*s)[lvl.orbit[k]];
        if (lvl.position[y] >= 0)
          continue;
        lvl.position[y] = static_cast<int>(lvl.orbit.size());
        lvl.orbit.push_back(y);
        lvl.transversal.push_back(lvl.transversal[k] * *s);
      }
    }
  }
  order_ = 1;
  for (const auto& lvl : levels_)
    order_ *= lvl.orbit.size();
}

void PermGroup::build_chain() {
  for (const auto& g : generators_) {
    if (g.is_identity())
      continue;
    auto [h, j] = strip(g, 0);
    if (h.is_identity())
      continue;
    if (j == base_.size())
      base_.push_back(h.first_moved());
    strong_.push_back(std::move(h));
    rebuild_levels();
  }

  // Deterministic Schreier-Sims: scan Schreier generators from the deepest
  // level upwards; any non-sifting generator is added and the scan restarts.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t li = levels_.size(); li-- > 0 && !changed;) {
      const BasicOrbit& lvl = levels_[li];
      std::vector<Permutation> gens;
      for (const auto& s : strong_) {
        bool fixes = true;
        for (std::size_t j = 0; j < li && fixes; ++j)
          fixes = s[base_[j]] == base_[j];
        if (fixes)
          gens.push_back(s);
      }
      for (std::size_t k = 0; k < lvl.orbit.size() && !changed; ++k) {
        for (const auto& s : gens) {
          const Point y = s[lvl.orbit[k]];
          const auto& uy = lvl.transversal[static_cast<std::size_t>(lvl.position[y])];
          Permutation schreier = lvl.transversal[k] * s * uy.inverse();
          auto [h, j] = strip(std::move(schreier), li + 1);
          if (h.is_identity())
            continue;
          if (j == base_.size())
            base_.push_back(h.first_moved());
          strong_.push_back(std::move(h));
          rebuild_levels();
          changed = true;
          break;
        }
      }
    }
  }
}

bool PermGroup::contains(const Permutation& g) const {
  if (g.degree() != degree_)
    return false;
  return strip(g, 0).first.is_identity();
}

bool PermGroup::contains(const PermGroup& h) const {
  for (const auto& g : h.generators())
    if (!contains(g))
      return false;
  return true;
}

const GroupElements& PermGroup::elements() const {
  std::call_once(cache_->once, [this] {
    if (order_ > kElementLimit)
      throw CapabilityError("group order " + std::to_string(order_) + " exceeds element limit " +
                            std::to_string(kElementLimit));
    cache_->elements = std::make_unique<GroupElements>(*this);
  });
  return *cache_->elements;
}

PermGroup group_from_generators(const std::vector<Permutation>& gens) {
  if (gens.empty())
    return PermGroup();
  return PermGroup(gens.front().degree(), gens);
}

}  // namespace msdim

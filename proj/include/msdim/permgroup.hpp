#pragma once

#include <memory>
#include <vector>

#include "msdim/perm.hpp"

namespace msdim {

class GroupElements;

/// One level of a stabilizer chain: the orbit of a base point under the
/// pointwise stabilizer of the earlier base points, with a transversal.
struct BasicOrbit {
  Point base_point = 0;
  std::vector<Point> orbit;
  /// transversal[i] maps base_point to orbit[i].
  std::vector<Permutation> transversal;
  /// Position of each point in `orbit`, or -1.
  std::vector<int> position;
};

/// A finite permutation group given by generators together with a
/// deterministic Schreier-Sims stabilizer chain certifying its order.
///
/// The generator list is kept verbatim (identity generators included) so that
/// matrix representations can be indexed by generator position.
class PermGroup {
 public:
  /// Trivial group on one point.
  PermGroup();
  /// Throws MalformedInput when generator degrees differ from `degree`.
  PermGroup(std::size_t degree, std::vector<Permutation> generators);

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  Order order() const { return order_; }
  bool is_trivial() const { return order_ == 1; }

  std::vector<Point> base() const;
  const std::vector<Permutation>& strong_generators() const { return strong_; }
  const std::vector<BasicOrbit>& basic_orbits() const { return levels_; }

  bool contains(const Permutation& g) const;
  /// Every generator of `h` lies in this group.
  bool contains(const PermGroup& h) const;

  /// Enumerated elements with fast multiplication; built on first use.
  /// Throws CapabilityError above the element limit.
  const GroupElements& elements() const;

  static constexpr Order kElementLimit = 250000;

 private:
  void build_chain();
  void rebuild_levels();
  /// Returns the sifted residue and the level at which sifting stopped.
  std::pair<Permutation, std::size_t> strip(Permutation g, std::size_t from) const;

  std::size_t degree_ = 1;
  std::vector<Permutation> generators_;
  std::vector<Point> base_;
  std::vector<Permutation> strong_;
  std::vector<BasicOrbit> levels_;
  Order order_ = 1;

  struct Cache;
  std::shared_ptr<Cache> cache_;
};

/// Builds the group generated by `gens`; all must share one degree.
PermGroup group_from_generators(const std::vector<Permutation>& gens);

}  // namespace msdim

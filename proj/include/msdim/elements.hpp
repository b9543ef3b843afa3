#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "msdim/perm.hpp"

namespace msdim {

class PermGroup;

using ElemId = std::uint32_t;
/// A subset of a group's elements as sorted element ids.
using ElemSet = std::vector<ElemId>;

/// A conjugacy class of an enumerated group.
struct ElementClass {
  ElemId representative = 0;  ///< lexicographically least member
  Order size = 0;
  Order element_order = 1;
};

/// Full element list of a permutation group, indexed in breadth-first order
/// from the identity (id 0) along right multiplication by generators.
///
/// Multiplication uses a product table for small groups and otherwise walks
/// the generator word of the right operand. Conjugacy classes are computed on
/// construction and ordered by (element order, representative).
class GroupElements {
 public:
  explicit GroupElements(const PermGroup& g);

  std::size_t size() const { return elements_.size(); }
  std::size_t degree() const { return degree_; }
  const Permutation& operator[](ElemId x) const { return elements_[x]; }
  const std::vector<Permutation>& all() const { return elements_; }

  std::optional<ElemId> find(const Permutation& g) const;
  /// Throws DomainError when `g` is not an element.
  ElemId index_of(const Permutation& g) const;

  static constexpr ElemId identity() { return 0; }
  ElemId mul(ElemId a, ElemId b) const;
  ElemId inv(ElemId a) const { return inverse_[a]; }
  /// g^-1 x g
  ElemId conj(ElemId x, ElemId g) const { return mul(mul(inverse_[g], x), g); }
  ElemId pow(ElemId x, Order e) const;
  Order element_order(ElemId x) const { return orders_[x]; }

  std::size_t num_generators() const { return gen_ids_.size(); }
  /// Id of the i-th group generator (identity generators map to id 0).
  ElemId generator(std::size_t i) const { return gen_ids_[i]; }
  /// A word in the generator positions whose product is x.
  std::vector<std::uint32_t> word(ElemId x) const;

  const std::vector<ElementClass>& classes() const { return classes_; }
  std::size_t class_of(ElemId x) const { return class_of_[x]; }

  /// Subgroup generated by `gens`.
  ElemSet closure(std::span<const ElemId> gens) const;
  /// Normal closure under conjugation by the whole group.
  ElemSet normal_closure(std::span<const ElemId> gens) const;
  ElemSet conjugate(const ElemSet& h, ElemId g) const;
  /// Greedy generating set: ascending ids not yet in the running closure.
  std::vector<ElemId> generating_set(const ElemSet& h) const;
  /// Smallest ElemSet of the subgroup generated by the generators of `h`.
  /// Throws DomainError if `h` is not contained in this group.
  ElemSet set_of(const PermGroup& h) const;
  PermGroup subgroup(const ElemSet& h) const;

  bool is_normal(const ElemSet& h) const;
  bool is_abelian(const ElemSet& h) const;
  /// Membership mask of `h` over all element ids.
  std::vector<bool> mask(const ElemSet& h) const;

 private:
  std::size_t degree_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, ElemId, PermutationHash> index_;
  std::vector<ElemId> parent_;
  std::vector<std::uint32_t> parent_gen_;
  std::vector<std::uint32_t> depth_;
  std::vector<ElemId> gen_ids_;
  std::vector<std::vector<ElemId>> right_;  // right_[s][x] = x * gen_s
  std::vector<std::uint16_t> table_;
  std::vector<ElemId> inverse_;
  std::vector<Order> orders_;
  std::vector<ElementClass> classes_;
  std::vector<std::size_t> class_of_;

  static constexpr std::size_t kTableLimit = 6000;
};

bool is_subset(const ElemSet& a, const ElemSet& b);
ElemSet intersect(const ElemSet& a, const ElemSet& b);

}  // namespace msdim

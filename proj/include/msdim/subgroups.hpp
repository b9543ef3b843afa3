#pragma once

#include <cstddef>
#include <vector>

#include "msdim/elements.hpp"

namespace msdim {

/// Number-theoretic helpers shared by all modules.
bool is_prime(std::uint64_t n);
/// Largest power of p dividing n.
Order p_part(Order n, unsigned p);
bool is_p_power(Order n, unsigned p);

struct ElemSetHash {
  std::size_t operator()(const ElemSet& s) const noexcept;
};

// Element-set algorithms inside one enumerated group. `within` is always a
// subgroup of the enumerated group; results are subgroups of `within`.

ElemSet normalizer_in(const GroupElements& e, const ElemSet& within, const ElemSet& h);
ElemSet centralizer_in(const GroupElements& e, const ElemSet& within, const ElemSet& h);
/// Intersection of all `within`-conjugates of h.
ElemSet core_in(const GroupElements& e, const ElemSet& within, const ElemSet& h);
/// All `within`-conjugates of h, in discovery order.
std::vector<ElemSet> conjugates_in(const GroupElements& e, const ElemSet& within, const ElemSet& h);
/// Sylow p-subgroup of `within` by normalizer climbing.
ElemSet sylow_in(const GroupElements& e, const ElemSet& within, unsigned p);
/// Largest normal p-subgroup of `within`.
ElemSet o_p_in(const GroupElements& e, const ElemSet& within, unsigned p);
bool is_elementary_abelian(const GroupElements& e, const ElemSet& h, unsigned p);

/// Every subgroup of `h` (not up to conjugacy), ordered by (size, ids).
/// Throws CapabilityError when |h| exceeds `bound`.
std::vector<ElemSet> all_subgroups(const GroupElements& e, const ElemSet& h, Order bound);

/// One conjugacy class of subgroups found by lattice enumeration.
struct SubgroupClass {
  ElemSet representative;
  std::size_t class_size = 0;
  bool maximal = false;
  ElemSet core;  ///< intersection of the class
};

/// All subgroups of the whole group up to conjugacy, built bottom-up by
/// joining cyclic subgroups of prime-power order. Throws CapabilityError when
/// the group order exceeds `bound`.
std::vector<SubgroupClass> subgroup_lattice(const GroupElements& e, Order bound);

}  // namespace msdim

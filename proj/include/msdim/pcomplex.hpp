#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "msdim/elements.hpp"
#include "msdim/structure.hpp"

namespace msdim {

enum class ComplexKind { poset, elementary_abelian, bouc };

std::string_view kind_name(ComplexKind k);
/// Accepts "poset", "elab", "elementary_abelian" and "bouc".
ComplexKind parse_kind(std::string_view s);

/// A G-orbit of strictly increasing chains of nontrivial p-subgroups.
struct ChainOrbit {
  std::vector<ElemSet> chain;  ///< representative, smallest member first
  std::size_t m = 0;
  ElemSet stabilizer;
  Order stabilizer_order = 0;
  Order orbit_size = 0;
  int sign = 1;  ///< (-1)^m
};

struct VirtualCharacter {
  std::vector<ClassInfo> class_reps;
  std::vector<std::int64_t> values;

  bool is_zero() const;
  std::int64_t at_identity() const { return values.front(); }
};

/// All nontrivial p-subgroups of the requested kind up to conjugacy, found
/// inside `sylow_seed` (default: sylow(g, p)) and fused under g. The
/// representative of each class is its lexicographically least member.
std::vector<ElemSet> p_subgroup_classes(const PermGroup& g, unsigned p, ComplexKind kind,
                                        const std::optional<ElemSet>& sylow_seed = std::nullopt,
                                        Order lattice_bound = kDefaultLatticeBound);

/// Chain orbits, the empty chain first.
std::vector<ChainOrbit> chain_orbits(const PermGroup& g, unsigned p, ComplexKind kind,
                                     const std::optional<ElemSet>& sylow_seed = std::nullopt,
                                     Order lattice_bound = kDefaultLatticeBound);

std::int64_t reduced_euler_characteristic(const std::vector<ChainOrbit>& orbits);
std::int64_t reduced_euler_characteristic(const PermGroup& g, unsigned p, ComplexKind kind);

/// Alternating sum over chain orbits of the permutation characters on the
/// cosets of the chain stabilizers.
VirtualCharacter steinberg_character(const PermGroup& g, unsigned p, const std::vector<ChainOrbit>& orbits);
VirtualCharacter steinberg_character(const PermGroup& g, unsigned p, ComplexKind kind);
bool steinberg_nonzero(const PermGroup& g, unsigned p);

/// CSV with header `kind,m,orders,stabilizer_order,orbit_size,sign`.
std::string chain_census_csv(ComplexKind kind, const std::vector<ChainOrbit>& orbits);

}  // namespace msdim

#pragma once

#include <optional>
#include <vector>

#include "msdim/permgroup.hpp"

namespace msdim {

struct ClassInfo {
  Permutation representative;
  Order size = 0;
  Order element_order = 1;
  bool p_regular = true;  ///< element order coprime to p
};

struct SimpleFactor {
  PermGroup group;
  Order order = 1;
  bool divisible_by_p = false;
};

/// Normal structure of G relevant to the lower bounds: O_p(G), Phi(G), the
/// minimal normal subgroups and the simple direct factors of the nonabelian ones.
struct NormalStructure {
  Order o_p_order = 1;
  /// Empty when the group exceeds the lattice bound.
  std::optional<Order> frattini_order;
  std::vector<PermGroup> minimal_normals;
  std::vector<SimpleFactor> simple_factors;
};

constexpr Order kDefaultLatticeBound = 5000;

/// One entry per class, ordered by element order and then representative.
/// `p` only determines the p_regular flags.
std::vector<ClassInfo> conjugacy_classes(const PermGroup& g, unsigned p);
std::size_t count_p_regular_classes(const PermGroup& g, unsigned p);

PermGroup sylow(const PermGroup& g, unsigned p);
/// Throws DomainError unless H <= G.
PermGroup centralizer(const PermGroup& g, const PermGroup& h);
PermGroup normalizer(const PermGroup& g, const PermGroup& h);

/// O_p(G), the intersection of the conjugates of a Sylow p-subgroup.
PermGroup core_p(const PermGroup& g, unsigned p);
/// O^p(G), the normal closure of the p'-parts of all elements.
PermGroup o_p_residual(const PermGroup& g, unsigned p);
/// Decided by complementing the abelian minimal normal subgroups; no lattice.
bool frattini_trivial(const PermGroup& g);
/// Throws CapabilityError naming the bound when Phi(G) != 1 and |G| exceeds it.
PermGroup frattini(const PermGroup& g, Order lattice_bound = kDefaultLatticeBound);
std::vector<PermGroup> minimal_normal_subgroups(const PermGroup& g);
NormalStructure normal_structure(const PermGroup& g, unsigned p,
                                 Order lattice_bound = kDefaultLatticeBound);

/// Product of the simple direct factors of order divisible by p of the
/// nonabelian minimal normal subgroups. Requires O_p(G) = Phi(G) = 1
/// (PreconditionError otherwise).
PermGroup p_layer(const PermGroup& g, unsigned p);
/// Same as p_layer without re-checking the hypotheses.
PermGroup p_layer_unchecked(const PermGroup& g, unsigned p);

/// Largest order of an abelian p-subgroup of `container` that contains a
/// `container`-conjugate of `must_contain`. Such a subgroup of largest order
/// is automatically a maximal abelian p-subgroup.
Order max_abelian_p_order(const PermGroup& g, unsigned p, const PermGroup& container,
                          const std::optional<PermGroup>& must_contain,
                          Order lattice_bound = kDefaultLatticeBound);

/// Action of G on the right cosets of H, one image per generator of G.
PermGroup coset_action(const PermGroup& g, const PermGroup& h);
/// G/N as the coset action; throws DomainError unless N is normal.
PermGroup quotient(const PermGroup& g, const PermGroup& n);
PermGroup direct_product(const PermGroup& a, const PermGroup& b);

bool is_normal(const PermGroup& g, const PermGroup& h);
bool is_solvable(const PermGroup& g);
bool is_p_solvable(const PermGroup& g, unsigned p);

}  // namespace msdim

#pragma once

#include <vector>

#include "msdim/structure.hpp"

namespace msdim {

enum class PrimeClass { two, mersenne, generic };

/// Odd p with p + 1 a power of two.
bool is_mersenne(unsigned p);
PrimeClass classify_prime(unsigned p);
const char* prime_class_name(PrimeClass c);

/// Pieces of the structure used by both lower bounds: X is the product of
/// the simple components of order divisible by p, C its centralizer.
struct LayerData {
  PermGroup x;
  PermGroup c;
  PermGroup xc;
};

/// Precondition error naming the failing hypothesis unless O_p(G) = 1 and
/// Phi(G) = 1.
LayerData layer_data(const PermGroup& g, unsigned p);

/// |G|_p / |G : XC|_p, the p-part of |XC|.
Order bound_part_i(const PermGroup& g, unsigned p);
Order bound_part_i(const PermGroup& g, unsigned p, const LayerData& layer);

/// Largest |A| over abelian p-subgroups A of XC containing an abelian
/// p-subgroup of maximal order of C, over every such choice. Requires p = 2
/// or p Mersenne.
Order bound_part_ii(const PermGroup& g, unsigned p, Order lattice_bound = kDefaultLatticeBound);
Order bound_part_ii(const PermGroup& g, unsigned p, const LayerData& layer,
                    Order lattice_bound = kDefaultLatticeBound);

/// Distinct orders of the maximal abelian p-subgroups (maximal under
/// inclusion among abelian p-subgroups of g), ascending.
std::vector<Order> maximal_abelian_p_orders(const PermGroup& g, unsigned p,
                                            Order lattice_bound = kDefaultLatticeBound);

bool is_nonabelian_simple(const PermGroup& g);

}  // namespace msdim

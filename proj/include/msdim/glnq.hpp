#pragma once

#include <cstdint>
#include <vector>

#include "msdim/matrix.hpp"

namespace msdim {

/// Order of the group generated by invertible n x n matrices; CapabilityError
/// once more than `limit` elements are seen.
std::uint64_t matrix_group_order(const std::vector<FqMatrix>& gens, std::size_t n,
                                 std::uint64_t limit = 2'000'000);

/// Number of orbits of size |R| of R = <gens> on GF(q)^n, zero vector
/// included. CapabilityError when q^n exceeds `vector_bound`.
std::uint64_t count_regular_orbits(const std::vector<FqMatrix>& gens, std::size_t n,
                                   std::uint64_t vector_bound = 1ull << 24);

/// Generators of a Sylow p-subgroup of GL(n, q), q prime, p != q: a Sylow
/// subgroup of the multiplicative group of GF(q^d) in each d-block, the
/// blocks permuted by a Sylow p-subgroup of the symmetric group. The order is
/// checked against |GL(n, q)|_p.
std::vector<FqMatrix> sylow_glnq(std::size_t n, unsigned q, unsigned p);

/// p-part of |GL(n, q)|.
std::uint64_t glnq_p_part(std::size_t n, unsigned q, unsigned p);

}  // namespace msdim

#pragma once

#include <string>
#include <string_view>

#include "msdim/permgroup.hpp"

namespace msdim {

/// Group text format: a line `degree: n`, then one generator per line in
/// cycle notation. Blank lines and `#` comments are ignored.
PermGroup parse_group_text(std::string_view text);
std::string format_group_text(const PermGroup& g);
PermGroup read_group_file(const std::string& path);

/// Builder specs:
///   sym:n  alt:n  cyclic:n  dihedral:n (order n)  sl2:q (q = 2^k)
///   mersenne_example:p  fermat_example:q  frobenius:p:k
///   direct:A,B  file:path  gens:n:(..)(..);(..)
/// Throws BuildError for unknown or non-faithful constructions.
PermGroup build(std::string_view spec);

PermGroup symmetric_group(std::size_t n);
PermGroup alternating_group(std::size_t n);
PermGroup cyclic_group(std::size_t n);
PermGroup dihedral_group(std::size_t order);
PermGroup sl2_group(unsigned q);
PermGroup mersenne_example(unsigned p);
PermGroup fermat_example(unsigned q);
/// x -> x+1 and x -> a x on Z/p with a of multiplicative order k.
PermGroup frobenius_group(unsigned p, unsigned k);

}  // namespace msdim

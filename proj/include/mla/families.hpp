#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mla/group.hpp"

namespace mla {

// Standard constructions. Index 0 is the identity in every family.
//
//   cyclic(n)              i -> g^i
//   abelian(n1, ..., nk)   (a1, ..., ak) -> a1 + n1*(a2 + n2*(...)), first factor fastest
//   dihedral(n)            r^i s^j -> i + n*j, order 2n
//   quaternion8()          metacyclic(4, 2, 3, 2)
//   heisenberg(p)          (a, b, c) -> a + p*b + p^2*c with
//                          (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab') mod p
//   metacyclic(m, n, r, s) <a, b | a^m = 1, b^n = a^s, b a b^-1 = a^r>,
//                          a^i b^j -> i + m*j
GroupTable cyclic(std::size_t n);
GroupTable abelian(const std::vector<std::size_t>& factors);
GroupTable dihedral(std::size_t n);
GroupTable quaternion8();
GroupTable heisenberg(std::size_t p);
GroupTable metacyclic(std::size_t m, std::size_t n, std::size_t r, std::size_t s);

/// Parses and builds a family descriptor: `name:params` with the parameters
/// separated by ',' or ':' (e.g. `metacyclic:5,4,2,0`), and `*` for direct
/// products (`dihedral:4*cyclic:2`). Throws InvalidParameters.
GroupTable construct_standard_group(std::string_view spec);

}  // namespace mla

#ifndef FORGE_GROUP_BUILD_HPP
#define FORGE_GROUP_BUILD_HPP

#include <functional>
#include <vector>

#include "forge/group.hpp"

namespace forge {

// Structured constructors for common groups. All return canonical,
// deterministically indexed tables with identity at 0.

GroupPtr trivial_group();
GroupPtr cyclic_group(int n);
GroupPtr abelian_group(const std::vector<int>& invariants); // C_{n1} x C_{n2} x ...
GroupPtr dihedral_group(int n);  // order 2n, n >= 1
GroupPtr dicyclic_group(int n);  // order 4n, n >= 1 (n = 2 gives Q8)
GroupPtr symmetric_group(int n);
GroupPtr alternating_group(int n);

GroupPtr direct_product(GroupPtr a, GroupPtr b);

// Semidirect product N x| H for a left action of H on N by automorphisms,
// given elementwise: act(h) is the image array of an automorphism of N.
// The action law act(h1 h2) = act(h1) o act(h2) is verified.
GroupPtr semidirect_product(GroupPtr n, GroupPtr h,
                            const std::function<AutImages(int)>& act);

// Action map for a cyclic H = C_m generated by one automorphism phi of N
// with phi^m = id: element k of C_m acts by phi^k.
std::function<AutImages(int)> cyclic_action(GroupPtr n, int m, AutImages phi);

std::function<AutImages(int)> trivial_action(GroupPtr n, GroupPtr h);

} // namespace forge

#endif

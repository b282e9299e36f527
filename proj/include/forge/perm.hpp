#ifndef FORGE_PERM_HPP
#define FORGE_PERM_HPP

#include <string>
#include <vector>

namespace forge {

// Permutations on {0, ..., n-1} in one-line notation: p[i] is the image of i.
using Perm = std::vector<int>;

Perm perm_identity(int n);
bool perm_valid(const Perm& p);

// (a * b)(i) = a[b[i]]: apply b first, then a.
Perm perm_mul(const Perm& a, const Perm& b);
Perm perm_inverse(const Perm& p);

// Cycle notation, e.g. "(0 1 2)(3 4)"; the identity prints as "e".
std::string perm_cycle_string(const Perm& p);

} // namespace forge

#endif

#ifndef FORGE_ORACLES_HPP
#define FORGE_ORACLES_HPP

#include <optional>
#include <vector>

#include "forge/group.hpp"
#include "forge/outer.hpp"

namespace forge::oracles {

// Independently coded cross-checks. These deliberately avoid the primary
// search code paths; they are the comparison side of dual-route checks, used
// by the test suites and by the CLI --verify flag.

// Supersolvability via the classical recursive characterization: a group is
// supersolvable of class c iff it has a nontrivial cyclic normal (and
// action-stable) subgroup N with quotient supersolvable of class c-1.
// Returns the minimal class, or nullopt.
std::optional<int> supersolvable_class(const OuterAction& a);
std::optional<int> supersolvable_class_trivial_action(GroupPtr g);

// Every subgroup, by breadth-first closure extension; exponential, intended
// for |G| <= 24.
std::vector<std::vector<int>> all_subgroups(const FiniteGroup& g);

// Cocycle and class counts by enumerating every map gamma -> target directly.
struct H1BruteCount {
  int cocycles = 0;
  int classes = 0;
};
H1BruteCount h1_count_brute(const GroupAction& action);
int h1_class_count_brute(const GroupAction& action);

// Local solvability of z^2 = a x^2 + b y^2 by exhaustive search over
// residues (mod p^3 for odd p, mod 2^6 for p = 2) with primitive triples;
// a city-block search over the reals at the infinite place. Places are
// encoded as 0 for the real place, p for a finite prime.
int hilbert_symbol_brute(long long a_num, long long a_den, long long b_num,
                         long long b_den, long long place);

} // namespace forge::oracles

#endif

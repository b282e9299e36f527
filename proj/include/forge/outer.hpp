#ifndef FORGE_OUTER_HPP
#define FORGE_OUTER_HPP

#include <optional>
#include <vector>

#include "forge/group.hpp"

namespace forge {

// A genuine action: a homomorphism gamma -> Aut(target), stored elementwise.
struct GroupAction {
  GroupPtr gamma;
  GroupPtr target;
  std::vector<AutImages> images; // images[g] is an automorphism of target

  const AutImages& operator[](int g) const { return images[g]; }
};

GroupAction make_group_action(GroupPtr gamma, GroupPtr target,
                              std::vector<AutImages> images);
GroupAction trivial_group_action(GroupPtr gamma, GroupPtr target);

// An outer action: representatives of a homomorphism gamma -> Out(target).
// The law rep(g1) o rep(g2) = inn(t) o rep(g1 g2) is verified exhaustively
// at construction.
struct OuterAction {
  GroupPtr gamma;
  GroupPtr target;
  std::vector<AutImages> reps;
};

OuterAction make_outer_action(GroupPtr gamma, GroupPtr target,
                              std::vector<AutImages> reps);
OuterAction outer_from_action(const GroupAction& a);

// True when the automorphism array maps the subgroup onto itself.
bool maps_subgroup_onto(const AutImages& phi, const Subgroup& n);

// Stability of a normal subgroup under every representative. The result is
// independent of the representative choice since inner automorphisms
// preserve normal subgroups.
bool is_stable(const Subgroup& n, const OuterAction& a);

std::vector<Subgroup> stable_normal_subgroups(const OuterAction& a);

// An ascending chain {1} = G_0 <= ... <= G_n = G of stable normal subgroups
// with cyclic successive quotients.
struct Filtration {
  std::vector<Subgroup> chain;
  int class_n = 0;
};

struct FiltrationSearch {
  std::optional<Filtration> filtration; // minimal class when present
  std::vector<Subgroup> frontier; // maximal admissible chain endpoints on failure
};

// Breadth-first search over chains of stable normal subgroups; returns a
// minimal-length witness, or the frontier of maximal admissible chains.
FiltrationSearch supersolvable_filtration(const OuterAction& a);

// Validates a user-supplied chain (normality, stability, cyclic quotients)
// without requiring minimality.
Filtration verify_filtration(const OuterAction& a,
                             const std::vector<std::vector<int>>& chain);

struct InducedQuotient {
  OuterAction action;  // on target/n
  QuotientGroup onto;  // target -> target/n
};

InducedQuotient induced_quotient_action(const OuterAction& a, const Subgroup& n);

// Searches for a genuine homomorphism gamma -> Aut(target) agreeing with the
// representatives modulo inner automorphisms; nullopt when no lift exists.
std::optional<GroupAction> lift_outer_action(const OuterAction& a,
                                             const RunConfig& cfg = default_config());

// Hypothesis check for descent through a stable normal subgroup: stability
// of n plus supersolvability of the induced action on target/n.
struct DescentReport {
  bool stable = false;
  bool quotient_supersolvable = false;
  std::optional<Filtration> filtration; // witness on the quotient
};

DescentReport check_descent_hypotheses(const OuterAction& a, const Subgroup& n);

// Combines the descent hypotheses with completeness classification of the
// kernel subgroup.
struct KernelClassification {
  bool stable = false;
  bool quotient_supersolvable = false;
  bool kernel_almost_complete = false; // case with a split Aut -> Out
  bool kernel_complete = false;        // trivial centre and trivial Out
};

KernelClassification classify_kernel_cases(const OuterAction& a, const Subgroup& n,
                                           const RunConfig& cfg = default_config());

} // namespace forge

#endif

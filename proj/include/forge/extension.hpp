#ifndef FORGE_EXTENSION_HPP
#define FORGE_EXTENSION_HPP

#include <optional>
#include <vector>

#include "forge/group.hpp"
#include "forge/outer.hpp"

namespace forge {

// A short exact sequence 1 -> N -> E -> Gamma -> 1 with explicit embedding
// and projection. Validated: embedding injective, projection surjective,
// image of the embedding equal to the kernel of the projection, and
// |E| = |N| * |Gamma|.
struct GroupExtension {
  GroupPtr total;  // E
  GroupPtr kernel; // N
  GroupPtr gamma;  // Gamma
  GroupHom kernel_embed; // N -> E
  GroupHom proj;         // E -> Gamma
  std::vector<int> kernel_index_of; // E-element -> N-index, -1 outside the kernel
};

GroupExtension make_extension(GroupHom kernel_embed, GroupHom proj);

// Extension determined by a normal subgroup: kernel = the subgroup as a
// group, gamma = the quotient.
GroupExtension extension_from_normal(GroupPtr total, const Subgroup& n);

// Conjugation by any preimage of each gamma element, restricted to the
// kernel; representatives chosen as minimal preimages, law re-verified.
OuterAction extension_outer_action(const GroupExtension& e);

struct Splitting {
  GroupHom section; // gamma -> total, proj o section = id
};

// All homomorphic sections, in lexicographic image order.
std::vector<Splitting> enumerate_splittings(const GroupExtension& e,
                                            const RunConfig& cfg = default_config());

std::optional<Splitting> find_splitting(const GroupExtension& e,
                                        const RunConfig& cfg = default_config());

// Partition of all splittings under conjugation by kernel elements,
// classes ordered by their lexicographically least member.
std::vector<std::vector<Splitting>> splitting_classes(const GroupExtension& e,
                                                      const RunConfig& cfg = default_config());

// A 1-cocycle for a genuine action: values(g1 g2) = values(g1) * g1(values(g2)),
// verified exhaustively at construction.
struct Cocycle {
  GroupAction action;
  std::vector<int> values; // gamma-element -> target-element
};

Cocycle make_cocycle(GroupAction action, std::vector<int> values);

// The action of gamma on the kernel through conjugation by a splitting.
GroupAction action_from_splitting(const GroupExtension& e, const Splitting& s);

// values(g) = s2(g) * s(g)^-1, landing in the kernel; a cocycle for the
// action lifted through s.
Cocycle difference_cocycle(const GroupExtension& e, const Splitting& s,
                           const Splitting& s2);

// g -> inn(values(g)) o action(g); verified to be a homomorphism.
GroupAction twist_action(const GroupAction& action, const Cocycle& c);

// g -> values(g)^-1 as a cocycle for the twisted action.
Cocycle inverse_cocycle_for_twist(const Cocycle& c);

bool cocycles_equal(const Cocycle& a, const Cocycle& b);
bool are_cohomologous(const Cocycle& a, const Cocycle& b);
bool is_trivial_cocycle(const Cocycle& c);

// All cocycles (Z^1) in lexicographic value order.
std::vector<Cocycle> enumerate_cocycles(const GroupAction& action,
                                        const RunConfig& cfg = default_config());

// H^1: cocycles partitioned by equivalence sigma' ~ g^-1 sigma g-twist;
// the class of the trivial cocycle comes first, classes then ordered by
// their lexicographically least member.
std::vector<std::vector<Cocycle>> h1_classes(const GroupAction& action,
                                             const RunConfig& cfg = default_config());

// Trivial centre and trivial outer automorphism group.
bool is_complete(GroupPtr n, const RunConfig& cfg = default_config());

// Witness for a splitting of Aut(N) -> Out(N).
struct OutSection {
  AutomorphismGroup aut;
  GroupHom section; // out -> aut
};

struct AlmostCompleteResult {
  bool almost_complete = false;
  std::optional<OutSection> witness;
};

// Trivial centre and a homomorphic section of Aut(N) -> Out(N); found by
// backtracking over coset representatives, witness returned.
AlmostCompleteResult is_almost_complete(GroupPtr n,
                                        const RunConfig& cfg = default_config());

struct ComplementSplit {
  Splitting splitting;
  bool centralizing = false; // the complement commutes with the kernel
};

// For an extension with centreless kernel and an Aut -> Out section witness:
// the complement {e : conjugation by e on N equals section(outer class)}.
// Verified to map isomorphically onto gamma.
ComplementSplit split_with_rigid_kernel(const GroupExtension& e,
                                        const OutSection& witness);

// Sufficient criterion: every composition factor is almost complete.
bool almost_complete_via_factors(GroupPtr g,
                                 const RunConfig& cfg = default_config());

} // namespace forge

#endif

#ifndef FORGE_GROUP_HPP
#define FORGE_GROUP_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "forge/config.hpp"
#include "forge/perm.hpp"

namespace forge {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

// A finite group as a dense multiplication table over element indices
// 0..order-1, identity at index 0. Immutable after construction; all
// operations below are pure functions, safe for concurrent use.
class FiniteGroup {
public:
  // Builds from an explicit table. Validates identity at 0, two-sided
  // inverses and associativity by exhaustive scan.
  static GroupPtr from_table(const std::vector<std::vector<int>>& table,
                             const RunConfig& cfg = default_config());

  // Closure of permutation generators, breadth-first from the identity over
  // the sorted generator list. Element 0 is the identity; element labels are
  // retained in cycle notation. Deterministic across runs.
  static GroupPtr from_perms(int points, std::vector<Perm> generators,
                             const RunConfig& cfg = default_config());

  int order() const { return order_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  int inv(int a) const { return inverse_[a]; }
  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); } // g x g^-1
  int element_order(int a) const;
  int power(int a, long long k) const;

  bool has_labels() const { return !labels_.empty(); }
  const std::string& label(int i) const { return labels_[i]; }
  std::string display(int i) const;

  const std::vector<int>& table_flat() const { return table_; }

  // Trusted-construction path: the caller guarantees the table is a group
  // table with identity at 0 (quotients, products, automorphism groups).
  // Identity and inverses are still checked; associativity is inherited.
  static GroupPtr from_trusted_table(std::vector<int> flat, int order,
                                     std::vector<std::string> labels = {});

  // Full O(n^3) axiom scan; used by from_table and by tests.
  static void check_axioms(const std::vector<int>& flat, int order,
                           bool check_associativity);

private:
  FiniteGroup(std::vector<int> flat, int order, std::vector<std::string> labels);

  int order_;
  std::vector<int> table_;   // row-major, table_[a*order_+b] = a*b
  std::vector<int> inverse_;
  std::vector<std::string> labels_;
};

struct Subgroup {
  GroupPtr parent;
  std::vector<int> elements; // sorted, contains 0

  int order() const { return static_cast<int>(elements.size()); }
  bool contains(int g) const;
};

// Validating constructor: checks closure and identity membership.
Subgroup make_subgroup(GroupPtr parent, std::vector<int> elements);

struct GroupHom {
  GroupPtr source;
  GroupPtr target;
  std::vector<int> images; // images[x] in target, indexed by source element

  int operator()(int x) const { return images[x]; }
};

// Validating constructor: exhaustive hom-law check.
GroupHom make_hom(GroupPtr source, GroupPtr target, std::vector<int> images);

bool is_bijective(const GroupHom& h);
GroupHom compose(const GroupHom& f, const GroupHom& g); // x -> f(g(x))

// An automorphism is stored as its image array on the one group.
using AutImages = std::vector<int>;

// ---- group-core operations ------------------------------------------------

// Conjugacy classes, sorted by (size, minimal element); identity class first.
std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g);

Subgroup center(GroupPtr g);

// All normal subgroups, via closure-checked unions of conjugacy classes.
// Sorted by (order, element set).
std::vector<Subgroup> normal_subgroups(GroupPtr g);

bool is_normal(const Subgroup& h);

struct QuotientGroup {
  GroupPtr group;
  GroupHom projection; // parent -> group, kernel = the subgroup quotiented by
};

QuotientGroup quotient(GroupPtr g, const Subgroup& n);

bool is_cyclic(const FiniteGroup& g);
bool is_abelian(const FiniteGroup& g);

// The subgroup as a standalone group plus the embedding back into the parent.
struct ExtractedSubgroup {
  GroupPtr group;
  GroupHom embedding; // group -> parent
};

ExtractedSubgroup subgroup_as_group(const Subgroup& h);

// Greedy small generating set (indices), deterministic.
std::vector<int> generating_set(const FiniteGroup& g);

// All automorphisms as image arrays, sorted lexicographically (the identity
// automorphism lands at index 0). Backtracking over generator images, pruned
// by element order and conjugacy class size; throws Errc::budget_exceeded
// when the node limit is hit.
std::vector<AutImages> enumerate_automorphisms(const FiniteGroup& g,
                                               const RunConfig& cfg = default_config());

struct AutomorphismGroup {
  GroupPtr aut;                  // Aut(G) as an abstract group
  std::vector<AutImages> maps;   // maps[i] realizes element i of aut
  Subgroup inner;                // Inn(G) inside aut
  GroupPtr out;                  // Out(G) = aut/inner
  GroupHom out_projection;       // aut -> out
  std::vector<int> out_reps;     // minimal coset representative per out element
};

AutomorphismGroup automorphism_group(GroupPtr g,
                                     const RunConfig& cfg = default_config());

// Composition factors (each verified simple), via repeated maximal normal
// subgroups. Factor orders are well defined by Jordan-Hoelder.
std::vector<GroupPtr> composition_factors(GroupPtr g);

bool is_simple(GroupPtr g);

// Largest normal subgroup of g contained in h (intersection of conjugates).
Subgroup subgroup_core(GroupPtr g, const Subgroup& h);

// Isomorphism search by generator-image backtracking; nullopt if none.
std::optional<GroupHom> find_isomorphism(GroupPtr g, GroupPtr h,
                                         const RunConfig& cfg = default_config());

// identical order and multiplication table (same element indexing)
bool same_group_structure(const FiniteGroup& a, const FiniteGroup& b);

} // namespace forge

#endif

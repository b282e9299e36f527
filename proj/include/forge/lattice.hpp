#ifndef FORGE_LATTICE_HPP
#define FORGE_LATTICE_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "forge/group.hpp"
#include "forge/intmat.hpp"

namespace forge {

class GaloisLattice;
using LatticePtr = std::shared_ptr<const GaloisLattice>;

// A finitely generated abelian group presented as Z^ambient / im(relations),
// together with an action of a finite group by integer matrices descending
// to the quotient. Immutable; all checks run at construction:
//   - every action matrix maps the relation lattice into itself,
//   - the matrices satisfy the group law modulo relations,
//   - a permutation-basis witness, when present, matches the action.
class GaloisLattice {
public:
  static LatticePtr create(int ambient_rank, IntMat relations, GroupPtr group,
                           std::vector<IntMat> action,
                           std::optional<std::vector<std::vector<int>>>
                               permutation_basis = std::nullopt);

  // Completes generator matrices to the whole group along breadth-first
  // words, then validates as in create().
  static LatticePtr from_generator_action(int ambient_rank, IntMat relations,
                                          GroupPtr group,
                                          const std::map<int, IntMat>& gen_action);

  int ambient_rank() const { return ambient_; }
  const IntMat& relations() const { return relations_; }
  const GroupPtr& group() const { return group_; }
  const IntMat& action(int g) const { return action_[g]; }
  const std::vector<IntMat>& actions() const { return action_; }
  bool has_permutation_basis() const { return perm_basis_.has_value(); }
  const std::vector<std::vector<int>>& permutation_basis() const { return *perm_basis_; }

  const SnfSolver& relation_solver() const { return *rel_solver_; }

  // rank of the free part
  int free_rank() const;
  bool torsion_free() const;
  bool is_trivial() const; // the zero module

private:
  GaloisLattice(int ambient, IntMat relations, GroupPtr group,
                std::vector<IntMat> action,
                std::optional<std::vector<std::vector<int>>> perm_basis);

  int ambient_;
  IntMat relations_;
  GroupPtr group_;
  std::vector<IntMat> action_;
  std::optional<std::vector<std::vector<int>>> perm_basis_;
  std::unique_ptr<SnfSolver> rel_solver_;
};

// Z with the trivial action of the given group.
LatticePtr free_rank_one(GroupPtr group);
// Z/n with the trivial action.
LatticePtr cyclic_module(GroupPtr group, long n);
// Z[G] with G acting by left translation on the basis.
LatticePtr group_algebra_lattice(GroupPtr g);
// Character lattice of the norm-one torus: Z[G] / <sum of basis vectors>.
LatticePtr norm_one_lattice(GroupPtr g);
// rank-1 lattice where the C2 generator acts by -1 (gamma must be C2)
LatticePtr sign_lattice(GroupPtr c2);

// A map of lattices given on ambient generators; validated to map relations
// into relations and to commute with the action modulo relations.
struct ModuleMap {
  LatticePtr source;
  LatticePtr target;
  IntMat matrix; // target.ambient x source.ambient
};

ModuleMap make_module_map(LatticePtr source, LatticePtr target, IntMat matrix);

bool is_injective(const ModuleMap& f);
bool is_surjective(const ModuleMap& f);
bool is_module_iso(const ModuleMap& f);
// equality of the induced maps on quotients
bool maps_equal(const ModuleMap& f, const ModuleMap& g);
ModuleMap compose(const ModuleMap& g, const ModuleMap& f); // x -> g(f(x))

// identity-carried exact sequence: maps[0], maps[1], ... composable
struct ExactSequence {
  std::vector<ModuleMap> maps;
};

struct ExactnessReport {
  bool exact = false;
  int failure_index = -1;  // joint or end that failed, -1 when exact
  std::string detail;
};

// short = also require injectivity at the left end and surjectivity at the
// right end
ExactnessReport verify_exact(const ExactSequence& seq, bool short_exact = true);

// ---- constructive resolution steps ----------------------------------------

struct PermutationCover {
  LatticePtr l;       // free module on group x generators, basis permuted
  ModuleMap cover;    // l -> m, surjective
  LatticePtr kernel;  // free presentation of ker(cover)
  ModuleMap inclusion; // kernel -> l
};

PermutationCover permutation_cover(LatticePtr m);

struct Dualized {
  LatticePtr dual;     // Hom(m, Z) with the contragredient action
  IntMat to_basis;     // rank x ambient: coordinates of the free quotient
  IntMat from_basis;   // ambient x rank: basis lift
};

// m must be torsion-free.
Dualized dualize(LatticePtr m);

// dual of f: a -> b as a map b* -> a*
ModuleMap dualize_map(const ModuleMap& f, const Dualized& da, const Dualized& db);

// natural map m -> m** (an isomorphism for torsion-free m)
ModuleMap double_dual_map(LatticePtr m, const Dualized& d1, const Dualized& d2);

struct PushoutResult {
  LatticePtr s;        // (l (+) p) / <(l(k), -p(k))>
  ModuleMap from_l;
  ModuleMap from_p;
  bool legs_injective = true;
};

PushoutResult pushout(const ModuleMap& into_l, const ModuleMap& into_p);

LatticePtr cokernel(const ModuleMap& f);
ModuleMap cokernel_projection(const ModuleMap& f, LatticePtr coker);

// The full resolution pipeline: a permutation cover of m, a second cover of
// Hom(kernel, Z) dualized into 0 -> K -> P -> C -> 0, and the amalgamated
// sum S = L (+)_K P, yielding verified exact sequences
//   seq1: 0 -> L -> S -> C -> 0 and seq2: 0 -> P -> S -> M -> 0
// with L, P permutation modules and K, C, S torsion-free.
struct TorusResolution {
  LatticePtr m, l, k, p, c, s;
  ModuleMap cover;    // l -> m
  ModuleMap incl_kl;  // k -> l
  ModuleMap incl_kp;  // k -> p
  ExactSequence seq1; // l -> s -> c
  ExactSequence seq2; // p -> s -> m
};

TorusResolution torus_resolution(LatticePtr m);

// Compares the resolution of Z/n (trivial action) against the reference
// sequence 0 -> Z -(x n)-> Z -> Z/n -> 0, exhibiting explicit isomorphisms.
struct KummerReport {
  long n = 0;
  bool ok = false;
  std::string detail;
  IntMat iso_p; // res.p -> Z
  IntMat iso_s; // res.s -> Z
  IntMat iso_m; // res.m -> Z/n
};

KummerReport kummer_compare(long n);

} // namespace forge

#endif

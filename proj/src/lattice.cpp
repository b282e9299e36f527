#include "forge/lattice.hpp"

#include <algorithm>

#include "forge/error.hpp"

namespace forge {

namespace {

// columns of a - b all lie in the relation lattice
bool congruent_columns(const IntMat& a, const IntMat& b, const SnfSolver& rel) {
  return rel.contains_columns(mat_sub(a, b));
}

IntMat permutation_matrix(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  IntMat m(n, n);
  for (int j = 0; j < n; ++j) m.at(perm[j], j) = 1;
  return m;
}

} // namespace

GaloisLattice::GaloisLattice(int ambient, IntMat relations, GroupPtr group,
                             std::vector<IntMat> action,
                             std::optional<std::vector<std::vector<int>>> perm_basis)
    : ambient_(ambient), relations_(std::move(relations)), group_(std::move(group)),
      action_(std::move(action)), perm_basis_(std::move(perm_basis)),
      rel_solver_(std::make_unique<SnfSolver>(relations_)) {}

LatticePtr GaloisLattice::create(int ambient_rank, IntMat relations, GroupPtr group,
                                 std::vector<IntMat> action,
                                 std::optional<std::vector<std::vector<int>>>
                                     permutation_basis) {
  if (ambient_rank < 0) fail(Errc::invalid_input, "negative ambient rank");
  if (relations.rows != ambient_rank) {
    if (relations.rows == 0 && relations.cols == 0)
      relations = IntMat(ambient_rank, 0);
    else
      fail(Errc::invalid_input, "relation matrix has wrong height");
  }
  if (static_cast<int>(action.size()) != group->order())
    fail(Errc::invalid_input, "action must cover every group element");
  for (const auto& mat : action)
    if (mat.rows != ambient_rank || mat.cols != ambient_rank)
      fail(Errc::invalid_input, "action matrix has wrong shape");

  LatticePtr lat(new GaloisLattice(ambient_rank, std::move(relations), group,
                                   std::move(action), std::move(permutation_basis)));
  const auto& rel = lat->relation_solver();
  // relations are preserved
  for (const auto& mat : lat->actions())
    if (!rel.contains_columns(mat_mul(mat, lat->relations())))
      fail(Errc::invalid_input, "action does not preserve the relation lattice");
  // identity acts as the identity and the group law holds, modulo relations
  if (!congruent_columns(lat->action(0), IntMat::identity(ambient_rank), rel))
    fail(Errc::invalid_input, "identity does not act trivially");
  for (int a = 0; a < group->order(); ++a)
    for (int b = 0; b < group->order(); ++b)
      if (!congruent_columns(mat_mul(lat->action(a), lat->action(b)),
                             lat->action(group->mul(a, b)), rel))
        fail(Errc::invalid_input, "action does not satisfy the group law");
  if (lat->has_permutation_basis()) {
    if (lat->relations().cols != 0)
      fail(Errc::invalid_input, "permutation witness requires a free module");
    const auto& perms = lat->permutation_basis();
    if (static_cast<int>(perms.size()) != group->order())
      fail(Errc::invalid_input, "permutation witness must cover the group");
    for (int g = 0; g < group->order(); ++g)
      if (lat->action(g) != permutation_matrix(perms[g]))
        fail(Errc::invalid_input, "permutation witness does not match the action");
  }
  return lat;
}

LatticePtr GaloisLattice::from_generator_action(int ambient_rank, IntMat relations,
                                                GroupPtr group,
                                                const std::map<int, IntMat>& gen_action) {
  std::vector<IntMat> action(group->order());
  std::vector<bool> known(group->order(), false);
  action[0] = IntMat::identity(ambient_rank);
  known[0] = true;
  for (const auto& [g, mat] : gen_action) {
    if (g <= 0 || g >= group->order())
      fail(Errc::invalid_input, "action generator index out of range");
    action[g] = mat;
    known[g] = true;
  }
  // breadth-first completion: action(x * s) = action(x) * action(s)
  bool grew = true;
  while (grew) {
    grew = false;
    for (int x = 0; x < group->order(); ++x) {
      if (!known[x]) continue;
      for (const auto& [s, mat] : gen_action) {
        const int xs = group->mul(x, s);
        if (known[xs]) continue;
        action[xs] = mat_mul(action[x], mat);
        known[xs] = true;
        grew = true;
      }
    }
  }
  for (bool k : known)
    if (!k) fail(Errc::invalid_input, "action generators do not generate the group");
  return create(ambient_rank, std::move(relations), std::move(group), std::move(action));
}

int GaloisLattice::free_rank() const {
  return ambient_ - rel_solver_->snf().rank;
}

bool GaloisLattice::torsion_free() const {
  for (const auto& d : rel_solver_->snf().invariants)
    if (d != 1) return false;
  return true;
}

bool GaloisLattice::is_trivial() const {
  return free_rank() == 0 && torsion_free();
}

LatticePtr free_rank_one(GroupPtr group) {
  std::vector<IntMat> action(group->order(), IntMat::identity(1));
  std::vector<std::vector<int>> perms(group->order(), std::vector<int>{0});
  return GaloisLattice::create(1, IntMat(1, 0), std::move(group), std::move(action),
                               std::move(perms));
}

LatticePtr cyclic_module(GroupPtr group, long n) {
  if (n < 1) fail(Errc::invalid_input, "cyclic module needs n >= 1");
  IntMat rel(1, 1);
  rel.at(0, 0) = n;
  std::vector<IntMat> action(group->order(), IntMat::identity(1));
  return GaloisLattice::create(1, std::move(rel), std::move(group), std::move(action));
}

LatticePtr group_algebra_lattice(GroupPtr g) {
  const int n = g->order();
  std::vector<IntMat> action;
  std::vector<std::vector<int>> perms;
  for (int x = 0; x < n; ++x) {
    std::vector<int> perm(n);
    for (int h = 0; h < n; ++h) perm[h] = g->mul(x, h);
    action.push_back(permutation_matrix(perm));
    perms.push_back(std::move(perm));
  }
  return GaloisLattice::create(n, IntMat(n, 0), std::move(g), std::move(action),
                               std::move(perms));
}

LatticePtr norm_one_lattice(GroupPtr g) {
  const int n = g->order();
  IntMat rel(n, 1);
  for (int i = 0; i < n; ++i) rel.at(i, 0) = 1;
  std::vector<IntMat> action;
  for (int x = 0; x < n; ++x) {
    std::vector<int> perm(n);
    for (int h = 0; h < n; ++h) perm[h] = g->mul(x, h);
    action.push_back(permutation_matrix(perm));
  }
  return GaloisLattice::create(n, std::move(rel), std::move(g), std::move(action));
}

LatticePtr sign_lattice(GroupPtr c2) {
  if (c2->order() != 2) fail(Errc::invalid_input, "sign lattice needs a C2");
  IntMat minus(1, 1);
  minus.at(0, 0) = -1;
  return GaloisLattice::create(1, IntMat(1, 0), std::move(c2),
                               {IntMat::identity(1), std::move(minus)});
}

// ---- module maps -----------------------------------------------------------

ModuleMap make_module_map(LatticePtr source, LatticePtr target, IntMat matrix) {
  if (matrix.rows != target->ambient_rank() || matrix.cols != source->ambient_rank())
    fail(Errc::invalid_input, "module map matrix shape mismatch");
  if (source->group().get() != target->group().get() &&
      !same_group_structure(*source->group(), *target->group()))
    fail(Errc::mismatch, "module map between lattices of different groups");
  const auto& rel = target->relation_solver();
  if (!rel.contains_columns(mat_mul(matrix, source->relations())))
    fail(Errc::invalid_input, "map does not send relations into relations");
  for (int g = 0; g < source->group()->order(); ++g)
    if (!congruent_columns(mat_mul(matrix, source->action(g)),
                           mat_mul(target->action(g), matrix), rel))
      fail(Errc::invalid_input, "map is not equivariant");
  return ModuleMap{std::move(source), std::move(target), std::move(matrix)};
}

namespace {

// basis of {x : f(x) lies in the relation lattice of the target}
IntMat kernel_lattice_basis(const ModuleMap& f) {
  const IntMat& rel = f.target->relations();
  IntMat block = hstack(f.matrix, mat_neg(rel));
  IntMat ker = kernel_basis(block);
  IntMat xpart = submatrix(ker, 0, 0, f.source->ambient_rank(), ker.cols);
  // include the source relations; they always map into the target relations
  return column_lattice_basis(hstack(xpart, f.source->relations()));
}

} // namespace

bool is_injective(const ModuleMap& f) {
  IntMat pre = kernel_lattice_basis(f);
  return f.source->relation_solver().contains_columns(pre);
}

bool is_surjective(const ModuleMap& f) {
  return spans_ambient(hstack(f.matrix, f.target->relations()));
}

bool is_module_iso(const ModuleMap& f) {
  return is_injective(f) && is_surjective(f);
}

bool maps_equal(const ModuleMap& f, const ModuleMap& g) {
  if (f.source.get() != g.source.get() || f.target.get() != g.target.get())
    return false;
  return f.target->relation_solver().contains_columns(mat_sub(f.matrix, g.matrix));
}

ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {
  if (f.target.get() != g.source.get())
    fail(Errc::mismatch, "compose: inner lattice mismatch");
  return make_module_map(f.source, g.target, mat_mul(g.matrix, f.matrix));
}

ExactnessReport verify_exact(const ExactSequence& seq, bool short_exact) {
  ExactnessReport report;
  if (seq.maps.empty()) {
    report.detail = "empty sequence";
    return report;
  }
  for (std::size_t i = 1; i < seq.maps.size(); ++i)
    if (seq.maps[i].source.get() != seq.maps[i - 1].target.get()) {
      report.failure_index = static_cast<int>(i);
      report.detail = "maps are not composable";
      return report;
    }
  if (short_exact && !is_injective(seq.maps.front())) {
    report.failure_index = 0;
    report.detail = "left map is not injective";
    return report;
  }
  if (short_exact && !is_surjective(seq.maps.back())) {
    report.failure_index = static_cast<int>(seq.maps.size());
    report.detail = "right map is not surjective";
    return report;
  }
  for (std::size_t i = 1; i < seq.maps.size(); ++i) {
    const ModuleMap& f = seq.maps[i - 1];
    const ModuleMap& g = seq.maps[i];
    IntMat image = hstack(f.matrix, g.source->relations());
    IntMat kernel = kernel_lattice_basis(g);
    if (!lattice_equal(image, kernel)) {
      report.failure_index = static_cast<int>(i);
      report.detail = "image differs from kernel at an interior joint";
      return report;
    }
  }
  report.exact = true;
  return report;
}

// ---- permutation cover -------------------------------------------------------

PermutationCover permutation_cover(LatticePtr m) {
  const GroupPtr& gamma = m->group();
  const int gn = gamma->order();
  const int amb = m->ambient_rank();
  const int lrank = gn * amb;

  // basis (g, i) at index g*amb + i; h sends (g, i) to (h g, i)
  std::vector<std::vector<int>> perms;
  std::vector<IntMat> action;
  for (int h = 0; h < gn; ++h) {
    std::vector<int> perm(lrank);
    for (int g = 0; g < gn; ++g)
      for (int i = 0; i < amb; ++i) perm[g * amb + i] = gamma->mul(h, g) * amb + i;
    action.push_back(permutation_matrix(perm));
    perms.push_back(std::move(perm));
  }
  LatticePtr l = GaloisLattice::create(lrank, IntMat(lrank, 0), gamma,
                                       std::move(action), std::move(perms));

  // cover sends (g, i) to action_m(g) e_i
  IntMat cover_mat(amb, lrank);
  for (int g = 0; g < gn; ++g)
    for (int i = 0; i < amb; ++i)
      for (int r = 0; r < amb; ++r)
        cover_mat.at(r, g * amb + i) = m->action(g).at(r, i);
  ModuleMap cover = make_module_map(l, m, std::move(cover_mat));
  if (!is_surjective(cover)) fail(Errc::mismatch, "cover is not surjective");

  // kernel: x with cover(x) in the relation lattice of m, as a free module
  IntMat basis = kernel_lattice_basis(cover);
  const int krank = basis.cols;
  SnfSolver basis_solver(basis);
  std::vector<IntMat> k_action;
  for (int h = 0; h < gn; ++h) {
    IntMat moved = mat_mul(l->action(h), basis);
    IntMat coords(krank, krank);
    for (int j = 0; j < krank; ++j) {
      auto sol = basis_solver.solve(column(moved, j));
      if (!sol) fail(Errc::mismatch, "kernel is not stable under the action");
      for (int i = 0; i < krank; ++i) coords.at(i, j) = (*sol)[i];
    }
    k_action.push_back(std::move(coords));
  }
  LatticePtr k = GaloisLattice::create(krank, IntMat(krank, 0), gamma,
                                       std::move(k_action));
  ModuleMap incl = make_module_map(k, l, std::move(basis));
  return PermutationCover{std::move(l), std::move(cover), std::move(k), std::move(incl)};
}

// ---- dualization ---------------------------------------------------------------

Dualized dualize(LatticePtr m) {
  if (!m->torsion_free()) fail(Errc::torsion_present, "dual of a module with torsion");
  const auto& snf = m->relation_solver().snf();
  const int amb = m->ambient_rank();
  const int s = snf.rank;
  const int rank = amb - s;

  IntMat to_basis = submatrix(snf.u, s, 0, amb, amb);        // rank x amb
  IntMat from_basis = submatrix(snf.u_inv, 0, s, amb, amb);  // amb x rank

  std::vector<IntMat> dual_action;
  for (int g = 0; g < m->group()->order(); ++g) {
    // contragredient: transpose of the reduced inverse action
    IntMat reduced_inv =
        mat_mul(to_basis, mat_mul(m->action(m->group()->inv(g)), from_basis));
    dual_action.push_back(mat_transpose(reduced_inv));
  }
  std::optional<std::vector<std::vector<int>>> perms;
  if (m->has_permutation_basis()) {
    // free module in its standard basis: the dual action carries the
    // inverse-transpose of a permutation matrix, i.e. the same permutation
    perms = m->permutation_basis();
  }
  LatticePtr dual = GaloisLattice::create(rank, IntMat(rank, 0), m->group(),
                                          std::move(dual_action), std::move(perms));
  return Dualized{std::move(dual), std::move(to_basis), std::move(from_basis)};
}

ModuleMap dualize_map(const ModuleMap& f, const Dualized& da, const Dualized& db) {
  IntMat reduced = mat_mul(db.to_basis, mat_mul(f.matrix, da.from_basis));
  return make_module_map(db.dual, da.dual, mat_transpose(reduced));
}

ModuleMap double_dual_map(LatticePtr m, const Dualized& d1, const Dualized& d2) {
  // coordinates in the free quotient realize the evaluation map exactly
  IntMat matrix = mat_mul(d2.to_basis, d1.to_basis);
  return make_module_map(std::move(m), d2.dual, std::move(matrix));
}

// ---- pushout -------------------------------------------------------------------

PushoutResult pushout(const ModuleMap& into_l, const ModuleMap& into_p) {
  if (into_l.source.get() != into_p.source.get())
    fail(Errc::mismatch, "pushout legs must share their source");
  const LatticePtr& k = into_l.source;
  const LatticePtr& l = into_l.target;
  const LatticePtr& p = into_p.target;
  const int la = l->ambient_rank(), pa = p->ambient_rank();

  PushoutResult out;
  out.legs_injective = is_injective(into_l) && is_injective(into_p);

  // relations: those of l and p, plus the antidiagonal image of k
  IntMat anti(la + pa, k->ambient_rank());
  for (int j = 0; j < k->ambient_rank(); ++j) {
    for (int i = 0; i < la; ++i) anti.at(i, j) = into_l.matrix.at(i, j);
    for (int i = 0; i < pa; ++i) anti.at(la + i, j) = -into_p.matrix.at(i, j);
  }
  IntMat rel = hstack(
      hstack(vstack(l->relations(), IntMat(pa, l->relations().cols)),
             vstack(IntMat(la, p->relations().cols), p->relations())),
      anti);

  std::vector<IntMat> action;
  for (int g = 0; g < l->group()->order(); ++g) {
    IntMat block(la + pa, la + pa);
    for (int i = 0; i < la; ++i)
      for (int j = 0; j < la; ++j) block.at(i, j) = l->action(g).at(i, j);
    for (int i = 0; i < pa; ++i)
      for (int j = 0; j < pa; ++j) block.at(la + i, la + j) = p->action(g).at(i, j);
    action.push_back(std::move(block));
  }
  out.s = GaloisLattice::create(la + pa, std::move(rel), l->group(), std::move(action));

  IntMat liftl(la + pa, la);
  for (int i = 0; i < la; ++i) liftl.at(i, i) = 1;
  IntMat liftp(la + pa, pa);
  for (int i = 0; i < pa; ++i) liftp.at(la + i, i) = 1;
  out.from_l = make_module_map(l, out.s, std::move(liftl));
  out.from_p = make_module_map(p, out.s, std::move(liftp));
  return out;
}

LatticePtr cokernel(const ModuleMap& f) {
  IntMat rel = hstack(f.target->relations(), f.matrix);
  return GaloisLattice::create(f.target->ambient_rank(), std::move(rel),
                               f.target->group(), f.target->actions());
}

ModuleMap cokernel_projection(const ModuleMap& f, LatticePtr coker) {
  return make_module_map(f.target, std::move(coker),
                         IntMat::identity(f.target->ambient_rank()));
}

// ---- the resolution pipeline ----------------------------------------------------

TorusResolution torus_resolution(LatticePtr m) {
  TorusResolution res;
  res.m = m;

  // 0 -> K -> L -> M -> 0 with L a permutation module
  PermutationCover cov = permutation_cover(m);
  res.l = cov.l;
  res.k = cov.kernel;
  res.cover = cov.cover;
  res.incl_kl = cov.inclusion;

  // 0 -> K -> P -> C -> 0: cover Hom(K, Z), then dualize
  Dualized kd = dualize(res.k);
  PermutationCover cov2 = permutation_cover(kd.dual);
  Dualized ld = dualize(cov2.l);
  Dualized kdd = dualize(kd.dual);
  ModuleMap cover2_dual = dualize_map(cov2.cover, ld, kdd); // Hom(K,Z)* -> P
  res.p = ld.dual;
  ModuleMap ev = double_dual_map(res.k, kd, kdd);
  res.incl_kp = compose(cover2_dual, ev);
  if (!is_injective(res.incl_kp))
    fail(Errc::not_exact, "resolution: K -> P is not injective");

  res.c = cokernel(res.incl_kp);
  if (!res.c->torsion_free())
    fail(Errc::not_exact, "resolution: C has torsion");

  // S = L (+)_K P
  PushoutResult push = pushout(res.incl_kl, res.incl_kp);
  res.s = push.s;
  if (!res.s->torsion_free()) fail(Errc::not_exact, "resolution: S has torsion");

  // S -> C: kill L, project P onto its cokernel presentation
  IntMat s_to_c(res.c->ambient_rank(), res.s->ambient_rank());
  for (int i = 0; i < res.p->ambient_rank(); ++i)
    s_to_c.at(i, res.l->ambient_rank() + i) = 1;
  ModuleMap proj_c = make_module_map(res.s, res.c, std::move(s_to_c));

  // S -> M: the cover on the L part, zero on P
  IntMat s_to_m(m->ambient_rank(), res.s->ambient_rank());
  for (int r = 0; r < m->ambient_rank(); ++r)
    for (int j = 0; j < res.l->ambient_rank(); ++j)
      s_to_m.at(r, j) = res.cover.matrix.at(r, j);
  ModuleMap proj_m = make_module_map(res.s, m, std::move(s_to_m));

  res.seq1 = ExactSequence{{push.from_l, proj_c}};
  res.seq2 = ExactSequence{{push.from_p, proj_m}};

  auto r1 = verify_exact(res.seq1, true);
  if (!r1.exact) fail(Errc::not_exact, "resolution: 0 -> L -> S -> C -> 0: " + r1.detail);
  auto r2 = verify_exact(res.seq2, true);
  if (!r2.exact) fail(Errc::not_exact, "resolution: 0 -> P -> S -> M -> 0: " + r2.detail);
  if (!res.l->has_permutation_basis() || !res.p->has_permutation_basis())
    fail(Errc::not_exact, "resolution: missing permutation witness");
  if (!res.k->torsion_free()) fail(Errc::not_exact, "resolution: K has torsion");
  return res;
}

// ---- Kummer comparison -----------------------------------------------------------

KummerReport kummer_compare(long n) {
  KummerReport report;
  report.n = n;
  if (n < 1) {
    report.detail = "n must be positive";
    return report;
  }
  auto gamma = FiniteGroup::from_trusted_table({0}, 1);
  LatticePtr m = cyclic_module(gamma, n);
  TorusResolution res = torus_resolution(m);

  // reduce P and S to free coordinates
  Dualized dp = dualize(res.p); // only for the basis data
  Dualized ds = dualize(res.s);
  if (dp.to_basis.rows != 1 || ds.to_basis.rows != 1) {
    report.detail = "resolution of Z/n is not of rank 1";
    return report;
  }

  // the map P -> S in the free bases is multiplication by some constant c
  IntMat c_mat = mat_mul(ds.to_basis, mat_mul(res.seq2.maps[0].matrix, dp.from_basis));
  Int c = c_mat.at(0, 0);
  if (abs(c) != n) {
    report.detail = "induced map is not multiplication by n";
    return report;
  }

  IntMat alpha = dp.to_basis; // P -> Z
  IntMat beta = ds.to_basis;  // S -> Z, sign-corrected below
  if (c < 0) beta = mat_neg(beta);

  // gamma_m: Z/n -> Z/n must satisfy gamma_m o (S -> M) == reduction o beta
  const IntMat& proj = res.seq2.maps[1].matrix; // 1 x amb(S)
  Int w;
  bool found = false;
  for (long cand = 0; cand < n && !found; ++cand) {
    bool ok = true;
    for (int j = 0; j < proj.cols && ok; ++j)
      ok = (Int(cand) * proj.at(0, j) - beta.at(0, j)) % n == 0;
    if (ok) {
      w = cand;
      found = true;
    }
  }
  if (!found) {
    report.detail = "projection square admits no completion";
    return report;
  }
  IntMat gamma_m(1, 1);
  gamma_m.at(0, 0) = w;

  // assemble and verify the three squares and the iso property
  LatticePtr z = free_rank_one(gamma);
  LatticePtr zn = cyclic_module(gamma, n);
  ModuleMap a_map = make_module_map(res.p, z, alpha);
  ModuleMap b_map = make_module_map(res.s, z, beta);
  ModuleMap g_map = make_module_map(res.m, zn, gamma_m);
  if (!is_module_iso(a_map) || !is_module_iso(b_map) || !is_module_iso(g_map)) {
    report.detail = "comparison maps are not isomorphisms";
    return report;
  }
  IntMat mult_n(1, 1);
  mult_n.at(0, 0) = n;
  // square 1: beta o (P -> S) == (x n) o alpha, exactly in Z
  if (mat_mul(beta, res.seq2.maps[0].matrix) != mat_mul(mult_n, alpha)) {
    report.detail = "first square does not commute";
    return report;
  }
  // square 2: gamma_m o (S -> M) == reduction o beta, modulo n
  IntMat lhs = mat_mul(gamma_m, res.seq2.maps[1].matrix);
  IntMat rhs = beta;
  for (int j = 0; j < lhs.cols; ++j)
    if ((lhs.at(0, j) - rhs.at(0, j)) % n != 0) {
      report.detail = "second square does not commute";
      return report;
    }
  report.ok = true;
  report.iso_p = std::move(alpha);
  report.iso_s = std::move(beta);
  report.iso_m = std::move(gamma_m);
  report.detail = "isomorphic to the multiplication-by-n sequence";
  return report;
}

} // namespace forge

#include "forge/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "forge/error.hpp"

namespace forge {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::invalid_input: return "invalid_input";
    case Errc::not_a_group: return "not_a_group";
    case Errc::cap_exceeded: return "cap_exceeded";
    case Errc::budget_exceeded: return "budget_exceeded";
    case Errc::bound_exhausted: return "bound_exhausted";
    case Errc::not_normal: return "not_normal";
    case Errc::not_stable: return "not_stable";
    case Errc::not_a_hom: return "not_a_hom";
    case Errc::not_a_cocycle: return "not_a_cocycle";
    case Errc::center_nontrivial: return "center_nontrivial";
    case Errc::torsion_present: return "torsion_present";
    case Errc::obstruction: return "obstruction";
    case Errc::not_exact: return "not_exact";
    case Errc::mismatch: return "mismatch";
    case Errc::unsupported: return "unsupported";
  }
  return "unknown";
}

// ---- FiniteGroup -----------------------------------------------------------

FiniteGroup::FiniteGroup(std::vector<int> flat, int order,
                         std::vector<std::string> labels)
    : order_(order), table_(std::move(flat)), labels_(std::move(labels)) {
  inverse_.assign(order_, -1);
  for (int a = 0; a < order_; ++a) {
    for (int b = 0; b < order_; ++b) {
      if (mul(a, b) == 0 && mul(b, a) == 0) {
        inverse_[a] = b;
        break;
      }
    }
    if (inverse_[a] < 0) fail(Errc::not_a_group, "element without two-sided inverse");
  }
}

void FiniteGroup::check_axioms(const std::vector<int>& flat, int order,
                               bool check_associativity) {
  if (order <= 0) fail(Errc::not_a_group, "empty table");
  if (flat.size() != static_cast<std::size_t>(order) * order)
    fail(Errc::not_a_group, "table is not square");
  for (int v : flat)
    if (v < 0 || v >= order) fail(Errc::not_a_group, "table entry out of range");
  auto at = [&](int a, int b) { return flat[static_cast<std::size_t>(a) * order + b]; };
  for (int a = 0; a < order; ++a)
    if (at(0, a) != a || at(a, 0) != a)
      fail(Errc::not_a_group, "index 0 is not a two-sided identity");
  // Rows and columns must be permutations (Latin square), else inverses fail.
  for (int a = 0; a < order; ++a) {
    std::vector<bool> row(order, false), col(order, false);
    for (int b = 0; b < order; ++b) {
      if (row[at(a, b)] || col[at(b, a)])
        fail(Errc::not_a_group, "table row/column is not a permutation");
      row[at(a, b)] = col[at(b, a)] = true;
    }
  }
  if (check_associativity) {
    for (int a = 0; a < order; ++a)
      for (int b = 0; b < order; ++b) {
        const int ab = at(a, b);
        for (int c = 0; c < order; ++c)
          if (at(ab, c) != at(a, at(b, c)))
            fail(Errc::not_a_group, "table is not associative");
      }
  }
}

GroupPtr FiniteGroup::from_table(const std::vector<std::vector<int>>& table,
                                 const RunConfig& cfg) {
  const int n = static_cast<int>(table.size());
  if (n > cfg.group_cap) fail(Errc::cap_exceeded, "group order exceeds cap");
  std::vector<int> flat;
  flat.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n)
      fail(Errc::not_a_group, "table is not square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  check_axioms(flat, n, true);
  return GroupPtr(new FiniteGroup(std::move(flat), n, {}));
}

GroupPtr FiniteGroup::from_trusted_table(std::vector<int> flat, int order,
                                         std::vector<std::string> labels) {
  check_axioms(flat, order, false);
  return GroupPtr(new FiniteGroup(std::move(flat), order, std::move(labels)));
}

GroupPtr FiniteGroup::from_perms(int points, std::vector<Perm> generators,
                                 const RunConfig& cfg) {
  if (points < 0) fail(Errc::invalid_input, "negative point count");
  for (const auto& g : generators) {
    if (static_cast<int>(g.size()) != points || !perm_valid(g))
      fail(Errc::invalid_input, "generator is not a permutation of the point set");
  }
  const Perm id = perm_identity(points);
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()),
                   generators.end());
  generators.erase(std::remove(generators.begin(), generators.end(), id),
                   generators.end());

  std::vector<Perm> elems{id};
  std::map<Perm, int> index{{id, 0}};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& g : generators) {
      Perm next = perm_mul(elems[head], g);
      if (index.emplace(next, static_cast<int>(elems.size())).second) {
        elems.push_back(std::move(next));
        if (static_cast<int>(elems.size()) > cfg.group_cap)
          fail(Errc::cap_exceeded, "generator closure exceeds group cap");
      }
    }
  }

  const int n = static_cast<int>(elems.size());
  std::vector<int> flat(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      flat[static_cast<std::size_t>(a) * n + b] = index.at(perm_mul(elems[a], elems[b]));
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = perm_cycle_string(elems[i]);
  return GroupPtr(new FiniteGroup(std::move(flat), n, std::move(labels)));
}

int FiniteGroup::element_order(int a) const {
  int k = 1, x = a;
  while (x != 0) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

int FiniteGroup::power(int a, long long k) const {
  const int n = element_order(a);
  long long r = k % n;
  if (r < 0) r += n;
  int acc = 0;
  for (long long i = 0; i < r; ++i) acc = mul(acc, a);
  return acc;
}

std::string FiniteGroup::display(int i) const {
  return has_labels() ? labels_[i] : std::to_string(i);
}

// ---- Subgroup / GroupHom ---------------------------------------------------

bool Subgroup::contains(int g) const {
  return std::binary_search(elements.begin(), elements.end(), g);
}

Subgroup make_subgroup(GroupPtr parent, std::vector<int> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.empty() || elements.front() != 0)
    fail(Errc::invalid_input, "subgroup must contain the identity");
  std::vector<bool> in(parent->order(), false);
  for (int e : elements) {
    if (e < 0 || e >= parent->order())
      fail(Errc::invalid_input, "subgroup element out of range");
    in[e] = true;
  }
  for (int a : elements)
    for (int b : elements)
      if (!in[parent->mul(a, b)])
        fail(Errc::invalid_input, "subgroup is not closed under multiplication");
  return Subgroup{std::move(parent), std::move(elements)};
}

GroupHom make_hom(GroupPtr source, GroupPtr target, std::vector<int> images) {
  if (static_cast<int>(images.size()) != source->order())
    fail(Errc::not_a_hom, "image array has wrong length");
  for (int v : images)
    if (v < 0 || v >= target->order())
      fail(Errc::not_a_hom, "image out of range");
  for (int a = 0; a < source->order(); ++a)
    for (int b = 0; b < source->order(); ++b)
      if (images[source->mul(a, b)] != target->mul(images[a], images[b]))
        fail(Errc::not_a_hom, "map does not respect multiplication");
  return GroupHom{std::move(source), std::move(target), std::move(images)};
}

bool is_bijective(const GroupHom& h) {
  if (h.source->order() != h.target->order()) return false;
  std::vector<bool> hit(h.target->order(), false);
  for (int v : h.images) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

GroupHom compose(const GroupHom& f, const GroupHom& g) {
  if (g.target.get() != f.source.get())
    fail(Errc::mismatch, "compose: inner group mismatch");
  std::vector<int> images(g.source->order());
  for (int x = 0; x < g.source->order(); ++x) images[x] = f.images[g.images[x]];
  return GroupHom{g.source, f.target, std::move(images)};
}

// ---- conjugacy, center, normal subgroups -----------------------------------

std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g) {
  const int n = g.order();
  std::vector<int> cls(n, -1);
  std::vector<std::vector<int>> classes;
  for (int x = 0; x < n; ++x) {
    if (cls[x] >= 0) continue;
    std::vector<int> orbit;
    const int id = static_cast<int>(classes.size());
    for (int t = 0; t < n; ++t) {
      const int y = g.conj(t, x);
      if (cls[y] < 0) {
        cls[y] = id;
        orbit.push_back(y);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    classes.push_back(std::move(orbit));
  }
  std::sort(classes.begin(), classes.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a.front() < b.front();
            });
  return classes;
}

Subgroup center(GroupPtr g) {
  std::vector<int> z;
  for (int x = 0; x < g->order(); ++x) {
    bool central = true;
    for (int y = 0; y < g->order() && central; ++y)
      central = g->mul(x, y) == g->mul(y, x);
    if (central) z.push_back(x);
  }
  return make_subgroup(std::move(g), std::move(z));
}

bool is_normal(const Subgroup& h) {
  const auto& g = *h.parent;
  for (int t = 0; t < g.order(); ++t)
    for (int x : h.elements)
      if (!h.contains(g.conj(t, x))) return false;
  return true;
}

std::vector<Subgroup> normal_subgroups(GroupPtr g) {
  // Closure-driven enumeration over unions of conjugacy classes: a union of
  // classes containing the identity that is closed under multiplication is a
  // normal subgroup, and all normal subgroups arise this way.
  auto classes = conjugacy_classes(*g);
  const int k = static_cast<int>(classes.size());
  if (k > 63) fail(Errc::cap_exceeded, "too many conjugacy classes for mask enumeration");
  std::vector<int> class_of(g->order());
  for (int i = 0; i < k; ++i)
    for (int e : classes[i]) class_of[e] = i;

  std::vector<std::vector<std::uint64_t>> prod(k, std::vector<std::uint64_t>(k, 0));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      for (int a : classes[i])
        for (int b : classes[j]) prod[i][j] |= std::uint64_t(1) << class_of[g->mul(a, b)];

  auto close = [&](std::uint64_t mask) {
    for (;;) {
      std::uint64_t next = mask;
      for (int i = 0; i < k; ++i) {
        if (!(mask >> i & 1)) continue;
        for (int j = i; j < k; ++j)
          if (mask >> j & 1) next |= prod[i][j] | prod[j][i];
      }
      if (next == mask) return mask;
      mask = next;
    }
  };

  std::set<std::uint64_t> found{std::uint64_t(1)}; // identity class alone
  std::vector<std::uint64_t> queue{std::uint64_t(1)};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::uint64_t base = queue[head];
    for (int c = 1; c < k; ++c) {
      if (base >> c & 1) continue;
      const std::uint64_t grown = close(base | std::uint64_t(1) << c);
      if (found.insert(grown).second) queue.push_back(grown);
    }
  }

  std::vector<Subgroup> out;
  for (std::uint64_t mask : found) {
    std::vector<int> members;
    for (int i = 0; i < k; ++i)
      if (mask >> i & 1)
        members.insert(members.end(), classes[i].begin(), classes[i].end());
    std::sort(members.begin(), members.end());
    out.push_back(Subgroup{g, std::move(members)});
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.elements.size() != b.elements.size())
      return a.elements.size() < b.elements.size();
    return a.elements < b.elements;
  });
  return out;
}

// ---- quotient ----------------------------------------------------------------

QuotientGroup quotient(GroupPtr g, const Subgroup& n) {
  if (n.parent.get() != g.get()) fail(Errc::mismatch, "subgroup of a different group");
  if (!is_normal(n)) fail(Errc::not_normal, "quotient by a non-normal subgroup");
  const int order = g->order();
  std::vector<int> coset_of(order, -1);
  std::vector<int> reps;
  for (int x = 0; x < order; ++x) {
    if (coset_of[x] >= 0) continue;
    const int id = static_cast<int>(reps.size());
    reps.push_back(x); // x is minimal in its coset by scan order
    for (int h : n.elements) coset_of[g->mul(x, h)] = id;
  }
  const int q = static_cast<int>(reps.size());
  std::vector<int> flat(static_cast<std::size_t>(q) * q);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      flat[static_cast<std::size_t>(a) * q + b] = coset_of[g->mul(reps[a], reps[b])];
  std::vector<std::string> labels;
  if (g->has_labels()) {
    labels.resize(q);
    for (int i = 0; i < q; ++i) labels[i] = "[" + g->label(reps[i]) + "]";
  }
  GroupPtr qg = FiniteGroup::from_trusted_table(std::move(flat), q, std::move(labels));
  GroupHom proj{g, qg, std::move(coset_of)};
  return QuotientGroup{qg, std::move(proj)};
}

bool is_cyclic(const FiniteGroup& g) {
  for (int x = 0; x < g.order(); ++x)
    if (g.element_order(x) == g.order()) return true;
  return false;
}

bool is_abelian(const FiniteGroup& g) {
  for (int a = 0; a < g.order(); ++a)
    for (int b = a + 1; b < g.order(); ++b)
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

ExtractedSubgroup subgroup_as_group(const Subgroup& h) {
  const auto& g = *h.parent;
  const int m = h.order();
  std::vector<int> local(g.order(), -1);
  for (int i = 0; i < m; ++i) local[h.elements[i]] = i;
  std::vector<int> flat(static_cast<std::size_t>(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      flat[static_cast<std::size_t>(a) * m + b] = local[g.mul(h.elements[a], h.elements[b])];
  std::vector<std::string> labels;
  if (g.has_labels()) {
    labels.resize(m);
    for (int i = 0; i < m; ++i) labels[i] = g.label(h.elements[i]);
  }
  GroupPtr sub = FiniteGroup::from_trusted_table(std::move(flat), m, std::move(labels));
  GroupHom embed{sub, h.parent, h.elements};
  return ExtractedSubgroup{sub, std::move(embed)};
}

std::vector<int> generating_set(const FiniteGroup& g) {
  std::vector<int> gens;
  std::vector<bool> in(g.order(), false);
  in[0] = true;
  int covered = 1;
  while (covered < g.order()) {
    int next = -1;
    for (int x = 0; x < g.order(); ++x)
      if (!in[x]) {
        next = x;
        break;
      }
    gens.push_back(next);
    // close the current set under multiplication
    std::vector<int> frontier{next};
    in[next] = true;
    ++covered;
    std::vector<int> members;
    for (int x = 0; x < g.order(); ++x)
      if (in[x]) members.push_back(x);
    while (!frontier.empty()) {
      std::vector<int> fresh;
      for (int f : frontier)
        for (std::size_t i = 0; i < members.size(); ++i) {
          for (int y : {g.mul(f, members[i]), g.mul(members[i], f)}) {
            if (!in[y]) {
              in[y] = true;
              ++covered;
              fresh.push_back(y);
              members.push_back(y);
            }
          }
        }
      frontier = std::move(fresh);
    }
  }
  return gens;
}

// ---- automorphisms -----------------------------------------------------------

namespace {

struct HomSearch {
  const FiniteGroup& src;
  const FiniteGroup& dst;
  std::vector<int> gens;           // generating set of src
  std::vector<std::vector<int>> candidates; // per generator
  std::int64_t budget;
  std::int64_t nodes = 0;
  bool bijective_only;
  bool first_only;
  std::vector<AutImages> results;

  // Extends generator images to a full map via breadth-first words; the
  // Schreier-style consistency check (g*s for every reached g, generator s)
  // suffices for the homomorphism law.
  bool extend(const std::vector<int>& gen_images, AutImages& out) const {
    const int n = src.order();
    out.assign(n, -1);
    out[0] = 0;
    std::vector<int> queue{0};
    std::size_t head = 0;
    int assigned = 1;
    while (head < queue.size()) {
      const int x = queue[head++];
      for (std::size_t i = 0; i < gens.size(); ++i) {
        const int xs = src.mul(x, gens[i]);
        const int img = dst.mul(out[x], gen_images[i]);
        if (out[xs] < 0) {
          out[xs] = img;
          queue.push_back(xs);
          ++assigned;
        } else if (out[xs] != img) {
          return false;
        }
      }
    }
    if (assigned != n) return false; // gens fail to generate (cannot happen)
    if (bijective_only) {
      std::vector<bool> hit(dst.order(), false);
      for (int v : out) {
        if (hit[v]) return false;
        hit[v] = true;
      }
    }
    return true;
  }

  bool run(std::size_t level, std::vector<int>& chosen) {
    if (level == gens.size()) {
      AutImages full;
      if (extend(chosen, full)) {
        results.push_back(std::move(full));
        if (first_only) return true;
      }
      return false;
    }
    for (int cand : candidates[level]) {
      if (++nodes > budget)
        fail(Errc::budget_exceeded, "automorphism search node limit exceeded");
      chosen.push_back(cand);
      if (run(level + 1, chosen)) return true;
      chosen.pop_back();
    }
    return false;
  }
};

// Candidates for the image of generator x: same element order and same
// conjugacy class size (and, for isomorphisms, matching class structure).
std::vector<std::vector<int>> image_candidates(const FiniteGroup& src,
                                               const FiniteGroup& dst,
                                               const std::vector<int>& gens) {
  auto src_classes = conjugacy_classes(src);
  auto dst_classes = conjugacy_classes(dst);
  std::vector<int> src_class_size(src.order()), dst_class_size(dst.order());
  for (const auto& c : src_classes)
    for (int e : c) src_class_size[e] = static_cast<int>(c.size());
  for (const auto& c : dst_classes)
    for (int e : c) dst_class_size[e] = static_cast<int>(c.size());
  std::vector<std::vector<int>> out;
  for (int x : gens) {
    std::vector<int> cands;
    for (int y = 0; y < dst.order(); ++y)
      if (dst.element_order(y) == src.element_order(x) &&
          dst_class_size[y] == src_class_size[x])
        cands.push_back(y);
    out.push_back(std::move(cands));
  }
  return out;
}

} // namespace

std::vector<AutImages> enumerate_automorphisms(const FiniteGroup& g,
                                               const RunConfig& cfg) {
  auto gens = generating_set(g);
  HomSearch search{g, g, gens, image_candidates(g, g, gens),
                   cfg.search_budget, 0, true, false, {}};
  std::vector<int> chosen;
  search.run(0, chosen);
  std::sort(search.results.begin(), search.results.end());
  return search.results;
}

std::optional<GroupHom> find_isomorphism(GroupPtr g, GroupPtr h,
                                         const RunConfig& cfg) {
  if (g->order() != h->order()) return std::nullopt;
  auto gens = generating_set(*g);
  HomSearch search{*g, *h, gens, image_candidates(*g, *h, gens),
                   cfg.search_budget, 0, true, true, {}};
  std::vector<int> chosen;
  search.run(0, chosen);
  if (search.results.empty()) return std::nullopt;
  return GroupHom{g, h, search.results.front()};
}

AutomorphismGroup automorphism_group(GroupPtr g, const RunConfig& cfg) {
  auto maps = enumerate_automorphisms(*g, cfg);
  const int m = static_cast<int>(maps.size());
  if (m > cfg.group_cap) fail(Errc::cap_exceeded, "automorphism group exceeds cap");

  // An automorphism is determined by its images on a generating set, so
  // generator-image tuples serve as lookup keys during table construction.
  const auto gens = generating_set(*g);
  auto key_of = [&](const AutImages& a) {
    std::vector<int> key(gens.size());
    for (std::size_t j = 0; j < gens.size(); ++j) key[j] = a[gens[j]];
    return key;
  };
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < m; ++i) index.emplace(key_of(maps[i]), i);

  const int n = g->order();
  std::vector<int> flat(static_cast<std::size_t>(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      std::vector<int> key(gens.size());
      for (std::size_t j = 0; j < gens.size(); ++j)
        key[j] = maps[a][maps[b][gens[j]]];
      flat[static_cast<std::size_t>(a) * m + b] = index.at(key);
    }
  GroupPtr aut = FiniteGroup::from_trusted_table(std::move(flat), m);

  std::set<int> inner;
  for (int t = 0; t < n; ++t) {
    std::vector<int> key(gens.size());
    for (std::size_t j = 0; j < gens.size(); ++j) key[j] = g->conj(t, gens[j]);
    inner.insert(index.at(key));
  }
  Subgroup inn = make_subgroup(aut, {inner.begin(), inner.end()});
  auto q = quotient(aut, inn);
  std::vector<int> reps(q.group->order(), -1);
  for (int a = 0; a < m; ++a) {
    const int c = q.projection.images[a];
    if (reps[c] < 0) reps[c] = a;
  }
  return AutomorphismGroup{aut, std::move(maps), std::move(inn),
                           q.group, std::move(q.projection), std::move(reps)};
}

// ---- composition series ------------------------------------------------------

bool is_simple(GroupPtr g) {
  if (g->order() == 1) return false;
  return normal_subgroups(g).size() == 2;
}

std::vector<GroupPtr> composition_factors(GroupPtr g) {
  std::vector<GroupPtr> factors;
  GroupPtr cur = std::move(g);
  while (cur->order() > 1) {
    auto normals = normal_subgroups(cur);
    // maximal proper normal subgroup: last entry below the full group
    const Subgroup* best = nullptr;
    for (const auto& s : normals)
      if (s.order() < cur->order()) best = &s;
    auto q = quotient(cur, *best);
    if (!is_simple(q.group))
      fail(Errc::mismatch, "composition factor is not simple");
    factors.push_back(q.group);
    cur = subgroup_as_group(*best).group;
  }
  return factors;
}

bool same_group_structure(const FiniteGroup& a, const FiniteGroup& b) {
  return a.order() == b.order() && a.table_flat() == b.table_flat();
}

Subgroup subgroup_core(GroupPtr g, const Subgroup& h) {
  if (h.parent.get() != g.get()) fail(Errc::mismatch, "subgroup of a different group");
  std::vector<bool> in(g->order(), false);
  for (int e : h.elements) in[e] = true;
  for (int t = 0; t < g->order(); ++t) {
    std::vector<bool> next(g->order(), false);
    for (int x = 0; x < g->order(); ++x)
      if (in[x] && h.contains(g->conj(t, x))) next[x] = true;
    in = std::move(next);
  }
  std::vector<int> elems;
  for (int x = 0; x < g->order(); ++x)
    if (in[x]) elems.push_back(x);
  return make_subgroup(g, std::move(elems));
}

} // namespace forge

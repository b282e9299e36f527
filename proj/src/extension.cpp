#include "forge/extension.hpp"

#include <algorithm>
#include <map>

#include "forge/error.hpp"

namespace forge {

GroupExtension make_extension(GroupHom kernel_embed, GroupHom proj) {
  if (kernel_embed.target.get() != proj.source.get())
    fail(Errc::mismatch, "embedding and projection do not share the total group");
  GroupPtr total = proj.source;
  GroupPtr kernel = kernel_embed.source;
  GroupPtr gamma = proj.target;
  if (kernel->order() * gamma->order() != total->order())
    fail(Errc::invalid_input, "|E| != |N| * |Gamma|");

  std::vector<int> kernel_index_of(total->order(), -1);
  for (int n = 0; n < kernel->order(); ++n) {
    const int e = kernel_embed(n);
    if (kernel_index_of[e] >= 0)
      fail(Errc::invalid_input, "kernel embedding is not injective");
    kernel_index_of[e] = n;
  }
  std::vector<bool> hit(gamma->order(), false);
  for (int e = 0; e < total->order(); ++e) {
    hit[proj(e)] = true;
    const bool in_kernel = proj(e) == 0;
    if (in_kernel != (kernel_index_of[e] >= 0))
      fail(Errc::invalid_input, "embedded kernel differs from the projection kernel");
  }
  for (bool b : hit)
    if (!b) fail(Errc::invalid_input, "projection is not surjective");
  return GroupExtension{std::move(total), std::move(kernel), std::move(gamma),
                        std::move(kernel_embed), std::move(proj),
                        std::move(kernel_index_of)};
}

GroupExtension extension_from_normal(GroupPtr total, const Subgroup& n) {
  if (!is_normal(n)) fail(Errc::not_normal, "extension kernel must be normal");
  auto sub = subgroup_as_group(n);
  auto q = quotient(total, n);
  return make_extension(sub.embedding, q.projection);
}

OuterAction extension_outer_action(const GroupExtension& e) {
  std::vector<int> preimage(e.gamma->order(), -1);
  for (int x = 0; x < e.total->order(); ++x)
    if (preimage[e.proj(x)] < 0) preimage[e.proj(x)] = x;
  std::vector<AutImages> reps;
  for (int g = 0; g < e.gamma->order(); ++g) {
    const int lift = preimage[g];
    AutImages img(e.kernel->order());
    for (int n = 0; n < e.kernel->order(); ++n) {
      const int conj = e.total->conj(lift, e.kernel_embed(n));
      const int back = e.kernel_index_of[conj];
      if (back < 0) fail(Errc::mismatch, "kernel is not preserved by conjugation");
      img[n] = back;
    }
    reps.push_back(std::move(img));
  }
  return make_outer_action(e.gamma, e.kernel, std::move(reps));
}

// ---- splittings ----------------------------------------------------------

namespace {

// Extends images on a generating set of gamma to a full map along
// breadth-first words; Schreier consistency makes the result a hom.
bool extend_section(const FiniteGroup& gamma, const FiniteGroup& total,
                    const std::vector<int>& gens, const std::vector<int>& gen_images,
                    std::vector<int>& out) {
  out.assign(gamma.order(), -1);
  out[0] = 0;
  std::vector<int> queue{0};
  std::size_t head = 0;
  while (head < queue.size()) {
    const int x = queue[head++];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const int xs = gamma.mul(x, gens[i]);
      const int img = total.mul(out[x], gen_images[i]);
      if (out[xs] < 0) {
        out[xs] = img;
        queue.push_back(xs);
      } else if (out[xs] != img) {
        return false;
      }
    }
  }
  return true;
}

std::vector<Splitting> splittings_impl(const GroupExtension& e, bool first_only,
                                       const RunConfig& cfg) {
  const auto gens = generating_set(*e.gamma);
  std::vector<std::vector<int>> fibers(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (int x = 0; x < e.total->order(); ++x)
      if (e.proj(x) == gens[i]) fibers[i].push_back(x);

  std::vector<Splitting> found;
  std::vector<int> chosen(gens.size());
  std::int64_t nodes = 0;
  auto rec = [&](auto&& self, std::size_t level) -> bool {
    if (level == gens.size()) {
      std::vector<int> images;
      if (!extend_section(*e.gamma, *e.total, gens, chosen, images)) return false;
      for (int g = 0; g < e.gamma->order(); ++g)
        if (e.proj(images[g]) != g) return false;
      found.push_back(Splitting{GroupHom{e.gamma, e.total, std::move(images)}});
      return first_only;
    }
    for (int cand : fibers[level]) {
      if (++nodes > cfg.search_budget)
        fail(Errc::budget_exceeded, "splitting search budget exceeded");
      chosen[level] = cand;
      if (self(self, level + 1)) return true;
    }
    return false;
  };
  rec(rec, 0);
  std::sort(found.begin(), found.end(), [](const Splitting& a, const Splitting& b) {
    return a.section.images < b.section.images;
  });
  return found;
}

} // namespace

std::vector<Splitting> enumerate_splittings(const GroupExtension& e,
                                            const RunConfig& cfg) {
  return splittings_impl(e, false, cfg);
}

std::optional<Splitting> find_splitting(const GroupExtension& e,
                                        const RunConfig& cfg) {
  auto all = splittings_impl(e, true, cfg);
  if (all.empty()) return std::nullopt;
  return all.front();
}

std::vector<std::vector<Splitting>> splitting_classes(const GroupExtension& e,
                                                      const RunConfig& cfg) {
  auto all = enumerate_splittings(e, cfg);
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < all.size(); ++i)
    index.emplace(all[i].section.images, static_cast<int>(i));

  std::vector<int> cls(all.size(), -1);
  int next_class = 0;
  std::vector<std::vector<Splitting>> classes;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (cls[i] >= 0) continue;
    const int id = next_class++;
    classes.emplace_back();
    // orbit under s -> n s n^-1 for kernel elements n
    std::vector<int> stack{static_cast<int>(i)};
    cls[i] = id;
    while (!stack.empty()) {
      const int cur = stack.back();
      stack.pop_back();
      classes[id].push_back(all[cur]);
      for (int n = 0; n < e.kernel->order(); ++n) {
        const int t = e.kernel_embed(n);
        std::vector<int> conj(e.gamma->order());
        for (int g = 0; g < e.gamma->order(); ++g)
          conj[g] = e.total->conj(t, all[cur].section(g));
        const int j = index.at(conj);
        if (cls[j] < 0) {
          cls[j] = id;
          stack.push_back(j);
        }
      }
    }
    std::sort(classes[id].begin(), classes[id].end(),
              [](const Splitting& a, const Splitting& b) {
                return a.section.images < b.section.images;
              });
  }
  return classes;
}

// ---- cocycles -------------------------------------------------------------

Cocycle make_cocycle(GroupAction action, std::vector<int> values) {
  const auto& gamma = *action.gamma;
  const auto& target = *action.target;
  if (static_cast<int>(values.size()) != gamma.order())
    fail(Errc::not_a_cocycle, "value array has wrong length");
  for (int v : values)
    if (v < 0 || v >= target.order())
      fail(Errc::not_a_cocycle, "cocycle value out of range");
  for (int a = 0; a < gamma.order(); ++a)
    for (int b = 0; b < gamma.order(); ++b)
      if (values[gamma.mul(a, b)] !=
          target.mul(values[a], action[a][values[b]]))
        fail(Errc::not_a_cocycle, "cocycle law fails");
  return Cocycle{std::move(action), std::move(values)};
}

GroupAction action_from_splitting(const GroupExtension& e, const Splitting& s) {
  std::vector<AutImages> images;
  for (int g = 0; g < e.gamma->order(); ++g) {
    const int lift = s.section(g);
    AutImages img(e.kernel->order());
    for (int n = 0; n < e.kernel->order(); ++n) {
      const int back = e.kernel_index_of[e.total->conj(lift, e.kernel_embed(n))];
      if (back < 0) fail(Errc::mismatch, "kernel not preserved");
      img[n] = back;
    }
    images.push_back(std::move(img));
  }
  return make_group_action(e.gamma, e.kernel, std::move(images));
}

Cocycle difference_cocycle(const GroupExtension& e, const Splitting& s,
                           const Splitting& s2) {
  if (s.section.target.get() != e.total.get() ||
      s2.section.target.get() != e.total.get())
    fail(Errc::mismatch, "sections of a different extension");
  std::vector<int> values(e.gamma->order());
  for (int g = 0; g < e.gamma->order(); ++g) {
    const int diff = e.total->mul(s2.section(g), e.total->inv(s.section(g)));
    const int back = e.kernel_index_of[diff];
    if (back < 0) fail(Errc::mismatch, "section difference leaves the kernel");
    values[g] = back;
  }
  return make_cocycle(action_from_splitting(e, s), std::move(values));
}

GroupAction twist_action(const GroupAction& action, const Cocycle& c) {
  // re-verify the cocycle law against the action that is being twisted
  make_cocycle(action, c.values);
  const auto& target = *action.target;
  std::vector<AutImages> twisted;
  for (int g = 0; g < action.gamma->order(); ++g) {
    const int t = c.values[g];
    AutImages img(target.order());
    for (int x = 0; x < target.order(); ++x) img[x] = target.conj(t, action[g][x]);
    twisted.push_back(std::move(img));
  }
  return make_group_action(action.gamma, action.target, std::move(twisted));
}

Cocycle inverse_cocycle_for_twist(const Cocycle& c) {
  GroupAction twisted = twist_action(c.action, c);
  std::vector<int> values(c.values.size());
  for (std::size_t g = 0; g < c.values.size(); ++g)
    values[g] = c.action.target->inv(c.values[g]);
  return make_cocycle(std::move(twisted), std::move(values));
}

bool cocycles_equal(const Cocycle& a, const Cocycle& b) {
  return a.values == b.values && a.action.images == b.action.images;
}

bool is_trivial_cocycle(const Cocycle& c) {
  return std::all_of(c.values.begin(), c.values.end(), [](int v) { return v == 0; });
}

bool are_cohomologous(const Cocycle& a, const Cocycle& b) {
  if (a.action.images != b.action.images)
    fail(Errc::mismatch, "cocycles for different actions");
  const auto& gamma = *a.action.gamma;
  const auto& target = *a.action.target;
  for (int g = 0; g < target.order(); ++g) {
    bool ok = true;
    for (int x = 0; x < gamma.order() && ok; ++x) {
      const int rhs = target.mul(target.mul(target.inv(g), a.values[x]),
                                 a.action[x][g]);
      ok = b.values[x] == rhs;
    }
    if (ok) return true;
  }
  return false;
}

std::vector<Cocycle> enumerate_cocycles(const GroupAction& action,
                                        const RunConfig& cfg) {
  const auto& gamma = *action.gamma;
  const auto& target = *action.target;
  const auto gens = generating_set(gamma);

  std::vector<std::vector<int>> found;
  std::vector<int> chosen(gens.size());
  std::int64_t nodes = 0;

  auto extend = [&](std::vector<int>& out) -> bool {
    out.assign(gamma.order(), -1);
    out[0] = 0;
    std::vector<int> queue{0};
    std::size_t head = 0;
    while (head < queue.size()) {
      const int x = queue[head++];
      for (std::size_t i = 0; i < gens.size(); ++i) {
        const int xs = gamma.mul(x, gens[i]);
        const int val = target.mul(out[x], action[x][chosen[i]]);
        if (out[xs] < 0) {
          out[xs] = val;
          queue.push_back(xs);
        } else if (out[xs] != val) {
          return false;
        }
      }
    }
    // full law check; the word extension only enforces Schreier relations
    for (int a = 0; a < gamma.order(); ++a)
      for (int b = 0; b < gamma.order(); ++b)
        if (out[gamma.mul(a, b)] != target.mul(out[a], action[a][out[b]]))
          return false;
    return true;
  };

  auto rec = [&](auto&& self, std::size_t level) -> void {
    if (level == gens.size()) {
      std::vector<int> values;
      if (extend(values)) found.push_back(std::move(values));
      return;
    }
    for (int cand = 0; cand < target.order(); ++cand) {
      if (++nodes > cfg.search_budget)
        fail(Errc::budget_exceeded, "cocycle enumeration budget exceeded");
      chosen[level] = cand;
      self(self, level + 1);
    }
  };
  rec(rec, 0);
  std::sort(found.begin(), found.end());

  std::vector<Cocycle> out;
  out.reserve(found.size());
  for (auto& values : found) out.push_back(make_cocycle(action, std::move(values)));
  return out;
}

std::vector<std::vector<Cocycle>> h1_classes(const GroupAction& action,
                                             const RunConfig& cfg) {
  auto cocycles = enumerate_cocycles(action, cfg);
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < cocycles.size(); ++i)
    index.emplace(cocycles[i].values, static_cast<int>(i));

  const auto& gamma = *action.gamma;
  const auto& target = *action.target;
  std::vector<int> cls(cocycles.size(), -1);
  std::vector<std::vector<Cocycle>> classes;
  for (std::size_t i = 0; i < cocycles.size(); ++i) {
    if (cls[i] >= 0) continue;
    const int id = static_cast<int>(classes.size());
    classes.emplace_back();
    std::vector<int> stack{static_cast<int>(i)};
    cls[i] = id;
    while (!stack.empty()) {
      const int cur = stack.back();
      stack.pop_back();
      classes[id].push_back(cocycles[cur]);
      for (int g = 0; g < target.order(); ++g) {
        std::vector<int> moved(gamma.order());
        for (int x = 0; x < gamma.order(); ++x)
          moved[x] = target.mul(target.mul(target.inv(g), cocycles[cur].values[x]),
                                action[x][g]);
        const int j = index.at(moved);
        if (cls[j] < 0) {
          cls[j] = id;
          stack.push_back(j);
        }
      }
    }
    std::sort(classes[id].begin(), classes[id].end(),
              [](const Cocycle& a, const Cocycle& b) { return a.values < b.values; });
  }
  // distinguished trivial class first, then by least representative
  std::sort(classes.begin(), classes.end(),
            [](const std::vector<Cocycle>& a, const std::vector<Cocycle>& b) {
              const bool ta = is_trivial_cocycle(a.front());
              const bool tb = is_trivial_cocycle(b.front());
              if (ta != tb) return ta;
              return a.front().values < b.front().values;
            });
  return classes;
}

// ---- completeness ----------------------------------------------------------

bool is_complete(GroupPtr n, const RunConfig& cfg) {
  if (center(n).order() != 1) return false;
  return enumerate_automorphisms(*n, cfg).size() ==
         static_cast<std::size_t>(n->order());
}

AlmostCompleteResult is_almost_complete(GroupPtr n, const RunConfig& cfg) {
  AlmostCompleteResult result;
  if (center(n).order() != 1) return result;
  auto aut = automorphism_group(n, cfg);
  GroupExtension ext = make_extension(subgroup_as_group(aut.inner).embedding,
                                      aut.out_projection);
  auto split = find_splitting(ext, cfg);
  if (!split) return result;
  result.almost_complete = true;
  result.witness = OutSection{std::move(aut), std::move(split->section)};
  return result;
}

ComplementSplit split_with_rigid_kernel(const GroupExtension& e,
                                        const OutSection& witness) {
  if (center(e.kernel).order() != 1)
    fail(Errc::center_nontrivial, "kernel centre must be trivial");
  if (witness.aut.aut.get() != witness.section.target.get())
    fail(Errc::mismatch, "witness section does not land in the witness Aut group");

  // index automorphisms of the kernel by their images on a generating set
  const auto gens = generating_set(*e.kernel);
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < witness.aut.maps.size(); ++i) {
    std::vector<int> key(gens.size());
    for (std::size_t j = 0; j < gens.size(); ++j) key[j] = witness.aut.maps[i][gens[j]];
    index.emplace(std::move(key), static_cast<int>(i));
  }

  std::vector<int> complement;
  bool centralizing = true;
  for (int x = 0; x < e.total->order(); ++x) {
    std::vector<int> key(gens.size());
    for (std::size_t j = 0; j < gens.size(); ++j) {
      const int back = e.kernel_index_of[e.total->conj(x, e.kernel_embed(gens[j]))];
      if (back < 0) fail(Errc::mismatch, "kernel not preserved");
      key[j] = back;
    }
    auto it = index.find(key);
    if (it == index.end()) fail(Errc::mismatch, "conjugation is not in the witness Aut");
    const int aut_idx = it->second;
    const int out_class = witness.aut.out_projection(aut_idx);
    if (witness.section(out_class) == aut_idx) {
      complement.push_back(x);
      if (aut_idx != 0) centralizing = false;
    }
  }

  if (static_cast<int>(complement.size()) != e.gamma->order())
    fail(Errc::mismatch, "complement size differs from the quotient (invalid witness)");
  std::vector<int> images(e.gamma->order(), -1);
  for (int c : complement) {
    const int g = e.proj(c);
    if (images[g] >= 0)
      fail(Errc::mismatch, "complement does not map bijectively onto the quotient");
    images[g] = c;
  }
  GroupHom section = make_hom(e.gamma, e.total, std::move(images));
  return ComplementSplit{Splitting{std::move(section)}, centralizing};
}

bool almost_complete_via_factors(GroupPtr g, const RunConfig& cfg) {
  for (const auto& factor : composition_factors(std::move(g)))
    if (!is_almost_complete(factor, cfg).almost_complete) return false;
  return true;
}

} // namespace forge

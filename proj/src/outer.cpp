#include "forge/outer.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "forge/error.hpp"
#include "forge/extension.hpp"

namespace forge {

namespace {

void check_automorphism(const GroupPtr& target, const AutImages& img) {
  GroupHom h = make_hom(target, target, img);
  if (!is_bijective(h)) fail(Errc::not_a_hom, "action image is not bijective");
}

AutImages compose_arrays(const AutImages& f, const AutImages& g) {
  AutImages r(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) r[x] = f[g[x]];
  return r;
}

// phi == conjugation by some t? It suffices to match on a generating set.
bool is_inner(const FiniteGroup& g, const std::vector<int>& gens,
              const AutImages& phi) {
  for (int t = 0; t < g.order(); ++t) {
    bool ok = true;
    for (int s : gens)
      if (phi[s] != g.conj(t, s)) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return false;
}

} // namespace

GroupAction make_group_action(GroupPtr gamma, GroupPtr target,
                              std::vector<AutImages> images) {
  if (static_cast<int>(images.size()) != gamma->order())
    fail(Errc::invalid_input, "action must assign an automorphism to every element");
  for (const auto& img : images) check_automorphism(target, img);
  if (images[0] != perm_identity(target->order()))
    fail(Errc::not_a_hom, "identity must act trivially");
  for (int a = 0; a < gamma->order(); ++a)
    for (int b = 0; b < gamma->order(); ++b)
      if (images[gamma->mul(a, b)] != compose_arrays(images[a], images[b]))
        fail(Errc::not_a_hom, "action is not a homomorphism to Aut");
  return GroupAction{std::move(gamma), std::move(target), std::move(images)};
}

GroupAction trivial_group_action(GroupPtr gamma, GroupPtr target) {
  std::vector<AutImages> images(gamma->order(), perm_identity(target->order()));
  return GroupAction{std::move(gamma), std::move(target), std::move(images)};
}

OuterAction make_outer_action(GroupPtr gamma, GroupPtr target,
                              std::vector<AutImages> reps) {
  if (static_cast<int>(reps.size()) != gamma->order())
    fail(Errc::invalid_input, "outer action must assign a representative to every element");
  for (const auto& img : reps) check_automorphism(target, img);
  const auto gens = generating_set(*target);
  for (int a = 0; a < gamma->order(); ++a)
    for (int b = 0; b < gamma->order(); ++b) {
      AutImages lhs = compose_arrays(reps[a], reps[b]);
      AutImages diff = compose_arrays(lhs, perm_inverse(reps[gamma->mul(a, b)]));
      if (!is_inner(*target, gens, diff))
        fail(Errc::not_a_hom, "representatives are not a homomorphism modulo inner");
    }
  return OuterAction{std::move(gamma), std::move(target), std::move(reps)};
}

OuterAction outer_from_action(const GroupAction& a) {
  return OuterAction{a.gamma, a.target, a.images};
}

bool maps_subgroup_onto(const AutImages& phi, const Subgroup& n) {
  for (int e : n.elements)
    if (!n.contains(phi[e])) return false;
  return true; // injectivity makes "into" equal to "onto" on finite sets
}

bool is_stable(const Subgroup& n, const OuterAction& a) {
  if (n.parent.get() != a.target.get())
    fail(Errc::mismatch, "subgroup of a different group");
  if (!is_normal(n)) fail(Errc::not_normal, "stability requires a normal subgroup");
  for (const auto& rep : a.reps)
    if (!maps_subgroup_onto(rep, n)) return false;
  return true;
}

std::vector<Subgroup> stable_normal_subgroups(const OuterAction& a) {
  std::vector<Subgroup> out;
  for (auto& s : normal_subgroups(a.target))
    if (is_stable(s, a)) out.push_back(std::move(s));
  return out;
}

namespace {

// order of the coset mS in T/S: least j > 0 with m^j in S
int coset_order(const FiniteGroup& g, const Subgroup& s, int m) {
  int x = m, j = 1;
  while (!s.contains(x)) {
    x = g.mul(x, m);
    ++j;
  }
  return j;
}

bool cyclic_quotient_step(const FiniteGroup& g, const Subgroup& from,
                          const Subgroup& to) {
  const int index = to.order() / from.order();
  for (int m : to.elements)
    if (coset_order(g, from, m) == index) return true;
  return false;
}

bool subset_of(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

} // namespace

FiltrationSearch supersolvable_filtration(const OuterAction& a) {
  const auto stables = stable_normal_subgroups(a);
  const int k = static_cast<int>(stables.size());
  int start = -1, goal = -1;
  for (int i = 0; i < k; ++i) {
    if (stables[i].order() == 1) start = i;
    if (stables[i].order() == a.target->order()) goal = i;
  }

  std::vector<int> dist(k, -1), parent(k, -1);
  dist[start] = 0;
  std::vector<int> queue{start};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int cur = queue[head];
    if (cur == goal) break;
    for (int next = 0; next < k; ++next) {
      if (dist[next] >= 0 || stables[next].order() <= stables[cur].order()) continue;
      if (stables[next].order() % stables[cur].order() != 0) continue;
      if (!subset_of(stables[cur].elements, stables[next].elements)) continue;
      if (!cyclic_quotient_step(*a.target, stables[cur], stables[next])) continue;
      dist[next] = dist[cur] + 1;
      parent[next] = cur;
      queue.push_back(next);
    }
  }

  FiltrationSearch result;
  if (dist[goal] >= 0) {
    std::vector<Subgroup> chain;
    for (int at = goal; at >= 0; at = parent[at]) chain.push_back(stables[at]);
    std::reverse(chain.begin(), chain.end());
    result.filtration = Filtration{std::move(chain), dist[goal]};
    return result;
  }
  // frontier: reachable subgroups with no admissible successor
  for (int i = 0; i < k; ++i) {
    if (dist[i] < 0) continue;
    bool extendable = false;
    for (int next = 0; next < k && !extendable; ++next)
      extendable = stables[next].order() > stables[i].order() &&
                   stables[next].order() % stables[i].order() == 0 &&
                   subset_of(stables[i].elements, stables[next].elements) &&
                   cyclic_quotient_step(*a.target, stables[i], stables[next]);
    if (!extendable) result.frontier.push_back(stables[i]);
  }
  return result;
}

Filtration verify_filtration(const OuterAction& a,
                             const std::vector<std::vector<int>>& chain) {
  if (chain.empty()) fail(Errc::invalid_input, "empty chain");
  std::vector<Subgroup> subs;
  for (const auto& elems : chain) subs.push_back(make_subgroup(a.target, elems));
  if (subs.front().order() != 1)
    fail(Errc::invalid_input, "chain must start at the trivial subgroup");
  if (subs.back().order() != a.target->order())
    fail(Errc::invalid_input, "chain must end at the full group");
  for (const auto& s : subs) {
    if (!is_normal(s)) fail(Errc::not_normal, "chain member is not normal");
    if (!is_stable(s, a)) fail(Errc::not_stable, "chain member is not stable");
  }
  for (std::size_t i = 1; i < subs.size(); ++i) {
    if (!subset_of(subs[i - 1].elements, subs[i].elements))
      fail(Errc::invalid_input, "chain is not ascending");
    if (!cyclic_quotient_step(*a.target, subs[i - 1], subs[i]))
      fail(Errc::invalid_input, "successive quotient is not cyclic");
  }
  const int n = static_cast<int>(subs.size()) - 1;
  return Filtration{std::move(subs), n};
}

InducedQuotient induced_quotient_action(const OuterAction& a, const Subgroup& n) {
  if (!is_stable(n, a)) fail(Errc::not_stable, "subgroup is not stable under the action");
  auto q = quotient(a.target, n);
  const auto& proj = q.projection.images;
  std::vector<AutImages> reps_q;
  for (const auto& rep : a.reps) {
    AutImages img(q.group->order(), -1);
    for (int x = 0; x < a.target->order(); ++x) {
      const int c = proj[x], ic = proj[rep[x]];
      if (img[c] < 0)
        img[c] = ic;
      else if (img[c] != ic)
        fail(Errc::mismatch, "representative does not descend to the quotient");
    }
    reps_q.push_back(std::move(img));
  }
  OuterAction qa = make_outer_action(a.gamma, q.group, std::move(reps_q));
  return InducedQuotient{std::move(qa), std::move(q)};
}

namespace {

struct LiftSearch {
  const FiniteGroup& gamma;
  const FiniteGroup& target;
  std::vector<int> gens; // of gamma
  std::vector<std::vector<AutImages>> candidates;
  std::int64_t budget;
  std::int64_t nodes = 0;

  bool extend(const std::vector<AutImages>& gen_images,
              std::vector<AutImages>& out) const {
    const int n = gamma.order();
    out.assign(n, {});
    out[0] = perm_identity(target.order());
    std::vector<int> queue{0};
    std::size_t head = 0;
    while (head < queue.size()) {
      const int x = queue[head++];
      for (std::size_t i = 0; i < gens.size(); ++i) {
        const int xs = gamma.mul(x, gens[i]);
        AutImages img(target.order());
        for (int e = 0; e < target.order(); ++e) img[e] = out[x][gen_images[i][e]];
        if (out[xs].empty()) {
          out[xs] = std::move(img);
          queue.push_back(xs);
        } else if (out[xs] != img) {
          return false;
        }
      }
    }
    return true;
  }

  bool run(std::size_t level, std::vector<AutImages>& chosen,
           std::vector<AutImages>& result) {
    if (level == gens.size()) return extend(chosen, result);
    for (const auto& cand : candidates[level]) {
      if (++nodes > budget) fail(Errc::budget_exceeded, "lift search budget exceeded");
      chosen.push_back(cand);
      if (run(level + 1, chosen, result)) return true;
      chosen.pop_back();
    }
    return false;
  }
};

} // namespace

std::optional<GroupAction> lift_outer_action(const OuterAction& a,
                                             const RunConfig& cfg) {
  const auto gens = generating_set(*a.gamma);
  if (gens.empty()) return trivial_group_action(a.gamma, a.target);

  std::vector<std::vector<AutImages>> candidates;
  for (int g : gens) {
    std::set<AutImages> seen;
    for (int t = 0; t < a.target->order(); ++t) {
      AutImages twisted(a.target->order());
      for (int e = 0; e < a.target->order(); ++e)
        twisted[e] = a.target->conj(t, a.reps[g][e]);
      seen.insert(std::move(twisted));
    }
    candidates.emplace_back(seen.begin(), seen.end());
  }
  LiftSearch search{*a.gamma, *a.target, gens, std::move(candidates),
                    cfg.search_budget};
  std::vector<AutImages> chosen, result;
  if (!search.run(0, chosen, result)) return std::nullopt;
  return make_group_action(a.gamma, a.target, std::move(result));
}

DescentReport check_descent_hypotheses(const OuterAction& a, const Subgroup& n) {
  DescentReport report;
  report.stable = is_stable(n, a);
  if (!report.stable) return report;
  auto induced = induced_quotient_action(a, n);
  auto search = supersolvable_filtration(induced.action);
  report.quotient_supersolvable = search.filtration.has_value();
  report.filtration = std::move(search.filtration);
  return report;
}

KernelClassification classify_kernel_cases(const OuterAction& a, const Subgroup& n,
                                           const RunConfig& cfg) {
  KernelClassification result;
  auto descent = check_descent_hypotheses(a, n);
  result.stable = descent.stable;
  result.quotient_supersolvable = descent.quotient_supersolvable;
  auto kernel = subgroup_as_group(n).group;
  result.kernel_complete = is_complete(kernel, cfg);
  result.kernel_almost_complete = is_almost_complete(kernel, cfg).almost_complete;
  return result;
}

} // namespace forge

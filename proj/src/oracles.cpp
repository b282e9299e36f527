#include "forge/oracles.hpp"

#include <algorithm>
#include <set>

#include "forge/error.hpp"

namespace forge::oracles {

namespace {

// cyclic subgroup generated by one element
std::vector<int> cyclic_closure(const FiniteGroup& g, int x) {
  std::vector<int> elems{0};
  int cur = x;
  while (cur != 0) {
    elems.push_back(cur);
    cur = g.mul(cur, x);
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

bool normal_set(const FiniteGroup& g, const std::vector<int>& elems) {
  for (int t = 0; t < g.order(); ++t)
    for (int e : elems)
      if (!std::binary_search(elems.begin(), elems.end(), g.conj(t, e)))
        return false;
  return true;
}

bool stable_set(const OuterAction& a, const std::vector<int>& elems) {
  for (const auto& rep : a.reps)
    for (int e : elems)
      if (!std::binary_search(elems.begin(), elems.end(), rep[e])) return false;
  return true;
}

} // namespace

std::optional<int> supersolvable_class(const OuterAction& a) {
  if (a.target->order() == 1) return 0;
  std::set<std::vector<int>> candidates;
  for (int x = 1; x < a.target->order(); ++x) {
    auto elems = cyclic_closure(*a.target, x);
    if (normal_set(*a.target, elems) && stable_set(a, elems))
      candidates.insert(std::move(elems));
  }
  std::optional<int> best;
  for (const auto& elems : candidates) {
    Subgroup n{a.target, elems};
    auto induced = induced_quotient_action(a, n);
    auto rest = supersolvable_class(induced.action);
    if (rest && (!best || *rest + 1 < *best)) best = *rest + 1;
  }
  return best;
}

std::optional<int> supersolvable_class_trivial_action(GroupPtr g) {
  auto gamma = FiniteGroup::from_trusted_table({0}, 1);
  OuterAction a{gamma, g, {perm_identity(g->order())}};
  return supersolvable_class(a);
}

std::vector<std::vector<int>> all_subgroups(const FiniteGroup& g) {
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> queue{{0}};
  seen.insert({0});
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto base = queue[head];
    for (int x = 1; x < g.order(); ++x) {
      if (std::binary_search(base.begin(), base.end(), x)) continue;
      // close base + x under multiplication
      std::vector<int> elems = base;
      elems.push_back(x);
      std::sort(elems.begin(), elems.end());
      bool grew = true;
      while (grew) {
        grew = false;
        const auto snapshot = elems;
        for (int a1 : snapshot)
          for (int b : snapshot) {
            const int p = g.mul(a1, b);
            if (!std::binary_search(elems.begin(), elems.end(), p)) {
              elems.insert(std::lower_bound(elems.begin(), elems.end(), p), p);
              grew = true;
            }
          }
      }
      if (seen.insert(elems).second) queue.push_back(std::move(elems));
    }
  }
  return {queue.begin(), queue.end()};
}

int h1_class_count_brute(const GroupAction& action) {
  return h1_count_brute(action).classes;
}

H1BruteCount h1_count_brute(const GroupAction& action) {
  const auto& gamma = *action.gamma;
  const auto& target = *action.target;
  const int gn = gamma.order();
  const int tn = target.order();

  // enumerate every map with values(identity) = identity via an odometer
  std::vector<std::vector<int>> cocycles;
  std::vector<int> values(gn, 0);
  while (true) {
    bool law = true;
    for (int a = 0; a < gn && law; ++a)
      for (int b = 0; b < gn && law; ++b)
        law = values[gamma.mul(a, b)] == target.mul(values[a], action[a][values[b]]);
    if (law) cocycles.push_back(values);
    int pos = 1;
    while (pos < gn && values[pos] == tn - 1) values[pos++] = 0;
    if (pos == gn) break;
    ++values[pos];
  }

  std::vector<bool> used(cocycles.size(), false);
  int classes = 0;
  for (std::size_t i = 0; i < cocycles.size(); ++i) {
    if (used[i]) continue;
    ++classes;
    for (std::size_t j = i; j < cocycles.size(); ++j) {
      if (used[j]) continue;
      bool equivalent = false;
      for (int g = 0; g < tn && !equivalent; ++g) {
        bool match = true;
        for (int x = 0; x < gn && match; ++x)
          match = cocycles[j][x] == target.mul(target.mul(target.inv(g), cocycles[i][x]),
                                               action[x][g]);
        equivalent = match;
      }
      if (equivalent) used[j] = true;
    }
  }
  return H1BruteCount{static_cast<int>(cocycles.size()), classes};
}

// ---- local solvability ------------------------------------------------------

namespace {

// strips even powers of p; local solvability is invariant under multiplying
// either argument by a nonzero square
long long strip_square_powers(long long v, long long p) {
  while (v % (p * p) == 0) v /= p * p;
  return v;
}

} // namespace

int hilbert_symbol_brute(long long a_num, long long a_den, long long b_num,
                         long long b_den, long long place) {
  if (a_num == 0 || b_num == 0 || a_den == 0 || b_den == 0)
    fail(Errc::invalid_input, "brute symbol needs nonzero arguments");

  if (place == 0) // real place: solvable unless both negative
    return (a_num * a_den < 0 && b_num * b_den < 0) ? -1 : 1;

  const long long p = place;
  // a/d and a*d lie in the same square class
  const long long a = strip_square_powers(a_num * a_den, p);
  const long long b = strip_square_powers(b_num * b_den, p);

  const long long mod = p == 2 ? 64 : p * p * p;
  long long am = a % mod, bm = b % mod;
  if (am < 0) am += mod;
  if (bm < 0) bm += mod;

  std::vector<bool> square_any(mod, false), square_unit(mod, false);
  for (long long z = 0; z < mod; ++z) {
    const long long zz = z * z % mod;
    square_any[zz] = true;
    if (z % p != 0) square_unit[zz] = true;
  }

  for (long long x = 0; x < mod; ++x) {
    const long long ax = am * (x * x % mod) % mod;
    for (long long y = 0; y < mod; ++y) {
      const long long val = (ax + bm * (y * y % mod)) % mod;
      const bool xy_divisible = x % p == 0 && y % p == 0;
      if (xy_divisible ? square_unit[val] : square_any[val]) return 1;
    }
  }
  return -1;
}

} // namespace forge::oracles

#include "forge/group_build.hpp"

#include <numeric>

#include "forge/error.hpp"

namespace forge {

GroupPtr trivial_group() { return cyclic_group(1); }

GroupPtr cyclic_group(int n) {
  if (n < 1) fail(Errc::invalid_input, "cyclic group needs n >= 1");
  std::vector<int> flat(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) flat[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
  return FiniteGroup::from_trusted_table(std::move(flat), n);
}

GroupPtr abelian_group(const std::vector<int>& invariants) {
  GroupPtr g = trivial_group();
  for (int n : invariants) g = direct_product(g, cyclic_group(n));
  return g;
}

GroupPtr dihedral_group(int n) {
  if (n < 1) fail(Errc::invalid_input, "dihedral group needs n >= 1");
  // elements r^i s^j, index i*2 + j; s r s^-1 = r^-1
  const int m = 2 * n;
  auto idx = [n](int i, int j) { return ((i % n + n) % n) * 2 + j; };
  std::vector<int> flat(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < 2; ++l) {
          // (r^i s^j)(r^k s^l) = r^{i + (-1)^j k} s^{j+l}
          const int rk = j == 0 ? i + k : i - k;
          flat[static_cast<std::size_t>(idx(i, j)) * m + idx(k, l)] =
              idx(rk, (j + l) % 2);
        }
  return FiniteGroup::from_trusted_table(std::move(flat), m);
}

GroupPtr dicyclic_group(int n) {
  if (n < 1) fail(Errc::invalid_input, "dicyclic group needs n >= 1");
  // elements a^i b^j with a of order 2n, b^2 = a^n, b a b^-1 = a^-1;
  // index i*2 + j for i in [0, 2n), j in {0, 1}
  const int m = 4 * n;
  const int tn = 2 * n;
  auto idx = [tn](int i, int j) { return ((i % tn + tn) % tn) * 2 + j; };
  std::vector<int> flat(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < tn; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < tn; ++k)
        for (int l = 0; l < 2; ++l) {
          // (a^i b^j)(a^k b^l): move b past a^k, then fold b^2 = a^n.
          int exp = j == 0 ? i + k : i - k;
          int bs = j + l;
          if (bs == 2) {
            exp += n;
            bs = 0;
          }
          flat[static_cast<std::size_t>(idx(i, j)) * m + idx(k, l)] = idx(exp, bs);
        }
  return FiniteGroup::from_trusted_table(std::move(flat), m);
}

GroupPtr symmetric_group(int n) {
  if (n < 1) fail(Errc::invalid_input, "symmetric group needs n >= 1");
  if (n == 1) return trivial_group();
  std::vector<Perm> gens;
  Perm t = perm_identity(n);
  std::swap(t[0], t[1]);
  gens.push_back(t);
  Perm c(n);
  for (int i = 0; i < n; ++i) c[i] = (i + 1) % n;
  gens.push_back(c);
  return FiniteGroup::from_perms(n, gens);
}

GroupPtr alternating_group(int n) {
  if (n < 3) return trivial_group();
  std::vector<Perm> gens;
  Perm three = perm_identity(n);
  three[0] = 1;
  three[1] = 2;
  three[2] = 0;
  gens.push_back(three);
  if (n > 3) {
    Perm c(n);
    if (n % 2 == 1) {
      for (int i = 0; i < n; ++i) c[i] = (i + 1) % n; // n-cycle, even for odd n
    } else {
      c[0] = 0;
      for (int i = 1; i < n; ++i) c[i] = i % (n - 1) + 1; // (n-1)-cycle
    }
    gens.push_back(c);
  }
  return FiniteGroup::from_perms(n, gens);
}

GroupPtr direct_product(GroupPtr a, GroupPtr b) {
  const int na = a->order(), nb = b->order();
  const int m = na * nb;
  auto idx = [nb](int x, int y) { return x * nb + y; };
  std::vector<int> flat(static_cast<std::size_t>(m) * m);
  for (int x1 = 0; x1 < na; ++x1)
    for (int y1 = 0; y1 < nb; ++y1)
      for (int x2 = 0; x2 < na; ++x2)
        for (int y2 = 0; y2 < nb; ++y2)
          flat[static_cast<std::size_t>(idx(x1, y1)) * m + idx(x2, y2)] =
              idx(a->mul(x1, x2), b->mul(y1, y2));
  return FiniteGroup::from_trusted_table(std::move(flat), m);
}

GroupPtr semidirect_product(GroupPtr n, GroupPtr h,
                            const std::function<AutImages(int)>& act) {
  const int nn = n->order(), nh = h->order();
  std::vector<AutImages> acts(nh);
  for (int x = 0; x < nh; ++x) {
    acts[x] = act(x);
    make_hom(n, n, acts[x]); // validates the automorphism law
    if (!is_bijective(GroupHom{n, n, acts[x]}))
      fail(Errc::not_a_hom, "action image is not bijective");
  }
  for (int x = 0; x < nh; ++x)
    for (int y = 0; y < nh; ++y)
      for (int e = 0; e < nn; ++e)
        if (acts[h->mul(x, y)][e] != acts[x][acts[y][e]])
          fail(Errc::not_a_hom, "action is not a homomorphism");

  const int m = nn * nh;
  auto idx = [nh](int a, int x) { return a * nh + x; };
  std::vector<int> flat(static_cast<std::size_t>(m) * m);
  for (int a = 0; a < nn; ++a)
    for (int x = 0; x < nh; ++x)
      for (int b = 0; b < nn; ++b)
        for (int y = 0; y < nh; ++y)
          flat[static_cast<std::size_t>(idx(a, x)) * m + idx(b, y)] =
              idx(n->mul(a, acts[x][b]), h->mul(x, y));
  return FiniteGroup::from_trusted_table(std::move(flat), m);
}

std::function<AutImages(int)> cyclic_action(GroupPtr n, int m, AutImages phi) {
  std::vector<AutImages> powers(m);
  powers[0] = perm_identity(n->order());
  for (int k = 1; k < m; ++k) {
    powers[k].resize(n->order());
    for (int e = 0; e < n->order(); ++e) powers[k][e] = phi[powers[k - 1][e]];
  }
  // phi^m must be the identity for the action to be well defined on C_m
  AutImages full(n->order());
  for (int e = 0; e < n->order(); ++e) full[e] = phi[powers[m - 1][e]];
  if (full != powers[0]) fail(Errc::not_a_hom, "automorphism order does not divide m");
  return [powers](int k) { return powers[k]; };
}

std::function<AutImages(int)> trivial_action(GroupPtr n, GroupPtr /*h*/) {
  AutImages id = perm_identity(n->order());
  return [id](int) { return id; };
}

} // namespace forge

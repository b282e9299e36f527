#include "forge/perm.hpp"

#include <algorithm>

namespace forge {

Perm perm_identity(int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return p;
}

bool perm_valid(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  for (int v : p) {
    if (v < 0 || v >= static_cast<int>(p.size()) || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

Perm perm_mul(const Perm& a, const Perm& b) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
  return r;
}

Perm perm_inverse(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

std::string perm_cycle_string(const Perm& p) {
  std::string out;
  std::vector<bool> done(p.size(), false);
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (done[s] || p[s] == static_cast<int>(s)) continue;
    out += '(';
    std::size_t i = s;
    bool first = true;
    while (!done[i]) {
      done[i] = true;
      if (!first) out += ' ';
      out += std::to_string(i);
      first = false;
      i = static_cast<std::size_t>(p[i]);
    }
    out += ')';
  }
  if (out.empty()) out = "e";
  return out;
}

} // namespace forge

#include "corpus.hpp"

#include "forge/group_build.hpp"

namespace forge::tests {

namespace {

AutImages inversion_map(const FiniteGroup& g) {
  AutImages img(g.order());
  for (int x = 0; x < g.order(); ++x) img[x] = g.inv(x);
  return img;
}

// x -> k*x on C_n (k a unit mod n)
AutImages unit_map(int n, int k) {
  AutImages img(n);
  for (int x = 0; x < n; ++x) img[x] = (x * k) % n;
  return img;
}

GroupPtr c3_semidirect_d4() {
  // C3 x| D4 where the rotation inverts and the reflection acts trivially
  auto c3 = cyclic_group(3);
  auto d4 = dihedral_group(4);
  AutImages inv = inversion_map(*c3);
  AutImages id = perm_identity(3);
  auto act = [inv, id](int h) { return (h / 2) % 2 == 1 ? inv : id; };
  return semidirect_product(c3, d4, act);
}

GroupPtr sl_2_3() {
  // Q8 x| C3, the generator cycling the three quaternion units i -> j -> k
  auto q8 = dicyclic_group(2);
  AutImages phi = {0, 3, 1, 2, 4, 7, 5, 6};
  return semidirect_product(q8, cyclic_group(3), cyclic_action(q8, 3, phi));
}

GroupPtr pauli_16() {
  // central product D4 o C4 = (D4 x C4) / <(r^2, c^2)>
  auto dp = direct_product(dihedral_group(4), cyclic_group(4));
  auto z = make_subgroup(dp, {0, 4 * 4 + 2});
  return quotient(dp, z).group;
}

std::vector<NamedGroup> build_catalog() {
  std::vector<NamedGroup> cat;
  auto add = [&cat](std::string name, GroupPtr g) {
    cat.push_back(NamedGroup{std::move(name), std::move(g)});
  };

  auto C = [](int n) { return cyclic_group(n); };

  add("C1", trivial_group());
  add("C2", C(2));
  add("C3", C(3));
  add("C4", C(4));
  add("C2xC2", abelian_group({2, 2}));
  add("C5", C(5));
  add("C6", C(6));
  add("S3", symmetric_group(3));
  add("C7", C(7));
  // order 8
  add("C8", C(8));
  add("C4xC2", abelian_group({4, 2}));
  add("C2^3", abelian_group({2, 2, 2}));
  add("D4", dihedral_group(4));
  add("Q8", dicyclic_group(2));
  // order 9
  add("C9", C(9));
  add("C3xC3", abelian_group({3, 3}));
  add("C10", C(10));
  add("D5", dihedral_group(5));
  add("C11", C(11));
  // order 12
  add("C12", C(12));
  add("C6xC2", abelian_group({6, 2}));
  add("D6", dihedral_group(6));
  add("A4", alternating_group(4));
  add("Dic3", dicyclic_group(3));
  add("C13", C(13));
  add("C14", C(14));
  add("D7", dihedral_group(7));
  add("C15", C(15));
  // order 16
  add("C16", C(16));
  add("C8xC2", abelian_group({8, 2}));
  add("C4xC4", abelian_group({4, 4}));
  add("C4xC2^2", abelian_group({4, 2, 2}));
  add("C2^4", abelian_group({2, 2, 2, 2}));
  add("D8", dihedral_group(8));
  add("Q16", dicyclic_group(4));
  {
    auto c8 = C(8);
    add("SD16", semidirect_product(c8, C(2), cyclic_action(c8, 2, unit_map(8, 3))));
    add("M4_16", semidirect_product(c8, C(2), cyclic_action(c8, 2, unit_map(8, 5))));
  }
  add("D4xC2", direct_product(dihedral_group(4), C(2)));
  add("Q8xC2", direct_product(dicyclic_group(2), C(2)));
  {
    auto c4 = C(4);
    add("C4:C4", semidirect_product(c4, C(4), cyclic_action(c4, 4, inversion_map(*c4))));
    auto v4 = abelian_group({2, 2});
    AutImages swap = {0, 2, 1, 3};
    add("C2^2:C4", semidirect_product(v4, C(4), cyclic_action(v4, 4, swap)));
  }
  add("D4oC4", pauli_16());
  add("C17", C(17));
  // order 18
  add("C18", C(18));
  add("C3xC6", abelian_group({3, 6}));
  add("D9", dihedral_group(9));
  add("S3xC3", direct_product(symmetric_group(3), C(3)));
  {
    auto c3c3 = abelian_group({3, 3});
    add("(C3xC3):C2",
        semidirect_product(c3c3, C(2), cyclic_action(c3c3, 2, inversion_map(*c3c3))));
  }
  add("C19", C(19));
  // order 20
  add("C20", C(20));
  add("C10xC2", abelian_group({10, 2}));
  add("D10", dihedral_group(10));
  add("Dic5", dicyclic_group(5));
  {
    auto c5 = C(5);
    add("F20", semidirect_product(c5, C(4), cyclic_action(c5, 4, unit_map(5, 2))));
  }
  add("C21", C(21));
  {
    auto c7 = C(7);
    add("C7:C3", semidirect_product(c7, C(3), cyclic_action(c7, 3, unit_map(7, 2))));
  }
  add("C22", C(22));
  add("D11", dihedral_group(11));
  add("C23", C(23));
  // order 24
  add("C24", C(24));
  add("C12xC2", abelian_group({12, 2}));
  add("C6xC2^2", abelian_group({6, 2, 2}));
  add("S4", symmetric_group(4));
  add("SL(2,3)", sl_2_3());
  add("A4xC2", direct_product(alternating_group(4), C(2)));
  add("D12", dihedral_group(12));
  add("Dic6", dicyclic_group(6));
  {
    auto c3 = C(3);
    add("C3:C8", semidirect_product(c3, C(8), cyclic_action(c3, 8, inversion_map(*c3))));
  }
  add("C3:D4", c3_semidirect_d4());
  add("C3xD4", direct_product(C(3), dihedral_group(4)));
  add("C3xQ8", direct_product(C(3), dicyclic_group(2)));
  add("S3xC4", direct_product(symmetric_group(3), C(4)));
  add("S3xC2^2", direct_product(symmetric_group(3), abelian_group({2, 2})));
  add("Dic3xC2", direct_product(dicyclic_group(3), C(2)));

  return cat;
}

} // namespace

const std::vector<NamedGroup>& small_group_catalog() {
  static const std::vector<NamedGroup> cat = build_catalog();
  return cat;
}

GroupPtr g_s3() {
  static GroupPtr g = symmetric_group(3);
  return g;
}
GroupPtr g_s4() {
  static GroupPtr g = symmetric_group(4);
  return g;
}
GroupPtr g_s5() {
  static GroupPtr g = symmetric_group(5);
  return g;
}
GroupPtr g_s6() {
  static GroupPtr g = symmetric_group(6);
  return g;
}
GroupPtr g_a4() {
  static GroupPtr g = alternating_group(4);
  return g;
}
GroupPtr g_a5() {
  static GroupPtr g = alternating_group(5);
  return g;
}
GroupPtr g_d4() {
  static GroupPtr g = dihedral_group(4);
  return g;
}
GroupPtr g_q8() {
  static GroupPtr g = dicyclic_group(2);
  return g;
}
GroupPtr g_c5xc5() {
  static GroupPtr g = abelian_group({5, 5});
  return g;
}

} // namespace forge::tests

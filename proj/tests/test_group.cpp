#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "corpus.hpp"
#include "forge/error.hpp"
#include "forge/group.hpp"
#include "forge/group_build.hpp"
#include "forge/oracles.hpp"

using namespace forge;
using namespace forge::tests;

TEST_CASE("permutation closure: S3 from a transposition and a 3-cycle") {
  auto g = FiniteGroup::from_perms(3, {{1, 0, 2}, {1, 2, 0}});
  CHECK(g->order() == 6);
  CHECK(g->label(0) == "e");
}

TEST_CASE("permutation closure: empty generator set gives the trivial group") {
  auto g = FiniteGroup::from_perms(3, {});
  CHECK(g->order() == 1);
}

TEST_CASE("permutation closure: A5 has order 60") {
  CHECK(g_a5()->order() == 60);
}

TEST_CASE("closure respects the order cap") {
  RunConfig cfg;
  cfg.group_cap = 30;
  CHECK_THROWS_AS(FiniteGroup::from_perms(5, {{1, 0, 2, 3, 4}, {1, 2, 3, 4, 0}}, cfg),
                  Error);
}

TEST_CASE("from_table rejects broken tables") {
  // no identity at 0
  CHECK_THROWS_AS(FiniteGroup::from_table({{1, 0}, {0, 1}}), Error);
  // non-associative Latin square (order 5 loop)
  std::vector<std::vector<int>> loop = {
      {0, 1, 2, 3, 4},
      {1, 0, 3, 4, 2},
      {2, 4, 0, 1, 3},
      {3, 2, 4, 0, 1},
      {4, 3, 1, 2, 0},
  };
  CHECK_THROWS_AS(FiniteGroup::from_table(loop), Error);
  // valid C3
  auto c3 = FiniteGroup::from_table({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
  CHECK(c3->order() == 3);
}

TEST_CASE("group axioms hold exhaustively on the whole catalog") {
  for (const auto& [name, g] : small_group_catalog()) {
    INFO(name);
    CHECK_NOTHROW(FiniteGroup::check_axioms(g->table_flat(), g->order(), true));
  }
}

TEST_CASE("conjugacy classes") {
  auto classes_sizes = [](GroupPtr g) {
    std::vector<int> out;
    for (const auto& c : conjugacy_classes(*g)) out.push_back(static_cast<int>(c.size()));
    return out;
  };
  CHECK(classes_sizes(trivial_group()) == std::vector<int>{1});
  CHECK(classes_sizes(g_s3()) == std::vector<int>{1, 2, 3});
  CHECK(classes_sizes(g_a5()) == std::vector<int>{1, 12, 12, 15, 20});

  // union is the whole group, identity alone in its class
  for (const auto& [name, g] : small_group_catalog()) {
    INFO(name);
    auto cls = conjugacy_classes(*g);
    CHECK(cls.front() == std::vector<int>{0});
    std::size_t total = 0;
    for (const auto& c : cls) total += c.size();
    CHECK(total == static_cast<std::size_t>(g->order()));
  }
}

TEST_CASE("center") {
  auto c6 = cyclic_group(6);
  CHECK(center(c6).order() == 6);
  CHECK(center(g_s3()).order() == 1);
  CHECK(center(g_d4()).order() == 2);
}

TEST_CASE("normal subgroups") {
  SUBCASE("A5 is simple") {
    auto ns = normal_subgroups(g_a5());
    REQUIRE(ns.size() == 2);
    CHECK(ns[0].order() == 1);
    CHECK(ns[1].order() == 60);
  }
  SUBCASE("S4 has 1, V4, A4, S4") {
    auto ns = normal_subgroups(g_s4());
    std::vector<int> sizes;
    for (const auto& s : ns) sizes.push_back(s.order());
    CHECK(sizes == std::vector<int>{1, 4, 12, 24});
  }
  SUBCASE("C6 has subgroups of sizes 1,2,3,6") {
    auto ns = normal_subgroups(cyclic_group(6));
    std::vector<int> sizes;
    for (const auto& s : ns) sizes.push_back(s.order());
    CHECK(sizes == std::vector<int>{1, 2, 3, 6});
  }
  SUBCASE("every reported subgroup is normal and conjugation-stable") {
    for (const auto& [name, g] : small_group_catalog()) {
      if (g->order() > 16) continue; // keep the scan quick; larger cases below
      INFO(name);
      for (const auto& s : normal_subgroups(g)) CHECK(is_normal(s));
    }
  }
  SUBCASE("exhaustive against brute-force subgroup enumeration, order <= 24") {
    for (const auto& [name, g] : small_group_catalog()) {
      INFO(name);
      std::vector<std::vector<int>> expected;
      for (auto& elems : forge::oracles::all_subgroups(*g)) {
        Subgroup s{g, elems};
        if (is_normal(s)) expected.push_back(std::move(elems));
      }
      std::sort(expected.begin(), expected.end(),
                [](const auto& a, const auto& b) {
                  if (a.size() != b.size()) return a.size() < b.size();
                  return a < b;
                });
      std::vector<std::vector<int>> got;
      for (const auto& s : normal_subgroups(g)) got.push_back(s.elements);
      CHECK(got == expected);
    }
  }
}

TEST_CASE("quotients") {
  SUBCASE("G/G is trivial") {
    auto g = g_s3();
    std::vector<int> all(g->order());
    for (int i = 0; i < g->order(); ++i) all[i] = i;
    auto q = quotient(g, make_subgroup(g, all));
    CHECK(q.group->order() == 1);
  }
  SUBCASE("S4/V4 is S3") {
    auto ns = normal_subgroups(g_s4());
    REQUIRE(ns[1].order() == 4);
    auto q = quotient(g_s4(), ns[1]);
    CHECK(q.group->order() == 6);
    CHECK(find_isomorphism(q.group, g_s3()).has_value());
    // projection kernel equals V4
    std::vector<int> kernel;
    for (int x = 0; x < g_s4()->order(); ++x)
      if (q.projection(x) == 0) kernel.push_back(x);
    CHECK(kernel == ns[1].elements);
  }
  SUBCASE("Q8 mod center is C2xC2") {
    auto z = center(g_q8());
    REQUIRE(z.order() == 2);
    auto q = quotient(g_q8(), z);
    REQUIRE(q.group->order() == 4);
    for (int x = 1; x < 4; ++x) CHECK(q.group->element_order(x) == 2);
  }
  SUBCASE("|G| = |N| * |G/N| across the catalog") {
    for (const auto& [name, g] : small_group_catalog()) {
      if (g->order() > 16) continue;
      INFO(name);
      for (const auto& s : normal_subgroups(g)) {
        auto q = quotient(g, s);
        CHECK(g->order() == s.order() * q.group->order());
      }
    }
  }
  SUBCASE("quotient by a non-normal subgroup fails") {
    auto g = g_s3();
    // a transposition generates a non-normal order-2 subgroup
    int t = -1;
    for (int x = 1; x < 6; ++x)
      if (g->element_order(x) == 2) {
        t = x;
        break;
      }
    auto h = make_subgroup(g, {0, t});
    CHECK_THROWS_AS(quotient(g, h), Error);
  }
}

TEST_CASE("is_cyclic") {
  CHECK(is_cyclic(*cyclic_group(6)));
  CHECK_FALSE(is_cyclic(*abelian_group({2, 2})));
  CHECK_FALSE(is_cyclic(*g_s3()));
}

TEST_CASE("automorphism groups") {
  SUBCASE("Aut(C5) has order 4") {
    CHECK(enumerate_automorphisms(*cyclic_group(5)).size() == 4);
  }
  SUBCASE("Aut(A5) has order 120 with Out of order 2") {
    auto ag = automorphism_group(g_a5());
    CHECK(ag.aut->order() == 120);
    CHECK(ag.inner.order() == 60);
    CHECK(ag.out->order() == 2);
    // every map is a bijective hom, Inn normal in Aut
    CHECK(is_normal(ag.inner));
    for (const auto& m : ag.maps) {
      auto h = make_hom(g_a5(), g_a5(), m);
      CHECK(is_bijective(h));
    }
  }
  SUBCASE("S5 is complete: |Aut| = |Inn| = 120") {
    auto ag = automorphism_group(g_s5());
    CHECK(ag.aut->order() == 120);
    CHECK(ag.out->order() == 1);
  }
  SUBCASE("budget exhaustion raises") {
    RunConfig cfg;
    cfg.search_budget = 1;
    CHECK_THROWS_AS(enumerate_automorphisms(*g_s4(), cfg), Error);
  }
}

TEST_CASE("composition factors") {
  auto orders = [](const std::vector<GroupPtr>& fs) {
    std::vector<int> out;
    for (const auto& f : fs) out.push_back(f->order());
    std::sort(out.begin(), out.end());
    return out;
  };
  CHECK(orders(composition_factors(cyclic_group(6))) == std::vector<int>{2, 3});
  CHECK(orders(composition_factors(g_s4())) == std::vector<int>{2, 2, 2, 3});
  CHECK(orders(composition_factors(g_a5())) == std::vector<int>{60});

  SUBCASE("factors multiply to the group order and are simple") {
    for (const auto& [name, g] : small_group_catalog()) {
      if (g->order() > 20) continue;
      INFO(name);
      long long prod = 1;
      for (const auto& f : composition_factors(g)) {
        CHECK(is_simple(f));
        prod *= f->order();
      }
      CHECK(prod == g->order());
    }
  }

  SUBCASE("factor orders are series-independent (second series via minimal step)") {
    // Independent series: refine bottom-up through a minimal nontrivial
    // normal subgroup instead of a maximal one. Runs over the whole catalog
    // plus groups up to order 120.
    std::vector<NamedGroup> pool = small_group_catalog();
    pool.push_back({"A5", g_a5()});
    pool.push_back({"S5", g_s5()});
    pool.push_back({"C5xC5", g_c5xc5()});
    pool.push_back({"S3xS3", direct_product(g_s3(), g_s3())});
    for (const auto& [name, g] : pool) {
      if (g->order() == 1) continue;
      INFO(name);
      std::multiset<int> top;
      for (const auto& f : composition_factors(g)) top.insert(f->order());
      std::multiset<int> bottom;
      GroupPtr cur = g;
      while (cur->order() > 1) {
        auto ns = normal_subgroups(cur);
        // smallest nontrivial normal subgroup, refined to a composition chunk
        const Subgroup& minimal = ns[1];
        auto sub = subgroup_as_group(minimal).group;
        for (const auto& f : composition_factors(sub)) bottom.insert(f->order());
        cur = quotient(cur, minimal).group;
      }
      CHECK(top == bottom);
    }
  }
}

TEST_CASE("subgroup core") {
  SUBCASE("core of the full group is the full group") {
    auto g = g_s3();
    std::vector<int> all(6);
    for (int i = 0; i < 6; ++i) all[i] = i;
    CHECK(subgroup_core(g, make_subgroup(g, all)).order() == 6);
  }
  SUBCASE("core of a transposition subgroup in S3 is trivial") {
    auto g = g_s3();
    int t = -1;
    for (int x = 1; x < 6; ++x)
      if (g->element_order(x) == 2) {
        t = x;
        break;
      }
    CHECK(subgroup_core(g, make_subgroup(g, {0, t})).order() == 1);
  }
  SUBCASE("core of the center of D4 is the center") {
    auto z = center(g_d4());
    CHECK(subgroup_core(g_d4(), z).elements == z.elements);
  }
}

TEST_CASE("determinism: permutation closure is byte-stable across rebuilds") {
  auto a = FiniteGroup::from_perms(4, {{1, 0, 2, 3}, {1, 2, 3, 0}});
  auto b = FiniteGroup::from_perms(4, {{1, 2, 3, 0}, {1, 0, 2, 3}});
  CHECK(a->table_flat() == b->table_flat()); // generator order is canonicalized
}

TEST_CASE("catalog is the expected size and orders are right") {
  std::map<int, int> per_order;
  for (const auto& [name, g] : small_group_catalog()) ++per_order[g->order()];
  CHECK(small_group_catalog().size() == 74);
  CHECK(per_order[8] == 5);
  CHECK(per_order[12] == 5);
  CHECK(per_order[16] == 14);
  CHECK(per_order[18] == 5);
  CHECK(per_order[20] == 5);
  CHECK(per_order[24] == 15);
}

TEST_CASE("catalog groups of equal order are pairwise non-isomorphic") {
  // spot-check the crowded orders to guard against catalog encoding slips
  const auto& cat = small_group_catalog();
  for (int order : {8, 12, 16, 18, 20, 24}) {
    std::vector<const NamedGroup*> same;
    for (const auto& ng : cat)
      if (ng.group->order() == order) same.push_back(&ng);
    for (std::size_t i = 0; i < same.size(); ++i)
      for (std::size_t j = i + 1; j < same.size(); ++j) {
        INFO(same[i]->name, " vs ", same[j]->name);
        CHECK_FALSE(find_isomorphism(same[i]->group, same[j]->group).has_value());
      }
  }
}

#ifndef FORGE_TESTS_CORPUS_HPP
#define FORGE_TESTS_CORPUS_HPP

#include <string>
#include <vector>

#include "forge/group.hpp"

namespace forge::tests {

struct NamedGroup {
  std::string name;
  GroupPtr group;
};

// All isomorphism classes of groups of order <= 24 (74 classes), constructed
// from explicit tables, permutation closures, products, semidirect products
// and central-product quotients. Duplicated isomorphism types are avoided by
// following the standard classification list order by order.
const std::vector<NamedGroup>& small_group_catalog();

// Frequently used groups.
GroupPtr g_s3();
GroupPtr g_s4();
GroupPtr g_s5();
GroupPtr g_s6();
GroupPtr g_a4();
GroupPtr g_a5();
GroupPtr g_d4();
GroupPtr g_q8();
GroupPtr g_c5xc5();

} // namespace forge::tests

#endif

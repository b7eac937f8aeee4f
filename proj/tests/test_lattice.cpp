#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "isg/catalog.hpp"
#include "isg/error.hpp"
#include "isg/subgroup_lattice.hpp"
#include "oracles.hpp"

using namespace isg;

namespace {

GeneratedGroup from_catalog(const std::string& token) {
  return catalog(parse_catalog_spec({token}));
}

// Member element sets as sorted raw image lists, for comparison with the
// oracle.
std::set<std::vector<oracle::Raw>> raw_members(const SubgroupSet& s) {
  std::set<std::vector<oracle::Raw>> out;
  for (const auto& m : s.members()) {
    std::vector<oracle::Raw> elems{oracle::raw(s.table().element(ElementTable::kIdentity))};
    for (auto i = m.nonidentity.find_first(); i != ElementSet::npos;
         i = m.nonidentity.find_next(i))
      elems.push_back(oracle::raw(s.table().element(static_cast<std::uint32_t>(i))));
    std::sort(elems.begin(), elems.end());
    out.insert(std::move(elems));
  }
  return out;
}

std::set<std::vector<oracle::Raw>> raw_oracle(const oracle::Table& t) {
  std::set<std::vector<oracle::Raw>> out;
  for (const auto& v : oracle::vertices(t)) {
    std::vector<oracle::Raw> elems;
    for (int i : v) elems.push_back(t.elements[i]);
    std::sort(elems.begin(), elems.end());
    out.insert(std::move(elems));
  }
  return out;
}

std::map<std::uint64_t, std::size_t> by_order(const SubgroupSet& s) {
  std::map<std::uint64_t, std::size_t> out;
  for (const auto& m : s.members()) ++out[m.order];
  return out;
}

}  // namespace

TEST(Lattice, CyclicSix) {
  auto s = all_subgroups(cyclic_group(6));
  EXPECT_EQ(s.size(), 2u);
  EXPECT_EQ(by_order(s), (std::map<std::uint64_t, std::size_t>{{2, 1}, {3, 1}}));
}

TEST(Lattice, KleinFour) {
  auto s = all_subgroups(direct_product({cyclic_group(2), cyclic_group(2)}));
  EXPECT_EQ(by_order(s), (std::map<std::uint64_t, std::size_t>{{2, 3}}));
}

TEST(Lattice, AlternatingFour) {
  auto s = all_subgroups(alternating_group(4));
  EXPECT_EQ(by_order(s), (std::map<std::uint64_t, std::size_t>{{2, 3}, {3, 4}, {4, 1}}));
}

TEST(Lattice, KnownSubgroupCounts) {
  // Non-trivial proper subgroups: two fewer than the full subgroup count.
  EXPECT_EQ(all_subgroups(symmetric_group(4)).size(), 28u);
  EXPECT_EQ(all_subgroups(alternating_group(5)).size(), 57u);
  EXPECT_EQ(all_subgroups(symmetric_group(5)).size(), 154u);
  EXPECT_EQ(all_subgroups(alternating_group(6)).size(), 499u);
}

TEST(Lattice, PrimeOrderSubgroups) {
  EXPECT_EQ(prime_order_subgroups(quaternion8()).size(), 1u);
  EXPECT_EQ(prime_order_subgroups(cyclic_group(7)).size(), 0u);
  auto a5 = prime_order_subgroups(alternating_group(5));
  std::map<Order, std::size_t> counts;
  for (const auto& c : a5) ++counts[c.order()];
  EXPECT_EQ(counts, (std::map<Order, std::size_t>{{2, 15}, {3, 10}, {5, 6}}));
}

TEST(Lattice, PrimeOrderIdsMatchMembers) {
  auto s = all_subgroups(symmetric_group(4));
  EXPECT_EQ(s.prime_order_ids().size(), prime_order_subgroups(symmetric_group(4)).size());
}

TEST(Lattice, FindLocatesMembers) {
  auto s = all_subgroups(alternating_group(5));
  auto h = build_chain(GeneratedGroup(5, {parse_cycles("(1,2,3)", 5), parse_cycles("(1,2)(4,5)", 5)}));
  auto id = s.find(h);
  ASSERT_TRUE(id);
  EXPECT_EQ(s[*id].order, 6u);
  EXPECT_FALSE(s.find(build_chain(GeneratedGroup(5, {parse_cycles("(1,2)", 5)}))));
}

TEST(Catalog, Constructors) {
  EXPECT_EQ(build_chain(from_catalog("alternating:5")).order(), 60);
  auto q8 = catalog(parse_catalog_spec({"quaternion8"}));
  EXPECT_EQ(q8.degree, 8u);
  EXPECT_EQ(build_chain(q8).order(), 8);
  auto v4 = catalog(parse_catalog_spec({"direct_product", "cyclic:2", "cyclic:2"}));
  EXPECT_EQ(build_chain(v4).order(), 4);
  EXPECT_EQ(all_subgroups(v4).size(), 3u);
  EXPECT_EQ(build_chain(from_catalog("elementary_abelian:3:2")).order(), 9);
  EXPECT_EQ(build_chain(from_catalog("dihedral:5")).order(), 10);
}

TEST(Catalog, Errors) {
  EXPECT_THROW(from_catalog("nosuch:3"), InvalidArgument);
  EXPECT_THROW(from_catalog("dihedral:2"), InvalidArgument);
  EXPECT_THROW(from_catalog("cyclic"), InvalidArgument);
  EXPECT_THROW(from_catalog("cyclic:x"), InvalidArgument);
  EXPECT_THROW(parse_catalog_spec({"cyclic:2", "cyclic:3"}), InvalidArgument);
}

TEST(Catalog, DocumentedOrders) {
  for (const auto& e : builtin_catalog())
    EXPECT_EQ(build_chain(catalog(e.spec)).order(), e.order) << e.spec.to_string();
}

TEST(Lattice, Budgets) {
  Budgets b;
  b.lattice = 10;
  EXPECT_THROW(all_subgroups(alternating_group(5), b), BudgetExceeded);
  b = Budgets{};
  b.group_order = 1000;
  EXPECT_THROW(all_subgroups(alternating_group(7), b), BudgetExceeded);
}

TEST(LatticeProperty, MatchesBruteForceOracle) {
  for (const auto& e : builtin_catalog()) {
    if (e.order > 200) continue;
    auto g = catalog(e.spec);
    auto s = all_subgroups(g);
    oracle::Table t(g);
    EXPECT_EQ(raw_members(s), raw_oracle(t)) << e.spec.to_string();
  }
}

TEST(LatticeProperty, StructuralInvariants) {
  for (const auto& e : builtin_catalog()) {
    if (e.order > 720) continue;
    auto s = all_subgroups(catalog(e.spec));
    std::set<std::uint64_t> keys;
    ElementSet covered(s.table().size());
    for (const auto& m : s.members()) {
      EXPECT_TRUE(keys.insert(m.key.hash).second) << e.spec.to_string();
      EXPECT_GT(m.order, 1u);
      EXPECT_LT(m.order, e.order);
      EXPECT_EQ(e.order % m.order, 0u);
      EXPECT_EQ(m.chain.order(), m.order);
      EXPECT_EQ(m.nonidentity.count() + 1, m.order);
      covered |= m.nonidentity;
    }
    bool cyclic = false;
    for (std::uint32_t x = 0; x < s.table().size(); ++x)
      cyclic = cyclic || s.table().element_order(x) == e.order;
    if (!cyclic) EXPECT_EQ(covered.count() + 1, e.order) << e.spec.to_string();
  }
}

TEST(LatticeProperty, IndependentOfGeneratorOrder) {
  std::mt19937_64 rng(31);
  for (const char* token : {"symmetric:4", "dihedral:6", "alternating:5"}) {
    auto g = from_catalog(token);
    auto base = raw_members(all_subgroups(g));
    auto shuffled = g;
    std::shuffle(shuffled.generators.begin(), shuffled.generators.end(), rng);
    shuffled.generators.push_back(shuffled.generators.front() * shuffled.generators.back());
    EXPECT_EQ(raw_members(all_subgroups(shuffled)), base) << token;
  }
}

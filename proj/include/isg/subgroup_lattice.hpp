#pragma once

// Exhaustive subgroup enumeration for small groups.
//
// The ambient group is materialized as a sorted element list with a full
// multiplication table; subgroups are bitsets over that list. Because the
// list is sorted, a subgroup's bitset is exactly its sorted element set,
// which is what the canonical key hashes.

#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <span>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "isg/budget.hpp"
#include "isg/stab_chain.hpp"

namespace isg {

using ElementSet = boost::dynamic_bitset<std::uint64_t>;

class ElementTable {
 public:
  /// Throws BudgetExceeded if the order exceeds budgets.group_order.
  static ElementTable build(const StabilizerChain& chain, const Budgets& budgets = {});

  std::size_t size() const noexcept { return elements_.size(); }
  const Permutation& element(std::uint32_t i) const { return elements_[i]; }
  std::span<const Permutation> elements() const noexcept { return elements_; }
  /// Index of p in the sorted element list; throws InvalidArgument if absent.
  std::uint32_t index_of(const Permutation& p) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
    return table_[static_cast<std::size_t>(a) * elements_.size() + b];
  }
  std::uint64_t element_order(std::uint32_t i) const { return orders_[i]; }
  static constexpr std::uint32_t kIdentity = 0;

 private:
  std::vector<Permutation> elements_;
  std::vector<std::uint16_t> table_;
  std::vector<std::uint64_t> orders_;
  std::unordered_map<Permutation, std::uint32_t, PermutationHash> index_;
};

struct CanonicalKey {
  std::uint64_t hash = 0;
  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
};

struct Subgroup {
  std::size_t id = 0;
  std::uint64_t order = 1;
  std::vector<Permutation> generators;
  StabilizerChain chain;
  CanonicalKey key;
  /// Non-identity elements, as a bitset over the ambient element table.
  ElementSet nonidentity;
};

class SubgroupSet {
 public:
  SubgroupSet(GeneratedGroup ambient, StabilizerChain ambient_chain,
              std::shared_ptr<const ElementTable> table, std::vector<Subgroup> members);

  const GeneratedGroup& ambient() const noexcept { return ambient_; }
  const StabilizerChain& ambient_chain() const noexcept { return ambient_chain_; }
  const ElementTable& table() const noexcept { return *table_; }
  std::span<const Subgroup> members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  const Subgroup& operator[](std::size_t id) const { return members_.at(id); }

  /// Vertex id of the subgroup with this element set, if it is a member.
  std::optional<std::size_t> find(const StabilizerChain& h) const;
  /// Ids of the cyclic members of prime order.
  std::vector<std::size_t> prime_order_ids() const;

 private:
  GeneratedGroup ambient_;
  StabilizerChain ambient_chain_;
  std::shared_ptr<const ElementTable> table_;
  std::vector<Subgroup> members_;
};

/// All non-trivial proper subgroups: cyclic seeds closed under joins with
/// cyclic subgroups of prime-power order, deduplicated by element set.
/// Members are ordered by (order, element set), so ids do not depend on the
/// ambient generating set.
SubgroupSet all_subgroups(const GeneratedGroup& g, const Budgets& budgets = {});

/// One chain per distinct <x> with |x| prime, excluding g itself; sorted by
/// the smallest non-identity element of each subgroup.
std::vector<StabilizerChain> prime_order_subgroups(const GeneratedGroup& g,
                                                   const Budgets& budgets = {});

}  // namespace isg

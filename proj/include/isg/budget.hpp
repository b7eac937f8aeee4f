#pragma once

#include <cstddef>
#include <cstdint>

namespace isg {

/// Resource caps. Every enumeration in the library checks the relevant cap
/// up front and throws BudgetExceeded instead of running away.
struct Budgets {
  /// Largest group whose elements may be enumerated one by one.
  std::uint64_t elements = 20'000'000;
  /// Largest ambient group for full subgroup-lattice enumeration.
  std::uint64_t group_order = 5040;
  /// Largest number of subgroups kept by the lattice enumeration.
  std::uint64_t lattice = 100'000;
  /// Cap on strong generators accumulated while building one chain.
  std::size_t strong_generators = 50'000;
};

}  // namespace isg

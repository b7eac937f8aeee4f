#pragma once

// Base and strong generating set machinery (deterministic Schreier-Sims).
//
// A chain for G is a base b_0, ..., b_{k-1} with the stabilizer tower
// G = G_0 >= G_1 >= ... >= G_k = 1, G_i fixing b_0..b_{i-1}. Level i stores
// the orbit of b_i under G_i together with explicit transversal
// representatives u with u(b_i) = orbit point, so every element factors
// uniquely as t_{k-1} * ... * t_1 * t_0 with t_i drawn from level i.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "isg/budget.hpp"
#include "isg/order.hpp"
#include "isg/perm.hpp"

namespace isg {

struct GeneratedGroup {
  std::size_t degree = 1;
  std::vector<Permutation> generators;
  std::string label;

  GeneratedGroup() = default;
  /// Throws DegreeMismatch if a generator has a different degree.
  GeneratedGroup(std::size_t degree, std::vector<Permutation> generators,
                 std::string label = {});
};

class StabilizerChain {
 public:
  struct Level {
    Point base_point = 0;
    std::vector<Permutation> generators;
    std::vector<Point> orbit;
    std::vector<std::int32_t> orbit_slot;  // point -> index into orbit, -1 if absent
    std::vector<Permutation> transversal;
    std::vector<Permutation> inverse_transversal;
  };

  struct SiftResult {
    Permutation residue;
    /// Index of the level where sifting stopped; levels().size() when the
    /// residue fixes every base point.
    std::size_t level;
  };

  /// Trivial group of the given degree.
  explicit StabilizerChain(std::size_t degree = 1);

  static StabilizerChain build(const GeneratedGroup& group,
                               const Budgets& budgets = {});

  std::size_t degree() const noexcept { return degree_; }
  const Order& order() const noexcept { return order_; }
  std::span<const Level> levels() const noexcept { return levels_; }
  std::vector<Point> base() const;
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  bool is_trivial() const noexcept { return levels_.empty(); }

  /// Membership by sifting. Throws DegreeMismatch.
  bool contains(const Permutation& p) const;
  /// Membership of a raw image array of length degree(); no checks.
  bool contains_images(std::span<const Point> images) const noexcept;

  SiftResult sift(Permutation p, std::size_t from_level = 0) const;

  /// Number of top-level cosets (orbit size of the first base point).
  std::size_t top_coset_count() const noexcept {
    return levels_.empty() ? 1 : levels_.front().orbit.size();
  }

  /// Calls visit(images) for each element exactly once, in a fixed order,
  /// until visit returns false. Returns false iff stopped early.
  template <typename Visit>
  bool for_each_element(Visit&& visit) const {
    for (std::size_t c = 0; c < top_coset_count(); ++c)
      if (!for_each_in_coset(c, visit)) return false;
    return true;
  }

  /// Same as for_each_element restricted to the elements whose top-level
  /// transversal factor is the coset-th representative.
  template <typename Visit>
  bool for_each_in_coset(std::size_t coset, Visit&& visit) const {
    if (levels_.empty()) {
      Permutation id(degree_);
      return visit(id.images());
    }
    std::vector<std::vector<Point>> suffix(levels_.size(),
                                           std::vector<Point>(degree_));
    auto top = levels_[0].transversal[coset].images();
    std::copy(top.begin(), top.end(), suffix[0].begin());
    return descend(1, suffix, visit);
  }

 private:
  template <typename Visit>
  bool descend(std::size_t depth, std::vector<std::vector<Point>>& suffix,
               Visit& visit) const {
    if (depth == levels_.size()) return visit(std::span<const Point>(suffix[depth - 1]));
    for (const Permutation& t : levels_[depth].transversal) {
      compose_into(t.images(), suffix[depth - 1], suffix[depth]);
      if (!descend(depth + 1, suffix, visit)) return false;
    }
    return true;
  }

  friend class ChainBuilder;

  std::size_t degree_;
  std::vector<Level> levels_;
  std::vector<Permutation> generators_;
  Order order_ = 1;
};

// --- Operations -----------------------------------------------------------

StabilizerChain build_chain(const GeneratedGroup& group,
                            const Budgets& budgets = {});

bool is_member(const StabilizerChain& chain, const Permutation& p);

/// Every element of the chain's group. Throws BudgetExceeded when the order
/// exceeds `budget`.
std::vector<Permutation> elements(const StabilizerChain& chain,
                                  std::uint64_t budget = Budgets{}.elements);

/// Chain of <group, extra>.
StabilizerChain join(const GeneratedGroup& group,
                     std::span<const Permutation> extra,
                     const Budgets& budgets = {});

enum class IntersectionMethod { kSiftEnumeration, kOrderProduct, kElementSet };

std::string to_string(IntersectionMethod method);

struct TrivialityReport {
  bool trivial = true;
  /// Present iff !trivial and the method produced an explicit element.
  std::optional<Permutation> witness;
  IntersectionMethod method = IntersectionMethod::kSiftEnumeration;
  /// Elements of the smaller group that were sifted.
  std::uint64_t elements_checked = 0;
};

/// Decides whether |h1 ∩ h2| = 1 by enumerating the smaller group and
/// sifting each element into the larger one, stopping at the first
/// non-identity member. The witness is the first hit in enumeration order,
/// independent of the thread count.
TrivialityReport intersect_trivial(const StabilizerChain& h1,
                                   const StabilizerChain& h2,
                                   std::uint64_t budget = Budgets{}.elements,
                                   std::size_t threads = 1);

/// True iff every generator of h1 lies in h2.
bool subgroup_leq(const StabilizerChain& h1, const StabilizerChain& h2);

/// Equal orders and h1 <= h2.
bool subgroup_equal(const StabilizerChain& h1, const StabilizerChain& h2);

}  // namespace isg

#pragma once

// The intersection graph of a group: one vertex per non-trivial proper
// subgroup, an edge whenever two subgroups share a non-identity element.
// Adjacency rows are bitsets so that breadth-first search advances a whole
// frontier with word-parallel ORs.

#include <cstdint>
#include <limits>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "isg/subgroup_lattice.hpp"

namespace isg {

inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

enum class AdjacencyMethod {
  kElementSet,  // bitset intersection of the materialized element sets
  kSift,        // intersect_trivial on the stabilizer chains
};

struct GraphOptions {
  AdjacencyMethod method = AdjacencyMethod::kElementSet;
  std::size_t threads = 1;
  std::uint64_t element_budget = Budgets{}.elements;
};

struct DiameterResult {
  bool connected = true;
  std::uint32_t value = 0;  // meaningful only when connected

  std::string to_string() const {
    return connected ? std::to_string(value) : "disconnected";
  }
  friend bool operator==(const DiameterResult&, const DiameterResult&) = default;
};

class IntersectionGraph {
 public:
  static IntersectionGraph build(const SubgroupSet& subgroups, const GraphOptions& options = {});

  std::size_t vertex_count() const noexcept { return rows_.size(); }
  std::size_t edge_count() const noexcept { return edges_; }
  bool adjacent(std::size_t u, std::size_t v) const;
  const ElementSet& neighbors(std::size_t u) const { return rows_.at(u); }
  std::uint64_t vertex_order(std::size_t u) const { return orders_.at(u); }
  bool is_prime_order_vertex(std::size_t u) const;

  const std::vector<std::size_t>& component_labels() const noexcept { return components_; }
  std::size_t component_count() const noexcept { return component_count_; }
  /// A graph without vertices counts as disconnected: it has no diameter.
  bool connected() const noexcept { return component_count_ == 1; }
  bool complete() const noexcept;

  /// Distances from `source`, kUnreachable across components. Cached.
  const std::vector<std::uint32_t>& distances_from(std::size_t source) const;

  /// Adjacency list as JSON: vertex id, subgroup order, generators, neighbor ids.
  nlohmann::ordered_json to_json(const SubgroupSet& subgroups) const;

 private:
  std::vector<std::uint32_t> bfs(std::size_t source) const;

  std::vector<ElementSet> rows_;
  std::vector<std::uint64_t> orders_;
  std::size_t edges_ = 0;
  std::vector<std::size_t> components_;
  std::size_t component_count_ = 0;

  mutable std::vector<std::optional<std::vector<std::uint32_t>>> distance_cache_;
  mutable std::unique_ptr<std::mutex> cache_mutex_ = std::make_unique<std::mutex>();
};

IntersectionGraph build_graph(const SubgroupSet& subgroups, const GraphOptions& options = {});

/// Maximum eccentricity over all vertices, from a BFS at every vertex.
DiameterResult diameter(const IntersectionGraph& graph, std::size_t threads = 1);

/// Shortest path length, kUnreachable across components. Throws
/// InvalidArgument for unknown vertex ids.
std::uint32_t distance(const IntersectionGraph& graph, std::size_t u, std::size_t v);

struct Diam2Report {
  /// True iff no pair of prime-order elements generates the group.
  bool holds = true;
  std::size_t prime_order_subgroups = 0;
  std::size_t pairs_checked = 0;
  /// A generating pair when !holds.
  std::optional<std::pair<Permutation, Permutation>> generating_pair;
};

/// Iterates over unordered pairs of distinct prime-order cyclic subgroups and
/// stops at the first pair whose join is the whole group.
Diam2Report diam2_criterion(const GeneratedGroup& g, const Budgets& budgets = {});

struct PrimeReductionReport {
  DiameterResult diameter;
  std::size_t prime_order_vertices = 0;
  /// Max distance over (not necessarily distinct) prime-order vertex pairs;
  /// kUnreachable if two of them lie in different components.
  std::uint32_t prime_max = 0;
  /// connected and prime_max == diameter.
  bool equal = false;
  /// Connected graph where the reduction to prime-order subgroups fails,
  /// e.g. Q_8 (one prime-order vertex, diameter 1).
  bool degenerate = false;
};

PrimeReductionReport prime_reduction_check(const IntersectionGraph& graph,
                                           std::size_t threads = 1);

/// Lattice, graph and derived metrics of one small group.
struct GroupAnalysis {
  SubgroupSet subgroups;
  IntersectionGraph graph;
  DiameterResult diameter;
};

GroupAnalysis analyze_group(const GeneratedGroup& g, const Budgets& budgets = {},
                            std::size_t threads = 1);

}  // namespace isg

#include "isg/intersection_graph.hpp"

#include <algorithm>

#include "isg/error.hpp"
#include "isg/group_io.hpp"
#include "isg/parallel.hpp"

namespace isg {
namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

IntersectionGraph IntersectionGraph::build(const SubgroupSet& subgroups,
                                           const GraphOptions& options) {
  IntersectionGraph g;
  const std::size_t n = subgroups.size();
  auto members = subgroups.members();
  g.rows_.assign(n, ElementSet(n));
  g.orders_.reserve(n);
  for (const auto& m : members) g.orders_.push_back(m.order);

  // Upper triangle in parallel (row u owns bits v > u), then mirrored.
  parallel_for(n, options.threads, [&](std::size_t u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      bool meet = false;
      if (options.method == AdjacencyMethod::kElementSet) {
        meet = members[u].nonidentity.intersects(members[v].nonidentity);
      } else {
        try {
          meet = !intersect_trivial(members[u].chain, members[v].chain,
                                    options.element_budget)
                      .trivial;
        } catch (const BudgetExceeded& e) {
          throw BudgetExceeded("vertices " + std::to_string(u) + " and " +
                               std::to_string(v) + ": " + e.what());
        }
      }
      if (meet) g.rows_[u].set(v);
    }
  });
  for (std::size_t u = 0; u < n; ++u) {
    for (auto v = g.rows_[u].find_next(u); v != ElementSet::npos; v = g.rows_[u].find_next(v)) {
      g.rows_[v].set(u);
      ++g.edges_;
    }
  }

  g.components_.assign(n, n);
  for (std::size_t s = 0; s < n; ++s) {
    if (g.components_[s] != n) continue;
    std::vector<std::size_t> stack{s};
    g.components_[s] = g.component_count_;
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      for (auto v = g.rows_[u].find_first(); v != ElementSet::npos; v = g.rows_[u].find_next(v)) {
        if (g.components_[v] == n) {
          g.components_[v] = g.component_count_;
          stack.push_back(v);
        }
      }
    }
    ++g.component_count_;
  }
  g.distance_cache_.resize(n);
  return g;
}

bool IntersectionGraph::adjacent(std::size_t u, std::size_t v) const {
  if (u >= vertex_count() || v >= vertex_count())
    throw InvalidArgument("unknown vertex id");
  return rows_[u][v];
}

bool IntersectionGraph::is_prime_order_vertex(std::size_t u) const {
  return is_prime(vertex_order(u));
}

bool IntersectionGraph::complete() const noexcept {
  const std::size_t n = vertex_count();
  return edges_ == n * (n - (n > 0 ? 1 : 0)) / 2;
}

std::vector<std::uint32_t> IntersectionGraph::bfs(std::size_t source) const {
  const std::size_t n = vertex_count();
  std::vector<std::uint32_t> dist(n, kUnreachable);
  ElementSet visited(n), next(n);
  std::vector<std::size_t> frontier{source};
  dist[source] = 0;
  visited.set(source);
  for (std::uint32_t level = 1; !frontier.empty(); ++level) {
    next.reset();
    for (std::size_t u : frontier) next |= rows_[u];
    next -= visited;
    visited |= next;
    frontier.clear();
    for (auto v = next.find_first(); v != ElementSet::npos; v = next.find_next(v)) {
      dist[v] = level;
      frontier.push_back(v);
    }
  }
  return dist;
}

const std::vector<std::uint32_t>& IntersectionGraph::distances_from(std::size_t source) const {
  if (source >= vertex_count()) throw InvalidArgument("unknown vertex id");
  {
    std::lock_guard lock(*cache_mutex_);
    if (distance_cache_[source]) return *distance_cache_[source];
  }
  auto dist = bfs(source);
  std::lock_guard lock(*cache_mutex_);
  if (!distance_cache_[source]) distance_cache_[source] = std::move(dist);
  return *distance_cache_[source];
}

nlohmann::ordered_json IntersectionGraph::to_json(const SubgroupSet& subgroups) const {
  nlohmann::ordered_json j;
  j["vertex_count"] = vertex_count();
  j["edge_count"] = edge_count();
  auto& vertices = j["vertices"] = nlohmann::ordered_json::array();
  for (std::size_t u = 0; u < vertex_count(); ++u) {
    nlohmann::ordered_json v;
    v["id"] = u;
    v["order"] = orders_[u];
    v["generators"] = to_cycle_strings(subgroups[u].generators);
    std::vector<std::size_t> nbrs;
    for (auto w = rows_[u].find_first(); w != ElementSet::npos; w = rows_[u].find_next(w))
      nbrs.push_back(w);
    v["neighbors"] = nbrs;
    vertices.push_back(std::move(v));
  }
  return j;
}

IntersectionGraph build_graph(const SubgroupSet& subgroups, const GraphOptions& options) {
  return IntersectionGraph::build(subgroups, options);
}

DiameterResult diameter(const IntersectionGraph& graph, std::size_t threads) {
  if (!graph.connected()) return {false, 0};
  const std::size_t n = graph.vertex_count();
  std::vector<std::uint32_t> ecc(n, 0);
  parallel_for(n, threads, [&](std::size_t s) {
    const auto& d = graph.distances_from(s);
    ecc[s] = *std::max_element(d.begin(), d.end());
  });
  return {true, *std::max_element(ecc.begin(), ecc.end())};
}

std::uint32_t distance(const IntersectionGraph& graph, std::size_t u, std::size_t v) {
  if (v >= graph.vertex_count()) throw InvalidArgument("unknown vertex id");
  return graph.distances_from(u)[v];
}

Diam2Report diam2_criterion(const GeneratedGroup& g, const Budgets& budgets) {
  StabilizerChain whole = build_chain(g, budgets);
  std::vector<StabilizerChain> primes = prime_order_subgroups(g, budgets);
  Diam2Report report;
  report.prime_order_subgroups = primes.size();
  for (std::size_t a = 0; a < primes.size(); ++a) {
    for (std::size_t b = a + 1; b < primes.size(); ++b) {
      ++report.pairs_checked;
      const Permutation& x = primes[a].generators().front();
      const Permutation& y = primes[b].generators().front();
      GeneratedGroup pair(g.degree, {x, y});
      if (build_chain(pair, budgets).order() == whole.order()) {
        report.holds = false;
        report.generating_pair = {x, y};
        return report;
      }
    }
  }
  return report;
}

PrimeReductionReport prime_reduction_check(const IntersectionGraph& graph,
                                           std::size_t threads) {
  PrimeReductionReport report;
  report.diameter = diameter(graph, threads);
  std::vector<std::size_t> primes;
  for (std::size_t u = 0; u < graph.vertex_count(); ++u)
    if (graph.is_prime_order_vertex(u)) primes.push_back(u);
  report.prime_order_vertices = primes.size();
  for (std::size_t a : primes) {
    const auto& d = graph.distances_from(a);
    for (std::size_t b : primes) report.prime_max = std::max(report.prime_max, d[b]);
  }
  report.equal = report.diameter.connected && report.prime_max == report.diameter.value;
  report.degenerate = report.diameter.connected && !report.equal;
  return report;
}

GroupAnalysis analyze_group(const GeneratedGroup& g, const Budgets& budgets,
                            std::size_t threads) {
  SubgroupSet subgroups = all_subgroups(g, budgets);
  GraphOptions options;
  options.threads = threads;
  options.element_budget = budgets.elements;
  IntersectionGraph graph = build_graph(subgroups, options);
  DiameterResult d = diameter(graph, threads);
  return {std::move(subgroups), std::move(graph), d};
}

}  // namespace isg

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "isg/catalog.hpp"
#include "isg/certifier.hpp"
#include "isg/intersection_graph.hpp"
#include "isg/group_io.hpp"
#include "isg/witness.hpp"

using namespace isg;

namespace {

const std::filesystem::path kData = ISG_DATA_DIR;

constexpr double kA5Seconds = 10;
constexpr double kA7Seconds = 15 * 60;
constexpr double kSmallSeconds = 1;
constexpr double kA13Seconds = 2 * 60;
constexpr double kA23SerialSeconds = 15 * 60;
constexpr double kA23FourThreadSeconds = 5 * 60;
constexpr double kNormalizerPairSeconds = 30;
constexpr std::uint64_t kCatalogMaxOrder = 2520;
constexpr std::uint64_t kSiftOracleMaxOrder = 720;

using Clock = std::chrono::steady_clock;

double since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << (detail.tellp() > 0 ? "; " : "") << "FAILED " << what;
    }
  }
  void note(const std::string& what) { detail << (detail.tellp() > 0 ? "; " : "") << what; }
};

void within(Outcome& o, double seconds, double limit) {
  std::ostringstream s;
  s.precision(3);
  s << seconds << "s < " << limit << "s";
  o.require(seconds < limit, s.str());
  if (seconds < limit) o.note(s.str());
}

bool run_criterion(int number, const std::string& title, const std::function<void(Outcome&)>& body) {
  Outcome o;
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  std::cout << (o.pass ? "PASS" : "FAIL") << " " << number << " " << title << ": "
            << o.detail.str() << std::endl;
  return o.pass;
}

WitnessCase witness(const std::string& name) {
  return load_witness_file(kData / "witnesses" / (name + ".json"));
}

int certify_exit(const WitnessCase& w, const std::string& tag) {
  auto path = std::filesystem::temp_directory_path() / ("isg_acceptance_" + tag + ".json");
  {
    std::ofstream out(path);
    out << witness_to_json(w).dump(2);
  }
  std::ostringstream out, err;
  int code = cli::run_cli({"--no-timings", "certify", path.string()}, out, err);
  std::filesystem::remove(path);
  return code;
}

std::string fact_order(const Certificate& c, const std::string& id) {
  const Fact* f = c.find(id);
  return f ? f->detail.value("order", std::string("?")) : "missing";
}

void check_cross_pairs(Outcome& o, const Certificate& c, std::size_t expected) {
  std::size_t pairs = 0, trivial = 0;
  for (const auto& f : c.facts)
    if (f.id.starts_with("intersection[")) {
      ++pairs;
      trivial += f.holds;
    }
  o.require(pairs == expected && trivial == pairs,
            std::to_string(trivial) + "/" + std::to_string(pairs) + " cross pairs trivial");
  if (pairs == expected && trivial == pairs) o.note(std::to_string(pairs) + " cross pairs trivial");
  const Fact* join = c.find("join_is_ambient");
  o.require(join && join->holds, "<g_a, g_b> is the ambient group");
}

}  // namespace

int main() {
  bool all = true;

  all &= run_criterion(1, "A5 diameter", [](Outcome& o) {
    auto start = Clock::now();
    auto a = analyze_group(alternating_group(5));
    double t = since(start);
    o.require(a.graph.vertex_count() == 57, "57 vertices");
    o.require(a.diameter == DiameterResult{true, 3}, "diameter 3");
    o.note("57 vertices, diameter " + a.diameter.to_string());
    within(o, t, kA5Seconds);
  });

  all &= run_criterion(2, "A6 and A7 diameters", [](Outcome& o) {
    for (std::size_t n : {6u, 7u}) {
      auto start = Clock::now();
      auto a = analyze_group(alternating_group(n));
      double t = since(start);
      o.require(a.diameter == DiameterResult{true, 3}, "A" + std::to_string(n) + " diameter 3");
      o.note("A" + std::to_string(n) + ": " + std::to_string(a.graph.vertex_count()) +
             " vertices, diameter " + a.diameter.to_string());
      if (n == 7) within(o, t, kA7Seconds);
    }
  });

  all &= run_criterion(3, "C2 x C2 disconnected", [](Outcome& o) {
    auto start = Clock::now();
    auto a = analyze_group(direct_product({cyclic_group(2), cyclic_group(2)}));
    double t = since(start);
    o.require(a.graph.vertex_count() == 3 && a.graph.edge_count() == 0, "3 isolated vertices");
    o.require(!a.diameter.connected, "disconnected");
    o.note("3 isolated vertices");
    within(o, t, kSmallSeconds);
  });

  all &= run_criterion(4, "Q8 complete, reduction degenerate", [](Outcome& o) {
    auto start = Clock::now();
    auto a = analyze_group(quaternion8());
    auto r = prime_reduction_check(a.graph);
    double t = since(start);
    o.require(a.graph.complete() && a.diameter == DiameterResult{true, 1}, "complete, diameter 1");
    o.require(r.degenerate && r.prime_max == 0 && !r.equal, "degeneracy flagged (M = 0, D = 1)");
    o.note("complete, diameter 1, prime-order max 0");
    within(o, t, kSmallSeconds);
  });

  all &= run_criterion(5, "guarded diameter checks over the catalog", [](Outcome& o) {
    std::size_t groups = 0, violations = 0;
    for (const auto& e : builtin_catalog()) {
      if (e.order > kCatalogMaxOrder) continue;
      ++groups;
      auto g = catalog(e.spec);
      auto a = analyze_group(g);
      bool criterion = diam2_criterion(g).holds;
      auto name = e.spec.to_string();
      if (a.diameter == DiameterResult{true, 2} && !criterion) {
        ++violations;
        o.require(false, name + " (a)");
      }
      if (criterion && a.diameter.connected && a.graph.vertex_count() >= 2 &&
          !a.graph.complete() && a.diameter.value != 2) {
        ++violations;
        o.require(false, name + " (b)");
      }
      if (a.diameter.connected && a.diameter.value >= 3 && !prime_reduction_check(a.graph).equal) {
        ++violations;
        o.require(false, name + " (c)");
      }
    }
    o.note(std::to_string(groups) + " groups, " + std::to_string(violations) + " violations");
  });

  all &= run_criterion(6, "sift intersection vs element sets", [](Outcome& o) {
    std::size_t groups = 0, pairs = 0, disagreements = 0;
    GraphOptions sift;
    sift.method = AdjacencyMethod::kSift;
    for (const auto& e : builtin_catalog()) {
      if (e.order > kSiftOracleMaxOrder) continue;
      ++groups;
      auto s = all_subgroups(catalog(e.spec));
      auto by_sets = build_graph(s);
      auto by_sift = build_graph(s, sift);
      for (std::size_t u = 0; u < s.size(); ++u) {
        pairs += u;
        auto diff = by_sets.neighbors(u) ^ by_sift.neighbors(u);
        disagreements += diff.count();
      }
      o.require(disagreements == 0, e.spec.to_string());
    }
    o.note(std::to_string(groups) + " groups, " + std::to_string(pairs) + " pairs, " +
           std::to_string(disagreements / 2) + " disagreements");
  });

  all &= run_criterion(7, "A13 witness", [](Outcome& o) {
    auto start = Clock::now();
    auto c = distance_class(witness("a13_distance4"));
    double t = since(start);
    o.require(c.conclusion == Conclusion::kFourConditional && c.verified,
              "distance 4 (conditional), got " + to_string(c.conclusion));
    o.require(fact_order(c, "overgroups_a[N(A)].order") == "78" &&
                  fact_order(c, "overgroups_b[N(B)].order") == "78",
              "normalizers of order 78");
    bool psl = true;
    for (const auto& f : c.facts)
      if (f.id.starts_with("overgroups_") && f.id.find("PSL") != std::string::npos &&
          f.id.ends_with(".order"))
        psl = psl && f.holds && f.detail.value("order", std::string()) == "5616";
    o.require(psl, "PSL(3,3) copies of order 5616");
    check_cross_pairs(o, c, 25);
    o.note(to_string(c.conclusion));
    within(o, t, kA13Seconds);
  });

  all &= run_criterion(8, "A23 witness", [](Outcome& o) {
    auto w = witness("a23_distance4");
    for (std::size_t threads : {1u, 4u}) {
      auto start = Clock::now();
      auto c = distance_class(w, {Budgets{}.elements, threads});
      double t = since(start);
      o.require(c.conclusion == Conclusion::kFourConditional && c.verified,
                "distance 4 (conditional), got " + to_string(c.conclusion));
      std::size_t m23 = 0, normalizers = 0;
      for (const auto& f : c.facts) {
        if (!f.id.starts_with("overgroups_") || !f.id.ends_with(".order")) continue;
        auto order = f.detail.value("order", std::string());
        m23 += f.holds && order == "10200960";
        normalizers += f.holds && order == "253";
      }
      o.require(m23 == 4 && normalizers == 2, "two M23 copies and a 23:11 normalizer per side");
      std::uint64_t max_checked = 0;
      for (const auto& f : c.facts)
        if (f.id.starts_with("intersection[") && f.detail.contains("elements_checked"))
          max_checked = std::max(max_checked, f.detail["elements_checked"].get<std::uint64_t>());
      o.require(max_checked <= 10200960, "at most |M23| elements sifted per pair");
      check_cross_pairs(o, c, 9);
      o.note(std::to_string(threads) + " thread(s)");
      within(o, t, threads == 1 ? kA23SerialSeconds : kA23FourThreadSeconds);
    }
  });

  all &= run_criterion(9, "order-product counting", [](Outcome& o) {
    o.require(order_product_forces_intersection(7920, 7920, 19958400), "7920^2 > |A11|");
    o.require(order_product_forces_intersection(10, 10, 60), "10^2 > 60");
    o.require(order_product_forces_intersection(120, 120, 2520), "120^2 > 2520");
    o.note("3/3 examples");
  });

  all &= run_criterion(10, "cycle normalizer pairs", [](Outcome& o) {
    auto start = Clock::now();
    for (std::size_t n : {19u, 29u}) {
      auto c = verify_theorem2_pair(n);
      const Fact* meet = c.find("intersection[N(A)|N(B)]");
      const Fact* join = c.find("join_is_ambient");
      std::string tag = "n = " + std::to_string(n);
      if (meet && !meet->holds && meet->detail.contains("witness"))
        o.require(false, tag + ": normalizers share " + meet->detail["witness"].get<std::string>());
      else
        o.require(meet && meet->holds, tag + ": normalizers meet trivially");
      o.require(join && join->holds, tag + ": pair generates A_n");
      if (meet && meet->holds && join && join->holds) o.note(tag + " confirmed");
    }
    for (std::size_t n : {19u, 23u, 29u})
      o.require(is_theorem2_prime(n).admissible, std::to_string(n) + " admissible");
    const std::pair<std::size_t, std::pair<std::uint64_t, std::uint64_t>> reps[] = {
        {5, {4, 2}}, {7, {2, 3}}, {13, {3, 3}}, {17, {16, 2}}};
    for (const auto& [n, rep] : reps) {
      auto a = is_theorem2_prime(n);
      o.require(!a.admissible && a.representation == rep, std::to_string(n) + " representation");
    }
    auto eleven = is_theorem2_prime(11);
    o.require(!eleven.admissible && !eleven.representation, "11 excluded");
    o.note("admissibility checks done");
    within(o, since(start), kNormalizerPairSeconds);
  });

  all &= run_criterion(11, "tampered witnesses", [](Outcome& o) {
    std::size_t flipped = 0, total = 0;
    for (const char* name : {"a13_distance4", "a23_distance4", "a11_diam3_counting", "thm2_n19"}) {
      auto base = witness(name);
      o.require(certify_exit(base, name) == cli::kOk, std::string(name) + " certifies untouched");
      const auto& target = base.overgroups_a.front();
      std::string prefix = "overgroups_a[" + target.label + "]";
      auto expect = [&](WitnessCase w, const std::string& how, const std::string& fact) {
        ++total;
        auto c = distance_class(w);
        bool ok = certify_exit(w, name) == cli::kRefuted &&
                  c.conclusion == Conclusion::kInvalidWitness && c.decisive_fact == fact;
        flipped += ok;
        o.require(ok, std::string(name) + " " + how + " -> " + c.decisive_fact);
      };

      auto wrong_gen = base;
      wrong_gen.overgroups_a.front().generators.front() = parse_cycles("(1,2,3)", base.degree);
      expect(wrong_gen, "wrong generator", prefix + ".order");

      auto non_containing = base;
      non_containing.overgroups_a.front().generators = base.overgroups_b.front().generators;
      non_containing.overgroups_a.front().claimed_order = base.overgroups_b.front().claimed_order;
      expect(non_containing, "non-containing overgroup", prefix + ".contains_g_a");

      auto wrong_order = base;
      auto& claimed = wrong_order.overgroups_a.front().claimed_order;
      claimed = build_chain(GeneratedGroup(base.degree, target.generators)).order() / 2;
      expect(wrong_order, "wrong claimed order", prefix + ".order");
    }
    o.note(std::to_string(flipped) + "/" + std::to_string(total) + " tampered witnesses rejected");
  });

  return all ? 0 : 1;
}

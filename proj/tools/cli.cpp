#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "isg/catalog.hpp"
#include "isg/certifier.hpp"
#include "isg/error.hpp"
#include "isg/group_io.hpp"
#include "isg/intersection_graph.hpp"
#include "isg/witness.hpp"

namespace isg::cli {
namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

struct Config {
  std::vector<std::string> catalog;
  std::string file;
  std::uint64_t budget_elements = Budgets{}.elements;
  std::uint64_t budget_lattice = Budgets{}.lattice;
  std::uint64_t budget_group_order = Budgets{}.group_order;
  std::size_t threads = 1;
  std::string format = "human";
  bool timings = true;
  std::string export_graph;
  std::string witness;
  std::size_t n = 0;

  Budgets budgets() const {
    Budgets b;
    b.elements = budget_elements;
    b.lattice = budget_lattice;
    b.group_order = budget_group_order;
    return b;
  }
  bool json() const { return format == "json"; }
};

// Human output is the JSON document flattened to "key: value" lines, so the
// two formats always carry the same fields.
void print_human(std::ostream& out, const Json& j, const std::string& indent = "") {
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      out << indent << key << ":\n";
      print_human(out, value, indent + "  ");
    } else if (value.is_array() && !value.empty() && value.front().is_object()) {
      out << indent << key << ":\n";
      for (const auto& item : value) {
        out << indent << "  -\n";
        print_human(out, item, indent + "    ");
      }
    } else if (value.is_string()) {
      out << indent << key << ": " << value.get<std::string>() << '\n';
    } else if (value.is_null()) {
      out << indent << key << ": none\n";
    } else {
      out << indent << key << ": " << value.dump() << '\n';
    }
  }
}

void emit(const Config& cfg, std::ostream& out, const Json& j) {
  if (cfg.json())
    out << j.dump(2) << '\n';
  else
    print_human(out, j);
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

GeneratedGroup load_group(const Config& cfg, std::string& name) {
  if (cfg.catalog.empty() == cfg.file.empty())
    throw InvalidArgument("give exactly one of --catalog and --file");
  if (!cfg.file.empty()) {
    name = cfg.file;
    return load_group_file(cfg.file);
  }
  CatalogSpec spec = parse_catalog_spec(cfg.catalog);
  name = spec.to_string();
  return catalog(spec);
}

int cmd_order(const Config& cfg, std::ostream& out) {
  std::string name;
  GeneratedGroup g = load_group(cfg, name);
  StabilizerChain chain = build_chain(g, cfg.budgets());
  Json j;
  j["group"] = name;
  j["degree"] = g.degree;
  j["order"] = chain.order().str();
  emit(cfg, out, j);
  return kOk;
}

int cmd_diameter(const Config& cfg, std::ostream& out) {
  std::string name;
  auto start = Clock::now();
  GeneratedGroup g = load_group(cfg, name);
  GroupAnalysis a = analyze_group(g, cfg.budgets(), cfg.threads);
  Json j;
  j["group"] = name;
  j["order"] = build_chain(g, cfg.budgets()).order().str();
  j["vertices"] = a.graph.vertex_count();
  j["edges"] = a.graph.edge_count();
  j["components"] = a.graph.component_count();
  j["diameter"] = a.diameter.to_string();
  if (cfg.timings) j["seconds"] = seconds_since(start);
  if (!cfg.export_graph.empty()) {
    std::ofstream file(cfg.export_graph);
    file << a.graph.to_json(a.subgroups).dump(2) << '\n';
    if (!file) throw Error("cannot write " + cfg.export_graph);
    j["graph_file"] = cfg.export_graph;
  }
  emit(cfg, out, j);
  return kOk;
}

int cmd_diam2(const Config& cfg, std::ostream& out) {
  std::string name;
  GeneratedGroup g = load_group(cfg, name);
  Diam2Report r = diam2_criterion(g, cfg.budgets());
  Json j;
  j["group"] = name;
  j["criterion"] = r.holds;
  j["prime_order_subgroups"] = r.prime_order_subgroups;
  j["pairs_checked"] = r.pairs_checked;
  j["generating_pair"] = r.generating_pair
                             ? Json::array({r.generating_pair->first.to_cycles(),
                                            r.generating_pair->second.to_cycles()})
                             : Json(nullptr);
  try {
    GroupAnalysis a = analyze_group(g, cfg.budgets(), cfg.threads);
    PrimeReductionReport p = prime_reduction_check(a.graph, cfg.threads);
    j["vertices"] = a.graph.vertex_count();
    j["diameter"] = a.diameter.to_string();
    j["prime_order_max_distance"] =
        p.prime_max == kUnreachable ? Json("unreachable") : Json(p.prime_max);
    j["degenerate"] = p.degenerate;
  } catch (const BudgetExceeded& e) {
    j["diameter"] = std::string("skipped: ") + e.what();
  }
  emit(cfg, out, j);
  return kOk;
}

int certificate_exit(const Certificate& c) { return c.verified ? kOk : kRefuted; }

void emit_certificate(const Config& cfg, std::ostream& out, const Certificate& c) {
  if (cfg.json())
    out << certificate_to_json(c, cfg.timings).dump(2) << '\n';
  else
    out << certificate_to_text(c, cfg.timings);
}

int cmd_certify(const Config& cfg, std::ostream& out) {
  WitnessCase w = load_witness_file(cfg.witness);
  CertifyOptions options{cfg.budget_elements, cfg.threads};
  Certificate c = distance_class(w, options);
  emit_certificate(cfg, out, c);
  return certificate_exit(c);
}

int cmd_thm2(const Config& cfg, std::ostream& out) {
  Admissibility adm = is_theorem2_prime(cfg.n);
  if (!adm.prime) throw InvalidArgument(adm.explanation);
  if (cfg.n < 5) throw InvalidArgument("n must be at least 5");
  CertifyOptions options{cfg.budget_elements, cfg.threads};
  Certificate c = verify_theorem2_pair(cfg.n, options);
  const Fact* meet = c.find("intersection[N(A)|N(B)]");
  const Fact* join = c.find("join_is_ambient");
  bool pair_ok = meet && meet->holds && join && join->holds;

  Json head;
  head["n"] = cfg.n;
  head["admissible"] = adm.admissible;
  head["explanation"] = adm.explanation;
  if (adm.representation)
    head["representation"] = {{"q", adm.representation->first},
                              {"d", adm.representation->second}};
  head["normalizers_meet_trivially"] = meet && meet->holds;
  head["pair_generates"] = join && join->holds;
  if (cfg.json()) {
    head["certificate"] = certificate_to_json(c, cfg.timings);
    out << head.dump(2) << '\n';
  } else {
    print_human(out, head);
    out << "certificate:\n";
    std::istringstream text(certificate_to_text(c, cfg.timings));
    for (std::string line; std::getline(text, line);) out << "  " << line << '\n';
  }
  return pair_ok ? kOk : kRefuted;
}

void add_group_source(CLI::App* sub, Config& cfg) {
  sub->add_option("--catalog", cfg.catalog,
                  "catalog group, e.g. alternating:5 or direct_product cyclic:2 cyclic:2")
      ->expected(1, -1);
  sub->add_option("--file", cfg.file, "JSON group file");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Intersection graphs of permutation groups", "isg"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--budget-elements", cfg.budget_elements, "element enumeration cap")
      ->check(CLI::PositiveNumber);
  app.add_option("--budget-lattice", cfg.budget_lattice, "subgroup count cap")
      ->check(CLI::PositiveNumber);
  app.add_option("--budget-group-order", cfg.budget_group_order,
                 "largest group order for lattice enumeration")
      ->check(CLI::PositiveNumber);
  app.add_option("--threads", cfg.threads, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"human", "json"}));
  app.add_flag("!--no-timings", cfg.timings, "omit wall-clock timings");

  auto* order = app.add_subcommand("order", "print the group order");
  add_group_source(order, cfg);
  auto* diam = app.add_subcommand("diameter", "diameter of the intersection graph");
  add_group_source(diam, cfg);
  diam->add_option("--export-graph", cfg.export_graph, "write the adjacency list as JSON");
  auto* certify = app.add_subcommand("certify", "check a distance witness");
  certify->add_option("witness", cfg.witness, "witness JSON file")->required();
  auto* thm2 = app.add_subcommand("thm2", "normalizer pair for an n-cycle in A_n");
  thm2->add_option("n", cfg.n, "prime degree")->required();
  auto* diam2 = app.add_subcommand("diam2", "generating pairs of prime-order elements");
  add_group_source(diam2, cfg);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }

  try {
    if (*order) return cmd_order(cfg, out);
    if (*diam) return cmd_diameter(cfg, out);
    if (*certify) return cmd_certify(cfg, out);
    if (*thm2) return cmd_thm2(cfg, out);
    if (*diam2) return cmd_diam2(cfg, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}

}  // namespace isg::cli

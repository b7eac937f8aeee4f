#include "isg/certifier.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

#include "isg/catalog.hpp"
#include "isg/error.hpp"
#include "isg/parallel.hpp"

namespace isg {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_prime_power(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      while (n % d == 0) n /= d;
      return n == 1;
    }
  }
  return true;
}

std::uint64_t multiplicative_order(std::uint64_t r, std::uint64_t n) {
  std::uint64_t x = r % n;
  for (std::uint64_t k = 1; k < n; ++k) {
    if (x == 1) return k;
    x = x * r % n;
  }
  return 0;
}

// Cycles of p on 0-indexed points, fixed points included, longest first.
std::vector<std::vector<Point>> all_cycles(const Permutation& p) {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(p.degree());
  for (std::size_t x = 0; x < p.degree(); ++x) {
    if (seen[x]) continue;
    std::vector<Point> c;
    for (Point y = static_cast<Point>(x); !seen[y]; y = p(y)) {
      seen[y] = true;
      c.push_back(y);
    }
    out.push_back(std::move(c));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return a.size() > b.size(); });
  return out;
}

bool is_full_cycle(const Permutation& g) {
  return element_props(g).cycle_type.front() == g.degree();
}

Permutation multiply_map(std::size_t n, std::uint64_t r) {
  std::vector<Point> images(n);
  for (std::size_t x = 0; x < n; ++x) images[x] = static_cast<Point>(x * r % n);
  return Permutation::from_images(std::move(images));
}

Permutation standard_cycle(std::size_t n) {
  std::vector<Point> pts(n);
  for (std::size_t i = 0; i < n; ++i) pts[i] = static_cast<Point>(i);
  return Permutation::cycle(n, pts);
}

void check_cycle_input(std::size_t n, const Permutation& g) {
  if (!is_prime(n) || n == 2) throw InvalidArgument(std::to_string(n) + " is not an odd prime");
  if (g.degree() != n) throw DegreeMismatch(g.degree(), n);
  if (!is_full_cycle(g)) throw InvalidArgument(g.to_cycles() + " is not an n-cycle");
}

nlohmann::ordered_json order_json(const Order& o) { return o.str(); }

struct Overgroup {
  const OvergroupSpec* spec;
  char side;
  StabilizerChain chain;
};

std::string side_id(char side, const std::string& label) {
  return std::string("overgroups_") + side + "[" + label + "]";
}

std::optional<int> distance_of(Conclusion c) {
  switch (c) {
    case Conclusion::kSameSubgroup: return 0;
    case Conclusion::kAtMostTwo: return 2;
    case Conclusion::kExactlyThree: return 3;
    case Conclusion::kAtLeastFourConditional:
    case Conclusion::kFourConditional: return 4;
    default: return std::nullopt;
  }
}

std::string completeness_summary(const std::vector<OvergroupSpec>& list) {
  bool all_cited = true, any_assumed = false;
  for (const auto& o : list) {
    all_cited = all_cited && o.completeness == Completeness::kCited;
    any_assumed = any_assumed || o.completeness == Completeness::kAssumed;
  }
  if (list.empty() || any_assumed) return "assumed";
  return all_cited ? "cited" : "computed";
}

class Certifier {
 public:
  Certifier(const WitnessCase& w, const CertifyOptions& options) : w_(w), options_(options) {
    cert_.case_name = w.name;
    cert_.claimed_distance = w.claimed_distance;
  }

  Certificate run() {
    auto start = Clock::now();
    if (validate()) decide();
    cert_.verified = cert_.conclusion != Conclusion::kInvalidWitness &&
                     (!w_.claimed_distance || distance_of(cert_.conclusion) == w_.claimed_distance);
    cert_.seconds = seconds_since(start);
    return std::move(cert_);
  }

 private:
  Fact& add(std::string id, std::string statement, bool holds,
            nlohmann::ordered_json detail = nlohmann::ordered_json::object(), double seconds = 0) {
    cert_.facts.push_back(
        Fact{std::move(id), std::move(statement), holds, std::move(detail), seconds});
    return cert_.facts.back();
  }

  bool in_ambient(const Permutation& p) const {
    return w_.ambient.kind == AmbientSpec::Kind::kAlternating ? is_even(p)
                                                              : ambient_.contains(p);
  }

  bool check_element(const char* name, const Permutation& g) {
    auto props = element_props(g);
    bool ok = is_prime(props.order);
    add(std::string(name) + ".prime_order", std::string(name) + " has prime order", ok,
        {{"element", g.to_cycles()}, {"order", props.order}});
    if (!ok) return false;
    ok = in_ambient(g);
    add(std::string(name) + ".in_ambient", std::string(name) + " lies in G", ok,
        {{"parity", props.parity == Parity::kEven ? "even" : "odd"}});
    return ok;
  }

  bool check_overgroup(const OvergroupSpec& spec, char side, const Permutation& g) {
    const std::string id = side_id(side, spec.label);
    const std::string name = std::string("g_") + side;
    auto start = Clock::now();
    StabilizerChain chain = build_chain(GeneratedGroup(w_.degree, spec.generators, spec.label));

    nlohmann::ordered_json detail{{"order", order_json(chain.order())}};
    bool ok = true;
    if (spec.claimed_order) {
      detail["claimed_order"] = order_json(*spec.claimed_order);
      ok = *spec.claimed_order == chain.order();
    }
    add(id + ".order", spec.label + " has the claimed order", ok, detail, seconds_since(start));
    if (!ok) return false;

    ok = std::all_of(spec.generators.begin(), spec.generators.end(),
                     [&](const Permutation& p) { return in_ambient(p); }) &&
         chain.order() < ambient_order_;
    add(id + ".proper_in_ambient", spec.label + " is a proper subgroup of G", ok,
        {{"order", order_json(chain.order())}, {"ambient_order", order_json(ambient_order_)}});
    if (!ok) return false;

    ok = chain.contains(g);
    add(id + ".contains_" + name, spec.label + " contains " + name, ok,
        {{"element", g.to_cycles()}});
    if (!ok) return false;
    overgroups_.push_back(Overgroup{&spec, side, std::move(chain)});
    return true;
  }

  bool check_labels(const std::vector<OvergroupSpec>& list, char side) {
    std::vector<std::string> labels;
    for (const auto& o : list) labels.push_back(o.label);
    std::sort(labels.begin(), labels.end());
    auto dup = std::adjacent_find(labels.begin(), labels.end());
    bool ok = dup == labels.end();
    add(std::string("overgroups_") + side + ".labels_unique",
        std::string("overgroup labels on side ") + side + " are distinct", ok,
        {{"count", list.size()}});
    return ok;
  }

  bool validate() {
    auto start = Clock::now();
    if (w_.ambient.kind == AmbientSpec::Kind::kAlternating) {
      ambient_order_ = w_.degree >= 2 ? Order(factorial(w_.degree) / 2) : Order(1);
    } else {
      ambient_ = build_chain(w_.ambient.group);
      ambient_order_ = ambient_.order();
    }
    add("ambient.order", "order of G", true,
        {{"label", w_.ambient.kind == AmbientSpec::Kind::kAlternating
                       ? "A_" + std::to_string(w_.degree)
                       : w_.ambient.group.label},
         {"order", order_json(ambient_order_)}},
        seconds_since(start));

    bool ok = check_element("g_a", w_.g_a) && check_element("g_b", w_.g_b) &&
              check_labels(w_.overgroups_a, 'a') && check_labels(w_.overgroups_b, 'b');
    for (const auto& o : w_.overgroups_a) ok = ok && check_overgroup(o, 'a', w_.g_a);
    for (const auto& o : w_.overgroups_b) ok = ok && check_overgroup(o, 'b', w_.g_b);
    if (!ok) {
      cert_.conclusion = Conclusion::kInvalidWitness;
      cert_.decisive_fact = cert_.facts.back().id;
      cert_.rationale = "witness check failed: " + cert_.facts.back().statement;
    }
    return ok;
  }

  void decide() {
    StabilizerChain a = build_chain(GeneratedGroup(w_.degree, {w_.g_a}));
    bool same = a.contains(w_.g_b);
    add("same_subgroup", "<g_a> = <g_b>", same);
    if (same) {
      conclude(Conclusion::kSameSubgroup, "same_subgroup", "A and B are the same vertex");
      return;
    }

    auto start = Clock::now();
    StabilizerChain joined = join(GeneratedGroup(w_.degree, {w_.g_a}), std::span(&w_.g_b, 1));
    bool generates = joined.order() == ambient_order_;
    add("join_is_ambient", "<g_a, g_b> = G", generates,
        {{"join_order", order_json(joined.order())}, {"ambient_order", order_json(ambient_order_)}},
        seconds_since(start));
    if (!generates) {
      conclude(Conclusion::kAtMostTwo, "join_is_ambient",
               "<g_a, g_b> is a proper subgroup containing A and B, so they have a common "
               "neighbour; A and B are distinct of prime order, so they do not meet");
      return;
    }

    if (intersect_pairs()) return;
    for (const char* side : {"a", "b"})
      cert_.assumptions.push_back(std::string("overgroups_") + side +
                                  " lists every maximal subgroup of G containing <g_" + side +
                                  ">");
    bool alternating = w_.ambient.kind == AmbientSpec::Kind::kAlternating;
    if (alternating)
      cert_.assumptions.push_back("the intersection graph of A_" + std::to_string(w_.degree) +
                                  " has diameter at most 4");
    for (char side : {'a', 'b'}) {
      const auto& list = side == 'a' ? w_.overgroups_a : w_.overgroups_b;
      std::string c = completeness_summary(list);
      if (c != "cited")
        cert_.flags.push_back(std::string("overgroups_") + side + " completeness: " + c);
    }
    conclude(alternating ? Conclusion::kFourConditional : Conclusion::kAtLeastFourConditional, "",
             "a path A - C1 - C2 - B forces A <= C1 and B <= C2 since A and B have prime order; "
             "C1 and C2 lie in maximal subgroups M1 >= A and M2 >= B with M1 and M2 meeting "
             "non-trivially, but every listed pair meets trivially");
  }

  // Rule (iii). Returns true if some pair meets non-trivially.
  bool intersect_pairs() {
    std::vector<std::pair<const Overgroup*, const Overgroup*>> pairs;
    for (const auto& m1 : overgroups_)
      for (const auto& m2 : overgroups_)
        if (m1.side == 'a' && m2.side == 'b') pairs.emplace_back(&m1, &m2);
    std::sort(pairs.begin(), pairs.end(), [](const auto& x, const auto& y) {
      return std::tie(x.first->spec->label, x.second->spec->label) <
             std::tie(y.first->spec->label, y.second->spec->label);
    });

    std::vector<TrivialityReport> reports(pairs.size());
    std::vector<double> times(pairs.size());
    std::size_t outer = std::min(options_.threads, pairs.size());
    std::size_t inner = outer == 0 ? 1 : std::max<std::size_t>(1, options_.threads / outer);
    parallel_for(pairs.size(), options_.threads, [&](std::size_t i) {
      auto start = Clock::now();
      const auto& [m1, m2] = pairs[i];
      if (order_product_forces_intersection(m1->chain.order(), m2->chain.order(),
                                            ambient_order_)) {
        reports[i].trivial = false;
        reports[i].method = IntersectionMethod::kOrderProduct;
      } else {
        reports[i] = intersect_trivial(m1->chain, m2->chain, options_.element_budget, inner);
      }
      times[i] = seconds_since(start);
    });

    std::string first_hit;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const auto& [m1, m2] = pairs[i];
      const auto& r = reports[i];
      nlohmann::ordered_json detail{{"method", to_string(r.method)},
                                    {"orders",
                                     {order_json(m1->chain.order()),
                                      order_json(m2->chain.order())}}};
      if (r.method == IntersectionMethod::kOrderProduct)
        detail["ambient_order"] = order_json(ambient_order_);
      else
        detail["elements_checked"] = r.elements_checked;
      if (r.witness) detail["witness"] = r.witness->to_cycles();
      std::string id = "intersection[" + m1->spec->label + "|" + m2->spec->label + "]";
      add(id, m1->spec->label + " and " + m2->spec->label + " meet trivially", r.trivial, detail, times[i]);
      if (!r.trivial && first_hit.empty()) first_hit = id;
    }
    if (first_hit.empty()) return false;
    conclude(Conclusion::kExactlyThree, first_hit,
             "A <= M1, M1 and M2 meet non-trivially and M2 >= B give a path of length 3; <g_a, g_b> = G "
             "rules out a common neighbour of A and B");
    return true;
  }

  void conclude(Conclusion c, std::string decisive, std::string rationale) {
    cert_.conclusion = c;
    cert_.decisive_fact = std::move(decisive);
    cert_.rationale = std::move(rationale);
  }

  const WitnessCase& w_;
  const CertifyOptions& options_;
  Certificate cert_;
  StabilizerChain ambient_;
  Order ambient_order_ = 1;
  std::vector<Overgroup> overgroups_;
};

Permutation random_element(const StabilizerChain& chain, std::mt19937_64& rng) {
  Permutation g(chain.degree());
  for (const auto& level : chain.levels()) {
    std::uniform_int_distribution<std::size_t> pick(0, level.transversal.size() - 1);
    g = level.transversal[pick(rng)] * g;
  }
  return g;
}

}  // namespace

std::string to_string(Conclusion c) {
  switch (c) {
    case Conclusion::kSameSubgroup: return "distance = 0 (same subgroup)";
    case Conclusion::kAtMostTwo: return "distance <= 2";
    case Conclusion::kExactlyThree: return "distance = 3";
    case Conclusion::kAtLeastFourConditional: return "distance >= 4 (conditional)";
    case Conclusion::kFourConditional: return "distance = 4 (conditional)";
    case Conclusion::kAtLeastThreeIncomplete: return "distance >= 3 (overgroup list incomplete)";
    case Conclusion::kInvalidWitness: return "invalid witness";
  }
  return "invalid witness";
}

const Fact* Certificate::find(const std::string& id) const {
  auto it = std::find_if(facts.begin(), facts.end(), [&](const Fact& f) { return f.id == id; });
  return it == facts.end() ? nullptr : &*it;
}

Certificate distance_class(const WitnessCase& w, const CertifyOptions& options) {
  if (w.g_a.degree() != w.degree) throw DegreeMismatch(w.g_a.degree(), w.degree);
  if (w.g_b.degree() != w.degree) throw DegreeMismatch(w.g_b.degree(), w.degree);
  return Certifier(w, options).run();
}

nlohmann::ordered_json certificate_to_json(const Certificate& c, bool timings) {
  nlohmann::ordered_json j;
  j["case"] = c.case_name;
  j["conclusion"] = to_string(c.conclusion);
  j["claimed_distance"] = c.claimed_distance ? nlohmann::ordered_json(*c.claimed_distance)
                                             : nlohmann::ordered_json(nullptr);
  j["verified"] = c.verified;
  j["decisive_fact"] = c.decisive_fact;
  auto facts = nlohmann::ordered_json::array();
  for (const auto& f : c.facts) {
    nlohmann::ordered_json fj{{"id", f.id}, {"statement", f.statement}, {"holds", f.holds},
                              {"detail", f.detail}};
    if (timings) fj["seconds"] = f.seconds;
    facts.push_back(std::move(fj));
  }
  j["facts"] = std::move(facts);
  j["assumptions"] = c.assumptions;
  j["flags"] = c.flags;
  j["rationale"] = c.rationale;
  if (timings) j["seconds"] = c.seconds;
  return j;
}

std::string certificate_to_text(const Certificate& c, bool timings) {
  std::ostringstream out;
  out << "case: " << c.case_name << '\n';
  out << "conclusion: " << to_string(c.conclusion) << '\n';
  out << "claimed_distance: "
      << (c.claimed_distance ? std::to_string(*c.claimed_distance) : "none") << '\n';
  out << "verified: " << (c.verified ? "yes" : "no") << '\n';
  out << "decisive_fact: " << (c.decisive_fact.empty() ? "-" : c.decisive_fact) << '\n';
  out << "facts:\n";
  for (const auto& f : c.facts) {
    out << "  [" << (f.holds ? "yes" : "no ") << "] " << f.id << ": " << f.statement;
    if (!f.detail.empty()) out << "  " << f.detail.dump();
    if (timings) out << "  (" << f.seconds << " s)";
    out << '\n';
  }
  out << "assumptions:\n";
  for (const auto& a : c.assumptions) out << "  - " << a << '\n';
  out << "flags:\n";
  for (const auto& f : c.flags) out << "  - " << f << '\n';
  out << "rationale: " << c.rationale << '\n';
  if (timings) out << "seconds: " << c.seconds << '\n';
  return out.str();
}

bool order_product_forces_intersection(const Order& o1, const Order& o2, const Order& oG) {
  if (o1 <= 0 || o2 <= 0 || oG <= 0) throw InvalidArgument("orders must be positive");
  if (oG % o1 != 0 || oG % o2 != 0)
    throw InvalidArgument("subgroup orders " + o1.str() + " and " + o2.str() +
                          " must divide " + oG.str());
  return o1 * o2 > oG;
}

Permutation cycle_conjugator(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw DegreeMismatch(p.degree(), q.degree());
  auto cp = all_cycles(p);
  auto cq = all_cycles(q);
  std::vector<Point> images(p.degree());
  if (cp.size() != cq.size()) throw InvalidArgument("cycle types differ");
  for (std::size_t i = 0; i < cp.size(); ++i) {
    if (cp[i].size() != cq[i].size()) throw InvalidArgument("cycle types differ");
    for (std::size_t k = 0; k < cp[i].size(); ++k) images[cp[i][k]] = cq[i][k];
  }
  return Permutation::from_images(std::move(images));
}

CycleNormalizer build_cycle_normalizer(std::size_t n, const Permutation& g) {
  check_cycle_input(n, g);
  const std::uint64_t target = (n - 1) / 2;
  Permutation sigma = cycle_conjugator(standard_cycle(n), g);
  for (std::uint64_t r = 1; r < n; ++r) {
    if (multiplicative_order(r, n) != target) continue;
    Permutation h = multiply_map(n, r);
    if (!is_even(h)) continue;
    h = conjugate(h, sigma);
    StabilizerChain chain = build_chain(GeneratedGroup(n, {g, h}));
    if (chain.order() != Order(n * target))
      throw Error("normalizer has order " + chain.order().str());
    if (conjugate(g, h) != power(g, r)) throw Error("h does not act as g -> g^r");
    if (!is_even(g) || !is_even(h)) throw Error("normalizer is not inside A_n");
    return CycleNormalizer{std::move(chain), std::move(h), r};
  }
  throw Error("no even multiplier of order " + std::to_string(target) + " mod " +
              std::to_string(n));
}

StabilizerChain build_full_cycle_normalizer(std::size_t n, const Permutation& g) {
  check_cycle_input(n, g);
  for (std::uint64_t r = 2; r < n; ++r) {
    if (multiplicative_order(r, n) != n - 1) continue;
    Permutation h = conjugate(multiply_map(n, r), cycle_conjugator(standard_cycle(n), g));
    StabilizerChain chain = build_chain(GeneratedGroup(n, {g, h}));
    if (chain.order() != Order(n * (n - 1)))
      throw Error("full normalizer has order " + chain.order().str());
    return chain;
  }
  throw Error("no primitive root mod " + std::to_string(n));
}

Admissibility is_theorem2_prime(std::size_t n) {
  Admissibility a;
  a.n = n;
  a.prime = is_prime(n);
  const std::string s = std::to_string(n);
  if (!a.prime) {
    a.explanation = s + " is not prime";
    return a;
  }
  if (n == 11) {
    a.explanation = "11 is excluded explicitly";
    return a;
  }
  const auto max_d = static_cast<std::uint64_t>(std::log2(static_cast<double>(n) + 1)) + 1;
  for (std::uint64_t q = 2; q <= n && !a.representation; ++q) {
    if (!is_prime_power(q)) continue;
    std::uint64_t sum = 1, term = 1;
    for (std::uint64_t d = 2; d <= max_d && sum < n; ++d) {
      term *= q;
      sum += term;
      if (sum == n) {
        a.representation = std::pair{q, d};
        break;
      }
    }
  }
  if (a.representation) {
    auto [q, d] = *a.representation;
    a.explanation = s + " = (" + std::to_string(q) + "^" + std::to_string(d) + " - 1)/(" +
                    std::to_string(q) + " - 1)";
    return a;
  }
  a.admissible = true;
  a.explanation = s + " is prime, not 11, and not of the form (q^d - 1)/(q - 1)";
  return a;
}

bool normalizer_is_sole_maximal_overgroup(std::size_t n) {
  return n >= 5 && n != 23 && is_theorem2_prime(n).admissible;
}

WitnessCase theorem2_witness(std::size_t n) {
  if (!is_prime(n) || n < 5) throw InvalidArgument(std::to_string(n) + " is not a prime >= 5");
  WitnessCase w;
  w.name = "thm2_n" + std::to_string(n);
  w.degree = n;
  w.ambient.kind = AmbientSpec::Kind::kAlternating;
  w.ambient.group = alternating_group(n);
  w.g_a = standard_cycle(n);
  std::vector<Point> swap{static_cast<Point>(n - 2), static_cast<Point>(n - 1)};
  w.g_b = conjugate(w.g_a, Permutation::cycle(n, swap));
  w.claimed_distance = 4;
  const bool sole = normalizer_is_sole_maximal_overgroup(n);
  const std::uint64_t order = n * ((n - 1) / 2);
  for (auto [g, list, label] : {std::tuple{&w.g_a, &w.overgroups_a, "N(A)"},
                                std::tuple{&w.g_b, &w.overgroups_b, "N(B)"}}) {
    CycleNormalizer norm = build_cycle_normalizer(n, *g);
    OvergroupSpec o;
    o.label = label;
    o.generators = {*g, norm.h};
    o.claimed_order = Order(order);
    o.completeness = sole ? Completeness::kCited : Completeness::kAssumed;
    o.provenance = "normalizer " + std::to_string(n) + ":" + std::to_string((n - 1) / 2) +
                   ", x -> " + std::to_string(norm.multiplier) + "x mod " + std::to_string(n) +
                   (sole ? "; sole maximal overgroup by the classification of transitive "
                           "groups of prime degree"
                         : "; other maximal overgroups exist for this degree");
    list->push_back(std::move(o));
  }
  w.notes = "g_b is g_a conjugated by (" + std::to_string(n - 1) + "," + std::to_string(n) + ")";
  return w;
}

Certificate verify_theorem2_pair(std::size_t n, const CertifyOptions& options) {
  WitnessCase w = theorem2_witness(n);
  Certificate c = distance_class(w, options);
  Admissibility adm = is_theorem2_prime(n);
  c.facts.push_back(Fact{"admissible", "n satisfies the degree condition", adm.admissible,
                         {{"explanation", adm.explanation}}, 0.0});
  if (!normalizer_is_sole_maximal_overgroup(n) &&
      (c.conclusion == Conclusion::kFourConditional ||
       c.conclusion == Conclusion::kAtLeastFourConditional)) {
    c.conclusion = Conclusion::kAtLeastThreeIncomplete;
    c.verified = false;
    c.flags.push_back("overgroup list incomplete for n = " + std::to_string(n));
    c.rationale = "N(A) and N(B) meet trivially, but the normalizers are not the only maximal overgroups "
                  "for this degree";
  }
  return c;
}

OvergroupDerivation derive_overgroup_copies(const GeneratedGroup& base, const Permutation& g,
                                            std::uint64_t seed) {
  const std::size_t n = base.degree;
  check_cycle_input(n, g);
  StabilizerChain chain = build_chain(base);
  OvergroupDerivation d;

  std::mt19937_64 rng(seed);
  constexpr std::uint64_t kMaxDraws = 1'000'000;
  for (;;) {
    if (++d.search_draws > kMaxDraws)
      throw Error(base.label + " has no " + std::to_string(n) + "-cycle in " +
                  std::to_string(kMaxDraws) + " draws");
    Permutation x = random_element(chain, rng);
    if (is_full_cycle(x)) {
      d.found_cycle = std::move(x);
      break;
    }
  }
  d.conjugator = cycle_conjugator(d.found_cycle, g);

  std::vector<Permutation> gens;
  for (const auto& p : base.generators) gens.push_back(conjugate(p, d.conjugator));
  GeneratedGroup moved(n, gens, base.label);
  StabilizerChain moved_chain = build_chain(moved);
  if (!moved_chain.contains(g)) throw Error("conjugated group does not contain g");

  StabilizerChain normalizer = build_full_cycle_normalizer(n, g);
  d.full_normalizer_order = normalizer.order();
  std::vector<StabilizerChain> chains{moved_chain};
  d.copies.push_back(moved);
  d.conjugators.push_back(d.conjugator);
  std::uint64_t inside = 0;
  for (const auto& x : elements(normalizer)) {
    if (moved_chain.contains(x)) {
      ++inside;
      continue;
    }
    std::vector<Permutation> cg;
    for (const auto& p : gens) cg.push_back(conjugate(p, x));
    GeneratedGroup copy(n, cg, base.label);
    StabilizerChain cc = build_chain(copy);
    if (std::any_of(chains.begin(), chains.end(),
                    [&](const StabilizerChain& c) { return subgroup_equal(c, cc); }))
      continue;
    chains.push_back(std::move(cc));
    d.copies.push_back(std::move(copy));
    d.conjugators.push_back(d.conjugator * x);
  }
  d.stabilizer_order = inside;
  d.expected_count = static_cast<std::uint64_t>(d.full_normalizer_order / d.stabilizer_order);
  if (d.expected_count != d.copies.size())
    throw Error(std::to_string(d.copies.size()) + " copies found, index arithmetic predicts " +
                std::to_string(d.expected_count));
  for (std::size_t i = 0; i < d.copies.size(); ++i)
    d.copies[i].label = base.label + "#" + std::to_string(i + 1);
  return d;
}

}  // namespace isg

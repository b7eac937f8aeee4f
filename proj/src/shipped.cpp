#include "isg/shipped.hpp"

#include "isg/catalog.hpp"
#include "isg/certifier.hpp"
#include "isg/group_io.hpp"

namespace isg {
namespace {

Permutation standard_cycle(std::size_t n) {
  std::vector<Point> pts(n);
  for (std::size_t i = 0; i < n; ++i) pts[i] = static_cast<Point>(i);
  return Permutation::cycle(n, pts);
}

std::vector<OvergroupSpec> copies_containing(const GeneratedGroup& base, const std::string& file,
                                             const Permutation& g, const std::string& side,
                                             Completeness completeness) {
  OvergroupDerivation d = derive_overgroup_copies(base, g);
  std::vector<OvergroupSpec> out;
  for (std::size_t i = 0; i < d.copies.size(); ++i) {
    OvergroupSpec o;
    o.label = base.label + "(" + side + ")#" + std::to_string(i + 1);
    o.generators = d.copies[i].generators;
    o.claimed_order = build_chain(d.copies[i]).order();
    o.completeness = completeness;
    o.provenance = base.label + " from " + file + " conjugated by " +
                   d.conjugators[i].to_cycles() + "; found cycle " + d.found_cycle.to_cycles() +
                   " after " + std::to_string(d.search_draws) + " draws (seed 1), " +
                   std::to_string(d.copies.size()) + " copies = |N_S(<g>)| / |N_S(<g>) meet M| = " +
                   d.full_normalizer_order.str() + "/" + d.stabilizer_order.str();
    out.push_back(std::move(o));
  }
  return out;
}

OvergroupSpec normalizer_of(const Permutation& g, const std::string& label,
                            Completeness completeness, const std::string& note) {
  const std::size_t n = g.degree();
  CycleNormalizer norm = build_cycle_normalizer(n, g);
  OvergroupSpec o;
  o.label = label;
  o.generators = {g, norm.h};
  o.claimed_order = norm.chain.order();
  o.completeness = completeness;
  o.provenance = "normalizer " + std::to_string(n) + ":" + std::to_string((n - 1) / 2) +
                 ", h = x -> " + std::to_string(norm.multiplier) + "x mod " + std::to_string(n) +
                 " on the cycle" + (note.empty() ? "" : "; " + note);
  return o;
}

WitnessCase alternating_case(std::string name, std::size_t n, Permutation g_a, Permutation g_b,
                             int claimed) {
  WitnessCase w;
  w.name = std::move(name);
  w.degree = n;
  w.ambient.kind = AmbientSpec::Kind::kAlternating;
  w.ambient.group = alternating_group(n);
  w.g_a = std::move(g_a);
  w.g_b = std::move(g_b);
  w.claimed_distance = claimed;
  return w;
}

void append(std::vector<OvergroupSpec>& to, std::vector<OvergroupSpec> from) {
  for (auto& o : from) to.push_back(std::move(o));
}

}  // namespace

std::vector<WitnessCase> derive_shipped_witnesses(const std::filesystem::path& groups_dir) {
  std::vector<WitnessCase> out;

  {
    GeneratedGroup psl = load_group_file(groups_dir / "psl3_3.json");
    auto w = alternating_case("a13_distance4", 13,
                              parse_cycles("(1,8,10,13,7,5,6,12,9,11,3,4,2)", 13),
                              standard_cycle(13), 4);
    for (auto [g, list, side] : {std::tuple{&w.g_a, &w.overgroups_a, "A"},
                                 std::tuple{&w.g_b, &w.overgroups_b, "B"}}) {
      append(*list, copies_containing(psl, "psl3_3.json", *g, side, Completeness::kComputed));
      list->push_back(normalizer_of(*g, std::string("N(") + side + ")", Completeness::kComputed,
                                    "not contained in any PSL(3,3) copy"));
    }
    w.notes = "maximal overgroups of a 13-cycle in A_13: the PSL(3,3) copies in both classes "
              "and the normalizer; the count of copies is computed, not cited";
    out.push_back(std::move(w));
  }

  {
    GeneratedGroup m23 = load_group_file(groups_dir / "m23.json");
    auto w = alternating_case(
        "a23_distance4", 23,
        parse_cycles("(1,13,16,4,22,2,8,20,21,6,17,9,19,14,18,11,15,23,12,5,3,7,10)", 23),
        standard_cycle(23), 4);
    for (auto [g, list, side] : {std::tuple{&w.g_a, &w.overgroups_a, "A"},
                                 std::tuple{&w.g_b, &w.overgroups_b, "B"}}) {
      append(*list, copies_containing(m23, "m23.json", *g, side, Completeness::kCited));
      list->push_back(normalizer_of(*g, std::string("N(") + side + ")", Completeness::kComputed,
                                    "contained in each M23 copy, listed for completeness"));
    }
    w.notes = "a 23-cycle lies in exactly two M23 subgroups of A_23, one from each class";
    out.push_back(std::move(w));
  }

  {
    GeneratedGroup m11 = load_group_file(groups_dir / "m11.json");
    Permutation g_a = standard_cycle(11);
    std::vector<Point> swap{9, 10};
    auto w = alternating_case("a11_diam3_counting", 11, g_a,
                              conjugate(g_a, Permutation::cycle(11, swap)), 3);
    w.overgroups_a = copies_containing(m11, "m11.json", w.g_a, "A", Completeness::kComputed);
    w.overgroups_b = copies_containing(m11, "m11.json", w.g_b, "B", Completeness::kComputed);
    w.notes = "every element of order 11 lies in an M11 and 7920^2 > |A_11|, so any two "
              "M11 subgroups meet";
    out.push_back(std::move(w));
  }

  for (std::size_t n : {19, 29}) out.push_back(theorem2_witness(n));
  return out;
}

}  // namespace isg

#include "isg/stab_chain.hpp"

#include <algorithm>
#include <atomic>
#include <limits>

#include "isg/error.hpp"
#include "isg/parallel.hpp"

namespace isg {

std::uint64_t to_bounded(const Order& order, std::uint64_t cap,
                         const char* what) {
  if (order > cap)
    throw BudgetExceeded(std::string(what) + ": order " + order.str() +
                         " exceeds budget " + std::to_string(cap));
  return order.convert_to<std::uint64_t>();
}

Order factorial(std::size_t n) {
  Order result = 1;
  for (std::size_t i = 2; i <= n; ++i) result *= i;
  return result;
}

GeneratedGroup::GeneratedGroup(std::size_t degree,
                               std::vector<Permutation> generators,
                               std::string label)
    : degree(degree), generators(std::move(generators)), label(std::move(label)) {
  if (degree == 0) throw InvalidArgument("group degree must be positive");
  for (const auto& g : this->generators)
    if (g.degree() != degree) throw DegreeMismatch(g.degree(), degree);
}

// Holt's deterministic Schreier-Sims. Schreier generators already sifted at a
// level are remembered, since deeper levels only ever grow and transversal
// representatives of existing orbit points never change.
class ChainBuilder {
 public:
  ChainBuilder(std::size_t degree, const Budgets& budgets)
      : degree_(degree), budgets_(budgets) {}

  StabilizerChain run(const GeneratedGroup& group) {
    StabilizerChain chain(degree_);
    chain.generators_ = group.generators;
    levels_ = &chain.levels_;

    std::vector<Permutation> gens;
    for (const auto& g : group.generators)
      if (!g.is_identity()) gens.push_back(g);

    for (const auto& g : gens) {
      if (fixes_base(g)) add_level(static_cast<Point>(g.first_moved_point()));
    }
    for (std::size_t i = 0; i < levels_->size(); ++i) {
      for (const auto& g : gens)
        if (fixes_base_prefix(g, i)) add_generator(i, g);
    }

    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_->size()) - 1;
    while (i >= 0) {
      std::optional<std::size_t> restart = process_level(static_cast<std::size_t>(i));
      if (restart) {
        i = static_cast<std::ptrdiff_t>(*restart);
      } else {
        --i;
      }
    }

    chain.order_ = 1;
    for (const auto& level : chain.levels_) chain.order_ *= level.orbit.size();
    return chain;
  }

 private:
  // Sifts every unchecked Schreier generator of level i. Returns the deepest
  // level that received a new strong generator, if any.
  std::optional<std::size_t> process_level(std::size_t i) {
    for (std::size_t o = 0; o < (*levels_)[i].orbit.size(); ++o) {
      auto& row = checked_[i];
      if (row.size() <= o) row.resize(o + 1);
      for (std::size_t s = 0; s < (*levels_)[i].generators.size(); ++s) {
        if (row[o].size() <= s) row[o].resize(s + 1, false);
        if (row[o][s]) continue;
        row[o][s] = true;

        const auto& level = (*levels_)[i];
        const Permutation& gen = level.generators[s];
        Point image = gen(level.orbit[o]);
        Permutation schreier = level.transversal[o] * gen *
                               level.inverse_transversal[level.orbit_slot[image]];
        auto [residue, stop] = sift(std::move(schreier), i + 1);
        if (residue.is_identity()) continue;

        if (stop == levels_->size())
          add_level(static_cast<Point>(residue.first_moved_point()));
        for (std::size_t l = i + 1; l <= stop; ++l) add_generator(l, residue);
        return stop;
      }
    }
    return std::nullopt;
  }

  StabilizerChain::SiftResult sift(Permutation p, std::size_t from) const {
    for (std::size_t l = from; l < levels_->size(); ++l) {
      const auto& level = (*levels_)[l];
      std::int32_t slot = level.orbit_slot[p(level.base_point)];
      if (slot < 0) return {std::move(p), l};
      p = p * level.inverse_transversal[slot];
    }
    return {std::move(p), levels_->size()};
  }

  bool fixes_base(const Permutation& g) const {
    return fixes_base_prefix(g, levels_->size());
  }

  bool fixes_base_prefix(const Permutation& g, std::size_t count) const {
    for (std::size_t l = 0; l < count; ++l) {
      Point b = (*levels_)[l].base_point;
      if (g(b) != b) return false;
    }
    return true;
  }

  void add_level(Point base_point) {
    StabilizerChain::Level level;
    level.base_point = base_point;
    level.orbit.push_back(base_point);
    level.orbit_slot.assign(degree_, -1);
    level.orbit_slot[base_point] = 0;
    level.transversal.emplace_back(degree_);
    level.inverse_transversal.emplace_back(degree_);
    levels_->push_back(std::move(level));
    checked_.emplace_back();
  }

  void add_generator(std::size_t l, const Permutation& g) {
    if (++strong_generator_count_ > budgets_.strong_generators)
      throw BudgetExceeded("stabilizer chain exceeds " +
                           std::to_string(budgets_.strong_generators) +
                           " strong generators");
    auto& level = (*levels_)[l];
    level.generators.push_back(g);
    std::size_t new_gen = level.generators.size() - 1;
    std::size_t old_size = level.orbit.size();
    for (std::size_t o = 0; o < old_size; ++o) extend(level, o, new_gen);
    for (std::size_t o = old_size; o < level.orbit.size(); ++o)
      for (std::size_t s = 0; s < level.generators.size(); ++s) extend(level, o, s);
  }

  void extend(StabilizerChain::Level& level, std::size_t o, std::size_t s) {
    const Permutation& gen = level.generators[s];
    Point image = gen(level.orbit[o]);
    if (level.orbit_slot[image] >= 0) return;
    level.orbit_slot[image] = static_cast<std::int32_t>(level.orbit.size());
    level.orbit.push_back(image);
    Permutation rep = level.transversal[o] * gen;
    level.inverse_transversal.push_back(rep.inverse());
    level.transversal.push_back(std::move(rep));
  }

  std::size_t degree_;
  Budgets budgets_;
  std::vector<StabilizerChain::Level>* levels_ = nullptr;
  std::vector<std::vector<std::vector<bool>>> checked_;
  std::size_t strong_generator_count_ = 0;
};

StabilizerChain::StabilizerChain(std::size_t degree) : degree_(degree) {
  if (degree == 0) throw InvalidArgument("chain degree must be positive");
}

StabilizerChain StabilizerChain::build(const GeneratedGroup& group,
                                       const Budgets& budgets) {
  for (const auto& g : group.generators)
    if (g.degree() != group.degree) throw DegreeMismatch(g.degree(), group.degree);
  return ChainBuilder(group.degree, budgets).run(group);
}

std::vector<Point> StabilizerChain::base() const {
  std::vector<Point> out;
  for (const auto& level : levels_) out.push_back(level.base_point);
  return out;
}

bool StabilizerChain::contains(const Permutation& p) const {
  if (p.degree() != degree_) throw DegreeMismatch(p.degree(), degree_);
  return contains_images(p.images());
}

bool StabilizerChain::contains_images(std::span<const Point> images) const noexcept {
  // Only base images are tracked while descending; the full residue is
  // formed once, after every level accepted.
  constexpr std::size_t kInline = 64;
  const Permutation* inline_chosen[kInline];
  std::vector<const Permutation*> heap_chosen;
  const Permutation** chosen = inline_chosen;
  if (levels_.size() > kInline) {
    heap_chosen.resize(levels_.size());
    chosen = heap_chosen.data();
  }
  for (std::size_t l = 0; l < levels_.size(); ++l) {
    Point x = images[levels_[l].base_point];
    for (std::size_t j = 0; j < l; ++j) x = (*chosen[j])(x);
    std::int32_t slot = levels_[l].orbit_slot[x];
    if (slot < 0) return false;
    chosen[l] = &levels_[l].inverse_transversal[slot];
  }
  for (std::size_t p = 0; p < degree_; ++p) {
    Point x = images[p];
    for (std::size_t j = 0; j < levels_.size(); ++j) x = (*chosen[j])(x);
    if (x != p) return false;
  }
  return true;
}

StabilizerChain::SiftResult StabilizerChain::sift(Permutation p,
                                                  std::size_t from_level) const {
  if (p.degree() != degree_) throw DegreeMismatch(p.degree(), degree_);
  for (std::size_t l = from_level; l < levels_.size(); ++l) {
    std::int32_t slot = levels_[l].orbit_slot[p(levels_[l].base_point)];
    if (slot < 0) return {std::move(p), l};
    p = p * levels_[l].inverse_transversal[slot];
  }
  return {std::move(p), levels_.size()};
}

StabilizerChain build_chain(const GeneratedGroup& group, const Budgets& budgets) {
  return StabilizerChain::build(group, budgets);
}

bool is_member(const StabilizerChain& chain, const Permutation& p) {
  return chain.contains(p);
}

std::vector<Permutation> elements(const StabilizerChain& chain,
                                  std::uint64_t budget) {
  std::uint64_t n = to_bounded(chain.order(), budget, "element enumeration");
  std::vector<Permutation> out;
  out.reserve(n);
  chain.for_each_element([&](std::span<const Point> images) {
    out.push_back(Permutation::from_images_unchecked(
        std::vector<Point>(images.begin(), images.end())));
    return true;
  });
  return out;
}

StabilizerChain join(const GeneratedGroup& group,
                     std::span<const Permutation> extra, const Budgets& budgets) {
  GeneratedGroup joined = group;
  for (const auto& p : extra) {
    if (p.degree() != group.degree) throw DegreeMismatch(p.degree(), group.degree);
    joined.generators.push_back(p);
  }
  return build_chain(joined, budgets);
}

std::string to_string(IntersectionMethod method) {
  switch (method) {
    case IntersectionMethod::kSiftEnumeration: return "sift-enumeration";
    case IntersectionMethod::kOrderProduct: return "order-product";
    case IntersectionMethod::kElementSet: return "element-set";
  }
  return "unknown";
}

TrivialityReport intersect_trivial(const StabilizerChain& h1,
                                   const StabilizerChain& h2,
                                   std::uint64_t budget, std::size_t threads) {
  if (h1.degree() != h2.degree()) throw DegreeMismatch(h1.degree(), h2.degree());
  const StabilizerChain& small = h1.order() <= h2.order() ? h1 : h2;
  const StabilizerChain& large = &small == &h1 ? h2 : h1;
  to_bounded(small.order(), budget, "intersection enumeration");

  TrivialityReport report;
  report.method = IntersectionMethod::kSiftEnumeration;
  if (small.is_trivial()) {
    report.elements_checked = 1;
    return report;
  }

  const std::size_t cosets = small.top_coset_count();
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::atomic<std::size_t> best{kNone};
  std::vector<std::optional<Permutation>> hits(cosets);
  std::vector<std::uint64_t> checked(cosets, 0);

  parallel_for(cosets, threads, [&](std::size_t c) {
    if (c > best.load()) return;
    std::uint64_t count = 0;
    small.for_each_in_coset(c, [&](std::span<const Point> images) {
      ++count;
      if ((count & 0xfff) == 0 && c > best.load()) return false;
      bool identity = true;
      for (std::size_t p = 0; p < images.size(); ++p)
        if (images[p] != p) { identity = false; break; }
      if (identity || !large.contains_images(images)) return true;
      hits[c] = Permutation::from_images_unchecked(
          std::vector<Point>(images.begin(), images.end()));
      std::size_t current = best.load();
      while (c < current && !best.compare_exchange_weak(current, c)) {
      }
      return false;
    });
    checked[c] = count;
  });

  for (std::size_t c = 0; c < cosets; ++c) {
    report.elements_checked += checked[c];
    if (hits[c]) {
      report.trivial = false;
      report.witness = std::move(hits[c]);
      break;
    }
  }
  return report;
}

bool subgroup_leq(const StabilizerChain& h1, const StabilizerChain& h2) {
  if (h1.degree() != h2.degree()) throw DegreeMismatch(h1.degree(), h2.degree());
  for (const auto& g : h1.generators())
    if (!h2.contains(g)) return false;
  return true;
}

bool subgroup_equal(const StabilizerChain& h1, const StabilizerChain& h2) {
  return h1.order() == h2.order() && subgroup_leq(h1, h2);
}

}  // namespace isg

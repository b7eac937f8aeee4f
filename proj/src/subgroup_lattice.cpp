#include "isg/subgroup_lattice.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <unordered_map>

#include <boost/container_hash/hash.hpp>

#include "isg/error.hpp"

namespace isg {
namespace {

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

CanonicalKey key_of(const ElementSet& set) {
  std::vector<std::uint64_t> blocks;
  blocks.reserve(set.num_blocks());
  boost::to_block_range(set, std::back_inserter(blocks));
  return CanonicalKey{boost::hash_range(blocks.begin(), blocks.end())};
}

// Working representation during enumeration.
struct Candidate {
  ElementSet members;  // identity included
  std::vector<std::uint32_t> elements;
  std::vector<std::uint32_t> generators;
};

class LatticeEnumerator {
 public:
  LatticeEnumerator(const ElementTable& table, const Budgets& budgets)
      : table_(table), budgets_(budgets), n_(table.size()) {}

  std::vector<Candidate> run(std::span<const Permutation> ambient_generators) {
    seen_cyclic_.resize(n_);
    for (const auto& s : ambient_generators) conjugation_.push_back(conjugation_map(s));

    for (std::uint32_t x = 1; x < n_; ++x) {
      if (seen_cyclic_[x]) continue;
      Candidate c = cyclic(x);
      for (std::uint32_t e : c.elements)
        if (table_.element_order(e) == c.elements.size()) seen_cyclic_.set(e);
      if (c.elements.size() < n_) insert_class(std::move(c));
    }
    // Only cyclic subgroups exist at this point; those of prime-power order
    // are the join partners.
    std::vector<std::uint32_t> joiners;
    for (const auto& c : found_)
      if (is_prime_power(c.elements.size())) joiners.push_back(c.generators.front());

    // Only class representatives are joined; conjugates of each result are
    // added by insert_class.
    for (std::size_t r = 0; r < representatives_.size(); ++r) {
      std::size_t i = representatives_[r];
      for (std::uint32_t y : joiners) {
        if (found_[i].members[y]) continue;
        auto joined = join(found_[i], y);
        if (joined) insert_class(std::move(*joined));
      }
    }
    return std::move(found_);
  }

 private:
  Candidate cyclic(std::uint32_t x) const {
    Candidate c;
    c.members.resize(n_);
    c.generators = {x};
    std::uint32_t e = ElementTable::kIdentity;
    do {
      c.members.set(e);
      c.elements.push_back(e);
      e = table_.mul(e, x);
    } while (e != ElementTable::kIdentity);
    return c;
  }

  // Dimino's coset closure of <H, y>. Returns nullopt when the result is the
  // whole group, detected as soon as it exceeds |G|/2 elements.
  std::optional<Candidate> join(const Candidate& h, std::uint32_t y) const {
    Candidate out;
    out.members = h.members;
    out.elements = h.elements;
    out.generators = h.generators;
    out.generators.push_back(y);
    const std::size_t limit = n_ / 2;

    std::vector<std::uint32_t> reps{ElementTable::kIdentity};
    auto add_coset = [&](std::uint32_t r) {
      for (std::uint32_t k : h.elements) {
        std::uint32_t e = table_.mul(k, r);
        out.members.set(e);
        out.elements.push_back(e);
      }
    };
    reps.push_back(y);
    add_coset(y);
    if (out.elements.size() > limit) return std::nullopt;
    for (std::size_t pos = 1; pos < reps.size(); ++pos) {
      for (std::uint32_t t : out.generators) {
        std::uint32_t e = table_.mul(reps[pos], t);
        if (out.members[e]) continue;
        if (out.elements.size() + h.elements.size() > limit) return std::nullopt;
        reps.push_back(e);
        add_coset(e);
      }
    }
    return out;
  }

  // Table of e -> s^-1 e s for an ambient generator s.
  std::vector<std::uint32_t> conjugation_map(const Permutation& s) const {
    std::vector<std::uint32_t> map(n_);
    for (std::uint32_t e = 0; e < n_; ++e)
      map[e] = table_.index_of(conjugate(table_.element(e), s));
    return map;
  }

  // Inserts c and its whole conjugacy class. Returns false if c was known.
  bool insert_class(Candidate c) {
    auto first = insert(std::move(c));
    if (!first) return false;
    representatives_.push_back(*first);
    for (std::size_t q = *first; q < found_.size(); ++q) {
      for (const auto& map : conjugation_) {
        Candidate image;
        image.members.resize(n_);
        image.elements.reserve(found_[q].elements.size());
        for (std::uint32_t e : found_[q].elements) {
          image.elements.push_back(map[e]);
          image.members.set(map[e]);
        }
        for (std::uint32_t g : found_[q].generators) image.generators.push_back(map[g]);
        insert(std::move(image));
      }
    }
    return true;
  }

  std::optional<std::size_t> insert(Candidate c) {
    CanonicalKey key = key_of(c.members);
    auto& bucket = by_key_[key.hash];
    for (std::size_t id : bucket)
      if (found_[id].members == c.members) return std::nullopt;
    if (found_.size() >= budgets_.lattice)
      throw BudgetExceeded("subgroup lattice exceeds " + std::to_string(budgets_.lattice) +
                           " subgroups");
    bucket.push_back(found_.size());
    found_.push_back(std::move(c));
    return found_.size() - 1;
  }

  const ElementTable& table_;
  const Budgets& budgets_;
  std::size_t n_;
  std::vector<std::vector<std::uint32_t>> conjugation_;
  std::vector<Candidate> found_;
  std::vector<std::size_t> representatives_;
  ElementSet seen_cyclic_;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> by_key_;
};

}  // namespace

ElementTable ElementTable::build(const StabilizerChain& chain, const Budgets& budgets) {
  std::uint64_t n = to_bounded(chain.order(), budgets.group_order, "element table");
  if (n > 65535) throw BudgetExceeded("element table supports at most 65535 elements");
  ElementTable t;
  t.elements_ = isg::elements(chain, n);
  std::sort(t.elements_.begin(), t.elements_.end());
  for (std::uint32_t i = 0; i < n; ++i) t.index_.emplace(t.elements_[i], i);
  t.table_.resize(n * n);
  std::vector<Point> buffer(chain.degree());
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      compose_into(t.elements_[a].images(), t.elements_[b].images(), buffer);
      t.table_[static_cast<std::size_t>(a) * n + b] = static_cast<std::uint16_t>(
          t.index_.at(Permutation::from_images_unchecked(buffer)));
    }
  }
  t.orders_.reserve(n);
  for (const auto& e : t.elements_) t.orders_.push_back(element_props(e).order);
  return t;
}

std::uint32_t ElementTable::index_of(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) throw InvalidArgument(p.to_cycles() + " is not in the group");
  return it->second;
}

SubgroupSet::SubgroupSet(GeneratedGroup ambient, StabilizerChain ambient_chain,
                         std::shared_ptr<const ElementTable> table,
                         std::vector<Subgroup> members)
    : ambient_(std::move(ambient)),
      ambient_chain_(std::move(ambient_chain)),
      table_(std::move(table)),
      members_(std::move(members)) {}

std::optional<std::size_t> SubgroupSet::find(const StabilizerChain& h) const {
  if (h.degree() != ambient_.degree) throw DegreeMismatch(h.degree(), ambient_.degree);
  ElementSet set(table_->size());
  bool inside = true;
  h.for_each_element([&](std::span<const Point> images) {
    auto it = Permutation::from_images_unchecked({images.begin(), images.end()});
    if (!ambient_chain_.contains(it)) {
      inside = false;
      return false;
    }
    set.set(table_->index_of(it));
    return true;
  });
  if (!inside) return std::nullopt;
  set.reset(ElementTable::kIdentity);
  for (const auto& m : members_)
    if (m.order == h.order() && m.nonidentity == set) return m.id;
  return std::nullopt;
}

std::vector<std::size_t> SubgroupSet::prime_order_ids() const {
  std::vector<std::size_t> out;
  for (const auto& m : members_)
    if (is_prime(m.order)) out.push_back(m.id);
  return out;
}

SubgroupSet all_subgroups(const GeneratedGroup& g, const Budgets& budgets) {
  StabilizerChain chain = build_chain(g, budgets);
  auto table = std::make_shared<const ElementTable>(ElementTable::build(chain, budgets));
  std::vector<Candidate> found = LatticeEnumerator(*table, budgets).run(g.generators);

  std::sort(found.begin(), found.end(), [](const Candidate& a, const Candidate& b) {
    if (a.elements.size() != b.elements.size()) return a.elements.size() < b.elements.size();
    return a.members < b.members;
  });

  std::vector<Subgroup> members;
  members.reserve(found.size());
  for (auto& c : found) {
    Subgroup s;
    s.id = members.size();
    s.order = c.elements.size();
    for (std::uint32_t x : c.generators) s.generators.push_back(table->element(x));
    s.chain = build_chain(GeneratedGroup(g.degree, s.generators), budgets);
    s.key = key_of(c.members);
    s.nonidentity = std::move(c.members);
    s.nonidentity.reset(ElementTable::kIdentity);
    members.push_back(std::move(s));
  }
  return SubgroupSet(g, std::move(chain), std::move(table), std::move(members));
}

std::vector<StabilizerChain> prime_order_subgroups(const GeneratedGroup& g,
                                                   const Budgets& budgets) {
  StabilizerChain chain = build_chain(g, budgets);
  to_bounded(chain.order(), budgets.elements, "prime-order subgroup scan");
  std::set<Permutation> representatives;
  chain.for_each_element([&](std::span<const Point> images) {
    Permutation x = Permutation::from_images_unchecked({images.begin(), images.end()});
    std::uint64_t p = element_props(x).order;
    if (!is_prime(p) || chain.order() == p) return true;
    Permutation smallest = x;
    Permutation power_k = x;
    for (std::uint64_t k = 2; k < p; ++k) {
      power_k = power_k * x;
      smallest = std::min(smallest, power_k);
    }
    representatives.insert(std::move(smallest));
    return true;
  });
  std::vector<StabilizerChain> out;
  out.reserve(representatives.size());
  for (const auto& r : representatives)
    out.push_back(build_chain(GeneratedGroup(g.degree, {r}), budgets));
  return out;
}

}  // namespace isg

#pragma once

// Distance certificates for pairs of prime-order cyclic subgroups in groups
// too large for a full subgroup lattice.
//
// For distinct prime-order vertices A = <g_a>, B = <g_b> of the intersection
// graph of G:
//   (i)   A = B                                        -> distance 0
//   (ii)  <g_a, g_b> proper in G                       -> distance 2
//   (iii) M1 ∩ M2 != 1 for some maximal overgroups
//         M1 >= A, M2 >= B                             -> distance 3
//   (iv)  otherwise                                    -> distance >= 4
// Rule (iv) is only as good as the overgroup lists: a path A - C1 - C2 - B
// forces A <= C1 and B <= C2 (A and B have no proper non-trivial
// subgroups), and C1, C2 lie in maximal overgroups that still meet. Each
// list therefore carries a completeness tag and the certificate never
// claims distance >= 4 unconditionally.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "isg/budget.hpp"
#include "isg/stab_chain.hpp"
#include "isg/witness.hpp"

namespace isg {

enum class Conclusion {
  kSameSubgroup,
  kAtMostTwo,
  kExactlyThree,
  kAtLeastFourConditional,
  kFourConditional,
  kAtLeastThreeIncomplete,
  kInvalidWitness,
};

std::string to_string(Conclusion c);

struct Fact {
  std::string id;
  std::string statement;
  bool holds = false;
  nlohmann::ordered_json detail = nlohmann::ordered_json::object();
  double seconds = 0.0;
};

struct Certificate {
  std::string case_name;
  std::vector<Fact> facts;
  Conclusion conclusion = Conclusion::kInvalidWitness;
  /// Fact that determined the conclusion (the first failed validity check
  /// for invalid witnesses); empty when every rule-(iii) fact contributed.
  std::string decisive_fact;
  std::optional<int> claimed_distance;
  /// Conclusion agrees with the claim (true when no claim was made and the
  /// witness is valid).
  bool verified = false;
  std::vector<std::string> assumptions;
  std::vector<std::string> flags;
  std::string rationale;
  double seconds = 0.0;

  const Fact* find(const std::string& id) const;
};

struct CertifyOptions {
  std::uint64_t element_budget = Budgets{}.elements;
  std::size_t threads = 1;
};

Certificate distance_class(const WitnessCase& w, const CertifyOptions& options = {});

/// JSON rendering with a stable field order; timings are dropped when
/// `timings` is false so that outputs can be diffed.
nlohmann::ordered_json certificate_to_json(const Certificate& c, bool timings = true);
std::string certificate_to_text(const Certificate& c, bool timings = true);

/// Any subgroups of orders o1, o2 in a group of order oG meet non-trivially
/// when o1 * o2 > oG, because |H1 H2| = |H1| |H2| / |H1 ∩ H2| <= |G|.
/// Throws InvalidArgument unless o1 and o2 divide oG.
bool order_product_forces_intersection(const Order& o1, const Order& o2, const Order& oG);

/// Conjugator s with conjugate(p, s) == q. Throws InvalidArgument if the
/// cycle types differ.
Permutation cycle_conjugator(const Permutation& p, const Permutation& q);

struct CycleNormalizer {
  StabilizerChain chain;
  /// Normalizing element with conjugate(g, h) == g^multiplier.
  Permutation h;
  std::uint64_t multiplier = 1;
};

/// N_{A_n}(<g>) = <g, h> of order n(n-1)/2 for an n-cycle g, n an odd prime:
/// h is x -> r x (mod n) on the standard cycle, with r the smallest
/// residue of multiplicative order (n-1)/2 whose induced permutation is
/// even, carried over to g's labelling.
/// Throws InvalidArgument if n is not an odd prime or g is not an n-cycle.
CycleNormalizer build_cycle_normalizer(std::size_t n, const Permutation& g);

/// N_{S_n}(<g>) of order n(n-1), using a primitive root.
StabilizerChain build_full_cycle_normalizer(std::size_t n, const Permutation& g);

struct Admissibility {
  std::size_t n = 0;
  bool prime = false;
  bool admissible = false;
  /// (q, d) with n = (q^d - 1)/(q - 1), q a prime power, d >= 2.
  std::optional<std::pair<std::uint64_t, std::uint64_t>> representation;
  std::string explanation;
};

/// n prime, n != 11, and n not of the form (q^d - 1)/(q - 1) for a prime
/// power q and d >= 2.
Admissibility is_theorem2_prime(std::size_t n);

/// For admissible n other than 23 the normalizer of an n-cycle is its only
/// maximal overgroup in A_n (transitive groups of prime degree); n = 23
/// adds two M_23 classes, and inadmissible n add projective groups or M_11.
bool normalizer_is_sole_maximal_overgroup(std::size_t n);

/// g_a = (1,...,n), g_b = g_a^(n-1,n), with their normalizers as overgroup
/// lists; checks N(A) ∩ N(B) = 1 and <g_a, g_b> = A_n. Throws
/// InvalidArgument unless n is a prime >= 5.
Certificate verify_theorem2_pair(std::size_t n, const CertifyOptions& options = {});

/// The witness verify_theorem2_pair certifies.
WitnessCase theorem2_witness(std::size_t n);

struct OvergroupDerivation {
  std::vector<GeneratedGroup> copies;
  /// conjugate(base generator, conjugators[i]) gives copies[i].
  std::vector<Permutation> conjugators;
  Permutation found_cycle;
  Permutation conjugator;
  Order full_normalizer_order;
  Order stabilizer_order;   // |N_{S_n}(<g>) ∩ M'|
  std::uint64_t expected_count = 0;  // |N_{S_n}(<g>)| / stabilizer_order
  std::uint64_t search_draws = 0;
};

/// Every conjugate of `base` containing the n-cycle g that is reachable by
/// conjugating with N_{S_n}(<g>): locate an n-cycle c in base by seeded
/// random search, move c onto g, then take the normalizer orbit.
OvergroupDerivation derive_overgroup_copies(const GeneratedGroup& base, const Permutation& g,
                                            std::uint64_t seed = 1);

}  // namespace isg

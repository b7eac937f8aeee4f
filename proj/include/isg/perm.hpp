#pragma once

// Permutations on {0, ..., degree-1}.
//
// Points are 0-indexed internally and 1-indexed in every textual form
// (cycle notation in group files, witnesses and CLI arguments).
//
// Action convention, fixed for the whole library: permutations act on the
// right and products are read left to right,
//
//     (p * q)(x) = q(p(x)),
//
// so conjugate(p, s) = s^-1 * p * s maps s(x) to s(p(x)).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace isg {

using Point = std::uint16_t;

class Permutation {
 public:
  /// Identity of the given degree.
  explicit Permutation(std::size_t degree = 1);

  /// Throws InvalidArgument unless `images` is a bijection on its index set.
  static Permutation from_images(std::vector<Point> images);

  /// Skips the bijection check; for hot paths whose images come from
  /// products of valid permutations.
  static Permutation from_images_unchecked(std::vector<Point> images) noexcept {
    Permutation p;
    p.images_ = std::move(images);
    return p;
  }

  /// Identity of the given degree.
  static Permutation identity(std::size_t degree) { return Permutation(degree); }

  /// The cycle (c[0], c[1], ..., c[k-1]) on 0-indexed points.
  static Permutation cycle(std::size_t degree, std::span<const Point> points);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point x) const noexcept { return images_[x]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;

  /// Smallest moved point, or degree() for the identity.
  std::size_t first_moved_point() const noexcept;

  /// Cycle notation, 1-indexed. The identity renders as "()".
  std::string to_cycles() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a,
                                          const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<Point> images_;
};

/// Left-to-right product: apply p, then q.
Permutation compose(const Permutation& p, const Permutation& q);

inline Permutation operator*(const Permutation& p, const Permutation& q) {
  return compose(p, q);
}

/// s^-1 * p * s, written p^s.
Permutation conjugate(const Permutation& p, const Permutation& s);

/// p^k for k >= 0.
Permutation power(const Permutation& p, std::uint64_t k);

enum class Parity { kEven, kOdd };

struct ElementProps {
  std::uint64_t order = 1;
  Parity parity = Parity::kEven;
  /// Cycle lengths in non-increasing order, fixed points included, so the
  /// entries always sum to the degree.
  std::vector<std::size_t> cycle_type;
};

ElementProps element_props(const Permutation& p);

inline bool is_even(const Permutation& p) {
  return element_props(p).parity == Parity::kEven;
}

/// Parses 1-indexed disjoint cycle notation such as "(1,2,3)(4,5)".
/// "()" and the empty string denote the identity. Whitespace is ignored.
/// Throws ParseError naming the offending token.
Permutation parse_cycles(std::string_view text, std::size_t degree);

/// Writes p * q into `out` without allocating; all three spans share a size.
inline void compose_into(std::span<const Point> p, std::span<const Point> q,
                         std::span<Point> out) noexcept {
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = q[p[i]];
}

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace isg

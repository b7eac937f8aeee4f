#include "isg/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include <boost/container_hash/hash.hpp>

#include "isg/error.hpp"

namespace isg {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  if (degree == 0) throw InvalidArgument("permutation degree must be positive");
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation Permutation::from_images(std::vector<Point> images) {
  if (images.empty()) throw InvalidArgument("permutation degree must be positive");
  std::vector<bool> seen(images.size(), false);
  for (Point x : images) {
    if (x >= images.size() || seen[x])
      throw InvalidArgument("image array is not a bijection");
    seen[x] = true;
  }
  Permutation p(1);
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::cycle(std::size_t degree,
                               std::span<const Point> points) {
  Permutation p(degree);
  std::vector<bool> seen(degree, false);
  for (std::size_t i = 0; i < points.size(); ++i) {
    Point x = points[i];
    if (x >= degree || seen[x])
      throw InvalidArgument("cycle points must be distinct and below degree");
    seen[x] = true;
    p.images_[x] = points[(i + 1) % points.size()];
  }
  return p;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    inv.images_[images_[i]] = static_cast<Point>(i);
  return inv;
}

std::size_t Permutation::first_moved_point() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return i;
  return images_.size();
}

std::string Permutation::to_cycles() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    out += '(';
    std::size_t x = start;
    bool first = true;
    do {
      if (!first) out += ',';
      first = false;
      out += std::to_string(x + 1);
      seen[x] = true;
      x = images_[x];
    } while (x != start);
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw DegreeMismatch(p.degree(), q.degree());
  std::vector<Point> images(p.degree());
  compose_into(p.images(), q.images(), images);
  return Permutation::from_images_unchecked(std::move(images));
}

Permutation conjugate(const Permutation& p, const Permutation& s) {
  if (p.degree() != s.degree()) throw DegreeMismatch(p.degree(), s.degree());
  // s^-1 * p * s sends s(x) to s(p(x)).
  std::vector<Point> images(p.degree());
  for (std::size_t x = 0; x < p.degree(); ++x) images[s(x)] = s(p(x));
  return Permutation::from_images_unchecked(std::move(images));
}

Permutation power(const Permutation& p, std::uint64_t k) {
  Permutation result(p.degree());
  Permutation base = p;
  while (k > 0) {
    if (k & 1) result = result * base;
    base = base * base;
    k >>= 1;
  }
  return result;
}

ElementProps element_props(const Permutation& p) {
  ElementProps props;
  std::vector<bool> seen(p.degree(), false);
  for (std::size_t start = 0; start < p.degree(); ++start) {
    if (seen[start]) continue;
    std::size_t len = 0;
    for (std::size_t x = start; !seen[x]; x = p(x)) {
      seen[x] = true;
      ++len;
    }
    props.cycle_type.push_back(len);
    props.order = std::lcm(props.order, static_cast<std::uint64_t>(len));
  }
  std::sort(props.cycle_type.rbegin(), props.cycle_type.rend());
  std::size_t transpositions = p.degree() - props.cycle_type.size();
  props.parity = transpositions % 2 == 0 ? Parity::kEven : Parity::kOdd;
  return props;
}

namespace {

class CycleParser {
 public:
  CycleParser(std::string_view text, std::size_t degree)
      : text_(text), degree_(degree), images_(degree), used_(degree, false) {
    std::iota(images_.begin(), images_.end(), Point{0});
  }

  Permutation parse() {
    skip_space();
    while (pos_ < text_.size()) {
      expect('(');
      skip_space();
      if (peek() == ')') {
        // "()" is the identity; it may stand alone or be juxtaposed.
        ++pos_;
      } else {
        parse_cycle();
      }
      skip_space();
    }
    return Permutation::from_images(std::move(images_));
  }

 private:
  void parse_cycle() {
    std::vector<Point> points;
    for (;;) {
      skip_space();
      points.push_back(parse_point());
      skip_space();
      char c = peek();
      if (c == ',') {
        ++pos_;
      } else if (c == ')') {
        ++pos_;
        break;
      } else {
        fail("expected ',' or ')'");
      }
    }
    for (std::size_t i = 0; i < points.size(); ++i)
      images_[points[i]] = points[(i + 1) % points.size()];
  }

  Point parse_point() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (start == pos_) fail("expected a point");
    std::string_view token = text_.substr(start, pos_ - start);
    if (token.size() > 9) fail_token(token, "point out of range");
    std::size_t value = std::stoul(std::string(token));
    if (value < 1 || value > degree_) fail_token(token, "point out of range 1.." + std::to_string(degree_));
    Point x = static_cast<Point>(value - 1);
    if (used_[x]) fail_token(token, "repeated point");
    used_[x] = true;
    return x;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    std::string token = pos_ < text_.size() ? std::string(1, text_[pos_]) : "<end>";
    fail_token(token, what);
  }

  [[noreturn]] void fail_token(std::string_view token, const std::string& what) const {
    throw ParseError("cycle notation \"" + std::string(text_) + "\": " + what +
                     " at token '" + std::string(token) + "' (offset " +
                     std::to_string(pos_) + ")");
  }

  std::string_view text_;
  std::size_t degree_;
  std::size_t pos_ = 0;
  std::vector<Point> images_;
  std::vector<bool> used_;
};

}  // namespace

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  if (degree == 0) throw InvalidArgument("degree must be positive");
  return CycleParser(text, degree).parse();
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  auto images = p.images();
  return boost::hash_range(images.begin(), images.end());
}

}  // namespace isg

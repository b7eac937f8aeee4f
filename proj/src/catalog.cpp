#include "isg/catalog.hpp"

#include <array>
#include <charconv>

#include "isg/error.hpp"
#include "isg/group_io.hpp"

namespace isg {
namespace {

Permutation shifted_cycle(std::size_t degree, std::size_t first, std::size_t length) {
  std::vector<Point> pts(length);
  for (std::size_t i = 0; i < length; ++i) pts[i] = static_cast<Point>(first + i);
  return Permutation::cycle(degree, pts);
}

std::size_t parse_number(std::string_view token, std::string_view context) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw InvalidArgument("bad catalog parameter '" + std::string(token) + "' in '" +
                          std::string(context) + "'");
  return value;
}

CatalogSpec parse_single(std::string_view token) {
  CatalogSpec spec;
  std::size_t colon = token.find(':');
  spec.name = std::string(token.substr(0, colon));
  if (spec.name == "from_file") {
    if (colon == std::string_view::npos) throw InvalidArgument("from_file needs a path");
    spec.path = std::string(token.substr(colon + 1));
    return spec;
  }
  while (colon != std::string_view::npos) {
    std::size_t next = token.find(':', colon + 1);
    spec.params.push_back(parse_number(token.substr(colon + 1, next - colon - 1), token));
    colon = next;
  }
  return spec;
}

void require_params(const CatalogSpec& spec, std::size_t count) {
  if (spec.params.size() != count)
    throw InvalidArgument("catalog group '" + spec.name + "' takes " +
                          std::to_string(count) + " parameter(s)");
}

bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

std::string CatalogSpec::to_string() const {
  if (name == "from_file") return "from_file:" + path;
  std::string out = name;
  for (auto p : params) out += ":" + std::to_string(p);
  if (!factors.empty()) {
    out += "(";
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) out += ",";
      out += factors[i].to_string();
    }
    out += ")";
  }
  return out;
}

CatalogSpec parse_catalog_spec(const std::vector<std::string>& tokens) {
  if (tokens.empty()) throw InvalidArgument("empty catalog specification");
  if (tokens[0] == "direct_product") {
    CatalogSpec spec;
    spec.name = "direct_product";
    for (std::size_t i = 1; i < tokens.size(); ++i)
      spec.factors.push_back(parse_single(tokens[i]));
    if (spec.factors.empty()) throw InvalidArgument("direct_product needs factors");
    return spec;
  }
  if (tokens.size() != 1)
    throw InvalidArgument("only direct_product takes several catalog tokens");
  return parse_single(tokens[0]);
}

GeneratedGroup cyclic_group(std::size_t n) {
  if (n == 0) throw InvalidArgument("cyclic group needs n >= 1");
  std::vector<Permutation> gens;
  if (n > 1) gens.push_back(shifted_cycle(n, 0, n));
  return GeneratedGroup(n, std::move(gens), "C" + std::to_string(n));
}

GeneratedGroup dihedral_group(std::size_t n) {
  if (n < 3) throw InvalidArgument("dihedral group needs n >= 3");
  std::vector<Point> reflection(n);
  for (std::size_t i = 0; i < n; ++i) reflection[i] = static_cast<Point>((n - i) % n);
  return GeneratedGroup(n,
                        {shifted_cycle(n, 0, n),
                         Permutation::from_images(std::move(reflection))},
                        "D" + std::to_string(2 * n));
}

GeneratedGroup quaternion8() {
  // Elements indexed as 1, i, j, k, -1, -i, -j, -k. Right multiplication
  // x -> x*g respects the left-to-right product convention.
  constexpr std::array<std::array<int, 4>, 4> kUnitTable = {{
      {0, 1, 2, 3},   // 1 * {1,i,j,k}
      {1, 4, 3, 6},   // i * ... = i, -1, k, -j
      {2, 7, 4, 1},   // j * ... = j, -k, -1, i
      {3, 2, 5, 4},   // k * ... = k, j, -i, -1
  }};
  auto mul = [&](int a, int b) {
    int sign = (a >= 4) ^ (b >= 4);
    int r = kUnitTable[a % 4][b % 4];
    return sign ? (r + 4) % 8 : r;
  };
  auto right_mult = [&](int g) {
    std::vector<Point> images(8);
    for (int x = 0; x < 8; ++x) images[x] = static_cast<Point>(mul(x, g));
    return Permutation::from_images(std::move(images));
  };
  return GeneratedGroup(8, {right_mult(1), right_mult(2)}, "Q8");
}

GeneratedGroup symmetric_group(std::size_t n) {
  if (n == 0) throw InvalidArgument("symmetric group needs n >= 1");
  std::vector<Permutation> gens;
  if (n >= 2) gens.push_back(shifted_cycle(n, 0, 2));
  if (n >= 3) gens.push_back(shifted_cycle(n, 0, n));
  return GeneratedGroup(n, std::move(gens), "S" + std::to_string(n));
}

GeneratedGroup alternating_group(std::size_t n) {
  if (n == 0) throw InvalidArgument("alternating group needs n >= 1");
  std::vector<Permutation> gens;
  if (n >= 3) {
    gens.push_back(shifted_cycle(n, 0, 3));
    // An odd-length cycle on the remaining-most points; with (1,2,3) it
    // generates A_n.
    if (n >= 4) gens.push_back(n % 2 == 1 ? shifted_cycle(n, 0, n) : shifted_cycle(n, 1, n - 1));
  }
  return GeneratedGroup(n, std::move(gens), "A" + std::to_string(n));
}

GeneratedGroup elementary_abelian(std::size_t p, std::size_t k) {
  if (!is_prime(p) || k == 0)
    throw InvalidArgument("elementary_abelian needs a prime p and k >= 1");
  std::vector<GeneratedGroup> factors(k, cyclic_group(p));
  GeneratedGroup g = direct_product(factors);
  g.label = "C" + std::to_string(p) + "^" + std::to_string(k);
  return g;
}

GeneratedGroup direct_product(const std::vector<GeneratedGroup>& factors) {
  if (factors.empty()) throw InvalidArgument("direct_product needs factors");
  std::size_t degree = 0;
  for (const auto& f : factors) degree += f.degree;
  std::vector<Permutation> gens;
  std::string label;
  std::size_t offset = 0;
  for (const auto& f : factors) {
    for (const auto& g : f.generators) {
      std::vector<Point> images(degree);
      for (std::size_t x = 0; x < degree; ++x) images[x] = static_cast<Point>(x);
      for (std::size_t x = 0; x < f.degree; ++x)
        images[offset + x] = static_cast<Point>(offset + g(static_cast<Point>(x)));
      gens.push_back(Permutation::from_images(std::move(images)));
    }
    offset += f.degree;
    label += (label.empty() ? "" : "x") + f.label;
  }
  return GeneratedGroup(degree, std::move(gens), label);
}

GeneratedGroup catalog(const CatalogSpec& spec) {
  const std::string& n = spec.name;
  if (n == "cyclic") { require_params(spec, 1); return cyclic_group(spec.params[0]); }
  if (n == "dihedral") { require_params(spec, 1); return dihedral_group(spec.params[0]); }
  if (n == "quaternion8") { require_params(spec, 0); return quaternion8(); }
  if (n == "symmetric") { require_params(spec, 1); return symmetric_group(spec.params[0]); }
  if (n == "alternating") { require_params(spec, 1); return alternating_group(spec.params[0]); }
  if (n == "elementary_abelian") {
    require_params(spec, 2);
    return elementary_abelian(spec.params[0], spec.params[1]);
  }
  if (n == "direct_product") {
    std::vector<GeneratedGroup> groups;
    for (const auto& f : spec.factors) groups.push_back(catalog(f));
    return direct_product(groups);
  }
  if (n == "from_file") return load_group_file(spec.path);
  throw InvalidArgument("unknown catalog group '" + n + "'");
}

std::vector<CatalogEntry> builtin_catalog() {
  auto single = [](std::string text, std::uint64_t order) {
    return CatalogEntry{parse_catalog_spec({std::move(text)}), order};
  };
  auto product = [](std::vector<std::string> factors, std::uint64_t order) {
    factors.insert(factors.begin(), "direct_product");
    return CatalogEntry{parse_catalog_spec(factors), order};
  };
  return {
      single("cyclic:2", 2),
      single("cyclic:3", 3),
      single("cyclic:4", 4),
      single("cyclic:6", 6),
      single("cyclic:8", 8),
      single("cyclic:9", 9),
      single("cyclic:12", 12),
      single("cyclic:30", 30),
      single("elementary_abelian:2:2", 4),
      single("elementary_abelian:2:3", 8),
      single("elementary_abelian:3:2", 9),
      product({"cyclic:4", "cyclic:2"}, 8),
      product({"cyclic:6", "cyclic:2"}, 12),
      product({"cyclic:4", "cyclic:4"}, 16),
      single("quaternion8", 8),
      single("dihedral:3", 6),
      single("dihedral:4", 8),
      single("dihedral:5", 10),
      single("dihedral:6", 12),
      single("dihedral:7", 14),
      single("dihedral:8", 16),
      product({"symmetric:3", "cyclic:3"}, 18),
      product({"symmetric:3", "cyclic:2"}, 12),
      product({"quaternion8", "cyclic:2"}, 16),
      single("alternating:4", 12),
      product({"alternating:4", "cyclic:2"}, 24),
      single("symmetric:4", 24),
      product({"symmetric:3", "symmetric:3"}, 36),
      single("alternating:5", 60),
      single("symmetric:5", 120),
      single("alternating:6", 360),
      single("symmetric:6", 720),
      single("alternating:7", 2520),
  };
}

}  // namespace isg

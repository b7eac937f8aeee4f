#pragma once

// Built-in group constructors.
//
// Names and degrees:
//   cyclic:n              degree n, generated by (1,...,n)
//   dihedral:n            degree n >= 3, order 2n
//   quaternion8           degree 8, right regular representation of Q_8
//   symmetric:n           degree n
//   alternating:n         degree n
//   elementary_abelian:p:k  C_p^k, degree p*k
//   direct_product F1 F2 ...  factors on disjoint consecutive point blocks
//   from_file:PATH        JSON group file

#include <string>
#include <string_view>
#include <vector>

#include "isg/stab_chain.hpp"

namespace isg {

struct CatalogSpec {
  std::string name;
  std::vector<std::size_t> params;
  std::vector<CatalogSpec> factors;  // direct_product only
  std::string path;                  // from_file only

  /// Canonical text form, e.g. "alternating:5" or
  /// "direct_product(cyclic:2,cyclic:2)".
  std::string to_string() const;
};

/// Parses CLI tokens: a single token such as "alternating:5", or
/// "direct_product" followed by one token per factor.
CatalogSpec parse_catalog_spec(const std::vector<std::string>& tokens);

/// Throws InvalidArgument on unknown names or bad parameters.
GeneratedGroup catalog(const CatalogSpec& spec);

GeneratedGroup cyclic_group(std::size_t n);
GeneratedGroup dihedral_group(std::size_t n);
GeneratedGroup quaternion8();
GeneratedGroup symmetric_group(std::size_t n);
GeneratedGroup alternating_group(std::size_t n);
GeneratedGroup elementary_abelian(std::size_t p, std::size_t k);
GeneratedGroup direct_product(const std::vector<GeneratedGroup>& factors);

struct CatalogEntry {
  CatalogSpec spec;
  std::uint64_t order;  // documented order
};

/// The regression catalog used by the lattice and graph property suites:
/// small cyclic, dihedral, abelian, symmetric and alternating groups up to
/// A_7 (order 2520).
std::vector<CatalogEntry> builtin_catalog();

}  // namespace isg

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "snark/graph.hpp"

namespace snark {

// Canonical form by colour refinement plus individualization backtracking,
// adequate for n <= 64. Encoding is (n, upper-triangle multiplicity matrix)
// under the canonical labelling; labels are ignored.
struct CanonicalForm {
  int n = 0;
  std::vector<std::uint8_t> encoding;

  bool operator==(const CanonicalForm& o) const = default;
};

CanonicalForm canonical_form(const CubicMultigraph& g);

// old vertex index -> canonical index
std::vector<int> canonical_labeling(const CubicMultigraph& g);

bool is_isomorphic(const CubicMultigraph& a, const CubicMultigraph& b);

// FNV-1a 64 over the canonical encoding, as 16 hex chars.
std::string canonical_digest(const CubicMultigraph& g);

}  // namespace snark

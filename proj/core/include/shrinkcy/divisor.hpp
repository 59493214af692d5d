#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "shrinkcy/numeric.hpp"

namespace shrinkcy {

// An element of a surface's divisor-class lattice, written in a named basis.
// The basis_id ties the coefficient vector to a specific GramForm; mixing
// bases raises BasisMismatchError instead of silently producing nonsense.
struct DivisorClass {
  std::string basis_id;
  std::vector<Int> coeffs;

  friend bool operator==(const DivisorClass& a, const DivisorClass& b) {
    return a.basis_id == b.basis_id && a.coeffs == b.coeffs;
  }
};

// Symmetric integer intersection form on a named basis.
struct GramForm {
  std::string basis_id;
  std::vector<std::string> labels;        // basis element names, row order
  std::vector<std::vector<Int>> entries;  // square, symmetric
};

std::size_t dim(const GramForm& g);

// Throws ValidationError unless entries is square, symmetric, and sized to
// labels.
void validate(const GramForm& g);

// <a, b> under g. All three basis ids must agree.
Int pairing(const GramForm& g, const DivisorClass& a, const DivisorClass& b);

// Integer linear combination sum(scale * cls) over terms, all of which must
// live on basis_id with the given dimension. An empty term list yields zero.
DivisorClass combine(const std::string& basis_id, std::size_t dimension,
                     const std::vector<std::pair<Int, DivisorClass>>& terms);

}  // namespace shrinkcy

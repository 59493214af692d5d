#include "shrinkcy/divisor.hpp"

#include "shrinkcy/error.hpp"

namespace shrinkcy {

std::size_t dim(const GramForm& g) { return g.labels.size(); }

void validate(const GramForm& g) {
  const std::size_t n = g.labels.size();
  if (n == 0) throw ValidationError("gram form '" + g.basis_id + "' is empty");
  if (g.entries.size() != n)
    throw ValidationError("gram form '" + g.basis_id + "' is not square");
  for (const auto& row : g.entries)
    if (row.size() != n)
      throw ValidationError("gram form '" + g.basis_id + "' is not square");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (g.entries[i][j] != g.entries[j][i])
        throw ValidationError("gram form '" + g.basis_id + "' is not symmetric");
}

static void check_basis(const GramForm& g, const DivisorClass& c) {
  if (c.basis_id != g.basis_id)
    throw BasisMismatchError(g.basis_id, c.basis_id);
  if (c.coeffs.size() != g.labels.size())
    throw ValidationError("class on '" + c.basis_id + "' has " +
                          std::to_string(c.coeffs.size()) +
                          " coefficients, basis has " +
                          std::to_string(g.labels.size()));
}

Int pairing(const GramForm& g, const DivisorClass& a, const DivisorClass& b) {
  check_basis(g, a);
  check_basis(g, b);
  const std::size_t n = g.labels.size();
  Int total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coeffs[i] == 0) continue;
    Int row = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (b.coeffs[j] != 0) row += g.entries[i][j] * b.coeffs[j];
    total += a.coeffs[i] * row;
  }
  return total;
}

DivisorClass combine(const std::string& basis_id, std::size_t dimension,
                     const std::vector<std::pair<Int, DivisorClass>>& terms) {
  DivisorClass out{basis_id, std::vector<Int>(dimension, Int(0))};
  for (const auto& [scale, cls] : terms) {
    if (cls.basis_id != basis_id) throw BasisMismatchError(basis_id, cls.basis_id);
    if (cls.coeffs.size() != dimension)
      throw ValidationError("combine: term has " +
                            std::to_string(cls.coeffs.size()) +
                            " coefficients, expected " +
                            std::to_string(dimension));
    for (std::size_t i = 0; i < dimension; ++i)
      out.coeffs[i] += scale * cls.coeffs[i];
  }
  return out;
}

}  // namespace shrinkcy

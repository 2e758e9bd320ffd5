#pragma once

#include <vector>

#include "pvqe/chem/geometry.hpp"

namespace pvqe::chem {

/// Contracted s-type Gaussian centered on an atom. Coefficients multiply
/// normalized primitives.
struct BasisShell {
  std::size_t center = 0;
  std::vector<double> exponents;
  std::vector<double> coefficients;
};

/// Throws ConfigError unless exponents are positive and both lists match.
void validate(const BasisShell& shell);

/// One STO-3G 1s shell per hydrogen atom.
std::vector<BasisShell> sto3g_basis(const Geometry& g);

}  // namespace pvqe::chem

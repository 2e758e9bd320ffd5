#include "pvqe/chem/basis.hpp"

#include <array>

#include "pvqe/errors.hpp"

namespace pvqe::chem {

namespace {

// Hydrogen 1s, STO-3G (Hehre, Stewart & Pople 1969, zeta = 1.24), as
// distributed in the EMSL/Basis Set Exchange tabulation.
constexpr std::array<double, 3> kHydrogenExponents = {3.42525091, 0.62391373, 0.16885540};
constexpr std::array<double, 3> kHydrogenCoefficients = {0.15432897, 0.53532814, 0.44463454};

}  // namespace

void validate(const BasisShell& shell) {
  if (shell.exponents.empty() || shell.exponents.size() != shell.coefficients.size()) {
    throw ConfigError("basis shell needs matching, non-empty exponent and coefficient lists");
  }
  for (double a : shell.exponents) {
    if (!(a > 0.0)) throw ConfigError("basis exponents must be strictly positive");
  }
}

std::vector<BasisShell> sto3g_basis(const Geometry& g) {
  std::vector<BasisShell> basis;
  basis.reserve(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    basis.push_back({i, {kHydrogenExponents.begin(), kHydrogenExponents.end()},
                     {kHydrogenCoefficients.begin(), kHydrogenCoefficients.end()}});
  }
  return basis;
}

}  // namespace pvqe::chem

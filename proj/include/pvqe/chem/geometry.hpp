#pragma once

#include <string_view>
#include <variant>
#include <vector>

#include <Eigen/Core>

namespace pvqe::chem {

inline constexpr double kBohrRadiusAngstrom = 0.529177210903;

constexpr double angstrom_to_bohr(double x) { return x / kBohrRadiusAngstrom; }
constexpr double bohr_to_angstrom(double x) { return x * kBohrRadiusAngstrom; }

enum class LengthUnit { Angstrom, Bohr };

/// Hydrogen cluster in atomic units. Every atom carries nuclear charge 1.
class Geometry {
 public:
  /// Validates 1..4 atoms with pairwise separations above 1e-8 Bohr.
  Geometry(std::vector<Eigen::Vector3d> atoms_bohr, int charge = 0);

  const std::vector<Eigen::Vector3d>& atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }
  int charge() const { return charge_; }
  int electron_count() const { return static_cast<int>(atoms_.size()) - charge_; }
  /// 2S+1 of the lowest spin state compatible with the electron count.
  int multiplicity() const { return electron_count() % 2 == 0 ? 1 : 2; }
  int n_alpha() const { return (electron_count() + 1) / 2; }
  int n_beta() const { return electron_count() / 2; }

  double distance(std::size_t i, std::size_t j) const { return (atoms_[i] - atoms_[j]).norm(); }

 private:
  std::vector<Eigen::Vector3d> atoms_;
  int charge_ = 0;
};

/// Diatomic with bond length `distance`.
struct H2Spec {
  double distance;
};

/// Isosceles triangle: two sides of length `side` meeting at the apex with
/// opening angle `alpha_deg`. Equilateral at 60 degrees.
struct H3Spec {
  double alpha_deg;
  double side;
};

/// Rectangle whose two diagonals of length `diagonal` cross at `alpha_deg`.
/// Square at 90 degrees.
struct H4Spec {
  double alpha_deg;
  double diagonal;
};

struct ExplicitSpec {
  std::vector<Eigen::Vector3d> atoms;
};

using SystemSpec = std::variant<H2Spec, H3Spec, H4Spec, ExplicitSpec>;

/// Places the atoms of `spec`; lengths are interpreted in `unit`.
Geometry build_geometry(const SystemSpec& spec, LengthUnit unit = LengthUnit::Angstrom);

/// Sum over pairs of 1/r in Hartree.
double nuclear_repulsion(const Geometry& g);

/// Parses `key = value` records (case-insensitive):
///   system = h2 | h3 | h4
///   distance_angstrom / side_angstrom / diagonal_angstrom (or *_bohr)
///   alpha_deg
///   units = angstrom | bohr      (applies to atom lines)
///   atom = H x y z
/// Lines starting with '#' are comments. Lengths in the returned spec are in
/// Angstrom regardless of the units used in the text.
SystemSpec parse_system_spec(std::string_view text);

}  // namespace pvqe::chem

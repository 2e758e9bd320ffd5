#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>

namespace pvqe::qubitop {

using cplx = std::complex<double>;

inline constexpr int kMaxQubits = 32;

/// Tensor product of single-qubit Paulis in symplectic form. Bit q of `x`/`z`
/// describes qubit q; Y is x & z. Labels print the highest qubit first, so the
/// rightmost character is qubit 0.
struct PauliString {
  int n = 0;
  std::uint32_t x = 0;
  std::uint32_t z = 0;

  static PauliString identity(int n_qubits);
  static PauliString from_label(std::string_view label);
  /// Single-qubit Pauli `op` on `qubit`.
  static PauliString single(int n_qubits, int qubit, char op);

  std::string label() const;
  char at(int qubit) const;
  void set(int qubit, char op);
  bool is_identity() const { return (x | z) == 0; }
  std::uint32_t support() const { return x | z; }
  int weight() const;

  friend bool operator==(const PauliString&, const PauliString&) = default;
};

/// Lexicographic in label order (I < X < Y < Z, highest qubit first).
bool operator<(const PauliString& a, const PauliString& b);

struct PauliStringHash {
  std::size_t operator()(const PauliString& p) const noexcept {
    return std::hash<std::uint64_t>{}((std::uint64_t{p.x} << 32) ^ p.z ^ (std::uint64_t(p.n) << 58));
  }
};

/// a * b = phase * result.
std::pair<cplx, PauliString> multiply(const PauliString& a, const PauliString& b);

bool commutes(const PauliString& a, const PauliString& b);
/// True when every qubit carries I in one of the two or the same letter in both.
bool qubitwise_commutes(const PauliString& a, const PauliString& b);

/// Complex linear combination of Pauli strings, used while building operators.
class QubitOperator {
 public:
  explicit QubitOperator(int n_qubits = 0) : n_(n_qubits) {}

  int n_qubits() const { return n_; }
  void add(const PauliString& p, cplx c);
  const std::unordered_map<PauliString, cplx, PauliStringHash>& terms() const { return terms_; }

  QubitOperator& operator+=(const QubitOperator& other);
  QubitOperator& operator*=(cplx c);
  friend QubitOperator operator*(const QubitOperator& a, const QubitOperator& b);

  void prune(double threshold);

 private:
  int n_;
  std::unordered_map<PauliString, cplx, PauliStringHash> terms_;
};

/// Hermitian operator as a real combination of Pauli strings. Terms are kept
/// in label order so iteration is deterministic.
class PauliSum {
 public:
  explicit PauliSum(int n_qubits = 0) : n_(n_qubits) {}

  int n_qubits() const { return n_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  void add(const PauliString& p, double c);
  void add(std::string_view label, double c) { add(PauliString::from_label(label), c); }

  double coefficient(const PauliString& p) const;
  double coefficient(std::string_view label) const { return coefficient(PauliString::from_label(label)); }
  double identity_coefficient() const { return coefficient(PauliString::identity(n_)); }

  const std::map<PauliString, double>& terms() const { return terms_; }

  /// Drops terms with |c| < threshold.
  void prune(double threshold);

  PauliSum& operator+=(const PauliSum& other);
  /// Shift by a multiple of the identity.
  PauliSum& operator+=(double shift);

  /// Real part of a QubitOperator; throws NumericalError if any imaginary part
  /// exceeds `tolerance`.
  static PauliSum from_operator(const QubitOperator& op, double tolerance = 1e-10);

 private:
  int n_;
  std::map<PauliString, double> terms_;
};

}  // namespace pvqe::qubitop

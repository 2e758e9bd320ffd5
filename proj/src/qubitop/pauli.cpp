#include "pvqe/qubitop/pauli.hpp"

#include <bit>
#include <cmath>

#include "pvqe/errors.hpp"

namespace pvqe::qubitop {

namespace {

int letter_rank(const PauliString& p, int q) {
  bool xb = (p.x >> q) & 1u;
  bool zb = (p.z >> q) & 1u;
  if (xb && zb) return 2;  // Y
  if (xb) return 1;        // X
  if (zb) return 3;        // Z
  return 0;
}

void check_width(int n) {
  if (n < 0 || n > kMaxQubits) throw ConfigError("Pauli string width out of range");
}

}  // namespace

PauliString PauliString::identity(int n_qubits) {
  check_width(n_qubits);
  return PauliString{n_qubits, 0, 0};
}

PauliString PauliString::from_label(std::string_view label) {
  PauliString p = identity(static_cast<int>(label.size()));
  for (int i = 0; i < p.n; ++i) p.set(p.n - 1 - i, label[static_cast<std::size_t>(i)]);
  return p;
}

PauliString PauliString::single(int n_qubits, int qubit, char op) {
  PauliString p = identity(n_qubits);
  p.set(qubit, op);
  return p;
}

std::string PauliString::label() const {
  std::string s(static_cast<std::size_t>(n), 'I');
  for (int q = 0; q < n; ++q) s[static_cast<std::size_t>(n - 1 - q)] = at(q);
  return s;
}

char PauliString::at(int qubit) const {
  static constexpr char kLetters[] = {'I', 'X', 'Y', 'Z'};
  return kLetters[letter_rank(*this, qubit)];
}

void PauliString::set(int qubit, char op) {
  if (qubit < 0 || qubit >= n) throw ConfigError("qubit index out of range");
  const std::uint32_t bit = 1u << qubit;
  x &= ~bit;
  z &= ~bit;
  switch (op) {
    case 'I': case 'i': break;
    case 'X': case 'x': x |= bit; break;
    case 'Y': case 'y': x |= bit; z |= bit; break;
    case 'Z': case 'z': z |= bit; break;
    default: throw ConfigError(std::string("invalid Pauli letter '") + op + "'");
  }
}

int PauliString::weight() const { return std::popcount(support()); }

bool operator<(const PauliString& a, const PauliString& b) {
  if (a.n != b.n) return a.n < b.n;
  for (int q = a.n - 1; q >= 0; --q) {
    int ra = letter_rank(a, q);
    int rb = letter_rank(b, q);
    if (ra != rb) return ra < rb;
  }
  return false;
}

std::pair<cplx, PauliString> multiply(const PauliString& a, const PauliString& b) {
  if (a.n != b.n) throw ConfigError("Pauli strings of different width");
  // P = i^{|x&z|} X^x Z^z; moving Z^{z1} past X^{x2} costs (-1)^{|z1&x2|}.
  PauliString r{a.n, a.x ^ b.x, a.z ^ b.z};
  int k = std::popcount(a.x & a.z) + std::popcount(b.x & b.z) + 2 * std::popcount(a.z & b.x) -
          std::popcount(r.x & r.z);
  k = ((k % 4) + 4) % 4;
  static const cplx kPowers[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return {kPowers[k], r};
}

bool commutes(const PauliString& a, const PauliString& b) {
  return (std::popcount((a.x & b.z) ^ (a.z & b.x)) % 2) == 0;
}

bool qubitwise_commutes(const PauliString& a, const PauliString& b) {
  std::uint32_t both = a.support() & b.support();
  return ((a.x ^ b.x) & both) == 0 && ((a.z ^ b.z) & both) == 0;
}

void QubitOperator::add(const PauliString& p, cplx c) {
  if (p.n != n_) throw ConfigError("Pauli string width does not match operator");
  terms_[p] += c;
}

QubitOperator& QubitOperator::operator+=(const QubitOperator& other) {
  for (const auto& [p, c] : other.terms_) add(p, c);
  return *this;
}

QubitOperator& QubitOperator::operator*=(cplx c) {
  for (auto& [p, v] : terms_) v *= c;
  return *this;
}

QubitOperator operator*(const QubitOperator& a, const QubitOperator& b) {
  if (a.n_ != b.n_) throw ConfigError("operator widths differ");
  QubitOperator out(a.n_);
  for (const auto& [pa, ca] : a.terms_) {
    for (const auto& [pb, cb] : b.terms_) {
      auto [phase, p] = multiply(pa, pb);
      out.terms_[p] += phase * ca * cb;
    }
  }
  return out;
}

void QubitOperator::prune(double threshold) {
  std::erase_if(terms_, [&](const auto& kv) { return std::abs(kv.second) < threshold; });
}

void PauliSum::add(const PauliString& p, double c) {
  if (p.n != n_) throw ConfigError("Pauli string width does not match PauliSum");
  terms_[p] += c;
}

double PauliSum::coefficient(const PauliString& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? 0.0 : it->second;
}

void PauliSum::prune(double threshold) {
  std::erase_if(terms_, [&](const auto& kv) { return std::abs(kv.second) < threshold; });
}

PauliSum& PauliSum::operator+=(const PauliSum& other) {
  if (other.n_ != n_) throw ConfigError("PauliSum widths differ");
  for (const auto& [p, c] : other.terms_) terms_[p] += c;
  return *this;
}

PauliSum& PauliSum::operator+=(double shift) {
  terms_[PauliString::identity(n_)] += shift;
  return *this;
}

PauliSum PauliSum::from_operator(const QubitOperator& op, double tolerance) {
  PauliSum out(op.n_qubits());
  for (const auto& [p, c] : op.terms()) {
    if (std::abs(c.imag()) > tolerance) {
      throw NumericalError("operator is not Hermitian: term " + p.label() + " has imaginary part " +
                           std::to_string(c.imag()));
    }
    out.terms_[p] += c.real();
  }
  return out;
}

}  // namespace pvqe::qubitop

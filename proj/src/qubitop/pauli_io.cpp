#include "pvqe/qubitop/pauli_io.hpp"

#include <cstdio>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include "pvqe/errors.hpp"

namespace pvqe::qubitop {

void write_pauli_sum(std::ostream& out, const PauliSum& op) {
  out << "n_qubits = " << op.n_qubits() << '\n';
  char buf[64];
  for (const auto& [p, c] : op.terms()) {
    std::snprintf(buf, sizeof buf, "%.16e", c);
    out << p.label() << ' ' << buf << '\n';
  }
}

PauliSum read_pauli_sum(std::istream& in) {
  std::optional<PauliSum> op;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first)) continue;
    if (!op) {
      std::string eq;
      int n = -1;
      if (first != "n_qubits" || !(fields >> eq >> n) || eq != "=" || n < 0) {
        throw ConfigError("PauliSum text must start with 'n_qubits = N'");
      }
      op.emplace(n);
      continue;
    }
    double c;
    if (!(fields >> c)) throw ConfigError("line " + std::to_string(lineno) + ": missing coefficient");
    if (static_cast<int>(first.size()) != op->n_qubits()) {
      throw ConfigError("line " + std::to_string(lineno) + ": label width mismatch");
    }
    op->add(first, c);
  }
  if (!op) throw ConfigError("empty PauliSum text");
  return *op;
}

std::string to_text(const PauliSum& op) {
  std::ostringstream s;
  write_pauli_sum(s, op);
  return s.str();
}

PauliSum from_text(const std::string& text) {
  std::istringstream s(text);
  return read_pauli_sum(s);
}

}  // namespace pvqe::qubitop

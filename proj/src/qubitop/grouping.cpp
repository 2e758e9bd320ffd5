#include "pvqe/qubitop/grouping.hpp"

#include <algorithm>
#include <cmath>

#include "pvqe/errors.hpp"

namespace pvqe::qubitop {

std::vector<MeasurementGroup> group_qubitwise(const PauliSum& op) {
  if (op.empty()) throw ConfigError("cannot group an empty PauliSum");

  std::vector<PauliString> terms;
  std::vector<double> weight;
  for (const auto& [p, c] : op.terms()) {
    if (p.is_identity()) continue;
    terms.push_back(p);
    weight.push_back(std::abs(c));
  }
  const std::size_t m = terms.size();

  std::vector<std::vector<std::size_t>> conflicts(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (!qubitwise_commutes(terms[i], terms[j])) {
        conflicts[i].push_back(j);
        conflicts[j].push_back(i);
      }
    }
  }

  // `terms` is already in label order, so a stable sort keeps that as the last tie-break.
  std::vector<std::size_t> order(m);
  for (std::size_t i = 0; i < m; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (conflicts[a].size() != conflicts[b].size()) return conflicts[a].size() > conflicts[b].size();
    return weight[a] > weight[b];
  });

  std::vector<int> colour(m, -1);
  int n_colours = 0;
  for (std::size_t v : order) {
    std::vector<bool> used(static_cast<std::size_t>(n_colours) + 1, false);
    for (std::size_t u : conflicts[v]) {
      if (colour[u] >= 0) used[static_cast<std::size_t>(colour[u])] = true;
    }
    int c = 0;
    while (used[static_cast<std::size_t>(c)]) ++c;
    colour[v] = c;
    n_colours = std::max(n_colours, c + 1);
  }

  std::vector<MeasurementGroup> groups(static_cast<std::size_t>(n_colours));
  for (auto& g : groups) g.basis = PauliString::identity(op.n_qubits());
  for (std::size_t v : order) {
    auto& g = groups[static_cast<std::size_t>(colour[v])];
    g.members.push_back(terms[v]);
    g.basis.x |= terms[v].x;
    g.basis.z |= terms[v].z;
  }
  return groups;
}

}  // namespace pvqe::qubitop

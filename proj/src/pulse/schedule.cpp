#include "pvqe/pulse/schedule.hpp"

#include <algorithm>

#include "pvqe/errors.hpp"

namespace pvqe::pulse {

void Schedule::add(std::string name, std::vector<int> qubits, std::optional<int> duration) {
  if (qubits.empty()) throw ConfigError("schedule item '" + name + "' acts on no qubit");
  for (int q : qubits) {
    if (q < 0 || q >= n_) throw ConfigError("schedule item '" + name + "' uses qubit out of range");
  }
  if (duration && *duration < 0) throw ConfigError("negative duration for '" + name + "'");
  items_.push_back({std::move(name), std::move(qubits), duration, false});
}

void Schedule::barrier() { items_.push_back({"barrier", {}, 0, true}); }

void Schedule::append(const Schedule& other) {
  if (other.n_ > n_) throw ConfigError("appended schedule has more qubits");
  if (!items_.empty()) barrier();
  items_.insert(items_.end(), other.items_.begin(), other.items_.end());
}

std::vector<int> Schedule::start_times() const {
  std::vector<int> free_at(static_cast<std::size_t>(n_), 0);
  std::vector<int> starts;
  starts.reserve(items_.size());
  for (const auto& item : items_) {
    if (item.barrier) {
      const int t = free_at.empty() ? 0 : *std::max_element(free_at.begin(), free_at.end());
      std::fill(free_at.begin(), free_at.end(), t);
      starts.push_back(t);
      continue;
    }
    if (!item.duration) throw ConfigError("schedule item '" + item.name + "' has an unbound duration");
    int t = 0;
    for (int q : item.qubits) t = std::max(t, free_at[static_cast<std::size_t>(q)]);
    for (int q : item.qubits) free_at[static_cast<std::size_t>(q)] = t + *item.duration;
    starts.push_back(t);
  }
  return starts;
}

int schedule_duration(const Schedule& s) {
  const auto starts = s.start_times();
  int end = 0;
  for (std::size_t i = 0; i < starts.size(); ++i) {
    const auto& item = s.items()[i];
    end = std::max(end, starts[i] + (item.barrier ? 0 : *item.duration));
  }
  return end;
}

}  // namespace pvqe::pulse

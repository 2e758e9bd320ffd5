#pragma once

#include <optional>
#include <string>
#include <vector>

namespace pvqe::pulse {

/// One timed instruction. A barrier spans every qubit and has no duration.
struct ScheduleItem {
  std::string name;
  std::vector<int> qubits;
  /// Samples; nullopt while a duration parameter is unbound.
  std::optional<int> duration;
  bool barrier = false;
};

/// Instructions in program order on `n_qubits` channels.
class Schedule {
 public:
  explicit Schedule(int n_qubits = 0) : n_(n_qubits) {}

  int n_qubits() const { return n_; }
  const std::vector<ScheduleItem>& items() const { return items_; }
  bool empty() const { return items_.empty(); }

  void add(std::string name, std::vector<int> qubits, std::optional<int> duration);
  void barrier();
  /// Appends `other` after a barrier.
  void append(const Schedule& other);

  /// Start time of every item, each placed as soon as all of its qubits are
  /// free. Throws ConfigError on an unbound duration.
  std::vector<int> start_times() const;

 private:
  int n_;
  std::vector<ScheduleItem> items_;
};

/// Critical-path length in samples. The makespan does not depend on whether
/// single-qubit pulses are aligned early or late between barriers.
int schedule_duration(const Schedule& s);

inline double samples_to_seconds(int samples, double dt) { return samples * dt; }

}  // namespace pvqe::pulse

#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "pvqe/chem/geometry.hpp"
#include "pvqe/vqe/problems.hpp"
#include "pvqe/vqe/vqe.hpp"

namespace pvqe::vqe {

using SpecAt = std::function<chem::SystemSpec(double)>;

struct ScanOptions {
  /// Start each point after the first from the previous best parameters.
  bool warm_start = true;
  /// Warm start for the first point, e.g. the optimum of a neighbouring scan.
  std::optional<Eigen::VectorXd> initial;
  VqeOptions vqe{};
};

struct ScanRecord {
  double x = 0.0;
  Problem problem;
  VqeResult result;
};

/// One VQE per point, in the given order. Without warm start every point is
/// seeded independently (seed + index).
std::vector<ScanRecord> scan(const std::vector<double>& xs, const SpecAt& spec_at, const Binder& binder,
                             const ScanOptions& opts);

}  // namespace pvqe::vqe

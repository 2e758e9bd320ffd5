#include "pvqe/vqe/scan.hpp"

#include "pvqe/errors.hpp"

namespace pvqe::vqe {

std::vector<ScanRecord> scan(const std::vector<double>& xs, const SpecAt& spec_at, const Binder& binder,
                             const ScanOptions& opts) {
  if (xs.empty()) throw ConfigError("scan needs at least one point");
  std::vector<ScanRecord> out;
  out.reserve(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    ScanRecord rec;
    rec.x = xs[i];
    rec.problem = make_problem(spec_at(xs[i]));
    VqeOptions vo = opts.vqe;
    if (opts.warm_start && i > 0) {
      vo.x0 = out.back().result.params;
    } else if (opts.warm_start && opts.initial) {
      vo.x0 = opts.initial;
    } else if (!opts.warm_start) {
      vo.seed = opts.vqe.seed + i;
    }
    rec.result = vqe_minimize(rec.problem.hamiltonian, binder, vo);
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace pvqe::vqe

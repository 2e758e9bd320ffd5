#include "pvqe/vqe/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "pvqe/errors.hpp"

namespace pvqe::vqe {

namespace {

constexpr double kReflect = 1.0;
constexpr double kExpand = 2.0;
constexpr double kContract = 0.5;
constexpr double kShrink = 0.5;

struct BudgetExhausted {};

// Evaluates the objective on the free coordinates and records the trace.
class Counter {
 public:
  Counter(const Objective& f, Eigen::VectorXd base, std::vector<int> free, int budget, OptimizerResult& r)
      : f_(f), base_(std::move(base)), free_(std::move(free)), budget_(budget), r_(r) {}

  Eigen::VectorXd full(const Eigen::VectorXd& y) const {
    Eigen::VectorXd x = base_;
    for (std::size_t i = 0; i < free_.size(); ++i) x(free_[i]) = y(static_cast<Eigen::Index>(i));
    return x;
  }

  double operator()(const Eigen::VectorXd& y) {
    if (r_.evaluations >= budget_) throw BudgetExhausted{};
    Eigen::VectorXd x = full(y);
    double v = f_(x);
    ++r_.evaluations;
    r_.trace.push_back(v);
    if (!std::isfinite(v)) {
      std::ostringstream msg;
      msg << "objective returned " << v << " at evaluation " << r_.evaluations << "; trace:";
      for (double t : r_.trace) msg << ' ' << t;
      throw NumericalError(msg.str());
    }
    if (r_.evaluations == 1 || v < r_.f) {
      r_.f = v;
      r_.x = x;
    }
    return v;
  }

 private:
  const Objective& f_;
  Eigen::VectorXd base_;
  std::vector<int> free_;
  int budget_;
  OptimizerResult& r_;
};

}  // namespace

OptimizerResult minimize(const Objective& f, const Eigen::VectorXd& x0, const OptimizerOptions& opts) {
  if (opts.budget < 1) throw ConfigError("optimizer budget must be at least 1");
  if (opts.method != "nelder-mead") throw ConfigError("unknown optimizer method '" + opts.method + "'");
  if (!opts.mask.empty() && static_cast<Eigen::Index>(opts.mask.size()) != x0.size()) {
    throw ConfigError("optimizer mask length does not match the parameter count");
  }
  std::vector<int> free;
  for (Eigen::Index i = 0; i < x0.size(); ++i) {
    if (opts.mask.empty() || opts.mask[static_cast<std::size_t>(i)]) free.push_back(static_cast<int>(i));
  }

  OptimizerResult r;
  r.method = opts.method;
  r.x = x0;
  Counter eval(f, x0, free, opts.budget, r);
  const auto n = static_cast<Eigen::Index>(free.size());
  Eigen::VectorXd y0(n);
  for (Eigen::Index i = 0; i < n; ++i) y0(i) = x0(free[static_cast<std::size_t>(i)]);

  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<int> coin(0, 1);

  try {
    eval(y0);
    if (n == 0) return r;
    double step = opts.initial_step;
    Eigen::VectorXd start = y0;
    double f_start = r.f;
    int stalled = 0;
    for (;;) {
      std::vector<Eigen::VectorXd> simplex{start};
      std::vector<double> values{f_start};
      for (Eigen::Index i = 0; i < n; ++i) {
        Eigen::VectorXd v = start;
        // Restarted simplices get random edge signs so they do not retrace
        // the collapsed one.
        v(i) += (r.restarts > 0 && coin(rng)) ? -step : step;
        simplex.push_back(v);
        values.push_back(eval(v));
      }
      std::vector<std::size_t> order(simplex.size());
      for (;;) {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return values[a] < values[b]; });
        const std::size_t best = order.front(), worst = order.back(), second = order[order.size() - 2];

        double xspread = 0.0;
        for (auto i : order) xspread = std::max(xspread, (simplex[i] - simplex[best]).cwiseAbs().maxCoeff());
        if (xspread < opts.xtol || values[worst] - values[best] < opts.ftol) break;

        Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
        for (auto i : order)
          if (i != worst) centroid += simplex[i];
        centroid /= static_cast<double>(n);

        Eigen::VectorXd xr = centroid + kReflect * (centroid - simplex[worst]);
        double fr = eval(xr);
        if (fr < values[best]) {
          Eigen::VectorXd xe = centroid + kExpand * (xr - centroid);
          double fe = eval(xe);
          if (fe < fr) {
            simplex[worst] = xe;
            values[worst] = fe;
          } else {
            simplex[worst] = xr;
            values[worst] = fr;
          }
          continue;
        }
        if (fr < values[second]) {
          simplex[worst] = xr;
          values[worst] = fr;
          continue;
        }
        // Outside contraction when the reflection beat the worst point, inside otherwise.
        const bool outside = fr < values[worst];
        Eigen::VectorXd xc = outside ? Eigen::VectorXd(centroid + kContract * (xr - centroid))
                                     : Eigen::VectorXd(centroid + kContract * (simplex[worst] - centroid));
        double fc = eval(xc);
        if (fc < (outside ? fr : values[worst])) {
          simplex[worst] = xc;
          values[worst] = fc;
          continue;
        }
        for (auto i : order) {
          if (i == best) continue;
          simplex[i] = simplex[best] + kShrink * (simplex[i] - simplex[best]);
          values[i] = eval(simplex[i]);
        }
      }
      stalled = (r.restarts > 0 && f_start - r.f < opts.ftol) ? stalled + 1 : 0;
      if (stalled >= opts.stall_restarts) break;
      ++r.restarts;
      step = std::max(step * opts.restart_shrink, 10 * opts.xtol);
      start = Eigen::VectorXd(n);
      for (Eigen::Index i = 0; i < n; ++i) start(i) = r.x(free[static_cast<std::size_t>(i)]);
      f_start = r.f;
    }
  } catch (const BudgetExhausted&) {
  }
  return r;
}

}  // namespace pvqe::vqe

#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace ind4 {

struct OptResult {
  std::vector<double> argmax;
  double value = 0.0;
  long iterations = 0;
  bool converged = false;
};

/// 1000-point scan followed by golden-section refinement to |dx| <= xtol.
OptResult golden_section_max(const std::function<double(double)>& f, double lo, double hi,
                             double xtol = 1e-9, int scan_points = 1000);

/// Standard downhill simplex (maximization); stops when the simplex collapses
/// below xtol or the value spread falls below ftol.
OptResult nelder_mead_max(const std::function<double(std::span<const double>)>& f,
                          std::span<const double> x0, double step, double xtol = 1e-10,
                          double ftol = 1e-13, long max_iter = 20000);

/// Named-formula optimization with the per-formula strategy (scan+golden for
/// one-dimensional formulas, seeded multi-start simplex otherwise).
OptResult optimize_formula(const std::string& name);

}  // namespace ind4

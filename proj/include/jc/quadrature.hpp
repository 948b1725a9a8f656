// Adaptive Gauss-Kronrod (7/15) quadrature on finite intervals.
#pragma once

#include <functional>

namespace jc {

struct QuadResult {
  double value = 0, error = 0;
  long evaluations = 0;
  bool converged = true;
};

// globally adaptive bisection until the summed error estimate is below abs_tol
QuadResult integrate(const std::function<double(double)>& f, double a, double b, double abs_tol = 1e-10,
                     int max_intervals = 4000);

// integral over [0, inf) through x = t / (1 - t)
QuadResult integrate_half_line(const std::function<double(double)>& f, double abs_tol = 1e-10,
                               int max_intervals = 4000);

}  // namespace jc

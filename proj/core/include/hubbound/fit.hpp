#ifndef HUBBOUND_FIT_HPP
#define HUBBOUND_FIT_HPP

#include <vector>

namespace hubb {

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
};

/// Ordinary least squares y = slope*x + intercept.
LinearFit linear_fit(const std::vector<double>& x, const std::vector<double>& y);

/// Fit in log-log coordinates; points with y <= floor are dropped.
/// Requires at least 4 surviving points.
LinearFit loglog_fit(const std::vector<double>& x, const std::vector<double>& y,
                     double floor = 1e-14);

struct QuadLogFit {
  double a = 0.0, b = 0.0, c = 0.0;  // y = a ln^2|x| + b ln|x| + c
  double r2 = 0.0;
};

QuadLogFit quadratic_log_fit(const std::vector<double>& x,
                             const std::vector<double>& y);

}  // namespace hubb

#endif

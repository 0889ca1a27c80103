#include "hubbound/fit.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

namespace hubb {

LinearFit linear_fit(const std::vector<double>& x,
                     const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("linear_fit: need >= 2 matched points");
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0) throw std::invalid_argument("linear_fit: degenerate x");
  LinearFit f;
  f.slope = (n * sxy - sx * sy) / denom;
  f.intercept = (sy - f.slope * sx) / n;
  double ss_res = 0, ss_tot = 0;
  const double ym = sy / n;
  for (size_t i = 0; i < x.size(); ++i) {
    const double e = y[i] - (f.slope * x[i] + f.intercept);
    ss_res += e * e;
    ss_tot += (y[i] - ym) * (y[i] - ym);
  }
  f.r2 = ss_tot > 0 ? 1.0 - ss_res / ss_tot : 1.0;
  return f;
}

LinearFit loglog_fit(const std::vector<double>& x, const std::vector<double>& y,
                     double floor) {
  std::vector<double> lx, ly;
  for (size_t i = 0; i < x.size(); ++i) {
    if (y[i] > floor && x[i] > 0) {
      lx.push_back(std::log(x[i]));
      ly.push_back(std::log(y[i]));
    }
  }
  if (lx.size() < 4)
    throw std::invalid_argument("loglog_fit: fewer than 4 usable points");
  return linear_fit(lx, ly);
}

QuadLogFit quadratic_log_fit(const std::vector<double>& x,
                             const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 4)
    throw std::invalid_argument("quadratic_log_fit: need >= 4 points");
  const long n = static_cast<long>(x.size());
  Eigen::MatrixXd a(n, 3);
  Eigen::VectorXd b(n);
  for (long i = 0; i < n; ++i) {
    const double l = std::log(std::abs(x[i]));
    a(i, 0) = l * l;
    a(i, 1) = l;
    a(i, 2) = 1.0;
    b(i) = y[i];
  }
  Eigen::Vector3d coef = a.colPivHouseholderQr().solve(b);
  QuadLogFit f;
  f.a = coef(0);
  f.b = coef(1);
  f.c = coef(2);
  const Eigen::VectorXd resid = b - a * coef;
  const double ym = b.mean();
  double ss_tot = (b.array() - ym).square().sum();
  f.r2 = ss_tot > 0 ? 1.0 - resid.squaredNorm() / ss_tot : 1.0;
  return f;
}

}  // namespace hubb

#include "eprmol/roots.hpp"

#include <cmath>

#include "eprmol/errors.hpp"

namespace eprmol {
namespace {

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

}  // namespace

double bisect(const ScalarFunction& f, double lo, double hi, double x_tol) {
  if (!(lo <= hi)) throw ValidationError("bisect: lo must not exceed hi");
  if (!(x_tol > 0.0)) throw ValidationError("bisect: x_tol must be positive");

  double f_lo = f(lo);
  const double f_hi = f(hi);
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  if (sign_of(f_lo) == sign_of(f_hi)) {
    throw NumericalError("bisect: endpoints do not bracket a root");
  }

  // 200 halvings exhaust any double bracket.
  for (int iter = 0; iter < 200 && hi - lo > x_tol; ++iter) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    const double f_mid = f(mid);
    if (f_mid == 0.0) return mid;
    if (sign_of(f_mid) == sign_of(f_lo)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return lo + 0.5 * (hi - lo);
}

std::vector<BracketedRoot> find_sign_changes(const ScalarFunction& f,
                                             double lo, double hi,
                                             double step, double x_tol) {
  if (!(lo < hi)) throw ValidationError("range must satisfy x_min < x_max");
  if (!(step > 0.0)) throw ValidationError("grid_step must be positive");

  const auto n = static_cast<long>(std::ceil((hi - lo) / step));
  const double h = (hi - lo) / static_cast<double>(n);

  std::vector<BracketedRoot> roots;
  double x_prev = lo;
  const double f_lo = f(lo);
  // Sign of the last non-zero sample; lets exact grid zeros be classified.
  int last_sign = sign_of(f_lo);
  double zero_at = f_lo == 0.0 ? lo : NAN;

  for (long i = 1; i <= n; ++i) {
    const double x = (i == n) ? hi : lo + h * static_cast<double>(i);
    const double fx = f(x);
    const int s = sign_of(fx);

    if (s == 0) {
      if (std::isnan(zero_at)) zero_at = x;
    } else {
      if (!std::isnan(zero_at)) {
        if (last_sign != 0 && last_sign != s) {
          roots.push_back({zero_at, last_sign, s});
        }
        zero_at = NAN;
      } else if (last_sign != 0 && last_sign != s) {
        roots.push_back({bisect(f, x_prev, x, x_tol), last_sign, s});
      }
      last_sign = s;
    }
    x_prev = x;
  }
  return roots;
}

}  // namespace eprmol

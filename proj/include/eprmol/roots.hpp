#pragma once

#include <functional>
#include <vector>

namespace eprmol {

using ScalarFunction = std::function<double(double)>;

/// Bisection on a sign-changing bracket [lo, hi] until the bracket is no
/// wider than `x_tol`. Requires f(lo) and f(hi) of opposite sign (or one
/// of them zero); throws NumericalError otherwise.
double bisect(const ScalarFunction& f, double lo, double hi,
              double x_tol = 1e-10);

/// A bracketed root together with the sign of f just left of it.
struct BracketedRoot {
  double x;
  int sign_before;  // +1 or -1
  int sign_after;
};

/// Scans [lo, hi] on a uniform grid of spacing at most `step`, brackets
/// every sign change of f and refines it by bisection. Roots closer than
/// the grid spacing can be missed, and tangential zeros that do not change
/// sign are not reported. Results are sorted by x.
std::vector<BracketedRoot> find_sign_changes(const ScalarFunction& f,
                                             double lo, double hi,
                                             double step,
                                             double x_tol = 1e-10);

}  // namespace eprmol

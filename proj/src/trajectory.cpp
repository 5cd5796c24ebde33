#include "eprmol/trajectory.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "eprmol/action.hpp"
#include "eprmol/errors.hpp"
#include "eprmol/roots.hpp"
#include "eprmol/wavefunction.hpp"

namespace eprmol {
namespace {

// m (1 - alpha^2) / (hbar k), with 1 - alpha^2 factored to stay exact near 1.
double motion_coefficient(const ModelParams& p) {
  const double a = p.alpha();
  return p.m() * (1.0 - a) * (1.0 + a) / (p.hbar() * p.k());
}

Direction direction_of(double slope) {
  if (slope > 0.0) return Direction::forward;
  if (slope < 0.0) return Direction::retrograde;
  return Direction::turning;
}

}  // namespace

std::string_view to_string(Direction d) {
  switch (d) {
    case Direction::forward: return "forward";
    case Direction::retrograde: return "retrograde";
    case Direction::turning: return "turning";
  }
  return "?";
}

std::string_view to_string(TurningKind k) {
  return k == TurningKind::temporal_max ? "temporal_max" : "temporal_min";
}

std::string_view to_string(EventKind k) {
  return k == EventKind::creation ? "creation" : "annihilation";
}

double time_of_position(double x, const ModelParams& params) {
  const double d = guarded_amplitude_squared(x, params);
  return params.tau() + motion_coefficient(params) * x / d;
}

double dtdx(double x, const ModelParams& params) {
  const double d = guarded_amplitude_squared(x, params);
  const double a = params.alpha();
  const double k = params.k();
  const double d_prime = -4.0 * a * k * std::sin(2.0 * k * x + params.beta());
  return motion_coefficient(params) * (d - x * d_prime) / (d * d);
}

TrajectoryPoint trajectory_point(double x, const ModelParams& params) {
  const double slope = dtdx(x, params);
  return {x, time_of_position(x, params), slope, direction_of(slope)};
}

std::vector<TurningPoint> find_turning_points(double x_min, double x_max,
                                              const ModelParams& params,
                                              double grid_step) {
  const auto roots = find_sign_changes(
      [&](double x) { return dtdx(x, params); }, x_min, x_max, grid_step,
      kRootTolerance);

  std::vector<TurningPoint> out;
  out.reserve(roots.size());
  for (const auto& r : roots) {
    const auto kind = r.sign_before > 0 ? TurningKind::temporal_max
                                        : TurningKind::temporal_min;
    out.push_back({r.x, time_of_position(r.x, params), kind});
  }
  return out;
}

std::vector<Segment> segment_trajectory(double x_min, double x_max,
                                        const ModelParams& params,
                                        double grid_step) {
  const auto turning = find_turning_points(x_min, x_max, params, grid_step);

  std::vector<Segment> segments;
  segments.reserve(turning.size() + 1);
  double start = x_min;
  int id = 0;
  auto close_segment = [&](double end) {
    const double slope = dtdx(start + 0.5 * (end - start), params);
    segments.push_back({start, end, direction_of(slope), id++});
    start = end;
  };
  for (const auto& tp : turning) close_segment(tp.x);
  close_segment(x_max);

  // Directions are forced to alternate from the first segment; a midpoint
  // sample can only disagree if the grid missed a pair of turning points.
  for (std::size_t i = 1; i < segments.size(); ++i) {
    segments[i].direction = segments[i - 1].direction == Direction::forward
                                ? Direction::retrograde
                                : Direction::forward;
  }
  return segments;
}

int branch_of(double x, const std::vector<Segment>& segments) {
  for (const auto& s : segments) {
    if (x <= s.x_end) return s.branch_id;
  }
  return segments.empty() ? 0 : segments.back().branch_id;
}

std::vector<double> positions_at_time(double t, double x_min, double x_max,
                                      const ModelParams& params,
                                      double grid_step) {
  const auto roots = find_sign_changes(
      [&](double x) { return time_of_position(x, params) - t; }, x_min, x_max,
      grid_step, kRootTolerance);
  std::vector<double> xs;
  xs.reserve(roots.size());
  for (const auto& r : roots) xs.push_back(r.x);
  return xs;
}

WedgeBounds wedge_bounds(double x, const ModelParams& params) {
  if (!(x >= 0.0)) throw ValidationError("wedge bounds need x >= 0");
  const double a = params.alpha();
  const double scale = params.m() * x / (params.hbar() * params.k());
  if (a == 1.0) {
    return {0.0, x == 0.0 ? 0.0 : std::numeric_limits<double>::infinity(),
            true};
  }
  const double ratio = (1.0 - a) / (1.0 + a);
  const double lo = params.tau() + scale * ratio;
  const double hi = params.tau() + scale / ratio;
  return {std::min(lo, hi), std::max(lo, hi), false};
}

std::vector<TrajectoryEvent> pair_events(
    const std::vector<TurningPoint>& turning_points) {
  std::vector<TrajectoryEvent> events;
  events.reserve(turning_points.size());
  for (std::size_t i = 0; i < turning_points.size(); ++i) {
    const auto& tp = turning_points[i];
    if (i > 0) {
      if (tp.kind == turning_points[i - 1].kind) {
        throw ValidationError("turning points must alternate in kind");
      }
      if (!(tp.x > turning_points[i - 1].x)) {
        throw ValidationError("turning points must be sorted by x");
      }
    }
    const auto kind = tp.kind == TurningKind::temporal_min
                          ? EventKind::creation
                          : EventKind::annihilation;
    const int left = static_cast<int>(i);
    events.push_back({kind, tp.x, tp.t, left, left + 1});
  }
  return events;
}

double bohmian_time_of_position(double x, const ModelParams& params) {
  const double a = params.alpha();
  const double k = params.k();
  const double b = params.beta();
  const double integral_d =
      (1.0 + a * a) * x + (a / k) * (std::sin(2.0 * k * x + b) - std::sin(b));
  return params.tau() +
         params.composite_mass() / (params.hbar() * k) * integral_d;
}

double mechanical_momentum(double x, const ModelParams& params) {
  const double slope = dtdx(x, params);
  const double scale = params.m() / (params.hbar() * params.k());
  if (std::abs(slope) <= kTurningTolerance * scale) {
    std::ostringstream msg;
    msg << "velocity unbounded at turning point x = " << x;
    throw InfiniteVelocityError(msg.str(), x);
  }
  return params.composite_mass() / slope;
}

}  // namespace eprmol

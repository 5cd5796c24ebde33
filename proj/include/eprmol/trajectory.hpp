#pragma once

#include <string_view>
#include <vector>

#include "eprmol/params.hpp"

namespace eprmol {

enum class Direction { forward, retrograde, turning };
enum class TurningKind { temporal_max, temporal_min };
enum class EventKind { creation, annihilation };

std::string_view to_string(Direction d);
std::string_view to_string(TurningKind k);
std::string_view to_string(EventKind k);

struct TrajectoryPoint {
  double x;
  double t;
  double dtdx;
  Direction direction;
};

struct TurningPoint {
  double x;
  double t;
  TurningKind kind;
};

struct Segment {
  double x_start;
  double x_end;
  Direction direction;
  int branch_id;
};

struct WedgeBounds {
  double t_lower;
  double t_upper;
  /// alpha == 1: the upper edge has rotated onto the t axis.
  bool unbounded = false;
};

/// A creation event sits at a temporal minimum, an annihilation event at a
/// temporal maximum. Both join the two branches adjacent to the turning
/// point; ids match segment_trajectory over the same range.
struct TrajectoryEvent {
  EventKind kind;
  double x;
  double t;
  int left_branch;
  int right_branch;
};

inline constexpr double kDefaultGridStep = 1e-3;
inline constexpr double kRootTolerance = 1e-10;
/// |dt/dx| at or below this fraction of m/(hbar k) counts as a turning point
/// for velocity purposes.
inline constexpr double kTurningTolerance = 1e-6;

/// Equation of motion from Jacobi's theorem:
///   t = tau + m x (1 - alpha^2) / (hbar k D(x)).
double time_of_position(double x, const ModelParams& params);

/// Analytic derivative of time_of_position.
double dtdx(double x, const ModelParams& params);

TrajectoryPoint trajectory_point(double x, const ModelParams& params);

/// Zeros of dt/dx bracketed on a grid of spacing grid_step and refined by
/// bisection to kRootTolerance. Turning points closer together than the grid
/// spacing are missed.
std::vector<TurningPoint> find_turning_points(
    double x_min, double x_max, const ModelParams& params,
    double grid_step = kDefaultGridStep);

/// Partition of [x_min, x_max] at the turning points. Branch ids count from
/// 0 at x_min.
std::vector<Segment> segment_trajectory(double x_min, double x_max,
                                        const ModelParams& params,
                                        double grid_step = kDefaultGridStep);

/// Branch id of the segment containing x (a boundary point belongs to the
/// segment on its left).
int branch_of(double x, const std::vector<Segment>& segments);

/// Every x in [x_min, x_max] with time_of_position(x) == t. More than one
/// root means the molecule occupies several places at that instant.
std::vector<double> positions_at_time(double t, double x_min, double x_max,
                                      const ModelParams& params,
                                      double grid_step = kDefaultGridStep);

WedgeBounds wedge_bounds(double x, const ModelParams& params);

/// Throws ValidationError if kinds do not alternate.
std::vector<TrajectoryEvent> pair_events(
    const std::vector<TurningPoint>& turning_points);

/// Comparison curve: integral of M / W' from 0 to x, i.e. treating the
/// conjugate momentum as mechanical momentum.
double bohmian_time_of_position(double x, const ModelParams& params);

/// M dx/dt along the trajectory. Throws InfiniteVelocityError at a turning
/// point.
double mechanical_momentum(double x, const ModelParams& params);

}  // namespace eprmol

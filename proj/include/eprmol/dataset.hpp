#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "eprmol/entanglon.hpp"
#include "eprmol/params.hpp"
#include "eprmol/trajectory.hpp"

namespace eprmol {

/// Nine significant digits, locale independent ("inf"/"-inf"/"nan" for
/// non-finite values).
std::string format_csv_number(double value);

struct SampleRange {
  double x_min = 0.0;
  double x_max = 4.0;
  int samples = 1001;

  /// Throws ValidationError unless samples >= 2 and x_min < x_max.
  void validate() const;
  double at(int i) const;
};

struct TrajectoryRow {
  double x;
  double t;
  double dtdx;
  int branch_id;
  Direction direction;
};

struct TrajectoryDataset {
  ModelParams params = ModelParams::figure_one();
  std::vector<TrajectoryRow> rows;
  std::vector<TurningPoint> turning_points;
  std::vector<TrajectoryEvent> events;
};

TrajectoryDataset build_trajectory(const ModelParams& params,
                                   const SampleRange& range);

void write_trajectory_csv(std::ostream& os, const TrajectoryDataset& data);
nlohmann::json trajectory_to_json(const TrajectoryDataset& data);
TrajectoryDataset trajectory_from_json(const nlohmann::json& doc);

struct SweepRow {
  double x;
  double t;
  WedgeBounds wedge;
};

struct SweepCurve {
  double beta;
  std::vector<SweepRow> rows;
};

struct SweepDataset {
  ModelParams params = ModelParams::figure_one();
  std::vector<SweepCurve> curves;
};

/// The eight phase shifts 0, pi/4, ..., 7pi/4 of the Fig. 2 sweep.
std::vector<double> figure_two_betas();

/// One curve per beta. Throws ValidationError on an empty beta list.
SweepDataset build_sweep(const ModelParams& params, const SampleRange& range,
                         std::span<const double> betas);

void write_sweep_csv(std::ostream& os, const SweepDataset& data);
nlohmann::json sweep_to_json(const SweepDataset& data);

void write_decomposition_csv(std::ostream& os, const ModelParams& params,
                             const SampleRange& range);

struct LimitRow {
  double alpha;
  double x;
  double t;
  double m_q;
  bool has_ratio;
  double ratio;
};

std::vector<LimitRow> build_limit_rows(double x, const ModelParams& params,
                                       std::span<const double> alphas,
                                       LimitSide side);
void write_limit_csv(std::ostream& os, std::span<const LimitRow> rows);

nlohmann::json params_to_json(const ModelParams& params);

}  // namespace eprmol

#include "eprmol/dataset.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <numbers>
#include <ostream>

#include "eprmol/action.hpp"
#include "eprmol/errors.hpp"

namespace eprmol {

using nlohmann::json;

std::string format_csv_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                 std::chars_format::general, 9);
  return std::string(buf.data(), res.ptr);
}

void SampleRange::validate() const {
  if (samples < 2) throw ValidationError("samples must be at least 2");
  if (!std::isfinite(x_min) || !std::isfinite(x_max) || !(x_min < x_max)) {
    throw ValidationError("range must satisfy xmin < xmax");
  }
}

double SampleRange::at(int i) const {
  if (i == samples - 1) return x_max;
  return x_min + (x_max - x_min) * static_cast<double>(i) /
                     static_cast<double>(samples - 1);
}

TrajectoryDataset build_trajectory(const ModelParams& params,
                                   const SampleRange& range) {
  range.validate();
  TrajectoryDataset data;
  data.params = params;
  data.turning_points =
      find_turning_points(range.x_min, range.x_max, params);
  data.events = pair_events(data.turning_points);
  const auto segments = segment_trajectory(range.x_min, range.x_max, params);

  data.rows.reserve(static_cast<std::size_t>(range.samples));
  for (int i = 0; i < range.samples; ++i) {
    const TrajectoryPoint p = trajectory_point(range.at(i), params);
    data.rows.push_back(
        {p.x, p.t, p.dtdx, branch_of(p.x, segments), p.direction});
  }
  return data;
}

void write_trajectory_csv(std::ostream& os, const TrajectoryDataset& data) {
  os << "x,t,dtdx,branch_id,direction\n";
  for (const auto& r : data.rows) {
    os << format_csv_number(r.x) << ',' << format_csv_number(r.t) << ','
       << format_csv_number(r.dtdx) << ',' << r.branch_id << ','
       << to_string(r.direction) << '\n';
  }
}

json params_to_json(const ModelParams& p) {
  return json{{"hbar", p.hbar()},   {"m", p.m()},     {"alpha", p.alpha()},
              {"beta", p.beta()},   {"k", p.k()},     {"tau", p.tau()},
              {"E", p.energy()},    {"M", p.composite_mass()}};
}

json trajectory_to_json(const TrajectoryDataset& data) {
  json rows = json::array();
  for (const auto& r : data.rows) {
    rows.push_back({{"x", r.x},
                    {"t", r.t},
                    {"dtdx", r.dtdx},
                    {"branch_id", r.branch_id},
                    {"direction", std::string(to_string(r.direction))}});
  }
  json turning = json::array();
  for (const auto& tp : data.turning_points) {
    turning.push_back(
        {{"x", tp.x}, {"t", tp.t}, {"kind", std::string(to_string(tp.kind))}});
  }
  json events = json::array();
  for (const auto& e : data.events) {
    events.push_back({{"kind", std::string(to_string(e.kind))},
                      {"x", e.x},
                      {"t", e.t},
                      {"branches", {e.left_branch, e.right_branch}}});
  }
  return json{{"params", params_to_json(data.params)},
              {"rows", std::move(rows)},
              {"turning_points", std::move(turning)},
              {"events", std::move(events)}};
}

namespace {

Direction parse_direction(const std::string& s) {
  if (s == "forward") return Direction::forward;
  if (s == "retrograde") return Direction::retrograde;
  if (s == "turning") return Direction::turning;
  throw ValidationError("unknown direction '" + s + "'");
}

}  // namespace

TrajectoryDataset trajectory_from_json(const json& doc) {
  const auto& p = doc.at("params");
  TrajectoryDataset data;
  data.params = ModelParams::create(
      p.at("hbar").get<double>(), p.at("m").get<double>(),
      p.at("alpha").get<double>(), p.at("beta").get<double>(),
      p.at("k").get<double>(), p.at("tau").get<double>());
  for (const auto& r : doc.at("rows")) {
    data.rows.push_back({r.at("x").get<double>(), r.at("t").get<double>(),
                         r.at("dtdx").get<double>(),
                         r.at("branch_id").get<int>(),
                         parse_direction(r.at("direction").get<std::string>())});
  }
  for (const auto& tp : doc.at("turning_points")) {
    const auto kind = tp.at("kind").get<std::string>() == "temporal_max"
                          ? TurningKind::temporal_max
                          : TurningKind::temporal_min;
    data.turning_points.push_back(
        {tp.at("x").get<double>(), tp.at("t").get<double>(), kind});
  }
  for (const auto& e : doc.at("events")) {
    const auto kind = e.at("kind").get<std::string>() == "creation"
                          ? EventKind::creation
                          : EventKind::annihilation;
    const auto& b = e.at("branches");
    data.events.push_back({kind, e.at("x").get<double>(),
                           e.at("t").get<double>(), b.at(0).get<int>(),
                           b.at(1).get<int>()});
  }
  return data;
}

std::vector<double> figure_two_betas() {
  std::vector<double> betas;
  for (int i = 0; i < 8; ++i) betas.push_back(i * std::numbers::pi / 4.0);
  return betas;
}

SweepDataset build_sweep(const ModelParams& params, const SampleRange& range,
                         std::span<const double> betas) {
  range.validate();
  if (betas.empty()) throw ValidationError("beta list is empty");

  SweepDataset data;
  data.params = params;
  for (double beta : betas) {
    const ModelParams p = params.with_beta(beta);
    SweepCurve curve{beta, {}};
    curve.rows.reserve(static_cast<std::size_t>(range.samples));
    for (int i = 0; i < range.samples; ++i) {
      const double x = range.at(i);
      curve.rows.push_back({x, time_of_position(x, p),
                            x >= 0.0 ? wedge_bounds(x, p)
                                     : WedgeBounds{NAN, NAN, false}});
    }
    data.curves.push_back(std::move(curve));
  }
  return data;
}

void write_sweep_csv(std::ostream& os, const SweepDataset& data) {
  os << "curve,beta,x,t,t_lower,t_upper\n";
  for (std::size_t c = 0; c < data.curves.size(); ++c) {
    const auto& curve = data.curves[c];
    for (const auto& r : curve.rows) {
      os << c << ',' << format_csv_number(curve.beta) << ','
         << format_csv_number(r.x) << ',' << format_csv_number(r.t) << ','
         << format_csv_number(r.wedge.t_lower) << ','
         << format_csv_number(r.wedge.t_upper) << '\n';
    }
  }
}

json sweep_to_json(const SweepDataset& data) {
  json curves = json::array();
  for (const auto& curve : data.curves) {
    json rows = json::array();
    for (const auto& r : curve.rows) {
      rows.push_back({{"x", r.x},
                      {"t", r.t},
                      {"t_lower", r.wedge.t_lower},
                      {"t_upper", r.wedge.t_upper}});
    }
    curves.push_back({{"beta", curve.beta}, {"rows", std::move(rows)}});
  }
  return json{{"params", params_to_json(data.params)},
              {"curves", std::move(curves)}};
}

void write_decomposition_csv(std::ostream& os, const ModelParams& params,
                             const SampleRange& range) {
  range.validate();
  os << "x,c_p1,c_p2,c_ent,total\n";
  for (int i = 0; i < range.samples; ++i) {
    const double x = range.at(i);
    const Decomposition d = decompose_time(x, params);
    os << format_csv_number(x) << ',' << format_csv_number(d.c_p1) << ','
       << format_csv_number(d.c_p2) << ',' << format_csv_number(d.c_ent)
       << ',' << format_csv_number(d.total) << '\n';
  }
}

std::vector<LimitRow> build_limit_rows(double x, const ModelParams& params,
                                       std::span<const double> alphas,
                                       LimitSide side) {
  const auto times = epr_limit_time(x, params, alphas, side);
  const bool trigger = side == LimitSide::below && is_trigger_point(x, params);

  std::vector<LimitRow> rows;
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    const double a = alphas[i];
    const ModelParams p = params.with_alpha(a);
    LimitRow row{a, x, times.entries[i].second,
                 effective_quantum_mass(x, p).m_q, false, 0.0};
    if (trigger) {
      row.has_ratio = true;
      row.ratio = entanglon_divergence(x, params, alphas.subspan(i, 1))
                      .entries.front()
                      .second;
    }
    rows.push_back(row);
  }
  return rows;
}

void write_limit_csv(std::ostream& os, std::span<const LimitRow> rows) {
  os << "alpha,x,t,m_q,ratio\n";
  for (const auto& r : rows) {
    os << format_csv_number(r.alpha) << ',' << format_csv_number(r.x) << ','
       << format_csv_number(r.t) << ',' << format_csv_number(r.m_q) << ',';
    if (r.has_ratio) os << format_csv_number(r.ratio);
    os << '\n';
  }
}

}  // namespace eprmol

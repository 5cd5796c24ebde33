#include "eprmol/commands.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "eprmol/dataset.hpp"
#include "eprmol/errors.hpp"
#include "eprmol/svg_plot.hpp"
#include "eprmol/trajectory.hpp"

namespace eprmol {
namespace {

struct RunConfig {
  double hbar = 1.0;
  double m = 1.0;
  double alpha = 0.5;
  double beta = 0.0;
  double k = std::numbers::pi / 2;
  double tau = 0.0;
  SampleRange range;
  std::string format;
  std::string out_path;

  ModelParams params() const {
    return ModelParams::create(hbar, m, alpha, beta, k, tau);
  }
};

std::vector<double> parse_number_list(const std::string& text) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    try {
      std::size_t used = 0;
      values.push_back(std::stod(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) {
        throw std::invalid_argument(item);
      }
    } catch (const std::logic_error&) {
      throw ValidationError("not a number: '" + item + "'");
    }
  }
  return values;
}

void require_format(const std::string& format,
                    std::initializer_list<const char*> allowed,
                    const std::string& command) {
  for (const char* f : allowed) {
    if (format == f) return;
  }
  throw ValidationError("format '" + format + "' is not supported by " +
                        command);
}

// Writes through `emit` into --out or the fallback stream.
void write_output(const RunConfig& cfg, std::ostream& fallback,
                  const std::function<void(std::ostream&)>& emit) {
  if (cfg.out_path.empty()) {
    emit(fallback);
    return;
  }
  std::ofstream file(cfg.out_path, std::ios::binary);
  if (!file) throw ValidationError("cannot open output file " + cfg.out_path);
  emit(file);
  if (!file) throw NumericalError("failed writing " + cfg.out_path);
}

std::vector<double> default_alphas(LimitSide side) {
  std::vector<double> alphas;
  for (int j = 1; j <= 6; ++j) {
    const double eps = std::pow(10.0, -j);
    alphas.push_back(side == LimitSide::below ? 1.0 - eps : 1.0 + eps);
  }
  return alphas;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  RunConfig cfg;

  CLI::App app{"Quantum trajectories of the two-particle entanglement molecule"};
  app.name("eprmol");
  app.require_subcommand(1);
  app.add_option("--hbar", cfg.hbar, "Action scale");
  app.add_option("--m", cfg.m, "Mass of particle 1");
  app.add_option("--alpha", cfg.alpha, "Amplitude / mass ratio");
  app.add_option("--beta", cfg.beta, "Phase shift (radians)");
  app.add_option("--k", cfg.k, "Wavenumber");
  app.add_option("--tau", cfg.tau, "Epoch");
  app.add_option("--xmin", cfg.range.x_min, "Range start");
  app.add_option("--xmax", cfg.range.x_max, "Range end");
  app.add_option("--samples", cfg.range.samples, "Number of samples");
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"csv", "json", "svg"}));
  app.add_option("--out", cfg.out_path, "Output file (default: stdout)");

  auto* trajectory = app.add_subcommand("trajectory", "Sampled t(x) with turning points and events");
  auto* sweep = app.add_subcommand("sweep", "One trajectory per phase shift, with wedge bounds");
  std::string beta_list;
  bool betas_given = false;
  sweep->add_option("--betas", beta_list, "Comma-separated phase shifts")
      ->each([&](const std::string&) { betas_given = true; });

  auto* figure = app.add_subcommand("figure", "Render figure 1 or 2 as SVG");
  int figure_id = 1;
  bool markers = false;
  figure->add_option("id", figure_id, "Figure number (1 or 2)")->required();
  figure->add_flag("--markers", markers, "Mark creation/annihilation events");

  auto* decompose = app.add_subcommand("decompose", "Particle and entanglon contributions to t");
  auto* limit = app.add_subcommand("limit", "alpha -> 1 study at one position");
  std::string side_token = "below";
  std::string alpha_list;
  double limit_x = 1.0;
  limit->add_option("--side", side_token, "below | above");
  limit->add_option("--alphas", alpha_list, "Comma-separated alpha sequence");
  limit->add_option("--x", limit_x, "Position");

  auto* invert = app.add_subcommand("invert", "All positions occupied at time t");
  double invert_t = 0.0;
  invert->add_option("--t", invert_t, "Time")->required();

  auto* params_cmd = app.add_subcommand("params", "Print the validated parameter set");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    const ModelParams params = cfg.params();

    if (trajectory->parsed()) {
      if (cfg.format.empty()) cfg.format = "csv";
      require_format(cfg.format, {"csv", "json"}, "trajectory");
      const auto data = build_trajectory(params, cfg.range);
      write_output(cfg, out, [&](std::ostream& os) {
        if (cfg.format == "csv") {
          write_trajectory_csv(os, data);
        } else {
          os << trajectory_to_json(data).dump() << '\n';
        }
      });
    } else if (sweep->parsed()) {
      if (cfg.format.empty()) cfg.format = "csv";
      require_format(cfg.format, {"csv", "json"}, "sweep");
      const auto betas =
          betas_given ? parse_number_list(beta_list) : figure_two_betas();
      const auto data = build_sweep(params, cfg.range, betas);
      write_output(cfg, out, [&](std::ostream& os) {
        if (cfg.format == "csv") {
          write_sweep_csv(os, data);
        } else {
          os << sweep_to_json(data).dump() << '\n';
        }
      });
    } else if (figure->parsed()) {
      if (cfg.format.empty()) cfg.format = "svg";
      require_format(cfg.format, {"svg"}, "figure");
      const std::string svg = render_figure(figure_id, params, cfg.range, markers);
      write_output(cfg, out, [&](std::ostream& os) { os << svg; });
    } else if (decompose->parsed()) {
      if (cfg.format.empty()) cfg.format = "csv";
      require_format(cfg.format, {"csv"}, "decompose");
      std::ostringstream buf;
      write_decomposition_csv(buf, params, cfg.range);
      write_output(cfg, out, [&](std::ostream& os) { os << buf.str(); });
    } else if (limit->parsed()) {
      if (cfg.format.empty()) cfg.format = "csv";
      require_format(cfg.format, {"csv"}, "limit");
      const LimitSide side = parse_limit_side(side_token);
      const auto alphas =
          alpha_list.empty() ? default_alphas(side) : parse_number_list(alpha_list);
      const auto rows = build_limit_rows(limit_x, params, alphas, side);
      write_output(cfg, out, [&](std::ostream& os) { write_limit_csv(os, rows); });
    } else if (invert->parsed()) {
      if (cfg.format.empty()) cfg.format = "csv";
      require_format(cfg.format, {"csv", "json"}, "invert");
      cfg.range.validate();
      const auto xs =
          positions_at_time(invert_t, cfg.range.x_min, cfg.range.x_max, params);
      write_output(cfg, out, [&](std::ostream& os) {
        if (cfg.format == "csv") {
          os << "x\n";
          for (double x : xs) os << format_csv_number(x) << '\n';
        } else {
          os << nlohmann::json{{"t", invert_t}, {"positions", xs}}.dump() << '\n';
        }
      });
    } else if (params_cmd->parsed()) {
      if (cfg.format.empty()) cfg.format = "json";
      require_format(cfg.format, {"json"}, "params");
      write_output(cfg, out, [&](std::ostream& os) {
        os << params_to_json(params).dump(2) << '\n';
      });
    }
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SingularityError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitOk;
}

}  // namespace eprmol

#include "eprmol/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "eprmol/errors.hpp"

namespace eprmol {
namespace {

constexpr double kMarginLeft = 70.0;
constexpr double kMarginRight = 30.0;
constexpr double kMarginTop = 50.0;
constexpr double kMarginBottom = 60.0;

std::string fmt(double v, int digits = 3) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

// Round step for about `target` ticks across `span`.
double tick_step(double span, int target) {
  const double raw = span / target;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  for (double f : {1.0, 2.0, 5.0, 10.0}) {
    if (raw <= f * mag) return f * mag;
  }
  return 10.0 * mag;
}

}  // namespace

SvgPlot::SvgPlot(double width, double height)
    : width_(width), height_(height) {}

void SvgPlot::set_axis_labels(std::string horizontal, std::string vertical) {
  h_label_ = std::move(horizontal);
  v_label_ = std::move(vertical);
}

void SvgPlot::add_marker(PlotPoint p, std::string label) {
  markers_.push_back({p, std::move(label)});
}

std::string SvgPlot::render() const {
  double h_min = 0.0, h_max = 1.0, v_min = 0.0, v_max = 1.0;
  bool first = true;
  for (const auto& c : curves_) {
    for (const auto& p : c.points) {
      if (!std::isfinite(p.h) || !std::isfinite(p.v)) continue;
      if (first) {
        h_min = h_max = p.h;
        v_min = v_max = p.v;
        first = false;
      }
      h_min = std::min(h_min, p.h);
      h_max = std::max(h_max, p.h);
      v_min = std::min(v_min, p.v);
      v_max = std::max(v_max, p.v);
    }
  }
  // The launch point sits at the origin; keep it in view.
  h_min = std::min(h_min, 0.0);
  v_min = std::min(v_min, 0.0);
  if (h_max <= h_min) h_max = h_min + 1.0;
  if (v_max <= v_min) v_max = v_min + 1.0;

  const double pw = width_ - kMarginLeft - kMarginRight;
  const double ph = height_ - kMarginTop - kMarginBottom;
  auto px = [&](double h) { return kMarginLeft + (h - h_min) / (h_max - h_min) * pw; };
  auto py = [&](double v) { return kMarginTop + (v_max - v) / (v_max - v_min) * ph; };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
     << fmt(width_, 0) << "\" height=\"" << fmt(height_, 0) << "\" viewBox=\"0 0 "
     << fmt(width_, 0) << ' ' << fmt(height_, 0) << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (!title_.empty()) {
    os << "<text x=\"" << fmt(width_ / 2, 1) << "\" y=\"28\" text-anchor=\"middle\" "
       << "font-family=\"sans-serif\" font-size=\"16\">" << escape(title_) << "</text>\n";
  }
  os << "<rect id=\"plot-area\" x=\"" << fmt(kMarginLeft) << "\" y=\"" << fmt(kMarginTop)
     << "\" width=\"" << fmt(pw) << "\" height=\"" << fmt(ph)
     << "\" fill=\"none\" stroke=\"#888\" data-h-min=\"" << fmt(h_min, 12)
     << "\" data-h-max=\"" << fmt(h_max, 12) << "\" data-v-min=\"" << fmt(v_min, 12)
     << "\" data-v-max=\"" << fmt(v_max, 12) << "\"/>\n";

  // Ticks and grid.
  os << "<g class=\"axes\" stroke=\"#ccc\" stroke-width=\"0.5\" font-family=\"sans-serif\" "
        "font-size=\"11\">\n";
  const double hs = tick_step(h_max - h_min, 8);
  for (double h = std::ceil(h_min / hs) * hs; h <= h_max + 1e-12; h += hs) {
    os << "<line x1=\"" << fmt(px(h)) << "\" y1=\"" << fmt(kMarginTop) << "\" x2=\""
       << fmt(px(h)) << "\" y2=\"" << fmt(kMarginTop + ph) << "\"/>"
       << "<text x=\"" << fmt(px(h)) << "\" y=\"" << fmt(kMarginTop + ph + 16)
       << "\" text-anchor=\"middle\" stroke=\"none\" fill=\"black\">" << fmt(h, 2)
       << "</text>\n";
  }
  const double vs = tick_step(v_max - v_min, 8);
  for (double v = std::ceil(v_min / vs) * vs; v <= v_max + 1e-12; v += vs) {
    os << "<line x1=\"" << fmt(kMarginLeft) << "\" y1=\"" << fmt(py(v)) << "\" x2=\""
       << fmt(kMarginLeft + pw) << "\" y2=\"" << fmt(py(v)) << "\"/>"
       << "<text x=\"" << fmt(kMarginLeft - 6) << "\" y=\"" << fmt(py(v) + 4)
       << "\" text-anchor=\"end\" stroke=\"none\" fill=\"black\">" << fmt(v, 2)
       << "</text>\n";
  }
  os << "</g>\n";
  os << "<text class=\"axis-label\" x=\"" << fmt(kMarginLeft + pw / 2) << "\" y=\""
     << fmt(height_ - 14) << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
     << "font-size=\"14\">" << escape(h_label_) << "</text>\n";
  os << "<text class=\"axis-label\" x=\"18\" y=\"" << fmt(kMarginTop + ph / 2)
     << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\" "
     << "transform=\"rotate(-90 18 " << fmt(kMarginTop + ph / 2) << ")\">"
     << escape(v_label_) << "</text>\n";

  for (const auto& c : curves_) {
    os << "<polyline class=\"curve\" fill=\"none\" stroke=\"black\" stroke-width=\"1.2\"";
    if (c.dashed) os << " stroke-dasharray=\"6,4\"";
    if (!c.label.empty()) os << " data-label=\"" << escape(c.label) << '"';
    os << " points=\"";
    bool sep = false;
    for (const auto& p : c.points) {
      if (!std::isfinite(p.h) || !std::isfinite(p.v)) continue;
      if (sep) os << ' ';
      os << fmt(px(p.h)) << ',' << fmt(py(p.v));
      sep = true;
    }
    os << "\"/>\n";
  }
  for (const auto& m : markers_) {
    os << "<circle class=\"event\" cx=\"" << fmt(px(m.p.h)) << "\" cy=\"" << fmt(py(m.p.v))
       << "\" r=\"3\" fill=\"red\"><title>" << escape(m.label) << "</title></circle>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string render_figure(int figure_id, const ModelParams& params,
                          const SampleRange& range, bool event_markers) {
  range.validate();
  std::vector<double> betas;
  if (figure_id == 1) {
    betas = {0.0, std::numbers::pi};
  } else if (figure_id == 2) {
    betas = figure_two_betas();
  } else {
    throw ValidationError("figure id must be 1 or 2");
  }

  SvgPlot plot(800.0, 600.0);
  plot.set_title(figure_id == 1 ? "Motion x(t): beta = 0 (solid), beta = pi (dashed)"
                                : "Motion x(t) for beta = 0, pi/4, ..., 7pi/4");
  plot.set_axis_labels("t", "x");

  for (std::size_t i = 0; i < betas.size(); ++i) {
    const ModelParams p = params.with_beta(betas[i]);
    PlotCurve curve;
    curve.dashed = figure_id == 1 && i == 1;
    curve.label = "beta=" + format_csv_number(betas[i]);
    curve.points.reserve(static_cast<std::size_t>(range.samples));
    for (int j = 0; j < range.samples; ++j) {
      const double x = range.at(j);
      curve.points.push_back({time_of_position(x, p), x});
    }
    plot.add_curve(std::move(curve));

    if (event_markers) {
      const auto turning = find_turning_points(range.x_min, range.x_max, p);
      for (const auto& e : pair_events(turning)) {
        plot.add_marker({e.t, e.x}, std::string(to_string(e.kind)));
      }
    }
  }
  return plot.render();
}

}  // namespace eprmol

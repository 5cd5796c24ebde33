#pragma once

#include <string>
#include <vector>

#include "eprmol/dataset.hpp"
#include "eprmol/params.hpp"

namespace eprmol {

struct PlotPoint {
  double h;  // horizontal data coordinate
  double v;  // vertical data coordinate
};

struct PlotCurve {
  std::vector<PlotPoint> points;
  bool dashed = false;
  std::string label;
};

/// Minimal static SVG 1.1 line chart.
///
/// The plot area is emitted as <rect id="plot-area"> carrying its data
/// extents (data-h-min, data-h-max, data-v-min, data-v-max), so pixel
/// coordinates of every polyline can be mapped back to data space.
class SvgPlot {
public:
  SvgPlot(double width, double height);

  void set_title(std::string title) { title_ = std::move(title); }
  void set_axis_labels(std::string horizontal, std::string vertical);
  void add_curve(PlotCurve curve) { curves_.push_back(std::move(curve)); }
  void add_marker(PlotPoint p, std::string label);

  std::string render() const;

private:
  struct Marker {
    PlotPoint p;
    std::string label;
  };

  double width_;
  double height_;
  std::string title_;
  std::string h_label_ = "t";
  std::string v_label_ = "x";
  std::vector<PlotCurve> curves_;
  std::vector<Marker> markers_;
};

/// Fig. 1: beta = 0 (solid) and beta = pi (dashed). Fig. 2: the eight-beta
/// sweep, all solid. Time runs horizontally, position vertically. Throws
/// ValidationError for any other figure id.
std::string render_figure(int figure_id, const ModelParams& params,
                          const SampleRange& range, bool event_markers);

}  // namespace eprmol

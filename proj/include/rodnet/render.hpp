#pragma once

#include <string>
#include <vector>

#include "rodnet/phase_diagram.hpp"

namespace rodnet {

struct SvgStyle {
  int width = 720;
  int height = 560;
  std::string nematic_color = "#d62728";    // red per the phase-diagram convention
  std::string isotropic_color = "#1f77b4";  // blue
  std::string failed_color = "#555555";     // failures are never silently colored
  std::vector<std::string> metadata;        // emitted as a leading XML comment
};

/// Self-contained SVG: the diagram as a colored cell raster with density on
/// the horizontal axis and aspect ratio on the vertical one.
std::string render_svg(const PhaseDiagram& d, const SvgStyle& style = {});

/// Curve families as polylines over a common axis frame.
struct CurveSeries {
  std::string name;
  std::vector<double> x;
  std::vector<double> y;
};
std::string render_svg(const std::vector<CurveSeries>& series, const std::string& x_label,
                       const std::string& y_label, const SvgStyle& style = {});

}  // namespace rodnet

#include "rodnet/render.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "rodnet/csvio.hpp"
#include "rodnet/errors.hpp"

namespace rodnet {

namespace {

constexpr int kMarginLeft = 64, kMarginBottom = 44, kMarginTop = 16, kMarginRight = 16;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

void open_svg(std::ostringstream& os, const SvgStyle& style) {
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  if (!style.metadata.empty()) {
    os << "<!--\n";
    for (const auto& m : style.metadata) os << m << "\n";
    os << "-->\n";
  }
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << style.width << "\" height=\""
     << style.height << "\" viewBox=\"0 0 " << style.width << ' ' << style.height << "\">\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

void axes(std::ostringstream& os, const SvgStyle& st, double x0, double x1, double y0, double y1,
          const std::string& xl, const std::string& yl) {
  const int px0 = kMarginLeft, px1 = st.width - kMarginRight;
  const int py0 = st.height - kMarginBottom, py1 = kMarginTop;
  os << "<g stroke=\"black\" fill=\"none\" stroke-width=\"1\">"
     << "<line x1=\"" << px0 << "\" y1=\"" << py0 << "\" x2=\"" << px1 << "\" y2=\"" << py0
     << "\"/>"
     << "<line x1=\"" << px0 << "\" y1=\"" << py0 << "\" x2=\"" << px0 << "\" y2=\"" << py1
     << "\"/></g>\n";
  os << "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"black\">\n";
  for (int k = 0; k <= 4; ++k) {
    const double fx = x0 + (x1 - x0) * k / 4.0;
    const double fy = y0 + (y1 - y0) * k / 4.0;
    const double px = px0 + (px1 - px0) * k / 4.0;
    const double py = py0 + (py1 - py0) * k / 4.0;
    os << "<text x=\"" << fmt(px - 10) << "\" y=\"" << py0 + 16 << "\">" << fmt(fx) << "</text>";
    os << "<text x=\"" << px0 - 58 << "\" y=\"" << fmt(py + 4) << "\">" << fmt(fy) << "</text>\n";
  }
  os << "<text x=\"" << (px0 + px1) / 2 << "\" y=\"" << st.height - 8 << "\">" << xl
     << "</text>\n";
  os << "<text x=\"12\" y=\"" << (py0 + py1) / 2
     << "\" transform=\"rotate(-90 12 " << (py0 + py1) / 2 << ")\">" << yl << "</text>\n";
  os << "</g>\n";
}

}  // namespace

std::string render_svg(const PhaseDiagram& d, const SvgStyle& style) {
  if (d.cells.empty()) throw DomainError("cannot render an empty phase diagram");
  std::ostringstream os;
  open_svg(os, style);
  const int px0 = kMarginLeft, px1 = style.width - kMarginRight;
  const int py0 = style.height - kMarginBottom, py1 = kMarginTop;
  const double cw = double(px1 - px0) / d.spec.rho_steps;
  const double ch = double(py0 - py1) / d.spec.aa_steps;
  os << "<g shape-rendering=\"crispEdges\">\n";
  for (int j = 0; j < d.spec.aa_steps; ++j) {
    for (int i = 0; i < d.spec.rho_steps; ++i) {
      const Cell& c = d.at(i, j);
      const std::string* color = &style.isotropic_color;
      if (c.state == CellState::nematic) color = &style.nematic_color;
      if (c.state == CellState::failed) color = &style.failed_color;
      const double x = px0 + cw * i;
      const double y = py0 - ch * (j + 1);
      os << "<rect x=\"" << fmt(x) << "\" y=\"" << fmt(y) << "\" width=\"" << fmt(cw)
         << "\" height=\"" << fmt(ch) << "\" fill=\"" << *color << "\"/>\n";
    }
  }
  os << "</g>\n";
  axes(os, style, d.spec.rho_min, d.spec.rho_max, d.spec.aa_min, d.spec.aa_max, "rho", "A_a");
  os << "</svg>\n";
  return os.str();
}

std::string render_svg(const std::vector<CurveSeries>& series, const std::string& x_label,
                       const std::string& y_label, const SvgStyle& style) {
  if (series.empty()) throw DomainError("cannot render an empty curve set");
  double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
  for (const auto& s : series) {
    if (s.x.empty() || s.x.size() != s.y.size())
      throw DomainError("curve series must be non-empty with matching x/y sizes");
    for (double v : s.x) { x0 = std::min(x0, v); x1 = std::max(x1, v); }
    for (double v : s.y) { y0 = std::min(y0, v); y1 = std::max(y1, v); }
  }
  if (x1 == x0) x1 = x0 + 1.0;
  if (y1 == y0) y1 = y0 + 1.0;

  static const char* palette[] = {"#d62728", "#1f77b4", "#2ca02c", "#9467bd",
                                  "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};
  std::ostringstream os;
  open_svg(os, style);
  const int px0 = kMarginLeft, px1 = style.width - kMarginRight;
  const int py0 = style.height - kMarginBottom, py1 = kMarginTop;
  const auto sx = [&](double x) { return px0 + (px1 - px0) * (x - x0) / (x1 - x0); };
  const auto sy = [&](double y) { return py0 + (py1 - py0) * (y - y0) / (y1 - y0); };
  int ci = 0;
  for (const auto& s : series) {
    os << "<polyline fill=\"none\" stroke=\"" << palette[ci % 8] << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t k = 0; k < s.x.size(); ++k)
      os << fmt(sx(s.x[k])) << ',' << fmt(sy(s.y[k])) << ' ';
    os << "\"/>\n";
    os << "<text font-family=\"sans-serif\" font-size=\"12\" fill=\"" << palette[ci % 8]
       << "\" x=\"" << px1 - 150 << "\" y=\"" << py1 + 16 + 16 * ci << "\">" << s.name
       << "</text>\n";
    ++ci;
  }
  axes(os, style, x0, x1, y0, y1, x_label, y_label);
  os << "</svg>\n";
  return os.str();
}

}  // namespace rodnet

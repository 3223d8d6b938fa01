#include <algorithm>
#include <cstdio>
#include <string>

#include "cli/commands.hpp"

namespace regdiv::cli {

namespace {

constexpr double kWidth = 800;
constexpr double kHeight = 400;
constexpr double kLeft = 60;
constexpr double kRight = 20;
constexpr double kTop = 20;
constexpr double kBottom = 50;

std::string fixed2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

std::string render_svg_plot(const std::vector<std::uint64_t>& values) {
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  const double x0 = kLeft;
  const double y0 = kHeight - kBottom;
  const std::uint64_t max_v = values.empty() ? 0 : *std::max_element(values.begin(), values.end());
  const std::size_t count = values.size();

  auto x_of = [&](std::size_t i) {
    return count <= 1 ? x0 + plot_w / 2 : x0 + plot_w * static_cast<double>(i) / (count - 1);
  };
  auto y_of = [&](std::uint64_t v) {
    return max_v == 0 ? y0 : y0 - plot_h * static_cast<double>(v) / static_cast<double>(max_v);
  };

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 400\" width=\"800\" "
         "height=\"400\">\n";
  svg += "  <rect x=\"0\" y=\"0\" width=\"800\" height=\"400\" fill=\"white\"/>\n";
  svg += "  <g stroke=\"black\" stroke-width=\"1\">\n";
  svg += "    <line x1=\"" + fixed2(x0) + "\" y1=\"" + fixed2(y0) + "\" x2=\"" +
         fixed2(x0 + plot_w) + "\" y2=\"" + fixed2(y0) + "\"/>\n";
  svg += "    <line x1=\"" + fixed2(x0) + "\" y1=\"" + fixed2(y0) + "\" x2=\"" + fixed2(x0) +
         "\" y2=\"" + fixed2(kTop) + "\"/>\n";
  svg += "  </g>\n";
  svg += "  <g font-family=\"sans-serif\" font-size=\"12\">\n";
  svg += "    <text x=\"" + fixed2(x0) + "\" y=\"" + fixed2(y0 + 18) +
         "\" text-anchor=\"middle\">1</text>\n";
  svg += "    <text x=\"" + fixed2(x0 + plot_w) + "\" y=\"" + fixed2(y0 + 18) +
         "\" text-anchor=\"middle\">" + std::to_string(count) + "</text>\n";
  svg += "    <text x=\"" + fixed2(x0 - 8) + "\" y=\"" + fixed2(y0 + 4) +
         "\" text-anchor=\"end\">0</text>\n";
  svg += "    <text x=\"" + fixed2(x0 - 8) + "\" y=\"" + fixed2(y0 - plot_h + 4) +
         "\" text-anchor=\"end\">" + std::to_string(max_v) + "</text>\n";
  svg += "    <text x=\"" + fixed2(x0 + plot_w / 2) + "\" y=\"" + fixed2(kHeight - 12) +
         "\" text-anchor=\"middle\">n</text>\n";
  svg += "    <text x=\"16\" y=\"" + fixed2(kTop + plot_h / 2) +
         "\" text-anchor=\"middle\" transform=\"rotate(-90 16 " + fixed2(kTop + plot_h / 2) +
         ")\">s(n)</text>\n";
  svg += "  </g>\n";
  svg += "  <polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" points=\"";
  for (std::size_t i = 0; i < count; ++i) {
    if (i > 0) svg += ' ';
    svg += fixed2(x_of(i)) + "," + fixed2(y_of(values[i]));
  }
  svg += "\"/>\n";
  svg += "</svg>\n";
  return svg;
}

}  // namespace regdiv::cli

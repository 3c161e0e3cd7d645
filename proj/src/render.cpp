#include "spiralcert/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace spiralcert {

std::string render_spiral(std::span<const SpiralPoint> points,
                          const RenderOptions& options) {
  if (points.empty()) throw std::invalid_argument("render_spiral: no points");
  if (!(options.marker_radius > 0.0)) {
    throw std::invalid_argument("render_spiral: marker radius must be > 0");
  }
  double view_radius = 0.0;
  for (const SpiralPoint& p : points) view_radius = std::max(view_radius, p.radius);
  if (view_radius == 0.0) view_radius = 1.0;
  double frame = 1.05 * view_radius;

  std::string svg;
  svg.reserve(64 * points.size() + 512);
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  {
    char buf[192];
    std::snprintf(buf, sizeof buf,
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" "
                  "viewBox=\"%.4f %.4f %.4f %.4f\">\n",
                  -frame, -frame, 2.0 * frame, 2.0 * frame);
    svg += buf;
  }
  svg += "<g id=\"points\" fill=\"#202020\">\n";
  for (const SpiralPoint& p : points) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "<circle cx=\"%.4f\" cy=\"%.4f\" r=\"%g\"/>\n", p.x,
                  p.y, options.marker_radius);
    svg += buf;
  }
  svg += "</g>\n";
  if (options.annuli) {
    if (!(options.annulus_width > 0.0)) {
      throw std::invalid_argument("render_spiral: annulus width must be > 0");
    }
    svg += "<g id=\"annuli\" fill=\"none\" stroke=\"#c03030\" stroke-width=\"0.08\">\n";
    auto rings = static_cast<long long>(
        std::ceil((view_radius - options.annulus_start) / options.annulus_width));
    if (rings < 0) rings = 0;
    for (long long k = 0; k <= rings; ++k) {
      char buf[96];
      std::snprintf(buf, sizeof buf, "<circle cx=\"0\" cy=\"0\" r=\"%.4f\"/>\n",
                    options.annulus_start + static_cast<double>(k) * options.annulus_width);
      svg += buf;
    }
    svg += "</g>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace spiralcert

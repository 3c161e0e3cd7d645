#pragma once

#include <span>
#include <string>

#include "spiralcert/spiral.hpp"

namespace spiralcert {

struct RenderOptions {
  double marker_radius = 0.25;   // point marker radius in user units
  bool annuli = false;           // overlay rings at start, start+h, ...
  double annulus_width = 1.0;    // h
  double annulus_start = 1.0;
};

// One <circle> per point inside <g id="points">; optional ring overlay in a
// separate <g id="annuli">. Fixed-format coordinates, so the output is
// byte-identical for identical inputs.
std::string render_spiral(std::span<const SpiralPoint> points,
                          const RenderOptions& options = {});

}  // namespace spiralcert

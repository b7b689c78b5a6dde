#pragma once

#include <string>

#include "miquel/pipeline.hpp"

namespace miquel {

/// Maps the Cartesian frame (B at the origin, C on the positive x-axis,
/// y up) onto the canvas: uniform scale, content centered inside the margin.
struct SvgFrame {
  double size = 1000;
  double margin = 50;
  double scale = 1;
  double offset_x = 0;
  double offset_y = 0;

  Vec2 to_canvas(Vec2 p) const { return {offset_x + p.x * scale, size - (offset_y + p.y * scale)}; }
};

/// Frame fitting every point and circle drawn in the given figure (1 or 2).
SvgFrame figure_frame(const MiquelFigure& fig, int figure);

/// Figure 1: triangle, Cevians, circles AMN, BNL, CLM and UVW, points
/// A B C P Q L M N U V W. Figure 2: triangle, circles AQL, BQM, CQN, the
/// common chord QR and points A B C L M N Q R. Point markers are squares, so
/// the only <circle> elements are the circles themselves.
///
/// Throws Error(InvalidConfig) for another figure number and
/// Error(DegeneratePoint) for figure 2 when R coincides with Q.
std::string render_svg(const MiquelFigure& fig, int figure);

}  // namespace miquel

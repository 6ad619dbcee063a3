#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fermat/arrange.hpp"

namespace fermat {

struct Viewport {
    double xmin = -2, xmax = 2, ymin = -2, ymax = 2;
};

/// Parse `xmin,xmax,ymin,ymax`.
Viewport parse_viewport(const std::string& text);

struct RenderOptions {
    Viewport view;
    /// Marching-squares grid cells per side.
    int resolution = 512;
    /// Output width in pixels; height follows the viewport aspect ratio.
    int width = 800;
    /// Line at infinity of the affine chart; default x2 = 0 (chart x2 = 1).
    std::optional<std::vector<Cyclo>> infinity;
};

struct RenderInput {
    std::optional<Arrangement> arrangement;
    /// A ternary form with real coefficients.
    std::optional<MultiPoly> curve;
    /// Extra points, e.g. the dual configuration; drawn as dots.
    std::vector<ProjPoint> points;
    /// The general point of the curve; drawn highlighted.
    std::optional<ProjPoint> marked;
    std::string title;
};

/// Static SVG of real lines (exact, clipped to the viewport), the real locus of
/// the curve (marching squares on double evaluations) and points. Throws
/// std::invalid_argument for non-real input or a non-planar ambient space.
std::string render_svg(const RenderInput& in, const RenderOptions& opt);

/// Marching-squares segments of {f = 0} for f sampled on a (res+1)^2 grid over the viewport.
struct Segment {
    double x0, y0, x1, y1;
};
std::vector<Segment> contour_segments(const std::vector<double>& grid, int res, const Viewport& view);

}  // namespace fermat

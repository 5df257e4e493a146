#pragma once

#include "riderlab/geometry.hpp"

#include <string>

namespace riderlab {

/** Renders a configuration with integral coordinates scaled by `delta` (i.e.
 *  the actual positions are integral/delta in the unit square) onto a
 *  delta x delta grid: grid lines, a labeled disk per piece, and a segment
 *  between every attacking pair.  Output is byte-deterministic. */
std::string render_svg(const Piece& p, const Config& integral, const Int& delta);

} // namespace riderlab

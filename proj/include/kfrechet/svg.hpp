#ifndef KFRECHET_SVG_HPP
#define KFRECHET_SVG_HPP

#include "kfrechet/curve.hpp"
#include "kfrechet/freespace.hpp"
#include "kfrechet/selection.hpp"

#include <string>

namespace kfrechet {

// Renders the free space diagram of (p, q) as a 1000x1000 SVG: cell grid,
// one filled polygon (class "free", data-component=<id>) per cell with free
// space, colored per component, selected components outlined in black,
// axis ticks at vertex parameters. The root element carries
// data-components=<count> and a <metadata> JSON block with the same count.
std::string render_diagram_svg(const PolyCurve& p, const PolyCurve& q, const FreeSpaceDiagram& d,
                               const Selection* selected = nullptr);

}  // namespace kfrechet

#endif

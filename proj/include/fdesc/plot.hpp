#pragma once

// Plot-file rendering: persistence diagrams as SVG scatter plots with the
// diagonal, step functions as SVG staircases, circular regions as shaded
// arcs on the unit circle, and CSV equivalents.  Geometry is laid out in
// double precision for presentation only; the JSON serialization in io.hpp
// remains the exact contract.

#include <string>
#include <vector>

#include "fdesc/descriptors.hpp"
#include "fdesc/observability.hpp"

namespace fdesc {

// Scatter plot with the diagonal; infinite deaths drawn on a marked top line.
std::string svg_diagram(const Diagram& d);

// Staircase plot; multi-track step functions (signed or parity counts) get
// one polyline per component, labeled curves for families keyed by degree.
std::string svg_steps(const std::vector<std::pair<std::string, StepFunction>>& tracks);

// Unit circle with shaded arcs, one group per labeled region.
std::string svg_regions(const std::vector<std::pair<std::string, CircularRegion>>& regions);

// CSV: diagrams as birth,death,degree rows ("inf" for infinite deaths);
// step functions as height,value...  rows, one block per labeled track.
std::string csv_diagram(const Diagram& d);
std::string csv_steps(const std::vector<std::pair<std::string, StepFunction>>& tracks);

// Renders any descriptor value in the requested format ("svg" or "csv").
// Throws std::invalid_argument for unsupported combinations (e.g. SVG of a
// vertex summary).
std::string render_descriptor(const DescriptorValue& v, const std::string& format);

}  // namespace fdesc

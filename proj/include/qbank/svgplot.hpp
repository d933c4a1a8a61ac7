#pragma once

#include <string>

#include "qbank/bankmodel.hpp"

namespace qbank::svgplot {

/// Minimal static line chart: axes with ticks, n1 as a dotted polyline,
/// n2 as a solid one, and a small legend.
std::string render_qf_svg(const bank::QFSeries& s, const std::string& title);

void write_qf_svg(const std::string& path, const bank::QFSeries& s,
                  const std::string& title);  // throws csvio::IoError

}  // namespace qbank::svgplot

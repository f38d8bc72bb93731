#pragma once

#include <string>

#include "dks/samplers.hpp"

namespace dks {

// Static SVG line plot of density and best density against iteration; a
// pure function of the trace. A trace without rows yields an empty plot
// (axes and labels only).
std::string render_trace_svg(const Trace& trace);

}  // namespace dks

#pragma once

#include <string>
#include <vector>

#include "unimodal/sequences.hpp"

namespace unimodal {

// Diagram rendering: one 10x10-unit square per cell, columns left to right.
// Marked parts of an overpartition get their top square shaded.
std::string render_svg(const UnimodalSequence& seq);
std::string render_svg(const Overpartition& op);

// Recovers column heights from an SVG produced by render_svg (round-trip
// check used by tests).
std::vector<long> svg_column_heights(const std::string& svg);

} // namespace unimodal

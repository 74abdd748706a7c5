#pragma once

#include <vector>

#include "unimodal/sequences.hpp"

namespace unimodal {

// A point on the 1/sqrt(n) grid: real coordinates are (x/sqrt(n), y/sqrt(n)).
// Kept integral so round-trip tests are exact.
struct GridPoint {
    long long x = 0;
    long long y = 0;
    bool operator==(const GridPoint&) const = default;
};

// Corner vertices of a renormalized diagram boundary, centered so the
// leftmost peak vertex has x = 0. Vertices on the x-axis are excluded.
struct VertexSet {
    long long n = 0; // scale: divide grid coordinates by sqrt(n)
    std::vector<GridPoint> left;
    std::vector<GridPoint> right;
    std::vector<GridPoint> peak; // the two vertices bounding the top edge

    double scale() const;                       // 1/sqrt(n)
    std::vector<GridPoint> all() const;         // left + peak + right, boundary order
};

// Corner vertices of the shape of a unimodal sequence, both axes scaled by
// 1/sqrt(n), leftmost peak vertex on the y-axis. Degenerate one-column
// diagrams have empty left/right lists.
VertexSet renormalized_vertices(const UnimodalSequence& seq);

// First-quadrant Vershik profile of an overpartition: weakly decreasing
// columns, marks ignored, scaled by 1/sqrt(n). All boundary corners including
// the two axis endpoints are reported; the top edge endpoints land in `peak`
// and the remaining corners in `right` (the left list is empty: nothing lies
// left of the y-axis).
VertexSet overpartition_profile(const Overpartition& op);

// Rebuilds the integer part list from a vertex set produced by
// renormalized_vertices (round-trip check).
std::vector<long> reconstruct_parts(const VertexSet& vs);

} // namespace unimodal

#include "unimodal/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace unimodal {

double VertexSet::scale() const {
    return 1.0 / std::sqrt(static_cast<double>(n));
}

std::vector<GridPoint> VertexSet::all() const {
    std::vector<GridPoint> out;
    out.reserve(left.size() + peak.size() + right.size());
    out.insert(out.end(), left.begin(), left.end());
    out.insert(out.end(), peak.begin(), peak.end());
    out.insert(out.end(), right.begin(), right.end());
    return out;
}

VertexSet renormalized_vertices(const UnimodalSequence& seq) {
    const auto& parts = seq.parts();
    const long long s = static_cast<long long>(parts.size());
    const PeakInfo info = peak_info(seq);
    const long long k0 = static_cast<long long>(info.leftmost_index) - 1; // 0-based
    const long peak = info.peak_value;

    // Corners along the boundary at each column boundary where the height
    // changes; the two x-axis endpoints are dropped.
    std::vector<GridPoint> corners;
    for (long long j = 0; j <= s; ++j) {
        long prev = (j == 0) ? 0 : parts[static_cast<std::size_t>(j - 1)];
        long next = (j == s) ? 0 : parts[static_cast<std::size_t>(j)];
        if (prev == next) continue;
        long long x = j - k0;
        if (prev != 0) corners.push_back({x, prev});
        if (next != 0) corners.push_back({x, next});
    }

    VertexSet vs;
    vs.n = seq.size();
    // Exactly two corners sit at the maximal height: the top edge endpoints.
    std::size_t i = 0;
    while (corners[i].y != peak) vs.left.push_back(corners[i++]);
    vs.peak.push_back(corners[i++]);
    vs.peak.push_back(corners[i++]);
    while (i < corners.size()) vs.right.push_back(corners[i++]);
    return vs;
}

VertexSet overpartition_profile(const Overpartition& op) {
    if (op.size() < 1) throw ValidationError("profile requires size >= 1");
    const auto& parts = op.parts();
    const long long s = static_cast<long long>(parts.size());

    std::vector<GridPoint> corners;
    corners.push_back({0, parts[0]});
    for (long long j = 1; j < s; ++j) {
        long prev = parts[static_cast<std::size_t>(j - 1)];
        long next = parts[static_cast<std::size_t>(j)];
        if (prev == next) continue;
        corners.push_back({j, prev});
        corners.push_back({j, next});
    }
    corners.push_back({s, parts[static_cast<std::size_t>(s - 1)]});
    corners.push_back({s, 0});

    VertexSet vs;
    vs.n = op.size();
    // Top edge runs from the y-axis to the end of the first column run.
    vs.peak.push_back(corners[0]);
    vs.peak.push_back(corners[1]);
    vs.right.assign(corners.begin() + 2, corners.end());
    return vs;
}

std::vector<long> reconstruct_parts(const VertexSet& vs) {
    std::vector<GridPoint> corners = vs.all();
    if (corners.empty()) throw ValidationError("vertex set has no corners");
    // Close the boundary with the two x-axis endpoints (unless present, as in
    // overpartition profiles).
    if (corners.front().y != 0)
        corners.insert(corners.begin(), GridPoint{corners.front().x, 0});
    if (corners.back().y != 0) corners.push_back(GridPoint{corners.back().x, 0});

    long long x_min = corners.front().x;
    long long x_max = corners.back().x;
    std::vector<long> heights(static_cast<std::size_t>(x_max - x_min), 0);
    for (std::size_t i = 1; i < corners.size(); ++i) {
        const GridPoint& a = corners[i - 1];
        const GridPoint& b = corners[i];
        if (a.y == b.y && b.x > a.x) {
            for (long long x = a.x; x < b.x; ++x)
                heights[static_cast<std::size_t>(x - x_min)] = static_cast<long>(a.y);
        }
    }
    return heights;
}

} // namespace unimodal

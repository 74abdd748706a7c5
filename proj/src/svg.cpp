#include "unimodal/svg.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace unimodal {

namespace {

constexpr long kCell = 10; // square side in SVG units

std::string render_columns(const std::vector<long>& parts,
                           const std::vector<bool>* marked) {
    const long height = *std::max_element(parts.begin(), parts.end());
    const long width = static_cast<long>(parts.size());
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width * kCell
       << "\" height=\"" << height * kCell << "\">\n";
    for (long j = 0; j < width; ++j) {
        const long h = parts[static_cast<std::size_t>(j)];
        for (long i = 0; i < h; ++i) {
            const bool top = (i == h - 1);
            const bool shade = marked && (*marked)[static_cast<std::size_t>(j)] && top;
            os << "  <rect x=\"" << j * kCell << "\" y=\"" << (height - 1 - i) * kCell
               << "\" width=\"" << kCell << "\" height=\"" << kCell << "\" fill=\""
               << (shade ? "#666666" : "#ffffff") << "\" stroke=\"#000000\"/>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace

std::string render_svg(const UnimodalSequence& seq) {
    return render_columns(seq.parts(), nullptr);
}

std::string render_svg(const Overpartition& op) {
    const auto& marked = op.marked();
    return render_columns(op.parts(), &marked);
}

std::vector<long> svg_column_heights(const std::string& svg) {
    std::map<long, long> counts;
    std::size_t pos = 0;
    while ((pos = svg.find("<rect x=\"", pos)) != std::string::npos) {
        pos += 9;
        const long x = std::stol(svg.substr(pos));
        ++counts[x / kCell];
    }
    std::vector<long> heights;
    for (const auto& [col, count] : counts) {
        if (col != static_cast<long>(heights.size()))
            throw ValidationError("svg has a gap in its columns");
        heights.push_back(count);
    }
    return heights;
}

} // namespace unimodal

#include "schedsim/gantt.hpp"

#include <array>
#include <sstream>

namespace schedsim {

std::vector<GanttSegment> build_gantt(const ExecutionTrace& trace) {
    std::vector<GanttSegment> merged;
    for (const GanttSegment& seg : trace.segments) {
        if (!merged.empty() && merged.back().pid == seg.pid &&
            merged.back().end == seg.start) {
            merged.back().end = seg.end;
        } else {
            merged.push_back(seg);
        }
    }
    return merged;
}

namespace {

std::string segment_label(const GanttSegment& seg) {
    return seg.pid == kIdlePid ? "--" : "P" + std::to_string(seg.pid);
}

} // namespace

std::string render_ascii(const std::vector<GanttSegment>& segments) {
    if (segments.empty())
        return "";

    std::string bar;
    std::string ruler;
    for (const GanttSegment& seg : segments) {
        const std::string label = " " + segment_label(seg) + " ";
        // cell wide enough for the next boundary number on the ruler
        const std::size_t min_width = std::to_string(seg.end).size() + 1;
        std::string cell = label;
        if (cell.size() < min_width)
            cell.append(min_width - cell.size(), ' ');

        const std::string boundary = std::to_string(seg.start);
        if (ruler.size() < bar.size())
            ruler.append(bar.size() - ruler.size(), ' ');
        ruler += boundary;

        bar += "|" + cell;
    }
    bar += "|";
    if (ruler.size() < bar.size() - 1)
        ruler.append(bar.size() - 1 - ruler.size(), ' ');
    ruler += std::to_string(segments.back().end);

    return bar + "\n" + ruler + "\n";
}

std::string render_svg(const std::vector<GanttSegment>& segments) {
    constexpr long kRowHeight = 40;  // px
    constexpr long kScale = 10;      // px per ms
    constexpr long kMargin = 10;     // px on every side
    static constexpr std::array<const char*, 8> kPalette = {
        "#4e79a7", "#f28e2b", "#59a14f", "#e15759",
        "#b07aa1", "#76b7b2", "#edc948", "#9c755f"};

    const long makespan = segments.empty() ? 0 : segments.back().end;
    const long width = std::max<long>(makespan * kScale + 2 * kMargin, 200);
    const long height = kRowHeight + 2 * kMargin;

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
        << width << "\" height=\"" << height << "\">\n";
    for (const GanttSegment& seg : segments) {
        const long x = kMargin + seg.start * kScale;
        const long w = (seg.end - seg.start) * kScale;
        const char* fill =
            seg.pid == kIdlePid ? "#cccccc" : kPalette[static_cast<std::size_t>(seg.pid) % 8];
        out << "  <rect x=\"" << x << "\" y=\"" << kMargin << "\" width=\"" << w
            << "\" height=\"" << kRowHeight << "\" fill=\"" << fill
            << "\" stroke=\"#333333\"/>\n";
        out << "  <text x=\"" << x + w / 2 << "\" y=\"" << kMargin + kRowHeight / 2 + 4
            << "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"12\">"
            << segment_label(seg) << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace schedsim

#pragma once

#include <string>
#include <vector>

#include "schedsim/engine.hpp"

namespace schedsim {

// Merges contiguous segments with the same label (a preempted process
// re-dispatched immediately shows as one bar). Idle never merges with a
// process segment.
std::vector<GanttSegment> build_gantt(const ExecutionTrace& trace);

// One bar line of `| P<id> |` cells (idle as `--`) with a time ruler
// underneath. Byte-deterministic.
std::string render_ascii(const std::vector<GanttSegment>& segments);

// SVG 1.1: one rect per segment, 10 px per ms, 40 px row height, color by
// pid modulo an 8-color palette. Byte-deterministic.
std::string render_svg(const std::vector<GanttSegment>& segments);

} // namespace schedsim

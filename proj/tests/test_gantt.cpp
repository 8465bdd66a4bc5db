#include <doctest.h>

#include "helpers.hpp"
#include "schedsim/gantt.hpp"

using namespace schedsim;
using schedsim::testing::table1;

TEST_CASE("build_gantt on FCFS gives the five boundaries") {
    const auto segments = build_gantt(simulate(table1(), Fcfs{}));
    REQUIRE(segments.size() == 5);
    const long boundaries[] = {0, 12, 14, 17, 19, 25};
    for (std::size_t i = 0; i < segments.size(); ++i) {
        CHECK(segments[i].start == boundaries[i]);
        CHECK(segments[i].end == boundaries[i + 1]);
    }
}

TEST_CASE("build_gantt on RR(5) gives eight segments") {
    const auto segments = build_gantt(simulate(table1(), RoundRobin{5}));
    REQUIRE(segments.size() == 8);
    const long boundaries[] = {0, 5, 7, 10, 12, 17, 22, 23, 25};
    for (std::size_t i = 0; i < segments.size(); ++i) {
        CHECK(segments[i].start == boundaries[i]);
        CHECK(segments[i].end == boundaries[i + 1]);
    }
}

TEST_CASE("build_gantt merges adjacent same-pid segments") {
    ExecutionTrace trace;
    trace.segments = {{0, 0, 3}, {0, 3, 6}, {kIdlePid, 6, 8}, {kIdlePid, 8, 9}, {0, 9, 10}};
    trace.makespan = 10;
    const auto merged = build_gantt(trace);
    const std::vector<GanttSegment> expected = {{0, 0, 6}, {kIdlePid, 6, 9}, {0, 9, 10}};
    CHECK(merged == expected);
}

TEST_CASE("build_gantt on an empty trace is empty") {
    CHECK(build_gantt(ExecutionTrace{}).empty());
    CHECK(render_ascii({}) == "");
}

TEST_CASE("render_ascii draws cells and a ruler") {
    const std::string chart = render_ascii(build_gantt(simulate(table1(), Fcfs{})));
    CHECK(chart == "| P0 | P1 | P2 | P3 | P4 |\n"
                   "0    12   14   17   19   25\n");
}

TEST_CASE("render_ascii single segment") {
    const std::string chart = render_ascii({{0, 0, 7}});
    CHECK(chart == "| P0 |\n0    7\n");
}

TEST_CASE("render_ascii shows idle as --") {
    const std::string chart = render_ascii({{kIdlePid, 0, 2}, {0, 2, 5}});
    CHECK(chart.find("| -- | P0 |") == 0);
}

TEST_CASE("render_svg has one rect per segment with proportional widths") {
    const std::string svg = render_svg(build_gantt(simulate(table1(), Fcfs{})));
    std::size_t rects = 0, pos = 0;
    while ((pos = svg.find("<rect", pos)) != std::string::npos) {
        ++rects;
        ++pos;
    }
    CHECK(rects == 5);
    // widths are 10 px per ms: 120, 20, 30, 20, 60
    CHECK(svg.find("width=\"120\"") != std::string::npos);
    CHECK(svg.find("width=\"60\"") != std::string::npos);

    const std::string rr = render_svg(build_gantt(simulate(table1(), RoundRobin{5})));
    std::size_t rr_rects = 0;
    pos = 0;
    while ((pos = rr.find("<rect", pos)) != std::string::npos) {
        ++rr_rects;
        ++pos;
    }
    CHECK(rr_rects == 8);
}

TEST_CASE("render_svg empty input yields a fixed canvas with no rects") {
    const std::string svg = render_svg({});
    CHECK(svg.find("<rect") == std::string::npos);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("width=\"200\"") != std::string::npos);
}

TEST_CASE("renderers are byte-deterministic") {
    const auto segments = build_gantt(simulate(table1(), RoundRobin{5}));
    CHECK(render_ascii(segments) == render_ascii(segments));
    CHECK(render_svg(segments) == render_svg(segments));
}

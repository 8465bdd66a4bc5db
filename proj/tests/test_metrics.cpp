#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "schedsim/metrics.hpp"

using namespace schedsim;
using schedsim::testing::table1;
using schedsim::testing::table2;

TEST_CASE("rational decimal rendering rounds half-up") {
    CHECK(Rational(87, 5).to_decimal(1) == "17.4");
    CHECK(Rational(51, 5).to_decimal(1) == "10.2");
    CHECK(Rational(1, 4).to_decimal(1) == "0.3");   // 0.25 rounds up
    CHECK(Rational(3, 20).to_decimal(1) == "0.2");  // 0.15 rounds up
    CHECK(Rational(1, 3).to_decimal(1) == "0.3");
    CHECK(Rational(5).to_decimal(1) == "5.0");
    CHECK(Rational(1, 25).to_decimal(4) == "0.0400");
    CHECK(Rational(0).to_decimal(1) == "0.0");
    CHECK(Rational(7, 2).to_decimal(0) == "4");
}

TEST_CASE("SJF metrics on the burst table match the worked averages") {
    const MetricsReport report =
        compute_metrics(simulate(table1(), Sjf{}), table1());
    const long expected_turnaround[] = {25, 2, 7, 4, 13};
    const long expected_waiting[] = {13, 0, 4, 2, 7};
    REQUIRE(report.per_process.size() == 5);
    for (int i = 0; i < 5; ++i) {
        CHECK(report.per_process[i].turnaround == expected_turnaround[i]);
        CHECK(report.per_process[i].waiting == expected_waiting[i]);
    }
    CHECK(report.summary.avg_turnaround == Rational(51, 5));
    CHECK(report.summary.avg_waiting == Rational(26, 5));
    CHECK(report.summary.avg_turnaround.to_decimal(1) == "10.2");
    CHECK(report.summary.avg_waiting.to_decimal(1) == "5.2");
}

TEST_CASE("FCFS metrics averages") {
    const MetricsReport report =
        compute_metrics(simulate(table1(), Fcfs{}), table1());
    CHECK(report.summary.avg_turnaround.to_decimal(1) == "17.4");
    CHECK(report.summary.avg_waiting.to_decimal(1) == "12.4");
}

TEST_CASE("single process has zero waiting and full utilization") {
    Workload w;
    w.processes = {{0, 0, 9, {}}};
    const MetricsReport report = compute_metrics(simulate(w, Fcfs{}), w);
    CHECK(report.per_process[0].turnaround == 9);
    CHECK(report.per_process[0].waiting == 0);
    CHECK(report.per_process[0].response == 0);
    CHECK(report.summary.cpu_utilization == Rational(1));
    CHECK(report.summary.throughput == Rational(1, 9));
}

TEST_CASE("empty workload yields the zero summary") {
    const MetricsReport report = compute_metrics(ExecutionTrace{}, Workload{});
    CHECK(report.per_process.empty());
    CHECK(report.summary.makespan == 0);
    CHECK(report.summary.avg_waiting == Rational(0));
    CHECK(report.summary.throughput == Rational(0));
}

TEST_CASE("pid mismatch is rejected both ways") {
    Workload w;
    w.processes = {{0, 0, 5, {}}};
    ExecutionTrace trace = simulate(w, Fcfs{});

    Workload other;
    other.processes = {{1, 0, 5, {}}};
    CHECK_THROWS_AS(compute_metrics(trace, other), SimError);

    trace.segments.push_back({9, 5, 6});
    trace.makespan = 6;
    CHECK_THROWS_AS(compute_metrics(trace, w), SimError);
}

TEST_CASE("metric invariants across random workloads and policies") {
    std::mt19937 rng(23);
    for (int iter = 0; iter < 60; ++iter) {
        const Workload w = schedsim::testing::random_workload(rng, 1, 8, 15, 25, true);
        long total_burst = 0;
        for (const ProcessSpec& p : w.processes)
            total_burst += p.burst;
        const Rational avg_burst(total_burst, static_cast<long>(w.processes.size()));

        for (const PolicySpec policy :
             {PolicySpec{Fcfs{}}, PolicySpec{Sjf{}}, PolicySpec{RoundRobin{4}},
              PolicySpec{PriorityPolicy{false}}, PolicySpec{PriorityPolicy{true}}}) {
            const ExecutionTrace trace = simulate(w, policy);
            const MetricsReport report = compute_metrics(trace, w);
            for (std::size_t i = 0; i < w.processes.size(); ++i) {
                const ProcessMetrics& m = report.per_process[i];
                CHECK(m.turnaround == m.completion - w.processes[i].arrival);
                CHECK(m.waiting == m.turnaround - w.processes[i].burst);
                CHECK(m.response >= 0);
                CHECK(m.response <= m.waiting);
                CHECK(m.waiting <= m.turnaround);
            }
            // linearity: avg waiting = avg turnaround - avg burst
            CHECK(report.summary.avg_waiting ==
                  report.summary.avg_turnaround - avg_burst);

            const bool non_preemptive =
                std::holds_alternative<Fcfs>(policy) ||
                std::holds_alternative<Sjf>(policy) ||
                (std::holds_alternative<PriorityPolicy>(policy) &&
                 !std::get<PriorityPolicy>(policy).preemptive);
            if (non_preemptive)
                for (const ProcessMetrics& m : report.per_process)
                    CHECK(m.response == m.waiting);
        }
    }
}

TEST_CASE("detect_starvation is empty on completed traces") {
    CHECK(detect_starvation(simulate(table2(), PriorityPolicy{true}), table2()).empty());
    CHECK(detect_starvation(ExecutionTrace{}, Workload{}).empty());
}

TEST_CASE("detect_starvation finds a never-dispatched pid in a truncated trace") {
    Workload w;
    w.processes = {{9, 0, 5, 9}};
    int pid = 10;
    for (long t = 0; t < 40; t += 4)
        w.processes.push_back({pid++, t, 4, 1});
    const ExecutionTrace trace = simulate_until(w, PriorityPolicy{true}, {}, 40);
    const auto starved = detect_starvation(trace, w);
    CHECK(starved == std::set<int>{9});
}

#pragma once

#include <set>
#include <vector>

#include "schedsim/engine.hpp"
#include "schedsim/rational.hpp"

namespace schedsim {

struct ProcessMetrics {
    int pid = 0;
    long completion = 0;
    long turnaround = 0; // completion - arrival
    long waiting = 0;    // turnaround - burst
    long response = 0;   // first dispatch - arrival
};

struct SummaryMetrics {
    Rational avg_turnaround;
    Rational avg_waiting;
    Rational avg_response;
    Rational throughput;      // processes per ms
    Rational cpu_utilization; // total running time / makespan
    long makespan = 0;
};

struct MetricsReport {
    std::vector<ProcessMetrics> per_process; // workload order
    SummaryMetrics summary;
};

// Derives the scheduling criteria from a completed trace. Throws
// PidMismatch when the trace was not produced from this workload.
MetricsReport compute_metrics(const ExecutionTrace& trace, const Workload& workload);

// Pids with no Running segment inside the trace. Empty for any run that
// simulate() carried to completion; meaningful on horizon-truncated traces.
std::set<int> detect_starvation(const ExecutionTrace& trace, const Workload& workload);

} // namespace schedsim

#include "schedsim/metrics.hpp"

#include <map>

namespace schedsim {

MetricsReport compute_metrics(const ExecutionTrace& trace, const Workload& workload) {
    struct PerPid {
        long first_dispatch = -1;
        long completion = 0;
        long running = 0;
    };
    std::map<int, PerPid> by_pid;

    for (const GanttSegment& seg : trace.segments) {
        if (seg.pid == kIdlePid)
            continue;
        PerPid& p = by_pid[seg.pid];
        if (p.first_dispatch < 0)
            p.first_dispatch = seg.start;
        p.completion = std::max(p.completion, seg.end);
        p.running += seg.end - seg.start;
    }

    MetricsReport report;
    long total_turnaround = 0, total_waiting = 0, total_response = 0, total_running = 0;

    for (const ProcessSpec& spec : workload.processes) {
        const auto it = by_pid.find(spec.pid);
        if (it == by_pid.end())
            throw SimError(ErrorCode::PidMismatch,
                           "pid " + std::to_string(spec.pid) + " missing from trace");
        const PerPid& p = it->second;

        ProcessMetrics m;
        m.pid = spec.pid;
        m.completion = p.completion;
        m.turnaround = p.completion - spec.arrival;
        m.waiting = m.turnaround - spec.burst;
        m.response = p.first_dispatch - spec.arrival;
        report.per_process.push_back(m);

        total_turnaround += m.turnaround;
        total_waiting += m.waiting;
        total_response += m.response;
        total_running += p.running;
        by_pid.erase(it);
    }
    if (!by_pid.empty())
        throw SimError(ErrorCode::PidMismatch,
                       "trace contains pid " + std::to_string(by_pid.begin()->first) +
                           " not in workload");

    const long n = static_cast<long>(workload.processes.size());
    SummaryMetrics& s = report.summary;
    s.makespan = trace.makespan;
    if (n > 0) {
        s.avg_turnaround = Rational(total_turnaround, n);
        s.avg_waiting = Rational(total_waiting, n);
        s.avg_response = Rational(total_response, n);
    }
    if (trace.makespan > 0) {
        s.throughput = Rational(n, trace.makespan);
        s.cpu_utilization = Rational(total_running, trace.makespan);
    }
    return report;
}

std::set<int> detect_starvation(const ExecutionTrace& trace, const Workload& workload) {
    std::set<int> never_ran;
    for (const ProcessSpec& spec : workload.processes)
        never_ran.insert(spec.pid);
    for (const GanttSegment& seg : trace.segments)
        never_ran.erase(seg.pid);
    return never_ran;
}

} // namespace schedsim

#include "schedsim/oracle.hpp"

#include <algorithm>

#include "schedsim/engine.hpp"
#include "schedsim/metrics.hpp"

namespace schedsim {

ScheduleOracleResult enumerate_best_order(const Workload& workload) {
    const std::size_t n = workload.processes.size();
    if (n < 1 || n > 8)
        throw SimError(ErrorCode::TooManyProcesses,
                       "oracle limited to 1..8 processes, got " + std::to_string(n));
    for (const ProcessSpec& p : workload.processes)
        if (p.arrival != 0)
            throw SimError(ErrorCode::NonzeroArrival,
                           "oracle requires all arrivals 0; pid " +
                               std::to_string(p.pid) + " arrives at " +
                               std::to_string(p.arrival));

    std::vector<int> order(n);
    std::vector<long> burst_of(n);
    std::vector<std::size_t> index(n);
    for (std::size_t i = 0; i < n; ++i)
        index[i] = i;
    std::sort(index.begin(), index.end(), [&](std::size_t a, std::size_t b) {
        return workload.processes[a].pid < workload.processes[b].pid;
    });
    for (std::size_t i = 0; i < n; ++i) {
        order[i] = workload.processes[index[i]].pid;
        burst_of[i] = workload.processes[index[i]].burst;
    }

    // next_permutation over pid-sorted order visits permutations in
    // lexicographic order, so strict improvement keeps the smallest optimum.
    ScheduleOracleResult result;
    long best_total = -1;
    std::vector<std::size_t> slots(n);
    for (std::size_t i = 0; i < n; ++i)
        slots[i] = i;

    do {
        long elapsed = 0, total_waiting = 0;
        for (const std::size_t s : slots) {
            total_waiting += elapsed;
            elapsed += burst_of[s];
        }
        if (best_total < 0 || total_waiting < best_total) {
            best_total = total_waiting;
            result.best_order.clear();
            for (const std::size_t s : slots)
                result.best_order.push_back(order[s]);
        }
        ++result.evaluated_count;
    } while (std::next_permutation(slots.begin(), slots.end()));

    result.best_avg_waiting = Rational(best_total, static_cast<long>(n));
    return result;
}

bool verify_sjf_optimal(const Workload& workload) {
    const ScheduleOracleResult oracle = enumerate_best_order(workload);
    const ExecutionTrace trace = simulate(workload, Sjf{});
    const MetricsReport report = compute_metrics(trace, workload);
    return report.summary.avg_waiting == oracle.best_avg_waiting;
}

bool demonstrate_priority_starvation(long horizon, long stream_burst,
                                     const ProcessSpec& victim) {
    Workload workload;
    ProcessSpec v = victim;
    if (!v.priority)
        v.priority = 9;
    workload.processes.push_back(v);

    // stream_burst <= 0 means no competing stream
    if (stream_burst > 0) {
        int pid = v.pid + 1;
        for (long t = 0; t < horizon; t += stream_burst)
            workload.processes.push_back({pid++, t, stream_burst, 1});
    }

    const ExecutionTrace trace =
        simulate_until(workload, PriorityPolicy{true}, {}, horizon);
    return detect_starvation(trace, workload).contains(v.pid);
}

} // namespace schedsim

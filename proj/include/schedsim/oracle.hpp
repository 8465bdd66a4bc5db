#pragma once

#include <vector>

#include "schedsim/rational.hpp"
#include "schedsim/workload.hpp"

namespace schedsim {

struct ScheduleOracleResult {
    Rational best_avg_waiting;
    std::vector<int> best_order; // lexicographically smallest optimum
    long evaluated_count = 0;    // n! for n processes
};

// Exhaustively evaluates every non-preemptive back-to-back order.
// Requires all arrivals 0 and 1 <= n <= 8.
ScheduleOracleResult enumerate_best_order(const Workload& workload);

// True iff SJF's average waiting time equals the enumerated minimum.
bool verify_sjf_optimal(const Workload& workload);

// Builds a stream of priority-1 jobs of burst `stream_burst` arriving
// every `stream_burst` ms from 0 (stream_burst <= 0: no stream), adds the
// victim, runs preemptive priority truncated at `horizon`, and reports
// whether the victim never got the CPU.
bool demonstrate_priority_starvation(long horizon, long stream_burst,
                                     const ProcessSpec& victim);

} // namespace schedsim

#pragma once

#include <random>

#include "schedsim/workload.hpp"

namespace schedsim::testing {

// Five jobs, bursts 12,2,3,2,6, all arriving at 0.
inline Workload table1() {
    Workload w;
    w.processes = {{0, 0, 12, {}}, {1, 0, 2, {}}, {2, 0, 3, {}},
                   {3, 0, 2, {}}, {4, 0, 6, {}}};
    return w;
}

// Same bursts with priorities 3,1,3,4,2 (lower wins).
inline Workload table2() {
    Workload w;
    w.processes = {{0, 0, 12, 3}, {1, 0, 2, 1}, {2, 0, 3, 3},
                   {3, 0, 2, 4}, {4, 0, 6, 2}};
    return w;
}

inline Workload random_workload(std::mt19937& rng, int min_n, int max_n,
                                long max_burst, long max_arrival,
                                bool with_priority = false) {
    std::uniform_int_distribution<int> n_dist(min_n, max_n);
    std::uniform_int_distribution<long> burst_dist(1, max_burst);
    std::uniform_int_distribution<long> arrival_dist(0, max_arrival);
    std::uniform_int_distribution<int> prio_dist(1, 5);

    Workload w;
    const int n = n_dist(rng);
    for (int i = 0; i < n; ++i) {
        ProcessSpec p;
        p.pid = i;
        p.arrival = max_arrival > 0 ? arrival_dist(rng) : 0;
        p.burst = burst_dist(rng);
        if (with_priority)
            p.priority = prio_dist(rng);
        w.processes.push_back(p);
    }
    return w;
}

} // namespace schedsim::testing

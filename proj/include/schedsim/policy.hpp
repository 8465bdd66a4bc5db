#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "schedsim/workload.hpp"

namespace schedsim {

struct Fcfs {};
struct Sjf {};
struct RoundRobin {
    long quantum = 1; // >= 1 ms
};
struct PriorityPolicy {
    bool preemptive = false;
};

using PolicySpec = std::variant<Fcfs, Sjf, RoundRobin, PriorityPolicy>;

// One ready-queue entry. enqueue_seq is stamped by the engine on every
// insertion, so FIFO order survives re-enqueues after preemption.
struct ReadyEntry {
    int pid = 0;
    long arrival = 0;
    long remaining = 1;
    std::optional<int> priority;
    long enqueue_seq = 0;
};

// `fcfs`, `sjf`, `rr:<quantum>`, `priority`, `priority:preemptive`.
PolicySpec parse_policy(std::string_view text);
std::string policy_name(const PolicySpec& policy);

// Picks the next pid to dispatch. FCFS/RR take the head of the queue
// (smallest enqueue_seq); SJF the smallest remaining time; Priority the
// smallest priority value. SJF and Priority break ties by (arrival, pid).
int select_next(const std::vector<ReadyEntry>& ready, long now, const PolicySpec& policy);

// True only for preemptive Priority when the newcomer outranks the
// running process. RR preemption is quantum expiry, not arrival-driven.
bool should_preempt(const ReadyEntry& running, const ReadyEntry& candidate,
                    const PolicySpec& policy);

// RR quantum; absent for every other policy.
std::optional<long> time_slice(const PolicySpec& policy);

} // namespace schedsim

#include "schedsim/policy.hpp"

#include <algorithm>
#include <charconv>

namespace schedsim {

PolicySpec parse_policy(std::string_view text) {
    if (text == "fcfs")
        return Fcfs{};
    if (text == "sjf")
        return Sjf{};
    if (text == "priority")
        return PriorityPolicy{false};
    if (text == "priority:preemptive")
        return PriorityPolicy{true};
    if (text.starts_with("rr:")) {
        const std::string_view arg = text.substr(3);
        long quantum = 0;
        const auto [ptr, ec] = std::from_chars(arg.begin(), arg.end(), quantum);
        if (ec == std::errc{} && ptr == arg.end() && quantum >= 1)
            return RoundRobin{quantum};
        throw SimError(ErrorCode::BadPolicyString,
                       "round robin quantum must be a positive integer: '" +
                           std::string(text) + "'");
    }
    throw SimError(ErrorCode::BadPolicyString,
                   "unknown policy '" + std::string(text) +
                       "' (expected fcfs, sjf, rr:<quantum>, priority, "
                       "priority:preemptive)");
}

std::string policy_name(const PolicySpec& policy) {
    struct Visitor {
        std::string operator()(const Fcfs&) const { return "fcfs"; }
        std::string operator()(const Sjf&) const { return "sjf"; }
        std::string operator()(const RoundRobin& rr) const {
            return "rr:" + std::to_string(rr.quantum);
        }
        std::string operator()(const PriorityPolicy& p) const {
            return p.preemptive ? "priority:preemptive" : "priority";
        }
    };
    return std::visit(Visitor{}, policy);
}

namespace {

// (arrival, pid) tie-break shared by SJF and Priority.
bool arrival_pid_less(const ReadyEntry& a, const ReadyEntry& b) {
    if (a.arrival != b.arrival)
        return a.arrival < b.arrival;
    return a.pid < b.pid;
}

} // namespace

int select_next(const std::vector<ReadyEntry>& ready, long /*now*/,
                const PolicySpec& policy) {
    if (ready.empty())
        throw SimError(ErrorCode::EmptyReadySet, "select_next on empty ready set");

    struct Visitor {
        const std::vector<ReadyEntry>& ready;

        int operator()(const Fcfs&) const { return head_of_queue(); }
        int operator()(const RoundRobin&) const { return head_of_queue(); }

        int operator()(const Sjf&) const {
            return std::min_element(ready.begin(), ready.end(),
                                    [](const ReadyEntry& a, const ReadyEntry& b) {
                                        if (a.remaining != b.remaining)
                                            return a.remaining < b.remaining;
                                        return arrival_pid_less(a, b);
                                    })
                ->pid;
        }

        int operator()(const PriorityPolicy&) const {
            return std::min_element(ready.begin(), ready.end(),
                                    [](const ReadyEntry& a, const ReadyEntry& b) {
                                        if (*a.priority != *b.priority)
                                            return *a.priority < *b.priority;
                                        return arrival_pid_less(a, b);
                                    })
                ->pid;
        }

        int head_of_queue() const {
            return std::min_element(ready.begin(), ready.end(),
                                    [](const ReadyEntry& a, const ReadyEntry& b) {
                                        return a.enqueue_seq < b.enqueue_seq;
                                    })
                ->pid;
        }
    };
    return std::visit(Visitor{ready}, policy);
}

bool should_preempt(const ReadyEntry& running, const ReadyEntry& candidate,
                    const PolicySpec& policy) {
    const auto* prio = std::get_if<PriorityPolicy>(&policy);
    if (!prio || !prio->preemptive)
        return false;
    return *candidate.priority < *running.priority;
}

std::optional<long> time_slice(const PolicySpec& policy) {
    if (const auto* rr = std::get_if<RoundRobin>(&policy))
        return rr->quantum;
    return std::nullopt;
}

} // namespace schedsim

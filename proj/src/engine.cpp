#include "schedsim/engine.hpp"

#include <algorithm>
#include <sstream>

namespace schedsim {

const char* state_name(ProcessState state) {
    switch (state) {
    case ProcessState::New: return "New";
    case ProcessState::Ready: return "Ready";
    case ProcessState::Running: return "Running";
    case ProcessState::Waiting: return "Waiting";
    case ProcessState::Terminated: return "Terminated";
    }
    return "?";
}

bool transition_allowed(ProcessState from, ProcessState to) {
    switch (from) {
    case ProcessState::New: return to == ProcessState::Ready;
    case ProcessState::Ready: return to == ProcessState::Running;
    case ProcessState::Running:
        return to == ProcessState::Ready || to == ProcessState::Waiting ||
               to == ProcessState::Terminated;
    case ProcessState::Waiting: return to == ProcessState::Ready;
    case ProcessState::Terminated: return false;
    }
    return false;
}

Simulation::Simulation(const Workload& workload, const PolicySpec& policy,
                       SimConfig config)
    : workload_(workload), policy_(policy), config_(config) {
    if (workload_.processes.empty())
        throw SimError(ErrorCode::EmptyWorkload, "workload has no processes");
    if (std::holds_alternative<PriorityPolicy>(policy_) && !workload_.has_priorities())
        throw SimError(ErrorCode::PolicyRequiresPriority,
                       "priority scheduling needs a priority for every process");

    procs_.reserve(workload_.processes.size());
    for (const ProcessSpec& spec : workload_.processes)
        procs_.push_back({spec, ProcessState::New, spec.burst});

    pending_.resize(procs_.size());
    for (std::size_t i = 0; i < procs_.size(); ++i)
        pending_[i] = i;
    std::stable_sort(pending_.begin(), pending_.end(),
                     [this](std::size_t a, std::size_t b) {
                         return procs_[a].spec.arrival < procs_[b].spec.arrival;
                     });
}

int Simulation::index_of(int pid) const {
    for (std::size_t i = 0; i < procs_.size(); ++i)
        if (procs_[i].spec.pid == pid)
            return static_cast<int>(i);
    throw SimError(ErrorCode::PidMismatch, "unknown pid " + std::to_string(pid));
}

ProcessState Simulation::state_of(int pid) const {
    return procs_[index_of(pid)].state;
}

void Simulation::transition(int idx, ProcessState to, long now) {
    Proc& p = procs_[idx];
    if (!transition_allowed(p.state, to))
        throw SimError(ErrorCode::IllegalTransition,
                       std::string("pid ") + std::to_string(p.spec.pid) + ": " +
                           state_name(p.state) + " -> " + state_name(to));
    trace_.events.push_back({now, p.spec.pid, p.state, to});
    p.state = to;
}

void Simulation::enqueue_ready(int pid, long now) {
    const int idx = index_of(pid);
    transition(idx, ProcessState::Ready, now);
    const Proc& p = procs_[idx];
    ready_.push_back({p.spec.pid, p.spec.arrival, p.remaining, p.spec.priority,
                      next_seq_++});
}

void Simulation::admit_arrivals(long now) {
    while (next_pending_ < pending_.size() &&
           procs_[pending_[next_pending_]].spec.arrival <= now) {
        const std::size_t idx = pending_[next_pending_++];
        enqueue_ready(procs_[idx].spec.pid, procs_[idx].spec.arrival);
    }
}

void Simulation::emit_segment(int pid, long start, long end) {
    if (start < end)
        trace_.segments.push_back({pid, start, end});
}

ExecutionTrace Simulation::run(long horizon) {
    const std::optional<long> slice = time_slice(policy_);
    const bool arrival_preemption =
        std::holds_alternative<PriorityPolicy>(policy_) &&
        std::get<PriorityPolicy>(policy_).preemptive;

    long now = 0;
    std::size_t finished = 0;
    int last_running_pid = kIdlePid;

    while (finished < procs_.size() && now < horizon) {
        admit_arrivals(now);

        if (ready_.empty()) {
            if (next_pending_ >= pending_.size())
                break; // nothing left anywhere
            const long next_arrival = procs_[pending_[next_pending_]].spec.arrival;
            const long idle_end = std::min(next_arrival, horizon);
            emit_segment(kIdlePid, now, idle_end);
            now = idle_end;
            continue;
        }

        const int pid = select_next(ready_, now, policy_);
        const auto it = std::find_if(ready_.begin(), ready_.end(),
                                     [pid](const ReadyEntry& e) { return e.pid == pid; });
        ReadyEntry entry = *it;
        ready_.erase(it);
        const int idx = index_of(pid);

        // Switch cost shows up as an Idle gap between two Running segments.
        if (config_.context_switch_cost > 0 && last_running_pid != kIdlePid &&
            last_running_pid != pid && !trace_.segments.empty() &&
            trace_.segments.back().end == now && trace_.segments.back().pid != kIdlePid) {
            const long cost_end = std::min(now + config_.context_switch_cost, horizon);
            emit_segment(kIdlePid, now, cost_end);
            now = cost_end;
            admit_arrivals(now);
            if (now >= horizon) {
                // dispatch never happened; put the process back
                ready_.push_back(entry);
                break;
            }
        }

        transition(idx, ProcessState::Running, now);

        const long completion_end = now + entry.remaining;
        long end = slice ? std::min(now + *slice, completion_end) : completion_end;

        // Preemptive priority fires only at arrival instants.
        if (arrival_preemption) {
            for (std::size_t i = next_pending_; i < pending_.size(); ++i) {
                const Proc& cand = procs_[pending_[i]];
                if (cand.spec.arrival >= end)
                    break;
                const ReadyEntry cand_view{cand.spec.pid, cand.spec.arrival,
                                           cand.remaining, cand.spec.priority, 0};
                ReadyEntry running_view = entry;
                running_view.remaining = procs_[idx].remaining;
                if (should_preempt(running_view, cand_view, policy_)) {
                    end = cand.spec.arrival;
                    break;
                }
            }
        }

        const bool cut = end > horizon;
        if (cut)
            end = horizon;

        emit_segment(pid, now, end);
        procs_[idx].remaining -= end - now;
        now = end;
        last_running_pid = pid;

        if (cut)
            break;

        if (procs_[idx].remaining == 0) {
            transition(idx, ProcessState::Terminated, now);
            ++finished;
        } else {
            // expiry/preemption at t: arrivals at t enter the queue first,
            // the displaced process goes to the tail behind them
            admit_arrivals(now);
            enqueue_ready(pid, now);
        }
    }

    if (horizon != kNoHorizon) {
        emit_segment(kIdlePid, now, horizon);
        trace_.makespan = horizon;
    } else {
        trace_.makespan = now;
    }

    std::stable_sort(trace_.events.begin(), trace_.events.end(),
                     [](const TransitionEvent& a, const TransitionEvent& b) {
                         return a.time < b.time;
                     });
    return std::move(trace_);
}

ExecutionTrace simulate(const Workload& workload, const PolicySpec& policy,
                        const SimConfig& config) {
    return Simulation(workload, policy, config).run();
}

ExecutionTrace simulate_until(const Workload& workload, const PolicySpec& policy,
                              const SimConfig& config, long horizon) {
    return Simulation(workload, policy, config).run(horizon);
}

std::string trace_to_csv(const ExecutionTrace& trace) {
    std::ostringstream out;
    out << "start,end,pid\n";
    for (const GanttSegment& seg : trace.segments)
        out << seg.start << ',' << seg.end << ',' << seg.pid << '\n';
    return out.str();
}

} // namespace schedsim

#pragma once

#include <limits>
#include <string>
#include <vector>

#include "schedsim/policy.hpp"
#include "schedsim/workload.hpp"

namespace schedsim {

enum class ProcessState { New, Ready, Running, Waiting, Terminated };

const char* state_name(ProcessState state);

// Legal edges of the five-state lifecycle. Running->Waiting and
// Waiting->Ready exist in the model even though pure-CPU workloads never
// take them.
bool transition_allowed(ProcessState from, ProcessState to);

struct SimConfig {
    long context_switch_cost = 0; // ms, charged as Idle between Running segments
};

struct TransitionEvent {
    long time = 0;
    int pid = 0;
    ProcessState from = ProcessState::New;
    ProcessState to = ProcessState::Ready;
};

constexpr int kIdlePid = -1;

// Half-open [start, end) slice of CPU time; pid == kIdlePid means idle.
struct GanttSegment {
    int pid = kIdlePid;
    long start = 0;
    long end = 0;

    friend bool operator==(const GanttSegment&, const GanttSegment&) = default;
};

struct ExecutionTrace {
    std::vector<GanttSegment> segments; // tile [0, makespan], raw (unmerged)
    std::vector<TransitionEvent> events;
    long makespan = 0;
};

constexpr long kNoHorizon = std::numeric_limits<long>::max();

// One simulation run. Single-threaded by contract; independent instances
// share nothing.
class Simulation {
public:
    Simulation(const Workload& workload, const PolicySpec& policy, SimConfig config);

    // Moves a process into the Ready queue, stamping the next enqueue_seq
    // and emitting the transition event. Throws IllegalTransition unless
    // the process is New, Waiting or Running (being preempted).
    void enqueue_ready(int pid, long now);

    ProcessState state_of(int pid) const;

    ExecutionTrace run(long horizon = kNoHorizon);

private:
    struct Proc {
        ProcessSpec spec;
        ProcessState state = ProcessState::New;
        long remaining = 0;
    };

    int index_of(int pid) const;
    void transition(int idx, ProcessState to, long now);
    void admit_arrivals(long now);
    void emit_segment(int pid, long start, long end);

    Workload workload_;
    PolicySpec policy_;
    SimConfig config_;
    std::vector<Proc> procs_;
    std::vector<std::size_t> pending_; // indices, sorted by (arrival, submission)
    std::size_t next_pending_ = 0;
    std::vector<ReadyEntry> ready_;
    long next_seq_ = 0;
    ExecutionTrace trace_;
};

// Runs the workload to completion under the given policy. Deterministic:
// same inputs, same trace. Same-tick order at any instant t is
// completions/expiries, then arrivals, then the preempted process, then
// dispatch.
ExecutionTrace simulate(const Workload& workload, const PolicySpec& policy,
                        const SimConfig& config = {});

// Same loop but truncated at `horizon`; unfinished processes keep their
// state. Used for starvation demonstrations on unbounded streams.
ExecutionTrace simulate_until(const Workload& workload, const PolicySpec& policy,
                              const SimConfig& config, long horizon);

// CSV export: header `start,end,pid`, pid -1 meaning Idle, sorted by start.
std::string trace_to_csv(const ExecutionTrace& trace);

} // namespace schedsim

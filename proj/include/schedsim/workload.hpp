#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace schedsim {

// Domain error carrying a stable code usable across the C boundary.
enum class ErrorCode {
    MalformedRow,
    DuplicatePid,
    ZeroBurst,
    MixedPriorityPresence,
    NegativeField,
    EmptyWorkload,
    PolicyRequiresPriority,
    EmptyReadySet,
    IllegalTransition,
    PidMismatch,
    TooManyProcesses,
    NonzeroArrival,
    BadPolicyString,
    Usage,
};

class SimError : public std::runtime_error {
public:
    SimError(ErrorCode code, std::string message)
        : std::runtime_error(std::move(message)), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

// Static description of one job. Times are integer milliseconds.
struct ProcessSpec {
    int pid = 0;
    long arrival = 0;
    long burst = 1;                    // >= 1
    std::optional<int> priority;       // lower value = more urgent, >= 1
};

struct Workload {
    std::vector<ProcessSpec> processes; // sequence order = submission order

    bool has_priorities() const {
        return !processes.empty() && processes.front().priority.has_value();
    }
};

struct ValidationError {
    ErrorCode code;
    std::string message;
};

// CSV: header `pid,arrival,burst` or `pid,arrival,burst,priority`, `#`
// comments and blank lines ignored. Throws SimError on malformed input.
Workload parse_workload(std::string_view text);

// Canonical CSV form; parse_workload(serialize_workload(w)) == w.
std::string serialize_workload(const Workload& workload);

// Returns every invariant violation, never stops at the first.
std::vector<ValidationError> validate(const Workload& workload);

} // namespace schedsim

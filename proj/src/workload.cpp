#include "schedsim/workload.hpp"

#include <charconv>
#include <set>
#include <sstream>

namespace schedsim {
namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = line.find(',', pos);
        if (comma == std::string_view::npos) {
            fields.push_back(trim(line.substr(pos)));
            break;
        }
        fields.push_back(trim(line.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    return fields;
}

long parse_int_field(std::string_view field, int line_no, std::string_view name) {
    long value = 0;
    const auto [ptr, ec] = std::from_chars(field.begin(), field.end(), value);
    if (ec != std::errc{} || ptr != field.end()) {
        std::ostringstream msg;
        msg << "line " << line_no << ": field '" << name << "' is not an integer: '"
            << field << "'";
        throw SimError(ErrorCode::MalformedRow, msg.str());
    }
    return value;
}

} // namespace

Workload parse_workload(std::string_view text) {
    Workload workload;
    bool header_seen = false;
    bool with_priority = false;
    std::set<int> pids;

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
        pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
        ++line_no;

        line = trim(line);
        if (line.empty() || line.front() == '#')
            continue;

        if (!header_seen) {
            if (line == "pid,arrival,burst") {
                with_priority = false;
            } else if (line == "pid,arrival,burst,priority") {
                with_priority = true;
            } else {
                std::ostringstream msg;
                msg << "line " << line_no
                    << ": expected header 'pid,arrival,burst' or "
                       "'pid,arrival,burst,priority', got '" << line << "'";
                throw SimError(ErrorCode::MalformedRow, msg.str());
            }
            header_seen = true;
            continue;
        }

        const auto fields = split_fields(line);
        const std::size_t expected = with_priority ? 4 : 3;
        if (fields.size() != expected) {
            std::ostringstream msg;
            msg << "line " << line_no << ": expected " << expected << " fields, got "
                << fields.size();
            throw SimError(ErrorCode::MalformedRow, msg.str());
        }

        ProcessSpec spec;
        spec.pid = static_cast<int>(parse_int_field(fields[0], line_no, "pid"));
        spec.arrival = parse_int_field(fields[1], line_no, "arrival");
        spec.burst = parse_int_field(fields[2], line_no, "burst");
        if (with_priority)
            spec.priority = static_cast<int>(parse_int_field(fields[3], line_no, "priority"));

        if (spec.pid < 0)
            throw SimError(ErrorCode::NegativeField,
                           "line " + std::to_string(line_no) + ": pid must be non-negative");
        if (spec.arrival < 0)
            throw SimError(ErrorCode::NegativeField,
                           "line " + std::to_string(line_no) + ": arrival must be non-negative");
        if (spec.burst < 1)
            throw SimError(ErrorCode::ZeroBurst,
                           "line " + std::to_string(line_no) + ": burst must be >= 1");
        if (spec.priority && *spec.priority < 1)
            throw SimError(ErrorCode::NegativeField,
                           "line " + std::to_string(line_no) + ": priority must be >= 1");
        if (!pids.insert(spec.pid).second)
            throw SimError(ErrorCode::DuplicatePid,
                           "line " + std::to_string(line_no) + ": duplicate pid " +
                               std::to_string(spec.pid));

        workload.processes.push_back(spec);
    }

    if (!header_seen)
        throw SimError(ErrorCode::MalformedRow, "missing header line");
    return workload;
}

std::string serialize_workload(const Workload& workload) {
    const bool with_priority = workload.has_priorities();
    std::ostringstream out;
    out << (with_priority ? "pid,arrival,burst,priority" : "pid,arrival,burst") << '\n';
    for (const ProcessSpec& p : workload.processes) {
        out << p.pid << ',' << p.arrival << ',' << p.burst;
        if (with_priority)
            out << ',' << *p.priority;
        out << '\n';
    }
    return out.str();
}

std::vector<ValidationError> validate(const Workload& workload) {
    std::vector<ValidationError> errors;
    std::set<int> seen;
    std::size_t with_priority = 0;

    for (const ProcessSpec& p : workload.processes) {
        if (!seen.insert(p.pid).second)
            errors.push_back({ErrorCode::DuplicatePid,
                              "duplicate pid " + std::to_string(p.pid)});
        if (p.burst < 1)
            errors.push_back({ErrorCode::ZeroBurst,
                              "pid " + std::to_string(p.pid) + ": burst must be >= 1"});
        if (p.arrival < 0)
            errors.push_back({ErrorCode::NegativeField,
                              "pid " + std::to_string(p.pid) + ": negative arrival"});
        if (p.priority && *p.priority < 1)
            errors.push_back({ErrorCode::NegativeField,
                              "pid " + std::to_string(p.pid) + ": priority must be >= 1"});
        if (p.priority)
            ++with_priority;
    }

    if (with_priority != 0 && with_priority != workload.processes.size())
        errors.push_back({ErrorCode::MixedPriorityPresence,
                          "either every process has a priority or none does"});
    return errors;
}

} // namespace schedsim

#include "schedsim.h"

#include <cstring>
#include <sstream>
#include <string>

#include "schedsim/engine.hpp"
#include "schedsim/gantt.hpp"
#include "schedsim/metrics.hpp"
#include "schedsim/oracle.hpp"
#include "schedsim/report.hpp"
#include "schedsim/workload.hpp"

struct ss_workload {
    schedsim::Workload workload;
};

struct ss_trace {
    schedsim::ExecutionTrace trace;
};

namespace {

thread_local std::string g_last_error;

ss_status status_for(schedsim::ErrorCode code) {
    using schedsim::ErrorCode;
    switch (code) {
    case ErrorCode::MalformedRow:
    case ErrorCode::BadPolicyString:
        return SS_ERR_PARSE;
    case ErrorCode::DuplicatePid:
    case ErrorCode::ZeroBurst:
    case ErrorCode::MixedPriorityPresence:
    case ErrorCode::NegativeField:
    case ErrorCode::EmptyWorkload:
    case ErrorCode::PidMismatch:
        return SS_ERR_VALIDATE;
    case ErrorCode::PolicyRequiresPriority:
        return SS_ERR_POLICY;
    case ErrorCode::TooManyProcesses:
    case ErrorCode::NonzeroArrival:
        return SS_ERR_ORACLE;
    default:
        return SS_ERR_USAGE;
    }
}

template <typename Fn>
ss_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return SS_OK;
    } catch (const schedsim::SimError& e) {
        g_last_error = e.what();
        return status_for(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return SS_ERR_USAGE;
    }
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

ss_status usage_error(const char* message) {
    g_last_error = message;
    return SS_ERR_USAGE;
}

} // namespace

extern "C" {

const char* ss_status_name(ss_status status) {
    switch (status) {
    case SS_OK: return "ok";
    case SS_ERR_PARSE: return "parse-error";
    case SS_ERR_VALIDATE: return "validation-error";
    case SS_ERR_POLICY: return "policy-error";
    case SS_ERR_ORACLE: return "oracle-error";
    case SS_ERR_USAGE: return "usage-error";
    }
    return "unknown";
}

const char* ss_last_error(void) { return g_last_error.c_str(); }

void ss_string_free(char* s) { delete[] s; }

ss_status ss_workload_parse(const char* text, ss_workload** out) {
    if (!text || !out)
        return usage_error("null argument to ss_workload_parse");
    *out = nullptr;
    return guarded([&] {
        auto workload = schedsim::parse_workload(text);
        const auto errors = schedsim::validate(workload);
        if (!errors.empty()) {
            std::ostringstream msg;
            for (const auto& e : errors)
                msg << e.message << "; ";
            throw schedsim::SimError(errors.front().code, msg.str());
        }
        *out = new ss_workload{std::move(workload)};
    });
}

void ss_workload_free(ss_workload* w) { delete w; }

int ss_workload_size(const ss_workload* w) {
    return w ? static_cast<int>(w->workload.processes.size()) : 0;
}

ss_status ss_simulate(const ss_workload* w, const char* policy,
                      long context_switch_ms, ss_trace** out) {
    if (!w || !policy || !out)
        return usage_error("null argument to ss_simulate");
    if (context_switch_ms < 0)
        return usage_error("context switch cost must be non-negative");
    *out = nullptr;
    return guarded([&] {
        const auto spec = schedsim::parse_policy(policy);
        schedsim::SimConfig config{context_switch_ms};
        *out = new ss_trace{schedsim::simulate(w->workload, spec, config)};
    });
}

void ss_trace_free(ss_trace* t) { delete t; }

long ss_trace_makespan(const ss_trace* t) { return t ? t->trace.makespan : 0; }

ss_status ss_render_report(const ss_trace* t, const ss_workload* w,
                           const char* policy, const char* format, char** out) {
    if (!t || !w || !policy || !format || !out)
        return usage_error("null argument to ss_render_report");
    *out = nullptr;
    return guarded([&] {
        const auto spec = schedsim::parse_policy(policy);
        const auto fmt = schedsim::parse_format(format);
        *out = dup_string(schedsim::render_report(t->trace, w->workload, spec, fmt));
    });
}

ss_status ss_render_compare(const ss_workload* w, const char* policies,
                            long context_switch_ms, const char* format,
                            char** out) {
    if (!w || !policies || !format || !out)
        return usage_error("null argument to ss_render_compare");
    if (context_switch_ms < 0)
        return usage_error("context switch cost must be non-negative");
    *out = nullptr;
    return guarded([&] {
        std::vector<schedsim::PolicySpec> specs;
        std::string list(policies);
        std::size_t pos = 0;
        while (pos <= list.size()) {
            const std::size_t comma = list.find(',', pos);
            const std::string item =
                list.substr(pos, comma == std::string::npos ? std::string::npos
                                                            : comma - pos);
            if (!item.empty())
                specs.push_back(schedsim::parse_policy(item));
            if (comma == std::string::npos)
                break;
            pos = comma + 1;
        }
        schedsim::SimConfig config{context_switch_ms};
        const auto fmt = schedsim::parse_format(format);
        *out = dup_string(schedsim::render_compare(w->workload, specs, config, fmt));
    });
}

ss_status ss_verify_sjf(const ss_workload* w, char** out_report, int* out_optimal) {
    if (!w || !out_report || !out_optimal)
        return usage_error("null argument to ss_verify_sjf");
    *out_report = nullptr;
    *out_optimal = 0;
    return guarded([&] {
        const auto oracle = schedsim::enumerate_best_order(w->workload);
        const auto trace = schedsim::simulate(w->workload, schedsim::Sjf{});
        const auto report = schedsim::compute_metrics(trace, w->workload);
        const bool optimal = report.summary.avg_waiting == oracle.best_avg_waiting;

        // SJF's dispatch order = per-pid first Running segment order
        std::vector<int> sjf_order;
        for (const auto& seg : schedsim::build_gantt(trace))
            if (seg.pid != schedsim::kIdlePid)
                sjf_order.push_back(seg.pid);

        std::ostringstream out;
        out << "evaluated orders: " << oracle.evaluated_count << '\n';
        out << "best order:";
        for (const int pid : oracle.best_order)
            out << " P" << pid;
        out << " (avg waiting " << oracle.best_avg_waiting.to_decimal(1) << ")\n";
        out << "sjf order:";
        for (const int pid : sjf_order)
            out << " P" << pid;
        out << " (avg waiting " << report.summary.avg_waiting.to_decimal(1) << ")\n";
        out << "sjf optimal: " << (optimal ? "yes" : "no") << '\n';

        *out_report = dup_string(out.str());
        *out_optimal = optimal ? 1 : 0;
    });
}

} // extern "C"

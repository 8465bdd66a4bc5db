// Command-line front end for the scheduling simulator. Talks to the core
// only through the shared-library C API.
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "schedsim.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomainError = 1;
constexpr int kExitUsageError = 2;

int exit_code_for(ss_status status) {
    return status == SS_ERR_USAGE ? kExitUsageError : kExitDomainError;
}

int fail(ss_status status) {
    std::cerr << "error (" << ss_status_name(status) << "): " << ss_last_error()
              << '\n';
    return exit_code_for(status);
}

bool read_file(const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot open workload file '" << path << "'\n";
        return false;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    out = buf.str();
    return true;
}

int write_output(const std::string& out_path, const char* text) {
    if (out_path.empty()) {
        std::cout << text;
        return kExitOk;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open output file '" << out_path << "'\n";
        return kExitDomainError;
    }
    out << text;
    return kExitOk;
}

struct WorkloadHandle {
    ss_workload* ptr = nullptr;
    ~WorkloadHandle() { ss_workload_free(ptr); }
};

struct TraceHandle {
    ss_trace* ptr = nullptr;
    ~TraceHandle() { ss_trace_free(ptr); }
};

struct StringHandle {
    char* ptr = nullptr;
    ~StringHandle() { ss_string_free(ptr); }
};

int load_workload(const std::string& path, WorkloadHandle& handle) {
    std::string text;
    if (!read_file(path, text))
        return kExitDomainError;
    const ss_status st = ss_workload_parse(text.c_str(), &handle.ptr);
    if (st != SS_OK)
        return fail(st);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"single-CPU scheduling simulator (fcfs, sjf, rr, priority)"};
    app.require_subcommand(1);

    std::string workload_path;
    std::string policy = "fcfs";
    std::string policies;
    std::string format = "table";
    std::string out_path;
    long context_switch = 0;

    CLI::App* run = app.add_subcommand("run", "simulate one policy and report metrics");
    run->add_option("--workload", workload_path, "workload CSV file")->required();
    run->add_option("--policy", policy,
                    "fcfs | sjf | rr:<quantum> | priority | priority:preemptive");
    run->add_option("--format", format, "table | json | csv | gantt | svg");
    run->add_option("--context-switch", context_switch, "switch cost in ms");
    run->add_option("--out", out_path, "output file (default stdout)");

    CLI::App* compare = app.add_subcommand("compare", "metric matrices across policies");
    compare->add_option("--workload", workload_path, "workload CSV file")->required();
    compare->add_option("--policies", policies, "comma-separated list, at least two")
        ->required();
    compare->add_option("--format", format, "table | json | csv");
    compare->add_option("--context-switch", context_switch, "switch cost in ms");
    compare->add_option("--out", out_path, "output file (default stdout)");

    CLI::App* verify = app.add_subcommand(
        "verify", "check SJF attains the brute-force optimum average waiting time");
    verify->add_option("--workload", workload_path, "workload CSV file")->required();
    verify->add_option("--out", out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsageError;
    }

    WorkloadHandle workload;
    if (const int rc = load_workload(workload_path, workload); rc != kExitOk)
        return rc;

    if (run->parsed()) {
        TraceHandle trace;
        ss_status st = ss_simulate(workload.ptr, policy.c_str(), context_switch,
                                   &trace.ptr);
        if (st != SS_OK)
            return fail(st);
        StringHandle report;
        st = ss_render_report(trace.ptr, workload.ptr, policy.c_str(), format.c_str(),
                              &report.ptr);
        if (st != SS_OK)
            return fail(st);
        return write_output(out_path, report.ptr);
    }

    if (compare->parsed()) {
        StringHandle report;
        const ss_status st = ss_render_compare(workload.ptr, policies.c_str(),
                                               context_switch, format.c_str(),
                                               &report.ptr);
        if (st != SS_OK)
            return fail(st);
        return write_output(out_path, report.ptr);
    }

    // verify
    StringHandle report;
    int optimal = 0;
    const ss_status st = ss_verify_sjf(workload.ptr, &report.ptr, &optimal);
    if (st != SS_OK)
        return fail(st);
    const int rc = write_output(out_path, report.ptr);
    if (rc != kExitOk)
        return rc;
    return optimal ? kExitOk : kExitDomainError;
}

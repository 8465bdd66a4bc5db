#include "schedsim/report.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "schedsim/gantt.hpp"

namespace schedsim {

ReportFormat parse_format(std::string_view text) {
    if (text == "table") return ReportFormat::Table;
    if (text == "json") return ReportFormat::Json;
    if (text == "csv") return ReportFormat::Csv;
    if (text == "gantt") return ReportFormat::Gantt;
    if (text == "svg") return ReportFormat::Svg;
    throw SimError(ErrorCode::Usage,
                   "unknown format '" + std::string(text) +
                       "' (expected table, json, csv, gantt, svg)");
}

namespace {

std::string render_table(const MetricsReport& report, const PolicySpec& policy) {
    std::ostringstream out;
    out << "policy: " << policy_name(policy) << '\n';
    out << std::left << std::setw(6) << "pid" << std::right << std::setw(11)
        << "completion" << std::setw(11) << "turnaround" << std::setw(9) << "waiting"
        << std::setw(9) << "response" << '\n';
    for (const ProcessMetrics& m : report.per_process) {
        out << std::left << std::setw(6) << ("P" + std::to_string(m.pid)) << std::right
            << std::setw(11) << m.completion << std::setw(11) << m.turnaround
            << std::setw(9) << m.waiting << std::setw(9) << m.response << '\n';
    }
    const SummaryMetrics& s = report.summary;
    out << std::left << std::setw(6) << "avg" << std::right << std::setw(11) << ""
        << std::setw(11) << s.avg_turnaround.to_decimal(1) << std::setw(9)
        << s.avg_waiting.to_decimal(1) << std::setw(9) << s.avg_response.to_decimal(1)
        << '\n';
    out << "makespan: " << s.makespan << " ms, throughput: " << s.throughput.to_decimal(4)
        << " /ms, cpu_utilization: " << s.cpu_utilization.to_decimal(4) << '\n';
    return out.str();
}

std::string render_json(const MetricsReport& report, const PolicySpec& policy) {
    nlohmann::ordered_json doc;
    doc["policy"] = policy_name(policy);
    doc["per_process"] = nlohmann::ordered_json::array();
    for (const ProcessMetrics& m : report.per_process) {
        doc["per_process"].push_back({{"pid", m.pid},
                                      {"completion", m.completion},
                                      {"turnaround", m.turnaround},
                                      {"waiting", m.waiting},
                                      {"response", m.response}});
    }
    const SummaryMetrics& s = report.summary;
    doc["summary"] = {{"avg_turnaround", s.avg_turnaround.to_decimal(1)},
                      {"avg_waiting", s.avg_waiting.to_decimal(1)},
                      {"avg_response", s.avg_response.to_decimal(1)},
                      {"throughput_per_ms", s.throughput.to_decimal(4)},
                      {"cpu_utilization", s.cpu_utilization.to_decimal(4)},
                      {"makespan", s.makespan}};
    return doc.dump(2) + "\n";
}

} // namespace

std::string render_report(const ExecutionTrace& trace, const Workload& workload,
                          const PolicySpec& policy, ReportFormat format) {
    switch (format) {
    case ReportFormat::Table:
        return render_table(compute_metrics(trace, workload), policy);
    case ReportFormat::Json:
        return render_json(compute_metrics(trace, workload), policy);
    case ReportFormat::Csv:
        return trace_to_csv(trace);
    case ReportFormat::Gantt:
        return render_ascii(build_gantt(trace));
    case ReportFormat::Svg:
        return render_svg(build_gantt(trace));
    }
    throw SimError(ErrorCode::Usage, "bad format");
}

std::string render_compare(const Workload& workload,
                           const std::vector<PolicySpec>& policies,
                           const SimConfig& config, ReportFormat format) {
    if (policies.size() < 2)
        throw SimError(ErrorCode::Usage, "compare needs at least two policies");

    std::vector<MetricsReport> reports;
    reports.reserve(policies.size());
    for (const PolicySpec& policy : policies)
        reports.push_back(compute_metrics(simulate(workload, policy, config), workload));

    const std::size_t n = workload.processes.size();

    if (format == ReportFormat::Table) {
        std::ostringstream out;
        const auto matrix = [&](const char* title, auto cell, auto avg) {
            out << title << '\n';
            out << std::left << std::setw(6) << "pid";
            for (const PolicySpec& p : policies)
                out << std::right << std::setw(12) << policy_name(p);
            out << '\n';
            for (std::size_t i = 0; i < n; ++i) {
                out << std::left << std::setw(6)
                    << ("P" + std::to_string(workload.processes[i].pid));
                for (const MetricsReport& r : reports)
                    out << std::right << std::setw(12) << cell(r.per_process[i]);
                out << '\n';
            }
            out << std::left << std::setw(6) << "avg";
            for (const MetricsReport& r : reports)
                out << std::right << std::setw(12) << avg(r.summary).to_decimal(1);
            out << '\n';
        };
        matrix("Turnaround Time (ms)",
               [](const ProcessMetrics& m) { return m.turnaround; },
               [](const SummaryMetrics& s) { return s.avg_turnaround; });
        out << '\n';
        matrix("Waiting Time (ms)",
               [](const ProcessMetrics& m) { return m.waiting; },
               [](const SummaryMetrics& s) { return s.avg_waiting; });
        return out.str();
    }

    if (format == ReportFormat::Csv) {
        std::ostringstream out;
        out << "metric,pid";
        for (const PolicySpec& p : policies)
            out << ',' << policy_name(p);
        out << '\n';
        const auto matrix = [&](const char* name, auto cell, auto avg) {
            for (std::size_t i = 0; i < n; ++i) {
                out << name << ',' << workload.processes[i].pid;
                for (const MetricsReport& r : reports)
                    out << ',' << cell(r.per_process[i]);
                out << '\n';
            }
            out << name << ",avg";
            for (const MetricsReport& r : reports)
                out << ',' << avg(r.summary).to_decimal(1);
            out << '\n';
        };
        matrix("turnaround", [](const ProcessMetrics& m) { return m.turnaround; },
               [](const SummaryMetrics& s) { return s.avg_turnaround; });
        matrix("waiting", [](const ProcessMetrics& m) { return m.waiting; },
               [](const SummaryMetrics& s) { return s.avg_waiting; });
        return out.str();
    }

    if (format == ReportFormat::Json) {
        nlohmann::ordered_json doc;
        doc["policies"] = nlohmann::ordered_json::array();
        for (const PolicySpec& p : policies)
            doc["policies"].push_back(policy_name(p));
        const auto matrix = [&](auto cell, auto avg) {
            nlohmann::ordered_json block;
            block["per_process"] = nlohmann::ordered_json::array();
            for (std::size_t i = 0; i < n; ++i) {
                nlohmann::ordered_json row;
                row["pid"] = workload.processes[i].pid;
                row["values"] = nlohmann::ordered_json::array();
                for (const MetricsReport& r : reports)
                    row["values"].push_back(cell(r.per_process[i]));
                block["per_process"].push_back(row);
            }
            block["avg"] = nlohmann::ordered_json::array();
            for (const MetricsReport& r : reports)
                block["avg"].push_back(avg(r.summary).to_decimal(1));
            return block;
        };
        doc["turnaround"] = matrix([](const ProcessMetrics& m) { return m.turnaround; },
                                   [](const SummaryMetrics& s) { return s.avg_turnaround; });
        doc["waiting"] = matrix([](const ProcessMetrics& m) { return m.waiting; },
                                [](const SummaryMetrics& s) { return s.avg_waiting; });
        return doc.dump(2) + "\n";
    }

    throw SimError(ErrorCode::Usage, "compare supports table, json and csv formats");
}

} // namespace schedsim

#pragma once

#include <string>
#include <vector>

#include "schedsim/engine.hpp"
#include "schedsim/metrics.hpp"

namespace schedsim {

enum class ReportFormat { Table, Json, Csv, Gantt, Svg };

ReportFormat parse_format(std::string_view text);

// Single-policy report in the chosen format. Byte-deterministic.
std::string render_report(const ExecutionTrace& trace, const Workload& workload,
                          const PolicySpec& policy, ReportFormat format);

// Turnaround and waiting matrices, one column per policy plus an average
// row. Supports Table, Json and Csv.
std::string render_compare(const Workload& workload,
                           const std::vector<PolicySpec>& policies,
                           const SimConfig& config, ReportFormat format);

} // namespace schedsim

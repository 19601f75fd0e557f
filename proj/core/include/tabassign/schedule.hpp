#pragma once

#include <map>
#include <string>

#include "tabassign/assignment.hpp"
#include "tabassign/kvector.hpp"
#include "tabassign/processor_system.hpp"
#include "tabassign/task_graph.hpp"

namespace tabassign {

/// Deterministic schedule of an n-task-n-processor assignment: every task
/// starts at its data ready time, each processor runs exactly one task.
struct Schedule {
  std::map<int, double> start;    // task -> start time
  std::map<int, double> finish;   // task -> finish time
  std::map<int, int> proc_of;     // task -> processor
  std::map<int, double> exec_time;    // processor -> execution time
  std::map<int, double> idle_time;    // processor -> idle before its task
  std::map<int, double> utilization;  // processor -> exec/turnaround
  double turnaround = 0.0;
  double avg_utilization = 0.0;
};

/// Evaluates an explicit bijective assignment (task -> processor).
Schedule evaluate(const std::map<int, int>& assignment, const TaskGraph& graph,
                  const ProcessorSystem& system);

/// Evaluates a tabloid via its canonical representative. Requires a
/// consistent system whose rates are equal within each tabloid row
/// (otherwise the class value is ill-defined).
Schedule evaluate(const StandardAssignmentTabloid& tabloid, const TaskGraph& graph,
                  const ProcessorSystem& system);

enum class Metric { turnaround, utilization };

struct OptimizeResult {
  StandardAssignmentTabloid tabloid;
  double value;
};

/// Exhaustive search over every standard assignment tabloid of the shape;
/// minimizes turnaround or maximizes average utilization. Ties go to the
/// first tabloid in canonical order.
OptimizeResult optimize(const TaskGraph& graph, const ProcessorSystem& system,
                        const Partition& shape, Metric metric,
                        int bound = kDefaultEnumerationBound);

struct KCopiesTotals {
  double total;
  double average;
};

/// Totals for k-copies assignments executed back to back: coefficients of
/// the vector must be nonnegative integers summing to k >= 1.
KCopiesTotals k_copies_totals(const KVector& copies,
                              const std::map<std::string, double>& per_tabloid_turnaround);

}  // namespace tabassign

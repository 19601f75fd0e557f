#include "tabassign/schedule.hpp"

#include <algorithm>
#include <cmath>

#include "tabassign/errors.hpp"

namespace tabassign {

namespace {

void check_row_rates(const Partition& shape, const ProcessorSystem& system) {
  if (system.mode() != ProcessorSystem::Mode::consistent)
    throw invalid_argument("tabloid evaluation requires a consistent system");
  int proc = 1;
  for (int part : shape.parts()) {
    const double first = system.rate(proc);
    for (int k = 1; k < part; ++k)
      if (system.rate(proc + k) != first)
        throw row_rate_error("processors " + std::to_string(proc) + ".." +
                             std::to_string(proc + part - 1) + " do not share one rate");
    proc += part;
  }
}

}  // namespace

Schedule evaluate(const std::map<int, int>& assignment, const TaskGraph& graph,
                  const ProcessorSystem& system) {
  const int n = graph.task_count();
  if (system.processor_count() != n)
    throw invalid_argument("need exactly " + std::to_string(n) + " processors for " +
                           std::to_string(n) + " tasks");
  if (static_cast<int>(assignment.size()) != n)
    throw invalid_argument("assignment must cover every task exactly once");
  std::vector<bool> proc_used(static_cast<std::size_t>(n) + 1, false);
  for (const auto& [task, proc] : assignment) {
    if (task < 1 || task > n) throw invalid_argument("unknown task " + std::to_string(task));
    if (proc < 1 || proc > n) throw invalid_argument("unknown processor " + std::to_string(proc));
    if (proc_used[static_cast<std::size_t>(proc)])
      throw invalid_argument("processor " + std::to_string(proc) + " assigned twice");
    proc_used[static_cast<std::size_t>(proc)] = true;
  }
  if (system.mode() == ProcessorSystem::Mode::inconsistent &&
      static_cast<int>(system.costs().size()) != n)
    throw invalid_argument("cost matrix must have one row per task");

  Schedule schedule;
  schedule.proc_of = assignment;
  for (int task : graph.topological_order()) {
    const int proc = assignment.at(task);
    double ready = 0.0;
    for (int pred : graph.predecessors(task)) {
      const double arrival =
          schedule.finish.at(pred) +
          communication_cost(pred, task, assignment.at(pred), proc, graph, system);
      ready = std::max(ready, arrival);
    }
    const double cost = computation_cost(task, proc, graph, system);
    schedule.start[task] = ready;
    schedule.finish[task] = ready + cost;
    schedule.exec_time[proc] = cost;
    schedule.idle_time[proc] = ready;
  }

  double turnaround = 0.0;
  for (const auto& [task, finish] : schedule.finish) {
    (void)task;
    turnaround = std::max(turnaround, finish);
  }
  schedule.turnaround = turnaround;

  // Summing costs in task order keeps the average identical across the
  // members of a tabloid class (the per-task costs are).
  double total_exec = 0.0;
  for (const auto& [task, finish] : schedule.finish) {
    (void)finish;
    total_exec += schedule.exec_time.at(assignment.at(task));
  }
  for (const auto& [proc, exec] : schedule.exec_time)
    schedule.utilization[proc] = exec / turnaround;
  schedule.avg_utilization = total_exec / (static_cast<double>(n) * turnaround);
  return schedule;
}

Schedule evaluate(const StandardAssignmentTabloid& tabloid, const TaskGraph& graph,
                  const ProcessorSystem& system) {
  const Partition& shape = tabloid.shape();
  if (shape.n() != graph.task_count())
    throw invalid_argument("tabloid shape size does not match the task graph");
  check_row_rates(shape, system);

  std::map<int, int> assignment;
  int proc = 1;
  for (const auto& row : tabloid.task_rows().rows())
    for (int task : row) assignment[task] = proc++;
  return evaluate(assignment, graph, system);
}

OptimizeResult optimize(const TaskGraph& graph, const ProcessorSystem& system,
                        const Partition& shape, Metric metric, int bound) {
  const auto tabloids = enumerate_standard_tabloids(shape, bound);
  OptimizeResult best{tabloids.front(), 0.0};
  bool have_best = false;
  for (const auto& tabloid : tabloids) {
    const Schedule schedule = evaluate(tabloid, graph, system);
    const double value =
        metric == Metric::turnaround ? schedule.turnaround : schedule.avg_utilization;
    const bool better = !have_best || (metric == Metric::turnaround ? value < best.value
                                                                    : value > best.value);
    if (better) {
      best = {tabloid, value};
      have_best = true;
    }
  }
  return best;
}

KCopiesTotals k_copies_totals(const KVector& copies,
                              const std::map<std::string, double>& per_tabloid_turnaround) {
  double total = 0.0;
  double k = 0.0;
  for (const auto& [term, coeff] : copies.terms()) {
    if (coeff < 0.0 || std::abs(coeff - std::round(coeff)) > 1e-9)
      throw invalid_argument("coefficient " + std::to_string(coeff) + " of " + term +
                             " is not a nonnegative integer");
    const auto it = per_tabloid_turnaround.find(term);
    if (it == per_tabloid_turnaround.end())
      throw invalid_argument("no turnaround value for term " + term);
    total += coeff * it->second;
    k += std::round(coeff);
  }
  if (k < 1.0) throw invalid_argument("k-copies vector must have k >= 1");
  return {total, total / k};
}

}  // namespace tabassign

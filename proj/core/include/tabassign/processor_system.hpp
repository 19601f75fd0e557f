#pragma once

#include <map>
#include <string_view>
#include <vector>

#include "tabassign/task_graph.hpp"

namespace tabassign {

/// Fully-connected heterogeneous system. Consistent mode carries one
/// execution rate per processor (cost = requirement/rate); inconsistent
/// mode carries an explicit task x processor cost matrix. Communication
/// links are homogeneous with a single data-transfer rate.
class ProcessorSystem {
public:
  enum class Mode { consistent, inconsistent };

  static ProcessorSystem consistent(std::map<int, double> rates, double link_rate = 1.0);
  static ProcessorSystem cost_matrix(std::vector<std::vector<double>> costs,
                                     double link_rate = 1.0);

  /// Consistent files: "proc <id> <rate>" lines plus optional "link <rate>".
  /// Inconsistent files: first line "costmatrix", then "row <task-id> <w1> ... <wm>".
  static ProcessorSystem parse(std::string_view text);

  Mode mode() const noexcept { return mode_; }
  int processor_count() const noexcept { return m_; }
  double link_rate() const noexcept { return link_rate_; }
  double rate(int p) const;  // consistent mode only
  const std::vector<std::vector<double>>& costs() const noexcept { return costs_; }

private:
  ProcessorSystem() = default;

  Mode mode_ = Mode::consistent;
  int m_ = 0;
  double link_rate_ = 1.0;
  std::vector<double> rates_;               // 1-based, consistent mode
  std::vector<std::vector<double>> costs_;  // [task-1][proc-1], inconsistent mode
};

double computation_cost(int v, int p, const TaskGraph& graph, const ProcessorSystem& system);
double communication_cost(int vi, int vj, int ps, int pt, const TaskGraph& graph,
                          const ProcessorSystem& system);

}  // namespace tabassign

#pragma once

#include <map>
#include <string_view>
#include <utility>
#include <vector>

namespace tabassign {

/// Weighted DAG of tasks: node weights are computation requirements,
/// edge weights are communication requirements. Node IDs are {1..n}.
class TaskGraph {
public:
  TaskGraph(std::map<int, double> requirements, std::map<std::pair<int, int>, double> edges);

  /// Line-based text format:
  ///   task <id> <requirement>
  ///   edge <src> <dst> <data>
  /// Lines whose first non-blank character is '#' are comments.
  static TaskGraph parse(std::string_view text);

  int task_count() const noexcept { return n_; }
  double requirement(int v) const;
  bool has_edge(int src, int dst) const;
  double edge_data(int src, int dst) const;
  const std::map<std::pair<int, int>, double>& edges() const noexcept { return edges_; }
  const std::vector<int>& predecessors(int v) const;

  /// Kahn order with smallest-id-first tie break; fixed at construction.
  const std::vector<int>& topological_order() const noexcept { return topo_order_; }

private:
  int n_ = 0;
  std::vector<double> requirements_;  // 1-based
  std::map<std::pair<int, int>, double> edges_;
  std::vector<std::vector<int>> preds_;  // 1-based
  std::vector<int> topo_order_;
};

}  // namespace tabassign

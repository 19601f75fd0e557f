#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tabassign/tableau.hpp"

namespace tabassign {

/// Tableau whose entries are task IDs.
class TaskTableau {
public:
  explicit TaskTableau(Tableau t) : tableau_(std::move(t)) {}
  TaskTableau(Partition shape, std::vector<std::vector<int>> rows)
      : tableau_(std::move(shape), std::move(rows)) {}

  const Tableau& tableau() const noexcept { return tableau_; }
  const Partition& shape() const noexcept { return tableau_.shape(); }

  bool operator==(const TaskTableau&) const = default;

private:
  Tableau tableau_;
};

/// Tableau whose entries are processor IDs.
class ProcessorTableau {
public:
  explicit ProcessorTableau(Tableau t) : tableau_(std::move(t)) {}
  ProcessorTableau(Partition shape, std::vector<std::vector<int>> rows)
      : tableau_(std::move(shape), std::move(rows)) {}

  /// The sequential row-major filling 1..n ("standard processor tableau").
  static ProcessorTableau standard(const Partition& shape) {
    return ProcessorTableau(sequential_filling(shape));
  }

  const Tableau& tableau() const noexcept { return tableau_; }
  const Partition& shape() const noexcept { return tableau_.shape(); }
  bool is_standard() const { return tableau_ == sequential_filling(tableau_.shape()); }

  bool operator==(const ProcessorTableau&) const = default;

private:
  Tableau tableau_;
};

/// Pair of a task and a processor tableau of the same shape. Tasks and
/// processors in matching cells are assigned to each other.
class AssignmentTableau {
public:
  AssignmentTableau(TaskTableau task, ProcessorTableau proc);

  const TaskTableau& task() const noexcept { return task_; }
  const ProcessorTableau& proc() const noexcept { return proc_; }
  const Partition& shape() const noexcept { return task_.shape(); }

  /// The task -> processor map defined by cell-wise pairing.
  std::map<int, int> assignment_set() const;

  /// Same assignment re-expressed over the standard processor tableau.
  AssignmentTableau to_standard() const;
  bool is_standard() const { return proc_.is_standard(); }

  bool operator==(const AssignmentTableau&) const = default;

private:
  TaskTableau task_;
  ProcessorTableau proc_;
};

/// Row-equivalence class of standard assignment tableaux: processor side
/// is implicitly the sequential filling, task rows are unordered. Basis
/// element of the k-assignments vector space.
class StandardAssignmentTabloid {
public:
  explicit StandardAssignmentTabloid(Tabloid task_rows) : task_rows_(std::move(task_rows)) {}
  StandardAssignmentTabloid(Partition shape, std::vector<std::vector<int>> task_rows)
      : task_rows_(std::move(shape), std::move(task_rows)) {}

  const Partition& shape() const noexcept { return task_rows_.shape(); }
  const Tabloid& task_rows() const noexcept { return task_rows_; }

  /// Encoded term, e.g. "Y1,3,2,4"; doubles as the canonical basis key.
  std::string key() const;

  bool operator==(const StandardAssignmentTabloid&) const = default;
  bool operator<(const StandardAssignmentTabloid& other) const {
    return task_rows_ < other.task_rows_;
  }

private:
  Tabloid task_rows_;
};

/// Task tableau paired with a processor filling that allows repeats;
/// models n tasks on m processors.
class GeneralizedAssignmentTableau {
public:
  GeneralizedAssignmentTableau(TaskTableau task, std::vector<std::vector<int>> proc_filling,
                               int processor_count);

  const TaskTableau& task() const noexcept { return task_; }
  const std::vector<std::vector<int>>& proc_filling() const noexcept { return proc_filling_; }
  int processor_count() const noexcept { return processor_count_; }
  const Partition& shape() const noexcept { return task_.shape(); }

  /// Standard form has the sequential task filling 1..n.
  bool is_standard() const;
  std::map<int, int> assignment_set() const;

private:
  TaskTableau task_;
  std::vector<std::vector<int>> proc_filling_;
  int processor_count_;
};

/// Converts a task tableau over the standard processor tabloid to the
/// stored canonical form: task rows sorted, processor side the sequential
/// filling. rows_equal_rate, when nonempty, asserts per row that the
/// grouped processors share one execution rate; a multi-cell row flagged
/// false is rejected since its class is not turnaround-invariant.
StandardAssignmentTabloid canonical_assignment_tabloid(
    const TaskTableau& task, const std::vector<bool>& rows_equal_rate = {});

/// Same, with the processor tabloid spelled out. Only the standard
/// processor tabloid is accepted: for any other class the collapsed task
/// tabloid would depend on the chosen representative.
StandardAssignmentTabloid canonical_assignment_tabloid(
    const TaskTableau& task, const Tabloid& proc_tabloid,
    const std::vector<bool>& rows_equal_rate = {});

std::vector<StandardAssignmentTabloid> enumerate_standard_tabloids(
    const Partition& shape, int bound = kDefaultEnumerationBound);

struct TabloidAssignments {
  std::uint64_t count;  // the Young subgroup order of the shape
  std::vector<std::map<int, int>> assignments;
};

/// Every concrete bijective assignment represented by the tabloid.
TabloidAssignments assignments_in_tabloid(const StandardAssignmentTabloid& tabloid,
                                          int bound = kDefaultEnumerationBound);

/// Term encoding: "Y" + row-major entries for tabloids, "y" + entries for
/// tableaux; entries comma-separated, no interior whitespace.
std::string encode(const StandardAssignmentTabloid& tabloid);
std::string encode(const Tabloid& tabloid);
std::string encode(const Tableau& tableau);

/// Inverse of encode. "Y" terms are canonicalized (rows re-sorted);
/// "y" terms keep their exact entry order.
StandardAssignmentTabloid decode_tabloid(std::string_view term, const Partition& shape);
Tableau decode_tableau(std::string_view term, const Partition& shape);
std::variant<StandardAssignmentTabloid, Tableau> decode(std::string_view term,
                                                        const Partition& shape);

}  // namespace tabassign

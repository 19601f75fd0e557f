#include "tabassign/assignment.hpp"

#include <algorithm>
#include <charconv>

#include "tabassign/errors.hpp"

namespace tabassign {

AssignmentTableau::AssignmentTableau(TaskTableau task, ProcessorTableau proc)
    : task_(std::move(task)), proc_(std::move(proc)) {
  if (task_.shape() != proc_.shape())
    throw shape_error("task shape " + task_.shape().to_string() + " differs from processor shape " +
                      proc_.shape().to_string());
}

std::map<int, int> AssignmentTableau::assignment_set() const {
  std::map<int, int> pairs;
  const auto& task_rows = task_.tableau().rows();
  const auto& proc_rows = proc_.tableau().rows();
  for (std::size_t i = 0; i < task_rows.size(); ++i)
    for (std::size_t j = 0; j < task_rows[i].size(); ++j)
      pairs[task_rows[i][j]] = proc_rows[i][j];
  return pairs;
}

AssignmentTableau AssignmentTableau::to_standard() const {
  // Cell k of the sequential filling holds processor k, so the new task
  // entry at flat position k is the task assigned to processor k.
  const auto pairs = assignment_set();
  std::vector<int> task_of_proc(pairs.size() + 1, 0);
  for (const auto& [task, proc] : pairs) task_of_proc[static_cast<std::size_t>(proc)] = task;

  std::vector<std::vector<int>> rows;
  rows.reserve(static_cast<std::size_t>(shape().row_count()));
  int next = 1;
  for (int part : shape().parts()) {
    std::vector<int> row(static_cast<std::size_t>(part));
    for (int& cell : row) cell = task_of_proc[static_cast<std::size_t>(next++)];
    rows.push_back(std::move(row));
  }
  return AssignmentTableau(TaskTableau(shape(), std::move(rows)),
                           ProcessorTableau::standard(shape()));
}

std::string StandardAssignmentTabloid::key() const { return encode(task_rows_); }

GeneralizedAssignmentTableau::GeneralizedAssignmentTableau(
    TaskTableau task, std::vector<std::vector<int>> proc_filling, int processor_count)
    : task_(std::move(task)), proc_filling_(std::move(proc_filling)),
      processor_count_(processor_count) {
  if (processor_count_ < 1) throw invalid_argument("processor count must be >= 1");
  const Partition& shape = task_.shape();
  if (static_cast<int>(proc_filling_.size()) != shape.row_count())
    throw shape_error("processor filling row count does not match shape " + shape.to_string());
  for (int j = 0; j < shape.row_count(); ++j) {
    const auto& row = proc_filling_[static_cast<std::size_t>(j)];
    if (static_cast<int>(row.size()) != shape.parts()[static_cast<std::size_t>(j)])
      throw shape_error("processor filling row " + std::to_string(j + 1) +
                        " does not match shape " + shape.to_string());
    for (int proc : row)
      if (proc < 1 || proc > processor_count_)
        throw invalid_argument("processor entry " + std::to_string(proc) + " outside {1.." +
                               std::to_string(processor_count_) + "}");
  }
}

bool GeneralizedAssignmentTableau::is_standard() const {
  return task_.tableau() == sequential_filling(task_.shape());
}

std::map<int, int> GeneralizedAssignmentTableau::assignment_set() const {
  std::map<int, int> pairs;
  const auto& task_rows = task_.tableau().rows();
  for (std::size_t i = 0; i < task_rows.size(); ++i)
    for (std::size_t j = 0; j < task_rows[i].size(); ++j)
      pairs[task_rows[i][j]] = proc_filling_[i][j];
  return pairs;
}

StandardAssignmentTabloid canonical_assignment_tabloid(const TaskTableau& task,
                                                       const std::vector<bool>& rows_equal_rate) {
  if (!rows_equal_rate.empty()) {
    if (static_cast<int>(rows_equal_rate.size()) != task.shape().row_count())
      throw invalid_argument("rows_equal_rate must have one flag per row");
    for (int j = 0; j < task.shape().row_count(); ++j)
      if (!rows_equal_rate[static_cast<std::size_t>(j)] &&
          task.shape().parts()[static_cast<std::size_t>(j)] > 1)
        throw row_rate_error("row " + std::to_string(j + 1) +
                             " groups processors of unequal rate");
  }
  return StandardAssignmentTabloid(canonicalize(task.tableau()));
}

StandardAssignmentTabloid canonical_assignment_tabloid(const TaskTableau& task,
                                                       const Tabloid& proc_tabloid,
                                                       const std::vector<bool>& rows_equal_rate) {
  if (task.shape() != proc_tabloid.shape())
    throw shape_error("task shape " + task.shape().to_string() +
                      " differs from processor shape " + proc_tabloid.shape().to_string());
  if (!(proc_tabloid == canonicalize(sequential_filling(proc_tabloid.shape()))))
    throw invalid_argument("processor tabloid must contain the standard processor tableau");
  return canonical_assignment_tabloid(task, rows_equal_rate);
}

std::vector<StandardAssignmentTabloid> enumerate_standard_tabloids(const Partition& shape,
                                                                   int bound) {
  std::vector<StandardAssignmentTabloid> result;
  for (Tabloid& t : enumerate_tabloids(shape, bound))
    result.emplace_back(std::move(t));
  return result;
}

TabloidAssignments assignments_in_tabloid(const StandardAssignmentTabloid& tabloid, int bound) {
  const Partition& shape = tabloid.shape();
  if (shape.n() > bound)
    throw capacity_error("assignment enumeration of shape " + shape.to_string() +
                         " exceeds bound " + std::to_string(bound));

  TabloidAssignments out;
  out.count = young_subgroup_order(shape);
  std::vector<std::vector<int>> rows = tabloid.task_rows().rows();

  // Cartesian product of per-row permutations against the sequential
  // processor filling.
  auto recurse = [&](auto&& self, std::size_t row_index) -> void {
    if (row_index == rows.size()) {
      std::map<int, int> pairs;
      int proc = 1;
      for (const auto& row : rows)
        for (int task : row) pairs[task] = proc++;
      out.assignments.push_back(std::move(pairs));
      return;
    }
    auto& row = rows[row_index];
    std::sort(row.begin(), row.end());
    do {
      self(self, row_index + 1);
    } while (std::next_permutation(row.begin(), row.end()));
  };
  recurse(recurse, 0);
  return out;
}

namespace {

std::string encode_flat(char prefix, const std::vector<int>& entries) {
  std::string out(1, prefix);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(entries[i]);
  }
  return out;
}

// term := ("Y"|"y") int ("," int)* ; int := [1-9][0-9]*
std::vector<int> parse_term_entries(std::string_view term, char expected_prefix,
                                    const Partition& shape) {
  if (term.empty() || term.front() != expected_prefix)
    throw parse_error("term '" + std::string(term) + "' does not start with '" +
                      std::string(1, expected_prefix) + "'");
  std::vector<int> entries;
  std::size_t pos = 1;
  for (;;) {
    if (pos >= term.size() || term[pos] < '1' || term[pos] > '9')
      throw parse_error("malformed term '" + std::string(term) + "'");
    int value = 0;
    auto [next, ec] = std::from_chars(term.data() + pos, term.data() + term.size(), value);
    if (ec != std::errc()) throw parse_error("malformed term '" + std::string(term) + "'");
    entries.push_back(value);
    pos = static_cast<std::size_t>(next - term.data());
    if (pos == term.size()) break;
    if (term[pos] != ',') throw parse_error("malformed term '" + std::string(term) + "'");
    ++pos;
  }
  if (static_cast<int>(entries.size()) != shape.n())
    throw parse_error("term '" + std::string(term) + "' has " +
                      std::to_string(entries.size()) + " entries, shape " + shape.to_string() +
                      " needs " + std::to_string(shape.n()));
  return entries;
}

std::vector<std::vector<int>> reshape(const std::vector<int>& flat, const Partition& shape) {
  std::vector<std::vector<int>> rows;
  rows.reserve(static_cast<std::size_t>(shape.row_count()));
  std::size_t pos = 0;
  for (int part : shape.parts()) {
    rows.emplace_back(flat.begin() + static_cast<std::ptrdiff_t>(pos),
                      flat.begin() + static_cast<std::ptrdiff_t>(pos + static_cast<std::size_t>(part)));
    pos += static_cast<std::size_t>(part);
  }
  return rows;
}

}  // namespace

std::string encode(const StandardAssignmentTabloid& tabloid) { return encode(tabloid.task_rows()); }

std::string encode(const Tabloid& tabloid) { return encode_flat('Y', tabloid.flattened()); }

std::string encode(const Tableau& tableau) { return encode_flat('y', tableau.flattened()); }

StandardAssignmentTabloid decode_tabloid(std::string_view term, const Partition& shape) {
  const auto entries = parse_term_entries(term, 'Y', shape);
  try {
    return StandardAssignmentTabloid(Tabloid(shape, reshape(entries, shape)));
  } catch (const invalid_filling& e) {
    throw parse_error("term '" + std::string(term) + "': " + e.what());
  }
}

Tableau decode_tableau(std::string_view term, const Partition& shape) {
  const auto entries = parse_term_entries(term, 'y', shape);
  try {
    return Tableau(shape, reshape(entries, shape));
  } catch (const invalid_filling& e) {
    throw parse_error("term '" + std::string(term) + "': " + e.what());
  }
}

std::variant<StandardAssignmentTabloid, Tableau> decode(std::string_view term,
                                                        const Partition& shape) {
  if (!term.empty() && term.front() == 'Y') return decode_tabloid(term, shape);
  if (!term.empty() && term.front() == 'y') return decode_tableau(term, shape);
  throw parse_error("term '" + std::string(term) + "' must start with 'Y' or 'y'");
}

}  // namespace tabassign

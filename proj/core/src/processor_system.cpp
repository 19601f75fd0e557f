#include "tabassign/processor_system.hpp"

#include <charconv>
#include <sstream>
#include <string>

#include "tabassign/errors.hpp"

namespace tabassign {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> tokens;
  std::string token;
  while (in >> token) tokens.push_back(token);
  return tokens;
}

int parse_id(const std::string& token, const char* what) {
  int value = 0;
  auto [next, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || next != token.data() + token.size() || value < 1)
    throw parse_error(std::string(what) + " '" + token + "' is not a positive integer");
  return value;
}

double parse_real(const std::string& token, const char* what) {
  double value = 0;
  auto [next, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || next != token.data() + token.size())
    throw parse_error(std::string(what) + " '" + token + "' is not a number");
  return value;
}

std::vector<std::string> meaningful_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    lines.push_back(line);
  }
  return lines;
}

}  // namespace

ProcessorSystem ProcessorSystem::consistent(std::map<int, double> rates, double link_rate) {
  if (rates.empty()) throw parse_error("processor system has no processors");
  if (link_rate <= 0.0) throw parse_error("link rate must be positive");
  ProcessorSystem system;
  system.mode_ = Mode::consistent;
  system.m_ = static_cast<int>(rates.size());
  system.link_rate_ = link_rate;
  system.rates_.assign(static_cast<std::size_t>(system.m_) + 1, 0.0);
  for (const auto& [id, rate] : rates) {
    if (id < 1 || id > system.m_)
      throw parse_error("processor IDs must be exactly {1.." + std::to_string(system.m_) + "}");
    if (rate <= 0.0)
      throw parse_error("processor " + std::to_string(id) + " rate must be positive");
    system.rates_[static_cast<std::size_t>(id)] = rate;
  }
  return system;
}

ProcessorSystem ProcessorSystem::cost_matrix(std::vector<std::vector<double>> costs,
                                             double link_rate) {
  if (costs.empty() || costs.front().empty()) throw parse_error("cost matrix is empty");
  if (link_rate <= 0.0) throw parse_error("link rate must be positive");
  ProcessorSystem system;
  system.mode_ = Mode::inconsistent;
  system.m_ = static_cast<int>(costs.front().size());
  system.link_rate_ = link_rate;
  for (const auto& row : costs) {
    if (static_cast<int>(row.size()) != system.m_)
      throw parse_error("cost matrix rows have different widths");
    for (double w : row)
      if (w <= 0.0) throw parse_error("cost matrix entries must be positive");
  }
  system.costs_ = std::move(costs);
  return system;
}

ProcessorSystem ProcessorSystem::parse(std::string_view text) {
  const auto lines = meaningful_lines(text);
  if (lines.empty()) throw parse_error("processor file is empty");

  std::size_t start = 0;
  const bool matrix_mode = tokenize(lines[0]).size() == 1 && tokenize(lines[0])[0] == "costmatrix";
  if (matrix_mode) start = 1;

  double link_rate = 1.0;
  bool link_seen = false;
  std::map<int, double> rates;
  std::map<int, std::vector<double>> rows;

  for (std::size_t i = start; i < lines.size(); ++i) {
    const auto tokens = tokenize(lines[i]);
    if (tokens[0] == "link") {
      if (tokens.size() != 2) throw parse_error("expected 'link <rate>'");
      if (link_seen) throw parse_error("duplicate link line");
      link_seen = true;
      link_rate = parse_real(tokens[1], "link rate");
    } else if (!matrix_mode && tokens[0] == "proc") {
      if (tokens.size() != 3) throw parse_error("expected 'proc <id> <rate>'");
      const int id = parse_id(tokens[1], "processor ID");
      if (rates.count(id)) throw parse_error("duplicate processor " + std::to_string(id));
      rates[id] = parse_real(tokens[2], "processor rate");
    } else if (matrix_mode && tokens[0] == "row") {
      if (tokens.size() < 3) throw parse_error("expected 'row <task-id> <w1> ... <wm>'");
      const int task = parse_id(tokens[1], "task ID");
      if (rows.count(task)) throw parse_error("duplicate row for task " + std::to_string(task));
      std::vector<double> weights;
      for (std::size_t j = 2; j < tokens.size(); ++j)
        weights.push_back(parse_real(tokens[j], "cost"));
      rows[task] = std::move(weights);
    } else {
      throw parse_error("unknown directive '" + tokens[0] + "'");
    }
  }

  if (matrix_mode) {
    if (rows.empty()) throw parse_error("cost matrix has no rows");
    const int n = static_cast<int>(rows.size());
    std::vector<std::vector<double>> costs;
    for (int task = 1; task <= n; ++task) {
      const auto it = rows.find(task);
      if (it == rows.end())
        throw parse_error("cost matrix rows must cover tasks {1.." + std::to_string(n) + "}");
      costs.push_back(it->second);
    }
    return cost_matrix(std::move(costs), link_rate);
  }
  return consistent(std::move(rates), link_rate);
}

double ProcessorSystem::rate(int p) const {
  if (mode_ != Mode::consistent)
    throw invalid_argument("execution rates are only defined in consistent mode");
  if (p < 1 || p > m_) throw invalid_argument("unknown processor " + std::to_string(p));
  return rates_[static_cast<std::size_t>(p)];
}

double computation_cost(int v, int p, const TaskGraph& graph, const ProcessorSystem& system) {
  if (p < 1 || p > system.processor_count())
    throw invalid_argument("unknown processor " + std::to_string(p));
  if (system.mode() == ProcessorSystem::Mode::consistent)
    return graph.requirement(v) / system.rate(p);
  if (v < 1 || v > static_cast<int>(system.costs().size()))
    throw invalid_argument("cost matrix has no row for task " + std::to_string(v));
  (void)graph.requirement(v);  // validates the task ID against the graph
  return system.costs()[static_cast<std::size_t>(v - 1)][static_cast<std::size_t>(p - 1)];
}

double communication_cost(int vi, int vj, int ps, int pt, const TaskGraph& graph,
                          const ProcessorSystem& system) {
  if (ps < 1 || ps > system.processor_count() || pt < 1 || pt > system.processor_count())
    throw invalid_argument("unknown processor");
  const double data = graph.edge_data(vi, vj);  // throws on non-edges
  if (ps == pt) return 0.0;
  return data / system.link_rate();
}

}  // namespace tabassign

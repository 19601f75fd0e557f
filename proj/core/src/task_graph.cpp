#include "tabassign/task_graph.hpp"

#include <algorithm>
#include <charconv>
#include <set>
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

}  // namespace

TaskGraph::TaskGraph(std::map<int, double> requirements,
                     std::map<std::pair<int, int>, double> edges)
    : edges_(std::move(edges)) {
  if (requirements.empty()) throw parse_error("task graph has no tasks");
  n_ = static_cast<int>(requirements.size());
  requirements_.assign(static_cast<std::size_t>(n_) + 1, 0.0);
  for (const auto& [id, req] : requirements) {
    if (id < 1 || id > n_)
      throw parse_error("task IDs must be exactly {1.." + std::to_string(n_) + "}");
    if (req <= 0.0)
      throw parse_error("task " + std::to_string(id) + " requirement must be positive");
    requirements_[static_cast<std::size_t>(id)] = req;
  }

  preds_.assign(static_cast<std::size_t>(n_) + 1, {});
  std::vector<std::vector<int>> succs(static_cast<std::size_t>(n_) + 1);
  std::vector<int> in_degree(static_cast<std::size_t>(n_) + 1, 0);
  for (const auto& [edge, data] : edges_) {
    const auto [src, dst] = edge;
    if (src < 1 || src > n_ || dst < 1 || dst > n_)
      throw parse_error("edge references unknown task");
    if (src == dst) throw cycle_error("self-loop on task " + std::to_string(src));
    if (data < 0.0) throw parse_error("edge data must be nonnegative");
    preds_[static_cast<std::size_t>(dst)].push_back(src);
    succs[static_cast<std::size_t>(src)].push_back(dst);
    ++in_degree[static_cast<std::size_t>(dst)];
  }
  for (auto& preds : preds_) std::sort(preds.begin(), preds.end());

  std::set<int> ready;
  for (int v = 1; v <= n_; ++v)
    if (in_degree[static_cast<std::size_t>(v)] == 0) ready.insert(v);
  while (!ready.empty()) {
    const int v = *ready.begin();
    ready.erase(ready.begin());
    topo_order_.push_back(v);
    for (int succ : succs[static_cast<std::size_t>(v)])
      if (--in_degree[static_cast<std::size_t>(succ)] == 0) ready.insert(succ);
  }
  if (static_cast<int>(topo_order_.size()) != n_) throw cycle_error("task graph contains a cycle");
}

TaskGraph TaskGraph::parse(std::string_view text) {
  std::map<int, double> requirements;
  std::map<std::pair<int, int>, double> edges;

  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;

    const auto tokens = tokenize(line);
    if (tokens[0] == "task") {
      if (tokens.size() != 3) throw parse_error("expected 'task <id> <requirement>'");
      const int id = parse_id(tokens[1], "task ID");
      if (requirements.count(id)) throw parse_error("duplicate task " + std::to_string(id));
      requirements[id] = parse_real(tokens[2], "task requirement");
    } else if (tokens[0] == "edge") {
      if (tokens.size() != 4) throw parse_error("expected 'edge <src> <dst> <data>'");
      const int src = parse_id(tokens[1], "edge source");
      const int dst = parse_id(tokens[2], "edge target");
      if (edges.count({src, dst}))
        throw parse_error("duplicate edge " + std::to_string(src) + "->" + std::to_string(dst));
      edges[{src, dst}] = parse_real(tokens[3], "edge data");
    } else {
      throw parse_error("unknown directive '" + tokens[0] + "'");
    }
  }

  for (const auto& [edge, data] : edges) {
    (void)data;
    if (!requirements.count(edge.first) || !requirements.count(edge.second))
      throw parse_error("edge " + std::to_string(edge.first) + "->" +
                        std::to_string(edge.second) + " references unknown task");
  }
  return TaskGraph(std::move(requirements), std::move(edges));
}

double TaskGraph::requirement(int v) const {
  if (v < 1 || v > n_) throw invalid_argument("unknown task " + std::to_string(v));
  return requirements_[static_cast<std::size_t>(v)];
}

bool TaskGraph::has_edge(int src, int dst) const { return edges_.count({src, dst}) > 0; }

double TaskGraph::edge_data(int src, int dst) const {
  const auto it = edges_.find({src, dst});
  if (it == edges_.end())
    throw invalid_argument("no edge " + std::to_string(src) + "->" + std::to_string(dst));
  return it->second;
}

const std::vector<int>& TaskGraph::predecessors(int v) const {
  if (v < 1 || v > n_) throw invalid_argument("unknown task " + std::to_string(v));
  return preds_[static_cast<std::size_t>(v)];
}

}  // namespace tabassign

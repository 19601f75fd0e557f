// tabassign: enumerate assignment tabloids, evaluate and optimize DAG
// schedules, print character tables, act on k-assignments vectors, pair
// functionals, and rank assignment corpora.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "tabassign/errors.hpp"
#include "tabassign/retrieval.hpp"
#include "tabassign/vector_space.hpp"

namespace {

using nlohmann::json;
using namespace tabassign;

std::string fmt6(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.6g", value);
  return buffer;
}

std::string fmt3(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.3f", value);
  return buffer;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

struct Options {
  std::string output = "text";
  int bound = kDefaultEnumerationBound;

  bool jsonl() const { return output == "jsonl"; }
};

int run_enumerate(const std::string& shape_text, bool count_only, const Options& opts) {
  const Partition shape = Partition::parse(shape_text);
  if (count_only) {
    const auto count = dimension(shape);
    if (opts.jsonl())
      std::cout << json{{"shape", shape.to_string()}, {"count", count}} << '\n';
    else
      std::cout << count << '\n';
    return 0;
  }
  const auto tabloids = enumerate_standard_tabloids(shape, opts.bound);
  for (std::size_t i = 0; i < tabloids.size(); ++i) {
    if (opts.jsonl())
      std::cout << json{{"index", i + 1}, {"term", tabloids[i].key()}} << '\n';
    else
      std::cout << tabloids[i].key() << '\n';
  }
  return 0;
}

int run_characters(int n, const Options& opts) {
  const auto table = character_table(n, opts.bound);
  json classes = json::array();
  if (opts.jsonl())
    for (const auto& p : table.partitions) classes.push_back(p.to_string());
  for (std::size_t i = 0; i < table.values.size(); ++i) {
    if (opts.jsonl()) {
      std::cout << json{{"shape", table.partitions[i].to_string()},
                        {"classes", classes},
                        {"values", table.values[i]}}
                << '\n';
    } else {
      for (std::size_t j = 0; j < table.values[i].size(); ++j) {
        if (j > 0) std::cout << ' ';
        std::cout << table.values[i][j];
      }
      std::cout << '\n';
    }
  }
  return 0;
}

Schedule evaluate_term(const std::string& term, const Partition& shape, const TaskGraph& graph,
                       const ProcessorSystem& system) {
  const auto decoded = decode(term, shape);
  if (std::holds_alternative<StandardAssignmentTabloid>(decoded))
    return evaluate(std::get<StandardAssignmentTabloid>(decoded), graph, system);
  // A "y" term is one concrete assignment: the task tableau over the
  // standard processor filling.
  const AssignmentTableau concrete(TaskTableau(std::get<Tableau>(decoded)),
                                   ProcessorTableau::standard(shape));
  return evaluate(concrete.assignment_set(), graph, system);
}

int run_evaluate(const std::string& graph_path, const std::string& procs_path,
                 const std::string& shape_text, const std::string& term, const Options& opts) {
  const Partition shape = Partition::parse(shape_text);
  const TaskGraph graph = TaskGraph::parse(read_file(graph_path));
  const ProcessorSystem system = ProcessorSystem::parse(read_file(procs_path));
  const Schedule schedule = evaluate_term(term, shape, graph, system);

  for (const auto& [task, start] : schedule.start) {
    const int proc = schedule.proc_of.at(task);
    const double finish = schedule.finish.at(task);
    if (opts.jsonl())
      std::cout << json{{"type", "task"},
                        {"id", task},
                        {"proc", proc},
                        {"start", start},
                        {"finish", finish}}
                << '\n';
    else
      std::cout << "task " << task << " proc " << proc << " start " << fmt6(start) << " finish "
                << fmt6(finish) << '\n';
  }
  for (const auto& [proc, exec] : schedule.exec_time) {
    const double idle = schedule.idle_time.at(proc);
    const double util = schedule.utilization.at(proc);
    if (opts.jsonl())
      std::cout << json{{"type", "proc"},
                        {"id", proc},
                        {"exec", exec},
                        {"idle", idle},
                        {"utilization", util}}
                << '\n';
    else
      std::cout << "proc " << proc << " exec " << fmt6(exec) << " idle " << fmt6(idle)
                << " utilization " << fmt6(util) << '\n';
  }
  if (opts.jsonl())
    std::cout << json{{"type", "summary"},
                      {"turnaround", schedule.turnaround},
                      {"average_utilization", schedule.avg_utilization}}
              << '\n';
  else
    std::cout << "turnaround " << fmt6(schedule.turnaround) << "\naverage_utilization "
              << fmt6(schedule.avg_utilization) << '\n';
  return 0;
}

int run_optimize(const std::string& graph_path, const std::string& procs_path,
                 const std::string& shape_text, const std::string& metric_name,
                 const Options& opts) {
  const Partition shape = Partition::parse(shape_text);
  const Metric metric = metric_name == "utilization" ? Metric::utilization : Metric::turnaround;
  const auto best = optimize(TaskGraph::parse(read_file(graph_path)),
                             ProcessorSystem::parse(read_file(procs_path)), shape, metric,
                             opts.bound);
  if (opts.jsonl())
    std::cout << json{{"term", best.tabloid.key()}, {"value", best.value}, {"metric", metric_name}}
              << '\n';
  else
    std::cout << best.tabloid.key() << ' ' << fmt6(best.value) << '\n';
  return 0;
}

int run_act(const std::string& perm_text, const std::string& shape_text,
            const std::string& vector_text, const Options& opts) {
  const Partition shape = Partition::parse(shape_text);
  const Permutation p = Permutation::from_cycles(perm_text, shape.n());
  const KVector result = act(p, KVector::parse(vector_text, shape));
  if (opts.jsonl()) {
    for (const auto& [term, coeff] : result.terms())
      std::cout << json{{"term", term}, {"coeff", coeff}} << '\n';
  } else {
    std::cout << result.to_string() << '\n';
  }
  return 0;
}

int run_pair(const std::string& shape_text, const std::string& functional_text,
             const std::string& vector_text, const Options& opts) {
  const Partition shape = Partition::parse(shape_text);
  const double value =
      pairing(Functional::parse(functional_text, shape), KVector::parse(vector_text, shape));
  if (opts.jsonl())
    std::cout << json{{"value", value}} << '\n';
  else
    std::cout << fmt6(value) << '\n';
  return 0;
}

int run_rank(const std::string& query_path, const std::string& corpus_path, const Options& opts) {
  const Corpus corpus = Corpus::parse(read_file(corpus_path));
  const Corpus query_file = Corpus::parse(read_file(query_path));
  if (query_file.shape != corpus.shape)
    throw shape_error("query shape " + query_file.shape.to_string() +
                      " does not match corpus shape " + corpus.shape.to_string());
  if (query_file.kind != corpus.kind)
    throw parse_error("query kind does not match corpus kind");
  if (query_file.documents.size() != 1)
    throw parse_error("query file must contain exactly one document line");

  const auto result = rank(query_file.documents.front(), corpus);
  for (const auto& [index, score] : result.entries) {
    if (opts.jsonl())
      std::cout << json{{"index", index}, {"score", std::round(score * 1000.0) / 1000.0}} << '\n';
    else
      std::cout << index << ' ' << fmt3(score) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Task assignment tabloids, schedules and retrieval"};
  app.require_subcommand(1);

  Options opts;
  std::string shape_text, graph_path, procs_path, term, perm_text, vector_text, functional_text;
  std::string metric = "turnaround";
  std::string query_path, corpus_path;
  int n = 0;
  bool count_only = false;

  auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("--output", opts.output, "Output format")
        ->check(CLI::IsMember({"text", "jsonl"}));
    cmd->add_option("--bound", opts.bound, "Enumeration size cap");
  };

  auto* enumerate_cmd = app.add_subcommand("enumerate", "List standard assignment tabloids");
  enumerate_cmd->add_option("--shape", shape_text, "Shape a,b,c")->required();
  enumerate_cmd->add_flag("--count", count_only, "Print only the count");
  add_output(enumerate_cmd);

  auto* characters_cmd = app.add_subcommand("characters", "Character table of the tabloid spaces");
  characters_cmd->add_option("--n", n, "Number of tasks")->required();
  add_output(characters_cmd);

  auto* evaluate_cmd = app.add_subcommand("evaluate", "Evaluate one assignment on a task graph");
  evaluate_cmd->add_option("--graph", graph_path, "Task graph file")->required();
  evaluate_cmd->add_option("--procs", procs_path, "Processor file")->required();
  evaluate_cmd->add_option("--shape", shape_text, "Shape a,b,c")->required();
  evaluate_cmd->add_option("--assignment", term, "Term, Y... tabloid or y... tableau")->required();
  add_output(evaluate_cmd);

  auto* optimize_cmd = app.add_subcommand("optimize", "Exhaustive best tabloid of a shape");
  optimize_cmd->add_option("--graph", graph_path, "Task graph file")->required();
  optimize_cmd->add_option("--procs", procs_path, "Processor file")->required();
  optimize_cmd->add_option("--shape", shape_text, "Shape a,b,c")->required();
  optimize_cmd->add_option("--metric", metric, "turnaround or utilization")
      ->check(CLI::IsMember({"turnaround", "utilization"}));
  add_output(optimize_cmd);

  auto* act_cmd = app.add_subcommand("act", "Apply a permutation to a vector");
  act_cmd->add_option("--perm", perm_text, "Cycle notation, e.g. \"(1 2)\"")->required();
  act_cmd->add_option("--shape", shape_text, "Shape a,b,c")->required();
  act_cmd->add_option("--vector", vector_text, "Vector text, e.g. \"1*Y1,2 + 2*Y2,1\"")->required();
  add_output(act_cmd);

  auto* pair_cmd = app.add_subcommand("pair", "Pair a functional with a vector");
  pair_cmd->add_option("--shape", shape_text, "Shape a,b,c")->required();
  pair_cmd->add_option("--functional", functional_text, "Functional text")->required();
  pair_cmd->add_option("--vector", vector_text, "Vector text")->required();
  add_output(pair_cmd);

  auto* rank_cmd = app.add_subcommand("rank", "Rank corpus documents against a query");
  rank_cmd->add_option("--query", query_path, "Query file")->required();
  rank_cmd->add_option("--corpus", corpus_path, "Corpus file")->required();
  add_output(rank_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(enumerate_cmd)) return run_enumerate(shape_text, count_only, opts);
    if (app.got_subcommand(characters_cmd)) return run_characters(n, opts);
    if (app.got_subcommand(evaluate_cmd))
      return run_evaluate(graph_path, procs_path, shape_text, term, opts);
    if (app.got_subcommand(optimize_cmd))
      return run_optimize(graph_path, procs_path, shape_text, metric, opts);
    if (app.got_subcommand(act_cmd)) return run_act(perm_text, shape_text, vector_text, opts);
    if (app.got_subcommand(pair_cmd))
      return run_pair(shape_text, functional_text, vector_text, opts);
    if (app.got_subcommand(rank_cmd)) return run_rank(query_path, corpus_path, opts);
  } catch (const tabassign::error& e) {
    std::cerr << "tabassign: " << e.kind() << ": " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "tabassign: error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "tabassign/errors.hpp"
#include "tabassign/schedule.hpp"

using namespace tabassign;

namespace {

std::mt19937& rng() {
  static std::mt19937 gen(31);
  return gen;
}

// Chain 1->2->3->4 with requirements (1,2,3,4), rates (1,1,2,2), no
// communication; the shape-(2,2) turnarounds are known in closed form.
const char* kChainGraph =
    "task 1 1\ntask 2 2\ntask 3 3\ntask 4 4\n"
    "edge 1 2 0\nedge 2 3 0\nedge 3 4 0\n";
const char* kChainProcs = "proc 1 1\nproc 2 1\nproc 3 2\nproc 4 2\n";

TaskGraph random_dag(int n) {
  std::string text;
  for (int v = 1; v <= n; ++v)
    text += "task " + std::to_string(v) + " " +
            std::to_string(1 + static_cast<int>(rng()() % 9)) + "\n";
  for (int src = 1; src <= n; ++src)
    for (int dst = src + 1; dst <= n; ++dst)
      if (rng()() % 3 == 0)
        text += "edge " + std::to_string(src) + " " + std::to_string(dst) + " " +
                std::to_string(static_cast<int>(rng()() % 5)) + "\n";
  return TaskGraph::parse(text);
}

ProcessorSystem random_row_equal_system(const Partition& shape) {
  std::map<int, double> rates;
  int proc = 1;
  for (int part : shape.parts()) {
    const double rate = 1.0 + static_cast<double>(rng()() % 8);
    for (int k = 0; k < part; ++k) rates[proc++] = rate;
  }
  return ProcessorSystem::consistent(std::move(rates));
}

std::map<int, int> map_of(const std::vector<int>& procs_by_task) {
  std::map<int, int> assignment;
  for (std::size_t i = 0; i < procs_by_task.size(); ++i)
    assignment[static_cast<int>(i + 1)] = procs_by_task[i];
  return assignment;
}

}  // namespace

TEST_CASE("chain turnarounds for every shape-(2,2) tabloid") {
  const auto g = TaskGraph::parse(kChainGraph);
  const auto s = ProcessorSystem::parse(kChainProcs);
  const Partition shape({2, 2});

  const std::vector<double> expected{6.5, 7.0, 7.5, 7.5, 8.0, 8.5};
  const auto tabloids = enumerate_standard_tabloids(shape);
  REQUIRE(tabloids.size() == expected.size());
  for (std::size_t i = 0; i < tabloids.size(); ++i)
    CHECK(evaluate(tabloids[i], g, s).turnaround == doctest::Approx(expected[i]).epsilon(1e-12));
}

TEST_CASE("chain schedule details for Y1,2,3,4") {
  const auto g = TaskGraph::parse(kChainGraph);
  const auto s = ProcessorSystem::parse(kChainProcs);
  const auto schedule = evaluate(decode_tabloid("Y1,2,3,4", Partition({2, 2})), g, s);

  CHECK(schedule.start.at(1) == 0.0);
  CHECK(schedule.finish.at(1) == 1.0);
  CHECK(schedule.start.at(2) == 1.0);
  CHECK(schedule.finish.at(2) == 3.0);
  CHECK(schedule.finish.at(3) == 4.5);
  CHECK(schedule.finish.at(4) == 6.5);
  CHECK(schedule.idle_time.at(4) == 4.5);
  CHECK(schedule.exec_time.at(4) == 2.0);
  CHECK(schedule.turnaround == 6.5);
  // Average utilization: (1 + 2 + 1.5 + 2) / (4 * 6.5)
  CHECK(schedule.avg_utilization == doctest::Approx(6.5 / 26.0).epsilon(1e-12));
}

TEST_CASE("single task") {
  const auto g = TaskGraph::parse("task 1 4\n");
  const auto s = ProcessorSystem::parse("proc 1 2\n");
  const auto schedule = evaluate(map_of({1}), g, s);
  CHECK(schedule.turnaround == 2.0);
  CHECK(schedule.utilization.at(1) == 1.0);
  CHECK(schedule.avg_utilization == 1.0);
}

TEST_CASE("communication costs delay successors across processors") {
  const auto g = TaskGraph::parse("task 1 10\ntask 2 10\nedge 1 2 5\n");
  const auto s = ProcessorSystem::parse("proc 1 10\nproc 2 10\n");
  const auto schedule = evaluate(map_of({1, 2}), g, s);
  CHECK(schedule.start.at(2) == 6.0);  // finish(1)=1 plus 5 units of data at rate 1
  CHECK(schedule.turnaround == 7.0);
}

TEST_CASE("evaluate validates its inputs") {
  const auto g = TaskGraph::parse(kChainGraph);
  const auto s = ProcessorSystem::parse(kChainProcs);
  CHECK_THROWS_AS(evaluate(map_of({1, 2, 3}), g, s), invalid_argument);
  CHECK_THROWS_AS(evaluate(map_of({1, 2, 3, 3}), g, s), invalid_argument);
  CHECK_THROWS_AS(evaluate(map_of({1, 2, 3, 5}), g, s), invalid_argument);
  CHECK_THROWS_AS(evaluate(map_of({1, 2}), TaskGraph::parse("task 1 1\ntask 2 1\n"), s),
                  invalid_argument);
}

TEST_CASE("tabloid evaluation needs row-equal rates") {
  const auto g = TaskGraph::parse(kChainGraph);
  const auto uneven = ProcessorSystem::parse("proc 1 1\nproc 2 2\nproc 3 2\nproc 4 2\n");
  CHECK_THROWS_AS(evaluate(decode_tabloid("Y1,2,3,4", Partition({2, 2})), g, uneven),
                  row_rate_error);

  const auto matrix = ProcessorSystem::parse(
      "costmatrix\nrow 1 1 1 1 1\nrow 2 1 1 1 1\nrow 3 1 1 1 1\nrow 4 1 1 1 1\n");
  CHECK_THROWS_AS(evaluate(decode_tabloid("Y1,2,3,4", Partition({2, 2})),
                           TaskGraph::parse(kChainGraph), matrix),
                  invalid_argument);
  // Explicit assignments still evaluate in cost-matrix mode.
  const auto m4 = ProcessorSystem::parse(
      "costmatrix\nrow 1 1 2 3 4\nrow 2 1 2 3 4\nrow 3 1 2 3 4\nrow 4 1 2 3 4\n");
  const auto schedule = evaluate(map_of({1, 2, 3, 4}), TaskGraph::parse(kChainGraph), m4);
  CHECK(schedule.turnaround == 10.0);  // 1+2+3+4 down the chain
}

TEST_CASE("evaluate is deterministic") {
  const auto g = random_dag(6);
  const auto s = random_row_equal_system(Partition({3, 2, 1}));
  const auto tabloid = enumerate_standard_tabloids(Partition({3, 2, 1})).at(7);
  const auto a = evaluate(tabloid, g, s);
  const auto b = evaluate(tabloid, g, s);
  CHECK(a.turnaround == b.turnaround);
  CHECK(a.start == b.start);
  CHECK(a.finish == b.finish);
  CHECK(a.avg_utilization == b.avg_utilization);
}

TEST_CASE("start equals data ready time and each processor runs one cost") {
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng()() % 7);
    const auto g = random_dag(n);
    std::map<int, double> rates;
    for (int p = 1; p <= n; ++p) rates[p] = 1.0 + static_cast<double>(rng()() % 5);
    const auto s = ProcessorSystem::consistent(std::move(rates));

    std::vector<int> procs(static_cast<std::size_t>(n));
    std::iota(procs.begin(), procs.end(), 1);
    std::shuffle(procs.begin(), procs.end(), rng());
    const auto assignment = map_of(procs);
    const auto schedule = evaluate(assignment, g, s);

    for (int v = 1; v <= n; ++v) {
      double ready = 0.0;
      for (int pred : g.predecessors(v))
        ready = std::max(ready, schedule.finish.at(pred) +
                                    communication_cost(pred, v, assignment.at(pred),
                                                       assignment.at(v), g, s));
      REQUIRE(schedule.start.at(v) == ready);
      REQUIRE(schedule.exec_time.at(assignment.at(v)) ==
              computation_cost(v, assignment.at(v), g, s));
    }
  }
}

TEST_CASE("class members share turnaround and average utilization exactly") {
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng()() % 5);
    const auto shapes = partitions_of(n);
    const auto& shape = shapes[rng()() % shapes.size()];
    const auto g = random_dag(n);
    const auto s = random_row_equal_system(shape);
    const auto tabloids = enumerate_standard_tabloids(shape);
    const auto& tabloid = tabloids[rng()() % tabloids.size()];

    const auto reference = evaluate(tabloid, g, s);
    for (const auto& assignment : assignments_in_tabloid(tabloid).assignments) {
      const auto schedule = evaluate(assignment, g, s);
      REQUIRE(schedule.turnaround == reference.turnaround);
      REQUIRE(schedule.avg_utilization == reference.avg_utilization);
    }
  }
}

TEST_CASE("scaling all rates by c scales turnaround by 1/c without communication") {
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + static_cast<int>(rng()() % 5);
    std::string text;
    for (int v = 1; v <= n; ++v)
      text += "task " + std::to_string(v) + " " + std::to_string(1 + rng()() % 9) + "\n";
    for (int v = 1; v < n; ++v)
      text += "edge " + std::to_string(v) + " " + std::to_string(v + 1) + " 0\n";
    const auto g = TaskGraph::parse(text);

    std::map<int, double> rates, scaled;
    const double c = 1.0 + static_cast<double>(rng()() % 7);
    for (int p = 1; p <= n; ++p) {
      rates[p] = 1.0 + static_cast<double>(rng()() % 5);
      scaled[p] = c * rates[p];
    }
    std::vector<int> procs(static_cast<std::size_t>(n));
    std::iota(procs.begin(), procs.end(), 1);
    std::shuffle(procs.begin(), procs.end(), rng());

    const double base =
        evaluate(map_of(procs), g, ProcessorSystem::consistent(std::move(rates))).turnaround;
    const double fast =
        evaluate(map_of(procs), g, ProcessorSystem::consistent(std::move(scaled))).turnaround;
    REQUIRE(std::abs(fast - base / c) <= 1e-12 * std::abs(base / c));
  }
}

TEST_CASE("optimize on the chain") {
  const auto g = TaskGraph::parse(kChainGraph);
  const auto s = ProcessorSystem::parse(kChainProcs);

  const auto best = optimize(g, s, Partition({2, 2}), Metric::turnaround);
  CHECK(best.tabloid.key() == "Y1,2,3,4");
  CHECK(best.value == 6.5);

  const auto util = optimize(g, s, Partition({2, 2}), Metric::utilization);
  CHECK(util.tabloid.key() == "Y1,2,3,4");  // same winner: shortest makespan
}

TEST_CASE("optimize over a single-class shape returns the unique tabloid") {
  const auto g = TaskGraph::parse(kChainGraph);
  const auto s = ProcessorSystem::parse("proc 1 1\nproc 2 1\nproc 3 1\nproc 4 1\n");
  const auto best = optimize(g, s, Partition({4}), Metric::turnaround);
  CHECK(best.tabloid.key() == "Y1,2,3,4");
  CHECK(best.value == 10.0);
}

TEST_CASE("optimize equals brute force over all bijections for shape (1^n)") {
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 2 + static_cast<int>(rng()() % 3);
    const auto g = random_dag(n);
    std::map<int, double> rates;
    for (int p = 1; p <= n; ++p) rates[p] = 1.0 + static_cast<double>(rng()() % 4);
    const auto s = ProcessorSystem::consistent(std::move(rates));

    const Partition shape(std::vector<int>(static_cast<std::size_t>(n), 1));
    const auto best = optimize(g, s, shape, Metric::turnaround);

    double brute = std::numeric_limits<double>::infinity();
    std::vector<int> procs(static_cast<std::size_t>(n));
    std::iota(procs.begin(), procs.end(), 1);
    std::sort(procs.begin(), procs.end());
    do {
      brute = std::min(brute, evaluate(map_of(procs), g, s).turnaround);
    } while (std::next_permutation(procs.begin(), procs.end()));
    REQUIRE(best.value == brute);
  }
}

TEST_CASE("k_copies_totals") {
  const Partition shape({2, 2});
  const std::map<std::string, double> turnarounds{
      {"Y1,2,3,4", 15.0}, {"Y1,3,2,4", 23.0}, {"Y1,4,2,3", 20.0},
      {"Y2,3,1,4", 23.0}, {"Y2,4,1,3", 20.0}, {"Y3,4,1,2", 28.0}};

  const auto d1 = KVector::parse("1*Y1,3,2,4 + 2*Y1,4,2,3 + 1*Y2,3,1,4 + 1*Y3,4,1,2", shape);
  const auto d1_totals = k_copies_totals(d1, turnarounds);
  CHECK(d1_totals.total == doctest::Approx(114.0).epsilon(1e-12));
  CHECK(d1_totals.average == doctest::Approx(22.8).epsilon(1e-12));

  const auto q = KVector::parse("Y1,3,2,4 + Y1,2,3,4", shape);
  CHECK(k_copies_totals(q, turnarounds).average == doctest::Approx(19.0).epsilon(1e-12));

  const auto single = KVector::parse("1*Y3,4,1,2", shape);
  CHECK(k_copies_totals(single, turnarounds).total == 28.0);
  CHECK(k_copies_totals(single, turnarounds).average == 28.0);

  CHECK_THROWS_AS(k_copies_totals(KVector(shape), turnarounds), invalid_argument);  // k = 0
  CHECK_THROWS_AS(k_copies_totals(KVector::parse("0.5*Y1,2,3,4", shape), turnarounds),
                  invalid_argument);
  CHECK_THROWS_AS(k_copies_totals(q, {{"Y1,3,2,4", 23.0}}), invalid_argument);  // missing key
}

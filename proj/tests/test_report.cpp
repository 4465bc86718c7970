#include <algorithm>
#include <random>

#include "doctest.h"
#include "neurobench/error.hpp"
#include "neurobench/report.hpp"
#include "support.hpp"

using namespace neurobench;
using nbtest::shipped;

namespace {

// O(n^2) dominance check
std::vector<std::string> brute_front(const std::vector<ScatterPoint>& pts) {
  std::vector<std::string> out;
  for (const auto& p : pts) {
    bool dominated = false;
    for (const auto& q : pts) {
      if (q.x <= p.x && q.y <= p.y && (q.x < p.x || q.y < p.y)) dominated = true;
    }
    if (!dominated) out.push_back(p.label);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> labels(const std::vector<ScatterPoint>& pts) {
  std::vector<std::string> out;
  for (const auto& p : pts) out.push_back(p.label);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("number formatting") {
  CHECK(format_number(2765000.0) == "2.765e+06");
  CHECK(format_number(77.83) == "77.83");
  CHECK(format_number(1.0 / 3.0) == "0.333333");
  CHECK(format_number(1.0 / 3.0, 3) == "0.333");
  CHECK_THROWS_AS(format_number(1.0, 0), DomainError);
}

TEST_CASE("CSV quoting round-trips") {
  CsvTable t;
  t.header = {"name", "note"};
  t.rows = {{"plain", "a,b"}, {"quote\"d", "line\nbreak"}, {"", ""}};
  const std::string text = to_csv(t);
  const CsvTable back = parse_csv(text);
  CHECK(back.header == t.header);
  CHECK(back.rows == t.rows);
  CHECK(parse_csv("a,b\r\n1,2\r\n").rows == std::vector<std::vector<std::string>>{{"1", "2"}});
  CHECK_THROWS_AS(parse_csv("a,b\n1\n"), ParseError);
  CHECK_THROWS_AS(parse_csv("a\n\"open\n"), ParseError);
}

TEST_CASE("element matrix: every technology, deterministic") {
  const Registry& r = shipped();
  const CsvTable t = emit_matrix(r, {});
  CHECK(t.header.size() == 14);
  CHECK(t.rows.size() == 56);
  CHECK(t.rows.front()[0] == "ANNDCSRAM");
  CHECK(to_csv(t) == to_csv(emit_matrix(r, {})));
  const CsvTable back = parse_csv(to_csv(t));
  CHECK(back.rows == t.rows);
  CHECK(std::stod(back.rows.front()[2]) == doctest::Approx(2.765e6).epsilon(1e-3));

  MatrixOptions none;
  none.filter = std::vector<std::string>{};
  const CsvTable empty = emit_matrix(r, none);
  CHECK(empty.rows.empty());
  CHECK(to_csv(empty) == to_csv(CsvTable{t.header, {}}));
}

TEST_CASE("workload and chip matrices") {
  const Registry& r = shipped();
  MatrixOptions w;
  w.scope = MatrixScope::workload;
  w.workload = "mnist_mlp";
  CHECK(emit_matrix(r, w).rows.size() == 56);
  w.workload = "nope";
  CHECK_THROWS_AS(emit_matrix(r, w), UnknownNameError);

  MatrixOptions ch;
  ch.scope = MatrixScope::chips;
  const CsvTable t = emit_matrix(r, ch);
  CHECK(t.rows.size() == r.chips().size());
  for (const auto& row : t.rows) CHECK(row.size() == t.header.size());
  const auto dyn = std::find_if(t.rows.begin(), t.rows.end(),
                                [](const auto& row) { return row[0] == "DYNAPSEL"; });
  REQUIRE(dyn != t.rows.end());
  CHECK(dyn->back().find("required") != std::string::npos);
}

TEST_CASE("pareto front: small cases") {
  const std::vector<ScatterPoint> pts{{"a", 1, 2}, {"b", 2, 1}, {"c", 2, 2}};
  CHECK(labels(pareto_front(pts)) == std::vector<std::string>{"a", "b"});
  CHECK(labels(pareto_front({{"only", 5, 5}})) == std::vector<std::string>{"only"});
  CHECK(pareto_front({}).empty());
  const std::vector<ScatterPoint> chain{{"p", 3, 3}, {"q", 1, 1}, {"r", 2, 2}};
  CHECK(labels(pareto_front(chain)) == std::vector<std::string>{"q"});
}

TEST_CASE("pareto front matches brute force and ignores input order") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coord(0, 20);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<ScatterPoint> pts;
    for (int i = 0; i < 30; ++i) {
      pts.push_back({"p" + std::to_string(i), double(coord(rng)), double(coord(rng))});
    }
    const auto front = pareto_front(pts);
    CHECK(labels(front) == brute_front(pts));
    auto shuffled = pts;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    const auto again = pareto_front(shuffled);
    REQUIRE(again.size() == front.size());
    for (std::size_t i = 0; i < front.size(); ++i) CHECK(again[i].label == front[i].label);
  }
}

TEST_CASE("scatter datasets are finite and positive") {
  const Registry& r = shipped();
  for (auto kind : {ScatterKind::synapse, ScatterKind::neuron, ScatterKind::power_throughput}) {
    const auto pts = scatter(r, kind);
    CHECK(pts.size() >= 56);
    for (const auto& p : pts) {
      CAPTURE(p.label);
      CHECK(std::isfinite(p.x));
      CHECK(p.x > 0);
      CHECK(p.y > 0);
    }
  }
  const auto w = scatter(r, ScatterKind::workload, "speech_mlp");
  CHECK(std::count_if(w.begin(), w.end(),
                      [](const ScatterPoint& p) { return p.series == Series::neuromorphic; }) > 0);
  CHECK(scatter_table(w).rows.size() == w.size());
}

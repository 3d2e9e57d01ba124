#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <set>
#include <thread>

#include "circbut/constructions.hpp"
#include "circbut/search.hpp"
#include "doctest.h"

using namespace circbut;

namespace {

// full enumeration over ALL l^n rows (no gauge, no pruning), canonical dedup
long naive_class_count(int n, int l, EquivalenceGroup group, bool hermitian = false) {
  ZeroSumTable table(l);
  long volume = 1;
  for (int k = 0; k < n; ++k) volume *= l;
  std::set<std::vector<int>> canon;
  std::vector<int> e(n, 0);
  for (long code = 0; code < volume; ++code) {
    long rest = code;
    for (int k = 0; k < n; ++k) {
      e[k] = static_cast<int>(rest % l);
      rest /= l;
    }
    ExponentRow row(n, l, e);
    if (hermitian && !is_hermitian(row)) continue;
    if (!is_hadamard(row, table)) continue;
    canon.insert(group_canonical(row, group).e);
  }
  return static_cast<long>(canon.size());
}

double gram_residual(const ExponentRow& row) {
  const auto H = to_complex_matrix(row);
  const int n = row.n;
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::complex<double> dot = 0.0;
      for (int k = 0; k < n; ++k) dot += H[i][k] * std::conj(H[j][k]);
      if (i == j) dot -= static_cast<double>(n);
      worst = std::max(worst, std::abs(dot));
    }
  return worst;
}

}  // namespace

TEST_CASE("classify_cell matches the naive oracle on small cells") {
  const std::vector<std::pair<int, int>> cells{
      {2, 2}, {2, 3}, {2, 4}, {2, 6}, {2, 8}, {2, 12}, {3, 3}, {3, 4}, {3, 6}, {3, 8},
      {4, 2}, {4, 4}, {4, 5}, {4, 6}, {4, 8}, {4, 10}, {5, 4}, {5, 5}, {5, 6},
      {6, 3}, {6, 4}, {6, 6}, {7, 3}, {7, 4}, {9, 3}};
  for (auto [n, l] : cells) {
    for (auto group : {EquivalenceGroup::RotateAndConstant,
                       EquivalenceGroup::RotateConstantAndGalois}) {
      SearchConfig config;
      config.equivalence_group = group;
      const auto report = classify_cell(n, l, config);
      const long oracle = naive_class_count(n, l, group);
      REQUIRE(report.class_count == oracle);
    }
  }
}

TEST_CASE("classify_cell known values") {
  // counts cross-checked against the full-enumeration oracle
  CHECK(classify_cell(4, 2).class_count == 1);
  CHECK(classify_cell(4, 4).class_count == 2);
  CHECK(classify_cell(4, 6).class_count == 3);
  CHECK(classify_cell(5, 5).class_count == 4);
  CHECK(classify_cell(6, 3).class_count == 0);
  CHECK(classify_cell(6, 12).class_count == 2);
  CHECK(classify_cell(9, 3).class_count == 6);
  CHECK(classify_cell(8, 4).class_count == 4);
  CHECK(classify_cell(10, 4).class_count == 0);
}

TEST_CASE("order 2 admits circulant Hadamard rows exactly when 4 divides l") {
  // the 2x2 circulant with first row (1, w^{l/4}) is Hadamard
  CHECK(classify_cell(2, 2).class_count == 0);
  CHECK(classify_cell(2, 4).class_count == 1);
  CHECK(classify_cell(2, 6).class_count == 0);
  CHECK(classify_cell(2, 8).class_count == 1);
  CHECK(classify_cell(2, 12).class_count == 1);
  CHECK(is_hadamard(fourier_circulant(2)));
}

TEST_CASE("medium cell regression (all cross-checked by independent enumeration)") {
  CHECK(classify_cell(8, 8).class_count == 8);
  CHECK(classify_cell(9, 9).class_count == 54);
  CHECK(classify_cell(9, 6).class_count == 24);
}

TEST_CASE("classification is deterministic across worker counts") {
  for (auto [n, l] : {std::pair{4, 6}, std::pair{9, 3}, std::pair{5, 5}}) {
    SearchConfig serial;
    serial.worker_count = 1;
    const auto base = classify_cell(n, l, serial);
    for (int workers : {2, 3, 7}) {
      SearchConfig config;
      config.worker_count = workers;
      const auto report = classify_cell(n, l, config);
      CHECK(report.class_count == base.class_count);
      REQUIRE(report.representatives.size() == base.representatives.size());
      for (std::size_t i = 0; i < base.representatives.size(); ++i)
        CHECK(report.representatives[i] == base.representatives[i]);
      CHECK(report.nodes_visited == base.nodes_visited);
    }
  }
}

TEST_CASE("representatives are canonical, Hadamard, sorted and verified") {
  const auto report = classify_cell(4, 8);
  REQUIRE(report.class_count > 0);
  for (std::size_t i = 0; i < report.representatives.size(); ++i) {
    const auto& rep = report.representatives[i];
    CHECK(is_hadamard(rep));
    CHECK(group_canonical(rep, report.group) == rep);
    CHECK(gram_residual(rep) < 1e-8);
    if (i > 0) CHECK(report.representatives[i - 1] < rep);
  }
}

TEST_CASE("classify_cell rejects bad arguments and enforces the budget") {
  CHECK_THROWS_AS(classify_cell(1, 4), std::invalid_argument);
  CHECK_THROWS_AS(classify_cell(4, 1), std::invalid_argument);
  SearchConfig tiny;
  tiny.node_budget = 50;
  CHECK_THROWS_AS(classify_cell(7, 6, tiny), BudgetExceededError);
}

TEST_CASE("classify_hermitian matches a hermitian-filtered oracle") {
  for (auto [n, l] : {std::pair{4, 2}, std::pair{4, 4}, std::pair{5, 5}, std::pair{6, 3},
                      std::pair{6, 4}, std::pair{8, 2}, std::pair{8, 4}, std::pair{3, 6}}) {
    const auto report = classify_hermitian(n, l);
    CHECK(report.class_count == naive_class_count(n, l, report.group, true));
  }
}

TEST_CASE("hermitian emptiness and the order-4 exception") {
  CHECK(classify_hermitian(4, 2).class_count == 1);
  CHECK(classify_hermitian(8, 2).class_count == 0);
  CHECK(classify_hermitian(8, 4).class_count == 0);
}

TEST_CASE("prime uniqueness audit") {
  {
    const auto r = prime_uniqueness_audit(3);
    CHECK(r.circulant_class_count == 2);
    CHECK(r.all_quadratic);
    CHECK(r.all_reduce_to_fourier);
    CHECK(r.fourier_class_count == 1);
    CHECK(r.unique);
  }
  {
    const auto r = prime_uniqueness_audit(5);
    CHECK(r.circulant_class_count == 4);
    CHECK(r.unique);
  }
  {
    // planar shortcut path
    const auto r = prime_uniqueness_audit(11);
    CHECK(r.circulant_class_count == 10);
    CHECK(r.all_quadratic);
    CHECK(r.unique);
  }
}

TEST_CASE("sweep_table runs obstructions first and searches the rest") {
  const auto sweep = sweep_table(6, 8);
  REQUIRE(sweep.cells.size() == 5 * 7);
  for (const auto& cell : sweep.cells) {
    const auto verdict = check_obstructions(cell.n, cell.l);
    CHECK(cell.obstruction.reason == verdict.reason);
    if (verdict.obstructed()) {
      CHECK_FALSE(cell.class_count.has_value());
    } else {
      REQUIRE(cell.class_count.has_value());
      CHECK(*cell.class_count == classify_cell(cell.n, cell.l).class_count);
    }
  }
  const std::string rendered = render_table(sweep);
  CHECK(rendered.find("x_s") != std::string::npos);
  CHECK(rendered.find("x_pq") != std::string::npos);
  CHECK(rendered.find("n\\l") != std::string::npos);
}

TEST_CASE("distinct cells classify safely from concurrent threads") {
  std::vector<std::thread> threads;
  std::array<long, 4> counts{-1, -1, -1, -1};
  const std::array<std::pair<int, int>, 4> cells{
      std::pair{4, 6}, std::pair{9, 3}, std::pair{5, 5}, std::pair{6, 4}};
  for (int i = 0; i < 4; ++i)
    threads.emplace_back([&, i] { counts[i] = classify_cell(cells[i].first, cells[i].second).class_count; });
  for (auto& t : threads) t.join();
  CHECK(counts == std::array<long, 4>{3, 6, 4, 0});
}

TEST_CASE("group_canonical is idempotent and orbit-invariant") {
  for (auto group : {EquivalenceGroup::RotateAndConstant,
                     EquivalenceGroup::RotateConstantAndReversal,
                     EquivalenceGroup::RotateConstantAndGalois,
                     EquivalenceGroup::RotateConstantGaloisReversal}) {
    const ExponentRow row(4, 6, {0, 1, 0, 4});
    const auto canon = group_canonical(row, group);
    CHECK(group_canonical(canon, group) == canon);
    // rotations, constants stay in the same class
    for (int s = 0; s < 4; ++s) {
      for (int c = 0; c < 6; ++c) {
        std::vector<int> t(4);
        for (int k = 0; k < 4; ++k) t[k] = (row.e[(k + s) % 4] + c) % 6;
        CHECK(group_canonical(ExponentRow(4, 6, t), group) == canon);
      }
    }
  }
  // conjugation changes the class under the plain group but not under Galois
  const ExponentRow row(3, 3, {0, 1, 1});
  const ExponentRow conj(3, 3, {0, 2, 2});
  CHECK(group_canonical(row, EquivalenceGroup::RotateAndConstant) !=
        group_canonical(conj, EquivalenceGroup::RotateAndConstant));
  CHECK(group_canonical(row, EquivalenceGroup::RotateConstantAndGalois) ==
        group_canonical(conj, EquivalenceGroup::RotateConstantAndGalois));
}

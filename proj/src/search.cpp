#include "circbut/search.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <chrono>
#include <cmath>
#include <complex>
#include <memory>
#include <numbers>
#include <numeric>
#include <set>
#include <thread>

namespace circbut {

const char* equivalence_group_name(EquivalenceGroup g) {
  switch (g) {
    case EquivalenceGroup::RotateAndConstant: return "RotateAndConstant";
    case EquivalenceGroup::RotateConstantAndReversal: return "RotateConstantAndReversal";
    case EquivalenceGroup::RotateConstantAndGalois: return "RotateConstantAndGalois";
    case EquivalenceGroup::RotateConstantGaloisReversal: return "RotateConstantGaloisReversal";
  }
  return "?";
}

namespace {

bool group_has_reversal(EquivalenceGroup g) {
  return g == EquivalenceGroup::RotateConstantAndReversal ||
         g == EquivalenceGroup::RotateConstantGaloisReversal;
}

bool group_has_galois(EquivalenceGroup g) {
  return g == EquivalenceGroup::RotateConstantAndGalois ||
         g == EquivalenceGroup::RotateConstantGaloisReversal;
}

void min_rotation_rebased(const std::vector<int>& v, int l, std::vector<int>& best,
                          std::vector<int>& scratch) {
  const int n = static_cast<int>(v.size());
  for (int s = 0; s < n; ++s) {
    for (int k = 0; k < n; ++k) {
      int t = v[(k + s) % n] - v[s];
      scratch[k] = t < 0 ? t + l : t;
    }
    if (best.empty() || scratch < best) best = scratch;
  }
}

}  // namespace

ExponentRow group_canonical(const ExponentRow& row, EquivalenceGroup g) {
  const int n = row.n;
  const int l = row.l;
  std::vector<int> units{1};
  if (group_has_galois(g))
    for (int a = 2; a < l; ++a)
      if (std::gcd(a, l) == 1) units.push_back(a);

  std::vector<int> best;
  std::vector<int> tmp(n), scratch(n);
  const int rev_max = group_has_reversal(g) ? 1 : 0;
  for (int rev = 0; rev <= rev_max; ++rev) {
    for (int a : units) {
      for (int k = 0; k < n; ++k) {
        const int src = rev ? (n - k) % n : k;
        tmp[k] = static_cast<int>(static_cast<long>(a) * row.e[src] % l);
      }
      min_rotation_rebased(tmp, l, best, scratch);
    }
  }
  return ExponentRow(n, l, best);
}

namespace {

constexpr double kPruneSlack = 1e-4;

struct Slot {
  int pos;     // position assigned at this depth
  int mirror;  // hermitian partner, or -1; mirror == pos means self-paired
};

// Depth-first enumeration over one cell, single worker. Shares nothing.
class Walker {
 public:
  Walker(int n, int l, bool hermitian, EquivalenceGroup group, const ZeroSumTable& table,
         std::uint64_t budget, std::atomic<std::uint64_t>& global_nodes,
         std::atomic<bool>& abort_flag)
      : n_(n),
        l_(l),
        hermitian_(hermitian),
        group_(group),
        table_(table),
        budget_(budget),
        global_nodes_(global_nodes),
        abort_flag_(abort_flag) {
    roots_.resize(l_);
    for (int t = 0; t < l_; ++t) {
      const double angle = 2.0 * std::numbers::pi * t / l_;
      roots_[t] = {std::cos(angle), std::sin(angle)};
    }
    e_.assign(n_, 0);
    assigned_.assign(n_, 0);
    assigned_[0] = 1;
    lag_sum_.assign(n_, {0.0, 0.0});
    lag_cnt_.assign(n_, 0);
    counts_.assign(l_, 0);

    if (hermitian_) {
      for (int k = 1; k <= n_ / 2; ++k) {
        if (k == n_ - k)
          slots_.push_back({k, k});
        else
          slots_.push_back({k, n_ - k});
      }
      if (n_ == 1) slots_.clear();
    } else {
      for (int k = 1; k < n_; ++k) slots_.push_back({k, -1});
      cmp_.assign(n_, kUnstarted);
      cmp_stack_.assign(slots_.size() + 1, std::vector<int>(n_, kUnstarted));
    }
  }

  // stride-partitioned first-slot values for worker parallelism
  void run(int first_value_offset, int first_value_stride) {
    if (slots_.empty()) {
      if (first_value_offset == 0) leaf();
      return;
    }
    first_offset_ = first_value_offset;
    first_stride_ = first_value_stride;
    dfs(0);
    global_nodes_.fetch_add(local_nodes_pending_, std::memory_order_relaxed);
    local_nodes_pending_ = 0;
  }

  std::uint64_t nodes() const { return nodes_; }
  std::uint64_t pruned() const { return pruned_; }
  std::vector<std::vector<int>>& found() { return found_; }
  bool aborted() const { return aborted_; }

 private:
  static constexpr int kUnstarted = -2;
  static constexpr int kDead = -1;

  void dfs(int depth) {
    if (aborted_) return;
    const Slot slot = slots_[depth];
    const bool self_paired = slot.mirror == slot.pos;
    int value_count = l_;
    if (self_paired) value_count = l_ % 2 == 0 ? 2 : 1;  // 2v = 0 mod l

    for (int vi = 0; vi < value_count; ++vi) {
      if (depth == 0 && vi % first_stride_ != first_offset_) continue;
      int v = vi;
      if (self_paired && vi == 1) v = l_ / 2;

      if (++local_nodes_pending_ >= 256) {
        const std::uint64_t total =
            global_nodes_.fetch_add(local_nodes_pending_, std::memory_order_relaxed) +
            local_nodes_pending_;
        local_nodes_pending_ = 0;
        if (total > budget_) abort_flag_.store(true, std::memory_order_relaxed);
        if (abort_flag_.load(std::memory_order_relaxed)) {
          aborted_ = true;
          return;
        }
      }
      ++nodes_;

      bool ok = assign(slot.pos, v);
      int assigned_mirror = -1;
      if (ok && slot.mirror >= 0 && !self_paired) {
        assigned_mirror = slot.mirror;
        ok = assign(assigned_mirror, (l_ - v) % l_);
        if (!ok) {
          unassign(assigned_mirror, (l_ - v) % l_);
          assigned_mirror = -1;
        }
      }

      if (ok && !hermitian_) {
        cmp_stack_[depth + 1] = cmp_;
        ok = rotation_prune(slot.pos);
        if (!ok) {
          ++pruned_;
          cmp_ = cmp_stack_[depth + 1];
        }
      }

      if (ok) {
        if (depth + 1 == static_cast<int>(slots_.size()))
          leaf();
        else
          dfs(depth + 1);
        if (!hermitian_) cmp_ = cmp_stack_[depth + 1];
      }

      if (assigned_mirror >= 0) unassign(assigned_mirror, (l_ - v) % l_);
      unassign(slot.pos, v);
      if (aborted_) return;
    }
  }

  // Adds e[pos] = v and folds the newly completed lag pairs into the partial
  // sums; returns false (after folding) when some lag can no longer vanish.
  bool assign(int pos, int v) {
    e_[pos] = v;
    assigned_[pos] = 1;
    bool ok = true;
    for (int d = 1; d < n_; ++d) {
      const int prev = pos - d >= 0 ? pos - d : pos - d + n_;
      if (assigned_[prev] && prev != pos) {
        int t = v - e_[prev];
        if (t < 0) t += l_;
        lag_sum_[d] += roots_[t];
        ++lag_cnt_[d];
      }
      const int next = pos + d < n_ ? pos + d : pos + d - n_;
      if (assigned_[next] && next != pos) {
        int t = e_[next] - v;
        if (t < 0) t += l_;
        lag_sum_[d] += roots_[t];
        ++lag_cnt_[d];
      }
      const double remaining = n_ - lag_cnt_[d] + kPruneSlack;
      if (std::norm(lag_sum_[d]) > remaining * remaining) ok = false;
    }
    if (!ok) ++pruned_;
    return ok;
  }

  void unassign(int pos, int v) {
    assigned_[pos] = 0;
    for (int d = 1; d < n_; ++d) {
      const int prev = pos - d >= 0 ? pos - d : pos - d + n_;
      if (assigned_[prev] && prev != pos) {
        int t = v - e_[prev];
        if (t < 0) t += l_;
        lag_sum_[d] -= roots_[t];
        --lag_cnt_[d];
      }
      const int next = pos + d < n_ ? pos + d : pos + d - n_;
      if (assigned_[next] && next != pos) {
        int t = e_[next] - v;
        if (t < 0) t += l_;
        lag_sum_[d] -= roots_[t];
        --lag_cnt_[d];
      }
    }
  }

  // Prefix-minimality under rotation with rebasing: prune when some shifted
  // candidate e[(k+s) mod n] - e[s] is lexicographically smaller on the
  // comparable prefix. The lexicographic minimum of every orbit survives.
  bool rotation_prune(int k) {
    if (cmp_[k] == kUnstarted) cmp_[k] = 1;  // e'_k[0] == 0 == e[0]
    for (int s = 1; s <= k; ++s) {
      int j = cmp_[s];
      if (j == kDead) continue;
      while (j < n_) {
        const int src = (j + s) % n_;
        if (!assigned_[src] || !assigned_[j]) break;
        int cand = e_[src] - e_[s];
        if (cand < 0) cand += l_;
        if (cand < e_[j]) return false;
        if (cand > e_[j]) {
          j = kDead;
          break;
        }
        ++j;
      }
      cmp_[s] = j == n_ ? kDead : j;  // full equality: periodic, no pruning
    }
    return true;
  }

  void leaf() {
    // exact verification of every lag's vanishing sum
    for (int d = 1; d <= n_ / 2; ++d) {
      std::fill(counts_.begin(), counts_.end(), 0);
      for (int k = 0; k < n_; ++k) {
        int t = e_[(k + d) % n_] - e_[k];
        if (t < 0) t += l_;
        ++counts_[t];
      }
      if (!table_.is_zero(counts_)) return;
    }
    found_.push_back(group_canonical(ExponentRow(n_, l_, e_), group_).e);
  }

  int n_, l_;
  bool hermitian_;
  EquivalenceGroup group_;
  const ZeroSumTable& table_;
  std::uint64_t budget_;
  std::atomic<std::uint64_t>& global_nodes_;
  std::atomic<bool>& abort_flag_;

  std::vector<Slot> slots_;
  std::vector<std::complex<double>> roots_;
  std::vector<int> e_;
  std::vector<char> assigned_;
  std::vector<std::complex<double>> lag_sum_;
  std::vector<int> lag_cnt_;
  std::vector<std::int64_t> counts_;
  std::vector<int> cmp_;
  std::vector<std::vector<int>> cmp_stack_;

  int first_offset_ = 0;
  int first_stride_ = 1;
  std::uint64_t nodes_ = 0;
  std::uint64_t pruned_ = 0;
  std::uint64_t local_nodes_pending_ = 0;
  bool aborted_ = false;
  std::vector<std::vector<int>> found_;
};

SearchReport run_search(int n, int l, bool hermitian, const SearchConfig& config) {
  if (n < 2 || l < 2) throw std::invalid_argument("classify: need n >= 2 and l >= 2");
  if (config.worker_count < 1) throw std::invalid_argument("classify: worker_count >= 1");

  const auto start = std::chrono::steady_clock::now();
  ZeroSumTable table(l);
  std::atomic<std::uint64_t> global_nodes{0};
  std::atomic<bool> abort_flag{false};

  const int workers = std::max(1, std::min(config.worker_count, l));
  std::vector<std::unique_ptr<Walker>> walkers;
  walkers.reserve(workers);
  for (int w = 0; w < workers; ++w)
    walkers.push_back(std::make_unique<Walker>(n, l, hermitian, config.equivalence_group, table,
                                               config.node_budget, global_nodes, abort_flag));

  if (workers == 1) {
    walkers[0]->run(0, 1);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (int w = 0; w < workers; ++w)
      threads.emplace_back([&, w] { walkers[w]->run(w, workers); });
    for (auto& t : threads) t.join();
  }

  bool aborted = false;
  SearchReport report;
  report.n = n;
  report.l = l;
  report.hermitian_only = hermitian;
  report.group = config.equivalence_group;
  std::set<std::vector<int>> canon;
  for (auto& w : walkers) {
    aborted = aborted || w->aborted();
    report.nodes_visited += w->nodes();
    report.pruned += w->pruned();
    for (auto& row : w->found()) canon.insert(std::move(row));
  }
  if (aborted)
    throw BudgetExceededError("classify: node budget exceeded at (" + std::to_string(n) + "," +
                              std::to_string(l) + ")");

  report.class_count = static_cast<long>(canon.size());
  for (const auto& row : canon) report.representatives.emplace_back(n, l, row);
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace

SearchReport classify_cell(int n, int l, const SearchConfig& config) {
  return run_search(n, l, false, config);
}

SearchReport classify_hermitian(int n, int l, const SearchConfig& config) {
  return run_search(n, l, true, config);
}

PrimeUniquenessReport prime_uniqueness_audit(int p, const SearchConfig& config) {
  if (!is_prime(p) || p < 3 || p > 13)
    throw std::invalid_argument("prime_uniqueness_audit: p must be an odd prime <= 13");

  PrimeUniquenessReport report;
  report.p = p;

  std::vector<ExponentRow> reps;
  if (p <= 7) {
    SearchReport search = classify_cell(p, p, config);
    reps = std::move(search.representatives);
  } else {
    // planar shortcut: quadratic rows are the only Hadamard rows
    std::set<std::vector<int>> canon;
    for (int a = 1; a < p; ++a)
      for (int b = 0; b < p; ++b)
        for (int c = 0; c < p; ++c)
          canon.insert(
              group_canonical(quadratic_row({p, a, b, c}), config.equivalence_group).e);
    for (const auto& row : canon) reps.emplace_back(p, p, row);
  }
  report.circulant_class_count = static_cast<long>(reps.size());

  report.all_quadratic = !reps.empty();
  report.all_reduce_to_fourier = !reps.empty();
  for (const auto& rep : reps) {
    // gauge sweep: some rotation+constant of the representative fits a quadratic
    std::optional<ExponentRow> quadratic_gauge;
    for (int s = 0; s < p && !quadratic_gauge; ++s) {
      for (int c = 0; c < p && !quadratic_gauge; ++c) {
        std::vector<int> u(p);
        for (int k = 0; k < p; ++k) u[k] = (rep.e[(k + s) % p] + c) % p;
        if (fit_quadratic(PlanarFunction{p, u})) quadratic_gauge = ExponentRow(p, p, u);
      }
    }
    if (!quadratic_gauge) {
      report.all_quadratic = false;
      report.all_reduce_to_fourier = false;
      continue;
    }
    if (!reduce_to_fourier(*quadratic_gauge).matches_fourier)
      report.all_reduce_to_fourier = false;
  }
  report.fourier_class_count = report.all_reduce_to_fourier && !reps.empty() ? 1 : -1;
  report.unique = report.all_reduce_to_fourier && !reps.empty();
  return report;
}

TableSweep sweep_table(int n_max, int l_max, const SearchConfig& config, double max_volume) {
  TableSweep sweep;
  sweep.n_max = n_max;
  sweep.l_max = l_max;
  for (int n = 2; n <= n_max; ++n) {
    for (int l = 2; l <= l_max; ++l) {
      TableCell cell;
      cell.n = n;
      cell.l = l;
      cell.obstruction = check_obstructions(n, l);
      if (!cell.obstruction.obstructed()) {
        const double volume = std::pow(static_cast<double>(l), n - 1);
        if (volume <= max_volume) {
          cell.class_count = classify_cell(n, l, config).class_count;
        } else {
          cell.over_budget = true;
        }
      }
      sweep.cells.push_back(cell);
    }
  }
  return sweep;
}

std::string render_table(const TableSweep& sweep) {
  auto symbol = [](const TableCell& cell) -> std::string {
    if (cell.obstruction.obstructed()) {
      switch (cell.obstruction.reason) {
        case Obstruction::LamLeung: return "x";
        case Obstruction::Sylvester: return "x_s";
        case Obstruction::SylvesterPrime:
        case Obstruction::SylvesterDoublePrime:
        case Obstruction::PQTheorem: return "x_pq";
        case Obstruction::Haagerup5: return "x_h";
        default: return "x";
      }
    }
    if (cell.over_budget) return ".";
    return std::to_string(*cell.class_count);
  };

  const int cols = sweep.l_max - 1;
  std::size_t width = 3;
  for (const auto& cell : sweep.cells) width = std::max(width, symbol(cell).size());

  std::string out = "n\\l";
  auto pad = [&](std::string s) {
    while (s.size() < width + 1) s.insert(s.begin(), ' ');
    return s;
  };
  for (int l = 2; l <= sweep.l_max; ++l) out += pad(std::to_string(l));
  out += '\n';
  for (int n = 2; n <= sweep.n_max; ++n) {
    out += std::to_string(n);
    if (n < 10) out += "  ";
    else out += " ";
    for (int l = 2; l <= sweep.l_max; ++l)
      out += pad(symbol(sweep.cells[static_cast<std::size_t>(n - 2) * cols + (l - 2)]));
    out += '\n';
  }
  return out;
}

}  // namespace circbut

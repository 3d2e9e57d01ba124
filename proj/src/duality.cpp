#include "circbut/duality.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace circbut {

namespace {

constexpr double kTol = 1e-9;

std::complex<double> unit(double turns) {
  const double angle = 2.0 * std::numbers::pi * turns;
  return {std::cos(angle), std::sin(angle)};
}

ComplexRow fourier_apply(const ComplexRow& x, int sign) {
  const int n = x.n;
  ComplexRow y;
  y.n = n;
  y.values.resize(n);
  const double norm = 1.0 / std::sqrt(static_cast<double>(n));
  for (int j = 0; j < n; ++j) {
    std::complex<double> sum = 0.0;
    for (int k = 0; k < n; ++k)
      sum += x.values[k] * unit(static_cast<double>(sign) * j * k / n);
    y.values[j] = sum * norm;
  }
  return y;
}

bool nearly_real(std::complex<double> v) { return std::abs(v.imag()) < kTol; }

}  // namespace

ComplexRow complex_row(const ExponentRow& row) { return ComplexRow(to_complex_row(row)); }

ComplexRow dual(const ComplexRow& x) { return fourier_apply(x, +1); }

ComplexRow dual_inverse(const ComplexRow& y) { return fourier_apply(y, -1); }

DualVerdicts dual_matrix(const ExponentRow& row) {
  DualVerdicts out;
  out.dual_row = dual(complex_row(row));
  const int n = out.dual_row.n;
  out.unimodular = true;
  out.hermitian_symmetric = true;
  for (int k = 0; k < n; ++k) {
    if (std::abs(std::abs(out.dual_row.values[k]) - 1.0) > kTol) out.unimodular = false;
    const auto mirrored = std::conj(out.dual_row.values[(n - k) % n]);
    if (std::abs(mirrored - out.dual_row.values[k]) > kTol) out.hermitian_symmetric = false;
  }
  return out;
}

std::vector<SetPartition> set_partitions(int p) {
  std::vector<SetPartition> out;
  if (p == 0) return out;
  // restricted growth strings: rgs[0] = 0, rgs[i] <= 1 + max(rgs[0..i-1])
  std::vector<int> rgs(p, 0);
  while (true) {
    SetPartition part;
    part.p = p;
    int blocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
    part.blocks.assign(blocks, {});
    for (int i = 0; i < p; ++i) part.blocks[rgs[i]].push_back(i);
    out.push_back(std::move(part));

    int i = p - 1;
    while (i > 0) {
      int prefix_max = 0;
      for (int j = 0; j < i; ++j) prefix_max = std::max(prefix_max, rgs[j]);
      if (rgs[i] <= prefix_max) break;
      --i;
    }
    if (i == 0) break;
    ++rgs[i];
    std::fill(rgs.begin() + i + 1, rgs.end(), 0);
  }
  return out;
}

std::complex<double> f_pi(const ComplexRow& x, const SetPartition& pi) {
  const int n = x.n;
  const int blocks = pi.block_count();
  // independent index per block; each block of size m contributes x_j^m
  std::vector<int> idx(blocks, 0);
  std::complex<double> total = 0.0;
  while (true) {
    std::complex<double> term = 1.0;
    for (int b = 0; b < blocks; ++b) {
      std::complex<double> pw = 1.0;
      for (std::size_t r = 0; r < pi.blocks[b].size(); ++r) pw *= x.values[idx[b]];
      term *= pw;
    }
    total += term;
    int b = blocks - 1;
    while (b >= 0 && idx[b] == n - 1) idx[b--] = 0;
    if (b < 0) break;
    ++idx[b];
  }
  return total;
}

namespace {

// sum over i_1..i_m with i_1+...+i_m = 0 mod n of x_{i_1}...x_{i_m}
std::complex<double> zero_sum_block(const ComplexRow& x, int m) {
  const int n = x.n;
  // DP over partial sums: cost O(m n^2)
  std::vector<std::complex<double>> dist(n, 0.0);
  dist[0] = 1.0;
  for (int step = 0; step < m; ++step) {
    std::vector<std::complex<double>> next(n, 0.0);
    for (int s = 0; s < n; ++s) {
      if (dist[s] == 0.0) continue;
      for (int i = 0; i < n; ++i) next[(s + i) % n] += dist[s] * x.values[i];
    }
    dist.swap(next);
  }
  return dist[0];
}

}  // namespace

std::complex<double> g_pi(const ComplexRow& x, const SetPartition& pi) {
  std::complex<double> total = 1.0;
  for (const auto& block : pi.blocks)
    total *= zero_sum_block(x, static_cast<int>(block.size()));
  return total;
}

std::map<int, bool> x_set_membership(const ExponentRow& row, const std::vector<int>& ps) {
  if (!is_hadamard(row))
    throw std::invalid_argument("x_set_membership: row must be Hadamard");
  const ComplexRow x = complex_row(row);
  std::map<int, bool> out;
  for (int p : ps) {
    if (p < 1 || p > 5) throw std::invalid_argument("x_set_membership: p must be in 1..5");
    bool member = true;
    for (const auto& pi : set_partitions(p)) {
      if (!nearly_real(f_pi(x, pi)) || !nearly_real(g_pi(x, pi))) {
        member = false;
        break;
      }
    }
    out[p] = member;
  }
  return out;
}

X2Report x2_conditions(const ComplexRow& x) {
  const int n = x.n;
  X2Report r;
  std::complex<double> total = 0.0;
  for (const auto& v : x.values) total += v;
  r.pair_sum = total * total;
  r.zero_sum_pairs = 0.0;
  for (int i = 0; i < n; ++i) r.zero_sum_pairs += x.values[i] * x.values[(n - i) % n];
  r.square_sum = 0.0;
  for (const auto& v : x.values) r.square_sum += v * v;
  r.first_square = x.values[0] * x.values[0];
  r.pair_sum_real = nearly_real(r.pair_sum);
  r.zero_sum_pairs_real = nearly_real(r.zero_sum_pairs);
  r.square_sum_real = nearly_real(r.square_sum);
  r.first_square_real = nearly_real(r.first_square);
  return r;
}

}  // namespace circbut

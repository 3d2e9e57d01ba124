#include "circbut/circulant.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numbers>
#include <numeric>

namespace circbut {

namespace {

constexpr double kNumericTol = 1e-9;

std::complex<double> unit_root(int l, int t) {
  const double angle = 2.0 * std::numbers::pi * t / l;
  return {std::cos(angle), std::sin(angle)};
}

}  // namespace

ExponentRow::ExponentRow(int order, int root_order, std::vector<int> exps)
    : n(order), l(root_order), e(std::move(exps)) {
  if (n < 1) throw std::invalid_argument("ExponentRow: order must be >= 1");
  if (l < 1) throw std::invalid_argument("ExponentRow: root order must be >= 1");
  if (static_cast<int>(e.size()) != n)
    throw std::invalid_argument("ExponentRow: expected n exponents");
  for (int v : e)
    if (v < 0 || v >= l) throw std::invalid_argument("ExponentRow: exponent out of range");
}

std::vector<std::complex<double>> to_complex_row(const ExponentRow& row) {
  std::vector<std::complex<double>> out(row.n);
  for (int k = 0; k < row.n; ++k) out[k] = unit_root(row.l, row.e[k]);
  return out;
}

std::vector<std::vector<std::complex<double>>> to_complex_matrix(const ExponentRow& row) {
  std::vector<std::vector<std::complex<double>>> H(row.n,
                                                   std::vector<std::complex<double>>(row.n));
  for (int i = 0; i < row.n; ++i)
    for (int j = 0; j < row.n; ++j) H[i][j] = unit_root(row.l, row.e[((j - i) % row.n + row.n) % row.n]);
  return H;
}

bool is_hadamard(const ExponentRow& row, const ZeroSumTable& table) {
  assert(table.modulus() == row.l);
  const int n = row.n;
  const int l = row.l;
  std::vector<std::int64_t> counts(l);
  for (int d = 1; d <= n / 2; ++d) {
    std::fill(counts.begin(), counts.end(), 0);
    for (int k = 0; k < n; ++k) {
      int t = row.e[(k + d) % n] - row.e[k];
      if (t < 0) t += l;
      ++counts[t];
    }
    if (!table.is_zero(counts)) return false;
  }
  return true;
}

bool is_hadamard(const ExponentRow& row) {
  ZeroSumTable table(row.l);
  return is_hadamard(row, table);
}

CyclicRoot CyclicRoot::from_exponents(int l, std::vector<int> exps) {
  CyclicRoot z;
  z.n = static_cast<int>(exps.size());
  z.exact = true;
  z.l = l;
  z.exponents = std::move(exps);
  return z;
}

CyclicRoot CyclicRoot::from_values(std::vector<std::complex<double>> vals) {
  CyclicRoot z;
  z.n = static_cast<int>(vals.size());
  z.exact = false;
  for (const auto& v : vals)
    if (std::abs(std::abs(v) - 1.0) > 1e-12)
      throw std::invalid_argument("CyclicRoot: numeric entries must be unimodular");
  z.values = std::move(vals);
  return z;
}

CyclicRoot row_to_cyclic_root(const ExponentRow& row) {
  std::vector<int> z(row.n);
  for (int i = 0; i < row.n; ++i) {
    int d = row.e[i] - row.e[(i - 1 + row.n) % row.n];
    if (d < 0) d += row.l;
    z[i] = d;
  }
  return CyclicRoot::from_exponents(row.l, std::move(z));
}

ExponentRow cyclic_root_to_row(const CyclicRoot& z) {
  if (!z.exact) throw std::invalid_argument("cyclic_root_to_row: exact kind required");
  std::vector<int> e(z.n);
  int acc = 0;
  e[0] = 0;
  for (int k = 1; k < z.n; ++k) {
    acc = (acc + z.exponents[k]) % z.l;
    e[k] = acc;
  }
  return ExponentRow(z.n, z.l, std::move(e));
}

bool verify_cyclic_root(const CyclicRoot& z) {
  const int n = z.n;
  if (n < 1) return false;
  if (z.exact) {
    ZeroSumTable table(z.l);
    std::vector<std::int64_t> counts(z.l);
    // prefix sums of exponents for windows of consecutive entries
    for (int len = 1; len < n; ++len) {
      std::fill(counts.begin(), counts.end(), 0);
      for (int i = 0; i < n; ++i) {
        int s = 0;
        for (int j = 0; j < len; ++j) s += z.exponents[(i + j) % n];
        ++counts[s % z.l];
      }
      if (!table.is_zero(counts)) return false;
    }
    int total = std::accumulate(z.exponents.begin(), z.exponents.end(), 0);
    return total % z.l == 0;
  }
  for (int len = 1; len < n; ++len) {
    std::complex<double> sum = 0.0;
    for (int i = 0; i < n; ++i) {
      std::complex<double> prod = 1.0;
      for (int j = 0; j < len; ++j) prod *= z.values[(i + j) % n];
      sum += prod;
    }
    if (std::abs(sum) > kNumericTol) return false;
  }
  std::complex<double> prod = 1.0;
  for (const auto& v : z.values) prod *= v;
  return std::abs(prod - 1.0) <= kNumericTol;
}

std::vector<std::vector<int>> dephase(const ExponentRow& row) {
  const int n = row.n;
  const int l = row.l;
  auto at = [&](int i, int j) { return row.e[((j - i) % n + n) % n]; };
  std::vector<std::vector<int>> out(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int v = (at(i, j) - at(0, j) - at(i, 0) + at(0, 0)) % l;
      out[i][j] = (v + l) % l;
    }
  return out;
}

bool is_hermitian(const ExponentRow& row) {
  for (int k = 0; k < row.n; ++k) {
    const int lhs = row.e[(row.n - k) % row.n];
    const int rhs = (row.l - row.e[k]) % row.l;
    if (lhs != rhs) return false;
  }
  return true;
}

CanonicalClass canonicalize(const ExponentRow& row) {
  const int n = row.n;
  const int l = row.l;
  std::vector<std::vector<int>> seen;
  seen.reserve(static_cast<std::size_t>(n) * l);
  std::vector<int> best;
  std::vector<int> cur(n);
  for (int s = 0; s < n; ++s) {
    for (int c = 0; c < l; ++c) {
      for (int k = 0; k < n; ++k) cur[k] = (row.e[(k + s) % n] + c) % l;
      if (best.empty() || cur < best) best = cur;
      seen.push_back(cur);
    }
  }
  std::sort(seen.begin(), seen.end());
  seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
  CanonicalClass out;
  out.representative = ExponentRow(n, l, best);
  out.orbit_size = static_cast<int>(seen.size());
  return out;
}

ExponentRow reduce_root_order(const ExponentRow& row) {
  int g = row.l;
  for (int v : row.e) g = std::gcd(g, v);
  if (g <= 1) return row;
  std::vector<int> e(row.n);
  for (int k = 0; k < row.n; ++k) e[k] = row.e[k] / g;
  return ExponentRow(row.n, row.l / g, std::move(e));
}

}  // namespace circbut

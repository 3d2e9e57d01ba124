#include "circbut/constructions.hpp"

#include <algorithm>
#include <cassert>

#include "circbut/obstructions.hpp"

namespace circbut {

ExponentRow fourier_circulant(int n) {
  if (n < 2) throw std::invalid_argument("fourier_circulant: n must be >= 2");
  if (n % 2 == 1) {
    // xi_k = z_1...z_k with z_j = w^j: exponent k(k+1)/2 mod n
    std::vector<int> e(n);
    for (int k = 0; k < n; ++k) e[k] = (k * (k + 1) / 2) % n;
    return ExponentRow(n, n, std::move(e));
  }
  // z_j = rho^{2j+1}, rho = exp(pi*i/n): exponent sum k(k+2) mod 2n
  const int l = 2 * n;
  std::vector<int> e(n);
  for (int k = 0; k < n; ++k) e[k] = (k * (k + 2)) % l;
  return ExponentRow(n, l, std::move(e));
}

ExponentRow backelin_circulant(const BackelinParams& params) {
  const int n = params.n;
  const int m = params.m;
  if (m < 1 || n < 1 || n % m != 0)
    throw InvalidParamsError("backelin_circulant: m must divide n");
  const int order = m * n;
  const int l = 2 * order;
  const int c = params.parity();
  // z-exponent of position k = m*i + a over l = 2mn: c + 2m*i
  std::vector<int> e(order);
  int acc = 0;
  for (int k = 1; k < order; ++k) {
    acc = (acc + c + 2 * m * (k / m)) % l;
    e[k] = acc;
  }
  const bool all_even = std::all_of(e.begin(), e.end(), [](int v) { return v % 2 == 0; });
  if (all_even) {
    for (int& v : e) v /= 2;
    return ExponentRow(order, order, std::move(e));
  }
  return ExponentRow(order, l, std::move(e));
}

ExponentRow quadratic_row(const QuadraticCoeffs& coeffs) {
  const int p = coeffs.p;
  if (!is_prime(p)) throw std::invalid_argument("quadratic_row: p must be prime");
  if (coeffs.a % p == 0) throw std::invalid_argument("quadratic_row: a must be nonzero mod p");
  std::vector<int> e(p);
  for (int j = 0; j < p; ++j) {
    long v = (static_cast<long>(coeffs.a) * j * j + static_cast<long>(coeffs.b) * j + coeffs.c) % p;
    e[j] = static_cast<int>((v + p) % p);
  }
  return ExponentRow(p, p, std::move(e));
}

FourierReduction reduce_to_fourier(const ExponentRow& row) {
  const int p = row.n;
  if (row.l != p || !is_prime(p) || p < 3)
    throw std::invalid_argument("reduce_to_fourier: need n = l = p, p an odd prime");

  PlanarFunction u{p, row.e};
  auto coeffs = fit_quadratic(u);
  if (!coeffs) throw NotQuadraticError("first row is not a degree-2 polynomial");

  auto entry = [&](int i, int j) { return row.e[((j - i) % p + p) % p]; };
  FourierReduction red;
  red.coeffs = *coeffs;

  red.column_dephased.assign(p, std::vector<int>(p));
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j)
      red.column_dephased[i][j] = ((entry(i, j) - entry(0, j)) % p + p) % p;

  red.row_dephased.assign(p, std::vector<int>(p));
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j)
      red.row_dephased[i][j] =
          ((red.column_dephased[i][j] - red.column_dephased[i][0]) % p + p) % p;

  // send row i to row -2ai
  red.final_matrix.assign(p, std::vector<int>(p));
  for (int i = 0; i < p; ++i) {
    const int target = ((-2 * coeffs->a * i) % p + p) % p;
    red.final_matrix[target] = red.row_dephased[i];
  }

  red.matches_fourier = true;
  for (int i = 0; i < p && red.matches_fourier; ++i)
    for (int j = 0; j < p; ++j)
      if (red.final_matrix[i][j] != (i * j) % p) {
        red.matches_fourier = false;
        break;
      }
  return red;
}

}  // namespace circbut

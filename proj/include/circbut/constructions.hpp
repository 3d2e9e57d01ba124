#pragma once

#include <vector>

#include "circbut/circulant.hpp"

namespace circbut {

struct QuadraticCoeffs {
  int p = 0;  // prime
  int a = 0;  // nonzero
  int b = 0;
  int c = 0;

  friend bool operator==(const QuadraticCoeffs&, const QuadraticCoeffs&) = default;
};

struct BackelinParams {
  int n = 0;  // base order
  int m = 0;  // divisor of n
  int parity() const { return (m * (n - 1)) % 2; }
};

struct InvalidParamsError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotQuadraticError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Circulant form of the Fourier matrix F_n: cyclic root z_k = w^k for n odd
// (l = n), z_k = rho^{2k+1} with rho = exp(pi*i/n) for n even (l = 2n).
ExponentRow fourier_circulant(int n);

// Backelin's mn x mn circulant for m | n, built from the cyclic mn-root
// rho^c(1,..,1,w,..,w,...,w^{n-1},..,w^{n-1}) with m-fold groups,
// rho = exp(pi*i/mn), c = m(n-1) mod 2. Emitted over l = 2mn, halved once to
// l = mn when every exponent is even (c = 0).
ExponentRow backelin_circulant(const BackelinParams& params);

// n = l = p row e[j] = a j^2 + b j + c mod p; Hadamard for every a != 0.
ExponentRow quadratic_row(const QuadraticCoeffs& coeffs);

// The three-step constructive reduction of a quadratic circulant to F_p:
// column dephasing, row dephasing, then the row permutation i -> -2ai.
struct FourierReduction {
  QuadraticCoeffs coeffs;
  std::vector<std::vector<int>> column_dephased;  // m'_ij = a i^2 - 2a i j - b i
  std::vector<std::vector<int>> row_dephased;     // m''_ij = -2a i j
  std::vector<std::vector<int>> final_matrix;     // m'''_ij = i j
  bool matches_fourier = false;
};

// Throws NotQuadraticError when the first row is not a degree-2 polynomial.
FourierReduction reduce_to_fourier(const ExponentRow& row);

}  // namespace circbut

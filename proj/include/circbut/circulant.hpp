#pragma once

#include <complex>
#include <vector>

#include "circbut/cyclotomic.hpp"

namespace circbut {

// First row of a circulant Butson matrix H_ij = w^{e[(j-i) mod n]},
// w = exp(2*pi*i/l). Exponents live in Z/lZ.
struct ExponentRow {
  int n = 0;
  int l = 1;
  std::vector<int> e;

  ExponentRow() = default;
  ExponentRow(int order, int root_order, std::vector<int> exps);

  friend bool operator==(const ExponentRow&, const ExponentRow&) = default;
  friend auto operator<=>(const ExponentRow&, const ExponentRow&) = default;
};

// Full n x n complex matrix of the row.
std::vector<std::vector<std::complex<double>>> to_complex_matrix(const ExponentRow& row);
std::vector<std::complex<double>> to_complex_row(const ExponentRow& row);

// Pairwise row orthogonality via vanishing periodic autocorrelation at lags
// 1..floor(n/2); lags d and n-d carry conjugate sums.
bool is_hadamard(const ExponentRow& row);
bool is_hadamard(const ExponentRow& row, const ZeroSumTable& table);

// Consecutive-ratio vector z_i = xi_i / xi_{i-1} of Bjorck's parameterization.
struct CyclicRoot {
  int n = 0;
  bool exact = true;
  int l = 1;                                 // exact kind
  std::vector<int> exponents;                // exact kind
  std::vector<std::complex<double>> values;  // numeric kind

  static CyclicRoot from_exponents(int l, std::vector<int> exps);
  static CyclicRoot from_values(std::vector<std::complex<double>> vals);
};

CyclicRoot row_to_cyclic_root(const ExponentRow& row);

// Inverse with xi_0 = 1; exact kind only.
ExponentRow cyclic_root_to_row(const CyclicRoot& z);

// All n-1 vanishing equations plus total product = 1. Numeric tolerance 1e-9.
bool verify_cyclic_root(const CyclicRoot& z);

// Dephased full exponent matrix: first row and column zero, Hadamard-equivalent
// to the input (column then row dephasing).
std::vector<std::vector<int>> dephase(const ExponentRow& row);

// Entry-wise H = H*: e[(n-k) mod n] = -e[k] mod l for all k.
bool is_hermitian(const ExponentRow& row);

struct CanonicalClass {
  ExponentRow representative;
  int orbit_size = 0;  // distinct rows among the n*l rotate+constant transforms
};

// Lexicographic minimum over e -> rotate(e, s) + c, s in Z/nZ, c in Z/lZ.
CanonicalClass canonicalize(const ExponentRow& row);

// Same matrix over the smallest root order: divide l and all exponents by
// gcd(l, gcd of exponents).
ExponentRow reduce_root_order(const ExponentRow& row);

}  // namespace circbut

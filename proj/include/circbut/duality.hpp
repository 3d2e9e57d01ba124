#pragma once

#include <complex>
#include <map>
#include <vector>

#include "circbut/circulant.hpp"

namespace circbut {

struct ComplexRow {
  int n = 0;
  std::vector<std::complex<double>> values;

  ComplexRow() = default;
  explicit ComplexRow(std::vector<std::complex<double>> v)
      : n(static_cast<int>(v.size())), values(std::move(v)) {}
};

ComplexRow complex_row(const ExponentRow& row);

// y = F x with F_jk = exp(2*pi*i*j*k/n)/sqrt(n).
ComplexRow dual(const ComplexRow& x);
// x = F* y, inverse of dual.
ComplexRow dual_inverse(const ComplexRow& y);

struct DualVerdicts {
  ComplexRow dual_row;
  bool unimodular = false;          // all |y_k| = 1 within 1e-9
  bool hermitian_symmetric = false; // conj(y_{-k}) = y_k within 1e-9
};

DualVerdicts dual_matrix(const ExponentRow& row);

// Partition of {0,...,p-1} into disjoint nonempty blocks.
struct SetPartition {
  int p = 0;
  std::vector<std::vector<int>> blocks;
  int block_count() const { return static_cast<int>(blocks.size()); }
};

// All partitions of a p-element set, in restricted-growth-string order.
std::vector<SetPartition> set_partitions(int p);

// f_pi(x) = sum over multi-indices constant on blocks of x_{i_1}...x_{i_p}
std::complex<double> f_pi(const ComplexRow& x, const SetPartition& pi);
// g_pi(x) = sum over multi-indices whose block sums vanish mod n
std::complex<double> g_pi(const ComplexRow& x, const SetPartition& pi);

// X_p membership per p: all f_pi, g_pi real within 1e-9, over P(p).
std::map<int, bool> x_set_membership(const ExponentRow& row, const std::vector<int>& ps);

// The four X_2 conditions of the duality-stability statement, reported
// separately: sum_{ij} x_i x_j, sum_{i+j=0} x_i x_j, sum_i x_i^2, x_0^2.
struct X2Report {
  std::complex<double> pair_sum;
  std::complex<double> zero_sum_pairs;
  std::complex<double> square_sum;
  std::complex<double> first_square;
  bool pair_sum_real = false;
  bool zero_sum_pairs_real = false;
  bool square_sum_real = false;
  bool first_square_real = false;
  bool all_real() const {
    return pair_sum_real && zero_sum_pairs_real && square_sum_real && first_square_real;
  }
};

X2Report x2_conditions(const ComplexRow& x);

}  // namespace circbut

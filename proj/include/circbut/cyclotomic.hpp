#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace circbut {

// Integer combination of l-th roots of unity: sum_t coeffs[t] * w^t with
// w = exp(2*pi*i/l). coeffs always has exactly l entries.
struct CycPoly {
  int l = 1;
  std::vector<std::int64_t> coeffs;

  CycPoly() : coeffs(1, 0) {}
  CycPoly(int order, std::vector<std::int64_t> c);
  static CycPoly zero(int order) { return CycPoly(order, std::vector<std::int64_t>(order, 0)); }
  static CycPoly root_power(int order, int t);
};

CycPoly add(const CycPoly& a, const CycPoly& b);
CycPoly multiply(const CycPoly& a, const CycPoly& b);  // cyclic convolution mod x^l - 1

int euler_phi(int n);
bool is_prime(int n);
std::vector<int> distinct_prime_factors(int n);

// Monic integer coefficients of Phi_l, ascending degree; size euler_phi(l)+1.
std::vector<std::int64_t> cyclotomic_polynomial(int l);

// Exact test that sum_t coeffs[t] * w^t = 0, via remainder mod Phi_l.
bool is_zero_sum(const CycPoly& s);

// Precomputed residues x^t mod Phi_l for repeated zero-testing at fixed l.
class ZeroSumTable {
 public:
  explicit ZeroSumTable(int l);
  int modulus() const { return l_; }
  int degree() const { return deg_; }
  bool is_zero(std::span<const std::int64_t> counts) const;
  // residue row of x^t, length degree()
  std::span<const std::int64_t> residue(int t) const {
    return {residues_.data() + static_cast<std::size_t>(t) * deg_, static_cast<std::size_t>(deg_)};
  }

 private:
  int l_;
  int deg_;
  std::vector<std::int64_t> residues_;  // l rows of length deg_
};

struct NotVanishingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NoDecompositionError : std::logic_error {
  using std::logic_error::logic_error;
};

// Partition of a vanishing sum of p+q pq-th roots into a p-cycle, a q-cycle
// and a doubled value r: values at P are {r + q*k} \ {r}, values at Q are
// {r + p*k} \ {r}, both R indices carry r.
struct VanishingDecomposition {
  int p = 0;
  int q = 0;
  int r = 0;
  std::vector<int> P;  // p-1 indices
  std::vector<int> Q;  // q-1 indices
  std::vector<int> R;  // 2 indices
};

// values: p+q elements of Z/pqZ whose root-of-unity sum vanishes.
// Throws NotVanishingError if the sum is nonzero, NoDecompositionError if no
// (P,Q,R,r) fits (cannot happen on vanishing input).
VanishingDecomposition decompose_vanishing_sum(std::span<const int> values, int p, int q);

}  // namespace circbut

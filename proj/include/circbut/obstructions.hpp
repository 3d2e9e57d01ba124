#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "circbut/constructions.hpp"

namespace circbut {

enum class Obstruction {
  None,
  LamLeung,
  Sylvester,
  SylvesterPrime,
  SylvesterDoublePrime,
  Haagerup5,
  PQTheorem,
};

const char* obstruction_name(Obstruction o);

struct ObstructionVerdict {
  int n = 0;
  int l = 0;
  Obstruction reason = Obstruction::None;
  bool obstructed() const { return reason != Obstruction::None; }
};

// First applicable obstruction in the order: Lam-Leung, Sylvester,
// Sylvester', Sylvester'', Haagerup (n=5), then the p+q/pq theorem
// (p, q >= 5 distinct primes).
ObstructionVerdict check_obstructions(int n, int l);

struct PlanarFunction {
  int p = 0;
  std::vector<int> u;  // p values in Z/pZ
};

// Every nonzero-shift difference map k -> u(k+s) - u(k) is a bijection.
bool is_planar(const PlanarFunction& u);

// Degree-2 fit with a != 0, solved from u(0), u(1), u(2) and checked at all
// p points. Empty when no such fit exists.
std::optional<QuadraticCoeffs> fit_quadratic(const PlanarFunction& u);

struct PlanarAudit {
  int p = 0;
  long planar_count = 0;
  bool planar_iff_quadratic = false;
  bool planar_iff_hadamard = false;
};

// Sweeps all p^p functions: planar <=> quadratic <=> Hadamard row, and counts
// the planar ones (p^2 (p-1) expected).
PlanarAudit planar_theorem_audit(int p);

struct IntersectionBound {
  int n = 0;
  int a = 0;          // #A
  int b_all = 0;      // min over all shifts y of #(A cap (y+A))
  int b_nonzero = 0;  // min over y != 0
  bool literal_all = false;      // a >= b_all * sqrt(n)
  bool literal_nonzero = false;  // a >= b_nonzero * sqrt(n)
  bool squared_all = false;      // a^2 >= b_all * n  (min <= average form)
  bool squared_nonzero = false;  // a^2 >= b_nonzero * n
};

// Exact integer comparisons; A given as a subset of Z/nZ.
IntersectionBound intersection_bound_check(const std::vector<int>& A, int n);

// binom(2p-2, p-1)
std::uint64_t haagerup_count_bound(int p);

// |det H|^2 = n^n within relative error 1e-6, via complex LU. Requires a
// Hadamard row with n <= 8.
bool verify_determinant_identity(const ExponentRow& row);

}  // namespace circbut

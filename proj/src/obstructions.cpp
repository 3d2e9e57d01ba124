#include "circbut/obstructions.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <complex>
#include <numeric>

namespace circbut {

const char* obstruction_name(Obstruction o) {
  switch (o) {
    case Obstruction::None: return "NoKnownObstruction";
    case Obstruction::LamLeung: return "LamLeung";
    case Obstruction::Sylvester: return "Sylvester";
    case Obstruction::SylvesterPrime: return "SylvesterPrime";
    case Obstruction::SylvesterDoublePrime: return "SylvesterDoublePrime";
    case Obstruction::Haagerup5: return "Haagerup5";
    case Obstruction::PQTheorem: return "PQTheorem";
  }
  return "?";
}

namespace {

// n representable as a nonnegative integer combination of the given primes
bool representable(int n, const std::vector<int>& primes) {
  std::vector<char> can(n + 1, 0);
  can[0] = 1;
  for (int v = 1; v <= n; ++v)
    for (int p : primes)
      if (p <= v && can[v - p]) {
        can[v] = 1;
        break;
      }
  return can[n];
}

// l == 2 * p^b for some b >= 1
bool is_twice_prime_power(int l, int p) {
  if (l % 2 != 0) return false;
  int rest = l / 2;
  if (rest < p) return false;
  while (rest % p == 0) rest /= p;
  return rest == 1;
}

// l == 2^a * p^b with a >= 0, b >= 1
bool is_two_times_power_of(int l, int p) {
  while (l % 2 == 0) l /= 2;
  if (l < p) return false;
  while (l % p == 0) l /= p;
  return l == 1;
}

}  // namespace

ObstructionVerdict check_obstructions(int n, int l) {
  if (n < 2 || l < 2) throw std::invalid_argument("check_obstructions: need n, l >= 2");
  ObstructionVerdict v{n, l, Obstruction::None};

  const auto primes = distinct_prime_factors(l);
  if (!representable(n, primes)) {
    v.reason = Obstruction::LamLeung;
    return v;
  }
  if (l == 2 && n != 2 && n % 4 != 0) {
    v.reason = Obstruction::Sylvester;
    return v;
  }
  if (n >= 5 && is_prime(n - 2) && is_twice_prime_power(l, n - 2)) {
    v.reason = Obstruction::SylvesterPrime;
    return v;
  }
  if (n % 2 == 0 && is_prime(n / 2) && n / 2 >= 3) {
    const int q = n / 2;
    for (int p : distinct_prime_factors(l)) {
      if (p > q && p % 2 == 1 && is_two_times_power_of(l, p)) {
        v.reason = Obstruction::SylvesterDoublePrime;
        return v;
      }
    }
  }
  if (n == 5 && l % 5 != 0) {
    v.reason = Obstruction::Haagerup5;
    return v;
  }
  if (primes.size() == 2) {
    const int p = primes[0], q = primes[1];
    if (p >= 5 && q >= 5 && l == p * q && n == p + q) {
      v.reason = Obstruction::PQTheorem;
      return v;
    }
  }
  return v;
}

bool is_planar(const PlanarFunction& f) {
  const int p = f.p;
  std::vector<char> hit(p);
  for (int s = 1; s < p; ++s) {
    std::fill(hit.begin(), hit.end(), 0);
    for (int k = 0; k < p; ++k) {
      int d = (f.u[(k + s) % p] - f.u[k]) % p;
      if (d < 0) d += p;
      if (hit[d]) return false;
      hit[d] = 1;
    }
  }
  return true;
}

std::optional<QuadraticCoeffs> fit_quadratic(const PlanarFunction& f) {
  const int p = f.p;
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("fit_quadratic: need prime p >= 3");
  auto mod = [p](long v) { return static_cast<int>(((v % p) + p) % p); };
  // Lagrange through j = 0, 1, 2: a = (u2 - 2 u1 + u0) / 2, b = u1 - u0 - a
  const int inv2 = (p + 1) / 2;  // 2^{-1} mod p for odd p
  const int u0 = f.u[0], u1 = f.u[1], u2 = f.u[2];
  const int a = mod(static_cast<long>(u2 - 2 * u1 + u0) * inv2);
  const int b = mod(static_cast<long>(u1 - u0 - a));
  const int c = mod(u0);
  if (a == 0) return std::nullopt;
  for (int j = 0; j < p; ++j)
    if (mod(static_cast<long>(a) * j * j + static_cast<long>(b) * j + c) != f.u[j])
      return std::nullopt;
  return QuadraticCoeffs{p, a, b, c};
}

PlanarAudit planar_theorem_audit(int p) {
  if (!is_prime(p) || p < 3) throw std::invalid_argument("planar_theorem_audit: need prime p >= 3");
  PlanarAudit audit;
  audit.p = p;
  audit.planar_iff_quadratic = true;
  audit.planar_iff_hadamard = true;

  ZeroSumTable table(p);
  PlanarFunction f{p, std::vector<int>(p, 0)};
  // odometer over all p^p functions
  while (true) {
    const bool planar = is_planar(f);
    const bool quadratic = fit_quadratic(f).has_value();
    if (planar) ++audit.planar_count;
    if (planar != quadratic) audit.planar_iff_quadratic = false;
    const bool hadamard = is_hadamard(ExponentRow(p, p, f.u), table);
    if (planar != hadamard) audit.planar_iff_hadamard = false;

    int k = p - 1;
    while (k >= 0 && f.u[k] == p - 1) f.u[k--] = 0;
    if (k < 0) break;
    ++f.u[k];
  }
  return audit;
}

IntersectionBound intersection_bound_check(const std::vector<int>& A, int n) {
  if (n < 1) throw std::invalid_argument("intersection_bound_check: need n >= 1");
  if (A.empty()) throw std::invalid_argument("intersection_bound_check: A must be nonempty");
  std::vector<char> in(n, 0);
  for (int x : A) {
    const int v = ((x % n) + n) % n;
    if (in[v]) throw std::invalid_argument("intersection_bound_check: repeated element");
    in[v] = 1;
  }
  IntersectionBound out;
  out.n = n;
  out.a = static_cast<int>(A.size());
  out.b_all = n + 1;
  out.b_nonzero = n + 1;
  for (int y = 0; y < n; ++y) {
    int inter = 0;
    for (int x = 0; x < n; ++x)
      if (in[x] && in[(x - y + n) % n]) ++inter;  // x in A and x in y+A
    out.b_all = std::min(out.b_all, inter);
    if (y != 0) out.b_nonzero = std::min(out.b_nonzero, inter);
  }
  if (n == 1) out.b_nonzero = out.b_all;
  const auto sq = [](long v) { return v * v; };
  out.literal_all = sq(out.a) >= sq(out.b_all) * n;
  out.literal_nonzero = sq(out.a) >= sq(out.b_nonzero) * n;
  out.squared_all = sq(out.a) >= static_cast<long>(out.b_all) * n;
  out.squared_nonzero = sq(out.a) >= static_cast<long>(out.b_nonzero) * n;
  return out;
}

std::uint64_t haagerup_count_bound(int p) {
  if (!is_prime(p)) throw std::invalid_argument("haagerup_count_bound: p must be prime");
  // binom(2p-2, p-1)
  const int top = 2 * p - 2, k = p - 1;
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * static_cast<std::uint64_t>(top - k + i) / i;
  }
  return result;
}

bool verify_determinant_identity(const ExponentRow& row) {
  if (row.n > 8) throw std::invalid_argument("verify_determinant_identity: n <= 8 required");
  if (!is_hadamard(row)) throw std::invalid_argument("verify_determinant_identity: row is not Hadamard");
  auto H = to_complex_matrix(row);
  const int n = row.n;
  // LU with partial pivoting; |det| is all we need
  double log_abs_det = 0.0;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(H[r][col]) > std::abs(H[pivot][col])) pivot = r;
    std::swap(H[col], H[pivot]);
    if (std::abs(H[col][col]) == 0.0) return false;
    log_abs_det += std::log(std::abs(H[col][col]));
    for (int r = col + 1; r < n; ++r) {
      const std::complex<double> factor = H[r][col] / H[col][col];
      for (int c2 = col; c2 < n; ++c2) H[r][c2] -= factor * H[col][c2];
    }
  }
  const double log_expected = 0.5 * n * std::log(static_cast<double>(n));  // log n^{n/2}
  return std::abs(std::exp(2.0 * (log_abs_det - log_expected)) - 1.0) < 1e-6;
}

}  // namespace circbut

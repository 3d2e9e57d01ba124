#include "circbut/cyclotomic.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>

namespace circbut {

CycPoly::CycPoly(int order, std::vector<std::int64_t> c) : l(order), coeffs(std::move(c)) {
  if (l < 1) throw std::invalid_argument("CycPoly: order must be >= 1");
  if (static_cast<int>(coeffs.size()) != l)
    throw std::invalid_argument("CycPoly: coefficient vector must have exactly l entries");
}

CycPoly CycPoly::root_power(int order, int t) {
  CycPoly p = zero(order);
  t %= order;
  if (t < 0) t += order;
  p.coeffs[t] = 1;
  return p;
}

CycPoly add(const CycPoly& a, const CycPoly& b) {
  if (a.l != b.l) throw std::invalid_argument("CycPoly add: mismatched orders");
  CycPoly out = a;
  for (int t = 0; t < a.l; ++t) out.coeffs[t] += b.coeffs[t];
  return out;
}

CycPoly multiply(const CycPoly& a, const CycPoly& b) {
  if (a.l != b.l) throw std::invalid_argument("CycPoly multiply: mismatched orders");
  CycPoly out = CycPoly::zero(a.l);
  for (int s = 0; s < a.l; ++s) {
    if (a.coeffs[s] == 0) continue;
    for (int t = 0; t < a.l; ++t) {
      if (b.coeffs[t] == 0) continue;
      int u = s + t;
      if (u >= a.l) u -= a.l;
      out.coeffs[u] += a.coeffs[s] * b.coeffs[t];
    }
  }
  return out;
}

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<int> distinct_prime_factors(int n) {
  std::vector<int> out;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

namespace {

// Exact division of integer polynomials (ascending coefficients), den monic-led.
// Asserts zero remainder.
std::vector<std::int64_t> exact_polydiv(std::vector<std::int64_t> num,
                                        const std::vector<std::int64_t>& den) {
  const int dn = static_cast<int>(num.size()) - 1;
  const int dd = static_cast<int>(den.size()) - 1;
  assert(dn >= dd && den[dd] == 1);
  std::vector<std::int64_t> out(dn - dd + 1, 0);
  for (int i = dn - dd; i >= 0; --i) {
    const std::int64_t c = num[i + dd];
    out[i] = c;
    if (c == 0) continue;
    for (int j = 0; j <= dd; ++j) num[i + j] -= c * den[j];
  }
  assert(std::all_of(num.begin(), num.end(), [](std::int64_t v) { return v == 0; }) &&
         "cyclotomic division must be exact");
  return out;
}

}  // namespace

std::vector<std::int64_t> cyclotomic_polynomial(int l) {
  if (l < 1) throw std::invalid_argument("cyclotomic_polynomial: l must be >= 1");
  static std::map<int, std::vector<std::int64_t>> cache;
  auto it = cache.find(l);
  if (it != cache.end()) return it->second;

  std::vector<std::int64_t> poly(l + 1, 0);  // x^l - 1
  poly[0] = -1;
  poly[l] = 1;
  for (int d = 1; d < l; ++d) {
    if (l % d == 0) poly = exact_polydiv(std::move(poly), cyclotomic_polynomial(d));
  }
  assert(static_cast<int>(poly.size()) == euler_phi(l) + 1);
  cache[l] = poly;
  return poly;
}

ZeroSumTable::ZeroSumTable(int l) : l_(l), deg_(euler_phi(l)) {
  const auto phi = cyclotomic_polynomial(l);
  residues_.assign(static_cast<std::size_t>(l_) * deg_, 0);
  // x^t mod Phi_l, built by multiplying the previous residue by x.
  std::vector<std::int64_t> cur(deg_, 0);
  if (deg_ > 0) cur[0] = 1;
  for (int t = 0; t < l_; ++t) {
    std::copy(cur.begin(), cur.end(), residues_.begin() + static_cast<std::size_t>(t) * deg_);
    std::int64_t lead = deg_ > 0 ? cur[deg_ - 1] : 0;
    for (int i = deg_ - 1; i > 0; --i) cur[i] = cur[i - 1] - lead * phi[i];
    if (deg_ > 0) cur[0] = -lead * phi[0];
  }
}

bool ZeroSumTable::is_zero(std::span<const std::int64_t> counts) const {
  assert(static_cast<int>(counts.size()) == l_);
  std::vector<std::int64_t> acc(deg_, 0);
  for (int t = 0; t < l_; ++t) {
    const std::int64_t c = counts[t];
    if (c == 0) continue;
    const std::int64_t* row = residues_.data() + static_cast<std::size_t>(t) * deg_;
    for (int i = 0; i < deg_; ++i) acc[i] += c * row[i];
  }
  return std::all_of(acc.begin(), acc.end(), [](std::int64_t v) { return v == 0; });
}

bool is_zero_sum(const CycPoly& s) {
  ZeroSumTable table(s.l);
  return table.is_zero(s.coeffs);
}

VanishingDecomposition decompose_vanishing_sum(std::span<const int> values, int p, int q) {
  if (p == q) throw std::invalid_argument("decompose_vanishing_sum: p and q must be distinct");
  const int l = p * q;
  const int n = p + q;
  if (static_cast<int>(values.size()) != n)
    throw std::invalid_argument("decompose_vanishing_sum: expected p+q values");

  CycPoly sum = CycPoly::zero(l);
  for (int v : values) {
    int t = v % l;
    if (t < 0) t += l;
    ++sum.coeffs[t];
  }
  if (!is_zero_sum(sum)) throw NotVanishingError("sum of roots does not vanish");

  // Try every candidate r; the doubled value is unique, so at most one fits.
  std::vector<VanishingDecomposition> found;
  for (int r = 0; r < l; ++r) {
    // target multiset: r twice, p-cycle through r minus r, q-cycle through r minus r
    std::vector<std::int64_t> want(l, 0);
    want[r] += 2;
    for (int k = 1; k < p; ++k) ++want[(r + q * k) % l];
    for (int k = 1; k < q; ++k) ++want[(r + p * k) % l];
    if (!std::equal(want.begin(), want.end(), sum.coeffs.begin())) continue;

    VanishingDecomposition d;
    d.p = p;
    d.q = q;
    d.r = r;
    // p*(Z/pqZ) and q*(Z/pqZ) meet only at 0, so each index lands in exactly one part.
    for (int i = 0; i < n; ++i) {
      int v = values[i] % l;
      if (v < 0) v += l;
      const int diff = (v - r + l) % l;
      if (diff == 0) {
        d.R.push_back(i);
      } else if (diff % q == 0) {
        d.P.push_back(i);
      } else {
        assert(diff % p == 0);
        d.Q.push_back(i);
      }
    }
    assert(static_cast<int>(d.R.size()) == 2);
    assert(static_cast<int>(d.P.size()) == p - 1);
    assert(static_cast<int>(d.Q.size()) == q - 1);
    found.push_back(std::move(d));
  }
  if (found.empty())
    throw NoDecompositionError("vanishing sum admits no p-cycle/q-cycle partition");
  assert(found.size() == 1 && "doubled value must be unique");
  return found.front();
}

}  // namespace circbut

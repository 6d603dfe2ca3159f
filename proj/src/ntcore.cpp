#include "seqfam/ntcore.hpp"

#include <string>
#include <utility>

namespace seqfam {

namespace {

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m) noexcept {
  return static_cast<std::int64_t>(
      static_cast<unsigned __int128>(a) * static_cast<unsigned __int128>(b) % m);
}

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t m) noexcept {
  std::int64_t r = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) r = mul_mod(r, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return r;
}

// One Miller-Rabin round; n-1 = d * 2^s with d odd.
bool mr_witness(std::int64_t a, std::int64_t d, int s, std::int64_t n) noexcept {
  std::int64_t x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return false;
  for (int i = 1; i < s; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return false;
  }
  return true;  // composite witness found
}

}  // namespace

bool is_prime(std::int64_t n) noexcept {
  if (n < 2) return false;
  for (std::int64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  std::int64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This base set is a proven deterministic test for all n < 3.3e24,
  // far beyond the supported modulus range.
  for (std::int64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (mr_witness(a, d, s, n)) return false;
  }
  return true;
}

Prime::Prime(std::int64_t p) : p_(p) {
  if (p < 3 || p >= kMaxModulus || !is_prime(p)) {
    throw std::invalid_argument("Prime: " + std::to_string(p) +
                                " is not an odd prime in [3, 2^31)");
  }
}

Residue::Residue(std::int64_t value, Prime modulus) : modulus_(modulus) {
  value_ = value % modulus.value();
  if (value_ < 0) value_ += modulus.value();
}

int legendre_symbol(std::int64_t a, const Prime& p) noexcept {
  std::int64_t m = p.value();
  a %= m;
  if (a < 0) a += m;
  if (a == 0) return 0;
  // Binary quadratic-reciprocity reduction (Jacobi algorithm); for prime
  // modulus this is the Legendre symbol.
  int result = 1;
  std::int64_t n = a;
  while (n != 0) {
    while ((n & 1) == 0) {
      n >>= 1;
      std::int64_t r = m & 7;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(n, m);
    if ((n & 3) == 3 && (m & 3) == 3) result = -result;
    n %= m;
  }
  return result;
}

Residue find_quadratic_nonresidue(const Prime& p) noexcept {
  std::int64_t b = 2;
  while (legendre_symbol(b, p) != -1) ++b;
  return Residue(b, p);
}

}  // namespace seqfam

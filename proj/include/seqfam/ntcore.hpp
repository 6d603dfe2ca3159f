#ifndef SEQFAM_NTCORE_HPP
#define SEQFAM_NTCORE_HPP

#include <cstdint>
#include <stdexcept>

namespace seqfam {

// Largest supported modulus (exclusive). All intermediate products of two
// reduced residues then fit in a signed 64-bit integer, so every operation
// in this module is exact without multiprecision arithmetic.
inline constexpr std::int64_t kMaxModulus = std::int64_t{1} << 31;

/// Deterministic primality test, exact for all 0 <= n < 2^31.
bool is_prime(std::int64_t n) noexcept;

/// An odd prime in [3, 2^31). Construction validates; invalid values throw
/// std::invalid_argument.
class Prime {
 public:
  explicit Prime(std::int64_t p);

  std::int64_t value() const noexcept { return p_; }
  /// (p-1)/2, the half-range used by the Legendre family constructions.
  std::int64_t half() const noexcept { return (p_ - 1) / 2; }

  friend bool operator==(const Prime&, const Prime&) = default;

 private:
  std::int64_t p_;
};

/// A residue class mod p, stored reduced into [0, p-1].
class Residue {
 public:
  Residue(std::int64_t value, Prime modulus);

  std::int64_t value() const noexcept { return value_; }
  const Prime& modulus() const noexcept { return modulus_; }

 private:
  std::int64_t value_;
  Prime modulus_;
};

/// Legendre symbol (a/p): 0 if p | a, +1 if a is a nonzero square mod p,
/// -1 otherwise. Computed by quadratic-reciprocity reduction (the Euler
/// criterion is kept for the test oracle, so the two stay independent).
int legendre_symbol(std::int64_t a, const Prime& p) noexcept;

/// Smallest positive quadratic nonresidue mod p.
Residue find_quadratic_nonresidue(const Prime& p) noexcept;

}  // namespace seqfam

#endif  // SEQFAM_NTCORE_HPP

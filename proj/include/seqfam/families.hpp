#ifndef SEQFAM_FAMILIES_HPP
#define SEQFAM_FAMILIES_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "seqfam/ntcore.hpp"
#include "seqfam/sequence.hpp"

namespace seqfam {

/// Which index enumerates the members of the quadratic family. The two
/// orientations are each other's transpose, so both appear in any check of
/// the complexity/cross-correlation relationship.
enum class Orientation { kByOuterN, kByOuterI };

std::string to_string(Orientation o);
Orientation orientation_from_string(const std::string& s);

struct QuadraticFamilyParams {
  /// Validates p >= 11 and that b is a quadratic nonresidue mod p.
  QuadraticFamilyParams(Prime p, Residue b, Orientation orientation);

  Prime p;
  Residue b;
  Orientation orientation;
};

/// The quadratic Legendre family: F = N = (p-1)/2, entry formula
/// legendre(n^2 - b*i^2) with members enumerated by n (kByOuterN) or by i
/// (kByOuterI). Every entry is nonzero because b is a nonresidue; the
/// construction checks this and fails hard on a zero.
SequenceFamily build_quadratic_family(const QuadraticFamilyParams& params);

/// Transpose: member n of the result reads column n of the input.
SequenceFamily dual_family(const SequenceFamily& fam);

/// Flip the sign of every entry.
SequenceFamily negate_family(const SequenceFamily& fam);

/// A monic polynomial over F_p of degree 1..3.
class PolySpec {
 public:
  /// coeffs holds c_0..c_d with c_d the leading coefficient; coefficients
  /// are reduced mod p, the leading one must reduce to 1.
  PolySpec(Prime p, std::vector<std::int64_t> coeffs);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const Prime& modulus() const noexcept { return p_; }
  std::int64_t coeff(int k) const { return coeffs_[k]; }
  std::int64_t eval(std::int64_t x) const noexcept;

  PolySpec shifted(std::int64_t d) const;  // f(X + d)
  bool is_square_free() const;             // gcd(f, f') = 1
  bool has_root() const;                   // exhaustive scan; exact for d <= 3

  std::string to_string() const;  // e.g. "X^2+3X+1"
  friend bool operator==(const PolySpec&, const PolySpec&);

 private:
  Prime p_;
  std::vector<std::int64_t> coeffs_;  // c_0..c_d, c_d = 1
};

/// Member j has entries for n = 1..p: legendre(f_j(n)) when nonzero, +1 at
/// the roots of f_j. Length N = p.
SequenceFamily build_polynomial_family(const Prime& p, std::span<const PolySpec> polys);

/// All (p-1)/2 polynomials X^2 - a with a a quadratic nonresidue mod p,
/// in increasing order of a. Each is irreducible over F_p.
std::vector<PolySpec> enumerate_gms_quadratics(const Prime& p);

/// Monic square-free polynomials of degree <= max_degree (1..3), enumerated
/// by degree then lexicographically by coefficients (constant term varying
/// fastest... highest-order non-leading coefficient most significant),
/// truncated at `limit` entries.
std::vector<PolySpec> enumerate_squarefree_upto(const Prime& p, int max_degree,
                                                std::size_t limit);

}  // namespace seqfam

#endif  // SEQFAM_FAMILIES_HPP

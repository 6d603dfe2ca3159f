#ifndef SEQFAM_MEASURES_HPP
#define SEQFAM_MEASURES_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "seqfam/ntcore.hpp"
#include "seqfam/sequence.hpp"

namespace seqfam {

/// j positions (1-based, strictly increasing) with target signs: the object
/// a family member either matches at all positions or not.
struct SpecificationPattern {
  std::vector<int> positions;
  std::vector<int> signs;  // entries in {-1,+1}, same length as positions

  /// Throws std::invalid_argument unless well-formed for length N.
  void validate(std::size_t n) const;
};

/// Does the member carry the pattern's sign at every listed position?
bool pattern_matches(const BinarySequence& seq, const SpecificationPattern& pattern);

/// The configuration attaining a reported cross-correlation value:
/// members I (1-based), shifts D (nondecreasing), window length M, and the
/// signed window sum (the reported value is its absolute value).
struct CorrelationWitness {
  long window_length = 0;                // M
  std::vector<long> shifts;              // d_1 <= ... <= d_l
  std::vector<int> members;              // i_1..i_l, 1-based
  long signed_sum = 0;
};

/// Witness order used for all tie-breaking: lexicographic (I, D, M).
bool witness_precedes(const CorrelationWitness& a, const CorrelationWitness& b);

enum class OverflowAction { kReject, kProceedWithWarning };

struct SearchBudget {
  std::uint64_t max_evaluations = 1'000'000'000;
  OverflowAction on_overflow = OverflowAction::kReject;
};

struct BudgetError : std::runtime_error {
  BudgetError(std::uint64_t estimated_in, std::uint64_t limit_in)
      : std::runtime_error("estimated " + std::to_string(estimated_in) +
                           " evaluations exceed budget " + std::to_string(limit_in)),
        estimated(estimated_in),
        limit(limit_in) {}
  std::uint64_t estimated;
  std::uint64_t limit;
};

/// Pre-search cost estimate and the work actually performed; `warned` is set
/// when the estimate exceeded the budget under kProceedWithWarning.
struct BudgetOutcome {
  std::uint64_t estimated = 0;
  std::uint64_t performed = 0;
  std::uint64_t limit = 0;
  bool warned = false;
};

struct ComplexityResult {
  int value = 0;
  /// A size value+1 specification matched by no member; absent only when the
  /// search ran out of positions (value capped by N). Lexicographically
  /// first by (positions, then signs with +1 < -1).
  std::optional<SpecificationPattern> blocking_pattern;
  BudgetOutcome budget;
};

struct CorrelationResult {
  long value = 0;
  /// Absent only if no admissible configuration exists at this order.
  std::optional<CorrelationWitness> witness;
  BudgetOutcome budget;
};

/// Exact family complexity: the greatest j such that every specification of
/// size j is matched by some member. Levels j = 1.. are scanned in
/// lexicographic position order with a 2^j occupancy table per subset;
/// estimated cost is sum_j C(N,j)*F member projections.
ComplexityResult family_complexity(const SequenceFamily& fam,
                                   const SearchBudget& budget = {});

/// Exact cross-correlation measure of the given order: the maximum over
/// admissible (M, D, I) of |sum_{n=1..M} prod_a e_{i_a, n+d_a}|, where D is
/// nondecreasing, M + d_l <= N, and equal shifts are forbidden between
/// value-equal members. Only sorted (shift, member) multisets are scanned
/// (permuting the factors never changes the sum); ties are broken by the
/// lexicographically smallest (I, D, M). The search seeds a lower bound from
/// a small-shift probe, prunes every subtree whose window cannot reach the
/// incumbent, and scans windows via byte-wide popcount tables. Workers
/// partition the root pairs; the reduction (value desc, witness asc) makes
/// the result identical for every thread count.
CorrelationResult cross_correlation(const SequenceFamily& fam, int order,
                                    const SearchBudget& budget = {},
                                    unsigned threads = 1);

/// Correlation measure of a single sequence: cross_correlation of {seq},
/// where the equal-sequence rule forces strictly increasing shifts.
CorrelationResult auto_correlation(const BinarySequence& seq, int order,
                                   const SearchBudget& budget = {},
                                   unsigned threads = 1);

/// Scalar re-evaluation path, independent of the packed search: checks the
/// Definition-2 constraints for (members, shifts, M).
bool is_admissible_configuration(const SequenceFamily& fam, std::span<const int> members,
                                 std::span<const long> shifts, long window_length);

/// Signed window sum for an admissible configuration (throws on an
/// inadmissible one). Used for witness re-validation.
long evaluate_configuration(const SequenceFamily& fam, std::span<const int> members,
                            std::span<const long> shifts, long window_length);

struct TheoremBound {
  int raw = 0;      // ceil(log2 F - log2 max phi) - 1, may be negative
  int clamped = 0;  // max(0, raw)
};

/// Lower bound on C(F) from the dual family's cross-correlations
/// Phi_1..Phi_{floor(log2 F)}. Exact integer arithmetic: the ceiling is the
/// smallest t with maxphi * 2^t >= F. dual_phis must have exactly
/// floor(log2 F) entries, each >= 1.
TheoremBound theorem_lower_bound_detail(std::int64_t family_size,
                                        std::span<const long> dual_phis);
int theorem_lower_bound(std::int64_t family_size, std::span<const long> dual_phis);

/// Number of members matching the pattern at all its positions.
long count_matching_sequences(const SequenceFamily& fam,
                              const SpecificationPattern& pattern);

/// Sufficient condition for every size-j specification to be matched:
/// F > sum_{l=1..j} C(j,l) * Phi_l (dual-family cross-correlations).
bool specification_guaranteed(std::int64_t family_size, int j,
                              std::span<const long> phis);

/// sum_{i=0}^{p-1} legendre(n1^2 - b*i^2) * legendre(n2^2 - b*i^2), exact.
/// Equals p when n1 = n2; bounded by 3*sqrt(p) for distinct pairs.
std::int64_t complete_weil_sum(const Prime& p, const Residue& b, std::int64_t n1,
                               std::int64_t n2);

struct WeilRatioRow {
  int order = 0;
  long phi = 0;
  double ratio = 0.0;  // phi / (order * sqrt(p) * ln p)
};

/// Observational table of Phi_l against the l*sqrt(p)*log(p) envelope for
/// l = 1..max_order (natural log; no pass/fail attached).
std::vector<WeilRatioRow> weil_ratio_report(const SequenceFamily& fam, const Prime& p,
                                            int max_order,
                                            const SearchBudget& budget = {},
                                            unsigned threads = 1);

}  // namespace seqfam

#endif  // SEQFAM_MEASURES_HPP

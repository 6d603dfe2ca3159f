#ifndef SEQFAM_SEQUENCE_HPP
#define SEQFAM_SEQUENCE_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace seqfam {

/// A fixed-length sequence over {-1,+1}, packed 64 entries per word.
/// Entry k (0-based) lives in bit k%64 of word k/64, with +1 <-> bit 0 and
/// -1 <-> bit 1. With that layout the windowed product sum of two sequences
/// is  M - 2*popcount(xor of the aligned windows).
class BinarySequence {
 public:
  explicit BinarySequence(std::span<const int> values);

  /// Parse a string over {'+','-'}.
  static BinarySequence from_signs(const std::string& s);

  std::size_t length() const noexcept { return length_; }
  /// Entry at 0-based index, as +1 or -1.
  int entry(std::size_t idx) const noexcept {
    return (words_[idx >> 6] >> (idx & 63)) & 1 ? -1 : +1;
  }
  const std::vector<std::uint64_t>& words() const noexcept { return words_; }

  std::string to_signs() const;
  std::vector<int> to_values() const;

  friend bool operator==(const BinarySequence&, const BinarySequence&) = default;

 private:
  BinarySequence() = default;
  std::size_t length_ = 0;
  std::vector<std::uint64_t> words_;
};

/// sum_{n=0}^{M-1} a[n+da] * b[n+db], computed with the popcount identity.
long window_product_sum(const BinarySequence& a, std::size_t da,
                        const BinarySequence& b, std::size_t db, std::size_t M);

/// Copy the bits of `seq` starting at `shift` into `out` (zero padded above);
/// out must hold at least (seq.length()+63)/64 words.
void fetch_shifted_words(const BinarySequence& seq, std::size_t shift,
                         std::span<std::uint64_t> out) noexcept;

/// An ordered family of F sequences of common length N. Duplicate members
/// are allowed and meaningful.
class SequenceFamily {
 public:
  SequenceFamily(std::vector<BinarySequence> members, std::string label);

  std::size_t size() const noexcept { return members_.size(); }    // F
  std::size_t length() const noexcept { return length_; }          // N
  const BinarySequence& member(std::size_t idx) const { return members_[idx]; }
  const std::vector<BinarySequence>& members() const noexcept { return members_; }
  const std::string& label() const noexcept { return label_; }

  /// Partition members by value equality; returns one class id per member,
  /// ids assigned in order of first occurrence.
  std::vector<int> value_equality_classes() const;

  /// Member equality only; the label is provenance, not identity.
  friend bool operator==(const SequenceFamily& a, const SequenceFamily& b) {
    return a.members_ == b.members_;
  }

 private:
  std::vector<BinarySequence> members_;
  std::size_t length_;
  std::string label_;
};

struct FamilyParseError : std::runtime_error {
  FamilyParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_number(line) {}
  int line_number;
};

// Family file format, one family per file:
//   # seqfam v1 F=<F> N=<N> label=<label>
//   <one member per line over {+,-}>
void write_family_file(const SequenceFamily& fam, const std::filesystem::path& path);
SequenceFamily read_family_file(const std::filesystem::path& path);

}  // namespace seqfam

#endif  // SEQFAM_SEQUENCE_HPP

#include "seqfam/sequence.hpp"

#include <bit>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace seqfam {

namespace {

std::size_t word_count(std::size_t nbits) { return (nbits + 63) / 64; }

// Bits [shift, shift+64) of the padded word array.
std::uint64_t word_at_offset(std::span<const std::uint64_t> words, std::size_t shift,
                             std::size_t nbits) noexcept {
  std::size_t w = shift >> 6, r = shift & 63;
  std::uint64_t lo = w < words.size() ? words[w] >> r : 0;
  std::uint64_t hi = (r != 0 && w + 1 < words.size()) ? words[w + 1] << (64 - r) : 0;
  (void)nbits;
  return lo | hi;
}

}  // namespace

BinarySequence::BinarySequence(std::span<const int> values) {
  if (values.empty()) throw std::invalid_argument("BinarySequence: empty");
  length_ = values.size();
  words_.assign(word_count(length_), 0);
  for (std::size_t k = 0; k < length_; ++k) {
    if (values[k] == -1) {
      words_[k >> 6] |= std::uint64_t{1} << (k & 63);
    } else if (values[k] != 1) {
      throw std::invalid_argument("BinarySequence: entry " + std::to_string(k) +
                                  " is not +1 or -1");
    }
  }
}

BinarySequence BinarySequence::from_signs(const std::string& s) {
  std::vector<int> vals;
  vals.reserve(s.size());
  for (char c : s) {
    if (c == '+') vals.push_back(1);
    else if (c == '-') vals.push_back(-1);
    else throw std::invalid_argument(std::string("BinarySequence: bad symbol '") + c + "'");
  }
  return BinarySequence(vals);
}

std::string BinarySequence::to_signs() const {
  std::string s(length_, '+');
  for (std::size_t k = 0; k < length_; ++k)
    if (entry(k) == -1) s[k] = '-';
  return s;
}

std::vector<int> BinarySequence::to_values() const {
  std::vector<int> v(length_);
  for (std::size_t k = 0; k < length_; ++k) v[k] = entry(k);
  return v;
}

long window_product_sum(const BinarySequence& a, std::size_t da,
                        const BinarySequence& b, std::size_t db, std::size_t M) {
  if (M == 0 || da + M > a.length() || db + M > b.length())
    throw std::invalid_argument("window_product_sum: window out of range");
  long ones = 0;
  std::size_t done = 0;
  while (done < M) {
    std::uint64_t wa = word_at_offset(a.words(), da + done, a.length());
    std::uint64_t wb = word_at_offset(b.words(), db + done, b.length());
    std::uint64_t x = wa ^ wb;
    std::size_t take = std::min<std::size_t>(64, M - done);
    if (take < 64) x &= (std::uint64_t{1} << take) - 1;
    ones += std::popcount(x);
    done += take;
  }
  return static_cast<long>(M) - 2 * ones;
}

void fetch_shifted_words(const BinarySequence& seq, std::size_t shift,
                         std::span<std::uint64_t> out) noexcept {
  std::size_t nbits = seq.length() > shift ? seq.length() - shift : 0;
  std::size_t nw = word_count(seq.length());
  for (std::size_t w = 0; w < nw; ++w) {
    std::uint64_t v = w * 64 < nbits ? word_at_offset(seq.words(), shift + w * 64, seq.length()) : 0;
    std::size_t valid = nbits > w * 64 ? nbits - w * 64 : 0;
    if (valid < 64) v &= valid == 0 ? 0 : (std::uint64_t{1} << valid) - 1;
    out[w] = v;
  }
}

SequenceFamily::SequenceFamily(std::vector<BinarySequence> members, std::string label)
    : members_(std::move(members)), label_(std::move(label)) {
  if (members_.empty()) throw std::invalid_argument("SequenceFamily: no members");
  length_ = members_.front().length();
  for (const auto& m : members_)
    if (m.length() != length_)
      throw std::invalid_argument("SequenceFamily: members have unequal lengths");
}

std::vector<int> SequenceFamily::value_equality_classes() const {
  std::vector<int> cls(members_.size(), -1);
  std::unordered_map<std::string, int> seen;
  int next = 0;
  for (std::size_t k = 0; k < members_.size(); ++k) {
    auto [it, inserted] = seen.emplace(members_[k].to_signs(), next);
    if (inserted) ++next;
    cls[k] = it->second;
  }
  return cls;
}

void write_family_file(const SequenceFamily& fam, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << "# seqfam v1 F=" << fam.size() << " N=" << fam.length()
      << " label=" << fam.label() << "\n";
  for (std::size_t k = 0; k < fam.size(); ++k) out << fam.member(k).to_signs() << "\n";
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

SequenceFamily read_family_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::string header;
  if (!std::getline(in, header)) throw FamilyParseError(1, "missing header");

  std::size_t f = 0, n = 0;
  std::string label;
  {
    std::istringstream hs(header);
    std::string hash, magic, ver, tok;
    hs >> hash >> magic >> tok;
    if (hash != "#" || magic != "seqfam" || tok != "v1")
      throw FamilyParseError(1, "bad header, expected '# seqfam v1 ...'");
    hs >> tok;
    if (tok.rfind("F=", 0) != 0) throw FamilyParseError(1, "missing F= field");
    f = std::stoul(tok.substr(2));
    hs >> tok;
    if (tok.rfind("N=", 0) != 0) throw FamilyParseError(1, "missing N= field");
    n = std::stoul(tok.substr(2));
    // label= takes the rest of the line verbatim
    auto pos = header.find("label=");
    if (pos == std::string::npos) throw FamilyParseError(1, "missing label= field");
    label = header.substr(pos + 6);
  }
  if (f == 0 || n == 0) throw FamilyParseError(1, "F and N must be positive");

  std::vector<BinarySequence> members;
  members.reserve(f);
  std::string line;
  int lineno = 1;
  while (members.size() < f) {
    if (!std::getline(in, line)) throw FamilyParseError(lineno + 1, "unexpected end of file");
    ++lineno;
    if (line.size() != n)
      throw FamilyParseError(lineno, "expected " + std::to_string(n) + " symbols, got " +
                                         std::to_string(line.size()));
    try {
      members.push_back(BinarySequence::from_signs(line));
    } catch (const std::invalid_argument& e) {
      throw FamilyParseError(lineno, e.what());
    }
  }
  return SequenceFamily(std::move(members), std::move(label));
}

}  // namespace seqfam

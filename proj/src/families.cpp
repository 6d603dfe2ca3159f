#include "seqfam/families.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace seqfam {

namespace {

std::int64_t mod_reduce(std::int64_t v, std::int64_t p) {
  v %= p;
  return v < 0 ? v + p : v;
}

}  // namespace

std::string to_string(Orientation o) {
  return o == Orientation::kByOuterN ? "by-outer-n" : "by-outer-i";
}

Orientation orientation_from_string(const std::string& s) {
  if (s == "by-outer-n") return Orientation::kByOuterN;
  if (s == "by-outer-i") return Orientation::kByOuterI;
  throw std::invalid_argument("unknown orientation: " + s);
}

QuadraticFamilyParams::QuadraticFamilyParams(Prime p_in, Residue b_in, Orientation o)
    : p(p_in), b(b_in), orientation(o) {
  if (p.value() < 11)
    throw std::invalid_argument("quadratic family requires p >= 11");
  if (!(b.modulus() == p))
    throw std::invalid_argument("b is a residue mod a different prime");
  int sym = legendre_symbol(b.value(), p);
  if (sym != -1)
    throw std::invalid_argument("b = " + std::to_string(b.value()) +
                                " is a quadratic residue mod " + std::to_string(p.value()));
}

SequenceFamily build_quadratic_family(const QuadraticFamilyParams& params) {
  const std::int64_t p = params.p.value();
  const std::int64_t b = params.b.value();
  const std::int64_t h = params.p.half();
  std::vector<BinarySequence> members;
  members.reserve(h);
  std::vector<int> row(h);
  for (std::int64_t outer = 1; outer <= h; ++outer) {
    for (std::int64_t inner = 1; inner <= h; ++inner) {
      std::int64_t n = params.orientation == Orientation::kByOuterN ? outer : inner;
      std::int64_t i = params.orientation == Orientation::kByOuterN ? inner : outer;
      std::int64_t arg = mod_reduce(n * n - mod_reduce(b * ((i * i) % p), p), p);
      int sym = legendre_symbol(arg, params.p);
      if (sym == 0)
        throw std::logic_error("quadratic family: zero entry at n=" + std::to_string(n) +
                               " i=" + std::to_string(i) + " (b is not a nonresidue?)");
      row[inner - 1] = sym;
    }
    members.emplace_back(row);
  }
  std::ostringstream label;
  label << "quadratic p=" << p << " b=" << b
        << " orientation=" << to_string(params.orientation);
  return SequenceFamily(std::move(members), label.str());
}

SequenceFamily dual_family(const SequenceFamily& fam) {
  const std::size_t f = fam.size(), n = fam.length();
  std::vector<BinarySequence> members;
  members.reserve(n);
  std::vector<int> row(f);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < f; ++k) row[k] = fam.member(k).entry(j);
    members.emplace_back(row);
  }
  return SequenceFamily(std::move(members), "dual(" + fam.label() + ")");
}

SequenceFamily negate_family(const SequenceFamily& fam) {
  std::vector<BinarySequence> members;
  members.reserve(fam.size());
  for (std::size_t k = 0; k < fam.size(); ++k) {
    std::vector<int> row = fam.member(k).to_values();
    for (int& v : row) v = -v;
    members.emplace_back(row);
  }
  return SequenceFamily(std::move(members), "negate(" + fam.label() + ")");
}

PolySpec::PolySpec(Prime p, std::vector<std::int64_t> coeffs) : p_(p), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() < 2 || coeffs_.size() > 4)
    throw std::invalid_argument("PolySpec: degree must be 1..3");
  for (auto& c : coeffs_) c = mod_reduce(c, p_.value());
  if (coeffs_.back() != 1)
    throw std::invalid_argument("PolySpec: polynomial must be monic");
}

std::int64_t PolySpec::eval(std::int64_t x) const noexcept {
  const std::int64_t p = p_.value();
  x = mod_reduce(x, p);
  std::int64_t acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = (acc * x + *it) % p;
  return acc;
}

PolySpec PolySpec::shifted(std::int64_t d) const {
  const std::int64_t p = p_.value();
  d = mod_reduce(d, p);
  // Synthetic expansion of f(X + d), degree <= 3 so plain binomials suffice.
  std::vector<std::int64_t> out(coeffs_.size(), 0);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    // coeffs_[k] * (X + d)^k
    std::int64_t binom = 1, dpow = 1;
    for (std::size_t j = 0; j <= k; ++j) {
      // C(k, k-j) * d^j contributes to X^{k-j}
      out[k - j] = (out[k - j] + coeffs_[k] % p * (binom % p) % p * dpow) % p;
      binom = binom * (static_cast<std::int64_t>(k) - static_cast<std::int64_t>(j)) /
              (static_cast<std::int64_t>(j) + 1);
      dpow = dpow * d % p;
    }
  }
  return PolySpec(p_, std::move(out));
}

bool PolySpec::is_square_free() const {
  const std::int64_t p = p_.value();
  // gcd(f, f') over F_p[X]; degree <= 3 keeps this a short euclidean loop.
  std::vector<std::int64_t> a = coeffs_;
  std::vector<std::int64_t> b(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    b[k - 1] = coeffs_[k] * static_cast<std::int64_t>(k) % p;
  auto trim = [](std::vector<std::int64_t>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a mod b
    std::int64_t lead_inv = 1;
    {  // inverse of b's leading coefficient via Fermat
      std::int64_t base = b.back(), e = p - 2, r = 1;
      while (e) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
      }
      lead_inv = r;
    }
    while (a.size() >= b.size()) {
      std::int64_t q = a.back() * lead_inv % p;
      std::size_t off = a.size() - b.size();
      for (std::size_t k = 0; k < b.size(); ++k)
        a[off + k] = mod_reduce(a[off + k] - q * b[k] % p, p);
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a.size() == 1;  // gcd is a nonzero constant
}

bool PolySpec::has_root() const {
  for (std::int64_t x = 0; x < p_.value(); ++x)
    if (eval(x) == 0) return true;
  return false;
}

std::string PolySpec::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    std::int64_t c = coeffs_[k];
    if (c == 0 && k != degree()) continue;
    if (!first) out << "+";
    if (k == 0 || c != 1) out << c;
    if (k >= 1) out << "X";
    if (k >= 2) out << "^" << k;
    first = false;
  }
  return out.str();
}

bool operator==(const PolySpec& a, const PolySpec& b) {
  return a.p_ == b.p_ && a.coeffs_ == b.coeffs_;
}

SequenceFamily build_polynomial_family(const Prime& p, std::span<const PolySpec> polys) {
  if (polys.empty())
    throw std::invalid_argument("build_polynomial_family: empty polynomial list");
  std::vector<BinarySequence> members;
  members.reserve(polys.size());
  std::vector<int> row(p.value());
  std::ostringstream label;
  label << "legendre-poly p=" << p.value() << " [";
  for (std::size_t j = 0; j < polys.size(); ++j) {
    if (!(polys[j].modulus() == p))
      throw std::invalid_argument("build_polynomial_family: modulus mismatch");
    for (std::int64_t n = 1; n <= p.value(); ++n) {
      int sym = legendre_symbol(polys[j].eval(n), p);
      row[n - 1] = sym == 0 ? 1 : sym;  // +1 at roots of f
    }
    members.emplace_back(row);
    label << (j ? ", " : "") << polys[j].to_string();
  }
  label << "]";
  return SequenceFamily(std::move(members), label.str());
}

std::vector<PolySpec> enumerate_gms_quadratics(const Prime& p) {
  std::vector<PolySpec> out;
  out.reserve(p.half());
  for (std::int64_t a = 1; a < p.value(); ++a) {
    if (legendre_symbol(a, p) == -1)
      out.emplace_back(p, std::vector<std::int64_t>{-a, 0, 1});  // X^2 - a
  }
  return out;
}

std::vector<PolySpec> enumerate_squarefree_upto(const Prime& p, int max_degree,
                                                std::size_t limit) {
  if (max_degree < 1 || max_degree > 3)
    throw std::invalid_argument("enumerate_squarefree_upto: degree must be 1..3");
  std::vector<PolySpec> out;
  for (int d = 1; d <= max_degree && out.size() < limit; ++d) {
    // lexicographic over (c_{d-1}, ..., c_0)
    std::vector<std::int64_t> lower(d, 0);
    while (out.size() < limit) {
      std::vector<std::int64_t> coeffs(lower.rbegin(), lower.rend());
      coeffs.push_back(1);
      PolySpec f(p, std::move(coeffs));
      if (f.is_square_free()) out.push_back(std::move(f));
      // odometer increment, least-significant last
      int k = d - 1;
      while (k >= 0 && ++lower[k] == p.value()) lower[k--] = 0;
      if (k < 0) break;
    }
  }
  return out;
}

}  // namespace seqfam

#include "semistar/extvec.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <set>

#include "semistar/error.hpp"

namespace semistar {

ExtInt::ExtInt(std::int64_t value) : value_(value) {
  if (value < kMin) throw OverflowError("extended integer below -(2^63-1)");
}

std::int64_t ExtInt::value() const {
  if (!is_finite()) throw DomainError("value() of an infinite extended integer");
  return value_;
}

ExtInt ext_add(ExtInt a, ExtInt b) {
  if (a.is_neg_inf() || b.is_neg_inf()) return ExtInt::neg_inf();
  if (a.is_pos_inf() || b.is_pos_inf()) return ExtInt::pos_inf();
  std::int64_t sum = 0;
  if (__builtin_add_overflow(a.value(), b.value(), &sum) || sum < ExtInt::kMin)
    throw OverflowError("extended integer addition overflows 64 bits");
  return sum;
}

ExtInt ext_neg(ExtInt a) {
  switch (a.kind()) {
    case ExtInt::Kind::NegInf: return ExtInt::pos_inf();
    case ExtInt::Kind::PosInf: return ExtInt::neg_inf();
    case ExtInt::Kind::Finite: break;
  }
  return -a.value();
}

std::string to_string(ExtInt a) {
  if (a.is_pos_inf()) return "inf";
  if (a.is_neg_inf()) return "-inf";
  return std::to_string(a.value());
}

ExtInt parse_ext_int(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text == "inf" || text == "+inf") return ExtInt::pos_inf();
  if (text == "-inf") return ExtInt::neg_inf();
  std::int64_t v = 0;
  const char* first = text.data();
  if (!text.empty() && text.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, text.data() + text.size(), v);
  if (ec == std::errc::result_out_of_range) throw OverflowError("integer out of 64-bit range: " + std::string(text));
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    throw ParseError("not an extended integer: '" + std::string(text) + "'");
  return v;
}

std::vector<std::size_t> subset_indices(Subset s) {
  std::vector<std::size_t> out;
  while (s != 0) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(s)));
    s &= s - 1;
  }
  return out;
}

std::string subset_to_string(Subset s) {
  std::string out = "{";
  bool first = true;
  for (auto i : subset_indices(s)) {
    if (!first) out += ',';
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

Spectrum::Spectrum(std::vector<std::string> labels) {
  if (labels.empty()) throw DomainError("spectrum must contain at least one prime (a field has no semistar lattice to build)");
  if (labels.size() > kMaxGround) throw GuardError("spectrum larger than 64 primes");
  std::set<std::string> seen(labels.begin(), labels.end());
  if (seen.size() != labels.size()) throw DomainError("spectrum labels must be distinct");
  labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
}

Spectrum Spectrum::indexed(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
  return Spectrum(std::move(labels));
}

ValVector::ValVector(Spectrum spectrum, std::vector<ExtInt> entries)
    : spectrum_(std::move(spectrum)), entries_(std::move(entries)) {
  if (entries_.size() != spectrum_.size())
    throw MismatchError("vector has " + std::to_string(entries_.size()) + " entries but the spectrum has " +
                        std::to_string(spectrum_.size()) + " primes");
  if (std::any_of(entries_.begin(), entries_.end(), [](ExtInt e) { return e.is_neg_inf(); })) {
    entries_.clear();
    zero_ = true;
  }
}

ValVector ValVector::zero(Spectrum spectrum) { return ValVector(std::move(spectrum), true); }

ValVector ValVector::top(Spectrum spectrum) {
  std::vector<ExtInt> e(spectrum.size(), ExtInt::pos_inf());
  return ValVector(std::move(spectrum), std::move(e));
}

ValVector ValVector::unit(Spectrum spectrum) {
  std::vector<ExtInt> e(spectrum.size(), ExtInt(0));
  return ValVector(std::move(spectrum), std::move(e));
}

ValVector ValVector::iota(Spectrum spectrum, Subset infinite) {
  if (!is_subset_of(infinite, spectrum.full())) throw DomainError("support outside the spectrum");
  std::vector<ExtInt> e(spectrum.size(), ExtInt(0));
  for (auto i : subset_indices(infinite)) e[i] = ExtInt::pos_inf();
  return ValVector(std::move(spectrum), std::move(e));
}

bool operator==(const ValVector& a, const ValVector& b) {
  return a.zero_ == b.zero_ && a.entries_ == b.entries_ && a.spectrum_ == b.spectrum_;
}

namespace {

void require_same(const Spectrum& a, const Spectrum& b) {
  if (!(a == b)) throw MismatchError("vectors are over different spectra");
}

}  // namespace

ValVector multiply(const ValVector& f, const ValVector& g) {
  require_same(f.spectrum(), g.spectrum());
  if (f.is_zero() || g.is_zero()) return ValVector::zero(f.spectrum());
  std::vector<ExtInt> out(f.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f[i] + g[i];
  return ValVector(f.spectrum(), std::move(out));
}

ValVector infimum(std::span<const ValVector> fs, const Spectrum& spectrum) {
  std::vector<ExtInt> out(spectrum.size(), ExtInt::pos_inf());
  for (const auto& f : fs) {
    require_same(f.spectrum(), spectrum);
    if (f.is_zero()) return ValVector::zero(spectrum);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::min(out[i], f[i]);
  }
  return ValVector(spectrum, std::move(out));
}

ValVector colon(const ValVector& f, const ValVector& g) {
  require_same(f.spectrum(), g.spectrum());
  if (f.is_zero() || g.is_zero()) throw DomainError("colon is defined on nonzero modules only");
  std::vector<ExtInt> out(f.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = -(-f[i] + g[i]);
  return ValVector(f.spectrum(), std::move(out));
}

bool preceq(const ValVector& f, const ValVector& g) {
  require_same(f.spectrum(), g.spectrum());
  if (f.is_zero() || g.is_zero()) throw DomainError("preceq is defined on nonzero modules only");
  if (infinity_support(f) != infinity_support(g)) return false;
  // "f <= g for almost all indices": the failure set must be finite. Over a
  // finite spectrum every failure set is finite, so only the count is formed.
  std::size_t failures = 0;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f[i] > g[i]) ++failures;
  return failures <= f.size();
}

Subset infinity_support(const ValVector& f) {
  if (f.is_zero()) throw DomainError("the zero module has no infinity support");
  Subset s = 0;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f[i].is_pos_inf()) s |= Subset{1} << i;
  return s;
}

ValVector scale(const ValVector& f, const ValVector& c) {
  if (c.is_zero() || std::any_of(c.entries().begin(), c.entries().end(), [](ExtInt e) { return !e.is_finite(); }))
    throw DomainError("scale factor must be finite at every prime");
  return multiply(f, c);
}

bool pointwise_leq(const ValVector& f, const ValVector& g) {
  require_same(f.spectrum(), g.spectrum());
  if (f.is_zero()) return true;
  if (g.is_zero()) return false;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f[i] > g[i]) return false;
  return true;
}

std::string to_inline(const ValVector& f) {
  if (f.is_zero()) return "zero";
  std::string out = "(";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) out += ',';
    out += to_string(f[i]);
  }
  return out + ")";
}

}  // namespace semistar

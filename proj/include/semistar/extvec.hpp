#pragma once

// Extended integers Z[+-inf] and valuation vectors.
//
// A nonzero D-submodule I of the quotient field of a Dedekind domain with
// finitely many maximal ideals p_0..p_{n-1} is encoded by the vector
// f(p_i) = -v_{p_i}(I). A POS_INF entry means I localizes to the whole field
// at p_i; a NEG_INF entry can only describe the zero module, which is kept as
// a separate canonical ZERO value.

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace semistar {

class ExtInt {
 public:
  enum class Kind : std::uint8_t { NegInf = 0, Finite = 1, PosInf = 2 };

  // Finite values are confined to [-(2^63 - 1), 2^63 - 1] so negation is
  // always exact.
  static constexpr std::int64_t kMax = INT64_MAX;
  static constexpr std::int64_t kMin = -INT64_MAX;

  constexpr ExtInt() = default;
  ExtInt(std::int64_t value);  // NOLINT(google-explicit-constructor)

  static constexpr ExtInt pos_inf() { return ExtInt(Kind::PosInf); }
  static constexpr ExtInt neg_inf() { return ExtInt(Kind::NegInf); }

  constexpr Kind kind() const { return kind_; }
  constexpr bool is_finite() const { return kind_ == Kind::Finite; }
  constexpr bool is_pos_inf() const { return kind_ == Kind::PosInf; }
  constexpr bool is_neg_inf() const { return kind_ == Kind::NegInf; }

  // Throws DomainError for the infinities.
  std::int64_t value() const;

  friend constexpr bool operator==(const ExtInt&, const ExtInt&) = default;
  friend constexpr std::strong_ordering operator<=>(const ExtInt& a, const ExtInt& b) {
    if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
    return a.value_ <=> b.value_;
  }

 private:
  constexpr explicit ExtInt(Kind k) : kind_(k) {}

  Kind kind_ = Kind::Finite;
  std::int64_t value_ = 0;  // zero unless finite, so defaulted == is exact
};

// Addition in the multiplicative lattice Z[+-inf]: NEG_INF annihilates
// everything (including POS_INF); POS_INF absorbs every other operand.
ExtInt ext_add(ExtInt a, ExtInt b);
ExtInt ext_neg(ExtInt a);

inline ExtInt operator+(ExtInt a, ExtInt b) { return ext_add(a, b); }
inline ExtInt operator-(ExtInt a) { return ext_neg(a); }

std::string to_string(ExtInt a);
// Accepts a decimal integer, "inf", "+inf" or "-inf".
ExtInt parse_ext_int(std::string_view text);

// Subsets of a ground set {0..n-1}, n <= 64, as bit patterns.
using Subset = std::uint64_t;

inline constexpr std::size_t kMaxGround = 64;

constexpr Subset full_set(std::size_t n) {
  return n >= 64 ? ~Subset{0} : (Subset{1} << n) - 1;
}
constexpr bool is_subset_of(Subset a, Subset b) { return (a & ~b) == 0; }
std::vector<std::size_t> subset_indices(Subset s);
std::string subset_to_string(Subset s);  // "{0,2}"

// Ordered, distinct labels for the maximal ideals. Copies share storage.
class Spectrum {
 public:
  explicit Spectrum(std::vector<std::string> labels);
  // Labels "p0".."p{n-1}".
  static Spectrum indexed(std::size_t n);

  std::size_t size() const { return labels_->size(); }
  const std::vector<std::string>& labels() const { return *labels_; }
  const std::string& label(std::size_t i) const { return (*labels_)[i]; }
  Subset full() const { return full_set(size()); }

  friend bool operator==(const Spectrum& a, const Spectrum& b) {
    return a.labels_ == b.labels_ || *a.labels_ == *b.labels_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> labels_;
};

class ValVector {
 public:
  // Any NEG_INF entry collapses the vector to ZERO.
  ValVector(Spectrum spectrum, std::vector<ExtInt> entries);

  static ValVector zero(Spectrum spectrum);
  // All POS_INF: the quotient field K.
  static ValVector top(Spectrum spectrum);
  // All 0: the domain D itself.
  static ValVector unit(Spectrum spectrum);
  // POS_INF on the indices of `infinite`, 0 elsewhere.
  static ValVector iota(Spectrum spectrum, Subset infinite);

  bool is_zero() const { return zero_; }
  const Spectrum& spectrum() const { return spectrum_; }
  std::size_t size() const { return spectrum_.size(); }
  // Empty for ZERO.
  std::span<const ExtInt> entries() const { return entries_; }
  ExtInt operator[](std::size_t i) const { return entries_[i]; }

  friend bool operator==(const ValVector& a, const ValVector& b);

 private:
  ValVector(Spectrum spectrum, bool zero) : spectrum_(std::move(spectrum)), zero_(zero) {}

  Spectrum spectrum_;
  std::vector<ExtInt> entries_;
  bool zero_ = false;
};

// Module product [f][g] = [f + g].
ValVector multiply(const ValVector& f, const ValVector& g);
// Intersection of modules; the empty infimum is K.
ValVector infimum(std::span<const ValVector> fs, const Spectrum& spectrum);
// ([f] :_K [g]) = [-(-f + g)]; ZERO when the colon is the zero module.
ValVector colon(const ValVector& f, const ValVector& g);
// f <= g at almost every index, and f, g are infinite at the same indices.
bool preceq(const ValVector& f, const ValVector& g);
Subset infinity_support(const ValVector& f);
// Translation by a principal module; `c` must be finite everywhere.
ValVector scale(const ValVector& f, const ValVector& c);
// Module inclusion [f] <= [g]. ZERO lies below everything.
bool pointwise_leq(const ValVector& f, const ValVector& g);

std::string to_inline(const ValVector& f);

}  // namespace semistar

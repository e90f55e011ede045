#include "semistar/zadapter.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <string>

#include "semistar/error.hpp"

namespace semistar::zadapter {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_csv(std::string_view csv) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    auto comma = csv.find(',', start);
    parts.push_back(trim(csv.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return parts;
}

mpz_class parse_integer(std::string_view text) {
  text = trim(text);
  std::string s(text);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  bool ok = !s.empty();
  for (std::size_t i = 0; i < s.size() && ok; ++i)
    ok = std::isdigit(static_cast<unsigned char>(s[i])) || (i == 0 && s[i] == '-' && s.size() > 1);
  if (!ok) throw ParseError("not an integer: '" + std::string(text) + "'");
  return mpz_class(s, 10);
}

void check_prime_list(const std::vector<mpz_class>& primes) {
  if (primes.empty()) throw DomainError("at least one prime is required");
  std::set<mpz_class> seen;
  for (const auto& p : primes) {
    if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 30) == 0)
      throw DomainError(p.get_str() + " is not a prime");
    if (!seen.insert(p).second) throw DomainError("prime " + p.get_str() + " listed twice");
  }
}

// Exponent of p in a nonzero integer, by repeated division.
std::int64_t multiplicity(mpz_class a, const mpz_class& p) {
  std::int64_t k = 0;
  while (mpz_divisible_p(a.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
    ++k;
  }
  return k;
}

std::int64_t prime_of_label(const std::string& label) {
  try {
    mpz_class p = parse_integer(label);
    check_prime_list({p});
    if (!p.fits_slong_p()) throw DomainError("prime label too large: " + label);
    return p.get_si();
  } catch (const ParseError&) {
    throw DomainError("spectrum label '" + label + "' is not a rational prime");
  }
}

}  // namespace

FracIdealSpec::FracIdealSpec(std::vector<mpz_class> primes, std::vector<mpq_class> gens)
    : primes_(std::move(primes)), gens_(std::move(gens)) {
  check_prime_list(primes_);
  if (gens_.empty()) throw DomainError("a fractional ideal needs at least one generator");
  for (auto& g : gens_) {
    if (g == 0) throw DomainError("generators must be nonzero");
    g.canonicalize();
  }
}

Spectrum FracIdealSpec::spectrum() const {
  std::vector<std::string> labels;
  for (const auto& p : primes_) labels.push_back(p.get_str());
  return Spectrum(std::move(labels));
}

std::vector<mpz_class> parse_primes(std::string_view csv) {
  std::vector<mpz_class> primes;
  for (auto part : split_csv(csv)) primes.push_back(parse_integer(part));
  check_prime_list(primes);
  return primes;
}

mpq_class parse_rational(std::string_view text) {
  text = trim(text);
  auto slash = text.find('/');
  mpq_class r;
  if (slash == std::string_view::npos) {
    r = mpq_class(parse_integer(text));
  } else {
    mpz_class num = parse_integer(text.substr(0, slash));
    mpz_class den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    r = mpq_class(num, den);
  }
  r.canonicalize();
  return r;
}

std::vector<mpq_class> parse_rationals(std::string_view csv) {
  std::vector<mpq_class> out;
  for (auto part : split_csv(csv)) out.push_back(parse_rational(part));
  return out;
}

std::int64_t padic_val(const mpq_class& r, const mpz_class& p) {
  if (r == 0) throw DomainError("the valuation of zero is infinite");
  if (p < 2) throw DomainError("valuation base must be a prime");
  return multiplicity(r.get_num(), p) - multiplicity(r.get_den(), p);
}

ValVector vector_of_module(const FracIdealSpec& spec) {
  std::vector<ExtInt> entries;
  entries.reserve(spec.primes().size());
  for (const auto& p : spec.primes()) {
    std::int64_t least = INT64_MAX;
    for (const auto& g : spec.gens()) least = std::min(least, padic_val(g, p));
    entries.emplace_back(-least);
  }
  return ValVector(spec.spectrum(), std::move(entries));
}

bool module_member(const ValVector& f, const mpq_class& r) {
  if (r == 0) throw DomainError("membership is tested for nonzero rationals");
  if (f.is_zero()) throw DomainError("membership in the zero module");
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!f[i].is_finite()) continue;
    mpz_class p(prime_of_label(f.spectrum().label(i)));
    if (padic_val(r, p) < -f[i].value()) return false;
  }
  return true;
}

ValVector colon_oracle(const FracIdealSpec& i, const FracIdealSpec& j) {
  if (i.primes() != j.primes()) throw MismatchError("ideals are over different prime lists");
  // The exponent vector of x^{-1} I is f_I(p) + v_p(x); the colon is the
  // intersection of these shifted modules.
  const ValVector base = vector_of_module(i);
  std::vector<std::int64_t> least(i.primes().size(), INT64_MAX);
  for (const auto& x : j.gens()) {
    for (std::size_t k = 0; k < least.size(); ++k) {
      std::int64_t shifted = 0;
      if (__builtin_add_overflow(base[k].value(), padic_val(x, i.primes()[k]), &shifted))
        throw OverflowError("colon exponent overflows 64 bits");
      least[k] = std::min(least[k], shifted);
    }
  }
  std::vector<ExtInt> entries(least.begin(), least.end());
  return ValVector(base.spectrum(), std::move(entries));
}

}  // namespace semistar::zadapter

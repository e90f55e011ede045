#pragma once

// The concrete Dedekind domain Z localized at finitely many rational primes.
// Its maximal ideals are pZ_(S) for the declared primes p; every other prime
// is a unit, so valuations there are ignored.

#include <gmpxx.h>

#include <string_view>
#include <vector>

#include "semistar/extvec.hpp"

namespace semistar::zadapter {

// A fractional ideal given by nonzero rational generators.
class FracIdealSpec {
 public:
  FracIdealSpec(std::vector<mpz_class> primes, std::vector<mpq_class> gens);

  const std::vector<mpz_class>& primes() const { return primes_; }
  const std::vector<mpq_class>& gens() const { return gens_; }
  // Labels are the decimal primes.
  Spectrum spectrum() const;

 private:
  std::vector<mpz_class> primes_;
  std::vector<mpq_class> gens_;
};

// "2,3,5". Every entry must be a distinct prime.
std::vector<mpz_class> parse_primes(std::string_view csv);
// "a/b" or an integer, reduced to lowest terms.
mpq_class parse_rational(std::string_view text);
// Comma-separated rationals.
std::vector<mpq_class> parse_rationals(std::string_view csv);

// Exponent of p in r; negative for denominators.
std::int64_t padic_val(const mpq_class& r, const mpz_class& p);

// p -> -min over generators of v_p(gen). Always finite.
ValVector vector_of_module(const FracIdealSpec& spec);

// r in [f] iff v_p(r) >= -f(p) at every prime where f is finite. The spectrum
// labels of f must be the primes themselves.
bool module_member(const ValVector& f, const mpq_class& r);

// (I :_K J) as the intersection of x^{-1} I over the generators x of J, built
// from generator valuations alone.
ValVector colon_oracle(const FracIdealSpec& i, const FracIdealSpec& j);

}  // namespace semistar::zadapter

#pragma once

// Bounded brute-force oracles. They materialize every vector of a small
// window and decide questions by exhaustion, independently of the support
// formulas used by the star algebra.

#include <random>
#include <span>
#include <vector>

#include "semistar/extvec.hpp"
#include "semistar/moore.hpp"
#include "semistar/star.hpp"

namespace semistar::oracles {

// All vectors with entries in {-bound..bound} U {POS_INF}, lexicographic.
std::vector<ValVector> window_vectors(const Spectrum& spectrum, int bound);

// Pointwise minimum of every s-closed window vector lying above f. The
// finite entries of f must lie in the window.
ValVector apply_by_window(const Star& s, const ValVector& f, int bound);

// Checks whether a candidate closed set C behaves like the closed modules of
// a semistar operation. C is every window vector whose infinity support lies
// in `supports`, plus the zero module. It must contain the intersection of
// any of its members (K for the empty intersection) and every colon (C : J)
// with J in the window.
struct ClosedSetReport {
  bool intersections = true;
  bool colons = true;
  bool ok() const { return intersections && colons; }
};
ClosedSetReport check_closed_set(std::span<const Subset> supports, std::size_t n, int bound);

// Deterministic sampling helpers shared by the verification suites.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& rng() { return rng_; }
  int uniform(int lo, int hi);
  // Entries in [-bound, bound], POS_INF with probability inf_percent/100.
  ValVector vector(const Spectrum& spectrum, int bound, int inf_percent = 25);
  ValVector finite_vector(const Spectrum& spectrum, int bound);
  // A vector >= f, raising each entry by 0..bound or to POS_INF.
  ValVector raise(const ValVector& f, int bound, int inf_percent = 10);

 private:
  std::mt19937_64 rng_;
};

}  // namespace semistar::oracles

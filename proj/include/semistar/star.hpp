#pragma once

// Semistar operations on a Dedekind domain with finitely many maximal ideals.
//
// A star is stored as the Moore family of infinity supports of its closed
// modules: a module [f] is closed exactly when the set of primes where f is
// infinite belongs to the family. Bigger families are smaller stars.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "semistar/extvec.hpp"
#include "semistar/moore.hpp"

namespace semistar {

class Star {
 public:
  // The family's ground set must be the spectrum's index set.
  Star(Spectrum spectrum, MooreFamily family);

  // d: every module closed (family 2^S).
  static Star identity(Spectrum spectrum);
  // e: every module closes to K (family {S}).
  static Star trivial_extension(Spectrum spectrum);

  const Spectrum& spectrum() const { return spectrum_; }
  const MooreFamily& family() const { return family_; }
  Subset min_member() const { return min_member_; }

  friend bool operator==(const Star& a, const Star& b) {
    return a.spectrum_ == b.spectrum_ && a.family_ == b.family_;
  }

 private:
  Spectrum spectrum_;
  MooreFamily family_;
  Subset min_member_;
};

Star star_from_moore(MooreFamily family, Spectrum spectrum);
MooreFamily moore_of_star(const Star& s);

// s1 <= s2 iff I^{s1} is contained in I^{s2} for every module, i.e. the
// family of s1 contains the family of s2.
bool star_leq(const Star& a, const Star& b);

// Least s-closed module containing [f]: f with its entries raised to POS_INF
// on the closure of its infinity support.
ValVector apply(const Star& s, const ValVector& f);
bool is_closed(const Star& s, const ValVector& f);

// Support family of the closed-module set generated by `gens`.
MooreFamily dagger_supports(std::span<const ValVector> gens, const Spectrum& spectrum);

// Literal (X^preceq)^inf restricted to the window {-bound..bound, inf}^n.
// Guarded to n <= 3, bound <= 4, at most 4 generators. Lexicographic order.
std::vector<ValVector> dagger_bounded_oracle(std::span<const ValVector> gens, const Spectrum& spectrum, int bound);

// Meet: closure is the intersection of the closures. Join: least common
// upper bound. Both throw DomainError on an empty list.
Star star_meet(std::span<const Star> stars);
Star star_join(std::span<const Star> stars);

// Divisorial closure with respect to [j].
Star v_of(const ValVector& j);
// (J :_K (J :_K I)) computed through colons; a zero inner colon gives K.
ValVector divisorial_closure(const ValVector& j, const ValVector& f);

// The overring A = intersection of the localizations at the primes in
// `localized` (all of K when empty), as the idempotent module vector
// iota_{S - localized}.
ValVector overring_vector(const Spectrum& spectrum, Subset localized);
// I -> AI for that overring.
Star d_of_overring(const Spectrum& spectrum, Subset localized);

bool is_finite_type(const Star& s);
// Checks finite type directly: for every f in the window, apply(f) must equal
// the limit of apply(trunc_k f) as k grows, witnessed at k = bound, bound + 1.
bool finite_type_by_truncation(const Star& s, int bound);

struct Classification {
  bool identity = false;
  bool trivial_extension = false;
  bool finite_type = false;
  // Meet of one or two divisorial closures v(J) with J != K: one or two
  // members besides S.
  bool divisorially_generated = false;
  // Set when the star is I -> AI; holds the localized primes of A.
  std::optional<Subset> overring_base;

  std::vector<std::string> labels() const;
};

Classification classify(const Star& s);

}  // namespace semistar

#pragma once

// Moore families (intersection-closed set systems) on a finite ground set
// {0..n-1}. A family always contains the full set, the intersection of its
// empty subfamily; the empty set is optional.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "semistar/extvec.hpp"

namespace semistar {

struct EnumerationOptions;

class MooreFamily {
 public:
  // Members are sorted and deduplicated; throws DomainError when the result
  // is not intersection-closed or does not contain the full set.
  MooreFamily(std::size_t n, std::vector<Subset> members);

  // 2^S, every subset closed.
  static MooreFamily power_set(std::size_t n);
  // {S}.
  static MooreFamily trivial(std::size_t n);
  // {T : T >= base}.
  static MooreFamily up_filter(std::size_t n, Subset base);

  std::size_t ground_size() const { return n_; }
  const std::vector<Subset>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(Subset s) const;
  // Intersection of all members, itself a member.
  Subset least_member() const;

  friend bool operator==(const MooreFamily&, const MooreFamily&) = default;
  // Canonical order: ground size, then lexicographic on the member lists.
  friend std::strong_ordering operator<=>(const MooreFamily& a, const MooreFamily& b);

 private:
  struct Trusted {};
  MooreFamily(std::size_t n, std::vector<Subset> sorted_members, Trusted)
      : n_(n), members_(std::move(sorted_members)) {}
  friend MooreFamily moore_generate(std::span<const Subset>, std::size_t);
  friend MooreFamily family_meet(const MooreFamily&, const MooreFamily&);
  friend void enumerate_moore(std::size_t, const EnumerationOptions&,
                              const std::function<void(const MooreFamily&)>&);

  std::size_t n_ = 0;
  std::vector<Subset> members_;
};

// Full set present and pairwise intersections present.
bool is_moore(std::span<const Subset> family, std::size_t n);
// Smallest Moore family containing `family`.
MooreFamily moore_generate(std::span<const Subset> family, std::size_t n);
// Smallest member containing x.
Subset closure(const MooreFamily& f, Subset x);

// Lattice of Moore families under inclusion.
MooreFamily family_meet(const MooreFamily& a, const MooreFamily& b);
MooreFamily family_join(const MooreFamily& a, const MooreFamily& b);

// Returns U when the members are exactly the supersets of U.
std::optional<Subset> principal_upfilter_base(const MooreFamily& f);

// 2^C(n, floor(n/2)), for 1 <= n <= 7.
mpz_class binom_lower_bound(std::size_t n);

// --- exhaustive enumeration ------------------------------------------------

// A family on n <= 6 points packed as a bitmask over the 2^n subset codes.
using FamilyMask = std::uint64_t;

inline constexpr std::size_t kEnumerationGuard = 5;
inline constexpr std::size_t kEnumerationLimit = 6;

struct EnumerationOptions {
  bool force = false;    // lift the n <= 5 guard (n <= 6 is still required)
  unsigned workers = 1;  // never changes the output
};

FamilyMask mask_of(const MooreFamily& f);
MooreFamily family_from_mask(std::size_t n, FamilyMask mask);
// Lexicographic order of the sorted member lists.
bool canonical_less(FamilyMask a, FamilyMask b);

std::uint64_t count_moore(std::size_t n, const EnumerationOptions& opts = {});
// Every Moore family on n points exactly once, in canonical order.
std::vector<FamilyMask> enumerate_moore_masks(std::size_t n, const EnumerationOptions& opts = {});
void enumerate_moore(std::size_t n, const EnumerationOptions& opts,
                     const std::function<void(const MooreFamily&)>& sink);

}  // namespace semistar

#pragma once

#include <string>
#include <vector>

#include "semistar/extvec.hpp"
#include "semistar/io.hpp"
#include "semistar/moore.hpp"

namespace testing_support {

// Inline vector over the default labels p0..p{n-1}.
inline semistar::ValVector V(const std::string& text) { return semistar::io::parse_vector(text); }

inline semistar::ValVector V(const semistar::Spectrum& sp, const std::string& text) {
  return semistar::io::parse_vector(text, sp);
}

inline semistar::Subset bits(std::initializer_list<unsigned> idx) {
  semistar::Subset s = 0;
  for (auto i : idx) s |= semistar::Subset{1} << i;
  return s;
}

// Every Moore family on n points, found by testing each subset of the
// power set. Independent of the enumerator; usable for n <= 4.
inline std::vector<std::vector<semistar::Subset>> brute_force_moore(std::size_t n) {
  const std::size_t m = std::size_t{1} << n;
  std::vector<std::vector<semistar::Subset>> out;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << m); ++pick) {
    std::vector<semistar::Subset> fam;
    for (std::size_t s = 0; s < m; ++s)
      if (pick >> s & 1) fam.push_back(s);
    bool ok = (pick >> (m - 1) & 1) != 0;
    for (std::size_t i = 0; ok && i < fam.size(); ++i)
      for (std::size_t j = i + 1; ok && j < fam.size(); ++j) ok = (pick >> (fam[i] & fam[j]) & 1) != 0;
    if (ok) out.push_back(std::move(fam));
  }
  return out;
}

}  // namespace testing_support

#pragma once

// Self-checking suites behind `semistar verify`.

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

#include "semistar/poset.hpp"

namespace semistar::verify {

// Number of Moore families on 1..5 points.
inline constexpr std::array<std::uint64_t, 5> kMooreCounts = {2, 7, 61, 2480, 1385552};

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

using Reporter = std::function<void(const Check&)>;

enum class Suite { Table1, Bounds, FiniteType, N2Shape, Oracles, Axioms };

// "table1", "bounds", "finite-type", "n2-shape", "oracles", "axioms".
Suite parse_suite(std::string_view name);

struct SuiteOptions {
  std::size_t n = 0;      // single size; 0 means the suite's default range
  std::size_t max_n = 0;  // upper end of the default range; 0 means 4
  unsigned workers = 1;
  std::uint64_t seed = 20240601;
};

// Reports every check; returns true iff all passed.
bool run_suite(Suite suite, const SuiteOptions& opts, const Reporter& report);

// The star lattice on n primes (Moore families under reverse inclusion).
FinitePoset star_lattice(std::size_t n);
// Subsets of {1,2,3} except {1}, under inclusion.
FinitePoset cube_minus_singleton();

}  // namespace semistar::verify

#pragma once

// Small finite posets given by an explicit order relation.

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace semistar {

inline constexpr std::size_t kPosetGuard = 200;

class FinitePoset {
 public:
  // `leq(i, j)` for i, j < size. Throws GuardError above kPosetGuard elements.
  template <class Leq>
  FinitePoset(std::size_t size, Leq leq) : size_(size) {
    check_size();
    rel_.resize(size * size);
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = 0; j < size; ++j) rel_[i * size + j] = leq(i, j) ? 1 : 0;
  }

  // Builds the order on `elements` from a predicate over pairs of elements.
  template <class T, class Leq>
  static FinitePoset of(const std::vector<T>& elements, Leq leq) {
    return FinitePoset(elements.size(), [&](std::size_t i, std::size_t j) { return leq(elements[i], elements[j]); });
  }

  std::size_t size() const { return size_; }
  bool leq(std::size_t i, std::size_t j) const { return rel_[i * size_ + j] != 0; }
  FinitePoset dual() const;

 private:
  FinitePoset() = default;
  void check_size() const;

  std::size_t size_ = 0;
  std::vector<std::uint8_t> rel_;
};

// Covering pairs (lower, upper). Throws DomainError if the relation is not a
// partial order.
std::vector<std::pair<std::size_t, std::size_t>> hasse_edges(const FinitePoset& p);

enum class Orientation { Iso, Anti };

// Backtracking search over bijections, pruned by (down-degree, up-degree)
// signatures.
bool poset_isomorphic(const FinitePoset& a, const FinitePoset& b, Orientation orientation);

}  // namespace semistar

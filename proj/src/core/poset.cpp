#include "semistar/poset.hpp"

#include <algorithm>
#include <string>

#include "semistar/error.hpp"

namespace semistar {

void FinitePoset::check_size() const {
  if (size_ > kPosetGuard)
    throw GuardError("poset has " + std::to_string(size_) + " elements; the limit is " + std::to_string(kPosetGuard));
}

FinitePoset FinitePoset::dual() const {
  FinitePoset out;
  out.size_ = size_;
  out.rel_.resize(rel_.size());
  for (std::size_t i = 0; i < size_; ++i)
    for (std::size_t j = 0; j < size_; ++j) out.rel_[i * size_ + j] = rel_[j * size_ + i];
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> hasse_edges(const FinitePoset& p) {
  const std::size_t n = p.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!p.leq(i, i)) throw DomainError("relation is not reflexive");
    for (std::size_t j = i + 1; j < n; ++j)
      if (p.leq(i, j) && p.leq(j, i)) throw DomainError("relation is not antisymmetric");
  }
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !p.leq(i, j)) continue;
      bool covered = true;
      for (std::size_t k = 0; k < n && covered; ++k)
        if (k != i && k != j && p.leq(i, k) && p.leq(k, j)) covered = false;
      if (covered) edges.emplace_back(i, j);
    }
  }
  return edges;
}

namespace {

struct Signature {
  std::size_t below = 0;
  std::size_t above = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

std::vector<Signature> signatures(const FinitePoset& p) {
  std::vector<Signature> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (p.leq(j, i)) ++out[i].below;
      if (p.leq(i, j)) ++out[i].above;
    }
  return out;
}

class IsoSearch {
 public:
  IsoSearch(const FinitePoset& a, const FinitePoset& b) : a_(a), b_(b), sig_a_(signatures(a)), sig_b_(signatures(b)) {
    order_.resize(a.size());
    for (std::size_t i = 0; i < order_.size(); ++i) order_[i] = i;
    // Assign the most constrained elements first.
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t x, std::size_t y) {
      return rarity(sig_a_[x]) < rarity(sig_a_[y]);
    });
    image_.assign(a.size(), kUnset);
    used_.assign(b.size(), false);
  }

  bool solve() {
    std::vector<Signature> sa = sig_a_, sb = sig_b_;
    auto key = [](const Signature& s) { return std::pair(s.below, s.above); };
    std::sort(sa.begin(), sa.end(), [&](auto& x, auto& y) { return key(x) < key(y); });
    std::sort(sb.begin(), sb.end(), [&](auto& x, auto& y) { return key(x) < key(y); });
    if (sa != sb) return false;
    return extend(0);
  }

 private:
  static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

  std::size_t rarity(const Signature& s) const {
    return static_cast<std::size_t>(std::count(sig_b_.begin(), sig_b_.end(), s));
  }

  bool consistent(std::size_t x, std::size_t y) const {
    for (std::size_t k = 0; k < image_.size(); ++k) {
      if (image_[k] == kUnset) continue;
      const std::size_t m = image_[k];
      if (a_.leq(x, k) != b_.leq(y, m) || a_.leq(k, x) != b_.leq(m, y)) return false;
    }
    return a_.leq(x, x) == b_.leq(y, y);
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const std::size_t x = order_[depth];
    for (std::size_t y = 0; y < b_.size(); ++y) {
      if (used_[y] || !(sig_a_[x] == sig_b_[y]) || !consistent(x, y)) continue;
      image_[x] = y;
      used_[y] = true;
      if (extend(depth + 1)) return true;
      image_[x] = kUnset;
      used_[y] = false;
    }
    return false;
  }

  const FinitePoset& a_;
  const FinitePoset& b_;
  std::vector<Signature> sig_a_, sig_b_;
  std::vector<std::size_t> order_, image_;
  std::vector<bool> used_;
};

}  // namespace

bool poset_isomorphic(const FinitePoset& a, const FinitePoset& b, Orientation orientation) {
  if (a.size() != b.size()) return false;
  if (orientation == Orientation::Anti) {
    const FinitePoset flipped = b.dual();
    return IsoSearch(a, flipped).solve();
  }
  return IsoSearch(a, b).solve();
}

}  // namespace semistar

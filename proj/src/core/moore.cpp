#include "semistar/moore.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <thread>
#include <unordered_set>

#include "semistar/error.hpp"

namespace semistar {
namespace {

// Families are materialized as member lists; beyond this the power set alone
// would not fit in memory.
constexpr std::size_t kMaterializeLimit = 20;

void check_ground(std::size_t n) {
  if (n == 0) throw DomainError("ground set must be nonempty");
  if (n > kMaxGround) throw GuardError("ground set larger than 64 points");
}

void check_members(std::span<const Subset> family, std::size_t n) {
  const Subset full = full_set(n);
  for (auto s : family)
    if (!is_subset_of(s, full))
      throw DomainError("subset " + subset_to_string(s) + " lies outside {0.." + std::to_string(n - 1) + "}");
}

std::vector<Subset> sorted_unique(std::span<const Subset> family) {
  std::vector<Subset> v(family.begin(), family.end());
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

MooreFamily::MooreFamily(std::size_t n, std::vector<Subset> members) : n_(n) {
  check_ground(n);
  check_members(members, n);
  members_ = sorted_unique(members);
  if (!is_moore(members_, n)) throw DomainError("family is not closed under intersections (or misses the full set)");
}

MooreFamily MooreFamily::power_set(std::size_t n) { return up_filter(n, 0); }

MooreFamily MooreFamily::trivial(std::size_t n) {
  check_ground(n);
  return MooreFamily(n, {full_set(n)}, Trusted{});
}

MooreFamily MooreFamily::up_filter(std::size_t n, Subset base) {
  check_ground(n);
  if (n > kMaterializeLimit) throw GuardError("up-filter on more than 20 points is too large to list");
  check_members(std::span(&base, 1), n);
  const Subset free = full_set(n) & ~base;
  std::vector<Subset> members;
  for (Subset sub = free;; sub = (sub - 1) & free) {
    members.push_back(base | sub);
    if (sub == 0) break;
  }
  std::sort(members.begin(), members.end());
  return MooreFamily(n, std::move(members), Trusted{});
}

bool MooreFamily::contains(Subset s) const { return std::binary_search(members_.begin(), members_.end(), s); }

Subset MooreFamily::least_member() const {
  Subset acc = full_set(n_);
  for (auto m : members_) acc &= m;
  return acc;
}

std::strong_ordering operator<=>(const MooreFamily& a, const MooreFamily& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.members_.begin(), a.members_.end(), b.members_.begin(),
                                                b.members_.end());
}

bool is_moore(std::span<const Subset> family, std::size_t n) {
  check_ground(n);
  check_members(family, n);
  const auto members = sorted_unique(family);
  auto has = [&](Subset s) { return std::binary_search(members.begin(), members.end(), s); };
  if (!has(full_set(n))) return false;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (!has(members[i] & members[j])) return false;
  return true;
}

MooreFamily moore_generate(std::span<const Subset> family, std::size_t n) {
  check_ground(n);
  check_members(family, n);
  std::vector<Subset> members;
  std::unordered_set<Subset> seen;
  auto add = [&](Subset s) {
    if (seen.insert(s).second) members.push_back(s);
  };
  add(full_set(n));
  for (auto s : family) add(s);
  // members[0..done) are already pairwise saturated.
  for (std::size_t done = 0; done < members.size(); ++done)
    for (std::size_t j = 0; j < done; ++j) add(members[done] & members[j]);
  std::sort(members.begin(), members.end());
  return MooreFamily(n, std::move(members), MooreFamily::Trusted{});
}

Subset closure(const MooreFamily& f, Subset x) {
  check_members(std::span(&x, 1), f.ground_size());
  Subset acc = full_set(f.ground_size());
  for (auto m : f.members())
    if (is_subset_of(x, m)) acc &= m;
  return acc;
}

MooreFamily family_meet(const MooreFamily& a, const MooreFamily& b) {
  if (a.ground_size() != b.ground_size()) throw MismatchError("families over different ground sets");
  std::vector<Subset> common;
  std::set_intersection(a.members().begin(), a.members().end(), b.members().begin(), b.members().end(),
                        std::back_inserter(common));
  return MooreFamily(a.ground_size(), std::move(common), MooreFamily::Trusted{});
}

MooreFamily family_join(const MooreFamily& a, const MooreFamily& b) {
  if (a.ground_size() != b.ground_size()) throw MismatchError("families over different ground sets");
  std::vector<Subset> all(a.members());
  all.insert(all.end(), b.members().begin(), b.members().end());
  return moore_generate(all, a.ground_size());
}

std::optional<Subset> principal_upfilter_base(const MooreFamily& f) {
  const Subset base = f.least_member();
  const auto free = static_cast<unsigned>(f.ground_size()) - static_cast<unsigned>(std::popcount(base));
  // Every member contains `base`, so the family is the whole up-set exactly
  // when it has 2^|S - base| members.
  if (free < 63 && f.size() == (std::size_t{1} << free)) return base;
  return std::nullopt;
}

mpz_class binom_lower_bound(std::size_t n) {
  if (n < 1 || n > 7) throw DomainError("binomial lower bound is tabulated for 1 <= n <= 7");
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), n, n / 2);
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, c.get_ui());
  return out;
}

// --- enumeration -------------------------------------------------------------

FamilyMask mask_of(const MooreFamily& f) {
  if (f.ground_size() > kEnumerationLimit) throw GuardError("family masks cover at most 6 points");
  FamilyMask m = 0;
  for (auto s : f.members()) m |= FamilyMask{1} << s;
  return m;
}

MooreFamily family_from_mask(std::size_t n, FamilyMask mask) {
  if (n == 0 || n > kEnumerationLimit) throw GuardError("family masks cover 1 to 6 points");
  std::vector<Subset> members;
  for (FamilyMask m = mask; m != 0; m &= m - 1) members.push_back(static_cast<Subset>(std::countr_zero(m)));
  return MooreFamily(n, std::move(members));
}

bool canonical_less(FamilyMask a, FamilyMask b) {
  const FamilyMask diff = a ^ b;
  if (diff == 0) return false;
  const FamilyMask low = diff & (~diff + 1);
  const FamilyMask above = ~((low << 1) - 1);
  // Both lists agree below `low`. The list holding `low` is smaller unless
  // the other one has already ended there.
  if (a & low) return (b & above) != 0;
  return (a & above) == 0;
}

namespace {

// Depth-first decision over all subsets in descending (cardinality, code)
// order. Taking a subset forces its intersections with the current members,
// all strictly smaller and therefore still undecided; a forced subset cannot
// be rejected.
class MooreSearch {
 public:
  explicit MooreSearch(std::size_t n) : n_(n) {
    for (Subset s = 0; s <= full_set(n); ++s) order_.push_back(s);
    std::sort(order_.begin(), order_.end(), [](Subset a, Subset b) {
      const int pa = std::popcount(a), pb = std::popcount(b);
      return pa != pb ? pa > pb : a > b;
    });
  }

  struct State {
    FamilyMask members = 0;
    FamilyMask forced = 0;
    std::size_t next = 0;
  };

  State root() const { return State{0, FamilyMask{1} << full_set(n_), 0}; }
  std::size_t depth() const { return order_.size(); }

  State take(const State& st) const {
    const Subset s = order_[st.next];
    State out{st.members | (FamilyMask{1} << s), st.forced, st.next + 1};
    for (FamilyMask m = st.members; m != 0; m &= m - 1) {
      const auto member = static_cast<Subset>(std::countr_zero(m));
      out.forced |= FamilyMask{1} << (member & s);
    }
    return out;
  }

  bool is_forced(const State& st) const { return (st.forced >> order_[st.next]) & 1; }

  // Calls leaf(members) for every completion of `st`.
  template <class Leaf>
  void run(const State& st, Leaf& leaf) const {
    if (st.next == order_.size()) {
      leaf(st.members);
      return;
    }
    if (!is_forced(st)) run(State{st.members, st.forced, st.next + 1}, leaf);
    run(take(st), leaf);
  }

  // Frontier states after `levels` decisions, in DFS order.
  std::vector<State> split(std::size_t levels) const {
    std::vector<State> frontier{root()};
    for (std::size_t l = 0; l < levels && l < order_.size(); ++l) {
      std::vector<State> next;
      for (const auto& st : frontier) {
        if (!is_forced(st)) next.push_back(State{st.members, st.forced, st.next + 1});
        next.push_back(take(st));
      }
      frontier = std::move(next);
    }
    return frontier;
  }

 private:
  std::size_t n_;
  std::vector<Subset> order_;
};

void check_enumeration(std::size_t n, const EnumerationOptions& opts) {
  if (n == 0) throw DomainError("ground set must be nonempty");
  if (n > kEnumerationLimit)
    throw GuardError("enumeration supports at most 6 points (n = " + std::to_string(n) + " requested)");
  if (n > kEnumerationGuard && !opts.force)
    throw GuardError("n = " + std::to_string(n) +
                     " is beyond the enumeration guard (n <= 5); n = 6 alone has 75973751474 families");
}

// Runs `make_leaf(task_index)` style workers over the split frontier.
template <class PerTask>
void run_parallel(const MooreSearch& search, unsigned workers, std::vector<PerTask>& results) {
  const std::size_t levels = std::min<std::size_t>(search.depth(), 8);
  const auto tasks = search.split(levels);
  results.assign(tasks.size(), PerTask{});
  std::atomic<std::size_t> cursor{0};
  auto work = [&] {
    for (std::size_t t; (t = cursor.fetch_add(1)) < tasks.size();) {
      auto& out = results[t];
      search.run(tasks[t], out);
    }
  };
  workers = std::max(1u, workers);
  if (workers == 1) {
    work();
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& th : pool) th.join();
}

struct Counter {
  std::uint64_t count = 0;
  void operator()(FamilyMask) { ++count; }
};

struct Collector {
  std::vector<FamilyMask> masks;
  void operator()(FamilyMask m) { masks.push_back(m); }
};

}  // namespace

std::uint64_t count_moore(std::size_t n, const EnumerationOptions& opts) {
  check_enumeration(n, opts);
  MooreSearch search(n);
  std::vector<Counter> results;
  run_parallel(search, opts.workers, results);
  std::uint64_t total = 0;
  for (const auto& c : results) total += c.count;
  return total;
}

std::vector<FamilyMask> enumerate_moore_masks(std::size_t n, const EnumerationOptions& opts) {
  check_enumeration(n, opts);
  MooreSearch search(n);
  std::vector<Collector> results;
  run_parallel(search, opts.workers, results);
  std::vector<FamilyMask> all;
  for (auto& c : results) all.insert(all.end(), c.masks.begin(), c.masks.end());
  std::sort(all.begin(), all.end(), canonical_less);
  return all;
}

void enumerate_moore(std::size_t n, const EnumerationOptions& opts,
                     const std::function<void(const MooreFamily&)>& sink) {
  for (auto mask : enumerate_moore_masks(n, opts)) {
    std::vector<Subset> members;
    for (FamilyMask m = mask; m != 0; m &= m - 1) members.push_back(static_cast<Subset>(std::countr_zero(m)));
    sink(MooreFamily(n, std::move(members), MooreFamily::Trusted{}));
  }
}

}  // namespace semistar

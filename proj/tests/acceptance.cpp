// Acceptance criteria AC1..AC9. Prints one PASS/FAIL line per criterion and
// exits nonzero if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "helpers.hpp"
#include "semistar/error.hpp"
#include "semistar/moore.hpp"
#include "semistar/oracles.hpp"
#include "semistar/poset.hpp"
#include "semistar/star.hpp"
#include "semistar/verify.hpp"
#include "semistar/zadapter.hpp"

using namespace semistar;
using Clock = std::chrono::steady_clock;

namespace {

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3fs", s);
  return buf;
}

int failures = 0;

void report(const char* id, bool ok, const std::string& what) {
  std::printf("%s %s  %s\n", ok ? "PASS" : "FAIL", id, what.c_str());
  std::fflush(stdout);
  failures += ok ? 0 : 1;
}

// Runs one criterion; an escaping exception counts as a failure.
void criterion(const char* id, const std::function<std::pair<bool, std::string>()>& body) {
  try {
    auto [ok, detail] = body();
    report(id, ok, detail);
  } catch (const std::exception& e) {
    report(id, false, std::string("exception: ") + e.what());
  }
}

std::vector<MooreFamily> families(std::size_t n) {
  std::vector<MooreFamily> out;
  enumerate_moore(n, {}, [&](const MooreFamily& f) { out.push_back(f); });
  return out;
}

bool guard_refuses(std::size_t n, bool force) {
  try {
    count_moore(n, {force, 1});
  } catch (const GuardError&) {
    return true;
  }
  return false;
}

std::pair<bool, std::string> ac1() {
  const std::uint64_t expected[] = {2, 7, 61, 2480, 1385552};
  bool ok = true;
  std::string detail;
  double small = 0, five = 0;
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto t0 = Clock::now();
    const auto c = count_moore(n);
    (n <= 4 ? small : five) += since(t0);
    ok &= c == expected[n - 1];
    detail += (n > 1 ? "," : "") + std::to_string(c);
  }
  // Independent cross-check for n <= 4 by testing every candidate family.
  for (std::size_t n = 1; n <= 4; ++n) ok &= testing_support::brute_force_moore(n).size() == expected[n - 1];
  const bool guard = guard_refuses(6, false) && guard_refuses(7, true);
  ok &= small <= 1.0 && five <= 600.0 && guard;
  return {ok, "counts " + detail + "; n<=4 " + seconds(small) + " (limit 1s), n=5 " + seconds(five) +
                  " (limit 600s); n>=6 refused: " + (guard ? "yes" : "no")};
}

std::pair<bool, std::string> ac2() {
  bool ok = true;
  std::string detail;
  for (std::size_t n = 1; n <= 5; ++n) {
    const mpz_class c(std::to_string(count_moore(n)));
    mpz_class upper;
    mpz_ui_pow_ui(upper.get_mpz_t(), 2, 1ul << n);
    const mpz_class lower = binom_lower_bound(n);
    ok &= lower <= c && c <= upper;
    detail += " n=" + std::to_string(n) + ":" + lower.get_str() + "<=" + c.get_str() + "<=" + upper.get_str();
  }
  return {ok, "2^C(n,[n/2]) <= count <= 2^(2^n);" + detail};
}

// Members are exactly the supersets of their intersection, tested directly.
bool is_upfilter(const MooreFamily& f) {
  const Subset base = f.least_member();
  const Subset top = full_set(f.ground_size());
  for (Subset t = 0; t <= top; ++t)
    if (f.contains(t) != is_subset_of(base, t)) return false;
  return true;
}

std::pair<bool, std::string> ac3() {
  bool ok = true;
  std::string detail = "census";
  for (std::size_t n = 1; n <= 4; ++n) {
    std::size_t census = 0, agree = 0;
    const auto fams = families(n);
    for (const auto& f : fams) {
      const bool ft = is_finite_type(Star(Spectrum::indexed(n), f));
      census += ft;
      agree += ft == is_upfilter(f);
    }
    ok &= census == (std::size_t{1} << n) && agree == fams.size();
    detail += " " + std::to_string(census);
  }

  const std::size_t n = 5;
  const Spectrum sp = Spectrum::indexed(n);
  std::set<std::vector<Subset>> distinct;
  std::size_t finite = 0;
  for (Subset x = 0; x < 32; ++x) {
    const Star d = d_of_overring(sp, x);
    distinct.insert(d.family().members());
    finite += is_finite_type(d);
  }
  ok &= distinct.size() == 32 && finite == 32;

  const auto masks = enumerate_moore_masks(n);
  oracles::Sampler rng(5005);
  std::size_t sampled = 0, rejected = 0;
  while (sampled < 100) {
    const auto f = family_from_mask(n, masks[static_cast<std::size_t>(rng.rng()() % masks.size())]);
    if (is_upfilter(f)) continue;
    ++sampled;
    rejected += !is_finite_type(Star(sp, f));
  }
  ok &= rejected == 100;
  return {ok, detail + " (n=1..4, expected 2 4 8 16); n=5: " + std::to_string(distinct.size()) + " distinct d_A, " +
                  std::to_string(finite) + " finite type, " + std::to_string(rejected) +
                  "/100 sampled non-up-filters rejected"};
}

std::pair<bool, std::string> ac4() {
  const auto t0 = Clock::now();
  const Spectrum sp = Spectrum::indexed(2);
  std::vector<Star> stars;
  for (const auto& f : families(2)) stars.emplace_back(sp, f);
  const auto lattice = FinitePoset::of(stars, [](const Star& a, const Star& b) { return star_leq(a, b); });
  const bool iso = poset_isomorphic(lattice, verify::cube_minus_singleton(), Orientation::Iso);
  const double t = since(t0);
  return {iso && stars.size() == 7 && t < 1.0,
          std::to_string(stars.size()) + "-element star lattice isomorphic to 2^{1,2,3} - {{1}}: " +
              (iso ? "yes" : "no") + " in " + seconds(t) + " (limit 1s)"};
}

std::pair<bool, std::string> ac5() {
  oracles::Sampler rng(3301);
  const std::vector<mpz_class> primes{2, 3, 5};
  auto generator = [&] {
    mpq_class g(1);
    for (const auto& p : primes) {
      const int e = rng.uniform(-5, 5);
      mpz_class pe;
      mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
      g *= e < 0 ? mpq_class(1, pe) : mpq_class(pe);
    }
    g.canonicalize();
    return rng.uniform(0, 1) ? g : mpq_class(-g);
  };
  auto module = [&] {
    std::vector<mpq_class> gens(static_cast<std::size_t>(rng.uniform(1, 3)));
    for (auto& g : gens) g = generator();
    return zadapter::FracIdealSpec(primes, gens);
  };
  int agree = 0;
  for (int t = 0; t < 1000; ++t) {
    const auto i = module(), j = module();
    agree += colon(zadapter::vector_of_module(i), zadapter::vector_of_module(j)) == zadapter::colon_oracle(i, j);
  }
  return {agree == 1000, std::to_string(agree) + "/1000 module pairs over {2,3,5}: vec_colon equals the rational oracle"};
}

std::pair<bool, std::string> ac6() {
  oracles::Sampler rng(6006);
  std::vector<std::vector<MooreFamily>> fams;
  for (std::size_t n = 1; n <= 4; ++n) fams.push_back(families(n));
  const int samples = 10000;
  int ext = 0, mono = 0, idem = 0, scal = 0, nucleus = 0, weak = 0, resid = 0, resid_skipped = 0;
  for (int t = 0; t < samples; ++t) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 4));
    const Spectrum sp = Spectrum::indexed(n);
    const auto& pool = fams[n - 1];
    const Star s(sp, pool[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(pool.size()) - 1))]);
    const ValVector f = rng.vector(sp, 10), g = rng.vector(sp, 10), h = rng.vector(sp, 10);
    const ValVector fs = apply(s, f), gs = apply(s, g), hs = apply(s, h);
    ext += pointwise_leq(f, fs);
    mono += pointwise_leq(fs, apply(s, rng.raise(f, 10)));
    idem += apply(s, fs) == fs;
    const ValVector c = rng.finite_vector(sp, 10);
    scal += apply(s, scale(f, c)) == scale(fs, c);
    const ValVector fg = multiply(f, g);
    nucleus += apply(s, multiply(fs, gs)) == apply(s, fg);
    weak += pointwise_leq(multiply(fs, gs), apply(s, fg));
    const ValVector fgs = multiply(f, gs);
    if (fg.is_zero() || fgs.is_zero() || hs.is_zero()) {
      ++resid_skipped;
      ++resid;
      continue;
    }
    resid += pointwise_leq(fg, hs) == pointwise_leq(fgs, hs);
  }
  const bool ok = ext == samples && mono == samples && idem == samples && scal == samples && nucleus == samples &&
                  weak == samples && resid == samples;
  auto frac = [&](int k) { return std::to_string(k) + "/" + std::to_string(samples); };
  return {ok, "extensive " + frac(ext) + ", monotone " + frac(mono) + ", idempotent " + frac(idem) + ", scale " +
                  frac(scal) + ", nucleus " + frac(nucleus) + " (weak " + frac(weak) + "), residuation " + frac(resid) +
                  " (" + std::to_string(resid_skipped) + " zero skipped)"};
}

std::pair<bool, std::string> ac7() {
  const Spectrum sp = Spectrum::indexed(2);
  const int bound = 3;
  const auto window = oracles::window_vectors(sp, bound);
  std::size_t sets = 0, agree = 0;
  auto check = [&](std::vector<ValVector> gens) {
    const auto found = dagger_bounded_oracle(gens, sp, bound);
    const auto family = dagger_supports(gens, sp);
    std::set<std::vector<ExtInt>> in;
    for (const auto& v : found) in.emplace(v.entries().begin(), v.entries().end());
    bool same = true;
    for (const auto& w : window)
      same &= (in.count(std::vector<ExtInt>(w.entries().begin(), w.entries().end())) > 0) ==
              family.contains(infinity_support(w));
    ++sets;
    agree += same;
  };
  const std::size_t m = window.size();
  check({});
  for (std::size_t a = 0; a < m; ++a) {
    check({window[a]});
    for (std::size_t b = a + 1; b < m; ++b) {
      check({window[a], window[b]});
      for (std::size_t c = b + 1; c < m; ++c) check({window[a], window[b], window[c]});
    }
  }
  return {agree == sets, std::to_string(agree) + "/" + std::to_string(sets) +
                             " generator sets (size <= 3 from the " + std::to_string(m) +
                             "-vector window, B=3) agree on every window vector"};
}

std::pair<bool, std::string> ac8() {
  const std::size_t n = 3;
  const Spectrum sp = Spectrum::indexed(n);
  const auto fams = families(n);
  oracles::Sampler rng(8008);
  std::size_t pairs = 0, meet_ok = 0, join_closed = 0, join_minimal = 0, bounds = 0;
  for (const auto& a : fams)
    for (const auto& b : fams) {
      const Star pair[] = {Star(sp, a), Star(sp, b)};
      const Star meet = star_meet(pair), join = star_join(pair);
      const auto common = family_meet(a, b);
      bool m_ok = true, j_closed = true, j_min = true;
      for (int t = 0; t < 20; ++t) {
        const ValVector f = rng.vector(sp, 6);
        const ValVector both[] = {apply(pair[0], f), apply(pair[1], f)};
        m_ok &= apply(meet, f) == infimum(both, sp);
        const ValVector up = apply(join, f);
        j_closed &= pointwise_leq(f, up) && is_closed(pair[0], up) && is_closed(pair[1], up);
        // Sampled upper bounds of f closed under both stars.
        for (int k = 0; k < 5; ++k) {
          const ValVector raised = rng.raise(f, 4, 0);
          std::vector<Subset> choices;
          for (auto member : common.members())
            if (is_subset_of(infinity_support(f), member)) choices.push_back(member);
          const Subset target = choices[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(choices.size()) - 1))];
          std::vector<ExtInt> e(raised.entries().begin(), raised.entries().end());
          for (std::size_t i = 0; i < n; ++i)
            if (target >> i & 1) e[i] = ExtInt::pos_inf();
          const ValVector g(sp, std::move(e));
          if (!(is_closed(pair[0], g) && is_closed(pair[1], g) && pointwise_leq(f, g))) {
            j_min = false;
            continue;
          }
          ++bounds;
          j_min &= pointwise_leq(up, g);
        }
      }
      ++pairs;
      meet_ok += m_ok;
      join_closed += j_closed;
      join_minimal += j_min;
    }
  const bool ok = pairs == 3721 && meet_ok == pairs && join_closed == pairs && join_minimal == pairs;
  return {ok, std::to_string(pairs) + " family pairs x 20 vectors: meet = pointwise min " + std::to_string(meet_ok) +
                  ", join closed under both " + std::to_string(join_closed) + ", join below every sampled closed bound " +
                  std::to_string(join_minimal) + " (" + std::to_string(bounds) + " bounds)"};
}

std::pair<bool, std::string> ac9() {
  const std::size_t n = 2;
  const int bound = 2;
  std::vector<std::vector<Subset>> moore, other;
  for (unsigned pick = 0; pick < 16; ++pick) {
    std::vector<Subset> fam;
    for (Subset s = 0; s < 4; ++s)
      if (pick >> s & 1) fam.push_back(s);
    (is_moore(fam, n) ? moore : other).push_back(fam);
  }
  std::size_t moore_ok = 0;
  for (const auto& f : moore) moore_ok += oracles::check_closed_set(f, n, bound).ok();
  std::size_t all_violate = 0;
  for (const auto& f : other) all_violate += !oracles::check_closed_set(f, n, bound).ok();
  oracles::Sampler rng(9009);
  std::size_t drawn_violate = 0;
  for (int t = 0; t < 20; ++t) {
    const auto& f = other[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(other.size()) - 1))];
    drawn_violate += !oracles::check_closed_set(f, n, bound).ok();
  }
  const bool ok = moore.size() == 7 && moore_ok == 7 && all_violate == other.size() && drawn_violate == 20;
  return {ok, std::to_string(moore_ok) + "/" + std::to_string(moore.size()) +
                  " Moore families satisfy the closed-set conditions; " + std::to_string(drawn_violate) +
                  "/20 random non-Moore families violate one (all " + std::to_string(all_violate) + "/" +
                  std::to_string(other.size()) + " checked)"};
}

}  // namespace

int main() {
  criterion("AC1", ac1);
  criterion("AC2", ac2);
  criterion("AC3", ac3);
  criterion("AC4", ac4);
  criterion("AC5", ac5);
  criterion("AC6", ac6);
  criterion("AC7", ac7);
  criterion("AC8", ac8);
  criterion("AC9", ac9);
  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}

#include "semistar/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>

#include "semistar/error.hpp"
#include "semistar/moore.hpp"
#include "semistar/oracles.hpp"
#include "semistar/star.hpp"
#include "semistar/zadapter.hpp"

namespace semistar::verify {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os.precision(3);
  os << std::fixed << s << "s";
  return os.str();
}

class Tally {
 public:
  explicit Tally(const Reporter& r) : report_(r) {}
  void operator()(std::string name, bool passed, std::string detail = {}) {
    all_ &= passed;
    report_(Check{std::move(name), passed, std::move(detail)});
  }
  bool all() const { return all_; }

 private:
  const Reporter& report_;
  bool all_ = true;
};

std::pair<std::size_t, std::size_t> range_of(const SuiteOptions& o, std::size_t default_n) {
  if (o.n != 0) return {o.n, o.n};
  return {1, o.max_n != 0 ? o.max_n : default_n};
}

// Uniformly sampled Moore families, from cached enumerations.
class FamilyPool {
 public:
  const std::vector<FamilyMask>& of(std::size_t n) {
    auto it = cache_.find(n);
    if (it == cache_.end()) it = cache_.emplace(n, enumerate_moore_masks(n)).first;
    return it->second;
  }
  MooreFamily sample(std::size_t n, oracles::Sampler& rng) {
    const auto& all = of(n);
    return family_from_mask(n, all[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(all.size()) - 1))]);
  }

 private:
  std::map<std::size_t, std::vector<FamilyMask>> cache_;
};

bool suite_table1(const SuiteOptions& o, Tally& check) {
  auto [lo, hi] = range_of(o, 4);
  for (std::size_t n = lo; n <= hi; ++n) {
    if (n < 1 || n > kMooreCounts.size()) {
      check("table1 n=" + std::to_string(n), false, "only rows 1..5 are reproducible");
      continue;
    }
    const auto t0 = Clock::now();
    const auto got = count_moore(n, EnumerationOptions{false, o.workers});
    check("table1 n=" + std::to_string(n), got == kMooreCounts[n - 1],
          "count " + std::to_string(got) + " expected " + std::to_string(kMooreCounts[n - 1]) + " in " +
              fmt_seconds(seconds_since(t0)));
  }
  bool refused = false;
  try {
    count_moore(6);
  } catch (const GuardError&) {
    refused = true;
  }
  check("table1 guard n=6", refused, "enumeration beyond n=5 refused without override");
  return check.all();
}

bool suite_bounds(const SuiteOptions& o, Tally& check) {
  auto [lo, hi] = range_of(o, 4);
  for (std::size_t n = lo; n <= hi; ++n) {
    const mpz_class count(std::to_string(count_moore(n, EnumerationOptions{false, o.workers})));
    const mpz_class lower = binom_lower_bound(n);
    mpz_class upper;
    mpz_ui_pow_ui(upper.get_mpz_t(), 2, 1ul << n);
    check("bounds n=" + std::to_string(n), lower <= count && count <= upper,
          lower.get_str() + " <= " + count.get_str() + " <= " + upper.get_str());
  }
  return check.all();
}

bool suite_finite_type(const SuiteOptions& o, Tally& check) {
  const std::size_t n = o.n != 0 ? o.n : 3;
  if (n > 4) throw GuardError("finite-type census is run for n <= 4");
  const Spectrum sp = Spectrum::indexed(n);

  std::size_t census = 0, oracle_agree = 0, total = 0;
  enumerate_moore(n, EnumerationOptions{false, o.workers}, [&](const MooreFamily& f) {
    const Star s(sp, f);
    const bool ft = is_finite_type(s);
    census += ft;
    oracle_agree += ft == finite_type_by_truncation(s, 1);
    ++total;
  });
  check("finite-type census n=" + std::to_string(n), census == (std::size_t{1} << n),
        std::to_string(census) + " principal up-filters, expected " + std::to_string(std::size_t{1} << n));
  check("finite-type truncation oracle", oracle_agree == total,
        std::to_string(oracle_agree) + "/" + std::to_string(total) + " families agree");

  std::set<MooreFamily> distinct;
  bool all_ft = true, product_route = true;
  oracles::Sampler rng(o.seed);
  for (Subset x = 0; x <= sp.full(); ++x) {
    const Star d = d_of_overring(sp, x);
    distinct.insert(d.family());
    all_ft &= is_finite_type(d);
    for (int k = 0; k < 20; ++k) {
      const ValVector f = rng.vector(sp, 5);
      product_route &= apply(d, f) == multiply(f, overring_vector(sp, x));
    }
  }
  check("overring stars distinct", distinct.size() == (std::size_t{1} << n),
        std::to_string(distinct.size()) + " distinct d_A");
  check("overring stars finite type", all_ft);
  check("overring star is I -> AI", product_route);
  return check.all();
}

bool suite_n2_shape(const SuiteOptions&, Tally& check) {
  const auto t0 = Clock::now();
  const bool iso = poset_isomorphic(star_lattice(2), cube_minus_singleton(), Orientation::Iso);
  check("n2-shape", iso, "7-element star lattice vs 2^{1,2,3} - {{1}} in " + fmt_seconds(seconds_since(t0)));
  return check.all();
}

mpq_class random_generator(oracles::Sampler& rng) {
  mpq_class g(1);
  const long primes[] = {2, 3, 5};
  for (long p : primes) {
    const int e = rng.uniform(-5, 5);
    mpz_class pe;
    mpz_ui_pow_ui(pe.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(std::abs(e)));
    if (e >= 0)
      g *= pe;
    else
      g /= pe;
  }
  if (rng.uniform(0, 1)) g = -g;
  g.canonicalize();
  return g;
}

zadapter::FracIdealSpec random_ideal(oracles::Sampler& rng) {
  std::vector<mpq_class> gens;
  const int k = rng.uniform(1, 3);
  for (int i = 0; i < k; ++i) gens.push_back(random_generator(rng));
  return zadapter::FracIdealSpec({2, 3, 5}, std::move(gens));
}

bool suite_oracles(const SuiteOptions& o, Tally& check) {
  oracles::Sampler rng(o.seed);

  int colon_ok = 0;
  for (int t = 0; t < 1000; ++t) {
    const auto i = random_ideal(rng), j = random_ideal(rng);
    colon_ok += zadapter::colon_oracle(i, j) ==
                colon(zadapter::vector_of_module(i), zadapter::vector_of_module(j));
  }
  check("colon oracle", colon_ok == 1000, std::to_string(colon_ok) + "/1000 pairs agree");

  // Dagger: generator sets of size <= 2 from one finite variant per support.
  const Spectrum sp2 = Spectrum::indexed(2);
  const int bound = 2;
  std::vector<ValVector> pool;
  for (Subset x = 0; x <= sp2.full(); ++x) {
    std::vector<ExtInt> e = {ExtInt(1), ExtInt(-2)};
    for (auto i : subset_indices(x)) e[i] = ExtInt::pos_inf();
    pool.emplace_back(sp2, e);
  }
  const auto window2 = oracles::window_vectors(sp2, bound);
  int dagger_sets = 0, dagger_ok = 0;
  auto check_gens = [&](std::vector<ValVector> gens) {
    const auto found = dagger_bounded_oracle(gens, sp2, bound);
    const auto family = dagger_supports(gens, sp2);
    std::set<std::string> in;
    for (const auto& v : found) in.insert(to_inline(v));
    bool agree = true;
    for (const auto& w : window2) agree &= (in.count(to_inline(w)) > 0) == family.contains(infinity_support(w));
    ++dagger_sets;
    dagger_ok += agree;
  };
  check_gens({});
  for (std::size_t a = 0; a < pool.size(); ++a) {
    check_gens({pool[a]});
    for (std::size_t b = a + 1; b < pool.size(); ++b) check_gens({pool[a], pool[b]});
  }
  check("dagger oracle", dagger_ok == dagger_sets,
        std::to_string(dagger_ok) + "/" + std::to_string(dagger_sets) + " generator sets agree");

  FamilyPool families;
  int apply_ok = 0, divisorial_ok = 0;
  const int samples = 300;
  for (int t = 0; t < samples; ++t) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 3));
    const Spectrum sp = Spectrum::indexed(n);
    const Star s(sp, families.sample(n, rng));
    const ValVector f = rng.vector(sp, 3);
    apply_ok += apply(s, f) == oracles::apply_by_window(s, f, 3);
    const ValVector j = rng.vector(sp, 3);
    divisorial_ok += apply(v_of(j), f) == divisorial_closure(j, f);
  }
  check("apply vs window minimum", apply_ok == samples, std::to_string(apply_ok) + "/" + std::to_string(samples));
  check("v(J) vs double colon", divisorial_ok == samples,
        std::to_string(divisorial_ok) + "/" + std::to_string(samples));
  return check.all();
}

bool suite_axioms(const SuiteOptions& o, Tally& check) {
  oracles::Sampler rng(o.seed);
  FamilyPool families;
  const int samples = 10000;
  int ext = 0, mono = 0, idem = 0, scal = 0, nucleus = 0, weak = 0, resid = 0;
  for (int t = 0; t < samples; ++t) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 4));
    const Spectrum sp = Spectrum::indexed(n);
    const Star s(sp, families.sample(n, rng));
    const ValVector f = rng.vector(sp, 10);
    const ValVector g = rng.vector(sp, 10);
    const ValVector fs = apply(s, f), gs = apply(s, g);

    ext += pointwise_leq(f, fs);
    const ValVector up = rng.raise(f, 5);
    mono += pointwise_leq(fs, apply(s, up));
    idem += apply(s, fs) == fs;
    const ValVector c = rng.finite_vector(sp, 10);
    scal += apply(s, scale(f, c)) == scale(fs, c);
    const ValVector fg = multiply(f, g);
    nucleus += apply(s, multiply(fs, gs)) == apply(s, fg);
    weak += pointwise_leq(multiply(fs, gs), apply(s, fg));

    // Half the time h sits near fg so the biconditional is exercised on both
    // sides.
    const ValVector h = rng.uniform(0, 1) ? rng.vector(sp, 10) : rng.raise(fg, 1, 0);
    const ValVector hs = apply(s, h);
    resid += pointwise_leq(fg, hs) == pointwise_leq(multiply(f, gs), hs);
  }
  auto line = [&](const char* name, int ok) {
    check(name, ok == samples, std::to_string(ok) + "/" + std::to_string(samples));
  };
  line("extensive", ext);
  line("monotone", mono);
  line("idempotent", idem);
  line("scale-equivariant", scal);
  line("nucleus (I*J*)* = (IJ)*", nucleus);
  line("nucleus I*J* <= (IJ)*", weak);
  line("residuation IJ <= H* iff IJ* <= H*", resid);
  return check.all();
}

}  // namespace

Suite parse_suite(std::string_view name) {
  if (name == "table1") return Suite::Table1;
  if (name == "bounds") return Suite::Bounds;
  if (name == "finite-type") return Suite::FiniteType;
  if (name == "n2-shape") return Suite::N2Shape;
  if (name == "oracles") return Suite::Oracles;
  if (name == "axioms") return Suite::Axioms;
  throw ParseError("unknown suite '" + std::string(name) +
                   "' (expected table1, bounds, finite-type, n2-shape, oracles or axioms)");
}

bool run_suite(Suite suite, const SuiteOptions& opts, const Reporter& report) {
  Tally check(report);
  switch (suite) {
    case Suite::Table1: return suite_table1(opts, check);
    case Suite::Bounds: return suite_bounds(opts, check);
    case Suite::FiniteType: return suite_finite_type(opts, check);
    case Suite::N2Shape: return suite_n2_shape(opts, check);
    case Suite::Oracles: return suite_oracles(opts, check);
    case Suite::Axioms: return suite_axioms(opts, check);
  }
  return false;
}

FinitePoset star_lattice(std::size_t n) {
  std::vector<MooreFamily> families;
  enumerate_moore(n, {}, [&](const MooreFamily& f) { families.push_back(f); });
  // star1 <= star2 iff family1 contains family2.
  return FinitePoset::of(families, [](const MooreFamily& a, const MooreFamily& b) {
    return std::includes(a.members().begin(), a.members().end(), b.members().begin(), b.members().end());
  });
}

FinitePoset cube_minus_singleton() {
  // Bit i stands for the element i+1; {1} is code 1.
  std::vector<Subset> elems;
  for (Subset s = 0; s < 8; ++s)
    if (s != 1) elems.push_back(s);
  return FinitePoset::of(elems, [](Subset a, Subset b) { return is_subset_of(a, b); });
}

}  // namespace semistar::verify

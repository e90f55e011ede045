#include "semistar/star.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "semistar/error.hpp"
#include "semistar/oracles.hpp"

namespace semistar {
namespace {

void require_spectrum(const Star& s, const ValVector& f) {
  if (!(s.spectrum() == f.spectrum())) throw MismatchError("module and star live over different spectra");
  if (f.is_zero()) throw DomainError("semistar operations act on nonzero modules");
}

bool entries_less(const ValVector& a, const ValVector& b) {
  return std::lexicographical_compare(a.entries().begin(), a.entries().end(), b.entries().begin(), b.entries().end());
}

}  // namespace

Star::Star(Spectrum spectrum, MooreFamily family)
    : spectrum_(std::move(spectrum)), family_(std::move(family)), min_member_(family_.least_member()) {
  if (family_.ground_size() != spectrum_.size())
    throw MismatchError("family on " + std::to_string(family_.ground_size()) + " points for a spectrum of " +
                        std::to_string(spectrum_.size()) + " primes");
}

Star Star::identity(Spectrum spectrum) {
  const auto n = spectrum.size();
  return Star(std::move(spectrum), MooreFamily::power_set(n));
}

Star Star::trivial_extension(Spectrum spectrum) {
  const auto n = spectrum.size();
  return Star(std::move(spectrum), MooreFamily::trivial(n));
}

Star star_from_moore(MooreFamily family, Spectrum spectrum) { return Star(std::move(spectrum), std::move(family)); }

MooreFamily moore_of_star(const Star& s) { return s.family(); }

bool star_leq(const Star& a, const Star& b) {
  if (!(a.spectrum() == b.spectrum())) throw MismatchError("stars over different spectra");
  return std::includes(a.family().members().begin(), a.family().members().end(), b.family().members().begin(),
                       b.family().members().end());
}

ValVector apply(const Star& s, const ValVector& f) {
  require_spectrum(s, f);
  const Subset target = closure(s.family(), infinity_support(f));
  std::vector<ExtInt> out(f.entries().begin(), f.entries().end());
  for (auto i : subset_indices(target)) out[i] = ExtInt::pos_inf();
  return ValVector(f.spectrum(), std::move(out));
}

bool is_closed(const Star& s, const ValVector& f) {
  require_spectrum(s, f);
  return s.family().contains(infinity_support(f));
}

MooreFamily dagger_supports(std::span<const ValVector> gens, const Spectrum& spectrum) {
  std::vector<Subset> supports;
  for (const auto& g : gens) {
    if (!(g.spectrum() == spectrum)) throw MismatchError("generator over a different spectrum");
    supports.push_back(infinity_support(g));
  }
  return moore_generate(supports, spectrum.size());
}

std::vector<ValVector> dagger_bounded_oracle(std::span<const ValVector> gens, const Spectrum& spectrum, int bound) {
  if (spectrum.size() > 3 || bound < 0 || bound > 4 || gens.size() > 4)
    throw GuardError("bounded dagger oracle is limited to n <= 3, 0 <= bound <= 4, at most 4 generators");
  for (const auto& g : gens) {
    if (!(g.spectrum() == spectrum)) throw MismatchError("generator over a different spectrum");
    if (g.is_zero()) throw DomainError("generators must be nonzero modules");
  }

  const auto window = oracles::window_vectors(spectrum, bound);
  std::map<std::vector<ExtInt>, std::size_t> index;
  for (std::size_t i = 0; i < window.size(); ++i)
    index.emplace(std::vector<ExtInt>(window[i].entries().begin(), window[i].entries().end()), i);

  // X^preceq inside the window.
  std::vector<bool> in(window.size(), false);
  std::vector<std::size_t> members;
  auto add = [&](std::size_t i) {
    if (!in[i]) {
      in[i] = true;
      members.push_back(i);
    }
  };
  for (std::size_t i = 0; i < window.size(); ++i)
    for (const auto& g : gens)
      if (preceq(window[i], g)) {
        add(i);
        break;
      }

  // (.)^inf: the empty infimum, then pairwise minima to a fixpoint. Minima of
  // window vectors stay in the window.
  add(index.at(std::vector<ExtInt>(spectrum.size(), ExtInt::pos_inf())));
  for (std::size_t done = 0; done < members.size(); ++done) {
    for (std::size_t j = 0; j < done; ++j) {
      const ValVector pair[] = {window[members[done]], window[members[j]]};
      const ValVector low = infimum(pair, spectrum);
      add(index.at(std::vector<ExtInt>(low.entries().begin(), low.entries().end())));
    }
  }

  std::vector<ValVector> out;
  for (std::size_t i = 0; i < window.size(); ++i)
    if (in[i]) out.push_back(window[i]);
  std::sort(out.begin(), out.end(), entries_less);
  return out;
}

Star star_meet(std::span<const Star> stars) {
  if (stars.empty()) throw DomainError("meet of an empty list of stars");
  MooreFamily acc = stars.front().family();
  for (const auto& s : stars.subspan(1)) {
    if (!(s.spectrum() == stars.front().spectrum())) throw MismatchError("stars over different spectra");
    acc = family_join(acc, s.family());
  }
  return Star(stars.front().spectrum(), std::move(acc));
}

Star star_join(std::span<const Star> stars) {
  if (stars.empty()) throw DomainError("join of an empty list of stars");
  MooreFamily acc = stars.front().family();
  for (const auto& s : stars.subspan(1)) {
    if (!(s.spectrum() == stars.front().spectrum())) throw MismatchError("stars over different spectra");
    acc = family_meet(acc, s.family());
  }
  return Star(stars.front().spectrum(), std::move(acc));
}

Star v_of(const ValVector& j) {
  if (j.is_zero()) throw DomainError("divisorial closure needs a nonzero module");
  const Subset support = infinity_support(j);
  return Star(j.spectrum(), moore_generate(std::span(&support, 1), j.size()));
}

ValVector divisorial_closure(const ValVector& j, const ValVector& f) {
  if (j.is_zero() || f.is_zero()) throw DomainError("divisorial closure needs nonzero modules");
  const ValVector inner = colon(j, f);
  if (inner.is_zero()) return ValVector::top(j.spectrum());
  return colon(j, inner);
}

ValVector overring_vector(const Spectrum& spectrum, Subset localized) {
  return ValVector::iota(spectrum, spectrum.full() & ~localized);
}

Star d_of_overring(const Spectrum& spectrum, Subset localized) {
  if (!is_subset_of(localized, spectrum.full())) throw DomainError("overring primes outside the spectrum");
  return Star(spectrum, MooreFamily::up_filter(spectrum.size(), spectrum.full() & ~localized));
}

bool is_finite_type(const Star& s) { return principal_upfilter_base(s.family()).has_value(); }

bool finite_type_by_truncation(const Star& s, int bound) {
  if (bound < 0) throw DomainError("truncation bound must be nonnegative");
  const int lo = bound, hi = bound + 1;
  auto truncate = [](const ValVector& f, int k) {
    std::vector<ExtInt> e(f.entries().begin(), f.entries().end());
    for (auto& x : e)
      if (x.is_pos_inf()) x = k;
    return ValVector(f.spectrum(), std::move(e));
  };
  for (const auto& f : oracles::window_vectors(s.spectrum(), bound)) {
    const ValVector a = apply(s, truncate(f, lo));
    const ValVector b = apply(s, truncate(f, hi));
    // Entries that keep growing with k tend to POS_INF; the others are stable.
    std::vector<ExtInt> limit(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) limit[i] = b[i] > a[i] ? ExtInt::pos_inf() : b[i];
    if (!(ValVector(f.spectrum(), std::move(limit)) == apply(s, f))) return false;
  }
  return true;
}

std::vector<std::string> Classification::labels() const {
  std::vector<std::string> out;
  if (identity) out.emplace_back("identity");
  if (trivial_extension) out.emplace_back("trivial-extension");
  if (finite_type) out.emplace_back("finite-type");
  if (divisorially_generated) out.emplace_back("divisorially-generated");
  if (overring_base) out.push_back("overring-induced X=" + subset_to_string(*overring_base));
  return out;
}

Classification classify(const Star& s) {
  const std::size_t n = s.spectrum().size();
  Classification c;
  c.trivial_extension = s.family().size() == 1;
  c.identity = n < 63 && s.family().size() == (std::size_t{1} << n);
  c.divisorially_generated = s.family().size() == 2 || s.family().size() == 3;
  if (auto base = principal_upfilter_base(s.family())) {
    c.finite_type = true;
    c.overring_base = s.spectrum().full() & ~*base;
  }
  return c;
}

}  // namespace semistar

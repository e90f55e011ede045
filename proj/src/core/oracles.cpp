#include "semistar/oracles.hpp"

#include <algorithm>
#include <set>

#include "semistar/error.hpp"

namespace semistar::oracles {

std::vector<ValVector> window_vectors(const Spectrum& spectrum, int bound) {
  if (bound < 0) throw DomainError("window bound must be nonnegative");
  const std::size_t n = spectrum.size();
  const std::size_t base = static_cast<std::size_t>(2 * bound + 2);
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= base;
    if (total > 1'000'000) throw GuardError("window has more than a million vectors");
  }
  std::vector<ExtInt> values;
  for (int v = -bound; v <= bound; ++v) values.emplace_back(v);
  values.push_back(ExtInt::pos_inf());

  // Odometer with the last coordinate fastest gives lexicographic order.
  std::vector<ValVector> out;
  out.reserve(total);
  std::vector<std::size_t> digit(n, 0);
  for (std::size_t k = 0; k < total; ++k) {
    std::vector<ExtInt> e(n);
    for (std::size_t i = 0; i < n; ++i) e[i] = values[digit[i]];
    out.emplace_back(spectrum, std::move(e));
    for (std::size_t i = n; i-- > 0;) {
      if (++digit[i] < base) break;
      digit[i] = 0;
    }
  }
  return out;
}

ValVector apply_by_window(const Star& s, const ValVector& f, int bound) {
  if (f.is_zero()) throw DomainError("semistar operations act on nonzero modules");
  for (auto e : f.entries())
    if (e.is_finite() && (e.value() < -bound || e.value() > bound))
      throw DomainError("module " + to_inline(f) + " lies outside the window");
  std::vector<ValVector> above;
  for (auto& g : window_vectors(s.spectrum(), bound))
    if (pointwise_leq(f, g) && is_closed(s, g)) above.push_back(std::move(g));
  return infimum(above, s.spectrum());
}

ClosedSetReport check_closed_set(std::span<const Subset> supports, std::size_t n, int bound) {
  const Spectrum spectrum = Spectrum::indexed(n);
  const std::set<Subset> allowed(supports.begin(), supports.end());
  auto in_family = [&](const ValVector& v) { return allowed.count(infinity_support(v)) > 0; };

  // C inside the window, and inside a doubled window so colon results (whose
  // entries are differences of window entries) can be looked up literally.
  std::vector<ValVector> members;
  for (auto& v : window_vectors(spectrum, bound))
    if (in_family(v)) members.push_back(std::move(v));
  std::set<std::vector<ExtInt>> wide;
  for (const auto& v : window_vectors(spectrum, 2 * bound))
    if (in_family(v)) wide.emplace(v.entries().begin(), v.entries().end());
  auto member = [&](const ValVector& v) {
    return v.is_zero() || wide.count(std::vector<ExtInt>(v.entries().begin(), v.entries().end())) > 0;
  };

  ClosedSetReport report;
  report.intersections = member(infimum({}, spectrum));
  for (std::size_t i = 0; i < members.size() && report.intersections; ++i)
    for (std::size_t j = i + 1; j < members.size() && report.intersections; ++j) {
      const ValVector pair[] = {members[i], members[j]};
      report.intersections = member(infimum(pair, spectrum));
    }
  const auto window = window_vectors(spectrum, bound);
  for (std::size_t i = 0; i < members.size() && report.colons; ++i)
    for (std::size_t j = 0; j < window.size() && report.colons; ++j) {
      const ValVector q = colon(members[i], window[j]);
      report.colons = q.is_zero() || member(q);
    }
  return report;
}

int Sampler::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

ValVector Sampler::vector(const Spectrum& spectrum, int bound, int inf_percent) {
  std::vector<ExtInt> e(spectrum.size());
  for (auto& x : e) x = uniform(0, 99) < inf_percent ? ExtInt::pos_inf() : ExtInt(uniform(-bound, bound));
  return ValVector(spectrum, std::move(e));
}

ValVector Sampler::finite_vector(const Spectrum& spectrum, int bound) { return vector(spectrum, bound, 0); }

ValVector Sampler::raise(const ValVector& f, int bound, int inf_percent) {
  std::vector<ExtInt> e(f.entries().begin(), f.entries().end());
  for (auto& x : e) {
    if (x.is_pos_inf()) continue;
    x = uniform(0, 99) < inf_percent ? ExtInt::pos_inf() : x + ExtInt(uniform(0, bound));
  }
  return ValVector(f.spectrum(), std::move(e));
}

}  // namespace semistar::oracles

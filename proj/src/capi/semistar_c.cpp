#include "semistar/semistar.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "semistar/error.hpp"
#include "semistar/io.hpp"
#include "semistar/moore.hpp"
#include "semistar/star.hpp"
#include "semistar/verify.hpp"
#include "semistar/zadapter.hpp"

using namespace semistar;

struct ss_vector {
  ValVector value;
};
struct ss_family {
  MooreFamily value;
};
struct ss_star {
  Star value;
};

namespace {

thread_local std::string last_error;

ss_status fail(ss_status code, const char* what) {
  last_error = what;
  return code;
}

// Runs `body`, translating library exceptions into status codes.
template <class Body>
ss_status guarded(Body&& body) {
  try {
    body();
    last_error.clear();
    return SS_OK;
  } catch (const OverflowError& e) {
    return fail(SS_ERR_OVERFLOW, e.what());
  } catch (const DomainError& e) {
    return fail(SS_ERR_DOMAIN, e.what());
  } catch (const GuardError& e) {
    return fail(SS_ERR_GUARD, e.what());
  } catch (const MismatchError& e) {
    return fail(SS_ERR_MISMATCH, e.what());
  } catch (const ParseError& e) {
    return fail(SS_ERR_PARSE, e.what());
  } catch (const IoError& e) {
    return fail(SS_ERR_IO, e.what());
  } catch (const std::bad_alloc&) {
    return fail(SS_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SS_ERR_INTERNAL, e.what());
  }
}

#define SS_REQUIRE(cond)                                              \
  do {                                                                \
    if (!(cond)) return fail(SS_ERR_ARGUMENT, "invalid argument: " #cond); \
  } while (0)

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::optional<Spectrum> spectrum_from_csv(const char* csv) {
  if (!csv || !*csv) return std::nullopt;
  std::vector<std::string> labels;
  std::string text(csv), item;
  for (std::size_t start = 0;;) {
    auto comma = text.find(',', start);
    item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    while (!item.empty() && item.front() == ' ') item.erase(0, 1);
    while (!item.empty() && item.back() == ' ') item.pop_back();
    if (item.empty()) throw ParseError("empty prime label in '" + text + "'");
    labels.push_back(item);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return Spectrum(std::move(labels));
}

std::vector<Star> unwrap(const ss_star* const* stars, size_t count) {
  std::vector<Star> out;
  out.reserve(count);
  for (size_t i = 0; i < count; ++i) {
    if (!stars[i]) throw DomainError("null star handle");
    out.push_back(stars[i]->value);
  }
  return out;
}

std::string render_hasse(const std::vector<Star>& stars, ss_format format) {
  if (stars.size() > kPosetGuard)
    throw GuardError("star lattice has " + std::to_string(stars.size()) + " elements; the limit is " +
                     std::to_string(kPosetGuard));
  if (format == SS_FORMAT_DOT) return io::hasse_dot(stars);
  if (format == SS_FORMAT_JSON) return io::hasse_json(stars);
  throw DomainError("Hasse diagrams are rendered as DOT or JSON");
}

}  // namespace

extern "C" {

const char* ss_last_error(void) { return last_error.c_str(); }

const char* ss_status_name(ss_status status) {
  switch (status) {
    case SS_OK: return "ok";
    case SS_ERR_OVERFLOW: return "overflow";
    case SS_ERR_DOMAIN: return "domain error";
    case SS_ERR_GUARD: return "guard refusal";
    case SS_ERR_MISMATCH: return "spectrum mismatch";
    case SS_ERR_PARSE: return "parse error";
    case SS_ERR_IO: return "i/o error";
    case SS_ERR_ARGUMENT: return "invalid argument";
    case SS_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void ss_string_free(char* s) { std::free(s); }

// --- vectors -----------------------------------------------------------------

ss_status ss_vector_parse(const char* text, const char* primes_csv, ss_vector** out) {
  SS_REQUIRE(text && out);
  return guarded([&] { *out = new ss_vector{io::parse_vector(text, spectrum_from_csv(primes_csv))}; });
}

void ss_vector_free(ss_vector* v) { delete v; }

ss_status ss_vector_format(const ss_vector* v, ss_format format, char** out) {
  SS_REQUIRE(v && out);
  return guarded([&] {
    *out = dup_string(format == SS_FORMAT_JSON ? io::vector_to_json(v->value) : to_inline(v->value));
  });
}

int ss_vector_is_zero(const ss_vector* v) { return v && v->value.is_zero() ? 1 : 0; }

ss_status ss_vector_mul(const ss_vector* f, const ss_vector* g, ss_vector** out) {
  SS_REQUIRE(f && g && out);
  return guarded([&] { *out = new ss_vector{multiply(f->value, g->value)}; });
}

ss_status ss_vector_colon(const ss_vector* f, const ss_vector* g, ss_vector** out) {
  SS_REQUIRE(f && g && out);
  return guarded([&] { *out = new ss_vector{colon(f->value, g->value)}; });
}

ss_status ss_vector_inf_support(const ss_vector* f, uint64_t* out) {
  SS_REQUIRE(f && out);
  return guarded([&] { *out = infinity_support(f->value); });
}

// --- families ----------------------------------------------------------------

ss_status ss_family_parse(const char* text, ss_family** out) {
  SS_REQUIRE(text && out);
  return guarded([&] { *out = new ss_family{io::family_from_json(text)}; });
}

ss_status ss_family_generate(unsigned n, const uint64_t* subsets, size_t count, ss_family** out) {
  SS_REQUIRE(out && (subsets || count == 0));
  return guarded([&] { *out = new ss_family{moore_generate(std::span(subsets, count), n)}; });
}

ss_status ss_is_moore(unsigned n, const uint64_t* subsets, size_t count, int* out) {
  SS_REQUIRE(out && (subsets || count == 0));
  return guarded([&] { *out = is_moore(std::span(subsets, count), n) ? 1 : 0; });
}

void ss_family_free(ss_family* f) { delete f; }

ss_status ss_family_format(const ss_family* f, char** out) {
  SS_REQUIRE(f && out);
  return guarded([&] { *out = dup_string(io::family_to_json(f->value)); });
}

size_t ss_family_size(const ss_family* f) { return f ? f->value.size() : 0; }

uint64_t ss_family_member(const ss_family* f, size_t index) {
  return f && index < f->value.size() ? f->value.members()[index] : 0;
}

ss_status ss_family_closure(const ss_family* f, uint64_t subset, uint64_t* out) {
  SS_REQUIRE(f && out);
  return guarded([&] { *out = closure(f->value, subset); });
}

ss_status ss_count_moore(unsigned n, int force, unsigned workers, uint64_t* out) {
  SS_REQUIRE(out);
  return guarded([&] { *out = count_moore(n, EnumerationOptions{force != 0, workers}); });
}

ss_status ss_enumerate_moore(unsigned n, int force, unsigned workers, ss_family_callback callback, void* user) {
  SS_REQUIRE(callback);
  return guarded([&] {
    const auto masks = enumerate_moore_masks(n, EnumerationOptions{force != 0, workers});
    for (auto m : masks) {
      const ss_family handle{family_from_mask(n, m)};
      if (callback(&handle, user) != 0) break;
    }
  });
}

ss_status ss_binom_lower_bound(unsigned n, char** out) {
  SS_REQUIRE(out);
  return guarded([&] { *out = dup_string(binom_lower_bound(n).get_str()); });
}

// --- stars -------------------------------------------------------------------

ss_status ss_star_parse(const char* text, const char* primes_csv, ss_star** out) {
  SS_REQUIRE(text && out);
  return guarded([&] { *out = new ss_star{io::star_from_json(text, spectrum_from_csv(primes_csv))}; });
}

ss_status ss_star_from_family(const ss_family* f, const char* primes_csv, ss_star** out) {
  SS_REQUIRE(f && out);
  return guarded([&] {
    auto sp = spectrum_from_csv(primes_csv);
    *out = new ss_star{star_from_moore(f->value, sp ? *sp : Spectrum::indexed(f->value.ground_size()))};
  });
}

void ss_star_free(ss_star* s) { delete s; }

ss_status ss_star_format(const ss_star* s, char** out) {
  SS_REQUIRE(s && out);
  return guarded([&] { *out = dup_string(io::star_to_json(s->value)); });
}

ss_status ss_star_family(const ss_star* s, ss_family** out) {
  SS_REQUIRE(s && out);
  return guarded([&] { *out = new ss_family{moore_of_star(s->value)}; });
}

ss_status ss_star_apply(const ss_star* s, const ss_vector* f, ss_vector** out) {
  SS_REQUIRE(s && f && out);
  return guarded([&] { *out = new ss_vector{apply(s->value, f->value)}; });
}

ss_status ss_star_is_closed(const ss_star* s, const ss_vector* f, int* out) {
  SS_REQUIRE(s && f && out);
  return guarded([&] { *out = is_closed(s->value, f->value) ? 1 : 0; });
}

ss_status ss_star_meet(const ss_star* const* stars, size_t count, ss_star** out) {
  SS_REQUIRE(out && (stars || count == 0));
  return guarded([&] { *out = new ss_star{star_meet(unwrap(stars, count))}; });
}

ss_status ss_star_join(const ss_star* const* stars, size_t count, ss_star** out) {
  SS_REQUIRE(out && (stars || count == 0));
  return guarded([&] { *out = new ss_star{star_join(unwrap(stars, count))}; });
}

ss_status ss_star_v_of(const ss_vector* j, ss_star** out) {
  SS_REQUIRE(j && out);
  return guarded([&] { *out = new ss_star{v_of(j->value)}; });
}

ss_status ss_star_d_of(const char* primes_csv, unsigned n, uint64_t localized, ss_star** out) {
  SS_REQUIRE(out);
  return guarded([&] {
    auto sp = spectrum_from_csv(primes_csv);
    if (sp && n != 0 && sp->size() != n) throw MismatchError("prime list and n disagree");
    *out = new ss_star{d_of_overring(sp ? *sp : Spectrum::indexed(n), localized)};
  });
}

ss_status ss_star_is_finite_type(const ss_star* s, int* out) {
  SS_REQUIRE(s && out);
  return guarded([&] { *out = is_finite_type(s->value) ? 1 : 0; });
}

ss_status ss_star_classify(const ss_star* s, char** out) {
  SS_REQUIRE(s && out);
  return guarded([&] {
    std::string joined;
    for (const auto& l : classify(s->value).labels()) joined += (joined.empty() ? "" : ", ") + l;
    *out = dup_string(joined);
  });
}

ss_status ss_dagger_supports(const ss_vector* const* gens, size_t count, ss_family** out) {
  SS_REQUIRE(out && gens && count > 0);
  return guarded([&] {
    std::vector<ValVector> vs;
    for (size_t i = 0; i < count; ++i) {
      if (!gens[i]) throw DomainError("null vector handle");
      vs.push_back(gens[i]->value);
    }
    *out = new ss_family{dagger_supports(vs, vs.front().spectrum())};
  });
}

ss_status ss_hasse_lattice(unsigned n, ss_format format, char** out) {
  SS_REQUIRE(out);
  return guarded([&] {
    if (n > 3) throw GuardError("the star lattice on " + std::to_string(n) + " primes exceeds 200 elements");
    const Spectrum sp = Spectrum::indexed(n);
    std::vector<Star> stars;
    enumerate_moore(n, {}, [&](const MooreFamily& f) { stars.emplace_back(sp, f); });
    *out = dup_string(render_hasse(stars, format));
  });
}

ss_status ss_hasse_stars(const ss_star* const* stars, size_t count, ss_format format, char** out) {
  SS_REQUIRE(out && (stars || count == 0));
  return guarded([&] { *out = dup_string(render_hasse(unwrap(stars, count), format)); });
}

// --- adapter -----------------------------------------------------------------

ss_status ss_adapter_vector(const char* primes_csv, const char* gens_csv, ss_vector** out) {
  SS_REQUIRE(primes_csv && gens_csv && out);
  return guarded([&] {
    const zadapter::FracIdealSpec spec(zadapter::parse_primes(primes_csv), zadapter::parse_rationals(gens_csv));
    *out = new ss_vector{zadapter::vector_of_module(spec)};
  });
}

ss_status ss_adapter_member(const char* primes_csv, const char* gens_csv, const char* rational, int* out) {
  SS_REQUIRE(primes_csv && gens_csv && rational && out);
  return guarded([&] {
    const zadapter::FracIdealSpec spec(zadapter::parse_primes(primes_csv), zadapter::parse_rationals(gens_csv));
    *out = zadapter::module_member(zadapter::vector_of_module(spec), zadapter::parse_rational(rational)) ? 1 : 0;
  });
}

// --- verification ------------------------------------------------------------

ss_status ss_verify(const char* suite, unsigned n, unsigned max_n, unsigned workers, ss_report_callback callback,
                    void* user, int* all_passed) {
  SS_REQUIRE(suite && all_passed);
  return guarded([&] {
    verify::SuiteOptions opts;
    opts.n = n;
    opts.max_n = max_n;
    opts.workers = workers;
    const bool ok = verify::run_suite(verify::parse_suite(suite), opts, [&](const verify::Check& c) {
      if (callback) callback(c.name.c_str(), c.passed ? 1 : 0, c.detail.c_str(), user);
    });
    *all_passed = ok ? 1 : 0;
  });
}

}  // extern "C"

// semistar: command-line front end over the C interface.
//
// Exit codes: 0 success, 1 failed assertion, 2 guard refusal, 3 I/O error,
// 4 malformed input.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "semistar/semistar.h"

namespace {

enum Exit { kOk = 0, kAssertion = 1, kGuard = 2, kIo = 3, kMalformed = 4 };

struct Failure {
  int code;
  std::string message;
};

int exit_code(ss_status s) {
  switch (s) {
    case SS_OK: return kOk;
    case SS_ERR_GUARD: return kGuard;
    case SS_ERR_IO: return kIo;
    default: return kMalformed;
  }
}

void check(ss_status s) {
  if (s != SS_OK) throw Failure{exit_code(s), std::string(ss_status_name(s)) + ": " + ss_last_error()};
}

struct StringDeleter {
  void operator()(char* p) const { ss_string_free(p); }
};
struct VectorDeleter {
  void operator()(ss_vector* p) const { ss_vector_free(p); }
};
struct FamilyDeleter {
  void operator()(ss_family* p) const { ss_family_free(p); }
};
struct StarDeleter {
  void operator()(ss_star* p) const { ss_star_free(p); }
};
using VectorPtr = std::unique_ptr<ss_vector, VectorDeleter>;
using FamilyPtr = std::unique_ptr<ss_family, FamilyDeleter>;
using StarPtr = std::unique_ptr<ss_star, StarDeleter>;

std::string take(char* s) {
  std::unique_ptr<char, StringDeleter> owner(s);
  return owner ? std::string(owner.get()) : std::string();
}

const char* opt_c(const std::string& s) { return s.empty() ? nullptr : s.c_str(); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kIo, "cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

VectorPtr parse_vector(const std::string& text, const std::string& primes) {
  ss_vector* v = nullptr;
  check(ss_vector_parse(text.c_str(), opt_c(primes), &v));
  return VectorPtr(v);
}

StarPtr parse_star(const std::string& text, const std::string& primes) {
  ss_star* s = nullptr;
  check(ss_star_parse(text.c_str(), opt_c(primes), &s));
  return StarPtr(s);
}

std::string format_vector(const ss_vector* v, bool json) {
  char* out = nullptr;
  check(ss_vector_format(v, json ? SS_FORMAT_JSON : SS_FORMAT_INLINE, &out));
  return take(out);
}

std::string format_star(const ss_star* s) {
  char* out = nullptr;
  check(ss_star_format(s, &out));
  return take(out);
}

std::uint64_t parse_subset(const std::string& csv) {
  std::uint64_t bits = 0;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    unsigned long idx = 0;
    try {
      idx = std::stoul(item, &used);
    } catch (const std::exception&) {
      throw Failure{kMalformed, "subset index '" + item + "' is not a number"};
    }
    if (used != item.size() || idx >= 64) throw Failure{kMalformed, "subset index '" + item + "' out of range"};
    bits |= std::uint64_t{1} << idx;
  }
  return bits;
}

// Writes to --out when given, stdout otherwise.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty()) return;
    file_.open(path, std::ios::binary | std::ios::trunc);
    if (!file_) throw Failure{kIo, "cannot open " + path + " for writing"};
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }
  void finish() {
    stream().flush();
    if (!stream()) throw Failure{kIo, "write failed"};
  }

 private:
  std::ofstream file_;
};

struct Options {
  unsigned n = 0;
  unsigned max_n = 0;
  unsigned workers = 1;
  bool force = false;
  bool count_only = false;
  bool json = false;
  std::string out;
  std::string suite;
  std::string subverb;
  std::vector<std::string> families;
  std::vector<std::string> star_files;
  std::string module;
  std::string primes;
  std::string subset;
  std::string gens;
  std::optional<std::string> member;
  std::string format = "dot";
  std::optional<unsigned> hasse_n;
};

int cmd_count(const Options& o) {
  std::uint64_t count = 0;
  check(ss_count_moore(o.n, o.force, o.workers, &count));
  std::cout << count << '\n';
  return kOk;
}

int cmd_enumerate(const Options& o) {
  if (o.count_only) {
    std::uint64_t count = 0;
    check(ss_count_moore(o.n, o.force, o.workers, &count));
    Output out(o.out);
    out.stream() << count << '\n';
    out.finish();
    return kOk;
  }
  Output out(o.out);
  struct Ctx {
    std::ostream* os;
    ss_status status = SS_OK;
  } ctx{&out.stream()};
  auto sink = [](const ss_family* f, void* user) -> int {
    auto* c = static_cast<Ctx*>(user);
    char* text = nullptr;
    c->status = ss_family_format(f, &text);
    if (c->status != SS_OK) return 1;
    *c->os << take(text) << '\n';
    return *c->os ? 0 : 1;
  };
  check(ss_enumerate_moore(o.n, o.force, o.workers, sink, &ctx));
  check(ctx.status);
  out.finish();
  return kOk;
}

int cmd_verify(const Options& o) {
  int all = 0;
  auto report = [](const char* name, int passed, const char* detail, void*) {
    std::cout << (passed ? "PASS " : "FAIL ") << name;
    if (detail && *detail) std::cout << "  " << detail;
    std::cout << '\n';
  };
  check(ss_verify(o.suite.c_str(), o.n, o.max_n, o.workers, report, nullptr, &all));
  std::cout << (all ? "all checks passed" : "some checks failed") << '\n';
  return all ? kOk : kAssertion;
}

std::vector<StarPtr> gather_stars(const Options& o) {
  std::vector<StarPtr> stars;
  for (const auto& f : o.families) stars.push_back(parse_star(f, o.primes));
  for (const auto& path : o.star_files) stars.push_back(parse_star(read_file(path), o.primes));
  return stars;
}

StarPtr single_star(const Options& o) {
  auto stars = gather_stars(o);
  if (stars.size() != 1) throw Failure{kMalformed, "exactly one --family or --star-file is required"};
  return std::move(stars.front());
}

int cmd_star(const Options& o) {
  const std::string& verb = o.subverb;
  if (verb == "apply") {
    auto star = single_star(o);
    if (o.module.empty()) throw Failure{kMalformed, "--module is required"};
    auto f = parse_vector(o.module, o.primes);
    ss_vector* r = nullptr;
    check(ss_star_apply(star.get(), f.get(), &r));
    VectorPtr result(r);
    std::cout << format_vector(result.get(), o.json) << '\n';
  } else if (verb == "meet" || verb == "join") {
    auto stars = gather_stars(o);
    if (stars.empty()) throw Failure{kMalformed, "at least one --family or --star-file is required"};
    std::vector<const ss_star*> raw;
    for (const auto& s : stars) raw.push_back(s.get());
    ss_star* r = nullptr;
    check(verb == "meet" ? ss_star_meet(raw.data(), raw.size(), &r) : ss_star_join(raw.data(), raw.size(), &r));
    StarPtr result(r);
    std::cout << format_star(result.get()) << '\n';
  } else if (verb == "classify") {
    auto star = single_star(o);
    char* labels = nullptr;
    check(ss_star_classify(star.get(), &labels));
    std::cout << take(labels) << '\n';
  } else if (verb == "finite-type") {
    auto star = single_star(o);
    int yes = 0;
    check(ss_star_is_finite_type(star.get(), &yes));
    std::cout << (yes ? "true" : "false") << '\n';
  } else if (verb == "v-of") {
    if (o.module.empty()) throw Failure{kMalformed, "--module is required"};
    auto j = parse_vector(o.module, o.primes);
    ss_star* r = nullptr;
    check(ss_star_v_of(j.get(), &r));
    StarPtr result(r);
    std::cout << format_star(result.get()) << '\n';
  } else if (verb == "d-of") {
    if (o.primes.empty() && o.n == 0) throw Failure{kMalformed, "--primes or --n is required"};
    ss_star* r = nullptr;
    check(ss_star_d_of(opt_c(o.primes), o.n, parse_subset(o.subset), &r));
    StarPtr result(r);
    std::cout << format_star(result.get()) << '\n';
  } else {
    throw Failure{kMalformed, "unknown star operation '" + verb + "'"};
  }
  return kOk;
}

int cmd_adapter(const Options& o) {
  if (o.member) {
    int yes = 0;
    check(ss_adapter_member(o.primes.c_str(), o.gens.c_str(), o.member->c_str(), &yes));
    std::cout << (yes ? "true" : "false") << '\n';
    return kOk;
  }
  ss_vector* v = nullptr;
  check(ss_adapter_vector(o.primes.c_str(), o.gens.c_str(), &v));
  VectorPtr result(v);
  std::cout << format_vector(result.get(), o.json) << '\n';
  return kOk;
}

int cmd_hasse(const Options& o) {
  ss_format fmt = SS_FORMAT_DOT;
  if (o.format == "json")
    fmt = SS_FORMAT_JSON;
  else if (o.format != "dot")
    throw Failure{kMalformed, "--format must be dot or json"};
  char* text = nullptr;
  if (o.hasse_n) {
    if (!o.star_files.empty() || !o.families.empty())
      throw Failure{kMalformed, "give either n or star inputs, not both"};
    check(ss_hasse_lattice(*o.hasse_n, fmt, &text));
  } else {
    auto stars = gather_stars(o);
    if (stars.empty()) throw Failure{kMalformed, "give n or at least one --star-file"};
    std::vector<const ss_star*> raw;
    for (const auto& s : stars) raw.push_back(s.get());
    check(ss_hasse_stars(raw.data(), raw.size(), fmt, &text));
  }
  std::string body = take(text);
  std::cout << body;
  if (body.empty() || body.back() != '\n') std::cout << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Semistar operations on Dedekind domains with finitely many primes"};
  app.require_subcommand(1);
  Options o;

  auto* count = app.add_subcommand("count", "Count Moore families on n points");
  count->add_option("n", o.n, "number of primes")->required();
  count->add_flag("--force", o.force, "allow n = 6");
  count->add_option("--workers", o.workers, "worker threads");

  auto* enumerate = app.add_subcommand("enumerate", "Stream every Moore family on n points");
  enumerate->add_option("n", o.n, "number of primes")->required();
  enumerate->add_flag("--count-only", o.count_only, "print only the number of families");
  enumerate->add_option("--out", o.out, "output file (default stdout)");
  enumerate->add_flag("--force", o.force, "allow n = 6");
  enumerate->add_option("--workers", o.workers, "worker threads");

  auto* verify = app.add_subcommand("verify", "Run a self-checking suite");
  verify->add_option("suite", o.suite, "table1, bounds, finite-type, n2-shape, oracles or axioms")->required();
  verify->add_option("n", o.n, "single size to check");
  verify->add_option("--max-n", o.max_n, "largest size in the default range");
  verify->add_option("--workers", o.workers, "worker threads");

  auto* star = app.add_subcommand("star", "Semistar algebra");
  star->add_option("operation", o.subverb, "apply, meet, join, classify, finite-type, v-of or d-of")->required();
  star->add_option("--family", o.families, "inline family or star record (repeatable)");
  star->add_option("--star-file", o.star_files, "star record file (repeatable)");
  star->add_option("--module", o.module, "valuation vector, e.g. (0,inf)");
  star->add_option("--primes", o.primes, "comma-separated prime labels");
  star->add_option("--n", o.n, "number of primes (d-of without --primes)");
  star->add_option("--subset", o.subset, "localized prime indices for d-of, e.g. 0,2");
  star->add_flag("--json", o.json, "print vectors as records");

  auto* adapter = app.add_subcommand("adapter", "Fractional ideals of Z localized at finitely many primes");
  adapter->add_option("--primes", o.primes, "comma-separated primes")->required();
  adapter->add_option("--gens", o.gens, "comma-separated generators a/b")->required();
  adapter->add_option("--member", o.member, "test whether a rational lies in the module");
  adapter->add_flag("--json", o.json, "print the vector as a record");

  auto* hasse = app.add_subcommand("hasse", "Hasse diagram of a star lattice");
  hasse->add_option("n", o.hasse_n, "number of primes (at most 3)");
  hasse->add_option("--star-file", o.star_files, "star record file (repeatable)");
  hasse->add_option("--family", o.families, "inline family or star record (repeatable)");
  hasse->add_option("--primes", o.primes, "labels for bare family records");
  hasse->add_option("--format", o.format, "dot or json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kMalformed;
  }

  try {
    if (*count) return cmd_count(o);
    if (*enumerate) return cmd_enumerate(o);
    if (*verify) return cmd_verify(o);
    if (*star) return cmd_star(o);
    if (*adapter) return cmd_adapter(o);
    if (*hasse) return cmd_hasse(o);
  } catch (const Failure& f) {
    std::cerr << "semistar: " << f.message << '\n';
    return f.code;
  }
  return kMalformed;
}

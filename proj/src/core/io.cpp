#include "semistar/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>

#include "semistar/error.hpp"
#include "semistar/poset.hpp"

namespace semistar::io {
namespace {

using nlohmann::json;

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-'; }

json parse_json(std::string_view text) {
  try {
    return json::parse(normalize_relaxed_json(text));
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed record: ") + e.what());
  }
}

bool is_decimal(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

json labels_to_json(const Spectrum& s) {
  json out = json::array();
  for (const auto& l : s.labels()) {
    if (is_decimal(l) && l.size() < 19)
      out.push_back(std::stoll(l));
    else
      out.push_back(l);
  }
  return out;
}

Spectrum labels_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("primes must be a list");
  std::vector<std::string> labels;
  for (const auto& x : j) {
    if (x.is_string())
      labels.push_back(x.get<std::string>());
    else if (x.is_number_integer())
      labels.push_back(std::to_string(x.get<long long>()));
    else
      throw ParseError("prime labels must be strings or integers");
  }
  return Spectrum(std::move(labels));
}

json members_json(const MooreFamily& f) {
  json out = json::array();
  for (auto m : f.members()) out.push_back(subset_indices(m));
  return out;
}

MooreFamily family_from(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("members")) throw ParseError("family record needs n and members");
  if (!j["n"].is_number_integer() || j["n"].get<long long>() < 1) throw ParseError("n must be a positive integer");
  const auto n = j["n"].get<std::size_t>();
  if (n > kMaxGround) throw GuardError("ground set larger than 64 points");
  if (!j["members"].is_array()) throw ParseError("members must be a list of index lists");
  std::vector<Subset> members;
  for (const auto& m : j["members"]) {
    if (!m.is_array()) throw ParseError("each member must be a list of indices");
    Subset s = 0;
    for (const auto& idx : m) {
      if (!idx.is_number_integer()) throw ParseError("member indices must be integers");
      const auto i = idx.get<long long>();
      if (i < 0 || static_cast<std::size_t>(i) >= n) throw ParseError("member index " + std::to_string(i) + " out of range");
      s |= Subset{1} << i;
    }
    members.push_back(s);
  }
  return MooreFamily(n, std::move(members));
}

ExtInt entry_from(const json& x) {
  if (x.is_number_integer()) return ExtInt(x.get<std::int64_t>());
  if (x.is_string()) return parse_ext_int(x.get<std::string>());
  throw ParseError("vector entries must be integers or \"inf\"/\"-inf\"");
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string normalize_relaxed_json(std::string_view text) {
  std::string out;
  out.reserve(text.size() + 16);
  for (std::size_t i = 0; i < text.size();) {
    const char c = text[i];
    if (c == '"') {
      // Copy a string literal verbatim.
      std::size_t j = i + 1;
      while (j < text.size() && text[j] != '"') j += text[j] == '\\' ? 2 : 1;
      out.append(text.substr(i, std::min(j + 1, text.size()) - i));
      i = j + 1;
    } else if (ident_start(c) || (c == '-' && i + 1 < text.size() && ident_start(text[i + 1]))) {
      std::size_t j = i + 1;
      while (j < text.size() && ident_char(text[j])) ++j;
      const auto word = text.substr(i, j - i);
      if (word == "true" || word == "false" || word == "null")
        out.append(word);
      else
        out.append("\"").append(word).append("\"");
      i = j;
    } else {
      out += c;
      ++i;
    }
  }
  return out;
}

std::string family_to_json(const MooreFamily& f) {
  json out = {{"n", f.ground_size()}, {"members", members_json(f)}};
  return out.dump();
}

MooreFamily family_from_json(std::string_view text) { return family_from(parse_json(text)); }

std::string star_to_json(const Star& s) {
  json out = {{"primes", labels_to_json(s.spectrum())},
              {"family", {{"n", s.family().ground_size()}, {"members", members_json(s.family())}}}};
  return out.dump();
}

Star star_from_json(std::string_view text, const std::optional<Spectrum>& labels) {
  const json j = parse_json(text);
  if (j.is_object() && j.contains("family")) {
    MooreFamily f = family_from(j["family"]);
    Spectrum sp = j.contains("primes") ? labels_from_json(j["primes"])
                  : labels                ? *labels
                                          : Spectrum::indexed(f.ground_size());
    return Star(std::move(sp), std::move(f));
  }
  MooreFamily f = family_from(j);
  Spectrum sp = labels ? *labels : Spectrum::indexed(f.ground_size());
  return Star(std::move(sp), std::move(f));
}

std::string vector_to_json(const ValVector& f) {
  if (f.is_zero()) return json{{"zero", true}}.dump();
  json entries = json::array();
  for (auto e : f.entries()) {
    if (e.is_finite())
      entries.push_back(e.value());
    else
      entries.push_back(to_string(e));
  }
  json out = {{"primes", labels_to_json(f.spectrum())}, {"entries", entries}};
  return out.dump();
}

ValVector parse_vector(std::string_view text, const std::optional<Spectrum>& spectrum) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  auto pick = [&](std::size_t n) {
    if (!spectrum) return Spectrum::indexed(n);
    if (spectrum->size() != n)
      throw MismatchError("vector has " + std::to_string(n) + " entries but " + std::to_string(spectrum->size()) +
                          " primes were given");
    return *spectrum;
  };
  if (text == "zero") {
    if (!spectrum) throw ParseError("the zero module needs an explicit prime list");
    return ValVector::zero(*spectrum);
  }
  if (!text.empty() && text.front() == '(') {
    if (text.back() != ')') throw ParseError("inline vector must end with ')'");
    auto body = text.substr(1, text.size() - 2);
    std::vector<ExtInt> entries;
    std::size_t start = 0;
    while (true) {
      auto comma = body.find(',', start);
      auto tok = body.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
      entries.push_back(parse_ext_int(tok));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    const auto n = entries.size();
    return ValVector(pick(n), std::move(entries));
  }
  const json j = parse_json(text);
  if (!j.is_object()) throw ParseError("vector must be an inline tuple or a record");
  if (j.contains("zero")) {
    if (!(j["zero"].is_boolean() && j["zero"].get<bool>())) throw ParseError("zero marker must be true");
    if (!spectrum) throw ParseError("the zero module needs an explicit prime list");
    return ValVector::zero(*spectrum);
  }
  if (!j.contains("entries") || !j["entries"].is_array()) throw ParseError("vector record needs an entries list");
  std::vector<ExtInt> entries;
  for (const auto& x : j["entries"]) entries.push_back(entry_from(x));
  const auto n = entries.size();
  Spectrum sp = j.contains("primes") ? labels_from_json(j["primes"]) : pick(n);
  return ValVector(std::move(sp), std::move(entries));
}

std::string members_to_string(const MooreFamily& f) { return members_json(f).dump(); }

namespace {

FinitePoset star_order(const std::vector<Star>& stars) {
  return FinitePoset::of(stars, [](const Star& a, const Star& b) { return star_leq(a, b); });
}

}  // namespace

std::string hasse_dot(const std::vector<Star>& stars) {
  const auto edges = hasse_edges(star_order(stars));
  std::string out = "digraph semistar {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < stars.size(); ++i)
    out += "  s" + std::to_string(i) + " [label=" + quote(members_to_string(stars[i].family())) + "];\n";
  for (auto [lo, hi] : edges) out += "  s" + std::to_string(lo) + " -> s" + std::to_string(hi) + ";\n";
  return out + "}\n";
}

std::string hasse_json(const std::vector<Star>& stars) {
  const auto edges = hasse_edges(star_order(stars));
  json nodes = json::array();
  for (std::size_t i = 0; i < stars.size(); ++i)
    nodes.push_back({{"id", i}, {"members", members_json(stars[i].family())}});
  json e = json::array();
  for (auto [lo, hi] : edges) e.push_back({lo, hi});
  json out = {{"nodes", nodes}, {"edges", e}};
  return out.dump();
}

}  // namespace semistar::io

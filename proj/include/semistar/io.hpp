#pragma once

// Text formats.
//
//   vector  {"primes":["2","3"],"entries":[1,"inf"]}, ZERO as {"zero":true};
//           inline form "(1,inf)" with tokens integer | inf | -inf
//   family  {"n":2,"members":[[0],[0,1]]}, members in ascending code order
//   star    {"primes":["p0","p1"],"family":{"n":2,"members":[...]}}
//
// Readers also accept keys and the inf tokens without quotes, e.g.
// '{n:2,members:[[0],[0,1]]}'. Writers emit strict JSON on one line.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "semistar/extvec.hpp"
#include "semistar/moore.hpp"
#include "semistar/star.hpp"

namespace semistar::io {

// Quotes bare identifiers so relaxed records parse as JSON.
std::string normalize_relaxed_json(std::string_view text);

std::string family_to_json(const MooreFamily& f);
MooreFamily family_from_json(std::string_view text);

std::string star_to_json(const Star& s);
// Also accepts a bare family record, labelled p0..p{n-1} (or `labels`).
Star star_from_json(std::string_view text, const std::optional<Spectrum>& labels = std::nullopt);

std::string vector_to_json(const ValVector& f);
// Inline "(...)" or a JSON record. Inline vectors and {"zero":true} take
// their primes from `spectrum`, or p0..p{n-1} when absent.
ValVector parse_vector(std::string_view text, const std::optional<Spectrum>& spectrum = std::nullopt);

// Star lattice diagrams: stars ordered by star_leq, edges from lower cover
// to upper cover, nodes labelled by their member lists.
std::string hasse_dot(const std::vector<Star>& stars);
std::string hasse_json(const std::vector<Star>& stars);

std::string members_to_string(const MooreFamily& f);  // [[0],[0,1]]

}  // namespace semistar::io

#include <gtest/gtest.h>

#include <json.hpp>

#include "helpers.hpp"
#include "semistar/error.hpp"
#include "semistar/io.hpp"
#include "semistar/star.hpp"

using namespace semistar;
using namespace semistar::io;
using testing_support::V;

TEST(Io, RelaxedJson) {
  EXPECT_EQ(normalize_relaxed_json("{n:2,members:[[0],[0,1]]}"), R"({"n":2,"members":[[0],[0,1]]})");
  EXPECT_EQ(normalize_relaxed_json("[inf,-inf,3,true]"), R"(["inf","-inf",3,true])");
  EXPECT_EQ(normalize_relaxed_json(R"({"a b":x})"), R"({"a b":"x"})");
}

TEST(Io, FamilyRoundTrip) {
  const MooreFamily f(2, {0b01, 0b11});
  const auto text = family_to_json(f);
  EXPECT_EQ(text, R"({"members":[[0],[0,1]],"n":2})");
  EXPECT_EQ(family_from_json(text), f);
  EXPECT_EQ(family_from_json("{n:2,members:[[0],[0,1]]}"), f);
  EXPECT_EQ(family_from_json("{n:2,members:[[1,0],[0],[0]]}"), f);
}

TEST(Io, FamilyErrors) {
  EXPECT_THROW(family_from_json("{n:2}"), ParseError);
  EXPECT_THROW(family_from_json("{n:2,members:[[2]]}"), ParseError);
  EXPECT_THROW(family_from_json("{n:2,members:[[0]]}"), DomainError);
  EXPECT_THROW(family_from_json("{n:0,members:[]}"), ParseError);
  EXPECT_THROW(family_from_json("{n:2,members:[[0]"), ParseError);
  EXPECT_THROW(family_from_json("{n:65,members:[]}"), GuardError);
}

TEST(Io, StarRecords) {
  const Star s(Spectrum({"2", "3"}), MooreFamily(2, {0b10, 0b11}));
  const auto text = star_to_json(s);
  EXPECT_EQ(text, R"({"family":{"members":[[1],[0,1]],"n":2},"primes":[2,3]})");
  EXPECT_EQ(star_from_json(text), s);
  EXPECT_EQ(star_from_json("{primes:[2,3],family:{n:2,members:[[1],[0,1]]}}"), s);
  EXPECT_EQ(star_from_json("{n:2,members:[[1],[0,1]]}", Spectrum({"2", "3"})), s);
  EXPECT_EQ(star_from_json("{n:2,members:[[1],[0,1]]}").spectrum(), Spectrum::indexed(2));
  EXPECT_THROW(star_from_json("{primes:[2],family:{n:2,members:[[0,1]]}}"), MismatchError);
}

TEST(Io, Vectors) {
  const Spectrum sp({"2", "3"});
  EXPECT_EQ(parse_vector("(1, inf)", sp), ValVector(sp, {ExtInt(1), ExtInt::pos_inf()}));
  EXPECT_EQ(vector_to_json(V(sp, "(1,inf)")), R"({"entries":[1,"inf"],"primes":[2,3]})");
  EXPECT_EQ(parse_vector(vector_to_json(V(sp, "(-4,inf)"))), V(sp, "(-4,inf)"));
  EXPECT_EQ(parse_vector("{entries:[1,inf]}", sp), V(sp, "(1,inf)"));
  EXPECT_TRUE(parse_vector("zero", sp).is_zero());
  EXPECT_TRUE(parse_vector("(1,-inf)").is_zero());
  EXPECT_EQ(vector_to_json(ValVector::zero(sp)), R"({"zero":true})");
  EXPECT_THROW(parse_vector("(1,2", sp), ParseError);
  EXPECT_THROW(parse_vector("(1,2,3)", sp), MismatchError);
  EXPECT_THROW(parse_vector("(1,x)"), ParseError);
  EXPECT_THROW(parse_vector("zero"), ParseError);
}

TEST(Io, HasseOutput) {
  const auto sp = Spectrum::indexed(1);
  const std::vector<Star> stars = {Star::identity(sp), Star::trivial_extension(sp)};
  const auto dot = hasse_dot(stars);
  EXPECT_NE(dot.find("digraph semistar"), std::string::npos);
  EXPECT_NE(dot.find("s0 -> s1;"), std::string::npos);
  const auto j = nlohmann::json::parse(hasse_json(stars));
  EXPECT_EQ(j["nodes"].size(), 2u);
  EXPECT_EQ(j["edges"], nlohmann::json::parse("[[0,1]]"));
}

#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "semistar/error.hpp"
#include "semistar/zadapter.hpp"

using namespace semistar;
using namespace semistar::zadapter;
using testing_support::V;

namespace {

FracIdealSpec ideal(const std::string& primes, const std::string& gens) {
  return FracIdealSpec(parse_primes(primes), parse_rationals(gens));
}

}  // namespace

TEST(Adapter, PadicValuation) {
  EXPECT_EQ(padic_val(mpq_class(12), mpz_class(2)), 2);
  EXPECT_EQ(padic_val(mpq_class(1, 9), mpz_class(3)), -2);
  EXPECT_EQ(padic_val(mpq_class(7), mpz_class(5)), 0);
  EXPECT_EQ(padic_val(mpq_class(-40, 3), mpz_class(2)), 3);
  EXPECT_THROW(padic_val(mpq_class(0), mpz_class(2)), DomainError);
}

TEST(Adapter, VectorOfModule) {
  const Spectrum sp({"2", "3"});
  EXPECT_EQ(vector_of_module(ideal("2,3", "1/2")), V(sp, "(1,0)"));
  EXPECT_EQ(vector_of_module(ideal("2,3", "6")), V(sp, "(-1,-1)"));
  EXPECT_EQ(vector_of_module(ideal("2,3", "1/2,1/3")), V(sp, "(1,1)"));
  EXPECT_EQ(vector_of_module(ideal("2,3,5", "10,15")), V(Spectrum({"2", "3", "5"}), "(0,0,-1)"));
  EXPECT_EQ(vector_of_module(ideal("2", "7/11")), V(Spectrum({"2"}), "(0)"));
}

TEST(Adapter, Membership) {
  const Spectrum sp({"2", "3"});
  EXPECT_TRUE(module_member(V(sp, "(1,0)"), mpq_class(1, 2)));
  EXPECT_FALSE(module_member(V(sp, "(1,0)"), mpq_class(1, 4)));
  EXPECT_TRUE(module_member(V(sp, "(inf,0)"), mpq_class(1, 1024)));
  EXPECT_FALSE(module_member(vector_of_module(ideal("2,3", "6")), mpq_class(1, 6)));
  EXPECT_THROW(module_member(V(sp, "(0,0)"), mpq_class(0)), DomainError);
}

TEST(Adapter, InputValidation) {
  EXPECT_THROW(ideal("2,4", "1"), DomainError);
  EXPECT_THROW(ideal("2,2", "1"), DomainError);
  EXPECT_THROW(ideal("2,3", "0"), DomainError);
  EXPECT_THROW(ideal("2,3", "1/0"), Error);
  EXPECT_THROW(ideal("2,3", "x"), ParseError);
  EXPECT_THROW(ideal("2,3", ""), Error);
}

TEST(Adapter, ColonOracleExamples) {
  const Spectrum sp({"2", "3"});
  EXPECT_EQ(colon_oracle(ideal("2,3", "1"), ideal("2,3", "1/2")), V(sp, "(-1,0)"));
  EXPECT_EQ(colon_oracle(ideal("2,3", "1"), ideal("2,3", "1")), V(sp, "(0,0)"));
  EXPECT_EQ(colon_oracle(ideal("2,3", "1/6"), ideal("2,3", "1/2,1/3")), V(sp, "(0,0)"));
  EXPECT_EQ(colon(V(sp, "(1,1)"), V(sp, "(1,1)")), V(sp, "(0,0)"));
}

class AdapterSamples : public ::testing::Test {
 protected:
  std::mt19937_64 rng{11};
  std::vector<mpz_class> primes{2, 3, 5};

  mpq_class draw_rational() {
    std::uniform_int_distribution<int> e(-5, 5);
    mpq_class r(1);
    for (const auto& p : primes) {
      mpz_class pk;
      const int k = e(rng);
      mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(k < 0 ? -k : k));
      r *= k < 0 ? mpq_class(1, pk) : mpq_class(pk);
    }
    r.canonicalize();
    if (rng() % 2) r = -r;
    return r;
  }

  std::vector<mpq_class> draw_gens() {
    std::vector<mpq_class> g(1 + rng() % 3);
    for (auto& x : g) x = draw_rational();
    return g;
  }
};

TEST_F(AdapterSamples, ColonMatchesOracle) {
  for (int t = 0; t < 1000; ++t) {
    const FracIdealSpec i(primes, draw_gens()), j(primes, draw_gens());
    ASSERT_EQ(colon(vector_of_module(i), vector_of_module(j)), colon_oracle(i, j));
  }
}

TEST_F(AdapterSamples, GeneratorsAreMembers) {
  for (int t = 0; t < 300; ++t) {
    const auto gens = draw_gens();
    const auto f = vector_of_module(FracIdealSpec(primes, gens));
    for (const auto& g : gens) EXPECT_TRUE(module_member(f, g));
  }
}

TEST_F(AdapterSamples, ProductOfModules) {
  for (int t = 0; t < 300; ++t) {
    const auto a = draw_gens(), b = draw_gens();
    std::vector<mpq_class> ab;
    for (const auto& x : a)
      for (const auto& y : b) ab.push_back(x * y);
    EXPECT_EQ(vector_of_module(FracIdealSpec(primes, ab)),
              multiply(vector_of_module(FracIdealSpec(primes, a)), vector_of_module(FracIdealSpec(primes, b))));
  }
}

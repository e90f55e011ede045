#include <gtest/gtest.h>

#include "semistar/error.hpp"
#include "semistar/poset.hpp"
#include "semistar/verify.hpp"

using namespace semistar;

namespace {

FinitePoset chain(std::size_t n) {
  return FinitePoset(n, [](std::size_t i, std::size_t j) { return i <= j; });
}

FinitePoset antichain(std::size_t n) {
  return FinitePoset(n, [](std::size_t i, std::size_t j) { return i == j; });
}

FinitePoset boolean(std::size_t k) {
  return FinitePoset(std::size_t{1} << k, [](std::size_t i, std::size_t j) { return (i & ~j) == 0; });
}

}  // namespace

TEST(Poset, HasseOfChainAndCube) {
  const auto e = hasse_edges(chain(4));
  EXPECT_EQ(e, (std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 2}, {2, 3}}));
  EXPECT_EQ(hasse_edges(boolean(3)).size(), 12u);
  EXPECT_TRUE(hasse_edges(antichain(5)).empty());
}

TEST(Poset, HasseRejectsNonOrders) {
  const FinitePoset cyc(2, [](std::size_t, std::size_t) { return true; });
  EXPECT_THROW(hasse_edges(cyc), DomainError);
  const FinitePoset irreflexive(2, [](std::size_t i, std::size_t j) { return i < j; });
  EXPECT_THROW(hasse_edges(irreflexive), DomainError);
}

TEST(Poset, Isomorphism) {
  EXPECT_FALSE(poset_isomorphic(chain(2), antichain(2), Orientation::Iso));
  EXPECT_TRUE(poset_isomorphic(boolean(3), boolean(3), Orientation::Iso));
  EXPECT_TRUE(poset_isomorphic(boolean(3), boolean(3), Orientation::Anti));
  EXPECT_TRUE(poset_isomorphic(chain(5), chain(5), Orientation::Anti));
  EXPECT_FALSE(poset_isomorphic(chain(3), chain(4), Orientation::Iso));
  // A "V" and a "Lambda" differ as posets but are anti-isomorphic.
  const FinitePoset vee(3, [](std::size_t i, std::size_t j) { return i == j || i == 0; });
  const FinitePoset wedge(3, [](std::size_t i, std::size_t j) { return i == j || j == 0; });
  EXPECT_FALSE(poset_isomorphic(vee, wedge, Orientation::Iso));
  EXPECT_TRUE(poset_isomorphic(vee, wedge, Orientation::Anti));
}

TEST(Poset, StarLatticeShapeAtTwo) {
  const auto stars = verify::star_lattice(2);
  const auto cube = verify::cube_minus_singleton();
  ASSERT_EQ(stars.size(), 7u);
  EXPECT_TRUE(poset_isomorphic(stars, cube, Orientation::Iso));
  EXPECT_FALSE(poset_isomorphic(stars, boolean(3), Orientation::Iso));
  // The star lattice is not self-dual, so the orientation matters.
  EXPECT_FALSE(poset_isomorphic(stars, cube, Orientation::Anti));
}

TEST(Poset, Guard) {
  EXPECT_THROW(chain(201), GuardError);
  EXPECT_NO_THROW(chain(200));
}

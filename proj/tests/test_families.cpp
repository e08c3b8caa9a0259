#include <doctest.h>

#include "sphereforge/families.hpp"
#include "test_util.hpp"

using namespace sphereforge;
using testutil::P;

TEST_CASE("diagonal family construction") {
  auto family = build_diagonal_family();
  const auto& gens = family.total.defining_ideal().generators();
  REQUIRE(gens.size() == 1);
  CHECK(gens[0].total_degree() == 2);
  CHECK(gens[0] ==
        P(family.total.ring(), "(x2 - x1)*V - (y2 - y1)*U - 1"));
  CHECK(family.dimension == 5);
  CHECK(family.smoothness.kind == SmoothnessVerdict::Kind::smooth);
}

TEST_CASE("trivialization over the base plane") {
  auto family = build_diagonal_family();
  auto report = verify_trivialization(family);
  CHECK(report.pullback_matches);
  CHECK(report.compositions_identity);
  CHECK(report.base_projection_commutes);
  CHECK(report.passed());
  REQUIRE(report.certificate.has_value());
  CHECK(report.certificate->validate());
}

TEST_CASE("fiber restriction at fixed points") {
  auto family = build_diagonal_family();

  auto origin = restrict_fiber(family, Rational(0), Rational(0));
  CHECK(origin.matches_direct_construction);
  {
    const auto& gens = origin.fiber.defining_ideal().generators();
    bool found = false;
    for (const auto& g : gens)
      if (g == P(origin.fiber.ring(), "x2*V - y2*U - 1")) found = true;
    CHECK(found);  // the fiber over the origin is SL2
  }

  auto shifted = restrict_fiber(family, Rational(1), Rational(2));
  CHECK(shifted.matches_direct_construction);
  {
    const auto& gens = shifted.fiber.defining_ideal().generators();
    bool found = false;
    for (const auto& g : gens)
      if (g == P(shifted.fiber.ring(), "(x2 - 1)*V - (y2 - 2)*U - 1"))
        found = true;
    CHECK(found);
  }
}

TEST_CASE("fiber restriction at random rational points") {
  auto family = build_diagonal_family();
  testutil::Rng rng(888);
  for (int trial = 0; trial < 10; ++trial) {
    Rational p1(rng.in(-20, 20), rng.in(1, 7));
    Rational p2(rng.in(-20, 20), rng.in(1, 7));
    auto fiber = restrict_fiber(family, p1, p2);
    CHECK(fiber.matches_direct_construction);
  }
}

TEST_CASE("translation carries every fiber onto SL2") {
  auto family = build_diagonal_family();
  testutil::Rng rng(999);
  for (int trial = 0; trial < 5; ++trial) {
    Rational p1(rng.in(-5, 5));
    Rational p2(rng.in(-5, 5));
    auto fiber = restrict_fiber(family, p1, p2);
    auto ring = fiber.fiber.ring();  // (x2, y2, U, V)

    // x2 -> x2 + p1, y2 -> y2 + p2
    std::vector<Polynomial> images = {
        Polynomial::variable(ring, 0) + Polynomial::constant(ring, p1),
        Polynomial::variable(ring, 1) + Polynomial::constant(ring, p2),
        Polynomial::variable(ring, 2), Polynomial::variable(ring, 3)};
    std::vector<Polynomial> translated;
    for (const auto& g : fiber.fiber.defining_ideal().generators())
      translated.push_back(g.substitute(ring, images));

    CHECK(ideal_equality(Ideal(ring, std::move(translated)),
                         Ideal(ring, {P(ring, "x2*V - y2*U - 1")})));
  }
}

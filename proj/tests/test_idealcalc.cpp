#include <doctest.h>

#include "sphereforge/idealcalc.hpp"
#include "test_util.hpp"

using namespace sphereforge;
using testutil::P;

namespace {

Ideal I(const RingPtr& ring, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> polys;
  for (const char* g : gens) polys.push_back(P(ring, g));
  return Ideal(ring, std::move(polys));
}

}  // namespace

TEST_CASE("ideal membership examples") {
  auto ring = make_ring({"x", "y"});
  CHECK(ideal_membership(P(ring, "y"), I(ring, {"x", "y"})).member);
  CHECK_FALSE(ideal_membership(P(ring, "x + 1"), I(ring, {"x"})).member);
  CHECK_FALSE(ideal_membership(P(ring, "x"), I(ring, {"x^2"})).member);
  // zero ideal
  CHECK(ideal_membership(Polynomial::zero(ring), Ideal(ring, {})).member);
  CHECK_FALSE(ideal_membership(P(ring, "x"), Ideal(ring, {})).member);
}

TEST_CASE("membership certificates expand back to the target") {
  auto ring = make_ring({"x", "y", "z"});
  auto ideal = I(ring, {"x^2 - y", "x*y - z"});
  testutil::Rng rng(111);
  for (int trial = 0; trial < 10; ++trial) {
    // manufacture a member: random combination of the generators
    auto h = testutil::random_poly(rng, ring, 2) * ideal.generators()[0] +
             testutil::random_poly(rng, ring, 2) * ideal.generators()[1];
    auto result = ideal_membership(h, ideal, /*want_certificate=*/true);
    REQUIRE(result.member);
    REQUIRE(result.certificate.has_value());
    CHECK(result.certificate->expand_and_check(ideal));
  }
}

TEST_CASE("radical membership examples") {
  auto r2 = make_ring({"x", "y"});
  auto r3 = make_ring({"x", "y", "z"});
  CHECK(radical_membership(P(r2, "x"), I(r2, {"x^2"})));
  CHECK_FALSE(radical_membership(P(r3, "z"), I(r3, {"x", "y"})));
  CHECK(radical_membership(P(r2, "x + y"), I(r2, {"(x + y)^3"})));
}

TEST_CASE("radical membership is monotone over plain membership") {
  auto ring = make_ring({"x", "y"});
  testutil::Rng rng(222);
  for (int trial = 0; trial < 10; ++trial) {
    auto ideal = Ideal(ring, {testutil::random_nonzero_poly(rng, ring, 2),
                              testutil::random_nonzero_poly(rng, ring, 2)});
    auto h = testutil::random_poly(rng, ring, 1) * ideal.generators()[0] +
             testutil::random_poly(rng, ring, 1) * ideal.generators()[1];
    REQUIRE(ideal_membership(h, ideal).member);
    CHECK(radical_membership(h, ideal));
  }
}

TEST_CASE("ideal equality examples") {
  auto ring = make_ring({"x", "y"});
  CHECK(ideal_equality(I(ring, {"x", "y"}), I(ring, {"y", "x + y"})));
  CHECK_FALSE(ideal_equality(I(ring, {"x^2", "y"}), I(ring, {"x", "y"})));
  CHECK(ideal_equality(I(ring, {"x^2", "y^3"}), I(ring, {"y^3", "x^2"})));
  CHECK_FALSE(ideal_equality(I(ring, {"x^2", "y^3"}), I(ring, {"x^3", "y^2"})));
}

TEST_CASE("ideal equality is an equivalence relation on a random pool") {
  auto ring = make_ring({"x", "y"});
  testutil::Rng rng(333);
  std::vector<Ideal> pool;
  for (int i = 0; i < 6; ++i)
    pool.push_back(Ideal(ring, {testutil::random_nonzero_poly(rng, ring, 2),
                                testutil::random_nonzero_poly(rng, ring, 2)}));
  // duplicate one ideal through rescaled/combined generators so nontrivial
  // equal pairs exist in the pool
  const auto& g = pool[0].generators();
  pool.push_back(Ideal(ring, {g[0] * Rational(3), g[1] + g[0]}));

  std::vector<std::vector<bool>> eq(pool.size(), std::vector<bool>(pool.size()));
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = 0; j < pool.size(); ++j)
      eq[i][j] = ideal_equality(pool[i], pool[j]);

  CHECK(eq[0][pool.size() - 1]);
  for (std::size_t i = 0; i < pool.size(); ++i) {
    CHECK(eq[i][i]);
    for (std::size_t j = 0; j < pool.size(); ++j) {
      CHECK(eq[i][j] == eq[j][i]);
      for (std::size_t k = 0; k < pool.size(); ++k)
        if (eq[i][j] && eq[j][k]) CHECK(eq[i][k]);
    }
  }
}

TEST_CASE("elimination examples") {
  auto ring = make_ring({"x", "y", "t"});
  auto curve = I(ring, {"x - t", "y - t^2"});
  auto eliminated = eliminate(curve, {2});
  for (const auto& g : eliminated.generators())
    for (const auto& term : g.terms()) CHECK(term.monomial.exp[2] == 0);
  CHECK(ideal_equality(eliminated, I(ring, {"y - x^2"})));

  CHECK(ideal_equality(eliminate(curve, {}), curve));

  auto r2 = make_ring({"x", "y"});
  auto only_x = eliminate(I(r2, {"x"}), {0});
  CHECK(only_x.generators().empty());
}

TEST_CASE("eliminate output is contained in the input ideal") {
  auto ring = make_ring({"x", "y", "z"});
  testutil::Rng rng(444);
  for (int trial = 0; trial < 8; ++trial) {
    auto ideal = Ideal(ring, {testutil::random_nonzero_poly(rng, ring, 2),
                              testutil::random_nonzero_poly(rng, ring, 2)});
    auto out = eliminate(ideal, {static_cast<std::size_t>(rng.below(3))});
    for (const auto& g : out.generators())
      CHECK(ideal_membership(g, ideal).member);
  }
}

TEST_CASE("dimension examples") {
  auto r2 = make_ring({"x", "y"});
  auto r3 = make_ring({"x", "y", "z"});
  CHECK(dimension(I(r2, {"x", "y"})) == 0);
  CHECK(dimension(I(r3, {"x^2 + y^3 + z^7"})) == 2);
  CHECK(dimension(I(r2, {"x", "x - 1"})) == -1);
  CHECK(dimension(Ideal(r3, {})) == 3);
}

TEST_CASE("hypersurface dimension is n - 1") {
  testutil::Rng rng(555);
  std::vector<std::string> names = {"x", "y", "z", "w"};
  for (int trial = 0; trial < 30; ++trial) {
    int n = static_cast<int>(rng.in(1, 4));
    auto ring = make_ring({names.begin(), names.begin() + n});
    Polynomial p = Polynomial::zero(ring);
    while (p.is_constant()) p = testutil::random_poly(rng, ring, 3);
    CHECK(dimension(Ideal(ring, {p})) == n - 1);
  }
}

TEST_CASE("variety emptiness examples") {
  auto r1 = make_ring({"x"});
  CHECK(variety_is_empty(I(r1, {"x", "x - 1"})));
  CHECK_FALSE(variety_is_empty(I(r1, {"x"})));

  auto sl2 = make_ring({"x", "y", "U", "V"});
  CHECK(variety_is_empty(I(sl2, {"x*V - y*U - 1", "x", "y"})));
}

TEST_CASE("smoothness check examples") {
  SUBCASE("SL2 is smooth") {
    auto ring = make_ring({"x", "y", "U", "V"});
    auto verdict = smoothness_check(I(ring, {"x*V - y*U - 1"}), 4);
    CHECK(verdict.kind == SmoothnessVerdict::Kind::smooth);
  }
  SUBCASE("Brieskorn 2,3,7 surface is singular exactly at the origin") {
    auto ring = make_ring({"x", "y", "z"});
    auto verdict = smoothness_check(I(ring, {"x^2 + y^3 + z^7"}), 3);
    REQUIRE(verdict.kind == SmoothnessVerdict::Kind::singular);
    REQUIRE(verdict.witness.has_value());
    CHECK(radical_membership(P(ring, "x"), *verdict.witness));
    CHECK(radical_membership(P(ring, "y"), *verdict.witness));
    CHECK(radical_membership(P(ring, "z"), *verdict.witness));
    CHECK(dimension(*verdict.witness) == 0);
  }
  SUBCASE("fat point is singular") {
    auto ring = make_ring({"x"});
    auto verdict = smoothness_check(I(ring, {"x^2"}), 1);
    CHECK(verdict.kind == SmoothnessVerdict::Kind::singular);
  }
  SUBCASE("over-determined presentation is indeterminate, not guessed") {
    auto ring = make_ring({"x", "y"});
    auto verdict = smoothness_check(I(ring, {"x", "y", "x + y"}), 2);
    CHECK(verdict.kind == SmoothnessVerdict::Kind::indeterminate);
  }
  SUBCASE("budget exhaustion downgrades to indeterminate") {
    auto ring = make_ring({"x", "y", "z"});
    Budget tiny;
    tiny.max_pair_reductions = 0;
    auto verdict = smoothness_check(I(ring, {"x^2 + y^3 + z^7"}), 3, tiny);
    CHECK(verdict.kind == SmoothnessVerdict::Kind::indeterminate);
  }
}

TEST_CASE("unit spheres are smooth") {
  std::vector<std::string> names = {"x1", "x2", "x3", "x4"};
  for (int k = 2; k <= 4; ++k) {
    auto ring = make_ring({names.begin(), names.begin() + k});
    Polynomial sphere = Polynomial::constant(ring, Rational(-1));
    for (int i = 0; i < k; ++i) {
      auto xi = Polynomial::variable(ring, i);
      sphere = sphere + xi * xi;
    }
    auto verdict = smoothness_check(Ideal(ring, {sphere}), k);
    CHECK(verdict.kind == SmoothnessVerdict::Kind::smooth);
  }
}

// Acceptance gate: one line per criterion, exit 0 only if all pass.
// Each criterion is independent; a throw or a timeout marks it failed
// without stopping the others.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sphereforge/families.hpp"
#include "test_util.hpp"

using namespace sphereforge;
using testutil::P;
using json = nlohmann::json;

namespace {

struct Gate {
  int failures = 0;

  void criterion(int number, const std::string& title, double limit_seconds,
                 const std::function<bool(std::string&)>& body) {
    std::string note;
    bool ok = false;
    auto start = std::chrono::steady_clock::now();
    try {
      ok = body(note);
    } catch (const std::exception& e) {
      note = e.what();
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (ok && elapsed > limit_seconds) {
      ok = false;
      note = "exceeded time limit of " + std::to_string(limit_seconds) + " s";
    }
    if (!ok) ++failures;
    std::ostringstream line;
    line << "criterion " << number << " [" << title << "]: "
         << (ok ? "PASS" : "FAIL");
    line.setf(std::ios::fixed);
    line.precision(2);
    line << " (" << elapsed << " s)";
    if (!ok && !note.empty()) line << " -- " << note;
    std::cout << line.str() << "\n";
  }
};

CompleteIntersectionCenter verified(const AffineScheme& base, const Polynomial& f,
                                    const Polynomial& g,
                                    std::vector<Rational> point) {
  CompleteIntersectionCenter center{base, f, g, std::move(point), false};
  if (verify_support(center).status != CheckStatus::passed)
    throw std::runtime_error("fixture center failed support verification");
  return center;
}

AffineScheme plane() { return AffineScheme::affine_space({"x", "y"}); }

}  // namespace

int main() {
  Gate gate;

  gate.criterion(1, "SL2 smoothness", 1.0, [](std::string&) {
    auto ring = make_ring({"x", "y", "U", "V"});
    auto verdict =
        smoothness_check(Ideal(ring, {P(ring, "x*V - y*U - 1")}), 4);
    return verdict.kind == SmoothnessVerdict::Kind::smooth;
  });

  gate.criterion(2, "Brieskorn singular locus", 10.0, [](std::string& note) {
    auto surface = brieskorn(2, 3, 7);
    const auto& verdict = surface.smoothness();
    if (verdict.kind != SmoothnessVerdict::Kind::singular || !verdict.witness) {
      note = "expected a singular verdict with witness";
      return false;
    }
    auto ring = surface.ring();
    for (const char* v : {"x", "y", "z"})
      if (!radical_membership(P(ring, v), *verdict.witness)) {
        note = std::string(v) + " not in the witness radical";
        return false;
      }
    // conversely every witness generator vanishes at the origin, so the
    // witness radical is exactly (x, y, z)
    for (const auto& g : verdict.witness->generators())
      if (g.evaluate({Rational(0), Rational(0), Rational(0)}) != Rational(0)) {
        note = "witness generator not supported at the origin";
        return false;
      }
    return true;
  });

  gate.criterion(3, "total space X_{1,1} over S_{2,3,7} smooth", 60.0,
                 [](std::string& note) {
    auto surface = brieskorn(2, 3, 7);
    auto ring = surface.ring();
    auto center = verified(surface, P(ring, "x"), P(ring, "y"),
                           {Rational(0), Rational(0), Rational(0)});
    auto space = build_total_space(surface, center);
    const auto& verdict = space.total.smoothness();
    if (verdict.kind != SmoothnessVerdict::Kind::smooth) {
      note = "verdict: " + verdict.detail;
      return false;
    }
    return space.total.dimension() == 3;
  });

  gate.criterion(4, "additive action on all three fixtures", 60.0,
                 [](std::string& note) {
    auto base = plane();
    auto x = P(base.ring(), "x");
    auto y = P(base.ring(), "y");
    auto origin2 = std::vector<Rational>{Rational(0), Rational(0)};

    auto sl2 = build_total_space(base, verified(base, x, y, origin2));
    auto x23 = build_total_space(
        base, verified(base, P(base.ring(), "x^2"), P(base.ring(), "y^3"),
                       origin2));
    auto surface = brieskorn(2, 3, 7);
    auto x11 = build_total_space(
        surface,
        verified(surface, P(surface.ring(), "x"), P(surface.ring(), "y"),
                 {Rational(0), Rational(0), Rational(0)}));

    int i = 0;
    for (const auto* space : {&sl2, &x23, &x11}) {
      ++i;
      auto report = verify_ga_action(*space);
      if (!report.invariance_identity) {
        note = "fixture " + std::to_string(i) + ": invariance not exact";
        return false;
      }
      if (report.fixed_point_free != CheckStatus::passed) {
        note = "fixture " + std::to_string(i) + ": fixed points not excluded";
        return false;
      }
    }
    return true;
  });

  gate.criterion(5, "resolution changes", 120.0, [](std::string& note) {
    auto base = plane();
    auto ring = base.ring();
    auto center = verified(base, P(ring, "x"), P(ring, "y"),
                           {Rational(0), Rational(0)});
    auto one = Polynomial::constant(ring, Rational(1));
    auto zero = Polynomial::zero(ring);

    if (!resolution_change(base, center, {one, zero, zero, one}).passed()) {
      note = "identity matrix failed";
      return false;
    }
    if (!resolution_change(base, center, {zero, one, one, zero}).passed()) {
      note = "swap matrix failed";
      return false;
    }
    if (!resolution_change(base, center, {one, P(ring, "y"), zero, one})
             .passed()) {
      note = "shear matrix failed";
      return false;
    }

    // 50 random matrices with constant nonzero determinant, entries of
    // degree <= 2: u * [[1, p], [0, 1]] * [[1, 0], [q, 1]] with p, q linear
    testutil::Rng rng(4242);
    for (int trial = 0; trial < 50; ++trial) {
      auto p = testutil::random_poly(rng, ring, 1);
      auto q = testutil::random_poly(rng, ring, 1);
      Rational u(rng.in(1, 5), rng.in(1, 3));
      if (rng.below(2)) u = -u;
      ResolutionChange change{(one + p * q) * u, p * u, q, one};
      if (!resolution_change(base, center, change).passed()) {
        note = "random matrix " + std::to_string(trial) + " failed";
        return false;
      }
    }

    try {
      resolution_change(base, center, {P(ring, "x"), zero, zero, one});
      note = "non-constant determinant was not rejected";
      return false;
    } catch (const RejectedError&) {
    }
    return true;
  });

  gate.criterion(6, "pair-isomorphism certificates", 120.0,
                 [](std::string& note) {
    auto left = plane();
    auto right = plane();
    auto lring = left.ring();
    auto rring = right.ring();
    auto origin = std::vector<Rational>{Rational(0), Rational(0)};

    auto lc = verified(left, P(lring, "x"), P(lring, "y^2"), origin);
    auto rc = verified(right, P(rring, "x^2"), P(rring, "y"), origin);
    RegularMap swap_fwd(left, right, {P(lring, "y"), P(lring, "x")});
    RegularMap swap_inv(right, left, {P(rring, "y"), P(rring, "x")});
    if (verify_pair_isomorphism(left, lc, right, rc, {swap_fwd, swap_inv}) !=
        PairIsoVerdict::pairs_isomorphic) {
      note = "swap certificate not accepted";
      return false;
    }

    auto lc2 = verified(left, P(lring, "x^2"), P(lring, "y^3"), origin);
    auto rc2 = verified(left, P(lring, "x^3"), P(lring, "y^2"), origin);
    IsomorphismCertificate identity{RegularMap::identity(left),
                                    RegularMap::identity(left)};
    if (verify_pair_isomorphism(left, lc2, left, rc2, identity) !=
        PairIsoVerdict::center_mismatch) {
      note = "identity certificate should report center-mismatch";
      return false;
    }

    // exhaustive monomial-ideal equality table
    auto xv = Polynomial::variable(lring, 0);
    auto yv = Polynomial::variable(lring, 1);
    for (int m = 1; m <= 4; ++m)
      for (int n = 1; n <= 4; ++n)
        for (int mp = 1; mp <= 4; ++mp)
          for (int np = 1; np <= 4; ++np) {
            bool equal = ideal_equality(
                Ideal(lring, {xv.pow(m), yv.pow(n)}),
                Ideal(lring, {xv.pow(mp), yv.pow(np)}));
            if (equal != (m == mp && n == np)) {
              note = "table mismatch at (" + std::to_string(m) + "," +
                     std::to_string(n) + "," + std::to_string(mp) + "," +
                     std::to_string(np) + ")";
              return false;
            }
          }
    return true;
  });

  gate.criterion(7, "diagonal family", 120.0, [](std::string& note) {
    auto family = build_diagonal_family();
    if (family.dimension != 5) {
      note = "dimension " + std::to_string(family.dimension);
      return false;
    }
    if (family.smoothness.kind != SmoothnessVerdict::Kind::smooth) {
      note = "not smooth";
      return false;
    }
    auto triv = verify_trivialization(family);
    if (!triv.passed()) {
      note = "trivialization checks failed";
      return false;
    }
    std::vector<std::pair<Rational, Rational>> points = {
        {Rational(0), Rational(0)}, {Rational(1), Rational(2)}};
    testutil::Rng rng(4243);
    for (int i = 0; i < 25; ++i)
      points.emplace_back(Rational(rng.in(-30, 30), rng.in(1, 9)),
                          Rational(rng.in(-30, 30), rng.in(1, 9)));
    for (const auto& [p1, p2] : points)
      if (!restrict_fiber(family, p1, p2).matches_direct_construction) {
        note = "fiber mismatch at (" + to_string(p1) + ", " + to_string(p2) + ")";
        return false;
      }
    return true;
  });

  gate.criterion(8, "oracle equivalence on golden bases", 120.0,
                 [](std::string& note) {
    std::ifstream in(std::string(GOLDEN_DIR) + "/groebner_cases.json");
    if (!in) {
      note = "golden file missing";
      return false;
    }
    json cases = json::parse(in);
    if (cases.size() != 20) {
      note = "expected 20 golden cases";
      return false;
    }
    for (const auto& c : cases) {
      auto ring = make_ring(c["variables"].get<std::vector<std::string>>());
      std::vector<Polynomial> gens;
      for (const auto& g : c["generators"])
        gens.push_back(P(ring, g.get<std::string>()));
      auto gb = reduced_groebner_basis(gens, ring->order());

      std::vector<Polynomial> expected;
      for (const auto& b : c["reduced_grevlex_basis"])
        expected.push_back(P(ring, b.get<std::string>()));
      std::sort(expected.begin(), expected.end(),
                [&](const Polynomial& a, const Polynomial& b) {
                  return monomial_less(a.leading_monomial(),
                                       b.leading_monomial(), ring->order());
                });

      bool match = gb.elements.size() == expected.size();
      for (std::size_t i = 0; match && i < expected.size(); ++i)
        match = gb.elements[i] == expected[i];
      if (!match) {
        note = "seed " + std::to_string(c["seed"].get<int>()) + " diverges";
        return false;
      }
    }
    return true;
  });

  gate.criterion(9, "scaling weight identity", 30.0, [](std::string& note) {
    for (auto [p, q, r] : {std::array<std::uint32_t, 3>{2, 3, 7},
                           std::array<std::uint32_t, 3>{2, 3, 11},
                           std::array<std::uint32_t, 3>{3, 4, 5}}) {
      auto report = gm_weight_check(p, q, r);
      if (!report.identity_holds ||
          report.lambda_exponent != std::uint64_t{p} * q * r) {
        note = "identity failed for (" + std::to_string(p) + "," +
               std::to_string(q) + "," + std::to_string(r) + ")";
        return false;
      }
      if (!report.center_preserved) {
        note = "center not preserved";
        return false;
      }
      if (report.z_weight_note.empty()) {
        note = "z-weight discrepancy not flagged";
        return false;
      }
    }
    return true;
  });

  if (gate.failures == 0) {
    std::cout << "all 9 criteria passed\n";
    return 0;
  }
  std::cout << gate.failures << " criterion(s) failed\n";
  return 1;
}

#include "sphereforge/families.hpp"

namespace sphereforge {

namespace {

RingPtr family_ring() { return make_ring({"x1", "y1", "x2", "y2", "U", "V"}); }

Polynomial family_equation(const RingPtr& ring) {
  Polynomial x1 = Polynomial::variable(ring, 0), y1 = Polynomial::variable(ring, 1),
             x2 = Polynomial::variable(ring, 2), y2 = Polynomial::variable(ring, 3),
             U = Polynomial::variable(ring, 4), V = Polynomial::variable(ring, 5);
  return (x2 - x1) * V - (y2 - y1) * U - Polynomial::constant(ring, 1);
}

}  // namespace

DiagonalFamily build_diagonal_family(const Budget& budget) {
  RingPtr ring = family_ring();
  AffineScheme total(ring, Ideal(ring, {family_equation(ring)}));
  DiagonalFamily family{total, total.dimension(budget),
                        total.smoothness(budget)};
  return family;
}

TrivializationReport verify_trivialization(const DiagonalFamily& family) {
  const RingPtr& src = family.total.ring();

  // Target: A^2 x SL2 in coordinates (s1, s2, a, b, U, V) with aV - bU = 1.
  RingPtr tgt = make_ring({"s1", "s2", "a", "b", "U", "V"});
  Polynomial a = Polynomial::variable(tgt, 2), b = Polynomial::variable(tgt, 3),
             Ut = Polynomial::variable(tgt, 4), Vt = Polynomial::variable(tgt, 5);
  Polynomial target_eq = a * Vt - b * Ut - Polynomial::constant(tgt, 1);
  AffineScheme target(tgt, Ideal(tgt, {target_eq}));

  Polynomial x1 = Polynomial::variable(src, 0), y1 = Polynomial::variable(src, 1),
             x2 = Polynomial::variable(src, 2), y2 = Polynomial::variable(src, 3),
             U = Polynomial::variable(src, 4), V = Polynomial::variable(src, 5);

  RegularMap phi(family.total, target, {x1, y1, x2 - x1, y2 - y1, U, V});
  Polynomial s1 = Polynomial::variable(tgt, 0), s2 = Polynomial::variable(tgt, 1);
  RegularMap psi(target, family.total, {s1, s2, a + s1, b + s2, Ut, Vt});

  TrivializationReport report;
  report.certificate = IsomorphismCertificate{phi, psi};

  // (i) the pullback of the target equation is our generator, term for term.
  report.pullback_matches =
      phi.pullback(target_eq) == family.total.defining_ideal().generators().at(0);

  // (ii) both composites are coordinate-wise identities as exact polynomials.
  bool ok = true;
  std::vector<Polynomial> round = phi.compose_components(psi);
  for (std::size_t i = 0; i < round.size(); ++i)
    ok = ok && round[i] == Polynomial::variable(src, i);
  round = psi.compose_components(phi);
  for (std::size_t i = 0; i < round.size(); ++i)
    ok = ok && round[i] == Polynomial::variable(tgt, i);
  report.compositions_identity = ok;

  // (iii) the base projection (x1, y1) is carried to (s1, s2) unchanged.
  report.base_projection_commutes =
      phi.components()[0] == x1 && phi.components()[1] == y1;
  return report;
}

FiberRestriction restrict_fiber(const DiagonalFamily& family, const Rational& p1,
                                const Rational& p2, const Budget& budget) {
  RingPtr fiber_ring = make_ring({"x2", "y2", "U", "V"});
  Polynomial x2 = Polynomial::variable(fiber_ring, 0),
             y2 = Polynomial::variable(fiber_ring, 1),
             U = Polynomial::variable(fiber_ring, 2),
             V = Polynomial::variable(fiber_ring, 3);

  // x1 -> p1, y1 -> p2, remaining coordinates pass through.
  std::vector<Polynomial> images = {Polynomial::constant(fiber_ring, p1),
                                    Polynomial::constant(fiber_ring, p2),
                                    x2, y2, U, V};
  std::vector<Polynomial> gens;
  for (const auto& g : family.total.defining_ideal().generators())
    gens.push_back(g.substitute(fiber_ring, images));
  AffineScheme fiber(fiber_ring, Ideal(fiber_ring, gens));

  // Independent route: the bundle over A^2 with center (x2 - p1, y2 - p2).
  RingPtr base_ring = make_ring({"x2", "y2"});
  AffineScheme base(base_ring, Ideal(base_ring, {}));
  CompleteIntersectionCenter center{
      base,
      Polynomial::variable(base_ring, 0) - Polynomial::constant(base_ring, p1),
      Polynomial::variable(base_ring, 1) - Polynomial::constant(base_ring, p2),
      {p1, p2},
      false};
  verify_support(center, budget);
  BundleTotalSpace direct = build_total_space(base, center);

  FiberRestriction out{{p1, p2}, fiber, false};
  std::vector<Polynomial> direct_gens;
  for (const auto& g : direct.total.defining_ideal().generators())
    direct_gens.push_back(g.embed(fiber_ring));
  out.matches_direct_construction = ideal_equality(
      fiber.defining_ideal(), Ideal(fiber_ring, std::move(direct_gens)), budget);
  return out;
}

}  // namespace sphereforge

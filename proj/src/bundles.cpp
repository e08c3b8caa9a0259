#include "sphereforge/bundles.hpp"

#include <numeric>
#include <sstream>

namespace sphereforge {

namespace {

std::string fresh_name(const RingPtr& ring, std::string base) {
  while (ring->variable_index(base)) base += "_";
  return base;
}

Ideal join(const Ideal& ideal, std::initializer_list<Polynomial> extra) {
  std::vector<Polynomial> gens = ideal.generators();
  for (const auto& p : extra) gens.push_back(p);
  return Ideal(ideal.ring(), std::move(gens));
}

}  // namespace

SupportReport verify_support(CompleteIntersectionCenter& center,
                             const Budget& budget) {
  require_same_ring(center.f.ring(), center.ambient.ring());
  require_same_ring(center.g.ring(), center.ambient.ring());
  const RingPtr& ring = center.ambient.ring();
  if (center.support_point.size() != ring->nvars())
    throw ContractError("support point arity mismatch");

  center.verified = false;
  Ideal support = join(center.ambient.defining_ideal(), {center.f, center.g});
  try {
    if (variety_is_empty(support, budget))
      return {CheckStatus::failed, "support is empty: 1 lies in I + (f, g)"};
    if (dimension(support, budget) != 0)
      return {CheckStatus::failed, "support is not zero-dimensional"};
    for (std::size_t i = 0; i < ring->nvars(); ++i) {
      Polynomial shifted =
          Polynomial::variable(ring, i) -
          Polynomial::constant(ring, center.support_point[i]);
      if (!radical_membership(shifted, support, budget)) {
        std::ostringstream msg;
        msg << "support is not concentrated at the claimed point: "
            << ring->variables()[i] << " - " << to_string(center.support_point[i])
            << " does not vanish on V(I + (f, g))";
        return {CheckStatus::failed, msg.str()};
      }
    }
  } catch (const BudgetExceeded& e) {
    return {CheckStatus::indeterminate, e.what()};
  }
  center.verified = true;
  return {CheckStatus::passed, ""};
}

BundleTotalSpace build_total_space(const AffineScheme& base,
                                   const CompleteIntersectionCenter& center,
                                   bool allow_unverified) {
  require_same_ring(base.ring(), center.ambient.ring());
  if (!center.verified && !allow_unverified)
    throw RejectedError(
        "center is unverified; run verify_support or override explicitly");

  std::vector<std::string> vars = base.ring()->variables();
  std::string u_name = fresh_name(base.ring(), "U");
  std::string v_name = fresh_name(base.ring(), "V");
  vars.push_back(u_name);
  vars.push_back(v_name);
  RingPtr total_ring = make_ring(std::move(vars));
  std::size_t u = total_ring->nvars() - 2, v = total_ring->nvars() - 1;

  std::vector<Polynomial> gens;
  for (const auto& g : base.defining_ideal().generators())
    gens.push_back(g.embed(total_ring));
  Polynomial equation = center.f.embed(total_ring) * Polynomial::variable(total_ring, v) -
                        center.g.embed(total_ring) * Polynomial::variable(total_ring, u) -
                        Polynomial::constant(total_ring, 1);
  gens.push_back(std::move(equation));

  return {base, center,
          AffineScheme(total_ring, Ideal(total_ring, std::move(gens))), u, v};
}

GaActionReport verify_ga_action(const BundleTotalSpace& space,
                                const Budget& budget) {
  GaActionReport report;
  const RingPtr& total_ring = space.total.ring();

  // (i) invariance: in the ring extended by the action parameter t,
  // f(V + g t) - g(U + f t) - (fV - gU) must expand to zero.
  std::vector<std::string> vars = total_ring->variables();
  vars.push_back(fresh_name(total_ring, "t"));
  RingPtr ext = make_ring(std::move(vars));
  Polynomial f = space.center.f.embed(ext), g = space.center.g.embed(ext);
  Polynomial u = Polynomial::variable(ext, space.u_index);
  Polynomial v = Polynomial::variable(ext, space.v_index);
  Polynomial t = Polynomial::variable(ext, ext->nvars() - 1);
  Polynomial moved = f * (v + g * t) - g * (u + f * t);
  report.invariance_identity = (moved - (f * v - g * u)).is_zero();

  // (ii) freeness: f = g = 0 has no solution on the total space.
  try {
    Ideal fixed = join(space.total.defining_ideal(),
                       {space.center.f.embed(total_ring),
                        space.center.g.embed(total_ring)});
    report.fixed_point_free = variety_is_empty(fixed, budget)
                                  ? CheckStatus::passed
                                  : CheckStatus::failed;
  } catch (const BudgetExceeded&) {
    report.fixed_point_free = CheckStatus::indeterminate;
  }
  return report;
}

Polynomial ResolutionChange::validated_determinant(const AffineScheme& base,
                                                   const Budget& budget) const {
  for (const Polynomial* e : {&a, &b, &c, &d})
    require_same_ring(e->ring(), base.ring());
  Polynomial det = a * d - b * c;
  const auto& gb = base.defining_ideal().groebner(budget).elements;
  Polynomial nf = gb.empty() ? det : normal_form(det, gb);
  if (nf.is_zero())
    throw RejectedError("matrix determinant lies in the base ideal");
  if (!nf.is_constant())
    throw RejectedError(
        "matrix determinant is not constant modulo the base ideal: " + nf.str());
  return nf;
}

ResolutionChangeResult resolution_change(const AffineScheme& base,
                                         const CompleteIntersectionCenter& center,
                                         const ResolutionChange& change,
                                         const Budget& budget) {
  require_same_ring(base.ring(), center.ambient.ring());
  change.validated_determinant(base, budget);

  Polynomial f_prime = change.a * center.f + change.b * center.g;
  Polynomial g_prime = change.c * center.f + change.d * center.g;

  // The ambient automorphism lives on base x A^2 (no bundle equation).
  std::vector<std::string> vars = base.ring()->variables();
  vars.push_back(fresh_name(base.ring(), "U"));
  vars.push_back(fresh_name(base.ring(), "V"));
  RingPtr ext = make_ring(std::move(vars));
  std::size_t ui = ext->nvars() - 2, vi = ext->nvars() - 1;

  std::vector<Polynomial> ambient_gens;
  for (const auto& gbase : base.defining_ideal().generators())
    ambient_gens.push_back(gbase.embed(ext));
  AffineScheme ambient(ext, Ideal(ext, ambient_gens));

  Polynomial U = Polynomial::variable(ext, ui), V = Polynomial::variable(ext, vi);
  Polynomial A = change.a.embed(ext), B = change.b.embed(ext);
  Polynomial C = change.c.embed(ext), D = change.d.embed(ext);
  std::vector<Polynomial> comps;
  for (std::size_t i = 0; i < base.ring()->nvars(); ++i)
    comps.push_back(Polynomial::variable(ext, i));
  comps.push_back(D * U - B * V);   // image of U
  comps.push_back(A * V - C * U);   // image of V
  RegularMap automorphism(ambient, ambient, std::move(comps));

  ResolutionChangeResult result{
      f_prime,
      g_prime,
      CompleteIntersectionCenter{center.ambient, f_prime, g_prime,
                                 center.support_point, false},
      std::move(automorphism),
      false,
      false};

  // f (aV - cU) - g (dU - bV) = f'V - g'U modulo the base ideal.
  Polynomial lhs = center.f.embed(ext) * (A * V - C * U) -
                   center.g.embed(ext) * (D * U - B * V);
  Polynomial rhs = f_prime.embed(ext) * V - g_prime.embed(ext) * U;
  const auto& gb = ambient.defining_ideal().groebner(budget).elements;
  Polynomial diff = lhs - rhs;
  result.defining_equation_matches =
      gb.empty() ? diff.is_zero() : normal_form(diff, gb).is_zero();

  result.center_ideal_equal = ideal_equality(
      join(base.defining_ideal(), {f_prime, g_prime}),
      join(base.defining_ideal(), {center.f, center.g}), budget);

  result.new_center.verified = center.verified && result.center_ideal_equal;
  return result;
}

PairIsoVerdict verify_pair_isomorphism(const AffineScheme& left_base,
                                       const CompleteIntersectionCenter& left,
                                       const AffineScheme& right_base,
                                       const CompleteIntersectionCenter& right,
                                       const IsomorphismCertificate& cert,
                                       const Budget& budget) {
  require_same_ring(cert.forward.source().ring(), left_base.ring());
  require_same_ring(cert.forward.target().ring(), right_base.ring());
  try {
    if (!cert.validate(budget)) return PairIsoVerdict::certificate_invalid;
    Polynomial f2 = cert.forward.pullback(right.f);
    Polynomial g2 = cert.forward.pullback(right.g);
    bool carried = ideal_equality(
        Ideal(left_base.ring(),
              [&] {
                auto gens = left_base.defining_ideal().generators();
                gens.push_back(f2);
                gens.push_back(g2);
                return gens;
              }()),
        Ideal(left_base.ring(),
              [&] {
                auto gens = left_base.defining_ideal().generators();
                gens.push_back(left.f);
                gens.push_back(left.g);
                return gens;
              }()),
        budget);
    return carried ? PairIsoVerdict::pairs_isomorphic
                   : PairIsoVerdict::center_mismatch;
  } catch (const BudgetExceeded&) {
    return PairIsoVerdict::indeterminate;
  }
}

AffineScheme brieskorn(std::uint32_t p, std::uint32_t q, std::uint32_t r) {
  auto reject = [](const std::string& why) { throw RejectedError(why); };
  if (p < 2 || q < 2 || r < 2) reject("brieskorn exponents must be >= 2");
  auto check_coprime = [&](std::uint32_t a, std::uint32_t b) {
    if (std::gcd(a, b) != 1) {
      std::ostringstream msg;
      msg << "brieskorn exponents not pairwise coprime: gcd(" << a << "," << b
          << ") = " << std::gcd(a, b);
      reject(msg.str());
    }
  };
  check_coprime(p, q);
  check_coprime(p, r);
  check_coprime(q, r);
  Rational sum = Rational(1, p) + Rational(1, q) + Rational(1, r);
  if (sum >= 1) {
    std::ostringstream msg;
    msg << "brieskorn condition 1/p + 1/q + 1/r < 1 fails: sum = "
        << to_string(sum);
    reject(msg.str());
  }
  RingPtr ring = make_ring({"x", "y", "z"});
  Polynomial eq = Polynomial::variable(ring, 0).pow(p) +
                  Polynomial::variable(ring, 1).pow(q) +
                  Polynomial::variable(ring, 2).pow(r);
  return AffineScheme(ring, Ideal(ring, {std::move(eq)}));
}

GmWeightReport gm_weight_check(std::uint32_t p, std::uint32_t q, std::uint32_t r,
                               std::uint32_t m, std::uint32_t n) {
  brieskorn(p, q, r);  // parameter validation

  RingPtr ring = make_ring({"x", "y", "z", "lambda"});
  Polynomial x = Polynomial::variable(ring, 0), y = Polynomial::variable(ring, 1),
             z = Polynomial::variable(ring, 2),
             lam = Polynomial::variable(ring, 3);
  Polynomial surface = x.pow(p) + y.pow(q) + z.pow(r);

  // Weights (qr, pr, pq) on (x, y, z).
  std::vector<Polynomial> images = {lam.pow(q * r) * x, lam.pow(p * r) * y,
                                    lam.pow(p * q) * z, lam};
  GmWeightReport report;
  report.lambda_exponent = std::uint64_t(p) * q * r;
  Polynomial moved = surface.substitute(ring, images);
  report.identity_holds =
      moved == lam.pow(static_cast<std::uint32_t>(report.lambda_exponent)) * surface;

  // Monomial center generators rescale by pure lambda powers.
  Polynomial xm = x.pow(m), yn = y.pow(n);
  report.center_preserved =
      xm.substitute(ring, images) == lam.pow(q * r * m) * xm &&
      yn.substitute(ring, images) == lam.pow(p * r * n) * yn;

  report.z_weight_note =
      "z is scaled with weight p*q = " + std::to_string(p * q) +
      "; the weight q*r = " + std::to_string(q * r) +
      " sometimes quoted for this action does not rescale z^r by "
      "lambda^(p*q*r) for general pairwise-coprime triples";
  return report;
}

}  // namespace sphereforge

#ifndef SPHEREFORGE_BUNDLES_HPP
#define SPHEREFORGE_BUNDLES_HPP

#include <cstdint>
#include <string>

#include "sphereforge/scheme.hpp"

namespace sphereforge {

// Two-generator center Z = V(f, g) on a surface, with its claimed support
// point. `verified` is set only by verify_support.
struct CompleteIntersectionCenter {
  AffineScheme ambient;
  Polynomial f;
  Polynomial g;
  std::vector<Rational> support_point;
  bool verified = false;
};

enum class CheckStatus { passed, failed, indeterminate };

struct SupportReport {
  CheckStatus status = CheckStatus::failed;
  std::string failed_check;  // names the first failed check
};

// Checks that V(f, g) on the ambient scheme is nonempty, zero-dimensional,
// and set-theoretically equal to the claimed point.
SupportReport verify_support(CompleteIntersectionCenter& center,
                             const Budget& budget = {});

// Total space {fV - gU = 1} over the center's ambient surface, in the
// ambient coordinates extended by U, V.
struct BundleTotalSpace {
  AffineScheme base;
  CompleteIntersectionCenter center;
  AffineScheme total;
  std::size_t u_index;  // positions of U, V in the total ring
  std::size_t v_index;
};

BundleTotalSpace build_total_space(const AffineScheme& base,
                                   const CompleteIntersectionCenter& center,
                                   bool allow_unverified = false);

// Additive group action t.(s, U, V) = (s, U + f t, V + g t): invariance of
// fV - gU is an exact polynomial identity; freeness needs f = g = 0 to be
// impossible on the total space.
struct GaActionReport {
  bool invariance_identity = false;
  CheckStatus fixed_point_free = CheckStatus::indeterminate;
  bool passed() const {
    return invariance_identity && fixed_point_free == CheckStatus::passed;
  }
};

GaActionReport verify_ga_action(const BundleTotalSpace& space,
                                const Budget& budget = {});

// 2x2 matrix of base functions acting on generator pairs. Accepted only
// when the normal form of the determinant modulo the base ideal is a
// nonzero constant (a sufficient unit condition, exact on surfaces whose
// only units are constants).
struct ResolutionChange {
  Polynomial a, b, c, d;

  // Throws RejectedError unless the determinant condition holds; returns
  // the determinant's normal form.
  Polynomial validated_determinant(const AffineScheme& base,
                                   const Budget& budget = {}) const;
};

struct ResolutionChangeResult {
  Polynomial f_prime;  // af + bg
  Polynomial g_prime;  // cf + dg
  CompleteIntersectionCenter new_center;
  // Automorphism of base x A^2 fixing the base coordinates and sending
  // (U, V) to (dU - bV, -cU + aV).
  RegularMap automorphism;
  bool defining_equation_matches = false;  // fV' - gU' = f'V - g'U mod base ideal
  bool center_ideal_equal = false;         // (f', g') + I = (f, g) + I
  bool passed() const { return defining_equation_matches && center_ideal_equal; }
};

ResolutionChangeResult resolution_change(const AffineScheme& base,
                                         const CompleteIntersectionCenter& center,
                                         const ResolutionChange& change,
                                         const Budget& budget = {});

enum class PairIsoVerdict {
  pairs_isomorphic,
  certificate_invalid,
  center_mismatch,
  indeterminate
};

// Sufficiency check only: a valid certificate carrying one center onto the
// other proves the pairs isomorphic; nothing is ever concluded from a
// failing certificate beyond its own invalidity.
PairIsoVerdict verify_pair_isomorphism(const AffineScheme& left_base,
                                       const CompleteIntersectionCenter& left,
                                       const AffineScheme& right_base,
                                       const CompleteIntersectionCenter& right,
                                       const IsomorphismCertificate& cert,
                                       const Budget& budget = {});

// {x^p + y^q + z^r = 0} for p, q, r >= 2 pairwise coprime with
// 1/p + 1/q + 1/r < 1; throws RejectedError naming the violated condition.
AffineScheme brieskorn(std::uint32_t p, std::uint32_t q, std::uint32_t r);

// Scaling action with weights (qr, pr, pq) on (x, y, z): the defining
// polynomial rescales by lambda^(pqr) and monomial centers (x^m, y^n) are
// preserved up to unit multiples.
struct GmWeightReport {
  bool identity_holds = false;
  std::uint64_t lambda_exponent = 0;  // p*q*r
  bool center_preserved = false;
  // The z-weight that makes the identity hold is pq; the alternative qr
  // sometimes quoted for this action fails for general coprime triples.
  std::string z_weight_note;
};

GmWeightReport gm_weight_check(std::uint32_t p, std::uint32_t q, std::uint32_t r,
                               std::uint32_t m = 1, std::uint32_t n = 1);

}  // namespace sphereforge

#endif

#ifndef SPHEREFORGE_FAMILIES_HPP
#define SPHEREFORGE_FAMILIES_HPP

#include "sphereforge/bundles.hpp"

namespace sphereforge {

// Total space over A^2 x A^2 minus the diagonal: the single equation
// (x2 - x1)V - (y2 - y1)U = 1 in Q[x1, y1, x2, y2, U, V], with the base
// projection onto (x1, y1).
struct DiagonalFamily {
  AffineScheme total;
  int dimension = -1;
  SmoothnessVerdict smoothness{SmoothnessVerdict::Kind::indeterminate, {}, ""};
};

DiagonalFamily build_diagonal_family(const Budget& budget = {});

// Global coordinates trivialize the family over A^2: an explicit mutually
// inverse pair between the total space and A^2 x SL2.
struct TrivializationReport {
  bool pullback_matches = false;        // target equation pulls back to ours
  bool compositions_identity = false;   // both composites, exact identities
  bool base_projection_commutes = false;
  std::optional<IsomorphismCertificate> certificate;
  bool passed() const {
    return pullback_matches && compositions_identity && base_projection_commutes;
  }
};

TrivializationReport verify_trivialization(const DiagonalFamily& family);

// Freeze the base point: substitute (x1, y1) = p and compare with the
// directly built bundle over A^2 in coordinates (x2, y2).
struct FiberRestriction {
  std::vector<Rational> point;  // (p1, p2)
  AffineScheme fiber;           // in Q[x2, y2, U, V]
  bool matches_direct_construction = false;
};

FiberRestriction restrict_fiber(const DiagonalFamily& family,
                                const Rational& p1, const Rational& p2,
                                const Budget& budget = {});

}  // namespace sphereforge

#endif

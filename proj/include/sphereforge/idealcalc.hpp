#ifndef SPHEREFORGE_IDEALCALC_HPP
#define SPHEREFORGE_IDEALCALC_HPP

#include <optional>
#include <string>
#include <vector>

#include "sphereforge/groebner.hpp"

namespace sphereforge {

// Finitely generated ideal. The zero ideal is the empty generator list;
// zero generators are dropped on construction.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Polynomial> generators);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return generators_; }

  // Reduced grevlex basis, computed on demand and cached.
  const GroebnerBasis& groebner(const Budget& budget = {}) const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> generators_;
  mutable std::optional<GroebnerBasis> cached_gb_;
};

// h = sum(cofactors[i] * generators[i]); re-checkable by direct expansion.
struct MembershipCertificate {
  Polynomial target;
  std::vector<Polynomial> cofactors;

  bool expand_and_check(const Ideal& ideal) const;
};

struct MembershipResult {
  bool member = false;
  std::optional<MembershipCertificate> certificate;
};

MembershipResult ideal_membership(const Polynomial& h, const Ideal& ideal,
                                  bool want_certificate = false,
                                  const Budget& budget = {});

// Rabinowitsch: h vanishes on V(I) over C iff 1 in I + (1 - t*h) for a
// fresh variable t.
bool radical_membership(const Polynomial& h, const Ideal& ideal,
                        const Budget& budget = {});

// Reduced bases under a common order are canonical, so equality is an
// element-wise comparison.
bool ideal_equality(const Ideal& lhs, const Ideal& rhs, const Budget& budget = {});

// <I> intersect Q[remaining variables], via a block order; the result is
// presented in the same ambient ring with generators free of `vars`.
Ideal eliminate(const Ideal& ideal, const std::vector<std::size_t>& vars,
                const Budget& budget = {});

// Krull dimension of the quotient, combinatorial on the grevlex staircase;
// -1 for the empty variety.
int dimension(const Ideal& ideal, const Budget& budget = {});

// Weak Nullstellensatz over C: empty iff the reduced basis is {1}.
bool variety_is_empty(const Ideal& ideal, const Budget& budget = {});

struct SmoothnessVerdict {
  enum class Kind { smooth, singular, indeterminate };
  Kind kind;
  // Singular-locus ideal I + (c x c Jacobian minors); present for singular.
  std::optional<Ideal> witness;
  std::string detail;

  bool is_smooth() const { return kind == Kind::smooth; }
};

// Jacobian criterion for complete-intersection presentations: with
// c = ambient_dim - dim(I) and exactly c generators, the scheme is smooth
// iff V(I + all c x c minors of the Jacobian) is empty. Presentations with
// more generators than c are reported indeterminate, not guessed at.
SmoothnessVerdict smoothness_check(const Ideal& ideal, std::size_t ambient_dim,
                                   const Budget& budget = {});

}  // namespace sphereforge

#endif

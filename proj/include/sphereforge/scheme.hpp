#ifndef SPHEREFORGE_SCHEME_HPP
#define SPHEREFORGE_SCHEME_HPP

#include <optional>
#include <string>
#include <vector>

#include "sphereforge/idealcalc.hpp"

namespace sphereforge {

// Domain-level rejection (invalid parameters, unverified inputs). Distinct
// from ContractError: these are expected user-facing failures.
struct RejectedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Closed subscheme of affine space: ambient coordinates plus defining ideal.
class AffineScheme {
 public:
  AffineScheme(RingPtr ring, Ideal defining_ideal);

  static AffineScheme affine_space(std::vector<std::string> variables);

  const RingPtr& ring() const { return ring_; }
  const Ideal& defining_ideal() const { return ideal_; }
  std::size_t ambient_dim() const { return ring_->nvars(); }

  int dimension(const Budget& budget = {}) const;
  const SmoothnessVerdict& smoothness(const Budget& budget = {}) const;

 private:
  RingPtr ring_;
  Ideal ideal_;
  mutable std::optional<int> cached_dimension_;
  mutable std::optional<SmoothnessVerdict> cached_smoothness_;
};

// Coordinate map between schemes: one source-ring polynomial per target
// ambient variable.
class RegularMap {
 public:
  RegularMap(AffineScheme source, AffineScheme target,
             std::vector<Polynomial> components);

  static RegularMap identity(const AffineScheme& scheme);

  const AffineScheme& source() const { return source_; }
  const AffineScheme& target() const { return target_; }
  const std::vector<Polynomial>& components() const { return components_; }

  // phi^*(p) = p(components), a source-ring polynomial.
  Polynomial pullback(const Polynomial& p) const;

  // Every target defining generator pulls back into the source ideal.
  bool is_well_defined(const Budget& budget = {}) const;

  // Component list of other-after-this, in this->source coordinates.
  std::vector<Polynomial> compose_components(const RegularMap& other) const;

 private:
  AffineScheme source_;
  AffineScheme target_;
  std::vector<Polynomial> components_;
};

// Mutually inverse regular maps; validity means both maps are well defined
// and both composites are the identity modulo the respective ideals.
struct IsomorphismCertificate {
  RegularMap forward;
  RegularMap inverse;

  bool validate(const Budget& budget = {}) const;
};

}  // namespace sphereforge

#endif

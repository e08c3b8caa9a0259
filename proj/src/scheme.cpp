#include "sphereforge/scheme.hpp"

namespace sphereforge {

AffineScheme::AffineScheme(RingPtr ring, Ideal defining_ideal)
    : ring_(std::move(ring)), ideal_(std::move(defining_ideal)) {
  require_same_ring(ring_, ideal_.ring());
  // Cheap unit-ideal screen; the full Nullstellensatz check runs inside the
  // operations that need it.
  for (const auto& g : ideal_.generators())
    if (g.is_constant() && !g.is_zero())
      throw RejectedError("scheme with unit defining ideal is empty");
}

AffineScheme AffineScheme::affine_space(std::vector<std::string> variables) {
  RingPtr ring = make_ring(std::move(variables));
  return AffineScheme(ring, Ideal(ring, {}));
}

int AffineScheme::dimension(const Budget& budget) const {
  if (!cached_dimension_) cached_dimension_ = sphereforge::dimension(ideal_, budget);
  return *cached_dimension_;
}

const SmoothnessVerdict& AffineScheme::smoothness(const Budget& budget) const {
  if (!cached_smoothness_)
    cached_smoothness_ = smoothness_check(ideal_, ring_->nvars(), budget);
  return *cached_smoothness_;
}

RegularMap::RegularMap(AffineScheme source, AffineScheme target,
                       std::vector<Polynomial> components)
    : source_(std::move(source)),
      target_(std::move(target)),
      components_(std::move(components)) {
  if (components_.size() != target_.ring()->nvars())
    throw ContractError("regular map needs one component per target variable");
  for (const auto& c : components_) require_same_ring(c.ring(), source_.ring());
}

RegularMap RegularMap::identity(const AffineScheme& scheme) {
  std::vector<Polynomial> comps;
  for (std::size_t i = 0; i < scheme.ring()->nvars(); ++i)
    comps.push_back(Polynomial::variable(scheme.ring(), i));
  return RegularMap(scheme, scheme, std::move(comps));
}

Polynomial RegularMap::pullback(const Polynomial& p) const {
  require_same_ring(p.ring(), target_.ring());
  return p.substitute(source_.ring(), components_);
}

bool RegularMap::is_well_defined(const Budget& budget) const {
  const auto& gb = source_.defining_ideal().groebner(budget).elements;
  for (const auto& gen : target_.defining_ideal().generators()) {
    Polynomial pulled = pullback(gen);
    if (gb.empty() ? !pulled.is_zero() : !normal_form(pulled, gb).is_zero())
      return false;
  }
  return true;
}

std::vector<Polynomial> RegularMap::compose_components(
    const RegularMap& other) const {
  // other after this: requires this->target and other.source to share a ring.
  require_same_ring(target_.ring(), other.source_.ring());
  std::vector<Polynomial> out;
  for (const auto& c : other.components_)
    out.push_back(c.substitute(source_.ring(), components_));
  return out;
}

bool IsomorphismCertificate::validate(const Budget& budget) const {
  require_same_ring(forward.source().ring(), inverse.target().ring());
  require_same_ring(forward.target().ring(), inverse.source().ring());
  if (!forward.is_well_defined(budget) || !inverse.is_well_defined(budget))
    return false;

  const auto& src_gb = forward.source().defining_ideal().groebner(budget).elements;
  const auto& tgt_gb = forward.target().defining_ideal().groebner(budget).elements;
  auto reduces_to_zero = [](const Polynomial& p,
                            const std::vector<Polynomial>& gb) {
    return gb.empty() ? p.is_zero() : normal_form(p, gb).is_zero();
  };

  // inverse o forward = id modulo the source ideal.
  std::vector<Polynomial> round = forward.compose_components(inverse);
  for (std::size_t i = 0; i < round.size(); ++i) {
    Polynomial diff = round[i] - Polynomial::variable(forward.source().ring(), i);
    if (!reduces_to_zero(diff, src_gb)) return false;
  }
  // forward o inverse = id modulo the target ideal.
  round = inverse.compose_components(forward);
  for (std::size_t i = 0; i < round.size(); ++i) {
    Polynomial diff = round[i] - Polynomial::variable(inverse.source().ring(), i);
    if (!reduces_to_zero(diff, tgt_gb)) return false;
  }
  return true;
}

}  // namespace sphereforge

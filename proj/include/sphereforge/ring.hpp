#ifndef SPHEREFORGE_RING_HPP
#define SPHEREFORGE_RING_HPP

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sphereforge/monomial.hpp"

namespace sphereforge {

// Contract violations (ring mismatch, malformed inputs).
struct ContractError : std::logic_error {
  using std::logic_error::logic_error;
};

// A polynomial ring Q[x1,...,xn] with a fixed monomial order. Immutable;
// shared by reference between all values built over it.
class PolynomialRing {
 public:
  PolynomialRing(std::vector<std::string> variables, MonomialOrder order)
      : variables_(std::move(variables)), order_(std::move(order)) {
    for (std::size_t i = 0; i < variables_.size(); ++i)
      for (std::size_t j = i + 1; j < variables_.size(); ++j)
        if (variables_[i] == variables_[j])
          throw ContractError("duplicate ring variable: " + variables_[i]);
    if (order_.kind == MonomialOrder::Kind::block &&
        order_.eliminated.size() != variables_.size())
      throw ContractError("block order mask length mismatch");
  }

  const std::vector<std::string>& variables() const { return variables_; }
  std::size_t nvars() const { return variables_.size(); }
  const MonomialOrder& order() const { return order_; }

  std::optional<std::size_t> variable_index(const std::string& name) const {
    for (std::size_t i = 0; i < variables_.size(); ++i)
      if (variables_[i] == name) return i;
    return std::nullopt;
  }

  bool same_as(const PolynomialRing& other) const {
    return this == &other ||
           (variables_ == other.variables_ && order_ == other.order_);
  }

 private:
  std::vector<std::string> variables_;
  MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const PolynomialRing>;

inline RingPtr make_ring(std::vector<std::string> variables,
                         MonomialOrder order = MonomialOrder::grevlex()) {
  return std::make_shared<PolynomialRing>(std::move(variables), std::move(order));
}

// Same variables, different monomial order.
inline RingPtr with_order(const RingPtr& ring, MonomialOrder order) {
  return make_ring(ring->variables(), std::move(order));
}

inline void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (!a || !b || !a->same_as(*b))
    throw ContractError("operands live in different rings");
}

}  // namespace sphereforge

#endif

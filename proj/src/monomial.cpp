#include "sphereforge/monomial.hpp"

#include <stdexcept>

namespace sphereforge {

namespace {

// Graded reverse lexicographic on a masked subset of positions. An empty
// mask means all positions.
Ordering grevlex_masked(const Monomial& m1, const Monomial& m2,
                        const std::vector<bool>* mask, bool in_mask) {
  std::uint64_t d1 = 0, d2 = 0;
  for (std::size_t i = 0; i < m1.exp.size(); ++i) {
    if (mask && (*mask)[i] != in_mask) continue;
    d1 += m1.exp[i];
    d2 += m2.exp[i];
  }
  if (d1 != d2) return d1 > d2 ? Ordering::greater : Ordering::less;
  // Equal degree: the last differing position decides, smaller exponent wins.
  for (std::size_t i = m1.exp.size(); i-- > 0;) {
    if (mask && (*mask)[i] != in_mask) continue;
    if (m1.exp[i] != m2.exp[i])
      return m1.exp[i] < m2.exp[i] ? Ordering::greater : Ordering::less;
  }
  return Ordering::equal;
}

}  // namespace

Ordering compare_monomials(const Monomial& m1, const Monomial& m2,
                           const MonomialOrder& order) {
  if (m1.exp.size() != m2.exp.size())
    throw std::invalid_argument("monomials from different rings");
  switch (order.kind) {
    case MonomialOrder::Kind::grevlex:
      return grevlex_masked(m1, m2, nullptr, true);
    case MonomialOrder::Kind::lex:
      for (std::size_t i = 0; i < m1.exp.size(); ++i)
        if (m1.exp[i] != m2.exp[i])
          return m1.exp[i] > m2.exp[i] ? Ordering::greater : Ordering::less;
      return Ordering::equal;
    case MonomialOrder::Kind::block: {
      if (order.eliminated.size() != m1.exp.size())
        throw std::invalid_argument("block order mask length mismatch");
      // Eliminated block first: a monomial touching it beats one free of it.
      Ordering head = grevlex_masked(m1, m2, &order.eliminated, true);
      if (head != Ordering::equal) return head;
      return grevlex_masked(m1, m2, &order.eliminated, false);
    }
  }
  throw std::logic_error("unreachable monomial order kind");
}

}  // namespace sphereforge

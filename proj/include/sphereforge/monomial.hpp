#ifndef SPHEREFORGE_MONOMIAL_HPP
#define SPHEREFORGE_MONOMIAL_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace sphereforge {

// Exponent vector, one entry per ring variable.
struct Monomial {
  std::vector<std::uint32_t> exp;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exp(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> e) : exp(std::move(e)) {}

  std::size_t nvars() const { return exp.size(); }

  std::uint64_t degree() const {
    return std::accumulate(exp.begin(), exp.end(), std::uint64_t{0});
  }

  bool is_one() const {
    for (auto e : exp)
      if (e != 0) return false;
    return true;
  }

  bool divides(const Monomial& m) const {
    for (std::size_t i = 0; i < exp.size(); ++i)
      if (exp[i] > m.exp[i]) return false;
    return true;
  }

  Monomial operator*(const Monomial& m) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < exp.size(); ++i) r.exp[i] += m.exp[i];
    return r;
  }

  // Requires m.divides(*this).
  Monomial operator/(const Monomial& m) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < exp.size(); ++i) {
      if (m.exp[i] > r.exp[i]) throw std::invalid_argument("monomial quotient undefined");
      r.exp[i] -= m.exp[i];
    }
    return r;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (std::size_t i = 0; i < r.exp.size(); ++i)
      if (b.exp[i] > r.exp[i]) r.exp[i] = b.exp[i];
    return r;
  }

  bool operator==(const Monomial& m) const { return exp == m.exp; }
  bool operator!=(const Monomial& m) const { return exp != m.exp; }
};

enum class Ordering { less, equal, greater };

// Total multiplicative monomial order. Block orders eliminate a declared
// variable subset: any monomial touching the subset exceeds any monomial
// free of it (degree in the block is compared first).
struct MonomialOrder {
  enum class Kind { grevlex, lex, block };

  Kind kind = Kind::grevlex;
  // For block orders: true at positions of eliminated variables.
  std::vector<bool> eliminated;

  static MonomialOrder grevlex() { return {Kind::grevlex, {}}; }
  static MonomialOrder lex() { return {Kind::lex, {}}; }
  static MonomialOrder block(std::vector<bool> elim) {
    return {Kind::block, std::move(elim)};
  }

  bool operator==(const MonomialOrder& o) const {
    return kind == o.kind && eliminated == o.eliminated;
  }
  bool operator!=(const MonomialOrder& o) const { return !(*this == o); }
};

Ordering compare_monomials(const Monomial& m1, const Monomial& m2,
                           const MonomialOrder& order);

inline bool monomial_less(const Monomial& m1, const Monomial& m2,
                          const MonomialOrder& order) {
  return compare_monomials(m1, m2, order) == Ordering::less;
}

}  // namespace sphereforge

#endif

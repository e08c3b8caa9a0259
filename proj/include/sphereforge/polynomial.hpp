#ifndef SPHEREFORGE_POLYNOMIAL_HPP
#define SPHEREFORGE_POLYNOMIAL_HPP

#include <string>
#include <utility>
#include <vector>

#include "sphereforge/rational.hpp"
#include "sphereforge/ring.hpp"

namespace sphereforge {

struct Term {
  Monomial monomial;
  Rational coefficient;  // never zero in a stored polynomial
};

// Sparse exact polynomial. Terms are kept strictly descending under the
// ring's monomial order; zero is the empty term list.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
  static Polynomial constant(RingPtr ring, const Rational& c);
  static Polynomial variable(const RingPtr& ring, std::size_t index);
  static Polynomial term(RingPtr ring, Monomial m, const Rational& c);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
  }

  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().monomial; }
  const Rational& leading_coefficient() const { return leading_term().coefficient; }

  std::uint64_t total_degree() const;  // 0 for the zero polynomial

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& q) const;
  Polynomial operator-(const Polynomial& q) const;
  Polynomial operator*(const Polynomial& q) const;
  Polynomial operator*(const Rational& c) const;
  Polynomial pow(std::uint32_t e) const;

  bool operator==(const Polynomial& q) const;
  bool operator!=(const Polynomial& q) const { return !(*this == q); }

  // Monic rescale (unit normalization); identity on zero.
  Polynomial monic() const;

  // p - (coefficient/LC(b)) * (monomial/LM(b)) * b for a single reduction
  // step is expressed via this helper: returns *this - c * m * b.
  Polynomial subtract_scaled(const Rational& c, const Monomial& m,
                             const Polynomial& b) const;

  // d/d(variable index). Exact formal derivative.
  Polynomial derivative(std::size_t var) const;

  // Ring homomorphism determined by images[i] = image of variable i; all
  // images must live in `target` (which fixes the coefficient embedding).
  Polynomial substitute(const RingPtr& target,
                        const std::vector<Polynomial>& images) const;

  // Same variables in the same positions, different monomial order.
  Polynomial with_order(const RingPtr& target) const;

  // Maps each variable by name into a ring that contains all of them.
  Polynomial embed(const RingPtr& target) const;

  Rational evaluate(const std::vector<Rational>& point) const;

  std::string str() const;

 private:
  friend class PolynomialBuilder;
  RingPtr ring_;
  std::vector<Term> terms_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

// Accumulates unordered (monomial, coefficient) contributions, then emits a
// canonically ordered polynomial with zero coefficients dropped.
class PolynomialBuilder {
 public:
  explicit PolynomialBuilder(RingPtr ring) : ring_(std::move(ring)) {}
  void add(const Monomial& m, const Rational& c);
  Polynomial build();

 private:
  RingPtr ring_;
  std::vector<Term> entries_;
};

struct SyntaxError : std::runtime_error {
  std::size_t position;  // byte offset into the parsed text
  SyntaxError(std::string message, std::size_t pos)
      : std::runtime_error(std::move(message)), position(pos) {}
};

// Parses the shared polynomial text syntax: integers, variable names,
// `+ - * ^`, parentheses; no implicit multiplication.
Polynomial parse_polynomial(const std::string& text, const RingPtr& ring);

}  // namespace sphereforge

#endif

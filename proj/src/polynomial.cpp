#include "sphereforge/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace sphereforge {

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
  Polynomial p(std::move(ring));
  if (c != 0) p.terms_.push_back({Monomial(p.ring_->nvars()), c});
  return p;
}

Polynomial Polynomial::variable(const RingPtr& ring, std::size_t index) {
  if (index >= ring->nvars()) throw ContractError("variable index out of range");
  Monomial m(ring->nvars());
  m.exp[index] = 1;
  return term(ring, std::move(m), 1);
}

Polynomial Polynomial::term(RingPtr ring, Monomial m, const Rational& c) {
  Polynomial p(std::move(ring));
  if (m.nvars() != p.ring_->nvars()) throw ContractError("monomial arity mismatch");
  if (c != 0) p.terms_.push_back({std::move(m), c});
  return p;
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw ContractError("leading term of the zero polynomial");
  return terms_.front();
}

std::uint64_t Polynomial::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& t : r.terms_) t.coefficient = -t.coefficient;
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& q) const {
  require_same_ring(ring_, q.ring_);
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size() + q.terms_.size());
  // Merge two descending term streams.
  std::size_t i = 0, j = 0;
  const auto& order = ring_->order();
  while (i < terms_.size() && j < q.terms_.size()) {
    Ordering c = compare_monomials(terms_[i].monomial, q.terms_[j].monomial, order);
    if (c == Ordering::greater) {
      r.terms_.push_back(terms_[i++]);
    } else if (c == Ordering::less) {
      r.terms_.push_back(q.terms_[j++]);
    } else {
      Rational s = terms_[i].coefficient + q.terms_[j].coefficient;
      if (s != 0) r.terms_.push_back({terms_[i].monomial, std::move(s)});
      ++i, ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < q.terms_.size(); ++j) r.terms_.push_back(q.terms_[j]);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& q) const { return *this + (-q); }

Polynomial Polynomial::operator*(const Polynomial& q) const {
  require_same_ring(ring_, q.ring_);
  PolynomialBuilder b(ring_);
  for (const auto& s : terms_)
    for (const auto& t : q.terms_)
      b.add(s.monomial * t.monomial, s.coefficient * t.coefficient);
  return b.build();
}

Polynomial Polynomial::operator*(const Rational& c) const {
  if (c == 0) return zero(ring_);
  Polynomial r(*this);
  for (auto& t : r.terms_) t.coefficient *= c;
  return r;
}

Polynomial Polynomial::pow(std::uint32_t e) const {
  Polynomial r = constant(ring_, 1);
  Polynomial base(*this);
  while (e) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

bool Polynomial::operator==(const Polynomial& q) const {
  if (!ring_ || !q.ring_) return terms_.empty() && q.terms_.empty();
  require_same_ring(ring_, q.ring_);
  if (terms_.size() != q.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].monomial != q.terms_[i].monomial ||
        terms_[i].coefficient != q.terms_[i].coefficient)
      return false;
  return true;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  Rational inv = Rational(1) / leading_coefficient();
  return *this * inv;
}

Polynomial Polynomial::subtract_scaled(const Rational& c, const Monomial& m,
                                       const Polynomial& b) const {
  Polynomial scaled(ring_);
  scaled.terms_.reserve(b.terms_.size());
  for (const auto& t : b.terms_)
    scaled.terms_.push_back({t.monomial * m, t.coefficient * c});
  // Multiplying every term by a fixed monomial preserves the descending
  // order (the order is multiplicative), so no re-sort is needed.
  return *this - scaled;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  if (var >= ring_->nvars()) throw ContractError("variable index out of range");
  PolynomialBuilder b(ring_);
  for (const auto& t : terms_) {
    std::uint32_t e = t.monomial.exp[var];
    if (e == 0) continue;
    Monomial m = t.monomial;
    m.exp[var] = e - 1;
    b.add(m, t.coefficient * e);
  }
  return b.build();
}

Polynomial Polynomial::substitute(const RingPtr& target,
                                  const std::vector<Polynomial>& images) const {
  if (images.size() != ring_->nvars())
    throw ContractError("substitution needs one image per variable");
  for (const auto& img : images) require_same_ring(img.ring(), target);
  Polynomial result = Polynomial::zero(target);
  for (const auto& t : terms_) {
    Polynomial prod = Polynomial::constant(target, t.coefficient);
    for (std::size_t v = 0; v < images.size(); ++v)
      if (t.monomial.exp[v] != 0) prod = prod * images[v].pow(t.monomial.exp[v]);
    result = result + prod;
  }
  return result;
}

Polynomial Polynomial::with_order(const RingPtr& target) const {
  if (target->variables() != ring_->variables())
    throw ContractError("with_order requires identical variables");
  Polynomial r(target);
  r.terms_ = terms_;
  std::sort(r.terms_.begin(), r.terms_.end(), [&](const Term& a, const Term& b) {
    return compare_monomials(a.monomial, b.monomial, target->order()) ==
           Ordering::greater;
  });
  return r;
}

Polynomial Polynomial::embed(const RingPtr& target) const {
  std::vector<std::size_t> where(ring_->nvars());
  for (std::size_t v = 0; v < ring_->nvars(); ++v) {
    auto idx = target->variable_index(ring_->variables()[v]);
    if (!idx) throw ContractError("embed: target ring lacks variable " +
                                  ring_->variables()[v]);
    where[v] = *idx;
  }
  PolynomialBuilder b(target);
  for (const auto& t : terms_) {
    Monomial m(target->nvars());
    for (std::size_t v = 0; v < ring_->nvars(); ++v)
      m.exp[where[v]] = t.monomial.exp[v];
    b.add(m, t.coefficient);
  }
  return b.build();
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != ring_->nvars())
    throw ContractError("evaluation point arity mismatch");
  Rational acc = 0;
  for (const auto& t : terms_) {
    Rational v = t.coefficient;
    for (std::size_t i = 0; i < point.size(); ++i)
      for (std::uint32_t e = 0; e < t.monomial.exp[i]; ++e) v *= point[i];
    acc += v;
  }
  return acc;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coefficient;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    Rational a = c < 0 ? Rational(-c) : c;
    bool printed_coeff = false;
    if (a != 1 || t.monomial.is_one()) {
      out << to_string(a);
      printed_coeff = true;
    }
    for (std::size_t i = 0; i < t.monomial.exp.size(); ++i) {
      if (t.monomial.exp[i] == 0) continue;
      if (printed_coeff) out << "*";
      printed_coeff = true;
      out << ring_->variables()[i];
      if (t.monomial.exp[i] > 1) out << "^" << t.monomial.exp[i];
    }
  }
  return out.str();
}

void PolynomialBuilder::add(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  entries_.push_back({m, c});
}

Polynomial PolynomialBuilder::build() {
  const auto& order = ring_->order();
  std::sort(entries_.begin(), entries_.end(), [&](const Term& a, const Term& b) {
    return compare_monomials(a.monomial, b.monomial, order) == Ordering::greater;
  });
  Polynomial p(ring_);
  for (auto& e : entries_) {
    if (!p.terms_.empty() && p.terms_.back().monomial == e.monomial) {
      p.terms_.back().coefficient += e.coefficient;
      if (p.terms_.back().coefficient == 0) p.terms_.pop_back();
    } else {
      p.terms_.push_back(std::move(e));
    }
  }
  entries_.clear();
  return p;
}

}  // namespace sphereforge

#ifndef SPHEREFORGE_GROEBNER_HPP
#define SPHEREFORGE_GROEBNER_HPP

#include <atomic>
#include <chrono>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "sphereforge/polynomial.hpp"

namespace sphereforge {

// Ideal problems are EXPSPACE-hard in general, so every basis computation
// carries an explicit step and wall-clock budget. Exhaustion is an error,
// never a wrong answer.
struct Budget {
  std::uint64_t max_pair_reductions = 2'000'000;
  std::chrono::milliseconds timeout = std::chrono::milliseconds(300'000);
  // Optional usage meter, shared across the calls of one logical operation.
  std::shared_ptr<std::atomic<std::uint64_t>> used_steps;

  void spend(std::uint64_t n = 1) const {
    if (used_steps) used_steps->fetch_add(n, std::memory_order_relaxed);
  }
};

struct BudgetExceeded : std::runtime_error {
  enum class Limit { steps, time };
  Limit limit;
  explicit BudgetExceeded(Limit l)
      : std::runtime_error(l == Limit::steps
                               ? "Groebner step budget exhausted"
                               : "Groebner wall-clock budget exhausted"),
        limit(l) {}
};

struct DivisionResult {
  Polynomial remainder;
  std::vector<Polynomial> cofactors;  // aligned with the divisor list
};

// Multivariate division: remainder has no term divisible by any divisor's
// leading monomial, and p = remainder + sum(cofactors[i] * basis[i]).
DivisionResult divide(const Polynomial& p, const std::vector<Polynomial>& basis);

Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& basis);

// normal_form under an explicit order (inputs are re-sorted when the order
// differs from the ring's).
Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& basis,
                       const MonomialOrder& order);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

// The unique reduced Groebner basis of the ideal for (ring, order).
struct GroebnerBasis {
  RingPtr ring;  // carries the order the basis was computed under
  std::vector<Polynomial> elements;
};

// Buchberger completion with sugar-strategy pair selection and the two
// classical pair-elimination criteria, followed by full autoreduction.
// Elements come out monic, sorted ascending by leading monomial.
GroebnerBasis reduced_groebner_basis(const std::vector<Polynomial>& generators,
                                     const MonomialOrder& order,
                                     const Budget& budget = {});

}  // namespace sphereforge

#endif

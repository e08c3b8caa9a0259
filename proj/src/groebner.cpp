#include "sphereforge/groebner.hpp"

#include <algorithm>
#include <set>

namespace sphereforge {

DivisionResult divide(const Polynomial& p, const std::vector<Polynomial>& basis) {
  for (const auto& b : basis) {
    require_same_ring(p.ring(), b.ring());
    if (b.is_zero()) throw ContractError("division by a zero basis element");
  }
  DivisionResult out;
  out.remainder = Polynomial::zero(p.ring());
  out.cofactors.assign(basis.size(), Polynomial::zero(p.ring()));

  Polynomial work = p;
  while (!work.is_zero()) {
    const Term& lt = work.leading_term();
    bool reduced = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const Term& blt = basis[i].leading_term();
      if (!blt.monomial.divides(lt.monomial)) continue;
      Monomial q = lt.monomial / blt.monomial;
      Rational c = lt.coefficient / blt.coefficient;
      work = work.subtract_scaled(c, q, basis[i]);
      out.cofactors[i] =
          out.cofactors[i] + Polynomial::term(p.ring(), std::move(q), c);
      reduced = true;
      break;
    }
    if (!reduced) {
      // Move the leading term to the remainder and keep reducing the tail.
      Polynomial head = Polynomial::term(p.ring(), lt.monomial, lt.coefficient);
      out.remainder = out.remainder + head;
      work = work - head;
    }
  }
  return out;
}

Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& basis) {
  return divide(p, basis).remainder;
}

Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& basis,
                       const MonomialOrder& order) {
  if (order == p.ring()->order()) return normal_form(p, basis);
  RingPtr reordered = with_order(p.ring(), order);
  std::vector<Polynomial> moved;
  moved.reserve(basis.size());
  for (const auto& b : basis) moved.push_back(b.with_order(reordered));
  return normal_form(p.with_order(reordered), moved).with_order(p.ring());
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f.ring(), g.ring());
  if (f.is_zero() || g.is_zero())
    throw ContractError("S-polynomial of a zero polynomial");
  Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
  Polynomial lf = Polynomial::term(f.ring(), l / f.leading_monomial(),
                                   Rational(1) / f.leading_coefficient());
  Polynomial lg = Polynomial::term(f.ring(), l / g.leading_monomial(),
                                   Rational(1) / g.leading_coefficient());
  return lf * f - lg * g;
}

namespace {

struct Pair {
  std::size_t i, j;  // i < j
  Monomial lcm;
  std::uint64_t sugar;
};

struct Clock {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  void check(const Budget& budget) const {
    if (std::chrono::steady_clock::now() - start > budget.timeout)
      throw BudgetExceeded(BudgetExceeded::Limit::time);
  }
};

std::uint64_t pair_sugar(const Pair& p, const std::vector<Polynomial>& g,
                         const std::vector<std::uint64_t>& sugar) {
  auto part = [&](std::size_t k) {
    return p.lcm.degree() - g[k].leading_monomial().degree() + sugar[k];
  };
  return std::max(part(p.i), part(p.j));
}

}  // namespace

GroebnerBasis reduced_groebner_basis(const std::vector<Polynomial>& generators,
                                     const MonomialOrder& order,
                                     const Budget& budget) {
  if (generators.empty())
    throw ContractError("groebner basis of an unspecified ideal");
  RingPtr ring = generators.front().ring();
  for (const auto& g : generators) require_same_ring(ring, g.ring());
  if (ring->order() != order) ring = with_order(ring, order);

  Clock clock;
  std::uint64_t steps = 0;
  auto spend_step = [&] {
    budget.spend();
    if (++steps > budget.max_pair_reductions)
      throw BudgetExceeded(BudgetExceeded::Limit::steps);
    clock.check(budget);
  };

  std::vector<Polynomial> g;
  std::vector<std::uint64_t> sugar;
  for (const auto& gen : generators) {
    Polynomial p = gen.ring()->order() == order ? gen : gen.with_order(ring);
    if (!p.is_zero()) {
      g.push_back(std::move(p));
      sugar.push_back(g.back().total_degree());
    }
  }

  std::set<std::pair<std::size_t, std::size_t>> pending;
  std::vector<Pair> queue;
  auto push_pairs_with = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      Pair p{i, j, Monomial::lcm(g[i].leading_monomial(), g[j].leading_monomial()),
             0};
      p.sugar = pair_sugar(p, g, sugar);
      pending.insert({i, j});
      queue.push_back(std::move(p));
    }
  };
  for (std::size_t j = 0; j < g.size(); ++j) push_pairs_with(j);

  auto pop_best = [&]() -> Pair {
    std::size_t best = 0;
    for (std::size_t k = 1; k < queue.size(); ++k) {
      const Pair &a = queue[k], &b = queue[best];
      if (a.sugar != b.sugar) {
        if (a.sugar < b.sugar) best = k;
      } else if (a.lcm != b.lcm) {
        if (monomial_less(a.lcm, b.lcm, order)) best = k;
      } else if (std::tie(a.j, a.i) < std::tie(b.j, b.i)) {
        best = k;
      }
    }
    Pair p = std::move(queue[best]);
    queue.erase(queue.begin() + static_cast<std::ptrdiff_t>(best));
    pending.erase({p.i, p.j});
    return p;
  };

  while (!queue.empty()) {
    Pair pr = pop_best();
    const Monomial &mi = g[pr.i].leading_monomial(),
                   &mj = g[pr.j].leading_monomial();

    // Buchberger's first criterion: coprime leading monomials.
    if (pr.lcm == mi * mj) continue;

    // Second (chain) criterion: some t with LM(g_t) | lcm and both spanned
    // pairs already handled. Sound at pop time since discards are sequential.
    bool chained = false;
    for (std::size_t t = 0; t < g.size() && !chained; ++t) {
      if (t == pr.i || t == pr.j) continue;
      if (!g[t].leading_monomial().divides(pr.lcm)) continue;
      auto key = [](std::size_t a, std::size_t b) {
        return std::make_pair(std::min(a, b), std::max(a, b));
      };
      if (!pending.count(key(pr.i, t)) && !pending.count(key(pr.j, t)))
        chained = true;
    }
    if (chained) continue;

    spend_step();
    Polynomial r = normal_form(s_polynomial(g[pr.i], g[pr.j]), g);
    if (r.is_zero()) continue;
    g.push_back(std::move(r));
    sugar.push_back(std::max(pr.sugar, g.back().total_degree()));
    push_pairs_with(g.size() - 1);
  }

  // Minimalize: drop elements whose leading monomial another element divides.
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial &mi = g[i].leading_monomial(), &mj = g[j].leading_monomial();
      if (mj.divides(mi) && (mi != mj || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[i]);
  }

  // Autoreduce tails; leading monomials are pairwise non-divisible so they
  // survive reduction.
  GroebnerBasis out;
  out.ring = ring;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    clock.check(budget);
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Polynomial r =
        others.empty() ? minimal[i] : normal_form(minimal[i], others);
    out.elements.push_back(r.monic());
  }
  std::sort(out.elements.begin(), out.elements.end(),
            [&](const Polynomial& a, const Polynomial& b) {
              return monomial_less(a.leading_monomial(), b.leading_monomial(),
                                   order);
            });
  return out;
}

}  // namespace sphereforge

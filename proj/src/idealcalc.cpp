#include "sphereforge/idealcalc.hpp"

#include <algorithm>
#include <sstream>

namespace sphereforge {

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)) {
  for (auto& g : generators) {
    require_same_ring(ring_, g.ring());
    if (!g.is_zero()) generators_.push_back(std::move(g));
  }
}

const GroebnerBasis& Ideal::groebner(const Budget& budget) const {
  if (!cached_gb_) {
    if (generators_.empty())
      cached_gb_ = GroebnerBasis{ring_, {}};
    else
      cached_gb_ = reduced_groebner_basis(generators_, ring_->order(), budget);
  }
  return *cached_gb_;
}

bool MembershipCertificate::expand_and_check(const Ideal& ideal) const {
  if (cofactors.size() != ideal.generators().size()) return false;
  Polynomial sum = Polynomial::zero(ideal.ring());
  for (std::size_t i = 0; i < cofactors.size(); ++i)
    sum = sum + cofactors[i].embed(ideal.ring()) * ideal.generators()[i];
  return sum == target;
}

namespace {

// Buchberger completion with representation tracking: every basis element
// carries its expression as a combination of the original generators.
// No pair-elimination beyond the coprime criterion, since eliminated pairs
// would still need representations maintained.
struct TrackedBasis {
  std::vector<Polynomial> basis;
  std::vector<std::vector<Polynomial>> reps;  // reps[k][l]: coeff of gen l
};

TrackedBasis tracked_completion(const std::vector<Polynomial>& gens,
                                const Budget& budget) {
  RingPtr ring = gens.front().ring();
  TrackedBasis tb;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].is_zero()) continue;
    tb.basis.push_back(gens[i]);
    std::vector<Polynomial> rep(gens.size(), Polynomial::zero(ring));
    rep[i] = Polynomial::constant(ring, 1);
    tb.reps.push_back(std::move(rep));
  }
  auto start = std::chrono::steady_clock::now();
  std::uint64_t steps = 0;
  for (std::size_t j = 1; j < tb.basis.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      const Monomial &mi = tb.basis[i].leading_monomial(),
                     &mj = tb.basis[j].leading_monomial();
      Monomial l = Monomial::lcm(mi, mj);
      if (l == mi * mj) continue;
      budget.spend();
      if (++steps > budget.max_pair_reductions)
        throw BudgetExceeded(BudgetExceeded::Limit::steps);
      if (std::chrono::steady_clock::now() - start > budget.timeout)
        throw BudgetExceeded(BudgetExceeded::Limit::time);
      Polynomial lf = Polynomial::term(ring, l / mi,
                                       Rational(1) / tb.basis[i].leading_coefficient());
      Polynomial lg = Polynomial::term(ring, l / mj,
                                       Rational(1) / tb.basis[j].leading_coefficient());
      Polynomial s = lf * tb.basis[i] - lg * tb.basis[j];
      DivisionResult div = divide(s, tb.basis);
      if (div.remainder.is_zero()) continue;
      std::vector<Polynomial> rep(gens.size(), Polynomial::zero(ring));
      for (std::size_t l2 = 0; l2 < gens.size(); ++l2) {
        rep[l2] = lf * tb.reps[i][l2] - lg * tb.reps[j][l2];
        for (std::size_t k = 0; k < tb.basis.size(); ++k)
          rep[l2] = rep[l2] - div.cofactors[k] * tb.reps[k][l2];
      }
      tb.basis.push_back(div.remainder);
      tb.reps.push_back(std::move(rep));
    }
  }
  return tb;
}

std::string fresh_variable(const RingPtr& ring, std::string base) {
  while (ring->variable_index(base)) base += "_";
  return base;
}

Polynomial det(const std::vector<std::vector<Polynomial>>& m, const RingPtr& ring) {
  std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Polynomial acc = Polynomial::zero(ring);
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<Polynomial>> sub;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Polynomial> row;
      for (std::size_t cc = 0; cc < n; ++cc)
        if (cc != c) row.push_back(m[r][cc]);
      sub.push_back(std::move(row));
    }
    Polynomial cof = m[0][c] * det(sub, ring);
    acc = (c % 2 == 0) ? acc + cof : acc - cof;
  }
  return acc;
}

void column_subsets(std::size_t n, std::size_t k, std::size_t start,
                    std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i + (k - cur.size()) <= n; ++i) {
    cur.push_back(i);
    column_subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

MembershipResult ideal_membership(const Polynomial& h, const Ideal& ideal,
                                  bool want_certificate, const Budget& budget) {
  require_same_ring(h.ring(), ideal.ring());
  MembershipResult result;
  const GroebnerBasis& gb = ideal.groebner(budget);
  if (gb.elements.empty()) {
    result.member = h.is_zero();
  } else {
    result.member =
        normal_form(h, gb.elements, gb.ring->order()).is_zero();
  }
  if (result.member && want_certificate && !ideal.generators().empty()) {
    TrackedBasis tb = tracked_completion(ideal.generators(), budget);
    DivisionResult div = divide(h, tb.basis);
    MembershipCertificate cert{h, std::vector<Polynomial>(
                                      ideal.generators().size(),
                                      Polynomial::zero(ideal.ring()))};
    for (std::size_t l = 0; l < cert.cofactors.size(); ++l)
      for (std::size_t k = 0; k < tb.basis.size(); ++k)
        cert.cofactors[l] = cert.cofactors[l] + div.cofactors[k] * tb.reps[k][l];
    if (!cert.expand_and_check(ideal))
      throw ContractError("membership certificate failed to expand");
    result.certificate = std::move(cert);
  }
  return result;
}

bool radical_membership(const Polynomial& h, const Ideal& ideal,
                        const Budget& budget) {
  require_same_ring(h.ring(), ideal.ring());
  if (h.is_zero()) return true;
  std::vector<std::string> vars = ideal.ring()->variables();
  vars.push_back(fresh_variable(ideal.ring(), "t"));
  RingPtr ext = make_ring(vars, MonomialOrder::grevlex());
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.embed(ext));
  Polynomial t = Polynomial::variable(ext, ext->nvars() - 1);
  gens.push_back(Polynomial::constant(ext, 1) - t * h.embed(ext));
  return variety_is_empty(Ideal(ext, std::move(gens)), budget);
}

bool ideal_equality(const Ideal& lhs, const Ideal& rhs, const Budget& budget) {
  require_same_ring(lhs.ring(), rhs.ring());
  const auto& a = lhs.groebner(budget).elements;
  const auto& b = rhs.groebner(budget).elements;
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

Ideal eliminate(const Ideal& ideal, const std::vector<std::size_t>& vars,
                const Budget& budget) {
  if (vars.empty()) return ideal;
  std::vector<bool> mask(ideal.ring()->nvars(), false);
  for (std::size_t v : vars) {
    if (v >= mask.size()) throw ContractError("eliminate: variable out of range");
    mask[v] = true;
  }
  if (ideal.generators().empty()) return ideal;
  GroebnerBasis gb = reduced_groebner_basis(
      ideal.generators(), MonomialOrder::block(mask), budget);
  std::vector<Polynomial> kept;
  for (const auto& e : gb.elements) {
    bool free_of_vars = true;
    for (const auto& t : e.terms())
      for (std::size_t v = 0; v < mask.size() && free_of_vars; ++v)
        if (mask[v] && t.monomial.exp[v] != 0) free_of_vars = false;
    if (free_of_vars) kept.push_back(e.with_order(ideal.ring()));
  }
  return Ideal(ideal.ring(), std::move(kept));
}

int dimension(const Ideal& ideal, const Budget& budget) {
  std::size_t n = ideal.ring()->nvars();
  if (ideal.generators().empty()) return static_cast<int>(n);
  GroebnerBasis gb =
      ideal.ring()->order().kind == MonomialOrder::Kind::grevlex
          ? ideal.groebner(budget)
          : reduced_groebner_basis(ideal.generators(), MonomialOrder::grevlex(),
                                   budget);
  if (gb.elements.empty()) return static_cast<int>(n);
  if (gb.elements.size() == 1 && gb.elements[0].is_constant()) return -1;

  std::vector<Monomial> lead;
  for (const auto& e : gb.elements) lead.push_back(e.leading_monomial());
  if (n > 20) throw ContractError("dimension: too many variables");
  // Largest variable subset U such that no staircase monomial lives
  // entirely inside U.
  int best = 0;
  for (std::uint32_t subset = 0; subset < (1u << n); ++subset) {
    bool independent = true;
    for (const auto& m : lead) {
      bool inside = true;
      for (std::size_t v = 0; v < n && inside; ++v)
        if (m.exp[v] != 0 && !(subset & (1u << v))) inside = false;
      if (inside) {
        independent = false;
        break;
      }
    }
    if (independent)
      best = std::max(best, static_cast<int>(__builtin_popcount(subset)));
  }
  return best;
}

bool variety_is_empty(const Ideal& ideal, const Budget& budget) {
  const auto& e = ideal.groebner(budget).elements;
  return e.size() == 1 && e[0].is_constant() && !e[0].is_zero();
}

SmoothnessVerdict smoothness_check(const Ideal& ideal, std::size_t ambient_dim,
                                   const Budget& budget) {
  if (ideal.ring()->nvars() != ambient_dim)
    throw ContractError("smoothness_check: ambient dimension mismatch");
  try {
    if (variety_is_empty(ideal, budget))
      throw ContractError("smoothness_check: empty scheme");
    int d = dimension(ideal, budget);
    std::size_t codim = ambient_dim - static_cast<std::size_t>(d);
    const auto& gens = ideal.generators();
    if (codim == 0 && gens.empty())
      return {SmoothnessVerdict::Kind::smooth, std::nullopt, "affine space"};
    if (gens.size() != codim) {
      std::ostringstream msg;
      msg << "presentation with " << gens.size() << " generators but codimension "
          << codim << "; Jacobian criterion not applied";
      return {SmoothnessVerdict::Kind::indeterminate, std::nullopt, msg.str()};
    }

    std::vector<std::vector<Polynomial>> jac(gens.size());
    for (std::size_t r = 0; r < gens.size(); ++r)
      for (std::size_t c = 0; c < ambient_dim; ++c)
        jac[r].push_back(gens[r].derivative(c));

    std::vector<std::vector<std::size_t>> cols;
    std::vector<std::size_t> cur;
    column_subsets(ambient_dim, codim, 0, cur, cols);

    std::vector<Polynomial> witness_gens = gens;
    for (const auto& cs : cols) {
      std::vector<std::vector<Polynomial>> sub(codim);
      for (std::size_t r = 0; r < codim; ++r)
        for (std::size_t c : cs) sub[r].push_back(jac[r][c]);
      Polynomial minor = det(sub, ideal.ring());
      if (!minor.is_zero()) witness_gens.push_back(std::move(minor));
    }
    Ideal jacobian_ideal(ideal.ring(), std::move(witness_gens));
    if (variety_is_empty(jacobian_ideal, budget))
      return {SmoothnessVerdict::Kind::smooth, std::nullopt, ""};
    return {SmoothnessVerdict::Kind::singular, std::move(jacobian_ideal),
            "Jacobian minors vanish somewhere on the scheme"};
  } catch (const BudgetExceeded& e) {
    return {SmoothnessVerdict::Kind::indeterminate, std::nullopt, e.what()};
  }
}

}  // namespace sphereforge

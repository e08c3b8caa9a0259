#!/usr/bin/env python3
"""Regenerates tests/golden/groebner_cases.json.

Randomized small ideals (seeded, reproducible) together with their reduced
grevlex Groebner bases computed by an independent CAS (sympy). The C++
engine must reproduce every basis element-for-element.
"""

import json
import pathlib
import random

import sympy as sp

NUM_CASES = 20
VAR_NAMES = ["x", "y", "z"]


def poly_str(expr, syms):
    """Serialize in the tool's grammar: c*x^a*y^b terms, n/d rationals."""
    poly = sp.Poly(expr, *syms)
    parts = []
    for monom, coeff in poly.terms():
        factors = []
        c = sp.Rational(coeff)
        if c.q == 1:
            cs = str(c.p)
        else:
            cs = f"{c.p}/{c.q}"
        body = [
            f"{name}^{e}" if e > 1 else name
            for name, e in zip([str(s) for s in syms], monom)
            if e > 0
        ]
        if not body or cs.lstrip("-") != "1":
            factors.append(cs)
        elif cs.startswith("-"):
            factors.append("-1")
        factors.extend(body)
        parts.append("*".join(factors))
    if not parts:
        return "0"
    out = parts[0]
    for p in parts[1:]:
        out += " - " + p[1:] if p.startswith("-") else " + " + p
    return out


def random_polynomial(rng, syms):
    while True:
        nterms = rng.randint(1, 4)
        expr = sp.Integer(0)
        for _ in range(nterms):
            coeff = rng.choice([c for c in range(-3, 4) if c != 0])
            exps = [0] * len(syms)
            total = rng.randint(0, 3)
            for _ in range(total):
                exps[rng.randrange(len(syms))] += 1
            term = sp.Integer(coeff)
            for s, e in zip(syms, exps):
                term *= s**e
            expr += term
        if expr != 0:
            return expr


def main():
    cases = []
    for seed in range(1, NUM_CASES + 1):
        rng = random.Random(seed)
        nvars = rng.randint(1, 3)
        syms = tuple(sp.Symbol(n) for n in VAR_NAMES[:nvars])
        ngens = rng.randint(1, 3)
        gens = [random_polynomial(rng, syms) for _ in range(ngens)]
        basis = sp.groebner(gens, *syms, order="grevlex", domain="QQ")
        cases.append(
            {
                "seed": seed,
                "variables": [str(s) for s in syms],
                "generators": [poly_str(g, syms) for g in gens],
                "reduced_grevlex_basis": [poly_str(b, syms) for b in basis.exprs],
            }
        )
    out = pathlib.Path(__file__).resolve().parent.parent / "tests" / "golden"
    out.mkdir(parents=True, exist_ok=True)
    (out / "groebner_cases.json").write_text(json.dumps(cases, indent=2) + "\n")
    print(f"wrote {len(cases)} cases to {out / 'groebner_cases.json'}")


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Regenerates the bundled splitting-field presentations.

Each field is given as a tower Q(a, b) with explicit relations; a primitive
element theta is chosen, its minimal polynomial computed, and every generator
automorphism and named element is rewritten as a polynomial in theta.
"""
import json

from sympy import Matrix, Poly, Rational, groebner, reduced, symbols

x = symbols("x")


def field(name, gens, relations, theta, autos, elements, group, subgroup):
    G = groebner(relations, *gens, order="lex")
    monos = None

    def reduce(e):
        _, r = reduced(e, list(G), *gens, order="lex")
        return Poly(r, *gens)

    # monomial basis from the degrees of the (triangular) relations
    degs = [Poly(rel, *gens).degree(g) for rel, g in zip(relations, gens)]
    import itertools

    monos = list(itertools.product(*[range(d) for d in degs]))
    d = len(monos)

    def coords(e):
        p = reduce(e)
        return [p.coeff_monomial(tuple(m)) for m in monos]

    powers = [coords(theta**k) for k in range(d + 1)]
    B = Matrix(powers[:d]).T  # columns = theta^k
    last = Matrix(powers[d])
    c = B.solve(last)
    min_poly = [-v for v in c] + [Rational(1)]

    def in_theta(e):
        v = B.solve(Matrix(coords(e)))
        return [str(t) for t in v]

    def subs_auto(images):
        return theta.subs(images, simultaneous=True)

    out = {
        "name": name,
        "min_poly": [str(v) for v in min_poly],
        "generators": {k: in_theta(subs_auto(v)) for k, v in autos.items()},
        "binding": group["binding"],
        "elements": {k: in_theta(v) for k, v in elements.items()},
    }
    with open(name + ".json", "w") as f:
        json.dump(out, f, indent=1)
        f.write("\n")
    with open(name + ".group.json", "w") as f:
        json.dump({"degree": group["degree"], "generators": list(group["binding"].values()), "name": group["name"]}, f, indent=1)
        f.write("\n")
    with open(name + ".subgroup.json", "w") as f:
        json.dump(subgroup, f, indent=1)
        f.write("\n")


a, w = symbols("a w")
field(
    "cbrt2",
    [a, w],
    [a**3 - 2, w**2 + w + 1],
    a + w,
    {"tau": {a: a, w: w**2}, "sigma": {a: w * a, w: w}},
    {"alpha": a, "omega": w},
    {"degree": 3, "name": "S3", "binding": {"tau": "(2,3)", "sigma": "(1,2,3)"}},
    {"degree": 3, "generators": ["(2,3)"], "name": "stabilizer of the real root"},
)

s, t = symbols("s t")
field(
    "biquadratic",
    [s, t],
    [s**2 - 2, t**2 - 3],
    s + t,
    {"sigma": {s: -s, t: t}, "tau": {s: s, t: -t}},
    {"sqrt_a": s, "sqrt_b": t},
    {"degree": 4, "name": "V4", "binding": {"sigma": "(1,2)(3,4)", "tau": "(1,3)(2,4)"}},
    {"degree": 4, "generators": [], "name": "trivial"},
)

al, i = symbols("al i")
field(
    "quartic_radical",
    [al, i],
    [al**4 - 2, i**2 + 1],
    al + i,
    {"r": {al: i * al, i: i}, "s": {al: al, i: -i}},
    {"alpha": al, "i": i},
    {"degree": 4, "name": "D_{2·4}", "binding": {"r": "(1,2,3,4)", "s": "(2,4)"}},
    {"degree": 4, "generators": ["(2,4)"], "name": "stabilizer of alpha"},
)

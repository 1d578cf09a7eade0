#!/usr/bin/env python3
"""Regenerates small_groups.json and transitive_groups.json.

Abstract groups are built from explicit multiplication rules and emitted as
left-regular permutation representations (or a smaller faithful action where
one is given by hand). Run from this directory: python3 generate_catalog.py
"""
import itertools
import json


def closure(gens, mul, identity):
    elems = [identity]
    seen = {identity}
    i = 0
    while i < len(elems):
        x = elems[i]
        i += 1
        for g in gens:
            y = mul(g, x)
            if y not in seen:
                seen.add(y)
                elems.append(y)
    return elems


def cycles(images):
    """images: dict point->point on 1-based points."""
    seen = set()
    out = []
    for p in sorted(images):
        if p in seen or images[p] == p:
            continue
        cyc = [p]
        seen.add(p)
        q = images[p]
        while q != p:
            cyc.append(q)
            seen.add(q)
            q = images[q]
        out.append("(" + ",".join(map(str, cyc)) + ")")
    return "".join(out) or "()"


class Group:
    def __init__(self, gens, mul, identity):
        self.gens = gens
        self.mul = mul
        self.identity = identity
        self.elements = closure(gens, mul, identity)

    def regular(self):
        index = {e: i + 1 for i, e in enumerate(self.elements)}
        out = []
        for g in self.gens:
            out.append(cycles({index[x]: index[self.mul(g, x)] for x in self.elements}))
        return len(self.elements), out


def cyclic(n):
    return Group([1 % n], lambda a, b: (a + b) % n, 0)


def product(*groups):
    k = len(groups)

    def mul(a, b):
        return tuple(groups[i].mul(a[i], b[i]) for i in range(k))

    ident = tuple(g.identity for g in groups)
    gens = []
    for i, g in enumerate(groups):
        for x in g.gens:
            t = list(ident)
            t[i] = x
            gens.append(tuple(t))
    return Group(gens, mul, ident)


def semidirect(a, b, act):
    """a ⋊ b with b acting on a by act(b_elem)(a_elem)."""

    def mul(x, y):
        return (a.mul(x[0], act(x[1])(y[0])), b.mul(x[1], y[1]))

    gens = [(g, b.identity) for g in a.gens] + [(a.identity, h) for h in b.gens]
    return Group(gens, mul, (a.identity, b.identity))


def cyclic_semidirect(m, n, r):
    """C_m ⋊ C_n, generator of C_n acting as x -> r x."""
    return semidirect(cyclic(m), cyclic(n), lambda b: (lambda x: (pow(r, b, m) * x) % m))


def dihedral(n):
    return cyclic_semidirect(n, 2, n - 1)


def dicyclic(m):
    """Dic_{4m}: <a, x | a^{2m}, x^2 = a^m, x a x^-1 = a^-1>."""
    M = 2 * m

    def mul(p, q):
        i, j = p
        k, l = q
        e = i + (k if j == 0 else -k)
        if j and l:
            e += m
        return (e % M, (j + l) % 2)

    return Group([(1, 0), (0, 1)], mul, (0, 0))


def perm_group(degree, gens_cycles):
    def parse(s):
        img = list(range(degree + 1))
        for cyc in s.replace(" ", "").strip("()").split(")("):
            if not cyc:
                continue
            pts = list(map(int, cyc.split(",")))
            for i, p in enumerate(pts):
                img[p] = pts[(i + 1) % len(pts)]
        return tuple(img[1:])

    def mul(p, q):  # p after q
        return tuple(p[q[i] - 1] for i in range(degree))

    return Group([parse(s) for s in gens_cycles], mul, tuple(range(1, degree + 1)))


def matrix_group(p, gens):
    def mul(a, b):
        return (
            (a[0] * b[0] + a[1] * b[2]) % p,
            (a[0] * b[1] + a[1] * b[3]) % p,
            (a[2] * b[0] + a[3] * b[2]) % p,
            (a[2] * b[1] + a[3] * b[3]) % p,
        )

    return Group(gens, mul, (1, 0, 0, 1))


def natural(degree, gens):
    return {"degree": degree, "generators": gens}


def regular_entry(group):
    degree, gens = group.regular()
    return {"degree": degree, "generators": gens}


def abelian(*ns):
    return product(*[cyclic(n) for n in ns])


def aut_c2xc4(kind):
    # elements of C4 x C2 as (x mod 4, y mod 2)
    if kind == "16,3":  # a -> ab, b -> b
        return lambda c: (lambda v: ((v[0]) % 4, (v[1] + v[0] * c) % 2))
    if kind == "pauli":  # a -> a, b -> a^2 b
        return lambda c: (lambda v: ((v[0] + 2 * v[1] * c) % 4, v[1]))
    raise ValueError(kind)


def small_groups():
    S3 = perm_group(3, ["(1,2,3)", "(1,2)"])
    A4 = perm_group(4, ["(1,2,3)", "(2,3,4)"])
    S4 = perm_group(4, ["(1,2,3,4)", "(1,2)"])
    D8 = dihedral(4)
    Q8 = dicyclic(2)
    C3 = cyclic(3)
    C2 = cyclic(2)
    V4 = abelian(2, 2)
    Dic12 = dicyclic(3)
    D10 = dihedral(5)
    F20 = cyclic_semidirect(5, 4, 2)
    C3sq = abelian(3, 3)
    gen_dihedral_c3sq = semidirect(C3sq, C2, lambda b: (lambda v: v if b == 0 else ((-v[0]) % 3, (-v[1]) % 3)))

    def c3sq_by_c4(kind):
        def act(b):
            def f(v):
                x, y = v
                for _ in range(b % 4):
                    if kind == "inv":
                        x, y = (-x) % 3, (-y) % 3
                    else:
                        x, y = (-y) % 3, x % 3
                return (x, y)

            return f

        return semidirect(C3sq, cyclic(4), act)

    sl23 = matrix_group(3, [(1, 1, 0, 1), (0, 1, 2, 0)])
    # C3 ⋊ D8 with r inverting C3 and s centralising it (SmallGroup(24,8))
    c3_by_d8 = semidirect(C3, D8, lambda b: (lambda x: x if b[0] % 2 == 0 else (-x) % 3))
    # V4 ⋊ C9, generator acting by an order-3 automorphism of V4
    v4_by_c9 = semidirect(V4, cyclic(9), lambda b: (lambda v: [v, (v[1], (v[0] + v[1]) % 2), ((v[0] + v[1]) % 2, v[0])][b % 3]))

    table = {
        1: [("C1", natural(1, ["()"]))],
        2: [("C2", natural(2, ["(1,2)"]))],
        3: [("C3", natural(3, ["(1,2,3)"]))],
        4: [("C4", natural(4, ["(1,2,3,4)"])), ("V4", natural(4, ["(1,2)(3,4)", "(1,3)(2,4)"]))],
        5: [("C5", natural(5, ["(1,2,3,4,5)"]))],
        6: [("C6", natural(6, ["(1,2,3,4,5,6)"])), ("S3", natural(3, ["(1,2,3)", "(1,2)"]))],
        7: [("C7", natural(7, ["(1,2,3,4,5,6,7)"]))],
        8: [
            ("C8", regular_entry(cyclic(8))),
            ("C4×C2", regular_entry(abelian(4, 2))),
            ("C2^3", regular_entry(abelian(2, 2, 2))),
            ("D_{2·4}", natural(4, ["(1,2,3,4)", "(2,4)"])),
            ("Q8", regular_entry(Q8)),
        ],
        9: [("C9", regular_entry(cyclic(9))), ("C3×C3", regular_entry(C3sq))],
        10: [("C10", regular_entry(cyclic(10))), ("D_{2·5}", natural(5, ["(1,2,3,4,5)", "(2,5)(3,4)"]))],
        11: [("C11", regular_entry(cyclic(11)))],
        12: [
            ("C12", regular_entry(cyclic(12))),
            ("C6×C2", regular_entry(abelian(6, 2))),
            ("A4", natural(4, ["(1,2,3)", "(2,3,4)"])),
            ("D_{2·6}", natural(6, ["(1,2,3,4,5,6)", "(1,6)(2,5)(3,4)"])),
            ("Dic12", regular_entry(Dic12)),
        ],
        13: [("C13", regular_entry(cyclic(13)))],
        14: [("C14", regular_entry(cyclic(14))), ("D_{2·7}", regular_entry(dihedral(7)))],
        15: [("C15", regular_entry(cyclic(15)))],
        16: [
            ("C16", regular_entry(cyclic(16))),
            ("C4×C4", regular_entry(abelian(4, 4))),
            ("C8×C2", regular_entry(abelian(8, 2))),
            ("C4×C2×C2", regular_entry(abelian(4, 2, 2))),
            ("C2^4", regular_entry(abelian(2, 2, 2, 2))),
            ("D_{2·8}", regular_entry(dihedral(8))),
            ("Q16", regular_entry(dicyclic(4))),
            ("SD16", regular_entry(cyclic_semidirect(8, 2, 3))),
            ("M16", regular_entry(cyclic_semidirect(8, 2, 5))),
            ("C4⋊C4", regular_entry(cyclic_semidirect(4, 4, 3))),
            ("C2×D_{2·4}", regular_entry(product(C2, D8))),
            ("C2×Q8", regular_entry(product(C2, Q8))),
            ("C2^2⋊C4", regular_entry(semidirect(abelian(4, 2), C2, aut_c2xc4("16,3")))),
            ("C4∘D_{2·4}", regular_entry(semidirect(abelian(4, 2), C2, aut_c2xc4("pauli")))),
        ],
        18: [
            ("C18", regular_entry(cyclic(18))),
            ("C6×C3", regular_entry(abelian(6, 3))),
            ("D_{2·9}", regular_entry(dihedral(9))),
            ("F_{18}", regular_entry(product(C3, S3))),
            ("C3^2⋊C2", regular_entry(gen_dihedral_c3sq)),
        ],
        20: [
            ("C20", regular_entry(cyclic(20))),
            ("C10×C2", regular_entry(abelian(10, 2))),
            ("D_{2·10}", regular_entry(dihedral(10))),
            ("Dic20", regular_entry(dicyclic(5))),
            ("F_{20}", natural(5, ["(1,2,3,4,5)", "(2,3,5,4)"])),
        ],
        21: [("C21", regular_entry(cyclic(21))), ("F_{21}", natural(7, ["(1,2,3,4,5,6,7)", "(2,3,5)(4,7,6)"]))],
        24: [
            ("C3⋊C8", regular_entry(cyclic_semidirect(3, 8, 2))),
            ("C24", regular_entry(cyclic(24))),
            ("SL(2,3)", regular_entry(sl23)),
            ("Dic24", regular_entry(dicyclic(6))),
            ("C4×S3", regular_entry(product(cyclic(4), S3))),
            ("D_{2·12}", regular_entry(dihedral(12))),
            ("C2×Dic12", regular_entry(product(C2, Dic12))),
            ("C3⋊D_{2·4}", regular_entry(c3_by_d8)),
            ("C12×C2", regular_entry(abelian(12, 2))),
            ("C3×D_{2·4}", regular_entry(product(C3, D8))),
            ("C3×Q8", regular_entry(product(C3, Q8))),
            ("S4", natural(4, ["(1,2,3,4)", "(1,2)"])),
            ("2A4", regular_entry(product(C2, A4))),
            ("C2×D_{2·6}", regular_entry(product(V4, S3))),
            ("C6×C2×C2", regular_entry(abelian(6, 2, 2))),
        ],
        30: [
            ("C30", regular_entry(cyclic(30))),
            ("D_{2·15}", regular_entry(dihedral(15))),
            ("C5×S3", regular_entry(product(cyclic(5), S3))),
            ("C3×D_{2·5}", regular_entry(product(C3, D10))),
        ],
        36: [
            ("Dic36", regular_entry(dicyclic(9))),
            ("C36", regular_entry(cyclic(36))),
            ("C2^2⋊C9", regular_entry(v4_by_c9)),
            ("D_{2·18}", regular_entry(dihedral(18))),
            ("C18×C2", regular_entry(abelian(18, 2))),
            ("C3×Dic12", regular_entry(product(C3, Dic12))),
            ("C3^2⋊C4", regular_entry(c3sq_by_c4("inv"))),
            ("C12×C3", regular_entry(abelian(12, 3))),
            ("F_{36}", regular_entry(c3sq_by_c4("rot"))),
            ("F_{18}:2", regular_entry(product(S3, S3))),
            ("C3×A4", regular_entry(product(C3, A4))),
            ("C6×S3", regular_entry(product(cyclic(6), S3))),
            ("C2×C3^2⋊C2", regular_entry(product(C2, gen_dihedral_c3sq))),
            ("C6×C6", regular_entry(abelian(6, 6))),
        ],
        40: [
            ("C5⋊C8", regular_entry(cyclic_semidirect(5, 8, 4))),
            ("C40", regular_entry(cyclic(40))),
            ("C5⋊C8(4)", regular_entry(cyclic_semidirect(5, 8, 2))),
            ("Dic40", regular_entry(dicyclic(10))),
            ("C4×D_{2·5}", regular_entry(product(cyclic(4), D10))),
            ("D_{2·20}", regular_entry(dihedral(20))),
            ("C2×Dic20", regular_entry(product(C2, dicyclic(5)))),
            ("C5⋊D_{2·4}", regular_entry(semidirect(cyclic(5), D8, lambda b: (lambda x: x if b[0] % 2 == 0 else (-x) % 5)))),
            ("C20×C2", regular_entry(abelian(20, 2))),
            ("C5×D_{2·4}", regular_entry(product(cyclic(5), D8))),
            ("C5×Q8", regular_entry(product(cyclic(5), Q8))),
            ("C2×F_{20}", regular_entry(product(C2, F20))),
            ("C2×D_{2·10}", regular_entry(product(V4, D10))),
            ("C10×C2×C2", regular_entry(abelian(10, 2, 2))),
        ],
        60: [
            ("C5×Dic12", regular_entry(product(cyclic(5), Dic12))),
            ("C3×Dic20", regular_entry(product(C3, dicyclic(5)))),
            ("C60", regular_entry(cyclic(60))),
            ("Dic60", regular_entry(dicyclic(15))),
            ("A5", natural(5, ["(1,2,3,4,5)", "(1,2,3)"])),
            ("C3×F_{20}", regular_entry(product(C3, F20))),
            ("C15⋊C4", regular_entry(cyclic_semidirect(15, 4, 2))),
            ("S3×D_{2·5}", regular_entry(product(S3, D10))),
            ("C5×A4", regular_entry(product(cyclic(5), A4))),
            ("C6×D_{2·5}", regular_entry(product(cyclic(6), D10))),
            ("C10×S3", regular_entry(product(cyclic(10), S3))),
            ("D_{2·30}", regular_entry(dihedral(30))),
            ("C30×C2", regular_entry(abelian(30, 2))),
        ],
    }
    out = []
    for order in sorted(table):
        for name, entry in table[order]:
            out.append({"name": name, "degree": entry["degree"], "order": order, "generators": entry["generators"], "transitive": False})
    return out


def coset_action(group, subgroup_elems, degree_hint=None):
    """Left action of group on cosets of the subgroup, base coset is point 1."""
    sub = set(subgroup_elems)
    cosets = []
    key = {}
    for g in group.elements:
        c = frozenset(group.mul(g, h) for h in sub)
        if c not in key:
            key[c] = len(cosets) + 1
            cosets.append(g)
    base = frozenset(sub)
    # renumber so the base coset is point 1
    order = [c for c in key]
    order.sort(key=lambda c: (c != base, key[c]))
    index = {c: i + 1 for i, c in enumerate(order)}
    rep = {index[c]: next(iter(c)) for c in order}
    gens = []
    for g in group.gens:
        imgs = {}
        for p, x in rep.items():
            y = group.mul(g, x)
            c = frozenset(group.mul(y, h) for h in sub)
            imgs[p] = index[c]
        gens.append(cycles(imgs))
    return len(order), gens


def projective_line(p, mats):
    """Action of 2x2 matrices mod p on P^1(F_p); points 1..p are 0..p-1, point p+1 is infinity."""
    inf = p

    def act(m, x):
        a, b, c, d = m
        if x == inf:
            return inf if c == 0 else (a * pow(c, -1, p)) % p
        num = (a * x + b) % p
        den = (c * x + d) % p
        if den == 0:
            return inf
        return (num * pow(den, -1, p)) % p

    gens = []
    for m in mats:
        gens.append(cycles({x + 1: act(m, x) + 1 for x in range(p + 1)}))
    return gens


def affine(p, mult):
    return cycles({x + 1: (mult * x) % p + 1 for x in range(p)})


def psl2_11_on_11():
    grp = matrix_group(11, [(1, 1, 0, 1), (0, 10, 1, 0)])

    def norm(m):
        neg = tuple((-v) % 11 for v in m)
        return min(m, neg)

    psl = Group([norm(g) for g in grp.gens], lambda a, b: norm(grp.mul(a, b)), (1, 0, 0, 1))
    assert len(psl.elements) == 660

    def order(x):
        k, y = 1, x
        while y != psl.identity:
            y = psl.mul(y, x)
            k += 1
        return k

    invs = [x for x in psl.elements if order(x) == 2]
    threes = [x for x in psl.elements if order(x) == 3]
    for a, b in itertools.product(invs, threes):
        if order(psl.mul(a, b)) == 5:
            sub = Group([a, b], psl.mul, psl.identity)
            if len(sub.elements) == 60:
                deg, gens = coset_action(psl, sub.elements)
                assert deg == 11
                return gens
    raise RuntimeError("no A5 found")


def s4_on_cosets(sub_gens):
    S4 = perm_group(4, ["(1,2,3,4)", "(1,2)"])
    sub = Group(perm_group(4, sub_gens).gens, S4.mul, S4.identity)
    deg, gens = coset_action(S4, sub.elements)
    assert deg == 6
    return gens


def transitive_groups():
    T = []

    def add(deg, name, order, gens):
        T.append({"name": name, "degree": deg, "order": order, "generators": gens, "transitive": True})

    add(2, "C2", 2, ["(1,2)"])
    add(3, "C3", 3, ["(1,2,3)"])
    add(3, "S3", 6, ["(1,2,3)", "(1,2)"])
    add(4, "C4", 4, ["(1,2,3,4)"])
    add(4, "V4", 4, ["(1,2)(3,4)", "(1,3)(2,4)"])
    add(4, "D_{2·4}", 8, ["(1,2,3,4)", "(2,4)"])
    add(4, "A4", 12, ["(1,2,3)", "(2,3,4)"])
    add(4, "S4", 24, ["(1,2,3,4)", "(1,2)"])
    add(5, "C5", 5, ["(1,2,3,4,5)"])
    add(5, "D_{2·5}", 10, ["(1,2,3,4,5)", "(2,5)(3,4)"])
    add(5, "F_{20}", 20, ["(1,2,3,4,5)", "(2,3,5,4)"])
    add(5, "A5", 60, ["(1,2,3,4,5)", "(1,2,3)"])
    add(5, "S5", 120, ["(1,2,3,4,5)", "(1,2)"])

    S3reg = ["(1,2,3)(4,5,6)", "(1,4)(2,6)(3,5)"]
    lam = ["(1,3,6)(2,4,5)", "(1,2)(3,5)(4,6)"]
    rho = ["(1,3,6)(2,5,4)", "(1,2)(3,4)(5,6)"]
    add(6, "C6", 6, ["(1,2,3,4,5,6)"])
    add(6, "S3", 6, S3reg)
    add(6, "D_{2·6}", 12, ["(1,2,3,4,5,6)", "(1,6)(2,5)(3,4)"])
    add(6, "A4", 12, ["(1,4)(2,5)", "(1,3,5)(2,4,6)"])
    add(6, "F_{18}", 18, ["(2,4,6)", "(1,4)(2,5)(3,6)"])
    add(6, "2A4", 24, ["(3,6)", "(1,3,5)(2,4,6)"])
    add(6, "S4(6d)", 24, s4_on_cosets(["(1,2)", "(3,4)"]))
    add(6, "S4(6c)", 24, s4_on_cosets(["(1,2,3,4)"]))
    add(6, "F_{18}:2", 36, lam + rho)
    add(6, "F_{36}", 36, ["(2,4,6)", "(1,5)(2,4)", "(1,4,5,2)(3,6)"])
    add(6, "2S4", 48, ["(3,6)", "(1,3,5)(2,4,6)", "(1,5)(2,4)"])
    add(6, "A5", 60, projective_line(5, [(1, 1, 0, 1), (0, 4, 1, 0)]))
    add(6, "F_{36}:2", 72, ["(2,4,6)", "(2,4)", "(1,4)(2,5)(3,6)"])
    add(6, "S5", 120, projective_line(5, [(1, 1, 0, 1), (0, 4, 1, 0), (2, 0, 0, 1)]))
    add(6, "A6", 360, ["(1,2,3,4,5)", "(4,5,6)"])
    add(6, "S6", 720, ["(1,2,3,4,5,6)", "(1,2)"])

    c7 = "(1,2,3,4,5,6,7)"
    add(7, "C7", 7, [c7])
    add(7, "D_{2·7}", 14, [c7, affine(7, 6)])
    add(7, "F_{21}", 21, [c7, affine(7, 2)])
    add(7, "F_{42}", 42, [c7, affine(7, 3)])
    add(7, "PSL(2,7)", 168, [c7, "(1,2)(3,6)"])
    add(7, "A7", 2520, ["(1,2,3,4,5,6,7)", "(1,2,3)"])
    add(7, "S7", 5040, ["(1,2,3,4,5,6,7)", "(1,2)"])

    c11 = "(" + ",".join(map(str, range(1, 12))) + ")"
    add(11, "C11", 11, [c11])
    add(11, "D_{2·11}", 22, [c11, affine(11, 10)])
    add(11, "F_{55}", 55, [c11, affine(11, 3)])
    add(11, "F_{110}", 110, [c11, affine(11, 2)])
    add(11, "PSL(2,11)", 660, psl2_11_on_11())
    add(11, "M11", 7920, [])
    add(11, "A11", 19958400, [])
    add(11, "S11", 39916800, [])

    # sanity: orders of everything with generators
    for e in T:
        if not e["generators"]:
            continue
        g = perm_group(e["degree"], e["generators"])
        assert len(g.elements) == e["order"], (e["name"], len(g.elements))
    return T


if __name__ == "__main__":
    sg = small_groups()
    for e in sg:
        g = perm_group(e["degree"], e["generators"])
        assert len(g.elements) == e["order"], (e["name"], len(g.elements), e["order"])
    with open("small_groups.json", "w") as f:
        json.dump(sg, f, indent=1, ensure_ascii=False)
        f.write("\n")
    with open("transitive_groups.json", "w") as f:
        json.dump(transitive_groups(), f, indent=1, ensure_ascii=False)
        f.write("\n")

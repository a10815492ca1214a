#!/usr/bin/env python3
"""Regenerates the bundled SCX corpus in data/.

Cell structures are built as products of small CW complexes with the sign
rule d(s x t) = ds x t + (-1)^dim(s) s x dt; presentation complexes use right
Fox derivatives. Boundaries are written exactly as produced (no cancellation),
so incidence information survives for component counting.
"""
import os
import sys

OUT = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "data")


# words are tuples of (gen, +-1)
def reduce(w):
    out = []
    for l in w:
        if out and out[-1][0] == l[0] and out[-1][1] == -l[1]:
            out.pop()
        else:
            out.append(l)
    return tuple(out)


def wstr(w):
    if not w:
        return "1"
    parts = []
    i = 0
    while i < len(w):
        j = i
        while j < len(w) and w[j] == w[i]:
            j += 1
        p = (j - i) * w[i][1]
        parts.append(w[i][0] + ("" if p == 1 else "^%d" % p))
        i = j
    return "*".join(parts)


def parse_word(s):
    if s == "1":
        return ()
    out = []
    for tok in s.split("*"):
        name, _, e = tok.partition("^")
        e = int(e) if e else 1
        out += [(name, 1 if e > 0 else -1)] * abs(e)
    return reduce(out)


class Complex:
    def __init__(self, gens=(), rels=()):
        self.gens = list(gens)
        self.rels = list(rels)
        self.cells = []  # (name, dim)
        self.bnd = {}  # name -> [(coeff, word, target)]
        self.subs = []
        self.meta = []

    def cell(self, name, dim, terms=()):
        self.cells.append((name, dim))
        self.bnd[name] = list(terms)

    def dim(self, name):
        return dict(self.cells)[name]

    def text(self, header):
        lines = ["# " + h if h else "#" for h in header]
        lines.append("scx 1")
        if self.gens:
            lines.append("gen " + " ".join(self.gens))
        for r in self.rels:
            lines.append("rel " + wstr(r))
        for n, d in self.cells:
            lines.append("cell %s dim %d" % (n, d))
        for n, d in self.cells:
            if d == 0:
                continue
            ts = self.bnd[n]
            body = " + ".join("%d*%s*%s" % (c, wstr(w), t) for c, w, t in ts) if ts else "0"
            lines.append("bnd %s = %s" % (n, body))
        for n, cs in self.subs:
            lines.append("sub %s =%s" % (n, "".join(" " + c for c in cs)))
        for k, v in self.meta:
            lines.append("meta %s %s" % (k, v))
        return "\n".join(lines) + "\n"


def closure(cx, names):
    seen = []
    stack = list(names)
    while stack:
        c = stack.pop()
        if c in seen:
            continue
        seen.append(c)
        stack += [t for _, _, t in cx.bnd[c]]
    order = [n for n, _ in cx.cells]
    return sorted(seen, key=order.index)


def product(a, b, sep="_"):
    """a x b where at most one factor carries group words."""
    cx = Complex(a.gens + b.gens, a.rels + b.rels)
    for sa, da in a.cells:
        for sb, db in b.cells:
            terms = []
            for c, w, t in a.bnd[sa]:
                terms.append((c, w, t + sep + sb))
            sign = -1 if da % 2 else 1
            for c, w, t in b.bnd[sb]:
                terms.append((sign * c, w, sa + sep + t))
            cx.cells.append((sa + sep + sb, da + db))
            cx.bnd[sa + sep + sb] = terms
    # keep dimension-sorted declaration order
    cx.cells.sort(key=lambda c: c[1])
    return cx


def circle(n, gen="x"):
    """n vertices V0..V(n-1), arcs A_j: V_j -> V_j+1; the last arc carries gen."""
    cx = Complex([gen])
    for j in range(n):
        cx.cell("V%d" % j, 0)
    for j in range(n):
        head = ((gen, 1),) if j == n - 1 else ()
        cx.cell("A%d" % j, 1, [(1, head, "V%d" % ((j + 1) % n)), (-1, (), "V%d" % j)])
    return cx


def disk():
    cx = Complex()
    cx.cell("p", 0)
    cx.cell("c", 1, [(1, (), "p"), (-1, (), "p")])
    cx.cell("d", 2, [(1, (), "c")])
    return cx


def interval(n):
    cx = Complex()
    for j in range(n + 1):
        cx.cell("%d" % j, 0)
    for j in range(n):
        cx.cell("I%d" % (j + 1), 1, [(1, (), "%d" % (j + 1)), (-1, (), "%d" % j)])
    return cx


def square():
    cx = Complex()
    for v in ("s00", "s10", "s01", "s11"):
        cx.cell(v, 0)
    cx.cell("bot", 1, [(1, (), "s10"), (-1, (), "s00")])
    cx.cell("top", 1, [(1, (), "s11"), (-1, (), "s01")])
    cx.cell("lft", 1, [(1, (), "s01"), (-1, (), "s00")])
    cx.cell("rgt", 1, [(1, (), "s11"), (-1, (), "s10")])
    cx.cell("F", 2, [(1, (), "bot"), (1, (), "rgt"), (-1, (), "top"), (-1, (), "lft")])
    return cx


def fox_terms(rel, edge):
    terms = []
    for i, (g, e) in enumerate(rel):
        if e > 0:
            terms.append((1, reduce(rel[i + 1:]), edge(g)))
        else:
            terms.append((-1, reduce(rel[i:]), edge(g)))
    return terms


def presentation_complex(gens, rels):
    cx = Complex(gens, rels)
    cx.cell("v", 0)
    for g in gens:
        cx.cell(g, 1, [(1, ((g, 1),), "v"), (-1, (), "v")])
    for k, r in enumerate(rels):
        cx.cell("r%d" % (k + 1), 2, fox_terms(r, lambda g: g))
    return cx


def write(name, cx, header):
    path = os.path.join(OUT, name)
    with open(path, "w") as f:
        f.write(cx.text(header))
    print("wrote", path, len(cx.cells), "cells")


def solid_torus_meridional(arcs, rminus, rplus):
    cx = product(circle(arcs), disk(), sep="")
    # rename V0p -> V0 etc. for readability
    ren = {}
    for n, d in cx.cells:
        base, fac = n[:-1], n[-1]
        kind = {"p": "", "c": "c", "d": "d"}[fac]
        ren[n] = base + kind
    cx2 = Complex(cx.gens)
    for n, d in cx.cells:
        cx2.cell(ren[n], d, [(c, w, ren[t]) for c, w, t in cx.bnd[n]])
    surface = lambda j: closure(cx2, ["A%dc" % j])
    cx2.subs.append(("R-", closure(cx2, ["A%dc" % j for j in rminus])))
    cx2.subs.append(("R+", closure(cx2, ["A%dc" % j for j in rplus])))
    gam = [j for j in range(arcs) if j not in rminus and j not in rplus]
    cx2.subs.append(("gamma", closure(cx2, ["A%dc" % j for j in gam])))
    del surface
    return cx2


def main():
    os.makedirs(OUT, exist_ok=True)

    # once-punctured torus times an interval, homotopy model
    t1 = Complex(["a", "b"])
    for v in ("v-", "v+"):
        t1.cell(v, 0)
    t1.cell("vI", 1, [(1, (), "v+"), (-1, (), "v-")])
    for s in ("-", "+"):
        for g in ("a", "b"):
            t1.cell(g + s, 1, [(1, ((g, 1),), "v" + s), (-1, (), "v" + s)])
    for g in ("a", "b"):
        t1.cell(g.upper(), 2, [(1, (), g + "-"), (1, ((g, 1),), "vI"), (-1, (), g + "+"), (-1, (), "vI")])
    t1.subs += [("R-", ["v-", "a-", "b-"]), ("R+", ["v+", "a+", "b+"]), ("gamma", [])]
    t1.meta += [("sutures", "1"), ("irreducible", "1"), ("s1xd2", "0"), ("d3", "0"), ("manifold", "0"),
                ("chi_rminus", "-1"), ("chi_rplus", "-1")]
    write("product_T1.scx", t1, [
        "Product sutured manifold R x [-1,1] over the once-punctured torus R.",
        "Homotopy model: R is a rose on a, b; the suture annulus is not modelled.",
        "Witnesses: relative homology of a product vanishes for every representation,",
        "so the vanishing criterion certifies tautness with the trivial representation,",
        "and the complexity bound is sharp (x = 1)."])

    mer = solid_torus_meridional(4, [0], [2])
    mer.meta += [("sutures", "2"), ("irreducible", "1"), ("s1xd2", "1"), ("d3", "0"), ("manifold", "1"),
                 ("chi_rminus", "0"), ("chi_rplus", "0")]
    write("meridional_solidtorus.scx", mer, [
        "Solid torus S^1 x D^2 with two meridional sutures (product cell structure:",
        "circle with four arcs times the disk p, c, d).",
        "Witnesses the excluded case: H_1(M,R-) has dimension k for every",
        "representation, so no representation certifies tautness."])

    mer4 = solid_torus_meridional(8, [0, 4], [2, 6])
    mer4.meta += [("sutures", "4"), ("irreducible", "1"), ("s1xd2", "1"), ("d3", "0"), ("manifold", "1"),
                  ("chi_rminus", "0"), ("chi_rplus", "0")]
    write("solidtorus_4meridional.scx", mer4, [
        "Solid torus with four meridional sutures: R- and R+ have two annulus components.",
        "Witnesses: a disconnected R- already gives H_1(M,R-;Z) != 0 (not a product)."])

    # slope-2 sutures: homotopy model, core loop x, four boundary circles
    s2 = Complex(["x"])
    s2.cell("p", 0)
    for j in range(4):
        s2.cell("q%d" % j, 0)
    s2.cell("x", 1, [(1, (("x", 1),), "p"), (-1, (), "p")])
    for j in range(4):
        s2.cell("e%d" % j, 1, [(1, (), "p"), (-1, (), "q%d" % j)])
        s2.cell("m%d" % j, 1, [(1, (("x", 1), ("x", 1)), "q%d" % j), (-1, (), "q%d" % j)])
    for j in range(4):
        s2.cell("D%d" % j, 2, [(1, (), "m%d" % j), (1, (("x", 1), ("x", 1)), "e%d" % j),
                               (-1, (("x", 1),), "x"), (-1, (), "x"), (-1, (), "e%d" % j)])
    s2.subs += [("R-", ["q0", "m0"]), ("R+", ["q1", "m1"]), ("gamma", ["q2", "q3", "m2", "m3"])]
    s2.meta += [("sutures", "2"), ("irreducible", "1"), ("s1xd2", "0"), ("d3", "0"), ("manifold", "0"),
                ("chi_rminus", "0"), ("chi_rplus", "0")]
    write("slope2_solidtorus.scx", s2, [
        "Solid torus with two sutures of slope 2. Homotopy model: core circle x and",
        "four boundary circles (R-, R+ and the two suture annuli), each attached",
        "to the core along x^2 by a mapping-cylinder square.",
        "Witnesses: H_1(M,R-;Z) = Z/2, so the trivial rational representation",
        "certifies tautness while the Z/2 quotient certifies that M is not a product."])

    # product sutured manifolds over the annulus and the disk (genuine cell structures)
    circ1 = Complex(["x"])
    circ1.cell("o", 0)
    circ1.cell("l", 1, [(1, (("x", 1),), "o"), (-1, (), "o")])
    ann = product(square(), circ1, sep=".")
    ann.subs += [("R-", closure(ann, ["bot.l"])), ("R+", closure(ann, ["top.l"])),
                 ("gamma", closure(ann, ["lft.l", "rgt.l"]))]
    ann.meta += [("sutures", "2"), ("irreducible", "1"), ("s1xd2", "0"), ("d3", "0"), ("manifold", "1"),
                 ("chi_rminus", "0"), ("chi_rplus", "0")]
    write("annulus_product.scx", ann, [
        "Product sutured manifold over the annulus: (square x circle), with",
        "R- = bottom x S^1, R+ = top x S^1 and the sides as suture annuli.",
        "Witnesses: product relative homology vanishes; the complexity bound clamps to 0."])

    dp = product(disk(), interval(1), sep=".")
    dp.subs += [("R-", closure(dp, ["d.0"])), ("R+", closure(dp, ["d.1"])), ("gamma", closure(dp, ["c.I1"]))]
    dp.meta += [("sutures", "1"), ("irreducible", "1"), ("s1xd2", "0"), ("d3", "1"), ("manifold", "1"),
                ("chi_rminus", "1"), ("chi_rplus", "1")]
    write("disk_product.scx", dp, [
        "Product sutured manifold over the disk: D x [-1,1] = D^3 with one suture.",
        "Witnesses the excluded D^3 case and the disk-component warning."])

    d3 = product(disk(), interval(3), sep=".")
    d3.subs += [("R-", closure(d3, ["d.0", "d.3"])), ("R+", closure(d3, ["c.I2"])),
                ("gamma", closure(d3, ["c.I1", "c.I3"]))]
    d3.meta += [("sutures", "2"), ("irreducible", "1"), ("s1xd2", "0"), ("d3", "1"), ("manifold", "1"),
                ("chi_rminus", "2"), ("chi_rplus", "0")]
    write("d3_two_sutures.scx", d3, [
        "The 3-ball with two parallel sutures: R- is two discs, R+ an annulus.",
        "Witnesses: not balanced, so no tautness certificate is attempted."])

    x, y = "x", "y"
    tref = [parse_word("x*y*x*y^-1*x^-1*y^-1")]
    tc = presentation_complex([x, y], tref)
    tc.meta += [("phi", "x=1 y=1")]
    write("trefoil.scx", tc, [
        "Presentation complex of the trefoil group <x, y | xyx = yxy>.",
        "Witnesses the Alexander-polynomial norm bound: Delta_1 = 1 - t + t^2, bound 1."])

    w = parse_word("x^-1*y*x*y^-1")
    fig8 = [reduce(w + ((x, 1),) + tuple((g, -e) for g, e in reversed(w)) + ((y, -1),))]
    fc = presentation_complex([x, y], fig8)
    fc.meta += [("phi", "x=1 y=1")]
    write("figure8.scx", fc, [
        "Presentation complex of the figure-eight knot group <x, y | wx = yw>,",
        "w = x^-1 y x y^-1. Witnesses Delta_1 = 1 - 3t + t^2 and norm bound 1."])

    # genus-2 handlebody core (rose x, y) with two punctured-torus boundary
    # pieces attached along a -> x, b -> [y, x]
    hb = Complex(["x", "y"])
    hb.cell("p", 0)
    for g in ("x", "y"):
        hb.cell(g, 1, [(1, ((g, 1),), "p"), (-1, (), "p")])
    images = [("a", parse_word("x")), ("b", parse_word("y*x*y^-1*x^-1"))]
    for v, side in (("q", ("a", "b")), ("u", ("c", "d"))):
        hb.cell(v, 0)
        edge = "e" if v == "q" else "f"
        hb.cell(edge, 1, [(1, (), "p"), (-1, (), v)])
        for name, (_, w) in zip(side, images):
            hb.cell(name, 1, [(1, w, v), (-1, (), v)])
            hb.cell(name.upper(), 2, [(1, (), name), (1, w, edge)] +
                    [(-c, u, t) for c, u, t in fox_terms(w, lambda g: g)] + [(-1, (), edge)])
    hb.cells.sort(key=lambda c: c[1])
    hb.subs += [("R-", ["q", "a", "b"]), ("R+", ["u", "c", "d"]), ("gamma", [])]
    hb.meta += [("sutures", "1"), ("irreducible", "1"), ("s1xd2", "0"), ("d3", "0"), ("manifold", "0"),
                ("chi_rminus", "-1"), ("chi_rplus", "-1")]
    write("handlebody_twisted.scx", hb, [
        "Chain-level model: a rose on x, y with two punctured-torus pieces R-, R+",
        "attached by mapping cylinders along a -> x, b -> [y, x]. Not claimed to",
        "come from an embedded sutured manifold; irreducibility is asserted.",
        "Witnesses: b1(M,R-;Q) = 1 under the trivial representation, while the",
        "reduced permutation representation of an S_3 quotient has b1 = 0."])

    # trefoil as a fibered knot: mapping torus of the rose under a -> a b^-1, b -> a
    mono = {"a": parse_word("a*b^-1"), "b": parse_word("a")}
    rels = [reduce((("t", 1), (g, 1), ("t", -1)) + tuple((h, -e) for h, e in reversed(mono[g])))
            for g in ("a", "b")]
    fb = presentation_complex(["a", "b", "t"], rels)
    fb.meta += [("phi", "t=1"), ("monodromy", "a=a*b^-1 b=a")]
    write("trefoil_fibered.scx", fb, [
        "Trefoil exterior as a mapping torus: fiber = once-punctured torus (rose on",
        "a, b), monodromy a -> a b^-1, b -> a acting on H_1 by [[1,1],[-1,0]].",
        "Witnesses the determinant formula Delta_1 = det(i_l - t i_r) = 1 - t + t^2."])


if __name__ == "__main__":
    sys.exit(main())

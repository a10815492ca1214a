#!/usr/bin/env python3
"""Mayer-Vietoris oracle for untwisted b1 of the double DM = M u_R M, R = R- u R+.

    ... -> H1(R) -> H1(M)^2 -> H1(DM) -> H0(R) -> H0(M)^2 -> H0(DM) -> 0
gives  b1(DM) = 2 b1(M) - rank(H1(R) -> H1(M)) + b0(R) - 1   (M connected).

The inputs below are worked out by hand from the topology of each example,
independently of the cell data in data/.
"""

CASES = {
    # name: (b1(M), rank H1(R)->H1(M), b0(R), reasoning)
    "product_T1": (2, 2, 2, "M ~ punctured torus; each copy of R maps isomorphically"),
    "meridional_solidtorus": (1, 0, 2, "meridian annuli are null-homologous in the solid torus"),
    "solidtorus_4meridional": (1, 0, 4, "four meridian annuli, all null-homologous"),
    "slope2_solidtorus": (1, 1, 2, "each annulus core maps to twice the core"),
    "annulus_product": (1, 1, 2, "each annulus core maps to the core"),
    "disk_product": (0, 0, 2, "two discs"),
    "d3_two_sutures": (0, 0, 3, "two discs and an annulus in the ball"),
    "handlebody_twisted": (2, 1, 2, "a -> x, b -> commutator: image of H1(R) is spanned by x"),
}


def b1_double(b1m, rank, b0r):
    return 2 * b1m - rank + b0r - 1


def main():
    for name, (b1m, rank, b0r, why) in CASES.items():
        print("%s: b1(DM;Q) = %d   (%s)" % (name, b1_double(b1m, rank, b0r), why))


if __name__ == "__main__":
    main()

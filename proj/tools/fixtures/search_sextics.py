"""Search for ordinary, cyclic, maximal q-Weil sextics.

Enumerates real Weil cubics f+ = x^3 + a x^2 + b x + c with three real roots
in (-2 sqrt q, 2 sqrt q) and square discriminant (cyclic cubic K+), forms
f(T) = T^3 f+(T + q/T) and screens with PARI: irreducible, Galois group C6,
nfdisc(f) = disc(f)/q^6 (maximal order), p unramified, p not dividing the
middle coefficient.

Requires cypari2. Prints one line per hit: q, coefficients, field
discriminant, f+ coefficients.
"""

import math
import sys

import cypari2

pari = cypari2.Pari()
pari.allocatemem(10**9)


def real_cubics(q):
    r = 2 * math.sqrt(q)
    for a in range(-int(3 * r), int(3 * r) + 1):
        for b in range(-int(3 * r * r), int(3 * r * r) + 1):
            for c in range(-int(r**3) - 1, int(r**3) + 2):
                d = 18 * a * b * c - 4 * a**3 * c + a * a * b * b - 4 * b**3 - 27 * c * c
                if d <= 0 or math.isqrt(d) ** 2 != d:
                    continue
                yield a, b, c


def roots_inside(a, b, c, q):
    roots = pari(f"polroots(x^3+({a})*x^2+({b})*x+({c}))")
    return all(abs(float(z.real())) < 2 * math.sqrt(q) for z in roots)


def search(qs, per_q):
    for q in qs:
        hits = 0
        p = int(pari.factor(q)[0][0])
        for a, b, c in real_cubics(q):
            if hits >= per_q:
                break
            if not roots_inside(a, b, c, q):
                continue
            f = pari(f"numerator(x^3*subst(x^3+({a})*x^2+({b})*x+({c}),x,x+{q}/x))")
            if int(pari.polcoef(f, 3)) % p == 0 or not pari.polisirreducible(f):
                continue
            gal = pari.polgalois(f)
            if int(gal[0]) != 6 or int(gal[2]) != 1:
                continue
            dk = pari.nfdisc(f)
            if pari.poldisc(f) != dk * q**6 or dk % p == 0:
                continue
            hits += 1
            coeffs = [int(pari.polcoef(f, 6 - i)) for i in range(7)]
            print(q, ",".join(map(str, coeffs)), int(dk), f"{a},{b},{c}", flush=True)


if __name__ == "__main__":
    qs = [int(t) for t in sys.argv[1].split(",")] if len(sys.argv) > 1 else [3, 5, 7, 11, 13]
    search(qs, int(sys.argv[2]) if len(sys.argv) > 2 else 3)

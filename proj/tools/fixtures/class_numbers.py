"""Emit reference fixtures {h_K, h_K+, omega_K} for q-Weil sextics using PARI.

Usage: class_numbers.py LABEL:q:c0,c1,...,c6 [...]  > fixtures.jsonl

Class groups come from bnfinit(., 1) and are certified with bnfcertify.
Requires cypari2.
"""

import json
import sys

import cypari2

from importlib.metadata import version

pari = cypari2.Pari()
VERSION = version("cypari2")
pari.allocatemem(2 * 10**9)


def fixture(label, q, coeffs):
    f = pari(" + ".join(f"({c})*x^{len(coeffs) - 1 - i}" for i, c in enumerate(coeffs)))
    g = (len(coeffs) - 1) // 2
    fplus = pari(f"my(f = {f}, y = 'y); polresultant(f, x^2 - y*x + {q}, x)")
    # the resultant is f+(y)^2 up to sign; take its squarefree part
    fplus = pari.factor(fplus)[0][0]
    fplus = pari.subst(fplus, "y", "x")
    assert pari.poldegree(fplus) == g
    bnf = pari.bnfinit(f, 1)
    bnf_plus = pari.bnfinit(fplus, 1)
    assert int(pari.bnfcertify(bnf)) == 1 and int(pari.bnfcertify(bnf_plus)) == 1
    dk, dkp = pari.nfdisc(f), pari.nfdisc(fplus)
    return {
        "label": label,
        "coeffs": [str(c) for c in coeffs],
        "q": str(q),
        "h_K": str(pari("(b) -> b.no")(bnf)),
        "h_Kplus": str(pari("(b) -> b.no")(bnf_plus)),
        "omega_K": str(pari("(b) -> b.tu[1]")(bnf)),
        "provenance": (
            f"PARI/GP {'.'.join(str(v) for v in pari.version()[:3])} via cypari2 {VERSION}: bnfinit(f,1) and bnfinit(f+,1), "
            f"both bnfcertify = 1; omega_K = bnf.tu[1]; nfdisc(f) = {dk}, "
            f"nfdisc(f+) = {dkp}"
        ),
    }


if __name__ == "__main__":
    for arg in sys.argv[1:]:
        label, q, coeffs = arg.split(":")
        print(json.dumps(fixture(label, int(q), [int(c) for c in coeffs.split(",")]), separators=(",", ":")))

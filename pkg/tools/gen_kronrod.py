"""Generate embedded Gauss-Kronrod tables with mpmath.

Run once; writes src/vecslepian/_kronrod_tables.py.  The Stieltjes
polynomial E_{n+1} is found in the Legendre basis from its orthogonality
against P_n * P_k (k <= n); Kronrod nodes are its roots and the weights
come from the exactness conditions on P_0 .. P_{2n}.
"""
import sys
from pathlib import Path

import mpmath as mp

mp.mp.dps = 60
DIGITS = 25


def legendre_all(lmax, x):
    p = [mp.mpf(1), x]
    for l in range(1, lmax):
        p.append(((2 * l + 1) * x * p[l] - l * p[l - 1]) / (l + 1))
    return p[: lmax + 1]


def kronrod(n):
    gx, gw = gauss(n)
    # quadrature exact for degree 2*(3n+2)-1
    qx, qw = gauss(3 * n + 4)
    # unknown coefficients e_l for l = n+1, n-1, ... (parity n+1), leading e_{n+1} = 1
    ls = list(range(n + 1, -1, -2))
    ks = [k for k in range(n + 1) if (k + n + ls[0]) % 2 == 0]
    tables = [legendre_all(n + 1, x) for x in qx]

    def inner(l, k):
        return mp.fsum(w * t[n] * t[l] * t[k] for w, t in zip(qw, tables))

    free = ls[1:]
    A = mp.matrix(len(ks), len(free))
    rhs = mp.matrix(len(ks), 1)
    for r, k in enumerate(ks):
        rhs[r] = -inner(ls[0], k)
        for c, l in enumerate(free):
            A[r, c] = inner(l, k)
    coef = mp.lu_solve(A, rhs) if free else []
    e = {ls[0]: mp.mpf(1)}
    for c, l in enumerate(free):
        e[l] = coef[c]

    def E(x):
        p = legendre_all(n + 1, x)
        return mp.fsum(v * p[l] for l, v in e.items())

    brackets = [mp.mpf(-1)] + sorted(gx) + [mp.mpf(1)]
    kx = []
    for lo, hi in zip(brackets[:-1], brackets[1:]):
        kx.append(mp.findroot(E, (lo, hi), solver="anderson"))
    nodes = sorted(kx + list(gx))
    m = len(nodes)
    V = mp.matrix(m, m)
    b = mp.matrix(m, 1)
    cols = [legendre_all(m, x) for x in nodes]
    for l in range(m):
        for c in range(m):
            V[l, c] = cols[c][l]
    b[0] = 2
    w = mp.lu_solve(V, b)
    gmap = {mp.nstr(x, 40): wt for x, wt in zip(gx, gw)}
    out = []
    for i, x in enumerate(nodes):
        out.append((x, gmap.get(mp.nstr(x, 40), mp.mpf(0)), w[i]))
    return out


def gauss(n):
    xs, ws = [], []
    for i in range(1, n + 1):
        x = mp.cos(mp.pi * (i - mp.mpf(1) / 4) / (n + mp.mpf(1) / 2))
        for _ in range(100):
            p = legendre_all(n, x)
            dp = n * (x * p[n] - p[n - 1]) / (x * x - 1)
            dx = p[n] / dp
            x -= dx
            if abs(dx) < mp.mpf(10) ** (-55):
                break
        p = legendre_all(n, x)
        dp = n * (x * p[n] - p[n - 1]) / (x * x - 1)
        xs.append(x)
        ws.append(2 / ((1 - x * x) * dp * dp))
    return xs, ws


def main(target):
    lines = [
        '"""Gauss-Kronrod nodes and weights on [-1, 1].',
        "",
        "Generated by tools/gen_kronrod.py (mpmath, 60 digits).  Each table maps",
        "the Kronrod point count to rows of (node, gauss_weight, kronrod_weight);",
        "gauss_weight is zero on the Kronrod-only nodes.",
        '"""',
        "",
        "TABLES = {",
    ]
    for n in (7, 10, 15, 20, 25, 30):
        rows = kronrod(n)
        lines.append(f"    {2 * n + 1}: (")
        for x, g, k in rows:
            lines.append(
                f"        ({mp.nstr(x, DIGITS, strip_zeros=False)}, "
                f"{mp.nstr(g, DIGITS, strip_zeros=False)}, "
                f"{mp.nstr(k, DIGITS, strip_zeros=False)}),"
            )
        lines.append("    ),")
        print("done", 2 * n + 1, file=sys.stderr)
    lines.append("}")
    Path(target).write_text("\n".join(lines) + "\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "src/vecslepian/_kronrod_tables.py")

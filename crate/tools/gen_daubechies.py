#!/usr/bin/env python3
"""Generate Daubechies scaling filters by spectral factorization (mpmath).

Writes:
  crates/core/src/dsp/daubechies_table.rs   orders 1..=45, y-domain roots
  crates/core/tests/data/db40_oracle.txt    order 40, z-domain roots

The two outputs use different root problems so the test fixture is an
independent check on the embedded table.
"""
import os
from math import comb

import mpmath as mp

DPS = 120
MAX_ORDER = 45
ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


def _mul_linear(poly, z):
    """poly(q) * (1 - z q), coefficients in ascending powers of q."""
    out = [mp.mpc(0)] * (len(poly) + 1)
    for i, c in enumerate(poly):
        out[i] += c
        out[i + 1] -= z * c
    return out


def _finish(poly, order):
    for _ in range(order):
        poly = _mul_linear(poly, mp.mpf(-1))
    h = [mp.re(c) for c in poly]
    s = sum(h)
    return [x * mp.sqrt(2) / s for x in h]


def db_ydomain(order):
    if order == 1:
        return [mp.sqrt(2) / 2] * 2
    coeffs = [mp.mpf(comb(order - 1 + k, k)) for k in range(order)][::-1]
    ys = mp.polyroots(coeffs, maxsteps=4000, extraprec=4 * DPS)
    poly = [mp.mpc(1)]
    for y in ys:
        b = 2 - 4 * y
        disc = mp.sqrt(b * b - 4)
        z1, z2 = (b + disc) / 2, (b - disc) / 2
        poly = _mul_linear(poly, z1 if abs(z1) < 1 else z2)
    return _finish(poly, order)


def db_zdomain(order):
    # z^(N-1) * P((2 - z - 1/z)/4) = sum_k C(N-1+k,k) (-1)^k (z-1)^(2k) z^(N-1-k) / 4^k
    deg = 2 * order - 2
    asc = [mp.mpf(0)] * (deg + 1)
    for k in range(order):
        c = mp.mpf(comb(order - 1 + k, k)) * (-1) ** k / mp.mpf(4) ** k
        for j in range(2 * k + 1):
            asc[order - 1 - k + j] += c * comb(2 * k, j) * (-1) ** (2 * k - j)
    roots = mp.polyroots(asc[::-1], maxsteps=4000, extraprec=4 * DPS)
    inside = sorted((r for r in roots if abs(r) < 1), key=lambda r: (float(mp.re(r)), float(mp.im(r))))
    assert len(inside) == order - 1, (order, len(inside))
    poly = [mp.mpc(1)]
    for z in inside:
        poly = _mul_linear(poly, z)
    return _finish(poly, order)


def main():
    mp.mp.dps = DPS
    lines = [
        "// Generated by tools/gen_daubechies.py. Do not edit.",
        "#![allow(clippy::excessive_precision, clippy::approx_constant)]",
        "",
        "/// Minimum-phase Daubechies scaling filters, indexed by `order - 1`.",
        "pub(crate) static DAUBECHIES: [&[f64]; %d] = [" % MAX_ORDER,
    ]
    for order in range(1, MAX_ORDER + 1):
        h = db_ydomain(order)
        assert abs(sum(x * x for x in h) - 1) < mp.mpf(10) ** -60, order
        lines.append("    &[")
        lines.extend("        %s," % mp.nstr(x, 20, min_fixed=-1, max_fixed=-1) for x in h)
        lines.append("    ],")
    lines.append("];")
    with open(os.path.join(ROOT, "crates/core/src/dsp/daubechies_table.rs"), "w") as f:
        f.write("\n".join(lines) + "\n")

    oracle = db_zdomain(40)
    with open(os.path.join(ROOT, "crates/core/tests/data/db40_oracle.txt"), "w") as f:
        f.write("# db40 scaling filter, z-domain spectral factorization, 30 significant digits\n")
        f.writelines(mp.nstr(x, 30, min_fixed=-1, max_fixed=-1) + "\n" for x in oracle)


if __name__ == "__main__":
    main()

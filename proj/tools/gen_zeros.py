#!/usr/bin/env python3
"""Generate ordinates of the first N nontrivial zeros of zeta(s).

Zeros are bracketed by sign changes of the Riemann-Siegel Z function
(leading correction term only) on a fine grid, then polished with
mpmath.siegelz. The count is checked against mpmath.zetazero(N).

usage: gen_zeros.py N OUT
"""
import sys

import mpmath
import numpy as np


def theta(t):
    return (t / 2) * np.log(t / (2 * np.pi)) - t / 2 - np.pi / 8 \
        + 1 / (48 * t) + 7 / (5760 * t**3)


def z_approx(t):
    a = np.sqrt(t / (2 * np.pi))
    n_max = np.floor(a).astype(int)
    th = theta(t)
    out = np.zeros_like(t)
    for n in range(1, int(n_max.max()) + 1):
        mask = n <= n_max
        out[mask] += np.cos(th[mask] - t[mask] * np.log(n)) / np.sqrt(n)
    out *= 2
    p = a - n_max
    c0 = np.cos(2 * np.pi * (p * p - p - 1.0 / 16)) / np.cos(2 * np.pi * p)
    sign = np.where(n_max % 2 == 1, 1.0, -1.0)
    return out + sign * a**-0.5 * c0


def main():
    count = int(sys.argv[1])
    out_path = sys.argv[2]
    mpmath.mp.dps = 15
    t_end = float(mpmath.zetazero(count).imag) + 0.05
    step = 0.01
    grid = np.arange(10.0, t_end, step)
    roots = []
    for lo in range(0, len(grid), 200000):
        chunk = grid[lo:lo + 200001]
        z = z_approx(chunk)
        idx = np.nonzero(np.sign(z[:-1]) != np.sign(z[1:]))[0]
        for i in idx:
            a, b, za, zb = chunk[i], chunk[i + 1], z[i], z[i + 1]
            roots.append(a - za * (b - a) / (zb - za))
    roots = sorted(set(roots))
    if len(roots) != count:
        sys.exit(f"bracketing found {len(roots)} zeros, expected {count}")
    polished = []
    for k, r in enumerate(roots):
        x = float(mpmath.findroot(mpmath.siegelz, (r - 0.002, r + 0.002),
                                  solver="secant"))
        if abs(x - r) > 0.05:
            sys.exit(f"zero {k + 1} drifted: {r} -> {x}")
        polished.append(x)
        if (k + 1) % 1000 == 0:
            print(k + 1, x, flush=True)
    if any(b <= a for a, b in zip(polished, polished[1:])):
        sys.exit("polished zeros are not strictly increasing")
    with open(out_path, "w") as f:
        f.write(f"# ordinates of the first {count} nontrivial zeros of zeta\n")
        f.write("# generated by tools/gen_zeros.py (Riemann-Siegel + mpmath)\n")
        for x in polished:
            f.write(f"{x:.9f}\n")


if __name__ == "__main__":
    main()

"""Independent brute-force evaluation of the two-spin XY thermal quantities.

Uses scipy.linalg.expm / logm-free eigen-entropies on the raw 4x4 matrices.
Used once to freeze thresholds and golden numbers for the C++ tests.
Run with `--golden DIR` to regenerate tests/golden/fig1_*.csv.
"""
import numpy as np
from scipy.linalg import expm

sx = np.array([[0, 1], [1, 0]], dtype=complex)
sy = np.array([[0, -1j], [1j, 0]], dtype=complex)
sz = np.diag([1.0, -1.0]).astype(complex)
i2 = np.eye(2, dtype=complex)


def entropy(rho):
    p = np.linalg.eigvalsh(rho)
    p = p[p > 1e-14]
    return float(-(p * np.log(p)).sum())


def point(b1, b2, g, beta):
    ha, hb = b1 * sz, b2 * sz
    hint = g * (np.kron(sx, sx) + np.kron(sy, sy))
    h = np.kron(ha, i2) + np.kron(i2, hb) + hint
    w = expm(-beta * h)
    zab = np.trace(w).real
    rho = w / zab
    r4 = rho.reshape(2, 2, 2, 2)
    rho_a = np.einsum("ijkj->ik", r4)
    rho_b = np.einsum("ijil->jl", r4)
    za = np.trace(expm(-beta * ha)).real
    zb = np.trace(expm(-beta * hb)).real
    e_int = np.trace(rho @ hint).real
    mi = entropy(rho_a) + entropy(rho_b) - entropy(rho)
    ub = -beta * e_int + np.log(za * zb / zab)
    return mi, ub


def tgrid(n=200, lo=0.1, hi=10.0):
    return np.exp(np.linspace(np.log(lo), np.log(hi), n))


def write_golden(directory):
    """Reference mutual information and bound for the six figure panels."""
    import os
    os.makedirs(directory, exist_ok=True)
    fields = [(0.5, 0.5), (2.0, 2.0), (3.0, 1.0)]
    for k, (b1, b2) in enumerate(fields):
        t_rows = [(t, 1.0) for t in tgrid()]
        g_rows = [(1.0, g) for g in np.linspace(0, 5, 201)]
        for label, rows in ((chr(ord("a") + k), t_rows), (chr(ord("d") + k), g_rows)):
            with open(os.path.join(directory, f"fig1_{label}.csv"), "w") as f:
                f.write("beta_inv,g,b1,b2,mutual_info,upper_bound\n")
                for t, g in rows:
                    mi, ub = point(b1, b2, g, 1.0 / t)
                    f.write(f"{t:.17g},{g:.17g},{b1:.17g},{b2:.17g},{mi:.17g},{ub:.17g}\n")


if __name__ == "__main__":
    import sys
    if len(sys.argv) > 2 and sys.argv[1] == "--golden":
        write_golden(sys.argv[2])
        sys.exit(0)
    fields = [(0.5, 0.5), (2.0, 2.0), (3.0, 1.0)]
    print("zero field g=1 beta=1:", point(0, 0, 1, 1))
    for b1, b2 in fields:
        mi, ub = point(b1, b2, 1.0, 0.1)
        print(f"T=10 fields {b1},{b2}: mi={mi:.15g} ub={ub:.15g} rel_gap={(ub-mi)/max(ub,1e-15):.6g}")
        ts = tgrid()
        gaps = [point(b1, b2, 1.0, 1 / t)[1] - point(b1, b2, 1.0, 1 / t)[0] for t in ts]
        hi = [g for t, g in zip(ts, gaps) if t >= 1]
        print("  gap non-increasing for T>=1:", all(b <= a + 1e-12 for a, b in zip(hi, hi[1:])),
              "max step", max(b - a for a, b in zip(hi, hi[1:])))
        gs = np.linspace(0, 5, 201)
        cg = [point(b1, b2, g, 1.0) for g in gs]
        cg = [u - m for m, u in cg]
        print("  coupling gap non-decreasing:", all(b >= a - 1e-12 for a, b in zip(cg, cg[1:])),
              "min step", min(b - a for a, b in zip(cg, cg[1:])))
    print("panel a T=0.1:", point(0.5, 0.5, 1.0, 10.0), "T=0.05:", point(0.5, 0.5, 1.0, 20.0))

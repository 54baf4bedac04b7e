"""Walk through the R-curve and its convex envelope for a few dimensions.

The curve R(lambda) is convex on [1, lambda0] and concave afterwards, so its
convex envelope follows R up to the tangent abscissa lambda* = 4(m-1)/m and
then runs straight to (m, log2 m).  This script prints the key landmarks and,
if matplotlib is available, saves a figure per dimension.
"""

import numpy as np

from rfunc import find_inflection, find_tangent, hull_value, r_second, r_value

for m in (3, 4, 8):
    lam0 = find_inflection(m).lambda0
    tangent = find_tangent(m)
    print(f"m = {m}")
    print(f"  inflection lambda0      = {lam0:.12f}  (R'' = {r_second(lam0, m):+.2e})")
    print(f"  tangent   lambda*       = {tangent.lambda_star:.12f}"
          f"  (4(m-1)/m = {4 * (m - 1) / m:.12f})")
    print(f"  slope of linear piece   = {tangent.slope:.12f} ebits per unit lambda")
    print(f"  R(m) = co(R)(m)         = {r_value(float(m), m):.12f} = log2({m})")
    print()

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    print("matplotlib not installed; skipping figures")
else:
    for m in (3, 4, 8):
        grid = np.linspace(1.0, m, 2000)
        fig, ax = plt.subplots(figsize=(6, 4))
        ax.plot(grid, r_value(grid, m), label="R")
        ax.plot(grid, hull_value(grid, m), "--", label="co(R)")
        lam_star = find_tangent(m).lambda_star
        ax.axvline(lam_star, color="gray", lw=0.8, label=r"$\lambda^*$")
        ax.set_xlabel(r"$\lambda$")
        ax.set_ylabel("ebits")
        ax.set_title(f"R-curve and convex envelope, m = {m}")
        ax.legend()
        fig.tight_layout()
        fig.savefig(f"r_curve_m{m}.png", dpi=120)
        print(f"wrote r_curve_m{m}.png")

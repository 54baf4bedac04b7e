"""Entanglement of formation of isotropic states as a function of fidelity.

Below F = 1/d the state is separable and the EOF vanishes; above it the EOF
is the convex envelope of the R-curve evaluated at lambda = d F.  The curve
follows R itself until d F reaches the tangent abscissa 4(d-1)/d and is
linear in F from there up to log2(d) at F = 1.
"""

import numpy as np

from rfunc import find_tangent, isotropic_eof

for d in (2, 3, 4, 5):
    f_tangent = find_tangent(d).lambda_star / d
    print(f"d = {d}: separable for F <= {1 / d:.4f}, "
          f"linear piece from F = {f_tangent:.4f}, "
          f"EOF(F=1) = {isotropic_eof(d, 1.0):.6f} ebits")

print()
print("F      " + "".join(f"  d={d}     " for d in (2, 3, 4, 5)))
for fid in np.linspace(0.0, 1.0, 21):
    row = "".join(f"  {isotropic_eof(d, fid):.6f}" for d in (2, 3, 4, 5))
    print(f"{fid:.2f} {row}")

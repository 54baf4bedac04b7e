"""EOF lower bounds for a gallery of bipartite states.

The bound is co(R)(Lambda) where Lambda is the larger of the two computable
entanglement norms: the trace norm of the partial transpose and the trace
norm of the realignment.  It is exact for maximally entangled and isotropic
states, and zero whenever neither norm exceeds 1.
"""

import numpy as np

from rfunc import (
    eof_lower_bound,
    isotropic_state,
    lambda_of_state,
    max_entangled_state,
    validate_state,
)

def show(label, rho):
    est = lambda_of_state(rho)
    print(f"{label:42s} |PT|={est.ppt_norm:8.5f}  |R|={est.ccnr_norm:8.5f}  "
          f"Lambda={est.lam:7.5f}  bound={eof_lower_bound(rho):8.6f} ebits")

for d in (2, 3, 4):
    show(f"maximally entangled {d}x{d}", max_entangled_state(d))

show("maximally mixed 2x2", validate_state(np.eye(4) / 4.0, (2, 2)))

for fid in (0.4, 0.7, 0.9):
    show(f"isotropic d=3, F={fid}", isotropic_state(3, fid))

# Bell state mixed with white noise: entanglement detected for p > 1/3
for p in (0.2, 0.5, 0.8):
    bell = max_entangled_state(2).matrix
    rho = validate_state(p * bell + (1 - p) * np.eye(4) / 4.0, (2, 2))
    show(f"Werner-like 2x2 mix, p={p}", rho)

# random pure state of Schmidt rank 2 embedded in 3x3
rng = np.random.default_rng(0)
theta = 0.7
psi = np.zeros(9, dtype=complex)
psi[0] = np.cos(theta)
psi[4] = np.sin(theta)
show("Schmidt-rank-2 pure state in 3x3",
     validate_state(np.outer(psi, psi.conj()), (3, 3)))

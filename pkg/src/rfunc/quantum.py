"""Bipartite density-matrix machinery and the two consumers of the envelope.

``isotropic_eof`` evaluates the exact entanglement of formation of an
isotropic state through the convex envelope, and ``eof_lower_bound`` turns
the two computable entanglement norms (partial transpose and realignment)
into a lower bound on the entanglement of formation of an arbitrary state.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .analysis import hull_value
from .core import DomainError, check_dimension

__all__ = [
    "StateValidationError",
    "DimensionMismatchError",
    "NotHermitianError",
    "TraceError",
    "NotPositiveError",
    "DensityMatrix",
    "LambdaEstimate",
    "validate_state",
    "partial_transpose",
    "realign",
    "trace_norm",
    "lambda_of_state",
    "isotropic_eof",
    "eof_lower_bound",
    "isotropic_state",
    "max_entangled_state",
    "load_state",
    "dump_state",
]

HERMITICITY_TOL = 1e-10
TRACE_TOL = 1e-10
POSITIVITY_TOL = -1e-10


class StateValidationError(ValueError):
    """A raw matrix failed one of the density-matrix checks."""


class DimensionMismatchError(StateValidationError):
    pass


class NotHermitianError(StateValidationError):
    pass


class TraceError(StateValidationError):
    pass


class NotPositiveError(StateValidationError):
    pass


@dataclass(frozen=True)
class DensityMatrix:
    """Validated bipartite state: (m*n) x (m*n), Hermitian, unit trace, PSD."""

    dims: tuple[int, int]
    matrix: np.ndarray

    @property
    def m(self) -> int:
        """Smaller local dimension (the R-curve lives on [1, m])."""
        return min(self.dims)


@dataclass(frozen=True)
class LambdaEstimate:
    """Entanglement norms of a state and the resulting R-curve abscissa."""

    ppt_norm: float
    ccnr_norm: float
    lam: float


def validate_state(raw, dims) -> DensityMatrix:
    """Check Hermiticity, unit trace and positivity of a raw matrix."""
    m, n = int(dims[0]), int(dims[1])
    if m < 2 or n < 2:
        raise DimensionMismatchError(f"local dimensions must be >= 2, got {dims}")
    mat = np.asarray(raw, dtype=complex)
    if mat.shape != (m * n, m * n):
        raise DimensionMismatchError(
            f"matrix shape {mat.shape} does not match dims {m}x{n} "
            f"(expected {(m * n, m * n)})")
    if not np.all(np.isfinite(mat)):
        raise StateValidationError("matrix contains non-finite entries")
    if np.max(np.abs(mat - mat.conj().T)) > HERMITICITY_TOL:
        raise NotHermitianError("matrix is not Hermitian")
    tr = np.trace(mat).real
    if abs(tr - 1.0) > TRACE_TOL:
        raise TraceError(f"trace is {tr}, expected 1")
    evals = np.linalg.eigvalsh(mat)
    if evals[0] < POSITIVITY_TOL:
        raise NotPositiveError(f"minimum eigenvalue {evals[0]} is negative")
    return DensityMatrix((m, n), mat)


def partial_transpose(rho: DensityMatrix) -> np.ndarray:
    """Transpose the second-subsystem indices: ((i,j),(k,l)) -> ((i,l),(k,j))."""
    m, n = rho.dims
    t = rho.matrix.reshape(m, n, m, n).transpose(0, 3, 2, 1)
    return t.reshape(m * n, m * n)


def realign(rho: DensityMatrix) -> np.ndarray:
    """Reshuffle ((i,j),(k,l)) -> row (i,k), column (j,l); shape m^2 x n^2."""
    m, n = rho.dims
    t = rho.matrix.reshape(m, n, m, n).transpose(0, 2, 1, 3)
    return t.reshape(m * m, n * n)


def trace_norm(matrix) -> float:
    """Sum of singular values of an arbitrary rectangular complex matrix."""
    mat = np.asarray(matrix, dtype=complex)
    if not np.all(np.isfinite(mat)):
        raise ValueError("trace_norm requires finite entries")
    return float(np.linalg.svd(mat, compute_uv=False).sum())


def lambda_of_state(rho: DensityMatrix) -> LambdaEstimate:
    """Max of the two entanglement norms, clamped to the R-curve domain [1, m]."""
    ppt = trace_norm(partial_transpose(rho))
    ccnr = trace_norm(realign(rho))
    lam = min(float(rho.m), max(1.0, ppt, ccnr))
    return LambdaEstimate(ppt, ccnr, lam)


def isotropic_eof(d, fidelity, base: str = "two") -> float:
    """Entanglement of formation of the d x d isotropic state with fidelity F.

    Zero for F <= 1/d (the separable regime); co(R) at lambda = d*F above.
    """
    d = check_dimension(d)
    fidelity = float(fidelity)
    if not 0.0 <= fidelity <= 1.0:
        raise DomainError(f"fidelity must lie in [0, 1], got {fidelity}")
    if fidelity <= 1.0 / d:
        return 0.0
    return float(hull_value(d * fidelity, d, base=base))


def eof_lower_bound(rho: DensityMatrix, base: str = "two") -> float:
    """Lower bound on the entanglement of formation: co(R)(Lambda(rho))."""
    return float(hull_value(lambda_of_state(rho).lam, rho.m, base=base))


def max_entangled_state(d) -> DensityMatrix:
    """Projector onto the canonical maximally entangled d x d pure state."""
    d = check_dimension(d)
    psi = np.eye(d, dtype=complex).reshape(d * d) / np.sqrt(d)
    return DensityMatrix((d, d), np.outer(psi, psi.conj()))


def isotropic_state(d, fidelity) -> DensityMatrix:
    """Isotropic state: F on the maximally entangled projector, rest uniform."""
    d = check_dimension(d)
    fidelity = float(fidelity)
    if not 0.0 <= fidelity <= 1.0:
        raise DomainError(f"fidelity must lie in [0, 1], got {fidelity}")
    proj = max_entangled_state(d).matrix
    rest = (np.eye(d * d, dtype=complex) - proj) / (d * d - 1.0)
    return DensityMatrix((d, d), fidelity * proj + (1.0 - fidelity) * rest)


def load_state(source) -> DensityMatrix:
    """Read a state from the JSON format {"dims": [m, n], "matrix": [[[re, im], ...], ...]}."""
    if hasattr(source, "read"):
        doc = json.load(source)
    else:
        with open(source) as fh:
            doc = json.load(fh)
    if not isinstance(doc, dict) or "dims" not in doc or "matrix" not in doc:
        raise StateValidationError('state file must contain "dims" and "matrix"')
    dims = doc["dims"]
    if (not isinstance(dims, list) or len(dims) != 2
            or not all(isinstance(d, int) for d in dims)):
        raise DimensionMismatchError('"dims" must be a pair of integers')
    rows = doc["matrix"]
    size = dims[0] * dims[1]
    if not isinstance(rows, list) or len(rows) != size:
        raise DimensionMismatchError(f"matrix must have {size} rows")
    mat = np.zeros((size, size), dtype=complex)
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != size:
            raise DimensionMismatchError(f"row {i} is ragged (expected {size} entries)")
        for j, entry in enumerate(row):
            if (not isinstance(entry, list) or len(entry) != 2
                    or not all(isinstance(v, (int, float)) for v in entry)):
                raise StateValidationError(
                    f"entry ({i},{j}) must be a [re, im] pair of numbers")
            re, im = float(entry[0]), float(entry[1])
            if not (np.isfinite(re) and np.isfinite(im)):
                raise StateValidationError(f"entry ({i},{j}) is not finite")
            mat[i, j] = complex(re, im)
    return validate_state(mat, dims)


def dump_state(rho: DensityMatrix, target) -> None:
    """Write a state in the JSON interchange format accepted by load_state."""
    doc = {
        "dims": [int(rho.dims[0]), int(rho.dims[1])],
        "matrix": [[[float(z.real), float(z.imag)] for z in row]
                   for row in rho.matrix],
    }
    if hasattr(target, "write"):
        json.dump(doc, target)
    else:
        with open(target, "w") as fh:
            json.dump(doc, fh)

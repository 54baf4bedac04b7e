import numpy as np


def central_diff(fn, x, h):
    """Fourth-order central difference of fn at x (array-friendly)."""
    return (fn(x - 2 * h) - 8 * fn(x - h) + 8 * fn(x + h) - fn(x + 2 * h)) / (12 * h)


def fd_step(x, m):
    """Step size for differencing, shrunk near the singular endpoints."""
    x = np.asarray(x, dtype=float)
    d = np.minimum.reduce([x - 1.0, m - x, np.ones_like(x)])
    return np.minimum(1e-3 * d ** 0.8, d / 4.0)


def interior_grid(m, n=1000, offset=1e-4):
    return np.linspace(1.0 + offset, m - offset, n)


def random_unitary(rng, d):
    z = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def random_density(rng, m, n):
    size = m * n
    g = rng.normal(size=(size, size)) + 1j * rng.normal(size=(size, size))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


def random_product_pure(rng, m, n):
    a = rng.normal(size=m) + 1j * rng.normal(size=m)
    b = rng.normal(size=n) + 1j * rng.normal(size=n)
    a /= np.linalg.norm(a)
    b /= np.linalg.norm(b)
    psi = np.kron(a, b)
    return np.outer(psi, psi.conj())

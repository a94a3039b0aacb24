"""Cesaro reconstruction of the measure and of densities from cyclic moments.

Averaging the symmetric partial sums of the diagonal expansion damps
the k-th diagonal by the triangular factor (1 - |k|/M), which is the
Fejer kernel in disguise; on a finite window this makes the Cesaro mean
an exact entrywise rescaling of the measure matrix, and the density
reconstruction the Fejer mean of the exact density.
"""

import math

import numpy as np

from .borel import indicator_coefficients
from .core import WindowMatrix
from .gom import TrigPolynomial, density
from .moments import _kdiff
from .structure import realize

TWO_PI = 2.0 * math.pi


def fejer_kernel(m, theta):
    """Fejer kernel of order M: the Cesaro average of the Dirichlet sums.

    Closed form (1/M) [sin(M theta / 2) / sin(theta / 2)]^2, with the
    limit value M at theta = 0 modulo 2*pi.  Nonnegative with unit mean
    against dtheta / 2pi.  Accepts scalars or arrays.
    """
    m = int(m)
    if m < 1:
        raise ValueError("kernel order must be positive")
    arr = np.atleast_1d(np.asarray(theta, dtype=np.float64))
    half = np.sin(arr / 2.0)
    top = np.sin(m * arr / 2.0)
    at_zero = half == 0.0
    ratio = top / np.where(at_zero, 1.0, half)
    vals = np.where(at_zero, float(m), ratio * ratio / m)
    return vals if np.ndim(theta) else float(vals[0])


def triangular_weights(m, radius):
    """Per-diagonal Cesaro factors (M - |k|)/M clipped at 0, |k| <= 2*radius."""
    ks = np.arange(-2 * radius, 2 * radius + 1)
    return (m - np.abs(ks)).clip(min=0) / float(m)


def cesaro_operator(c, x, m, radius):
    """Cesaro mean of order M of the diagonal expansion of the measure of X.

    Assembled from the single-row indicator coefficients and the
    cyclic-moment diagonals; on the window this equals the measure
    matrix with entry (n, m) rescaled by (1 - |n-m|/M) clipped at zero.
    """
    m = int(m)
    if m < 1:
        raise ValueError("Cesaro order must be positive")
    radius = int(radius)
    kmax = 2 * radius
    pos = indicator_coefficients(x, kmax)
    row = np.concatenate([pos[:0:-1].conj(), pos])  # indicator coefficient at k + kmax
    # the diagonal at offset k carries weight(k) times the row coefficient at -k
    factors = triangular_weights(m, radius) * row[::-1]
    kd = -_kdiff(radius)  # m - n
    return WindowMatrix(radius, realize(c, radius).data * factors[kd + kmax])


def cesaro_density(c, phi, psi, m):
    """Fejer mean of order M of the exact density for a vector pair.

    Each coefficient of the density is scaled by (1 - |k|/M) clipped at
    zero, so the reconstruction becomes exact once M exceeds the
    density bandwidth in the limit, and its L1 distance to the density
    is driven by the damped coefficients.
    """
    m = int(m)
    if m < 1:
        raise ValueError("Cesaro order must be positive")
    g = density(c, phi, psi)
    return TrigPolynomial(
        {k: a * (m - abs(k)) / m for k, a in g.items() if abs(k) < m}
    )


def reconstruction_sweep(c, x, radius, m_values, phi, psi, grid=720):
    """Error sweep rows (M, max entry deviation, L1 density error).

    The entry deviation compares the Cesaro operator mean against the
    measure matrix; the L1 error compares the Fejer density mean
    against the exact density by uniform quadrature on the circle.
    """
    from .gom import gom_matrix  # local import to keep module deps one-way

    target = gom_matrix(c, x, radius)
    g = density(c, phi, psi)
    thetas = np.arange(int(grid)) * (TWO_PI / int(grid))
    g_vals = g(thetas)
    rows = []
    for m in m_values:
        dev = float(np.max(np.abs(cesaro_operator(c, x, m, radius).data - target.data)))
        gm_vals = cesaro_density(c, phi, psi, m)(thetas)
        l1 = float(np.sum(np.abs(gm_vals - g_vals)) * (TWO_PI / int(grid)))
        rows.append((int(m), dev, l1))
    return rows

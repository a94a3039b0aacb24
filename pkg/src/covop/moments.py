"""Cyclic and polynomial moments of the measure, and its exponential transform.

The s-th moment matrix has entry (n, m) equal to the structure entry
times the basis moment coefficient (1/2pi) integral of theta^s
exp(i k theta) over the circle, at k = n - m.  That entrywise closed
form is the primary computation path.  The same matrix is also
assembled from the auxiliary reciprocal-power matrices; in that
combination the diagonal term enters with a plus sign,
(2pi)^s / (s+1) times the diagonal part, while the off-diagonal terms
carry -s! i^l (2pi)^(s-l) / ((s-l+1)!).  The sign convention was fixed
against the quadrature oracle and the two paths are cross-checked in
the test suite.
"""

import cmath
import math

import numpy as np

from .core import WindowMatrix
from .errors import OutsideDisk
from .structure import realize

TWO_PI = 2.0 * math.pi


def basis_moment_coefficient(s, k):
    """Closed form of (1/2pi) integral over [0, 2pi) of theta^s exp(i k theta).

    For s = 0 this is the Kronecker delta at k = 0; for k = 0 it is
    (2pi)^s / (s+1); otherwise the finite sum
    -s! sum_{l=1..s} i^l (2pi)^(s-l) / ((s-l+1)!) / k^l.
    """
    s = int(s)
    k = int(k)
    if s < 0:
        raise ValueError("moment order must be nonnegative")
    if s == 0:
        return 1.0 + 0j if k == 0 else 0j
    if k == 0:
        return complex(TWO_PI ** s / (s + 1))
    acc = 0j
    for l in range(1, s + 1):
        acc += (1j ** l) * (TWO_PI ** (s - l)) / math.factorial(s - l + 1) / (k ** l)
    return -math.factorial(s) * acc


class MomentCoefficientTable:
    """Memoized table of basis moment coefficients (s, k)."""

    def __init__(self):
        self._cache = {}

    def value(self, s, k):
        key = (int(s), int(k))
        if key not in self._cache:
            self._cache[key] = basis_moment_coefficient(*key)
        return self._cache[key]


def _kdiff(radius):
    n = np.arange(-radius, radius + 1)
    return np.subtract.outer(n, n)  # n - m


def cyclic_moment(c, k, radius):
    """Window matrix supported on the k-th diagonal: entry (n, n+k) is
    the structure entry there; equals the integral of exp(i k theta)
    against the measure."""
    radius = int(radius)
    k = int(k)
    side = 2 * radius + 1
    data = np.zeros((side, side), dtype=np.complex128)
    if abs(k) <= 2 * radius:
        diag = np.diagonal(realize(c, radius).data, offset=k)
        if k >= 0:
            rows = np.arange(side - k)
        else:
            rows = np.arange(-k, side)
        data[rows, rows + k] = diag
    return WindowMatrix(radius, data)


def aux_matrix(c, l, radius):
    """Reciprocal-power auxiliary matrix of order l.

    l = 0 keeps only the diagonal; l >= 1 has off-diagonal entries
    divided by (n - m)^l with a zero diagonal.  Consecutive orders obey
    the exact Schur recursion aux(l+1) = aux(1) * aux_ones(l).
    """
    radius = int(radius)
    l = int(l)
    if l < 0:
        raise ValueError("auxiliary order must be nonnegative")
    arr = realize(c, radius).data
    if l == 0:
        return WindowMatrix(radius, np.diag(np.diag(arr)))
    kd = _kdiff(radius).astype(np.float64)
    np.fill_diagonal(kd, 1.0)  # placeholder; diagonal zeroed below
    data = arr / kd ** l
    np.fill_diagonal(data, 0j)
    return WindowMatrix(radius, data)


def moment_matrix(c, s, radius):
    """Window matrix of the s-th polynomial moment of the measure.

    Entry (n, m) is the structure entry times
    :func:`basis_moment_coefficient` at (s, n - m).  For s = 1 the
    diagonal is pi times the structure diagonal and the off-diagonal
    entries are divided by i (n - m).
    """
    radius = int(radius)
    s = int(s)
    kmax = 2 * radius
    kern = np.array(
        [basis_moment_coefficient(s, k) for k in range(-kmax, kmax + 1)],
        dtype=np.complex128,
    )
    return WindowMatrix(radius, realize(c, radius).data * kern[_kdiff(radius) + kmax])


def moment_matrix_from_aux(c, s, radius):
    """Moment matrix assembled from the auxiliary matrices.

    Secondary path used to cross-check :func:`moment_matrix`; the
    diagonal term enters with +(2pi)^s/(s+1), the off-diagonal orders
    with -s! i^l (2pi)^(s-l)/((s-l+1)!).
    """
    radius = int(radius)
    s = int(s)
    side = 2 * radius + 1
    acc = np.zeros((side, side), dtype=np.complex128)
    acc += basis_moment_coefficient(s, 0) * aux_matrix(c, 0, radius).data
    if s >= 1:
        for l in range(1, s + 1):
            coef = (
                -math.factorial(s)
                * (1j ** l)
                * (TWO_PI ** (s - l))
                / math.factorial(s - l + 1)
            )
            acc += coef * aux_matrix(c, l, radius).data
    return WindowMatrix(radius, acc)


def exp_transform(c, z, radius):
    """Exponential transform: integral of exp(z theta) against the measure.

    Defined on the open disk |z| < 1/pi (enforced strictly).  Entry
    (n, m) is the structure entry times (exp(2pi z) - 1) / (2pi (z + ik))
    at k = n - m, with the removable singularity at z = 0, k = 0 giving
    the structure entry itself.
    """
    z = complex(z)
    if abs(z) >= 1.0 / math.pi:
        raise OutsideDisk(f"|z| = {abs(z):.6g} is not inside the open disk of radius 1/pi")
    radius = int(radius)
    kmax = 2 * radius
    num = cmath.exp(TWO_PI * z) - 1.0
    ks = np.arange(-kmax, kmax + 1, dtype=np.float64)
    denom = TWO_PI * (z + 1j * ks)
    kern = np.empty(denom.shape, dtype=np.complex128)
    singular = denom == 0
    kern[~singular] = num / denom[~singular]
    kern[singular] = 1.0  # z = 0 on the main diagonal
    return WindowMatrix(radius, realize(c, radius).data * kern[_kdiff(radius) + kmax])

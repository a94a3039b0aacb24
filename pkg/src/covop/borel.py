"""Borel test sets as finite unions of half-open arcs in [0, 2*pi).

Sets are kept in a canonical form (sorted, pairwise disjoint, maximally
merged arcs), which makes the set algebra exact and lets the Toeplitz
matrix of Fourier coefficients of an indicator function be evaluated in
closed form.
"""

import math

import numpy as np

from .core import WindowMatrix
from .errors import EmptyArc

TWO_PI = 2.0 * math.pi

# endpoint coincidences below this are collapsed to the empty arc
COINCIDENCE_TOL = 1e-15


class BorelSet:
    """Finite union of half-open arcs [a, b) with 0 <= a < b <= 2*pi.

    Construct through :func:`normalize` (or the parser in
    :mod:`covop.io`); the constructor trusts its input to be canonical.
    """

    __slots__ = ("arcs",)

    def __init__(self, arcs=()):
        object.__setattr__(self, "arcs", tuple((float(a), float(b)) for a, b in arcs))

    def __setattr__(self, name, value):
        raise AttributeError("BorelSet is immutable")

    def __eq__(self, other):
        return isinstance(other, BorelSet) and self.arcs == other.arcs

    def __hash__(self):
        return hash(self.arcs)

    def __repr__(self):
        return f"BorelSet({list(self.arcs)!r})"

    @property
    def is_empty(self):
        return not self.arcs

    @property
    def is_full(self):
        return self.arcs == ((0.0, TWO_PI),)


FULL = BorelSet([(0.0, TWO_PI)])
EMPTY = BorelSet()


def _merge_sorted(arcs):
    """Merge overlapping or endpoint-sharing arcs of a sorted list."""
    merged = []
    for a, b in arcs:
        if merged and a <= merged[-1][1]:
            merged[-1][1] = max(merged[-1][1], b)
        else:
            merged.append([a, b])
    return [(a, b) for a, b in merged if b > a]


def normalize(raw_arcs):
    """Canonicalize raw (start, end) pairs into a :class:`BorelSet`.

    Endpoints are reduced modulo 2*pi; wrap-around arcs (start > end)
    are split at 2*pi.  A pair spanning the whole circle yields the full
    set; a pair whose endpoints coincide modulo 2*pi within 1e-15 raises
    :class:`EmptyArc` (half-open arcs make such input measure zero).
    """
    pieces = []
    for a, b in raw_arcs:
        a = float(a)
        b = float(b)
        if abs(b - a) >= TWO_PI - COINCIDENCE_TOL:
            pieces.append((0.0, TWO_PI))
            continue
        span = (b - a) % TWO_PI
        if span <= COINCIDENCE_TOL or span >= TWO_PI - COINCIDENCE_TOL:
            raise EmptyArc(f"arc endpoints coincide modulo 2*pi: ({a}, {b})")
        start = a % TWO_PI
        end = start + span
        if end <= TWO_PI:
            pieces.append((start, end))
        else:
            pieces.append((start, TWO_PI))
            pieces.append((0.0, end - TWO_PI))
    return BorelSet(_merge_sorted(sorted(pieces)))


def measure(x):
    """Total Lebesgue measure of the arc union."""
    return float(sum(b - a for a, b in x.arcs))


def complement(x):
    """Complement within [0, 2*pi)."""
    gaps = []
    prev = 0.0
    for a, b in x.arcs:
        if a > prev:
            gaps.append((prev, a))
        prev = b
    if prev < TWO_PI:
        gaps.append((prev, TWO_PI))
    return BorelSet(gaps)


def union(x, y):
    return BorelSet(_merge_sorted(sorted(x.arcs + y.arcs)))


def intersect(x, y):
    out = []
    for a1, b1 in x.arcs:
        for a2, b2 in y.arcs:
            lo = max(a1, a2)
            hi = min(b1, b2)
            if hi > lo:
                out.append((lo, hi))
    return BorelSet(_merge_sorted(sorted(out)))


def shift(x, theta):
    """Translate the set by theta modulo 2*pi."""
    theta = float(theta) % TWO_PI
    if theta == 0.0 or x.is_empty:
        return x
    if x.is_full:
        return x
    pieces = []
    for a, b in x.arcs:
        a2 = a + theta
        b2 = b + theta
        if b2 <= TWO_PI:
            pieces.append((a2, b2))
        elif a2 >= TWO_PI:
            pieces.append((a2 - TWO_PI, b2 - TWO_PI))
        else:
            pieces.append((a2, TWO_PI))
            pieces.append((0.0, b2 - TWO_PI))
    return BorelSet(_merge_sorted(sorted(pieces)))


def indicator_coefficients(x, kmax):
    """Fourier coefficients (1/2pi) * integral_X exp(i k theta) dtheta.

    Returns the values for k = 0..kmax; negative k follow by conjugation.
    The k = 0 value is measure(X) / 2pi; for k != 0 each arc [a, b)
    contributes (exp(ikb) - exp(ika)) / (2 pi i k).
    """
    out = np.zeros(kmax + 1, dtype=np.complex128)
    out[0] = measure(x) / TWO_PI
    if kmax == 0 or x.is_empty:
        return out
    ks = np.arange(1, kmax + 1, dtype=np.float64)
    acc = np.zeros(kmax, dtype=np.complex128)
    for a, b in x.arcs:
        acc += np.exp(1j * ks * b) - np.exp(1j * ks * a)
    out[1:] = acc / (TWO_PI * 1j * ks)
    return out


def indicator_coefficient(x, k):
    """Single Fourier coefficient of the indicator, any integer k."""
    k = int(k)
    coeffs = indicator_coefficients(x, abs(k))
    value = coeffs[abs(k)]
    return complex(value) if k >= 0 else complex(value.conjugate())


def interval_matrix(x, radius):
    """Toeplitz window matrix with entry (n, m) given by the indicator
    Fourier coefficient at k = n - m.

    The result is exactly Hermitian (negative diagonals are stored as
    conjugates of positive ones) and its truncations are positive
    semidefinite contractions.
    """
    radius = int(radius)
    kmax = 2 * radius
    pos = indicator_coefficients(x, kmax)
    full = np.concatenate([pos[:0:-1].conj(), pos])  # index k + kmax
    n = np.arange(-radius, radius + 1)
    kdiff = n[:, None] - n[None, :]
    return WindowMatrix(radius, full[kdiff + kmax])

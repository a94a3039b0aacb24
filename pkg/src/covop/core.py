"""Window-truncated complex matrix arithmetic and (p, q) operator norms.

All infinite objects in the package are realized on symmetric index
windows [-N, N].  A :class:`WindowMatrix` stores the dense
(2N+1) x (2N+1) complex block with entry (n, m) addressed by the signed
integer indices; a :class:`FiniteVector` stores a finitely supported
coefficient sequence over the integers.  Every operation here is a pure
function of immutable values.
"""

import math

import numpy as np

from ._kernels import largest_eig_psd, start_vector
from .errors import NoConvergence, UnsupportedNormPair, WindowMismatch

INF = math.inf


class WindowMatrix:
    """Dense complex matrix over the symmetric index window [-N, N].

    Parameters
    ----------
    radius : int
        Window radius N >= 0; indices run from -N to N.
    data : array_like
        Complex (2N+1) x (2N+1) block; entry (n, m) sits at
        ``data[n + N, m + N]``.  All entries must be finite.
    """

    __slots__ = ("radius", "data")

    def __init__(self, radius, data):
        radius = int(radius)
        if radius < 0:
            raise ValueError("window radius must be nonnegative")
        arr = np.array(data, dtype=np.complex128, order="C")
        side = 2 * radius + 1
        if arr.shape != (side, side):
            raise ValueError(f"expected shape {(side, side)}, got {arr.shape}")
        if not np.all(np.isfinite(arr.real)) or not np.all(np.isfinite(arr.imag)):
            raise ValueError("window matrix entries must be finite")
        arr.setflags(write=False)
        object.__setattr__(self, "radius", radius)
        object.__setattr__(self, "data", arr)

    def __setattr__(self, name, value):
        raise AttributeError("WindowMatrix is immutable")

    @classmethod
    def zeros(cls, radius):
        side = 2 * int(radius) + 1
        return cls(radius, np.zeros((side, side), dtype=np.complex128))

    @classmethod
    def identity(cls, radius):
        return cls(radius, np.eye(2 * int(radius) + 1, dtype=np.complex128))

    def indices(self):
        """Signed window indices -N..N in order."""
        return np.arange(-self.radius, self.radius + 1)

    def entry(self, n, m):
        r = self.radius
        if abs(n) > r or abs(m) > r:
            raise IndexError(f"index ({n}, {m}) outside window radius {r}")
        return complex(self.data[n + r, m + r])

    def __repr__(self):
        return f"WindowMatrix(radius={self.radius})"


class FiniteVector:
    """Finitely supported coefficient sequence over the integers.

    Zero coefficients are dropped, so the stored support is exact.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=()):
        items = coeffs.items() if hasattr(coeffs, "items") else coeffs
        store = {}
        for n, c in items:
            c = complex(c)
            if c != 0:
                store[int(n)] = c
        object.__setattr__(self, "_coeffs", dict(sorted(store.items())))

    def __setattr__(self, name, value):
        raise AttributeError("FiniteVector is immutable")

    @classmethod
    def basis(cls, n):
        return cls({n: 1.0})

    def __call__(self, n):
        return self._coeffs.get(int(n), 0j)

    def __eq__(self, other):
        return isinstance(other, FiniteVector) and self._coeffs == other._coeffs

    def __hash__(self):
        return hash(tuple(self._coeffs.items()))

    def items(self):
        return self._coeffs.items()

    @property
    def support(self):
        return tuple(self._coeffs)

    @property
    def support_radius(self):
        return max((abs(n) for n in self._coeffs), default=0)

    def vdot(self, other):
        """Inner product <self | other>, conjugate linear in self."""
        acc = 0j
        for n, c in self._coeffs.items():
            oc = other._coeffs.get(n)
            if oc is not None:
                acc += c.conjugate() * oc
        return acc

    def window(self, radius):
        """Coefficients over [-radius, radius] as a dense array."""
        out = np.zeros(2 * radius + 1, dtype=np.complex128)
        for n, c in self._coeffs.items():
            if abs(n) <= radius:
                out[n + radius] = c
        return out

    def scaled(self, factor):
        return FiniteVector({n: factor * c for n, c in self._coeffs.items()})

    def __repr__(self):
        return f"FiniteVector({self._coeffs!r})"


def as_pnorm(p):
    """Canonicalize a norm index to 1, 2, or inf; reject everything else."""
    if p in (1, 2):
        return int(p)
    if p == INF or p == np.inf or (isinstance(p, str) and p.lower() == "inf"):
        return INF
    raise UnsupportedNormPair(f"norm index must be 1, 2 or inf, got {p!r}")


def vector_p_norm(v, p):
    """l_p norm of the coefficient sequence of a finite vector."""
    p = as_pnorm(p)
    mags = [abs(c) for _, c in v.items()]
    if not mags:
        return 0.0
    if p == 1:
        return float(sum(mags))
    if p == 2:
        return float(math.sqrt(sum(m * m for m in mags)))
    return float(max(mags))


def schur_product(a, b):
    """Entrywise product of two window matrices of equal radius."""
    if a.radius != b.radius:
        raise WindowMismatch(f"window radii differ: {a.radius} != {b.radius}")
    return WindowMatrix(a.radius, a.data * b.data)


def operator_norm(a, tol=1e-12, max_iter=100_000):
    """Largest singular value via power iteration on the Gram form.

    The iteration runs on A*A with a deterministic seeded start vector;
    near-degenerate leading spectra are handled by applying a large
    power of the Gram matrix through repeated squaring (still within
    the ``max_iter`` budget, counted in matrix-vector equivalents).  Up
    to three restarts with fresh start vectors are attempted before
    raising :class:`NoConvergence`.  The returned value never exceeds
    the true norm by more than rounding error (the Rayleigh quotient of
    a PSD matrix approaches its top eigenvalue from below).
    """
    arr = a.data
    amax = float(np.max(np.abs(arr)))
    if amax == 0.0:
        return 0.0
    scaled = arr / amax
    gram = scaled.conj().T @ scaled
    n = gram.shape[0]
    last_lam, last_diff = 0.0, np.inf
    for attempt in range(4):
        v0 = start_vector(n, attempt)
        lam, ok, diff = largest_eig_psd(gram, v0, float(tol), int(max_iter))
        if ok:
            return amax * math.sqrt(max(lam, 0.0))
        last_lam, last_diff = lam, diff
    raise NoConvergence(
        "power iteration exhausted its budget after restarts: "
        f"last iterate {amax * math.sqrt(max(last_lam, 0.0)):.17g}, "
        f"gap {last_diff:.3g} with budget {max_iter}"
    )


def pq_norm(a, p, q):
    """Operator norm from the l_p to the l_q coefficient space.

    Supported pairs and their closed forms:

    - (1, 2): max column 2-norm
    - (1, inf): max entry modulus
    - (2, 2): largest singular value (power iteration)
    - (2, inf): max row 2-norm
    - (inf, inf): max row 1-norm
    """
    p = as_pnorm(p)
    q = as_pnorm(q)
    arr = a.data
    if (p, q) == (1, 2):
        return float(np.max(np.sqrt(np.sum(np.abs(arr) ** 2, axis=0))))
    if (p, q) == (1, INF):
        return float(np.max(np.abs(arr)))
    if (p, q) == (2, 2):
        return operator_norm(a)
    if (p, q) == (2, INF):
        return float(np.max(np.sqrt(np.sum(np.abs(arr) ** 2, axis=1))))
    if (p, q) == (INF, INF):
        return float(np.max(np.sum(np.abs(arr), axis=1)))
    raise UnsupportedNormPair(f"unsupported norm pair ({p}, {q})")


def is_psd(a, tol=1e-10):
    """Check positive semidefiniteness to a relative tolerance.

    The matrix must be Hermitian to ``tol * scale`` and have minimum
    eigenvalue >= ``-tol * scale``, where scale is the largest entry
    modulus (1 for the zero matrix).  Non-Hermitian input returns False.
    """
    if tol < 0:
        raise ValueError("tolerance must be nonnegative")
    arr = a.data
    scale = float(np.max(np.abs(arr)))
    if scale == 0.0:
        return True
    if float(np.max(np.abs(arr - arr.conj().T))) > tol * scale:
        return False
    herm = (arr + arr.conj().T) / 2.0
    min_eig = float(np.linalg.eigvalsh(herm)[0])
    return min_eig >= -tol * scale


def conjugate_by_phase(a, theta):
    """Conjugate by the diagonal phase representation at angle theta.

    Entry (n, m) picks up the factor exp(i (n - m) theta); every entry
    modulus is preserved, so all unitary-invariant norms are too.
    """
    phases = np.exp(1j * float(theta) * a.indices())
    return WindowMatrix(a.radius, (phases[:, None] * a.data) * phases.conj()[None, :])


def matrix_sum(parts, radius):
    """Sum window matrices of a common radius (empty sum is the zero matrix)."""
    acc = np.zeros((2 * radius + 1, 2 * radius + 1), dtype=np.complex128)
    for part in parts:
        if part.radius != radius:
            raise WindowMismatch(f"window radii differ: {part.radius} != {radius}")
        acc += part.data
    return WindowMatrix(radius, acc)

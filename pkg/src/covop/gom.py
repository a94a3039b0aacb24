"""The covariant operator measure determined by a structure matrix.

On a window, the measure of a set X is the Schur product of the
structure matrix with the Toeplitz matrix of Fourier coefficients of
the indicator of X.  This module evaluates the measure on sets, as a
sesquilinear form, as a density, and against step functions and
trigonometric polynomials, and provides the rank-one decompositions and
the polarization split into four positive parts.
"""

import numpy as np

from . import borel
from .borel import TWO_PI, BorelSet, indicator_coefficient, interval_matrix, measure
from .core import FiniteVector, WindowMatrix, matrix_sum, schur_product
from .errors import OverlappingPieces
from .structure import GeneralizedVector, StructureMatrix, dense, rank_one, realize


class TrigPolynomial:
    """Finite Fourier-coefficient list: theta -> sum_k a_k exp(i k theta)."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=()):
        items = coeffs.items() if hasattr(coeffs, "items") else coeffs
        store = {}
        for k, c in items:
            c = complex(c)
            if c != 0:
                store[int(k)] = c
        object.__setattr__(self, "_coeffs", dict(sorted(store.items())))

    def __setattr__(self, name, value):
        raise AttributeError("TrigPolynomial is immutable")

    def __call__(self, theta):
        theta = np.asarray(theta, dtype=np.float64)
        acc = np.zeros(theta.shape, dtype=np.complex128)
        for k, c in self._coeffs.items():
            acc += c * np.exp(1j * k * theta)
        return acc if acc.shape else complex(acc)

    def coefficient(self, k):
        return self._coeffs.get(int(k), 0j)

    def items(self):
        return self._coeffs.items()

    @property
    def bandwidth(self):
        return max((abs(k) for k in self._coeffs), default=0)

    def integrate(self, x):
        """Exact integral over a Borel arc union (no quadrature)."""
        return complex(
            sum(c * TWO_PI * indicator_coefficient(x, k) for k, c in self._coeffs.items())
        )

    def __repr__(self):
        return f"TrigPolynomial({self._coeffs!r})"


class StepFunction:
    """Piecewise-constant function: (Borel set, value) pieces, 0 elsewhere."""

    __slots__ = ("pieces",)

    def __init__(self, pieces):
        object.__setattr__(
            self, "pieces", tuple((x, complex(v)) for x, v in pieces)
        )

    def __setattr__(self, name, value):
        raise AttributeError("StepFunction is immutable")

    def sup_abs(self):
        return max((abs(v) for _, v in self.pieces), default=0.0)


def gom_matrix(c, x, radius):
    """Window matrix of the measure of X: entry (n, m) is the structure
    entry times the indicator coefficient at n - m."""
    return schur_product(realize(c, radius), interval_matrix(x, radius))


def form_value(c, x, phi, psi):
    """Sesquilinear form value of the measure of X at a vector pair.

    Conjugate linear in ``phi``, linear in ``psi``; the window is sized
    automatically to cover both supports.
    """
    acc = 0j
    for n, pc in phi.items():
        for m, qc in psi.items():
            acc += pc.conjugate() * c.entry(n, m) * indicator_coefficient(x, n - m) * qc
    return complex(acc)


def density(c, phi, psi):
    """Density of the complex measure as a trigonometric polynomial.

    Coefficient a_k collects (1/2pi) conj(phi_n) c_{nm} psi_m over all
    support pairs with n - m = k; integrating the result over any arc
    union reproduces :func:`form_value` exactly.
    """
    coeffs = {}
    for n, pc in phi.items():
        for m, qc in psi.items():
            k = n - m
            coeffs[k] = coeffs.get(k, 0j) + pc.conjugate() * c.entry(n, m) * qc / TWO_PI
    return TrigPolynomial(coeffs)


def integrate_step(c, f, radius):
    """Integral of a step function against the measure, on a window.

    Pieces must be pairwise disjoint; no auto-refinement is attempted.
    """
    pieces = f.pieces
    for i in range(len(pieces)):
        for j in range(i + 1, len(pieces)):
            overlap = measure(borel.intersect(pieces[i][0], pieces[j][0]))
            if overlap > 1e-15:
                raise OverlappingPieces(
                    f"pieces {i} and {j} overlap with measure {overlap:.3g}"
                )
    return matrix_sum(
        (WindowMatrix(radius, v * gom_matrix(c, x, radius).data) for x, v in pieces),
        radius,
    )


def integrate_trig(c, f, radius):
    """Integral of a trig polynomial against the measure, in closed form.

    Orthogonality of the exponentials leaves entry (n, m) equal to the
    structure entry times the coefficient of f at m - n.
    """
    radius = int(radius)
    kmax = 2 * radius
    lookup = np.zeros(2 * kmax + 1, dtype=np.complex128)
    for k, a in f.items():
        if abs(k) <= kmax:
            lookup[k + kmax] = a
    n = np.arange(-radius, radius + 1)
    kdiff = n[None, :] - n[:, None]  # m - n
    return WindowMatrix(radius, realize(c, radius).data * lookup[kdiff + kmax])


def row_decompose(c, radius):
    """Split a structure matrix into rank-one pairs along window rows.

    For each window index k the pair is (basis vector at k, conjugated
    k-th row); the rank-one matrices sum back to the realization
    exactly.
    """
    radius = int(radius)
    pairs = []
    for k in range(-radius, radius + 1):
        v = GeneralizedVector.from_finite(FiniteVector.basis(k), tag="Hinf")
        row = FiniteVector(
            {m: c.entry(k, m).conjugate() for m in range(-radius, radius + 1)}
        )
        u = GeneralizedVector.from_finite(row, tag="H1")
        pairs.append((v, u))
    return pairs


def factorization_decompose(psi_table, eta_table):
    """Rank-one pairs realizing the inner-product matrix of two vector tables.

    Given tables n -> psi_n and m -> eta_m of finite vectors, returns
    pairs (v^k, u^k) indexed by the coefficient slots k, with
    v^k(n) = conj(psi_n[k]) and u^k(m) = conj(eta_m[k]); then
    sum_k v^k(n) conj(u^k(m)) = <psi_n | eta_m> exactly, and
    sum_k |v^k(n)|^2 equals the squared norm of psi_n.
    """
    psi = dict(psi_table)
    eta = dict(eta_table)
    slots = set()
    for vec in list(psi.values()) + list(eta.values()):
        slots.update(vec.support)
    pairs = []
    for k in sorted(slots):
        v = FiniteVector({n: vec(k).conjugate() for n, vec in psi.items()})
        u = FiniteVector({m: vec(k).conjugate() for m, vec in eta.items()})
        pairs.append(
            (
                GeneralizedVector.from_finite(v, tag="H1"),
                GeneralizedVector.from_finite(u, tag="H1"),
            )
        )
    return pairs


def rank_one_sum(pairs, radius):
    """Window realization of a sum of rank-one structure matrices."""
    return matrix_sum((realize(rank_one(v, u), radius) for v, u in pairs), radius)


def polarization(pairs, radius):
    """Split a rank-one pair list into four positive structure matrices.

    Returns dense matrices C_0..C_3 with entries
    sum_k (v^k(n) + i^s u^k(n)) conj(v^k(m) + i^s u^k(m)); each is a
    Gram-type sum (hence PSD at every window) and the alternating
    average (1/4) sum_s i^s C_s reproduces the rank-one sum entrywise.
    """
    radius = int(radius)
    side = 2 * radius + 1
    out = []
    for s in range(4):
        w = 1j ** s
        acc = np.zeros((side, side), dtype=np.complex128)
        for v, u in pairs:
            combo = v.window(radius) + w * u.window(radius)
            acc += np.outer(combo, combo.conj())
        out.append(dense(acc, radius))
    return tuple(out)

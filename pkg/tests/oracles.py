"""Independent oracles and seeded sample builders for the test suite.

Everything here deliberately avoids the library's closed-form paths:
quadrature is composite Simpson, norms come from LAPACK via numpy,
entrywise products are explicit loops.  Expected values asserted in the
tests were computed with these oracles.
"""

import math

import numpy as np

from covop import FiniteVector, WindowMatrix, normalize

TWO_PI = 2.0 * math.pi
SIMPSON_PANELS = 2 ** 14


def simpson_arc(fn, a, b, panels=SIMPSON_PANELS):
    """Composite Simpson quadrature of a vectorized integrand on [a, b]."""
    theta = np.linspace(a, b, 2 * panels + 1)
    vals = fn(theta)
    weights = np.ones(2 * panels + 1)
    weights[1:-1:2] = 4.0
    weights[2:-1:2] = 2.0
    return complex(np.sum(weights * vals) * (b - a) / (6.0 * panels))


def simpson_set(fn, borel_set, panels=SIMPSON_PANELS):
    """Quadrature of an integrand over an arc union, arc by arc."""
    return complex(sum(simpson_arc(fn, a, b, panels) for a, b in borel_set.arcs))


def svd_norm(m):
    """Largest singular value via LAPACK (independent of power iteration)."""
    arr = m.data if isinstance(m, WindowMatrix) else np.asarray(m)
    return float(np.linalg.norm(arr, 2))


def min_eig(m):
    """Smallest eigenvalue of the Hermitian part via LAPACK."""
    arr = m.data if isinstance(m, WindowMatrix) else np.asarray(m)
    herm = (arr + arr.conj().T) / 2.0
    return float(np.linalg.eigvalsh(herm)[0])


def schur_loop(a, b):
    """Brute-force entrywise product by explicit loops."""
    side = a.data.shape[0]
    out = np.empty((side, side), dtype=np.complex128)
    for i in range(side):
        for j in range(side):
            out[i, j] = a.data[i, j] * b.data[i, j]
    return out


def fejer_double_sum(m, theta):
    """Fejer kernel by its defining double sum (no closed form)."""
    acc = 0j
    for big_n in range(m):
        for k in range(-big_n, big_n + 1):
            acc += np.exp(1j * k * theta)
    return acc.real / m


def sampled_two_norm_lower(arr, samples=10 ** 5, seed=0):
    """Lower bound of the (2, 2) norm from random unit vectors."""
    rng = np.random.default_rng(seed)
    side = arr.shape[1]
    vs = rng.standard_normal((samples, side)) + 1j * rng.standard_normal((samples, side))
    vs /= np.linalg.norm(vs, axis=1, keepdims=True)
    return float(np.max(np.linalg.norm(vs @ arr.T, axis=1)))


def random_window(rng, radius, scale=1.0):
    side = 2 * radius + 1
    data = rng.standard_normal((side, side)) + 1j * rng.standard_normal((side, side))
    return WindowMatrix(radius, scale * data)


def random_arc_set(rng, max_arcs=3):
    pairs = []
    for _ in range(int(rng.integers(1, max_arcs + 1))):
        a = float(rng.uniform(0.0, TWO_PI))
        length = float(rng.uniform(0.05, 2.0))
        pairs.append((a, a + length))
    return normalize(pairs)


def random_finite_vector(rng, radius, support=3):
    idx = rng.choice(np.arange(-radius, radius + 1), size=min(support, 2 * radius + 1), replace=False)
    return FiniteVector(
        {int(n): complex(rng.standard_normal(), rng.standard_normal()) for n in idx}
    )


def random_dyadic_unit_vector(rng, index_range):
    """Unit vector whose squared norm is exactly 1.0 in float arithmetic.

    Components have dyadic squared moduli (powers of two down to 1/8)
    chosen so all products and partial sums in an inner product are
    exact; gram matrices of such vectors have an exactly unit diagonal.
    """
    parts = [1.0]
    for _ in range(int(rng.integers(0, 4))):
        i = int(rng.integers(len(parts)))
        half = parts.pop(i) / 2.0
        parts += [half, half]
    indices = rng.choice(index_range, size=len(parts), replace=False)
    coeffs = {}
    for idx, p in zip(indices, parts):
        ee = int(round(math.log2(p)))
        if ee % 2 == 0:
            mag = 2.0 ** (ee // 2)
            comp = [mag, -mag, 1j * mag, -1j * mag][int(rng.integers(4))]
        else:
            mag = 2.0 ** ((ee - 1) // 2)
            comp = complex(
                mag * (1.0 if rng.integers(2) else -1.0),
                mag * (1.0 if rng.integers(2) else -1.0),
            )
        coeffs[int(idx)] = comp
    return FiniteVector(coeffs)


def random_unit_gram(rng, radius, table_radius=None):
    """Gram structure matrix of random exactly-unit vectors."""
    from covop import gram

    table_radius = radius if table_radius is None else table_radius
    slots = np.arange(-table_radius - 2, table_radius + 3)
    table = {
        n: random_dyadic_unit_vector(rng, slots)
        for n in range(-table_radius, table_radius + 1)
    }
    return gram(table, default_vector=FiniteVector.basis(0))


def random_phases(rng, radius):
    return {n: float(rng.uniform(0.0, TWO_PI)) for n in range(-radius, radius + 1)}

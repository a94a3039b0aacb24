"""Hot numeric kernels: numba-compiled fast path with a pure-numpy fallback.

The only kernel that dominates runtime is the power iteration used for
(2, 2) operator norms; everything else in the package is vectorized
numpy.  The numba path is used when numba imports cleanly.  Setting the
environment variable ``COVOP_PURE_NUMPY=1`` before import forces the
numpy fallback (useful for benchmarking and debugging).

Both paths run the same two-phase algorithm on the same deterministic
start vectors, so results agree to rounding error:

1. plain power iteration on the Gram matrix, stopping when the Rayleigh
   quotient is stable to the requested relative tolerance three
   iterations in a row;
2. if the spectrum has near-degenerate leading eigenvalues the plain
   iteration plateaus, so the kernel instead applies the matrix power
   B^(2^J) by repeated squaring (J = 48), which suppresses every mode
   more than ~1e-12 below the top regardless of gap structure, and then
   takes the Rayleigh quotient through the original matrix.

The iteration budget ``max_iter`` is accounted in matrix-vector
equivalents: one squaring of an n x n matrix counts as n applications.
The Rayleigh quotient of a PSD matrix never exceeds its top eigenvalue,
so returned values are lower bounds up to rounding in either phase.
"""

import os

import numpy as np

PURE_NUMPY = os.environ.get("COVOP_PURE_NUMPY", "").strip() not in ("", "0")

try:
    if PURE_NUMPY:
        raise ImportError("pure-numpy fallback requested")
    from numba import njit

    NUMBA_ENABLED = True
except ImportError:
    njit = None
    NUMBA_ENABLED = False

PHASE1_CAP = 600
SQUARINGS = 48


def _splitmix64(indices):
    """Deterministic 64-bit mix of an integer array, as uniforms in [0, 1)."""
    z = indices.astype(np.uint64) + np.uint64(0x9E3779B97F4A7C15)
    z = (z ^ (z >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
    z = z ^ (z >> np.uint64(31))
    return (z >> np.uint64(11)).astype(np.float64) / float(1 << 53)


def start_vector(n, attempt):
    """Deterministic power-iteration start: all ones plus a seeded perturbation.

    Distinct ``attempt`` values give independent perturbations for restarts.
    """
    base = np.arange(2 * n, dtype=np.int64) + np.int64(attempt) * np.int64(0x51ED2701)
    u = _splitmix64(base)
    re = 1.0 + 0.5 * (u[:n] - 0.5)
    im = 0.5 * (u[n:] - 0.5)
    return re + 1j * im


def _plain_iteration_py(gram, v0, tol, cap):
    v = v0 / np.sqrt(np.real(np.vdot(v0, v0)))
    lam_prev = -1.0
    lam = 0.0
    streak = 0
    diff = np.inf
    for it in range(cap):
        w = gram @ v
        lam = float(np.real(np.vdot(v, w)) / np.real(np.vdot(v, v)))
        nw = np.sqrt(float(np.real(np.vdot(w, w))))
        if nw == 0.0:
            return lam, it + 1, False, np.inf
        diff = abs(lam - lam_prev)
        if lam > 0.0 and diff <= tol * lam:
            streak += 1
            if streak >= 3:
                return lam, it + 1, True, diff
        else:
            streak = 0
        lam_prev = lam
        v = w / nw
    return lam, cap, False, diff


def _squaring_phase_py(gram):
    s = gram.copy()
    for _ in range(SQUARINGS):
        s = s / np.linalg.norm(s)
        s = s @ s
        s = (s + s.conj().T) / 2.0
    col = int(np.argmax(np.sum(np.abs(s) ** 2, axis=0)))
    v = s[:, col]
    for _ in range(2):
        w = gram @ v
        nw = np.sqrt(float(np.real(np.vdot(w, w))))
        if nw == 0.0:
            break
        v = w / nw
    denom = float(np.real(np.vdot(v, v)))
    if denom == 0.0:
        return 0.0, False
    lam = float(np.real(np.vdot(v, gram @ v)) / denom)
    return lam, True


if NUMBA_ENABLED:

    @njit(cache=True)
    def _plain_iteration_nb(gram, v0, tol, cap):  # pragma: no cover
        n = gram.shape[0]
        v = v0.copy()
        s = 0.0
        for i in range(n):
            s += v[i].real * v[i].real + v[i].imag * v[i].imag
        s = np.sqrt(s)
        for i in range(n):
            v[i] = v[i] / s
        w = np.zeros(n, dtype=np.complex128)
        lam_prev = -1.0
        lam = 0.0
        streak = 0
        diff = 1e300
        for it in range(cap):
            for i in range(n):
                acc = 0.0 + 0.0j
                for j in range(n):
                    acc += gram[i, j] * v[j]
                w[i] = acc
            lam = 0.0
            vv = 0.0
            nw2 = 0.0
            for i in range(n):
                lam += v[i].real * w[i].real + v[i].imag * w[i].imag
                vv += v[i].real * v[i].real + v[i].imag * v[i].imag
                nw2 += w[i].real * w[i].real + w[i].imag * w[i].imag
            lam = lam / vv
            nw = np.sqrt(nw2)
            if nw == 0.0:
                return lam, it + 1, False, 1e300
            diff = abs(lam - lam_prev)
            if lam > 0.0 and diff <= tol * lam:
                streak += 1
                if streak >= 3:
                    return lam, it + 1, True, diff
            else:
                streak = 0
            lam_prev = lam
            for i in range(n):
                v[i] = w[i] / nw
        return lam, cap, False, diff

    @njit(cache=True)
    def _squaring_phase_nb(gram, squarings):  # pragma: no cover
        n = gram.shape[0]
        s = gram.copy()
        for _ in range(squarings):
            f = 0.0
            for i in range(n):
                for j in range(n):
                    f += s[i, j].real * s[i, j].real + s[i, j].imag * s[i, j].imag
            f = np.sqrt(f)
            if f == 0.0:
                return 0.0, False
            s = s / f
            s = np.dot(s, s)
            for i in range(n):
                for j in range(i + 1, n):
                    avg = 0.5 * (s[i, j] + np.conj(s[j, i]))
                    s[i, j] = avg
                    s[j, i] = np.conj(avg)
                s[i, i] = complex(s[i, i].real, 0.0)
        best = -1.0
        col = 0
        for j in range(n):
            c = 0.0
            for i in range(n):
                c += s[i, j].real * s[i, j].real + s[i, j].imag * s[i, j].imag
            if c > best:
                best = c
                col = j
        v = s[:, col].copy()
        w = np.zeros(n, dtype=np.complex128)
        for _ in range(2):
            for i in range(n):
                acc = 0.0 + 0.0j
                for j in range(n):
                    acc += gram[i, j] * v[j]
                w[i] = acc
            nw = 0.0
            for i in range(n):
                nw += w[i].real * w[i].real + w[i].imag * w[i].imag
            nw = np.sqrt(nw)
            if nw == 0.0:
                break
            for i in range(n):
                v[i] = w[i] / nw
        lam = 0.0
        vv = 0.0
        for i in range(n):
            acc = 0.0 + 0.0j
            for j in range(n):
                acc += gram[i, j] * v[j]
            lam += v[i].real * acc.real + v[i].imag * acc.imag
            vv += v[i].real * v[i].real + v[i].imag * v[i].imag
        if vv == 0.0:
            return 0.0, False
        return lam / vv, True

    def plain_iteration(gram, v0, tol, cap):
        gram = np.ascontiguousarray(gram, dtype=np.complex128)
        v0 = np.ascontiguousarray(v0, dtype=np.complex128)
        return _plain_iteration_nb(gram, v0, tol, cap)

    def squaring_phase(gram):
        return _squaring_phase_nb(np.ascontiguousarray(gram, dtype=np.complex128), SQUARINGS)

else:

    def plain_iteration(gram, v0, tol, cap):
        return _plain_iteration_py(gram, v0, tol, cap)

    def squaring_phase(gram):
        return _squaring_phase_py(gram)


def largest_eig_psd(gram, v0, tol, max_iter):
    """Largest eigenvalue of a Hermitian PSD matrix.

    Returns ``(lam, converged, diff)``.  Runs the plain iteration up to
    ``min(max_iter, PHASE1_CAP)`` steps, then falls back to the
    repeated-squaring phase when the remaining ``max_iter`` budget
    (in matrix-vector equivalents) allows it.
    """
    n = gram.shape[0]
    cap = int(min(max_iter, PHASE1_CAP))
    lam, used, ok, diff = plain_iteration(gram, v0, tol, cap)
    if ok:
        return lam, True, diff
    if SQUARINGS * n <= max_iter - used:
        lam2, ok2 = squaring_phase(gram)
        if ok2:
            # keep the better lower bound; both approach from below
            return max(lam, lam2), True, 0.0
    return lam, False, diff

"""Structure-matrix families as window-independent entry generators.

A :class:`StructureMatrix` is a total map (n, m) -> complex together
with family metadata.  The metadata carries global guarantees that no
finite window can establish by itself (positive semidefiniteness of the
infinite matrix, a diagonal supremum, a row-norm bound, a factorization
through bounded vector sequences); the diagnostics module consumes
these when assembling extensibility certificates.
"""

import numpy as np

from . import io as _io
from .core import FiniteVector, WindowMatrix
from .errors import RadiusExceeded, UnknownFamily


class GeneralizedVector:
    """Coefficient sequence over the integers backed by a generator.

    The membership tag is a declaration (one of ``H1``, ``H2``, ``Hinf``,
    ``Vdual``), not an inferred fact: membership of an infinite sequence
    cannot be decided from finitely many coefficients.  ``Hinf``-tagged
    vectors should declare a sup bound; window evidence contradicting a
    declaration is reported by diagnostics, never silently fixed.
    """

    __slots__ = ("_fn", "tag", "bound")

    TAGS = ("H1", "H2", "Hinf", "Vdual")

    def __init__(self, fn, tag="Vdual", bound=None):
        if tag not in self.TAGS:
            raise ValueError(f"membership tag must be one of {self.TAGS}, got {tag!r}")
        object.__setattr__(self, "_fn", fn)
        object.__setattr__(self, "tag", tag)
        object.__setattr__(self, "bound", None if bound is None else float(bound))

    def __setattr__(self, name, value):
        raise AttributeError("GeneralizedVector is immutable")

    @classmethod
    def from_finite(cls, vec, tag="H1", bound=None):
        if bound is None:
            bound = max((abs(c) for _, c in vec.items()), default=0.0)
        return cls(lambda n, _v=vec: _v(n), tag=tag, bound=bound)

    def __call__(self, n):
        return complex(self._fn(int(n)))

    def window(self, radius):
        return np.array([self(n) for n in range(-radius, radius + 1)], dtype=np.complex128)

    def window_violation(self, radius):
        """Message when window evidence contradicts the declared tag, else None."""
        if self.tag != "Hinf" or self.bound is None:
            return None
        sup = float(np.max(np.abs(self.window(radius)))) if radius >= 0 else 0.0
        if sup > self.bound * (1 + 1e-12):
            return f"declared Hinf bound {self.bound:.6g} exceeded on window: {sup:.6g}"
        return None


class StructureMatrix:
    """Window-independent generator of matrix entries with family metadata.

    Attributes
    ----------
    family : str
        One of ones, identity, sign_counterexample, log_counterexample,
        gram, rank_one, phase, dense, custom.
    psd_global : bool
        Family-level guarantee that every truncation (at any radius) is
        positive semidefinite.
    diag_sup : float or None
        Declared supremum of the diagonal entries, when known globally.
    row_bound : float or None
        Declared global bound on row 2-norms, when known.
    factor_bounds : (float, float) or None
        Declared bounds of a factorization through bounded vector
        sequences, when the family construction provides one.
    """

    __slots__ = (
        "family",
        "_entry_fn",
        "_block_fn",
        "dense_radius",
        "psd_global",
        "diag_sup",
        "row_bound",
        "factor_bounds",
        "params",
    )

    def __init__(
        self,
        family,
        entry_fn,
        block_fn,
        *,
        dense_radius=None,
        psd_global=False,
        diag_sup=None,
        row_bound=None,
        factor_bounds=None,
        params=None,
    ):
        object.__setattr__(self, "family", str(family))
        object.__setattr__(self, "_entry_fn", entry_fn)
        object.__setattr__(self, "_block_fn", block_fn)
        object.__setattr__(self, "dense_radius", dense_radius)
        object.__setattr__(self, "psd_global", bool(psd_global))
        object.__setattr__(self, "diag_sup", diag_sup)
        object.__setattr__(self, "row_bound", row_bound)
        object.__setattr__(self, "factor_bounds", factor_bounds)
        object.__setattr__(self, "params", dict(params or {}))

    def __setattr__(self, name, value):
        raise AttributeError("StructureMatrix is immutable")

    def entry(self, n, m):
        n, m = int(n), int(m)
        if self.dense_radius is not None and (abs(n) > self.dense_radius or abs(m) > self.dense_radius):
            raise RadiusExceeded(
                f"dense family declared radius {self.dense_radius}, queried ({n}, {m})"
            )
        return complex(self._entry_fn(n, m))

    def __repr__(self):
        return f"StructureMatrix(family={self.family!r})"


def realize(c, radius):
    """Truncate a structure matrix to the window [-radius, radius]."""
    radius = int(radius)
    if c.dense_radius is not None and radius > c.dense_radius:
        raise RadiusExceeded(
            f"dense family declared radius {c.dense_radius}, requested window {radius}"
        )
    return WindowMatrix(radius, c._block_fn(radius))


# ---------------------------------------------------------------------------
# family constructors


def ones():
    """All entries 1: the identity Schur multiplier."""
    return StructureMatrix(
        "ones",
        lambda n, m: 1.0 + 0j,
        lambda r: np.ones((2 * r + 1, 2 * r + 1), dtype=np.complex128),
        psd_global=True,
        diag_sup=1.0,
    )


def identity():
    """Kronecker delta entries."""
    return StructureMatrix(
        "identity",
        lambda n, m: 1.0 + 0j if n == m else 0j,
        lambda r: np.eye(2 * r + 1, dtype=np.complex128),
        psd_global=True,
        diag_sup=1.0,
        row_bound=1.0,
    )


def sign_counterexample():
    """Entries +1 below the diagonal, -1 above, 0 on it.

    Every entry is bounded by 1, yet the first-moment norm diverges
    along window sweeps, so no extensibility certificate exists.
    """

    def block(r):
        idx = np.arange(-r, r + 1)
        return np.sign(np.subtract.outer(idx, idx)).astype(np.complex128)

    return StructureMatrix(
        "sign_counterexample",
        lambda n, m: complex(float(np.sign(n - m))),
        block,
    )


def log_counterexample():
    """Single nonzero column: entry (n, 0) = i*ln(n) for n >= 1.

    The entry supremum grows like ln(window radius) while the
    first-moment norm stays bounded (partial norms of the ln(n)/n
    sequence).
    """

    def entry(n, m):
        if m == 0 and n >= 1:
            return 1j * float(np.log(float(n)))
        return 0j

    def block(r):
        side = 2 * r + 1
        data = np.zeros((side, side), dtype=np.complex128)
        if r >= 1:
            rows = np.arange(1, r + 1)
            data[rows + r, r] = 1j * np.log(rows.astype(np.float64))
        return data

    return StructureMatrix("log_counterexample", entry, block)


def _vector_table(vectors, default=None):
    """Normalize a sequence or mapping of per-index values to a dict."""
    if hasattr(vectors, "items"):
        return {int(k): v for k, v in vectors.items()}
    seq = list(vectors)
    if len(seq) % 2 == 0:
        raise ValueError("a sequence table must have odd length 2K+1, centered at index 0")
    k = len(seq) // 2
    return {i - k: v for i, v in enumerate(seq)}


def gram(vectors, default_vector=None):
    """Inner-product matrix of a table of finite vectors.

    Entry (n, m) is <psi_n | psi_m> evaluated exactly from the stored
    coefficients; indices outside the table use ``default_vector``
    (the basis vector at 0 when omitted).  Positive semidefinite at
    every window by construction.
    """
    table = _vector_table(vectors)
    default = default_vector if default_vector is not None else FiniteVector.basis(0)
    norms = [v.vdot(v).real for v in table.values()] + [default.vdot(default).real]

    def vec(n):
        return table.get(n, default)

    def entry(n, m):
        return vec(n).vdot(vec(m))

    def block(r):
        vs = [vec(n) for n in range(-r, r + 1)]
        side = 2 * r + 1
        data = np.empty((side, side), dtype=np.complex128)
        for i in range(side):
            for j in range(side):
                data[i, j] = vs[i].vdot(vs[j])
        return data

    sup = float(max(norms))
    return StructureMatrix(
        "gram",
        entry,
        block,
        psd_global=True,
        diag_sup=sup,
        factor_bounds=(np.sqrt(sup), np.sqrt(sup)),
        params={"table": table, "default": default},
    )


def rank_one(v, u):
    """Structure matrix (n, m) -> v(n) * conj(u(m)) of two generalized vectors.

    Carries the pair for later diagnostics; when both vectors are
    Hinf-tagged with declared bounds the product of those bounds is a
    declared factorization bound.
    """
    def entry(n, m):
        return v(n) * u(m).conjugate()

    def block(r):
        return np.outer(v.window(r), u.window(r).conj())

    factor = None
    if v.tag == "Hinf" and u.tag == "Hinf" and v.bound is not None and u.bound is not None:
        factor = (v.bound, u.bound)
    return StructureMatrix(
        "rank_one", entry, block, factor_bounds=factor, params={"v": v, "u": u}
    )


def phase_matrix(phases):
    """Unit-modulus matrix exp(i (v_n - v_m)) from a phase table.

    Indices beyond the table use phase 0.  Rank one, positive
    semidefinite, unit diagonal.
    """
    table = {k: float(x) for k, x in _vector_table(phases).items()}

    def phase(n):
        return table.get(n, 0.0)

    def entry(n, m):
        return complex(np.exp(1j * (phase(n) - phase(m))))

    def block(r):
        ph = np.array([phase(n) for n in range(-r, r + 1)], dtype=np.float64)
        return np.exp(1j * (ph[:, None] - ph[None, :]))

    return StructureMatrix(
        "phase", entry, block, psd_global=True, diag_sup=1.0, params={"phases": table}
    )


def dense(payload, radius=None):
    """Dense family backed by an explicit window payload.

    Index queries and realizations beyond the declared radius raise
    :class:`RadiusExceeded` rather than zero-padding: silent padding
    would fake boundedness in window sweeps.
    """
    if isinstance(payload, WindowMatrix):
        wm = payload
        if radius is not None and int(radius) != wm.radius:
            raise ValueError("declared radius disagrees with the payload window")
    else:
        arr = np.asarray(payload, dtype=np.complex128)
        if radius is None:
            if arr.shape[0] % 2 == 0:
                raise ValueError("cannot infer a radius from an even-sided payload")
            radius = arr.shape[0] // 2
        wm = WindowMatrix(int(radius), arr)
    r0 = wm.radius

    def entry(n, m):
        return wm.data[n + r0, m + r0]

    def block(r):
        lo, hi = r0 - r, r0 + r + 1
        return wm.data[lo:hi, lo:hi]

    return StructureMatrix("dense", entry, block, dense_radius=r0, params={"window": wm})


_BUILTIN_ALIASES = {
    "ones": "ones",
    "1": "ones",
    "identity": "identity",
    "sign": "sign_counterexample",
    "sign_counterexample": "sign_counterexample",
    "log": "log_counterexample",
    "log_counterexample": "log_counterexample",
    "dense": "dense",
}


def builtin(name, params=None):
    """Construct a named builtin family; ``dense`` requires a payload."""
    params = dict(params or {})
    key = _BUILTIN_ALIASES.get(str(name).lower())
    if key == "ones":
        return ones()
    if key == "identity":
        return identity()
    if key == "sign_counterexample":
        return sign_counterexample()
    if key == "log_counterexample":
        return log_counterexample()
    if key == "dense":
        return dense(params["payload"], params.get("radius"))
    raise UnknownFamily(f"unknown structure-matrix family {name!r}")


def parse_family_spec(text):
    """Parse the family mini-language used by the CLI and config files.

    Examples: ``family=ones``, ``sign``, ``gram vectors=table.csv``,
    ``rank_one v=a.csv u=b.csv``, ``phase phases=p.csv``,
    ``dense matrix=m.csv radius=8``.  The leading ``family=`` is
    optional.  Vector-valued parameters name CSV files; the gram
    vectors file uses the matrix CSV format with row n holding the
    coefficients of the n-th vector.
    """
    tokens = str(text).split()
    if not tokens:
        raise UnknownFamily("empty family spec")
    head = tokens[0]
    if head.startswith("family="):
        head = head[len("family="):]
    opts = {}
    for tok in tokens[1:]:
        key, sep, value = tok.partition("=")
        if not sep:
            raise ValueError(f"malformed family option {tok!r} (expected key=value)")
        opts[key] = value

    name = _BUILTIN_ALIASES.get(head.lower(), head.lower())
    if name in ("ones", "identity", "sign_counterexample", "log_counterexample"):
        return builtin(name)
    if name == "gram":
        radius, table_data = _io.read_matrix_csv(opts["vectors"])
        table = {}
        for n in range(-radius, radius + 1):
            row = table_data[n + radius]
            table[n] = FiniteVector({m - radius: row[m] for m in range(2 * radius + 1)})
        return gram(table)
    if name == "rank_one":
        v = GeneralizedVector.from_finite(_io.read_vector_csv(opts["v"]), tag="Hinf")
        u = GeneralizedVector.from_finite(_io.read_vector_csv(opts["u"]), tag="Hinf")
        return rank_one(v, u)
    if name == "phase":
        vec = _io.read_vector_csv(opts["phases"])
        return phase_matrix({n: c.real for n, c in vec.items()})
    if name == "dense":
        radius, data = _io.read_matrix_csv(opts["matrix"])
        declared = int(opts.get("radius", radius))
        if declared != radius:
            # honor the declared radius: pad or reject rather than guess
            if declared < radius:
                raise ValueError("declared radius smaller than the stored payload")
            side = 2 * declared + 1
            padded = np.zeros((side, side), dtype=np.complex128)
            off = declared - radius
            padded[off:off + 2 * radius + 1, off:off + 2 * radius + 1] = data
            data = padded
        return dense(data, declared)
    raise UnknownFamily(f"unknown structure-matrix family {head!r}")

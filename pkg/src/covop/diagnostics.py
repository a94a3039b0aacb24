"""Norms of Schur multipliers, extensibility verdicts, and window sweeps.

Four norms are reported for a structure matrix on a window: the entry
supremum, the Schur-multiplier norm as a (lower, upper) bracket, the
observable norm as a grid-search lower bound with a witness set, and
the first-moment norm.  Extensibility verdicts combine family-level
certificates (global guarantees carried by the family metadata) with
divergence evidence from window sweeps; window data alone never
certifies, because interval-algebra boundedness does not imply
extensibility.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from . import borel
from .borel import FULL, BorelSet, interval_matrix, normalize
from .core import WindowMatrix, is_psd, operator_norm, pq_norm, schur_product
from .errors import NotObservableMatrix, UnknownQuantity
from .gom import gom_matrix
from .moments import moment_matrix
from .structure import realize

TWO_PI = 2.0 * math.pi

DIVERGENCE_SLOPE = 0.1  # least-squares slope vs ln(2N+1) above which a sweep is divergent


@dataclass(frozen=True)
class SweepResult:
    quantity: str
    points: tuple  # of (N, value)
    slope: float
    classification: str  # "bounded" | "divergent"


@dataclass(frozen=True)
class NormReport:
    norm_1inf: float
    multiplier_lower: float
    multiplier_upper: float
    observable_lower: float
    observable_witness: BorelSet
    first_moment: float


@dataclass(frozen=True)
class ExtensibilityReport:
    family: str
    verdict: str  # EXTENSIBLE_CERTIFIED | NOT_EXTENSIBLE_EVIDENCE | UNKNOWN
    certificates: tuple  # of (criterion id, window data dict, value)
    sweep: tuple  # of (N, theta1, S, two_inf)
    growth: dict = field(default_factory=dict)  # quantity -> (slope, classification)


def sup_entry(c, radius):
    """Largest entry modulus on the window; equals the (1, inf) norm."""
    return pq_norm(realize(c, radius), 1, "inf")


def first_moment_norm(c, radius):
    """Operator norm of the first polynomial moment on the window."""
    return operator_norm(moment_matrix(c, 1, radius))


def _random_sign_matrix(rng, side):
    return rng.choice((-1.0, 1.0), size=(side, side)).astype(np.complex128)


def random_arc_union(rng, max_arcs=4):
    """Seeded random union of up to max_arcs arcs (may merge when overlapping)."""
    n_arcs = int(rng.integers(1, max_arcs + 1))
    pairs = []
    for _ in range(n_arcs):
        a = float(rng.uniform(0.0, TWO_PI))
        length = float(rng.uniform(1e-3, TWO_PI - 1e-3))
        pairs.append((a, a + length))
    return normalize(pairs)


def multiplier_bounds(c, radius, seed=0):
    """Bracket (lower, upper) of the Schur-multiplier norm on the window.

    The lower bound maximizes the product-to-input norm ratio over a
    fixed adversary set: the identity, the all-ones window, the window
    itself, 32 seeded random sign matrices, and 32 sampled indicator
    Toeplitz matrices.  The upper bound is the smaller of the largest
    row and column 2-norms, refined to the largest diagonal entry when
    the window is positive semidefinite (its Gram columns then realize
    a factorization through vectors of those norms).  The bracket is
    exact when the two sides meet.
    """
    radius = int(radius)
    win = realize(c, radius)
    side = 2 * radius + 1
    rng = np.random.default_rng(seed)

    adversaries = [
        WindowMatrix.identity(radius),
        WindowMatrix(radius, np.ones((side, side), dtype=np.complex128)),
        win,
    ]
    for _ in range(32):
        adversaries.append(WindowMatrix(radius, _random_sign_matrix(rng, side)))
    for _ in range(32):
        adversaries.append(interval_matrix(random_arc_union(rng), radius))

    lower = 0.0
    for a in adversaries:
        denom = operator_norm(a)
        if denom == 0.0:
            continue
        lower = max(lower, operator_norm(schur_product(win, a)) / denom)

    arr = win.data
    row = float(np.max(np.sqrt(np.sum(np.abs(arr) ** 2, axis=1))))
    col = float(np.max(np.sqrt(np.sum(np.abs(arr) ** 2, axis=0))))
    upper = min(row, col)
    if is_psd(win):
        upper = min(upper, float(np.max(np.diag(arr).real)))
    return lower, upper


def observable_norm_estimate(c, radius, grid_size=256, seed=0, n_unions=64):
    """Lower bound of the observable norm with its witness set.

    Maximizes the measure norm over the full circle, single arcs with
    endpoints on a uniform grid, and seeded random unions of up to four
    arcs.  Single-arc candidates are scanned by arc length only: a
    translated arc gives a unitarily conjugated measure matrix (the
    translation enters entrywise as a pure phase), so the norm depends
    on the length alone and the witness is normalized to start at 0.
    This is an estimate from below of the supremum over all Borel sets,
    not a certificate.
    """
    radius = int(radius)
    if grid_size < 8:
        raise ValueError("grid size must be at least 8")
    win = realize(c, radius)

    def value(x):
        return operator_norm(schur_product(win, interval_matrix(x, radius)))

    best_x = FULL
    best = value(best_x)
    step = TWO_PI / int(grid_size)
    for k in range(1, int(grid_size)):
        x = normalize([(0.0, k * step)])
        v = value(x)
        if v > best:
            best, best_x = v, x
    rng = np.random.default_rng(seed)
    for _ in range(int(n_unions)):
        x = random_arc_union(rng)
        v = value(x)
        if v > best:
            best, best_x = v, x
    return best, best_x


def _check_observable(win, what):
    if not is_psd(win):
        raise NotObservableMatrix(f"{what} is not positive semidefinite on the window")
    if float(np.max(np.abs(np.diag(win.data) - 1.0))) > 1e-9:
        raise NotObservableMatrix(f"{what} does not have a unit diagonal on the window")


def alpha(c, radius):
    """Order map on observables: the first-moment norm.

    Requires a positive semidefinite window with unit diagonal; on
    windows the value lies between pi and 2*pi up to tolerance.
    """
    _check_observable(realize(c, radius), "structure matrix")
    return first_moment_norm(c, radius)


def order_check(c, d, e, radius):
    """Check the order relation: alpha of c = d * e never exceeds alpha of d.

    Requires c to equal the entrywise product of d and e on the window
    and e to be an observable matrix there.
    """
    radius = int(radius)
    win_c = realize(c, radius)
    win_d = realize(d, radius)
    win_e = realize(e, radius)
    _check_observable(win_e, "third factor")
    prod = win_d.data * win_e.data
    scale = max(1.0, float(np.max(np.abs(prod))))
    if float(np.max(np.abs(win_c.data - prod))) > 1e-12 * scale:
        raise NotObservableMatrix("first matrix is not the entrywise product of the others")
    return alpha(c, radius) <= alpha(d, radius) + 1e-9


_QUANTITIES = ("S", "two_inf", "theta1", "obs_lower")


def _quantity_fn(quantity_id, seed=0):
    qid = str(quantity_id)
    if qid == "S":
        return sup_entry
    if qid == "two_inf":
        return lambda c, n: pq_norm(realize(c, n), 2, "inf")
    if qid == "theta1":
        return first_moment_norm
    if qid == "obs_lower":
        return lambda c, n: observable_norm_estimate(c, n, seed=seed)[0]
    if qid.startswith("vk_max(") and qid.endswith(")"):
        k = int(qid[len("vk_max("):-1])

        def vk_max(c, n):
            arr = realize(c, n).data
            diag = np.diagonal(arr, offset=k)
            return float(np.max(np.abs(diag))) if diag.size else 0.0

        return vk_max
    raise UnknownQuantity(
        f"unknown sweep quantity {quantity_id!r}; expected one of "
        f"{_QUANTITIES} or vk_max(<k>)"
    )


def growth_fit(points):
    """Least-squares slope of value against ln(2N+1) and its classification."""
    ns = np.array([n for n, _ in points], dtype=np.float64)
    vals = np.array([v for _, v in points], dtype=np.float64)
    if len(points) < 2:
        return 0.0, "bounded"
    slope = float(np.polyfit(np.log(2 * ns + 1), vals, 1)[0])
    return slope, ("divergent" if slope > DIVERGENCE_SLOPE else "bounded")


def sweep(c, quantity_id, n_list, seed=0):
    """Evaluate a named quantity across windows and classify its growth."""
    fn = _quantity_fn(quantity_id, seed=seed)
    points = tuple((int(n), float(fn(c, int(n)))) for n in n_list)
    slope, varies = growth_fit(points)
    return SweepResult(str(quantity_id), points, slope, varies)


def extensibility_report(c, n_list, seed=0):
    """Assemble certificates, sweep data, and a verdict for a structure matrix.

    Sufficient criteria, tried in order: (i) globally PSD family with a
    declared diagonal supremum, confirmed PSD with that diagonal bound
    on every sweep window; (ii) a family-declared factorization through
    bounded vector sequences; (iii) a declared global row-norm bound
    with a stable (2, inf) sweep.  Necessary-condition evidence: a
    divergent sweep of the entry supremum or of the first-moment norm.
    Anything else is UNKNOWN.
    """
    n_list = [int(n) for n in n_list]
    if not n_list or any(b <= a for a, b in zip(n_list, n_list[1:])):
        raise ValueError("window list must be nonempty and strictly increasing")

    s_sweep = sweep(c, "S", n_list, seed=seed)
    theta_sweep = sweep(c, "theta1", n_list, seed=seed)
    two_inf_sweep = sweep(c, "two_inf", n_list, seed=seed)
    rows = tuple(
        (n, theta_sweep.points[i][1], s_sweep.points[i][1], two_inf_sweep.points[i][1])
        for i, n in enumerate(n_list)
    )
    growth = {
        "theta1": (theta_sweep.slope, theta_sweep.classification),
        "S": (s_sweep.slope, s_sweep.classification),
        "two_inf": (two_inf_sweep.slope, two_inf_sweep.classification),
    }

    certificates = []
    if c.psd_global and c.diag_sup is not None and math.isfinite(c.diag_sup):
        windows_ok = all(
            is_psd(realize(c, n))
            and float(np.max(np.diag(realize(c, n).data).real)) <= c.diag_sup + 1e-10
            for n in n_list
        )
        if windows_ok:
            certificates.append(
                ("psd_bounded_diagonal", {"windows": tuple(n_list)}, float(c.diag_sup))
            )
    if not certificates and c.factor_bounds is not None:
        bv, bu = c.factor_bounds
        certificates.append(
            ("declared_factorization", {"bounds": (float(bv), float(bu))}, float(bv * bu))
        )
    if not certificates and c.row_bound is not None and math.isfinite(c.row_bound):
        if two_inf_sweep.classification == "bounded":
            certificates.append(
                (
                    "row_norm_bound",
                    {"windows": tuple(n_list), "sweep": two_inf_sweep.points},
                    float(c.row_bound),
                )
            )

    if certificates:
        verdict = "EXTENSIBLE_CERTIFIED"
    elif s_sweep.classification == "divergent" or theta_sweep.classification == "divergent":
        verdict = "NOT_EXTENSIBLE_EVIDENCE"
    else:
        verdict = "UNKNOWN"
    return ExtensibilityReport(c.family, verdict, tuple(certificates), rows, growth)


def norm_report(c, radius, grid_size=256, seed=0):
    """All four norms of a structure matrix on one window."""
    lower, upper = multiplier_bounds(c, radius, seed=seed)
    obs, witness = observable_norm_estimate(c, radius, grid_size=grid_size, seed=seed)
    return NormReport(
        norm_1inf=sup_entry(c, radius),
        multiplier_lower=lower,
        multiplier_upper=upper,
        observable_lower=obs,
        observable_witness=witness,
        first_moment=first_moment_norm(c, radius),
    )


def render_report_text(report):
    """Deterministic plain-text rendering of an extensibility report."""
    lines = [f"family: {report.family}", f"verdict: {report.verdict}", "certificates:"]
    if report.certificates:
        for cid, data, value in report.certificates:
            detail = ",".join(f"{k}={v}" for k, v in sorted(data.items()))
            lines.append(f"  {cid} value={value:.17g} {detail}")
    else:
        lines.append("  (none)")
    lines.append("sweep:")
    lines.append("  N,theta1,S,two_inf")
    for n, theta1, s, two_inf in report.sweep:
        lines.append(f"  {n},{theta1:.17g},{s:.17g},{two_inf:.17g}")
    lines.append("growth:")
    for q in ("theta1", "S", "two_inf"):
        slope, cls = report.growth[q]
        lines.append(f"  {q}: slope={slope:.17g} classification={cls}")
    return "\n".join(lines) + "\n"


def render_report_csv(report):
    """CSV rendering: quantity,N,value rows with a fit trailer per quantity."""
    lines = ["quantity,N,value"]
    by_quantity = {
        "theta1": [(n, t) for n, t, _, _ in report.sweep],
        "S": [(n, s) for n, _, s, _ in report.sweep],
        "two_inf": [(n, t) for n, _, _, t in report.sweep],
    }
    for q in ("theta1", "S", "two_inf"):
        for n, v in by_quantity[q]:
            lines.append(f"{q},{n},{v:.17g}")
        slope, cls = report.growth[q]
        lines.append(f"fit,{slope:.17g},{cls}")
    return "\n".join(lines) + "\n"

"""CSV formats and string syntaxes shared by the CLI and config files.

Matrix CSV: header ``n,m,re,im``, one row per stored entry, signed
integer indices, 17 significant digits (lossless double round-trip).
Vector CSV: header ``n,re,im``.  Density CSV: header ``theta,re,im``.
Arc-set strings: comma-separated ``a:b`` in radians plus the keywords
``full`` and ``empty``.
"""

import csv
import io as _io
import math

import numpy as np

from .borel import EMPTY, FULL, BorelSet, normalize
from .core import FiniteVector, WindowMatrix


def _fmt(x):
    return f"{x:.17g}"


def format_matrix_csv(wm):
    """Render a window matrix in the shared matrix CSV format."""
    buf = _io.StringIO()
    buf.write("n,m,re,im\n")
    r = wm.radius
    data = wm.data
    for i in range(2 * r + 1):
        for j in range(2 * r + 1):
            v = data[i, j]
            buf.write(f"{i - r},{j - r},{_fmt(v.real)},{_fmt(v.imag)}\n")
    return buf.getvalue()


def parse_matrix_csv(text):
    """Parse matrix CSV into (radius, dense complex array).

    The radius is the largest absolute index present; missing entries
    default to zero.
    """
    rows = []
    reader = csv.reader(_io.StringIO(text))
    header = next(reader, None)
    if header is None or [h.strip() for h in header[:4]] != ["n", "m", "re", "im"]:
        raise ValueError("matrix CSV must start with header n,m,re,im")
    radius = 0
    for row in reader:
        if not row:
            continue
        n, m = int(row[0]), int(row[1])
        rows.append((n, m, float(row[2]), float(row[3])))
        radius = max(radius, abs(n), abs(m))
    side = 2 * radius + 1
    data = np.zeros((side, side), dtype=np.complex128)
    for n, m, re, im in rows:
        data[n + radius, m + radius] = complex(re, im)
    return radius, data


def read_matrix_csv(path):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_matrix_csv(fh.read())


def write_matrix_csv(path, wm):
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(format_matrix_csv(wm))


def format_vector_csv(vec):
    buf = _io.StringIO()
    buf.write("n,re,im\n")
    for n, c in vec.items():
        buf.write(f"{n},{_fmt(c.real)},{_fmt(c.imag)}\n")
    return buf.getvalue()


def parse_vector_csv(text):
    reader = csv.reader(_io.StringIO(text))
    header = next(reader, None)
    if header is None or [h.strip() for h in header[:3]] != ["n", "re", "im"]:
        raise ValueError("vector CSV must start with header n,re,im")
    coeffs = {}
    for row in reader:
        if not row:
            continue
        coeffs[int(row[0])] = complex(float(row[1]), float(row[2]))
    return FiniteVector(coeffs)


def read_vector_csv(path):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_vector_csv(fh.read())


def write_vector_csv(path, vec):
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(format_vector_csv(vec))


def format_density_csv(values_by_theta):
    """Render (theta, complex value) samples as density CSV."""
    buf = _io.StringIO()
    buf.write("theta,re,im\n")
    for theta, v in values_by_theta:
        buf.write(f"{_fmt(theta)},{_fmt(v.real)},{_fmt(v.imag)}\n")
    return buf.getvalue()


def format_sweep_csv(rows):
    """Render (M, entry deviation, L1 error) rows as sweep CSV."""
    buf = _io.StringIO()
    buf.write("M,entry_dev,l1_err\n")
    for m, dev, l1 in rows:
        buf.write(f"{m},{_fmt(dev)},{_fmt(l1)}\n")
    return buf.getvalue()


def parse_arcs(text):
    """Parse the arc-set string syntax into a :class:`BorelSet`.

    ``full`` and ``empty`` are keywords; otherwise the syntax is
    comma-separated ``a:b`` pairs in radians, wrap-around allowed.
    """
    text = text.strip()
    if text.lower() == "full":
        return FULL
    if text.lower() == "empty":
        return EMPTY
    pairs = []
    for token in text.split(","):
        token = token.strip()
        if not token:
            continue
        a, _, b = token.partition(":")
        if not _:
            raise ValueError(f"arc token {token!r} is not of the form a:b")
        pairs.append((float(a), float(b)))
    if not pairs:
        return EMPTY
    return normalize(pairs)


def format_arcs(x):
    """Render a Borel set back into the arc-set string syntax."""
    if x.is_empty:
        return "empty"
    if x.is_full:
        return "full"
    return ",".join(f"{_fmt(a)}:{_fmt(b)}" for a, b in x.arcs)

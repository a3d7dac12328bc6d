"""CSV comparison tables: numeric left side, closed-form right side, error."""

import math

import numpy as np

from .kmap import eq7_lhs, k_exponent
from .measures import build_m
from .pick import pick_eval, tan_reciprocal_oracle
from .series import TruncationSpec

HEADERS = {
    "eq5": ("t", "lhs_re", "lhs_im", "rhs_re", "rhs_im", "abs_err"),
    "corollary": ("z_re", "z_im", "lhs_re", "lhs_im", "rhs_re", "rhs_im", "abs_err"),
    "exponent": ("t", "k_exponent", "closed_form", "abs_err"),
    "eq7": ("w", "lhs", "rhs", "abs_err"),
}


def fmt(x):
    """17 significant digits; integers stay integers."""
    if isinstance(x, (int, np.integer)) and not isinstance(x, bool):
        return str(int(x))
    return format(float(x), ".17g")


def grid(lo, hi, steps):
    if steps < 1:
        raise ValueError("steps must be >= 1")
    if steps == 1:
        return np.array([float(lo)])
    return np.linspace(float(lo), float(hi), int(steps))


def eq5_rows(t_min=0.25, t_max=4.0, steps=16, terms=100_000):
    ts = grid(t_min, t_max, steps)
    if np.any(ts == 0):
        raise ValueError("the t grid must avoid 0")
    m = build_m(TruncationSpec(terms))
    lhs = pick_eval(m, 1j * ts)
    rhs = -1j * np.tanh(1.0 / ts)
    return [(t, a.real, a.imag, b.real, b.imag, abs(a - b)) for t, a, b in zip(ts, lhs, rhs)]


def corollary_rows(re_min=-2.0, re_max=2.0, im_min=0.25, im_max=2.0, steps=8, terms=100_000):
    zs = np.array([complex(x, y) for x in grid(re_min, re_max, steps) for y in grid(im_min, im_max, steps)])
    m = build_m(TruncationSpec(terms))
    lhs = pick_eval(m, zs)
    rhs = tan_reciprocal_oracle(zs)
    return [(z.real, z.imag, a.real, a.imag, b.real, b.imag, abs(a - b)) for z, a, b in zip(zs, lhs, rhs)]


def exponent_rows(t_min=0.25, t_max=4.0, steps=16, terms=100_000):
    trunc = TruncationSpec(terms)
    rows = []
    for t in grid(t_min, t_max, steps):
        k = k_exponent(t, trunc)
        closed = -t * math.tanh(t)
        rows.append((t, k, closed, abs(k - closed)))
    return rows


def eq7_rows(w_min=1.25, w_max=5.0, steps=16, terms=10_000):
    trunc = TruncationSpec(terms)
    rows = []
    for w in grid(w_min, w_max, steps):
        lhs = eq7_lhs(w, trunc)
        rhs = -math.tanh(1.0 / w)
        rows.append((w, lhs, rhs, abs(lhs - rhs)))
    return rows


BUILDERS = {
    "eq5": eq5_rows,
    "corollary": corollary_rows,
    "exponent": exponent_rows,
    "eq7": eq7_rows,
}


def to_csv(header, rows):
    lines = [",".join(header)]
    lines += [",".join(fmt(v) for v in row) for row in rows]
    return "\n".join(lines) + "\n"


def run_table(table_id, **options):
    """CSV text for one table; options are the builder's grid keywords."""
    if table_id not in BUILDERS:
        raise ValueError(f"unknown table {table_id!r}")
    return to_csv(HEADERS[table_id], BUILDERS[table_id](**options))

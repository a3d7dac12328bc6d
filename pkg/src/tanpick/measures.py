"""Discrete measures: the finite measure m, the Levy measure M, and generic
atomic measures with their validity checks.

A measure keeps its atoms as two sorted numpy arrays. Measures built from
the c_k family also remember the family, so functionals can add the
Euler-Maclaurin estimate of the atoms that were not materialised.
"""

from dataclasses import dataclass, field
import csv
import io
import json
import math
from typing import Callable, NamedTuple, Optional

import numpy as np

from .series import TruncationSpec, odd_family_tail, odd_half_pi


class Atom(NamedTuple):
    location: float
    mass: float


def atom_location(k):
    """c_k = ((2k - 1) pi / 2)^-1 for k >= 1 and c_{-k} = -c_k."""
    if int(k) != k or k == 0:
        raise ValueError(f"atom index must be a nonzero integer, got {k!r}")
    k = int(k)
    c = 1.0 / float(odd_half_pi(abs(k)))
    return c if k > 0 else -c


@dataclass(frozen=True)
class AtomFamily:
    """Symmetric atoms at +-c_k, k >= 1, with mass ``mass_at(c)`` each."""

    name: str
    mass_at: Callable[[np.ndarray], np.ndarray]

    def tail(self, n, integrand):
        """Estimate sum_{k>n} mass(c_k) * (h(c_k) + h(-c_k)).

        ``integrand`` is h, vectorised over a leading axis of locations.
        """

        def pair_term(c):
            c = np.asarray(c, dtype=float)
            w = self.mass_at(c)
            return _bcast(w, integrand(c)) + _bcast(w, integrand(-c))

        return odd_family_tail(pair_term, n)


def _bcast(w, vals):
    w = np.asarray(w)
    vals = np.asarray(vals)
    return w.reshape(w.shape + (1,) * (vals.ndim - w.ndim)) * vals


def _m_mass(c):
    c2 = np.asarray(c, dtype=float) ** 2
    return c2 / (1.0 + c2)


def _unit_mass(c):
    return np.ones_like(np.asarray(c, dtype=float))


M_FAMILY = AtomFamily("m", _m_mass)
LEVY_FAMILY = AtomFamily("M", _unit_mass)


@dataclass(frozen=True, eq=False)
class DiscreteMeasure:
    """Finitely many atoms, sorted by location.

    ``truncation`` and ``family`` are set for the c_k measures; together they
    say which atoms are missing and how to estimate their contribution.
    """

    locations: np.ndarray
    masses: np.ndarray
    truncation: Optional[TruncationSpec] = None
    symmetric: bool = False
    family: Optional[AtomFamily] = field(default=None, repr=False)

    def __post_init__(self):
        loc = np.asarray(self.locations, dtype=float).ravel()
        mass = np.asarray(self.masses, dtype=float).ravel()
        if loc.shape != mass.shape:
            raise ValueError("locations and masses differ in length")
        if not np.all(np.isfinite(loc)):
            raise ValueError("atom locations must be finite")
        if np.any(mass <= 0) or not np.all(np.isfinite(mass)):
            raise ValueError("atom masses must be positive and finite")
        order = np.argsort(loc, kind="stable")
        loc, mass = loc[order], mass[order]
        if loc.size > 1 and np.any(np.diff(loc) == 0):
            raise ValueError("atom locations must be pairwise distinct")
        loc.flags.writeable = False
        mass.flags.writeable = False
        object.__setattr__(self, "locations", loc)
        object.__setattr__(self, "masses", mass)
        if self.symmetric and not self.is_symmetric():
            raise ValueError("measure flagged symmetric but atoms are not mirrored")

    @classmethod
    def from_atoms(cls, atoms, symmetric=False):
        atoms = list(atoms)
        loc = [a[0] for a in atoms]
        mass = [a[1] for a in atoms]
        return cls(np.array(loc, dtype=float), np.array(mass, dtype=float), symmetric=symmetric)

    @property
    def atoms(self):
        return [Atom(float(x), float(w)) for x, w in zip(self.locations, self.masses)]

    def __len__(self):
        return self.locations.size

    @property
    def corrected(self):
        return (
            self.family is not None
            and self.truncation is not None
            and self.truncation.tail_correction
        )

    def is_symmetric(self):
        loc, mass = self.locations, self.masses
        return bool(np.array_equal(loc, -loc[::-1]) and np.array_equal(mass, mass[::-1]))

    def positive_half(self):
        """Atoms with location > 0; for symmetric measures the mirror is implied."""
        keep = self.locations > 0
        return self.locations[keep], self.masses[keep]

    def integrate(self, h):
        """sum over atoms of mass * h(location), plus the family tail if enabled.

        ``h`` maps an array of locations to values (extra trailing axes allowed).
        """
        vals = np.asarray(h(self.locations))
        total = np.tensordot(self.masses, vals, axes=(0, 0))
        if self.corrected:
            total = total + self.family.tail(self.truncation.num_terms, h)
        return total

    def tail_estimate(self, h):
        if not self.corrected:
            return 0.0
        return self.family.tail(self.truncation.num_terms, h)

    def total_mass(self):
        return float(self.integrate(np.ones_like))

    def raw_total_mass(self):
        return math.fsum(self.masses)

    def to_csv(self):
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["location", "mass"])
        for x, m in zip(self.locations, self.masses):
            w.writerow([format(x, ".17g"), format(m, ".17g")])
        return buf.getvalue()

    def to_json(self):
        rows = [{"location": float(x), "mass": float(m)} for x, m in zip(self.locations, self.masses)]
        return json.dumps(rows) + "\n"

    @classmethod
    def from_json(cls, text, symmetric=False):
        rows = json.loads(text)
        return cls.from_atoms(((r["location"], r["mass"]) for r in rows), symmetric=symmetric)


@dataclass(frozen=True)
class LevyTriple:
    """Shift, Gaussian variance and Levy measure of an infinitely divisible law."""

    shift_a: float
    gaussian_var: float
    levy_measure: DiscreteMeasure

    def __post_init__(self):
        if self.gaussian_var < 0:
            raise ValueError("gaussian_var must be nonnegative")
        if np.any(self.levy_measure.locations == 0):
            raise ValueError("a Levy measure cannot charge the origin")


def _family_locations(trunc):
    c = 1.0 / odd_half_pi(np.arange(trunc.num_terms, 0, -1))
    return np.concatenate([-c[::-1], c])


def build_m(trunc=TruncationSpec()):
    """The finite measure m: mass c_k^2 / (1 + c_k^2) at each c_k, k = +-1..+-N."""
    loc = _family_locations(trunc)
    return DiscreteMeasure(loc, _m_mass(loc), trunc, symmetric=True, family=M_FAMILY)


def build_M(trunc=TruncationSpec()):
    """The Levy measure M = (1 + x^2)/x^2 m: a unit atom at every c_k."""
    loc = _family_locations(trunc)
    return DiscreteMeasure(loc, np.ones_like(loc), trunc, symmetric=True, family=LEVY_FAMILY)


def empty_measure():
    return DiscreteMeasure(np.empty(0), np.empty(0), symmetric=True)


def _min_one_sq(x):
    return np.minimum(1.0, np.asarray(x, dtype=float) ** 2)


def levy_integrability_check(M):
    """sum over atoms of mass * min(1, x^2); tail-corrected for family measures."""
    if np.any(M.locations == 0):
        raise ValueError("Levy measure has an atom at 0")
    if len(M) == 0:
        return 0.0
    return float(M.integrate(_min_one_sq))

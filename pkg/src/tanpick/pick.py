"""The integral sum (1 + z x)/(z - x) m(dx) and its closed form tan(1/z).

Sign convention: with the kernel written as (1 + z x)/(z - x), every term
has Im <= 0 when Im z > 0, so the transform maps the upper half-plane into
the closed lower half-plane (a Voiculescu-type transform; its negative is a
Pick/Herglotz function). :func:`upper_half_plane_check` tests exactly that.
"""

import math

import numpy as np

from . import kernels
from .errors import PoleProximity, ZeroArgument

EXCLUSION_RADIUS = 1e-6
ORACLE_POLE_RADIUS = 1e-8
HERGLOTZ_SLACK = 1e-12


def _as_zgrid(z):
    arr = np.asarray(z, dtype=complex)
    return np.atleast_1d(arr).ravel(), arr.ndim == 0, arr.shape


def _check_atoms(m, zs):
    if np.any(zs == 0):
        raise ZeroArgument("z = 0 is excluded")
    loc = m.locations
    if loc.size:
        idx = np.searchsorted(loc, zs.real)
        lo = loc[np.clip(idx - 1, 0, loc.size - 1)]
        hi = loc[np.clip(idx, 0, loc.size - 1)]
        dist = np.minimum(np.abs(zs - lo), np.abs(zs - hi))
        if np.any(dist < EXCLUSION_RADIUS):
            bad = zs[np.argmin(dist)]
            raise PoleProximity(f"z = {bad} lies within {EXCLUSION_RADIUS} of an atom")
    if m.corrected:
        # unmaterialised atoms fill (-c_{N+1}, c_{N+1}) densely
        edge = 2.0 / (math.pi * (2 * m.truncation.num_terms + 1))
        near = (np.abs(zs.imag) < EXCLUSION_RADIUS) & (np.abs(zs.real) <= edge + EXCLUSION_RADIUS)
        if np.any(near):
            raise PoleProximity("z lies on the accumulation segment of the truncated atoms")


def pick_eval(m, z):
    """sum over atoms of mass * (1 + z x)/(z - x), tail-corrected for c_k families."""
    zs, scalar, shape = _as_zgrid(z)
    _check_atoms(m, zs)
    out = kernels.pick_sum(m.locations, m.masses, zs)
    if m.corrected:
        out = out + m.tail_estimate(lambda c: _kernel(np.asarray(c), zs))
    if scalar:
        return complex(out[0])
    return out.reshape(shape)


def _kernel(x, zs):
    x = x[..., None]
    return (1.0 + zs * x) / (zs - x)


def kernel_terms(m, z):
    """Individual summands mass * (1 + z x)/(z - x), one per atom."""
    z = complex(z)
    _check_atoms(m, np.array([z]))
    return m.masses * (1.0 + z * m.locations) / (z - m.locations)


def tan_reciprocal_oracle(z):
    """tan(1/z) from complex sine and cosine, independent of any measure."""
    zs, scalar, shape = _as_zgrid(z)
    if np.any(zs == 0):
        raise ZeroArgument("z = 0 is excluded")
    w = 1.0 / zs
    # poles of tan sit at (2k - 1) pi / 2
    k = np.round(w.real / math.pi + 0.5)
    pole = (k - 0.5) * math.pi
    if np.any(np.abs(w - pole) < ORACLE_POLE_RADIUS):
        raise PoleProximity("1/z is within 1e-8 of a pole of tan")
    out = np.empty_like(w)
    big = np.abs(w.imag) > 20.0
    small = ~big
    out[small] = np.sin(w[small]) / np.cos(w[small])
    # for |Im w| > 20, tan(w) = +-i to double precision
    out[big] = np.tan(w[big])
    if scalar:
        return complex(out[0])
    return out.reshape(shape)


def upper_half_plane_check(m, z):
    """True when Im z > 0 is mapped into the closed lower half-plane.

    Equivalently, z -> -pick_eval(m, z) is Herglotz at z. A slack of 1e-12
    absorbs rounding at points where the value is nearly real.
    """
    z = complex(z)
    if not z.imag > 0:
        raise ValueError("upper_half_plane_check needs Im z > 0")
    return bool(pick_eval(m, z).imag <= HERGLOTZ_SLACK)


def admissible_points(rng, count, r_min=0.2, r_max=5.0, min_im=0.2):
    """Pseudo-random test points with r_min <= |z| <= r_max and |Im z| >= min_im.

    The atoms all lie on the real segment [-2/pi, 2/pi], so |Im z| >= min_im
    keeps every point at least min_im away from them.
    """
    out = []
    while len(out) < count:
        u = rng.uniforms(2 * count)
        r = r_min + (r_max - r_min) * u[0::2]
        theta = 2.0 * math.pi * u[1::2]
        z = r * np.exp(1j * theta)
        out.extend(z[np.abs(z.imag) >= min_im].tolist())
    return np.array(out[:count], dtype=complex)

"""Verification reports: one row per checked identity instance.

Each identity family has a runner that evaluates both sides on its grid
and returns :class:`VerificationReport` rows. Default tolerances and grid
sizes live in :data:`DEFAULTS`, printed by ``tanpick verify --show-defaults``.
"""

from dataclasses import dataclass, field
import math

import numpy as np

from .errors import InvalidOverride, UnknownIdentity
from .kmap import QuadratureSpec, eq6_lhs, eq6_middle, eq7_lhs, k_exponent
from .levy import counterpart_triple, levy_exponent, mu_exponent_resolvent
from .measures import build_m
from .pick import HERGLOTZ_SLACK, admissible_points, pick_eval, tan_reciprocal_oracle
from .sampling import (
    RandomSource,
    ecf,
    empirical_pmf,
    sample_skellam_direct,
    sample_X,
    sample_Y,
    sample_Y_counts,
    skellam_pmf,
    skellam_pmf_table,
)
from .series import (
    TruncationSpec,
    bessel_I_quadrature,
    bessel_I_series,
)

DEFAULTS_VERSION = 1
DEFAULT_SEED = 20210215

DEFAULTS = {
    "mass": {"terms": 10_000, "tol": 1e-8},
    "pick": {"terms": 100_000, "tol": 1e-6, "corollary_tol": 1e-3, "points": 200},
    "eq6": {"terms": 100_000, "tol": 1e-5},
    "k-map": {"terms": 100_000, "tol": 1e-6, "nodes": 200},
    "eq7": {"terms": 10_000, "tol": 1e-4},
    "skellam": {"tol": 3e-3, "pmf_tol": 1e-12, "samples": 1_000_000, "max_cell": 8},
    "bessel": {"tol": 1e-10, "residual_tol": 1e-12, "max_k": 10, "K": 20},
    "counterpart": {"terms": 200, "samples": 1_000_000, "mean_tol": 4e-3, "var_tol": 1e-2},
}

IDENTITIES = ("mass", "pick", "eq6", "k-map", "eq7", "skellam", "bessel", "counterpart")

IMAG_AXIS_T = (-4.0, -2.0, -1.0, -0.5, -0.25, 0.25, 0.5, 1.0, 2.0, 4.0)
POSITIVE_T = (0.25, 0.5, 1.0, 2.0, 4.0)
EQ7_W = (1.25, 2.0, 5.0)


@dataclass
class VerificationReport:
    identity_id: str
    inputs: dict
    lhs: complex
    rhs: complex
    tolerance: float
    abs_err: float = field(init=False)
    rel_err: float = field(init=False)
    passed: bool = field(init=False)
    policy: str = "abs"

    def __post_init__(self):
        self.lhs = complex(self.lhs)
        self.rhs = complex(self.rhs)
        self.abs_err = abs(self.lhs - self.rhs)
        scale = abs(self.rhs)
        if scale > 0:
            self.rel_err = self.abs_err / scale
        else:
            self.rel_err = 0.0 if self.abs_err == 0 else math.inf
        if self.policy == "abs":
            self.passed = bool(self.abs_err <= self.tolerance)
        else:
            self.passed = bool(self.abs_err <= self.tolerance or self.rel_err <= self.tolerance)

    def as_dict(self):
        return {
            "identity_id": self.identity_id,
            "inputs": dict(self.inputs),
            "lhs": {"re": self.lhs.real, "im": self.lhs.imag},
            "rhs": {"re": self.rhs.real, "im": self.rhs.imag},
            "abs_err": self.abs_err,
            "rel_err": self.rel_err,
            "tolerance": self.tolerance,
            "pass": self.passed,
        }


def _settings(identity, overrides):
    cfg = dict(DEFAULTS[identity])
    terms = overrides.get("terms")
    if terms is not None:
        if int(terms) != terms or terms < 1:
            raise InvalidOverride(f"--terms must be a positive integer, got {terms!r}")
        if "terms" in cfg:
            cfg["terms"] = int(terms)
    tol = overrides.get("tol")
    if tol is not None:
        if not (isinstance(tol, (int, float)) and math.isfinite(tol) and tol > 0):
            raise InvalidOverride(f"--tol must be a positive number, got {tol!r}")
        for key in list(cfg):
            if key == "tol" or key.endswith("_tol"):
                cfg[key] = float(tol)
    seed = overrides.get("seed")
    if seed is not None and not 0 <= int(seed) < 2**64:
        raise InvalidOverride("--seed must be an unsigned 64-bit integer")
    cfg["seed"] = DEFAULT_SEED if seed is None else int(seed)
    samples = overrides.get("samples")
    if samples is not None:
        if int(samples) != samples or samples < 2:
            raise InvalidOverride("--samples must be an integer >= 2")
        if "samples" in cfg:
            cfg["samples"] = int(samples)
    return cfg


def verify_mass(cfg):
    m = build_m(TruncationSpec(cfg["terms"]))
    return [
        VerificationReport(
            "mass_total", {"terms": cfg["terms"]}, m.total_mass(), math.tanh(1.0), cfg["tol"]
        )
    ]


def verify_pick(cfg):
    m = build_m(TruncationSpec(cfg["terms"]))
    out = []
    for t in IMAG_AXIS_T:
        out.append(
            VerificationReport(
                "pick_imaginary_axis",
                {"t": t, "terms": cfg["terms"]},
                pick_eval(m, 1j * t),
                -1j * math.tanh(1.0 / t),
                cfg["tol"],
            )
        )
    zs = admissible_points(RandomSource(cfg["seed"]), cfg["points"])
    lhs = pick_eval(m, zs)
    rhs = tan_reciprocal_oracle(zs)
    worst = int(np.argmax(np.abs(lhs - rhs)))
    out.append(
        VerificationReport(
            "pick_corollary_worst",
            {"z_re": zs[worst].real, "z_im": zs[worst].imag, "points": len(zs), "terms": cfg["terms"]},
            lhs[worst],
            rhs[worst],
            cfg["corollary_tol"],
        )
    )
    upper = zs[zs.imag > 0]
    highest = float(np.max(pick_eval(m, upper).imag)) if upper.size else 0.0
    out.append(
        VerificationReport(
            "pick_sign_property",
            {"points": int(upper.size), "note": "max Im over upper half-plane points, clipped at 0"},
            max(highest, 0.0),
            0.0,
            HERGLOTZ_SLACK,
        )
    )
    return out


def verify_eq6(cfg):
    trunc = TruncationSpec(cfg["terms"])
    out = []
    for t in POSITIVE_T:
        rhs = -1j * math.tanh(1.0 / t)
        lap = eq6_lhs(t, trunc)
        mid = eq6_middle(t, trunc)
        base = {"t": t, "terms": cfg["terms"]}
        out.append(VerificationReport("eq6_laplace_vs_closed", base, lap, rhs, cfg["tol"]))
        out.append(VerificationReport("eq6_kmap_vs_closed", base, mid, rhs, cfg["tol"]))
        out.append(VerificationReport("eq6_laplace_vs_kmap", base, lap, mid, cfg["tol"]))
    return out


def verify_kmap(cfg):
    trunc = TruncationSpec(cfg["terms"])
    quad = QuadratureSpec("exp_weighted", cfg["nodes"])
    out = []
    for t in POSITIVE_T:
        closed = -t * math.tanh(t)
        base = {"t": t, "terms": cfg["terms"], "nodes": cfg["nodes"]}
        out.append(VerificationReport("k_exponent", base, k_exponent(t, trunc, quad), closed, cfg["tol"]))
        out.append(
            VerificationReport("k_resolvent", base, mu_exponent_resolvent(t, trunc), closed, cfg["tol"])
        )
    return out


def verify_eq7(cfg):
    trunc = TruncationSpec(cfg["terms"])
    return [
        VerificationReport(
            "eq7_laplace", {"w": w, "terms": cfg["terms"]}, eq7_lhs(w, trunc), -math.tanh(1.0 / w), cfg["tol"]
        )
        for w in EQ7_W
    ]


def _worst_cell(name, values, support, exact, n, tol, extra=None):
    emp = empirical_pmf(values, support)
    i = int(np.argmax(np.abs(emp - exact)))
    inputs = {"sampler": name, "k": int(support[i]), "samples": n}
    inputs.update(extra or {})
    return VerificationReport("skellam_mc_pmf", inputs, emp[i], exact[i], tol)


def verify_skellam(cfg):
    ks, pmf = skellam_pmf_table(30)
    out = [VerificationReport("skellam_pmf_total", {"max_k": 30}, math.fsum(pmf), 1.0, cfg["pmf_tol"])]
    n = cfg["samples"]
    cells = np.arange(-cfg["max_cell"], cfg["max_cell"] + 1)
    exact = skellam_pmf(cells)
    y = sample_Y(RandomSource(cfg["seed"], 0), n)
    d = sample_skellam_direct(RandomSource(cfg["seed"], 1), n)
    out.append(_worst_cell("sample_Y", y, cells, exact, n, cfg["tol"]))
    out.append(_worst_cell("sample_skellam_direct", d, cells, exact, n, cfg["tol"]))
    plus, minus = sample_Y_counts(RandomSource(cfg["seed"], 2), n)
    support = np.arange(0, 9)
    poisson1 = np.array([math.exp(-1.0) / math.factorial(k) for k in support])
    for name, counts in (("S_plus", plus), ("S_minus", minus)):
        emp = empirical_pmf(counts, support)
        i = int(np.argmax(np.abs(emp - poisson1)))
        out.append(
            VerificationReport(
                "skellam_marginal_poisson", {"part": name, "k": int(support[i]), "samples": n}, emp[i], poisson1[i], cfg["tol"]
            )
        )
    cov = float(np.mean(plus * minus) - plus.mean() * minus.mean())
    out.append(VerificationReport("skellam_part_covariance", {"samples": n}, cov, 0.0, cfg["tol"]))
    return out


def verify_bessel(cfg):
    out = []
    for k in range(1, cfg["max_k"] + 1):
        out.append(
            VerificationReport("bessel_series_vs_integral", {"k": k}, bessel_I_quadrature(k), bessel_I_series(k, 2.0), cfg["tol"])
        )
    K = cfg["K"]
    total = math.fsum([bessel_I_series(0, 2.0)] + [2.0 * bessel_I_series(k, 2.0) for k in range(1, K + 1)])
    out.append(VerificationReport("bessel_sum_identity", {"K": K}, total, math.exp(2.0), cfg["residual_tol"]))
    return out


def verify_counterpart(cfg):
    trunc = TruncationSpec(cfg["terms"], False)
    n = cfg["samples"]
    x = sample_X(RandomSource(cfg["seed"]), trunc, n)
    base = {"samples": n, "terms": cfg["terms"], "seed": cfg["seed"]}
    out = [
        VerificationReport("counterpart_mean", base, float(x.mean()), 0.0, cfg["mean_tol"]),
        VerificationReport("counterpart_variance", base, float(x.var(ddof=1)), 1.0, cfg["var_tol"]),
    ]
    est = ecf(x, [1.0])
    target = np.exp(levy_exponent(counterpart_triple(trunc), 1.0))
    out.append(
        VerificationReport(
            "counterpart_ecf",
            dict(base, t=1.0, note="tolerance is 3 standard errors"),
            est.values[0],
            target,
            3.0 * float(est.std_errors[0]),
        )
    )
    return out


RUNNERS = {
    "mass": verify_mass,
    "pick": verify_pick,
    "eq6": verify_eq6,
    "k-map": verify_kmap,
    "eq7": verify_eq7,
    "skellam": verify_skellam,
    "bessel": verify_bessel,
    "counterpart": verify_counterpart,
}


def run_verify(identity, overrides=None):
    """Run one identity family (or ``"all"``) and return its reports in grid order."""
    overrides = overrides or {}
    if identity == "all":
        names = IDENTITIES
    elif identity in RUNNERS:
        names = (identity,)
    else:
        raise UnknownIdentity(f"unknown identity {identity!r}; choose from {', '.join(IDENTITIES)}, all")
    out = []
    for name in names:
        out.extend(RUNNERS[name](_settings(name, overrides)))
    return out

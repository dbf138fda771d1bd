"""Signal functions, the admissible noise families, and AR(1) path generation.

The observation model is y_j = S(x_j) * y_{j-1} + xi_j on design points
x_j = a + (b-a)*j/n.  S must lie in the stability set: |S| <= 1 - eps and
|S'| <= L on [a, b].  The noise is zero mean, unit variance, with factorially
bounded even moments E|xi|^{2l} <= l! * varsigma^l.
"""

from dataclasses import dataclass, field
import json
import math

import numpy as np

from .basis import trig_fn

S2_SERIES_CUTOFF = 100000

_SIGNAL_KINDS = ("closed_form_S1", "closed_form_S2", "series", "tabulated")
_NOISE_FAMILIES = ("gaussian_std", "uniform_unit_variance", "bounded_symmetric", "none")


class ValidationError(ValueError):
    """A spec violates one of its declared invariants."""


@dataclass(frozen=True)
class SignalSpec:
    """A coefficient function S on [a, b] with stability parameters.

    kind "series" is sum_i coefficients[i] * psi_i(x) over the trigonometric
    basis; "tabulated" interpolates the given values on a uniform x grid.
    """

    kind: str
    a: float = 0.0
    b: float = 1.0
    stability_eps: float = 0.1
    lipschitz_L: float = 100.0
    coefficients: tuple = ()
    values: tuple = ()

    def __post_init__(self):
        if self.kind not in _SIGNAL_KINDS:
            raise ValidationError(f"unknown signal kind {self.kind!r}; valid: {_SIGNAL_KINDS}")
        if not self.b > self.a:
            raise ValidationError("need b > a")
        if not 0.0 < self.stability_eps < 1.0:
            raise ValidationError("stability_eps must be in (0, 1)")
        if self.lipschitz_L <= 0:
            raise ValidationError("lipschitz_L must be positive")
        if self.kind == "series" and len(self.coefficients) == 0:
            raise ValidationError("series kind needs coefficients")
        if self.kind == "tabulated" and len(self.values) < 2:
            raise ValidationError("tabulated kind needs at least 2 values")

    def to_dict(self):
        cfg = {"kind": self.kind, "a": self.a, "b": self.b,
               "stability_eps": self.stability_eps, "lipschitz_L": self.lipschitz_L}
        if self.kind == "series":
            cfg["coefficients"] = list(self.coefficients)
        if self.kind == "tabulated":
            cfg["values"] = list(self.values)
        return cfg

    @classmethod
    def from_dict(cls, cfg):
        cfg = dict(cfg)
        if "coefficients" in cfg:
            cfg["coefficients"] = tuple(cfg["coefficients"])
        if "values" in cfg:
            cfg["values"] = tuple(cfg["values"])
        return cls(**cfg)

    @classmethod
    def from_file(cls, path):
        with open(path) as fh:
            return cls.from_dict(json.load(fh))


def signal_s1(stability_eps=0.4):
    """S(x) = 0.5 * cos(2*pi*x) on [0, 1]."""
    return SignalSpec(kind="closed_form_S1", a=0.0, b=1.0,
                      stability_eps=stability_eps, lipschitz_L=1.1 * np.pi)


def signal_s2(stability_eps=0.5):
    """S(x) = 0.1 + sum_{j<=100000} cos(2*pi*j*x)/(j+3)^2 on [0, 1]."""
    # |S2'| <= 2*pi*sum j/(j+3)^2 ~ 66; leave headroom
    return SignalSpec(kind="closed_form_S2", a=0.0, b=1.0,
                      stability_eps=stability_eps, lipschitz_L=70.0)


def _s2_scattered(x):
    """Direct chunked summation of the S2 cosine series at arbitrary points."""
    x = np.atleast_1d(np.asarray(x, dtype=float))
    out = np.full(x.shape, 0.1)
    block = 2000
    for j0 in range(1, S2_SERIES_CUTOFF + 1, block):
        j = np.arange(j0, min(j0 + block, S2_SERIES_CUTOFF + 1), dtype=float)
        out += np.cos(2.0 * np.pi * np.outer(x, j)) @ ((j + 3.0) ** -2)
    return out


def _s2_unit_grid(N):
    """S2 at x = i/N, i = 0..N, by folding the series modulo N.

    cos(2*pi*j*i/N) depends on j only through j mod N, so the 100000-term sum
    collapses to an N-point cosine transform; the result equals direct
    summation to machine precision.
    """
    c = np.zeros(N)
    j = np.arange(1, S2_SERIES_CUTOFF + 1)
    np.add.at(c, j % N, (j + 3.0) ** -2.0)
    vals = 0.1 + np.real(np.fft.fft(c))
    return np.concatenate([vals, vals[:1]])  # x = 1 wraps to x = 0


def evaluate_signal(spec, x):
    """S(x) for scalar or array x inside [a, b]."""
    scalar = np.isscalar(x)
    x = np.atleast_1d(np.asarray(x, dtype=float))
    if np.any(x < spec.a - 1e-12) or np.any(x > spec.b + 1e-12):
        raise ValidationError(f"x outside [{spec.a}, {spec.b}]")
    if spec.kind == "closed_form_S1":
        out = 0.5 * np.cos(2.0 * np.pi * x)
    elif spec.kind == "closed_form_S2":
        out = _s2_scattered(x)
    elif spec.kind == "series":
        out = np.zeros_like(x)
        for i, beta in enumerate(spec.coefficients, start=1):
            if beta != 0.0:
                out += beta * trig_fn(i, x, spec.a, spec.b)
    else:  # tabulated
        grid = np.linspace(spec.a, spec.b, len(spec.values))
        out = np.interp(x, grid, np.asarray(spec.values, dtype=float))
    return float(out[0]) if scalar else out


def signal_values_uniform(spec, N):
    """S at the N+1 uniform points a + (b-a)*i/N, i = 0..N.

    Uses the exact modular folding for S2 on [0, 1]; other kinds are cheap to
    evaluate directly.
    """
    if spec.kind == "closed_form_S2" and spec.a == 0.0 and spec.b == 1.0:
        return _s2_unit_grid(N)
    x = spec.a + (spec.b - spec.a) * np.arange(N + 1) / N
    return evaluate_signal(spec, x)


def validate_stability(spec, n):
    """Check sup|S| <= 1-eps on 10*n+1 points and, for closed forms, |S'| <= L."""
    vals = signal_values_uniform(spec, 10 * n)
    sup = float(np.max(np.abs(vals)))
    if sup > 1.0 - spec.stability_eps + 1e-12:
        raise ValidationError(
            f"signal violates stability: sup|S|={sup:.6g} > 1-eps={1 - spec.stability_eps:.6g}")
    if spec.kind.startswith("closed_form"):
        step = (spec.b - spec.a) / (10 * n)
        deriv = float(np.max(np.abs(np.diff(vals)))) / step
        if deriv > spec.lipschitz_L * (1.0 + 1e-6):
            raise ValidationError(
                f"signal violates Lipschitz bound: |S'| ~ {deriv:.6g} > L={spec.lipschitz_L:.6g}")
    return sup


@dataclass(frozen=True)
class NoiseSpec:
    """An i.i.d. noise family: zero mean, unit variance, bounded even moments.

    family "none" injects xi = 0 exactly (debug mode, not a member of the
    admissible class).  bounded_symmetric draws radius*(2*B - 1) with
    B ~ Beta(s, s) and s = (radius^2-1)/2, which has unit variance; radius
    sqrt(3) recovers the uniform law.
    """

    family: str
    varsigma: float = None
    radius: float = math.sqrt(6.0)

    def __post_init__(self):
        if self.family not in _NOISE_FAMILIES:
            raise ValidationError(f"unknown noise family {self.family!r}; valid: {_NOISE_FAMILIES}")
        if self.varsigma is None:
            object.__setattr__(self, "varsigma", self.default_varsigma())
        if self.family != "none" and self.varsigma < 1.0:
            raise ValidationError("varsigma must be >= 1")
        if self.family == "bounded_symmetric" and self.radius <= 1.0:
            raise ValidationError("bounded_symmetric needs radius > 1 for unit variance")

    def default_varsigma(self):
        # smallest varsigma for which E|xi|^{2l} <= l! varsigma^l holds per family
        return {"gaussian_std": 2.0,
                "uniform_unit_variance": 3.0,
                "bounded_symmetric": max(self.radius ** 2, 1.0),
                "none": 1.0}[self.family]

    def draw(self, rng, size):
        if self.family == "gaussian_std":
            return rng.standard_normal(size)
        if self.family == "uniform_unit_variance":
            return rng.uniform(-math.sqrt(3.0), math.sqrt(3.0), size)
        if self.family == "bounded_symmetric":
            s = (self.radius ** 2 - 1.0) / 2.0
            return self.radius * (2.0 * rng.beta(s, s, size) - 1.0)
        return np.zeros(size)

    def moment_2l(self, l):
        """Analytic E|xi|^{2l}."""
        if self.family == "gaussian_std":
            return float(math.factorial(2 * l)) / (2 ** l * math.factorial(l))
        if self.family == "uniform_unit_variance":
            return 3.0 ** l / (2 * l + 1)
        if self.family == "bounded_symmetric":
            # E(2B-1)^{2l} for B ~ Beta(s,s), via the even central moments
            s = (self.radius ** 2 - 1.0) / 2.0
            m = 1.0
            for i in range(1, l + 1):
                m *= (2 * i - 1) / (2 * s + 2 * i - 1)
            return self.radius ** (2 * l) * m
        return 0.0

    def to_dict(self):
        cfg = {"family": self.family, "varsigma": self.varsigma}
        if self.family == "bounded_symmetric":
            cfg["radius"] = self.radius
        return cfg

    @classmethod
    def from_dict(cls, cfg):
        return cls(**cfg)


@dataclass(frozen=True)
class Trajectory:
    """One simulated AR(1) path y_0..y_n on design points x_j = a + (b-a)*j/n."""

    n: int
    a: float
    b: float
    y0: float
    x: np.ndarray = field(repr=False)
    y: np.ndarray = field(repr=False)
    seed: int

    def rows(self):
        """(j, x_j, y_j) triples for CSV export."""
        for j in range(self.n + 1):
            yield j, self.x[j], self.y[j]


def replication_seed(base_seed, r):
    """Deterministic, independent seed stream for replication r."""
    return np.random.SeedSequence(entropy=base_seed, spawn_key=(r,))


def generate_trajectory(spec, noise, n, seed, y0=0.0, signal_values=None, validate=True):
    """Simulate y_j = S(x_j) y_{j-1} + xi_j for j = 1..n.

    signal_values may carry precomputed S(x_j) for j = 0..n (the j = 0 entry is
    unused); passing it skips re-evaluating S across replications.
    """
    if n < 10:
        raise ValidationError(f"need n >= 10, got {n}")
    if validate:
        validate_stability(spec, n)
    if signal_values is None:
        signal_values = signal_values_uniform(spec, n)
    s = np.asarray(signal_values, dtype=float)
    if s.shape != (n + 1,):
        raise ValidationError(f"signal_values must have length n+1={n + 1}")
    rng = np.random.default_rng(seed)
    xi = noise.draw(rng, n)
    y = np.empty(n + 1)
    y[0] = y0
    s_list = s.tolist()
    xi_list = xi.tolist()
    yy = float(y0)
    out = y.tolist()
    for j in range(1, n + 1):
        yy = s_list[j] * yy + xi_list[j - 1]
        out[j] = yy
    y = np.asarray(out)
    x = spec.a + (spec.b - spec.a) * np.arange(n + 1) / n
    seed_repr = seed.entropy if isinstance(seed, np.random.SeedSequence) else seed
    return Trajectory(n=n, a=spec.a, b=spec.b, y0=y0, x=x, y=y, seed=seed_repr)

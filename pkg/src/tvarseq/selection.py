"""Adaptive weight family, penalized selection criterion, and the final estimator.

Candidate estimators shrink the empirical Fourier coefficients by weight
profiles lambda_alpha indexed by alpha = (k, t) on a two-dimensional grid:
k plays the role of a smoothness order and t of a Sobolev-ball radius.  The
selected profile minimizes the penalized criterion J_d; the estimate is the
step function with values sum_j lambda(j) theta_hat_j phi_j(z_l) on the cells
]z_{l-1}, z_l].
"""

from dataclasses import dataclass, field
import math

import numpy as np

DELTA_MAX = 1.0 / 12.0


class ConfigurationError(ValueError):
    pass


def default_delta(n):
    """Penalty coefficient delta_n = min(1/12, 1/(12 + ln n))."""
    return min(DELTA_MAX, 1.0 / (12.0 + math.log(n)))


@dataclass(frozen=True)
class WeightGrid:
    """Shrinkage profiles lambda_alpha for alpha on {1..k_star} x {eps..m*eps}."""

    n: int
    a: float
    b: float
    d: int
    k_star: int
    m: int
    eps: float
    alphas: tuple                      # (k, t) pairs, k outer / t inner
    lam: np.ndarray = field(repr=False)      # shape (nu, d)
    j_star: np.ndarray = field(repr=False)   # per alpha, real-valued
    omega: np.ndarray = field(repr=False)    # per alpha, real-valued

    @property
    def nu(self):
        return len(self.alphas)


def build_weight_grid(n, a=0.0, b=1.0, d=None, k_star=None, m=None, eps=None):
    """Construct the adaptation grid and all weight vectors, truncated to 1..d.

    Defaults follow the simulation instantiation: k_star = 150 + [sqrt(ln n)],
    m = [ln^2 n], eps = 1/ln n.  For alpha = (k, t) the profile is flat below
    j_star, decays as 1 - (j/omega_alpha)^k up to omega_alpha, and is zero
    beyond.
    """
    if n < 100:
        raise ConfigurationError(f"need n >= 100, got {n}")
    ln_n = math.log(n)
    if k_star is None:
        k_star = 150 + int(math.sqrt(ln_n))
    if m is None:
        m = int(ln_n ** 2)
    if eps is None:
        eps = 1.0 / ln_n
    if d is None:
        d = 2 * int(math.sqrt(n) / 2) + 1

    k = np.arange(1, k_star + 1, dtype=float)[:, None]       # (k_star, 1)
    t = eps * np.arange(1, m + 1, dtype=float)[None, :]      # (1, m)
    core = ((k + 1) * (2 * k + 1) / (np.pi ** (2 * k) * k) * t * n) ** (1.0 / (2 * k + 1))
    omega_low = ln_n + core
    j_star = omega_low / (200.0 + np.log(omega_low))
    omega_star = j_star + ln_n
    omega = omega_star + (b - a) ** (2 * k / (2 * k + 1)) * core

    j = np.arange(1, d + 1, dtype=float)[None, None, :]      # (1, 1, d)
    kk = k[:, :, None]
    om = omega[:, :, None]
    js = j_star[:, :, None]
    lam = np.where(j < js, 1.0,
                   np.where(j <= om, 1.0 - (j / om) ** kk, 0.0))
    lam = np.clip(lam, 0.0, 1.0)

    alphas = tuple((int(ki), eps * ti) for ki in range(1, k_star + 1)
                   for ti in range(1, m + 1))
    return WeightGrid(n=n, a=a, b=b, d=d, k_star=k_star, m=m, eps=eps,
                      alphas=alphas, lam=lam.reshape(k_star * m, d),
                      j_star=j_star.reshape(-1), omega=omega.reshape(-1))


def _check_delta(delta):
    if not 0.0 < delta <= DELTA_MAX + 1e-15:
        raise ConfigurationError(f"delta must lie in (0, 1/12], got {delta}")


def penalty(lam, s_jd, a, b, d):
    """P_d(lambda) = ((b-a)/d) sum_j lambda(j)^2 s_{j,d}."""
    lam = np.asarray(lam, dtype=float)
    if lam.shape[-1] != d:
        raise ValueError(f"expected weight vectors of length d={d}")
    return (b - a) / d * (lam ** 2) @ np.asarray(s_jd, dtype=float)


def criterion(lam, coeffs, delta, a, b, d):
    """Penalized selection criterion J_d(lambda).

    J_d = sum lambda^2 theta_hat^2 - 2 sum lambda theta~ + delta * P_d, where
    theta~_j = theta_hat_j^2 - ((b-a)/d) s_{j,d} debiases the squared
    coefficient.  Accepts a single weight vector or a stack of them.
    """
    _check_delta(delta)
    lam = np.asarray(lam, dtype=float)
    th2 = coeffs.theta_hat ** 2
    theta_tilde = th2 - (b - a) / d * coeffs.s_jd
    return (lam ** 2) @ th2 - 2.0 * lam @ theta_tilde + delta * penalty(lam, coeffs.s_jd, a, b, d)


@dataclass(frozen=True)
class SelectionResult:
    """Selected weights, criterion values over the grid, and the estimate."""

    alpha_hat: tuple
    alpha_index: int
    lambda_hat: np.ndarray = field(repr=False)
    J_values: np.ndarray = field(repr=False)
    S_star: np.ndarray = field(repr=False)
    delta: float = 0.0
    gamma: bool = True


def select(coeffs, grid, delta, gamma, basis):
    """argmin_alpha J_d(lambda_alpha); ties go to the smallest (k, t).

    The estimate values S_star at the z grid are gated by the Gamma event:
    all zeros when gamma is false.
    """
    if grid.nu == 0:
        raise ConfigurationError("empty weight grid")
    J = criterion(grid.lam, coeffs, delta, grid.a, grid.b, grid.d)
    idx = int(np.argmin(J))  # first minimum = lexicographically smallest alpha
    lam_hat = grid.lam[idx]
    if gamma:
        S_star = basis.phi @ (lam_hat * coeffs.theta_hat)
    else:
        S_star = np.zeros(grid.d)
    return SelectionResult(alpha_hat=grid.alphas[idx], alpha_index=idx,
                           lambda_hat=lam_hat, J_values=J, S_star=S_star,
                           delta=delta, gamma=gamma)


def weighted_estimate_values(lam, coeffs, basis):
    """Values of the shrinkage estimator S_hat_lambda at the z grid."""
    return basis.phi @ (np.asarray(lam, dtype=float) * coeffs.theta_hat)


def step_function(z, values, a):
    """Piecewise-constant extension of grid values to all of [a, b].

    Returns a callable equal to values[l-1] on ]z_{l-1}, z_l] with z_0 = a.
    """
    z = np.asarray(z, dtype=float)
    values = np.asarray(values, dtype=float)

    def f(x):
        x = np.asarray(x, dtype=float)
        idx = np.clip(np.searchsorted(z, x, side="left"), 0, len(z) - 1)
        out = values[idx]
        return float(out) if out.ndim == 0 else out

    return f


def empirical_error(S_values, estimate_values, a, b, d):
    """Er_d = ((b-a)/d) sum_l (estimate(z_l) - S(z_l))^2."""
    S_values = np.asarray(S_values, dtype=float)
    estimate_values = np.asarray(estimate_values, dtype=float)
    if S_values.shape != (d,) or estimate_values.shape != (d,):
        raise ValueError(f"expected vectors of length d={d}")
    diff = estimate_values - S_values
    return (b - a) / d * float(diff @ diff)

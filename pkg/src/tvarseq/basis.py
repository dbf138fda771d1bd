"""Trigonometric basis on [a, b] and the discrete inner product on the z grid.

The basis is phi_1 = 1/sqrt(b-a) and, for j >= 2,
phi_j(x) = sqrt(2/(b-a)) * Trg_j(2*pi*[j/2]*(x-a)/(b-a)) with Trg_j = cos for
even j and sin for odd j.  For an odd number d of equispaced grid points
z_l = a + l*(b-a)/d the first d functions are exactly orthonormal for the
empirical inner product (f, g)_d = ((b-a)/d) * sum_l f(z_l) g(z_l).
"""

from dataclasses import dataclass

import numpy as np


def trig_fn(j, x, a=0.0, b=1.0):
    """Evaluate the j-th trigonometric basis function (1-based) at x."""
    if j < 1:
        raise IndexError(f"basis index must be >= 1, got {j}")
    x = np.asarray(x, dtype=float)
    span = b - a
    if j == 1:
        return np.full_like(x, 1.0 / np.sqrt(span))
    arg = 2.0 * np.pi * (j // 2) * (x - a) / span
    if j % 2 == 0:
        return np.sqrt(2.0 / span) * np.cos(arg)
    return np.sqrt(2.0 / span) * np.sin(arg)


class TrigBasis:
    """First d trigonometric basis functions with cached values on the z grid."""

    def __init__(self, a, b, d):
        if d % 2 == 0:
            raise ValueError(f"grid size d must be odd, got {d}")
        if not b > a:
            raise ValueError("need b > a")
        self.a = float(a)
        self.b = float(b)
        self.d = int(d)
        self.z = a + (b - a) * np.arange(1, d + 1) / d
        # phi[l-1, j-1] = phi_j(z_l); reused across all inner products
        self.phi = np.column_stack([trig_fn(j, self.z, a, b) for j in range(1, d + 1)])
        self.phi.setflags(write=False)

    def eval(self, j, x):
        """phi_j(x) for 1 <= j <= d."""
        if not 1 <= j <= self.d:
            raise IndexError(f"basis index {j} outside 1..{self.d}")
        return trig_fn(j, x, self.a, self.b)

    def inner(self, f_values, g_values):
        """Discrete inner product (f, g)_d of values on the z grid."""
        f = np.asarray(f_values, dtype=float)
        g = np.asarray(g_values, dtype=float)
        if f.shape != (self.d,) or g.shape != (self.d,):
            raise ValueError(f"expected vectors of length d={self.d}")
        return (self.b - self.a) / self.d * float(f @ g)

    def gram(self):
        """Gram matrix of the d basis functions under (., .)_d."""
        return (self.b - self.a) / self.d * self.phi.T @ self.phi


@dataclass(frozen=True)
class FourierCoeffs:
    """Estimated coefficients theta_hat_{j,d} and variance functionals s_{j,d}."""

    theta_hat: np.ndarray
    s_jd: np.ndarray


def fourier_coefficients(basis, Y, sigma2):
    """Coefficient estimates from a regression sample on the z grid.

    theta_hat_{j,d} = ((b-a)/d) sum_l Y_l phi_j(z_l)
    s_{j,d}        = ((b-a)/d) sum_l sigma2_l phi_j(z_l)^2
    """
    Y = np.asarray(Y, dtype=float)
    sigma2 = np.asarray(sigma2, dtype=float)
    if Y.shape != (basis.d,) or sigma2.shape != (basis.d,):
        raise ValueError(f"expected vectors of length d={basis.d}")
    w = (basis.b - basis.a) / basis.d
    theta_hat = w * (basis.phi.T @ Y)
    s_jd = w * ((basis.phi ** 2).T @ sigma2)
    return FourierCoeffs(theta_hat=theta_hat, s_jd=s_jd)

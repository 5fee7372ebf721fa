r"""The i-Garima lifetime distribution.

The i-Garima law is the induced distribution of the Garima law: its
density is proportional to the Garima survival function,

.. math::

   g(x;\theta) = \frac{\theta}{\theta+3}(2+\theta+\theta x)e^{-\theta x},
   \qquad
   G(x;\theta) = 1 - \Big(1 + \frac{\theta x}{\theta+3}\Big)e^{-\theta x},

for :math:`x > 0, \theta > 0`.  Equivalently it is a mixture of
Exponential(theta) and Gamma(2, theta) with weight
:math:`(\theta+2)/(\theta+3)` on the exponential component.

Closed forms are used wherever they exist.  Quantities whose published
series do not converge (Shannon entropy, Renyi entropy of non-integer
order) are evaluated by quadrature.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy import special as sc

from .core import LifetimeDistribution, _out, check_theta, make_rng
from .special import integrate, lambert_wm1, lambert_wm1_log

__all__ = [
    "CentralMoments",
    "GiniIndex",
    "IGarima",
    "MixtureForm",
    "ShapeMeasures",
    "stress_strength",
]


@dataclass(frozen=True)
class MixtureForm:
    """``p * Exponential(rate) + (1 - p) * Gamma(2, rate)``."""

    p: float
    rate: float

    def exponential_pdf(self, x: ArrayLike):
        x = np.asarray(x, dtype=float)
        return _out(np.where(x > 0, self.rate * np.exp(-self.rate * x), 0.0))

    def gamma2_pdf(self, x: ArrayLike):
        x = np.asarray(x, dtype=float)
        return _out(np.where(x > 0, self.rate**2 * x * np.exp(-self.rate * x), 0.0))

    def pdf(self, x: ArrayLike):
        return _out(
            self.p * np.asarray(self.exponential_pdf(x))
            + (1.0 - self.p) * np.asarray(self.gamma2_pdf(x))
        )


class CentralMoments(NamedTuple):
    mean: float
    mu2: float
    mu3: float
    mu4: float


@dataclass(frozen=True)
class ShapeMeasures:
    cv: float
    skewness: float
    kurtosis: float
    index_of_dispersion: float


class GiniIndex(NamedTuple):
    """Gini index from the published closed form and from quadrature.

    The two disagree; ``numeric`` is the trustworthy value.
    """

    closed: float
    numeric: float


class IGarima(LifetimeDistribution):
    """i-Garima distribution with rate parameter ``theta``."""

    family_name = "igarima"

    # -- density and distribution function -------------------------------

    def _log_pdf(self, x: NDArray[np.float64]) -> NDArray[np.float64]:
        t = self.theta
        return math.log(t / (t + 3.0)) + np.log(2.0 + t + t * x) - t * x

    def mixture_weights(self) -> tuple[float, float]:
        t = self.theta
        return ((t + 2.0) / (t + 3.0), 1.0 / (t + 3.0))

    def mixture(self) -> MixtureForm:
        return MixtureForm(p=(self.theta + 2.0) / (self.theta + 3.0), rate=self.theta)

    def cdf(self, x: ArrayLike):
        t = self.theta
        u = t * np.maximum(np.asarray(x, dtype=float), 0.0)
        return _out(-np.expm1(-u) - u / (t + 3.0) * np.exp(-u))

    def log_survival(self, x: ArrayLike):
        t = self.theta
        u = t * np.maximum(np.asarray(x, dtype=float), 0.0)
        return _out(np.log1p(u / (t + 3.0)) - u)

    def survival(self, x: ArrayLike):
        return _out(np.exp(self.log_survival(x)))

    def log_cdf(self, x: ArrayLike):
        with np.errstate(divide="ignore"):
            return _out(np.log(self.cdf(x)))

    # -- moments ---------------------------------------------------------

    def raw_moment(self, r: int) -> float:
        """``E[X**r] = r! (theta + r + 3) / (theta**r (theta + 3))``."""
        if int(r) != r or r < 1:
            raise ValueError(f"moment order must be a positive integer, got {r!r}")
        r = int(r)
        t = self.theta
        return math.factorial(r) * (t + r + 3.0) / (t**r * (t + 3.0))

    def mean(self) -> float:
        t = self.theta
        return (t + 4.0) / (t * (t + 3.0))

    def variance(self) -> float:
        return self.central_moments().mu2

    def central_moments(self) -> CentralMoments:
        t = self.theta
        d = t * (t + 3.0)
        return CentralMoments(
            mean=(t + 4.0) / d,
            mu2=(t**2 + 8 * t + 14) / d**2,
            mu3=2 * (t**3 + 12 * t**2 + 42 * t + 46) / d**3,
            mu4=3 * (3 * t**4 + 48 * t**3 + 260 * t**2 + 592 * t + 488) / d**4,
        )

    def shape_measures(self) -> ShapeMeasures:
        t = self.theta
        q2 = t**2 + 8 * t + 14
        return ShapeMeasures(
            cv=math.sqrt(q2) / (t + 4),
            skewness=2 * (t**3 + 12 * t**2 + 42 * t + 46) / q2**1.5,
            kurtosis=3 * (3 * t**4 + 48 * t**3 + 260 * t**2 + 592 * t + 488) / q2**2,
            index_of_dispersion=q2 / (t * (t + 3) * (t + 4)),
        )

    def mgf(self, t: float) -> float:
        """Moment generating function, defined for ``t < theta``."""
        th = self.theta
        if not t < th:
            raise ValueError(f"mgf requires t < theta = {th}, got {t!r}")
        return (1.0 - (2.0 + th) * t / ((3.0 + th) * th)) / (1.0 - t / th) ** 2

    def cumulant(self, r: int) -> float:
        if int(r) != r or r < 1:
            raise ValueError(f"cumulant order must be a positive integer, got {r!r}")
        r = int(r)
        t = self.theta
        f = math.factorial(r - 1)
        return 2.0 * f / t**r - f * ((t + 2.0) / (t * (t + 3.0))) ** r

    # -- reliability -----------------------------------------------------

    def hazard(self, x: ArrayLike):
        t = self.theta
        u = t * np.maximum(np.asarray(x, dtype=float), 0.0)
        return _out(t * (2.0 + t + u) / (3.0 + t + u))

    def mean_residual_life(self, x: ArrayLike):
        t = self.theta
        u = t * np.maximum(np.asarray(x, dtype=float), 0.0)
        return _out((4.0 + t + u) / (t * (3.0 + t + u)))

    def quantile(self, p: ArrayLike):
        """Closed-form quantile through the W-1 branch of Lambert W.

        ``Q(p) = -1 - 3/theta - W_{-1}(-(1-p)(theta+3)exp(-(theta+3))) / theta``
        """
        p = np.asarray(p, dtype=float)
        if np.any(~((p > 0.0) & (p < 1.0))):
            raise ValueError("quantile requires 0 < p < 1")
        t = self.theta

        def one(pi: float) -> float:
            # log(-z) with z the Lambert W argument, formed without underflow
            s = math.log1p(-pi) + math.log(t + 3.0) - (t + 3.0)
            assert s < -1.0, "W-1 argument left [-1/e, 0)"
            w = lambert_wm1(-math.exp(s)) if s > -700.0 else lambert_wm1_log(s)
            return max(-(w + t + 3.0) / t, 0.0)

        if p.ndim == 0:
            return one(float(p))
        return np.vectorize(one, otypes=[float])(p)

    def sample(self, n: int, seed: int | None = None) -> NDArray[np.float64]:
        return self.sample_mixture(n, seed)

    def sample_mixture(self, n: int, seed: int | None = None) -> NDArray[np.float64]:
        """Draw from the exponential/gamma mixture.

        With probability ``(theta+2)/(theta+3)`` a draw is one
        Exponential(theta) variate, otherwise the sum of two.
        """
        n = int(n)
        if n < 1:
            raise ValueError(f"sample size must be >= 1, got {n}")
        rng = make_rng(seed)
        pick_exp = rng.random(n) < self.mixture().p
        scale = 1.0 / self.theta
        e1 = rng.exponential(scale, n)
        e2 = rng.exponential(scale, n)
        return np.where(pick_exp, e1, e1 + e2)

    # -- order statistics ------------------------------------------------

    @staticmethod
    def _check_rank(r: int, m: int) -> None:
        if not (int(r) == r and int(m) == m and 1 <= r <= m):
            raise ValueError(f"need integer ranks with 1 <= r <= m, got r={r!r}, m={m!r}")

    def order_stat_pdf(self, r: int, m: int, y: ArrayLike):
        """Density of the ``r``-th smallest of ``m`` i.i.d. draws."""
        self._check_rank(r, m)
        y = np.asarray(y, dtype=float)
        log_c = math.lgamma(m + 1) - math.lgamma(r) - math.lgamma(m - r + 1)
        with np.errstate(divide="ignore"):
            logf = (
                log_c
                + sc.xlogy(r - 1, np.asarray(self.cdf(y)))
                + (m - r) * np.asarray(self.log_survival(y))
                + np.asarray(self.log_pdf(y))
            )
        return _out(np.exp(logf))

    def order_stat_cdf(self, r: int, m: int, y: ArrayLike):
        """``sum_{j=r}^{m} C(m, j) G(y)**j (1 - G(y))**(m - j)``."""
        self._check_rank(r, m)
        g = np.asarray(self.cdf(y))
        s = np.asarray(self.survival(y))
        total = np.zeros(g.shape)
        for j in range(int(r), int(m) + 1):
            total = total + math.comb(int(m), j) * g**j * s ** (int(m) - j)
        return _out(total)

    # -- inequality curves -----------------------------------------------

    def _upper_partial_mean_ratio(self, q: float) -> float:
        # (1/mu) * int_q^inf x g(x) dx
        if math.isinf(q):
            return 0.0
        t = self.theta
        u = t * q
        return (u * u + (t + 4.0) * u + (t + 4.0)) * math.exp(-u) / (t + 4.0)

    def lorenz(self, p: float) -> float:
        """Lorenz curve ``L(p)``: share of the total held below the p-quantile."""
        if not 0.0 < p <= 1.0:
            raise ValueError(f"lorenz requires 0 < p <= 1, got {p!r}")
        q = math.inf if p == 1.0 else self.quantile(p)
        return 1.0 - self._upper_partial_mean_ratio(q)

    def bonferroni(self, p: float) -> float:
        """Bonferroni curve ``B(p) = L(p) / p``."""
        return self.lorenz(p) / p

    def gini(self, rel_tol: float = 1e-10) -> GiniIndex:
        """Gini index, published closed form alongside ``(1/mu) int G(1-G)``."""
        t = self.theta
        closed = (2 * t**2 + 16 * t + 29) / (4 * (t + 3) * (t + 4))
        integral = integrate(
            lambda x: float(self.cdf(x) * self.survival(x)),
            0.0,
            rel_tol=rel_tol,
            scale=1.0 / t,
        )
        return GiniIndex(closed=closed, numeric=integral / self.mean())

    # -- entropies -------------------------------------------------------

    def renyi_entropy(self, eta: float, rel_tol: float = 1e-10) -> float:
        """Renyi entropy ``log(int g**eta) / (1 - eta)`` by quadrature."""
        eta = float(eta)
        if not (eta > 0.0 and eta != 1.0 and math.isfinite(eta)):
            raise ValueError(f"Renyi order must be positive and != 1, got {eta!r}")
        integral = integrate(
            lambda x: math.exp(eta * self.log_pdf(x)),
            0.0,
            rel_tol=rel_tol,
            scale=1.0 / (eta * self.theta),
        )
        return math.log(integral) / (1.0 - eta)

    def renyi_entropy_sum(self, eta: int) -> float:
        """Renyi entropy of positive integer order from the finite binomial sum.

        Only exact for integer ``eta``: the binomial expansion of
        ``(1 + theta x / (theta + 2))**eta`` terminates at ``j = eta``.
        """
        if int(eta) != eta or eta < 2:
            raise ValueError(f"finite sum needs an integer order >= 2, got {eta!r}")
        n = int(eta)
        t = self.theta
        log_terms = [
            math.log(math.comb(n, j))
            + (n - 1) * math.log(t)
            + (n - j) * math.log(t + 2.0)
            + math.lgamma(j + 1)
            - n * math.log(t + 3.0)
            - (j + 1) * math.log(n)
            for j in range(n + 1)
        ]
        return float(sc.logsumexp(log_terms)) / (1.0 - n)

    def shannon_entropy(self, rel_tol: float = 1e-10) -> float:
        """Differential entropy ``-int g log g`` by quadrature."""

        def integrand(x: float) -> float:
            lg = self.log_pdf(x)
            return -lg * math.exp(lg)

        return integrate(integrand, 0.0, rel_tol=rel_tol, scale=1.0 / self.theta)


def stress_strength(theta1: float, theta2: float) -> float:
    """``R = P(Y < X)`` for independent ``X ~ i-Garima(theta1)``, ``Y ~ i-Garima(theta2)``."""
    a = check_theta(theta1, "theta1")
    b = check_theta(theta2, "theta2")
    s = a + b
    num = a * ((a * b + 3 * a + 2 * b + 6) * s**2 + (2 * a * b + 3 * a + 2 * b) * s + 2 * a * b)
    return 1.0 - num / ((a + 3) * (b + 3) * s**3)

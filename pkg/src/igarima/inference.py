"""Maximum likelihood fitting, information criteria and the K-S test."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence, Union

import numpy as np
from numpy.typing import ArrayLike
from scipy import optimize
from scipy.special import gammaln

from .competitors import FAMILIES, get_family
from .core import LifetimeDistribution, check_theta
from .datasets import Dataset
from .special import RootFindingError, find_root

__all__ = [
    "ComparisonTable",
    "FitError",
    "FitFailure",
    "FitResult",
    "KSResult",
    "compare_models",
    "fit_mle",
    "igarima_log_likelihood",
    "igarima_score",
    "kolmogorov_cdf_exact",
    "kolmogorov_sf",
    "ks_statistic",
    "ks_test",
]

THETA_BRACKET = (1e-6, 1e3)
THETA_TOL = 1e-12
_MAX_EXPANSIONS = 12


class FitError(ArithmeticError):
    """The likelihood has no interior maximum in the search range."""


def _as_array(data) -> np.ndarray:
    x = data.array if isinstance(data, Dataset) else np.asarray(data, dtype=float)
    if x.ndim != 1 or x.size == 0:
        raise ValueError("data must be a non-empty 1-d sample")
    if not np.all(np.isfinite(x) & (x > 0)):
        raise ValueError("data values must be positive and finite")
    return x


# -- Kolmogorov-Smirnov ---------------------------------------------------


class KSResult(NamedTuple):
    statistic: float
    pvalue: float
    method: str


def ks_statistic(cdf_values: ArrayLike) -> float:
    """``D_n`` from model cdf values at the sorted sample (ties kept)."""
    f = np.sort(np.asarray(cdf_values, dtype=float))
    n = f.size
    i = np.arange(1, n + 1)
    d_plus = np.max(i / n - f)
    d_minus = np.max(f - (i - 1) / n)
    return float(max(d_plus, d_minus))


def kolmogorov_cdf_exact(n: int, d: float) -> float:
    """``P(D_n < d)`` for a fully specified continuous null.

    Marsaglia, Tsang & Wang (2003): the probability is an entry of the
    ``n``-th power of a ``(2k-1)``-square matrix, ``k = floor(n d) + 1``.
    Powers are taken by repeated squaring with a decimal exponent carried
    separately to avoid overflow.
    """
    n = int(n)
    if n < 1:
        raise ValueError("n must be >= 1")
    if d <= 0.0:
        return 0.0
    if d >= 1.0:
        return 1.0
    k = int(n * d) + 1
    m = 2 * k - 1
    h = k - n * d
    i, j = np.indices((m, m))
    diff = i - j + 1
    H = np.where(diff >= 0, np.exp(-gammaln(np.maximum(diff, 0) + 1)), 0.0)
    powers = np.arange(1, m + 1)
    inv_fact = np.exp(-gammaln(powers + 1))
    H[:, 0] -= h**powers * inv_fact
    H[m - 1, :] -= (h ** powers[::-1]) * inv_fact[::-1]
    if 2 * h - 1 > 0:
        H[m - 1, 0] += math.exp(m * math.log(2 * h - 1) - gammaln(m + 1))

    def mat_pow(a: np.ndarray, e: int) -> tuple[np.ndarray, int]:
        result, r_exp = np.eye(m), 0
        base, b_exp = a.copy(), 0
        while e:
            if e & 1:
                result = result @ base
                r_exp += b_exp
                if result[k - 1, k - 1] > 1e140:
                    result /= 1e140
                    r_exp += 140
            e >>= 1
            if e:
                base = base @ base
                b_exp *= 2
                if base.max() > 1e140:
                    base /= 1e140
                    b_exp += 140
        return result, r_exp

    Q, e_q = mat_pow(H, n)
    s = Q[k - 1, k - 1]
    for step in range(1, n + 1):
        s = s * step / n
        if s < 1e-140:
            s *= 1e140
            e_q -= 140
    return float(min(1.0, max(0.0, s * 10.0**e_q)))


def kolmogorov_sf(x: float) -> float:
    """Limiting survival function ``P(sqrt(n) D_n > x)`` of Kolmogorov's law."""
    if x <= 0.0:
        return 1.0
    if x < 1.0:
        # Jacobi-theta form, fast for small x
        c = -math.pi**2 / (8.0 * x * x)
        s = sum(math.exp(c * (2 * k - 1) ** 2) for k in range(1, 8))
        return 1.0 - math.sqrt(2.0 * math.pi) / x * s
    total = 0.0
    for k in range(1, 101):
        term = math.exp(-2.0 * k * k * x * x)
        total += term if k % 2 else -term
        if term < 1e-18:
            break
    return min(1.0, max(0.0, 2.0 * total))


def ks_test(dist: LifetimeDistribution, data, method: str = "auto") -> KSResult:
    """One-sample two-sided K-S test of ``data`` against ``dist``.

    ``method='auto'`` uses the exact null law when ``n < 100`` and the
    sample has no ties, and the Kolmogorov limit otherwise.  The fitted
    parameter is treated as known (no Lilliefors correction).
    """
    x = _as_array(data)
    n = x.size
    d = ks_statistic(dist.cdf(x))
    if method == "auto":
        has_ties = np.unique(x).size < n
        method = "exact" if n < 100 and not has_ties else "asymptotic"
    if method == "exact":
        p = 1.0 - kolmogorov_cdf_exact(n, d)
    elif method == "asymptotic":
        p = kolmogorov_sf(math.sqrt(n) * d)
    else:
        raise ValueError(f"unknown K-S method {method!r}")
    return KSResult(d, min(1.0, max(0.0, p)), method)


# -- maximum likelihood ---------------------------------------------------


def igarima_log_likelihood(theta: float, data) -> float:
    x = _as_array(data)
    t = check_theta(theta)
    n = x.size
    return float(n * math.log(t / (t + 3.0)) + np.sum(np.log(2.0 + t + t * x)) - t * np.sum(x))


def igarima_score(theta: float, data) -> float:
    """Derivative of the i-Garima log-likelihood in ``theta``."""
    x = _as_array(data)
    t = check_theta(theta)
    n = x.size
    return float(3.0 * n / (t * t + 3.0 * t) + np.sum((1.0 + x) / (2.0 + t + t * x)) - np.sum(x))


@dataclass(frozen=True)
class FitResult:
    family: str
    theta_hat: float
    neg2_loglik: float
    ks_stat: float
    ks_pvalue: float
    n: int
    ks_method: str = "auto"

    @property
    def k(self) -> int:
        return 1

    @property
    def aic(self) -> float:
        return self.neg2_loglik + 2.0 * self.k

    @property
    def bic(self) -> float:
        return self.neg2_loglik + self.k * math.log(self.n)

    @property
    def ok(self) -> bool:
        return True

    def distribution(self) -> LifetimeDistribution:
        return get_family(self.family)(self.theta_hat)

    def as_dict(self) -> dict:
        return {
            "family": self.family,
            "theta_hat": self.theta_hat,
            "neg2_loglik": self.neg2_loglik,
            "aic": self.aic,
            "bic": self.bic,
            "ks_stat": self.ks_stat,
            "ks_pvalue": self.ks_pvalue,
            "n": self.n,
            "ks_method": self.ks_method,
        }


@dataclass(frozen=True)
class FitFailure:
    """Placeholder row for a family whose fit failed."""

    family: str
    error: str
    n: int

    @property
    def ok(self) -> bool:
        return False


def _fit_igarima(x: np.ndarray) -> float:
    lo, hi = THETA_BRACKET
    for _ in range(_MAX_EXPANSIONS):
        s_lo, s_hi = igarima_score(lo, x), igarima_score(hi, x)
        if s_lo > 0 > s_hi:
            break
        if s_lo <= 0:
            lo /= 10.0
        if s_hi >= 0:
            hi *= 10.0
    else:
        raise FitError(f"i-Garima score has no sign change on [{lo:g}, {hi:g}]")
    try:
        return find_root(lambda t: igarima_score(t, x), lo, hi, tol=THETA_TOL * lo)
    except RootFindingError as exc:
        raise FitError(str(exc)) from exc


def _fit_generic(cls: type[LifetimeDistribution], x: np.ndarray) -> float:
    def nll(log_t: float) -> float:
        return -cls(math.exp(log_t)).log_likelihood(x)

    lo, hi = (math.log(b) for b in THETA_BRACKET)
    for _ in range(_MAX_EXPANSIONS):
        grid = np.linspace(lo, hi, 241)
        vals = np.array([nll(g) for g in grid])
        i = int(np.argmin(vals))
        if 0 < i < grid.size - 1:
            break
        if i == 0:
            lo -= math.log(1e3)
        else:
            hi += math.log(1e3)
    else:
        raise FitError(f"{cls.family_name}: log-likelihood has no interior maximum")
    res = optimize.minimize_scalar(
        nll, bounds=(grid[i - 1], grid[i + 1]), method="bounded",
        options={"xatol": 1e-13, "maxiter": 500},
    )
    if not res.success:
        raise FitError(f"{cls.family_name}: {res.message}")
    return math.exp(res.x)


def fit_mle(family: str, data, ks_method: str = "auto") -> FitResult:
    """Fit ``family`` to ``data`` by maximum likelihood and test the fit.

    i-Garima is fitted by solving its score equation with a bracketed root
    finder; the other families by bounded Brent minimisation of the
    negative log-likelihood in ``log(theta)`` after a coarse grid search.
    """
    cls = get_family(family)
    x = _as_array(data)
    if x.size < 2:
        raise ValueError("maximum likelihood needs at least 2 observations")
    theta = _fit_igarima(x) if cls.family_name == "igarima" else _fit_generic(cls, x)
    dist = cls(theta)
    ks = ks_test(dist, x, method=ks_method)
    return FitResult(
        family=cls.family_name,
        theta_hat=theta,
        neg2_loglik=-2.0 * dist.log_likelihood(x),
        ks_stat=ks.statistic,
        ks_pvalue=ks.pvalue,
        n=int(x.size),
        ks_method=ks.method,
    )


# -- model comparison -----------------------------------------------------

Row = Union[FitResult, FitFailure]


@dataclass(frozen=True)
class ComparisonTable:
    dataset: str
    n: int
    rows: tuple[Row, ...] = field(default_factory=tuple)

    def fitted(self) -> list[FitResult]:
        return [r for r in self.rows if r.ok]

    def best(self, metric: str) -> str | None:
        """Family minimising ``metric`` (``aic``, ``bic``, ``neg2_loglik`` or ``ks_stat``)."""
        fits = self.fitted()
        if not fits:
            return None
        return min(fits, key=lambda r: getattr(r, metric)).family

    def ranking(self, metric: str = "aic") -> list[str]:
        return [r.family for r in sorted(self.fitted(), key=lambda r: getattr(r, metric))]

    def __getitem__(self, family: str) -> Row:
        for r in self.rows:
            if r.family == family:
                return r
        raise KeyError(family)


def compare_models(data, families: Iterable[str] | None = None, ks_method: str = "auto") -> ComparisonTable:
    """Fit each family to ``data``; failures become :class:`FitFailure` rows."""
    fams: Sequence[str] = list(families) if families is not None else list(FAMILIES)
    if not fams:
        raise ValueError("at least one family is required")
    x = _as_array(data)
    rows: list[Row] = []
    for fam in fams:
        name = get_family(fam).family_name
        try:
            rows.append(fit_mle(name, x, ks_method=ks_method))
        except (FitError, ArithmeticError, ValueError) as exc:
            rows.append(FitFailure(family=name, error=str(exc), n=int(x.size)))
    name = data.name if isinstance(data, Dataset) else "data"
    return ComparisonTable(dataset=name, n=int(x.size), rows=tuple(rows))

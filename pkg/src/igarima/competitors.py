"""Competing one-parameter lifetime families.

All six are polynomial-times-exponential densities and hence finite
mixtures of ``Gamma(k, theta)``.  Densities (t = theta) and weights on
Gamma(1), Gamma(2), Gamma(3):

- Garima: t/(t+2) (1+t+t x) e^{-t x}; (1+t, 1)/(t+2)
- Lindley: t^2/(t+1) (1+x) e^{-t x}; (t, 1)/(t+1)
- Shanker: t^2/(t^2+1) (t+x) e^{-t x}; (t^2, 1)/(t^2+1)
- Akash: t^3/(t^2+2) (1+x^2) e^{-t x}; (t^2, 0, 2)/(t^2+2)
- Sujatha: t^3/(t^2+t+2) (1+x+x^2) e^{-t x}; (t^2, t, 2)/(t^2+t+2)
- Aradhana: t^3/(t^2+2t+2) (1+x)^2 e^{-t x}; (t^2, 2t, 2)/(t^2+2t+2)
"""

from __future__ import annotations

import math

import numpy as np

from .core import LifetimeDistribution
from .distribution import IGarima

__all__ = [
    "FAMILIES",
    "Akash",
    "Aradhana",
    "Garima",
    "Lindley",
    "Shanker",
    "Sujatha",
    "family_cdf",
    "family_pdf",
    "get_family",
]


class Garima(LifetimeDistribution):
    family_name = "garima"

    def _log_pdf(self, x):
        t = self.theta
        return math.log(t / (t + 2.0)) + np.log(1.0 + t + t * x) - t * x

    def mixture_weights(self):
        t = self.theta
        return ((1.0 + t) / (t + 2.0), 1.0 / (t + 2.0))

    def mean(self) -> float:
        t = self.theta
        return (t + 3.0) / (t * (t + 2.0))


class Lindley(LifetimeDistribution):
    family_name = "lindley"

    def _log_pdf(self, x):
        t = self.theta
        return 2 * math.log(t) - math.log1p(t) + np.log1p(x) - t * x

    def mixture_weights(self):
        t = self.theta
        return (t / (t + 1.0), 1.0 / (t + 1.0))

    def mean(self) -> float:
        t = self.theta
        return (t + 2.0) / (t * (t + 1.0))


class Shanker(LifetimeDistribution):
    family_name = "shanker"

    def _log_pdf(self, x):
        t = self.theta
        return 2 * math.log(t) - math.log1p(t * t) + np.log(t + x) - t * x

    def mixture_weights(self):
        t2 = self.theta**2
        return (t2 / (t2 + 1.0), 1.0 / (t2 + 1.0))

    def mean(self) -> float:
        t = self.theta
        return (t * t + 2.0) / (t * (t * t + 1.0))


class Akash(LifetimeDistribution):
    family_name = "akash"

    def _log_pdf(self, x):
        t = self.theta
        return 3 * math.log(t) - math.log(t * t + 2.0) + np.log1p(x * x) - t * x

    def mixture_weights(self):
        t2 = self.theta**2
        n = t2 + 2.0
        return (t2 / n, 0.0, 2.0 / n)

    def mean(self) -> float:
        t = self.theta
        return (t * t + 6.0) / (t * (t * t + 2.0))


class Sujatha(LifetimeDistribution):
    family_name = "sujatha"

    def _log_pdf(self, x):
        t = self.theta
        return 3 * math.log(t) - math.log(t * t + t + 2.0) + np.log(1.0 + x + x * x) - t * x

    def mixture_weights(self):
        t = self.theta
        n = t * t + t + 2.0
        return (t * t / n, t / n, 2.0 / n)

    def mean(self) -> float:
        t = self.theta
        return (t * t + 2 * t + 6.0) / (t * (t * t + t + 2.0))


class Aradhana(LifetimeDistribution):
    family_name = "aradhana"

    def _log_pdf(self, x):
        t = self.theta
        return 3 * math.log(t) - math.log(t * t + 2 * t + 2.0) + 2 * np.log1p(x) - t * x

    def mixture_weights(self):
        t = self.theta
        n = t * t + 2 * t + 2.0
        return (t * t / n, 2 * t / n, 2.0 / n)

    def mean(self) -> float:
        t = self.theta
        return (t * t + 4 * t + 6.0) / (t * (t * t + 2 * t + 2.0))


#: Families in the row order of the published comparison table.
FAMILIES: dict[str, type[LifetimeDistribution]] = {
    "igarima": IGarima,
    "garima": Garima,
    "aradhana": Aradhana,
    "sujatha": Sujatha,
    "akash": Akash,
    "shanker": Shanker,
    "lindley": Lindley,
}

_ALIASES = {"i-garima": "igarima", "i_garima": "igarima"}


def get_family(name: str) -> type[LifetimeDistribution]:
    key = name.strip().lower()
    key = _ALIASES.get(key, key)
    try:
        return FAMILIES[key]
    except KeyError:
        raise ValueError(
            f"unknown family {name!r}; expected one of {', '.join(FAMILIES)}"
        ) from None


def family_pdf(family: str, theta: float, x):
    return get_family(family)(theta).pdf(x)


def family_cdf(family: str, theta: float, x):
    return get_family(family)(theta).cdf(x)

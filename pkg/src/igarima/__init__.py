"""i-Garima lifetime distribution, six competitor families, and fitting tools."""

__version__ = "0.1.0"

from .competitors import FAMILIES, Akash, Aradhana, Garima, Lindley, Shanker, Sujatha, get_family
from .core import LifetimeDistribution, generic_quantile, sample
from .datasets import Dataset, DataError, builtin, load_csv, write_csv
from .distribution import IGarima, stress_strength
from .inference import FitError, FitResult, compare_models, fit_mle, igarima_score, ks_test

__all__ = [
    "FAMILIES",
    "Akash",
    "Aradhana",
    "DataError",
    "Dataset",
    "FitError",
    "FitResult",
    "Garima",
    "IGarima",
    "LifetimeDistribution",
    "Lindley",
    "Shanker",
    "Sujatha",
    "builtin",
    "compare_models",
    "fit_mle",
    "generic_quantile",
    "get_family",
    "igarima_score",
    "ks_test",
    "load_csv",
    "sample",
    "stress_strength",
    "write_csv",
]

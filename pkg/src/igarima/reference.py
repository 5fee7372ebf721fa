"""Published model-comparison results used as reproduction targets.

Each block lists, per family, the fitted theta, -2 log L, AIC, BIC, the
Kolmogorov-Smirnov statistic and its p-value, as printed (4 significant
decimals at most).

Block-to-dataset assignment is empirical.  Blocks 3 and 4 are printed
under the labels "air conditioning" and "insulating fluid", but their
sample sizes (19 and 30, recovered from BIC - AIC) and fitted values are
reproduced by the insulating-fluid and air-conditioning data
respectively, so the labels are swapped here.
"""

from __future__ import annotations

import math
from typing import NamedTuple

__all__ = ["ADVISORY_CELLS", "TABLE1", "Block", "Row", "implied_sample_size"]


class Row(NamedTuple):
    estimate: float
    neg2_loglik: float
    aic: float
    bic: float
    ks_stat: float
    ks_pvalue: float


class Block(NamedTuple):
    dataset: str
    printed_label: str
    rows: dict[str, Row]


TABLE1: dict[int, Block] = {
    1: Block(
        "vinyl_chloride",
        "vinyl chloride",
        {
            "igarima": Row(0.674, 111.18, 113.18, 114.71, 0.1039, 0.8567),
            "garima": Row(0.723, 111.50, 113.50, 115.03, 0.1135, 0.7731),
            "aradhana": Row(1.133, 116.06, 118.06, 119.59, 0.1695, 0.2826),
            "sujatha": Row(1.146, 115.54, 117.54, 119.07, 0.1640, 0.3196),
            "akash": Row(1.166, 115.15, 117.15, 118.68, 0.1564, 0.3762),
            "shanker": Row(0.853, 112.91, 114.91, 116.44, 0.1308, 0.6062),
            "lindley": Row(0.199, 112.61, 114.61, 116.13, 0.1326, 0.5881),
        },
    ),
    2: Block(
        "bladder_cancer",
        "bladder cancer",
        {
            "igarima": Row(0.143, 825.57, 827.57, 830.42, 0.0768, 0.4374),
            "garima": Row(0.158, 826.49, 828.49, 831.34, 0.0873, 0.2835),
            "aradhana": Row(0.295, 868.28, 870.28, 873.13, 0.1713, 0.0011),
            "sujatha": Row(0.303, 873.22, 875.22, 878.08, 0.1792, 0.0005),
            "akash": Row(0.315, 881.04, 883.04, 885.89, 0.1904, 0.0002),
            "shanker": Row(0.214, 841.68, 843.68, 846.53, 0.1243, 0.0382),
            "lindley": Row(0.199, 833.79, 835.79, 838.64, 0.1114, 0.0832),
        },
    ),
    3: Block(
        "insulating_fluid",
        "air conditioning",
        {
            "igarima": Row(0.089, 140.54, 142.54, 143.49, 0.2770, 0.0883),
            "garima": Row(0.098, 142.10, 144.10, 145.04, 0.3015, 0.0499),
            "aradhana": Row(0.196, 167.37, 169.37, 170.32, 0.4123, 0.0019),
            "sujatha": Row(0.200, 169.22, 171.22, 172.16, 0.4193, 0.0015),
            "akash": Row(0.206, 171.95, 173.95, 174.89, 0.4285, 0.0011),
            "shanker": Row(0.141, 156.18, 158.18, 159.13, 0.3534, 0.0125),
            "lindley": Row(0.131, 151.08, 153.08, 154.03, 0.3462, 0.0154),
        },
    ),
    4: Block(
        "air_conditioning",
        "insulating fluid",
        {
            "igarima": Row(0.022, 306.75, 308.75, 310.15, 0.2400, 0.0631),
            "garima": Row(0.024, 308.73, 310.73, 312.13, 0.2657, 0.0289),
            "aradhana": Row(0.049, 350.55, 352.55, 353.95, 0.4154, 0.0000),
            "sujatha": Row(0.050, 352.47, 354.47, 355.87, 0.4182, 0.0000),
            "akash": Row(0.050, 354.88, 356.88, 358.28, 0.4213, 0.0000),
            "shanker": Row(0.033, 325.74, 327.74, 329.15, 0.3517, 0.0012),
            "lindley": Row(0.033, 323.27, 325.27, 326.67, 0.3452, 0.0016),
        },
    ),
}

#: (block, family, column) cells known to be misprinted; never hard failures.
ADVISORY_CELLS: frozenset[tuple[int, str, str]] = frozenset(
    # Same value as the block-2 entry; a Lindley fit to data with mean 1.88
    # gives theta near 0.82, and the printed -2LL agrees with that fit.
    {(1, "lindley", "estimate")}
)


def implied_sample_size(aic: float, bic: float) -> int:
    """Sample size from ``BIC - AIC = ln(n) - 2`` (one parameter)."""
    return round(math.exp(bic - aic + 2.0))

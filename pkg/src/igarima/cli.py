"""Command-line front end.

::

    igarima fit igarima --data builtin:vinyl_chloride
    igarima compare --data runs.csv --families igarima,lindley --format json
    igarima eval hazard --theta 1 --curve 0 10 100
    igarima sample --theta 1 --n 1000 --seed 7 > draws.csv
    igarima reproduce-table1

Exit codes: 0 success, 1 usage error, 2 data error, 3 numerical failure,
4 reproduction-diff failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass, field
from typing import Any, Callable, Sequence

import numpy as np

from . import __version__
from .competitors import FAMILIES, get_family
from .datasets import DataError, Dataset, builtin, load_csv
from .distribution import IGarima, stress_strength
from .inference import FitError, compare_models, fit_mle
from .reproduce import reproduce_table1
from .special import IntegrationError

EXIT_OK, EXIT_USAGE, EXIT_DATA, EXIT_NUMERIC, EXIT_DIFF = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


@dataclass
class OutputTable:
    """Rows under named columns, rendered as TSV or JSON.

    TSV fixes floats at 4 decimals; JSON keeps full precision.
    """

    columns: list[str]
    rows: list[list[Any]] = field(default_factory=list)

    @staticmethod
    def _cell(v: Any) -> str:
        if v is None:
            return "NA"
        if isinstance(v, bool):
            return str(v).lower()
        if isinstance(v, float):
            return "NA" if math.isnan(v) else f"{v:.4f}"
        return str(v)

    def to_tsv(self) -> str:
        lines = ["\t".join(self.columns)]
        lines += ["\t".join(self._cell(v) for v in row) for row in self.rows]
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        rows = [[None if isinstance(v, float) and math.isnan(v) else v for v in r] for r in self.rows]
        return json.dumps({"columns": self.columns, "rows": rows}, indent=1) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "OutputTable":
        obj = json.loads(text)
        return cls(columns=list(obj["columns"]), rows=[list(r) for r in obj["rows"]])

    def render(self, fmt: str) -> str:
        return self.to_json() if fmt == "json" else self.to_tsv()


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _resolve_data(source: str) -> Dataset:
    if source.startswith("builtin:"):
        return builtin(source)
    return load_csv(source)


def _families(spec: str | None) -> list[str]:
    if not spec:
        return list(FAMILIES)
    out = []
    for name in spec.split(","):
        try:
            out.append(get_family(name).family_name)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    return out


_FIT_COLUMNS = ["dataset", "family", "theta_hat", "neg2_loglik", "aic", "bic", "ks_stat", "ks_pvalue", "n"]


def _fit_rows(name: str, rows) -> list[list[Any]]:
    out = []
    for r in rows:
        if r.ok:
            out.append([name, r.family, r.theta_hat, r.neg2_loglik, r.aic, r.bic, r.ks_stat, r.ks_pvalue, r.n])
        else:
            out.append([name, r.family, None, None, None, None, None, None, r.n])
    return out


def cmd_fit(args) -> OutputTable:
    family = args.family_opt or args.family or "igarima"
    try:
        get_family(family)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    data = _resolve_data(args.data)
    fit = fit_mle(family, data)
    return OutputTable(_FIT_COLUMNS, _fit_rows(data.name, [fit]))


def cmd_compare(args) -> OutputTable:
    families = _families(args.families)
    data = _resolve_data(args.data)
    table = compare_models(data, families)
    out = OutputTable(_FIT_COLUMNS + ["note"])
    for row, r in zip(_fit_rows(data.name, table.rows), table.rows):
        notes = [f"min_{m}" for m in ("aic", "bic", "ks_stat") if r.ok and table.best(m) == r.family]
        out.rows.append(row + [";".join(notes) if r.ok else f"failed: {r.error}"])
    return out


# -- eval -------------------------------------------------------------------

_X_QUANTITIES: dict[str, Callable] = {
    "pdf": lambda d, a, x: d.pdf(x),
    "cdf": lambda d, a, x: d.cdf(x),
    "survival": lambda d, a, x: d.survival(x),
    "hazard": lambda d, a, x: d.hazard(x),
    "mrl": lambda d, a, x: d.mean_residual_life(x),
    "order-pdf": lambda d, a, x: d.order_stat_pdf(_need(a, "r", int), _need(a, "m", int), x),
    "order-cdf": lambda d, a, x: d.order_stat_cdf(_need(a, "r", int), _need(a, "m", int), x),
}
_P_QUANTITIES: dict[str, Callable] = {
    "quantile": lambda d, a, p: d.quantile(p),
    "lorenz": lambda d, a, p: d.lorenz(p),
    "bonferroni": lambda d, a, p: d.bonferroni(p),
}
_GENERIC_OK = {"pdf", "cdf", "survival", "hazard", "quantile", "mean"}


def _scalar_quantities(d, a) -> dict[str, Callable[[], tuple[list[str], list[Any]]]]:
    return {
        "mean": lambda: (["mean"], [d.mean()]),
        "raw-moment": lambda: (["r", "raw_moment"], [_need(a, "r", int), d.raw_moment(_need(a, "r", int))]),
        "central-moments": lambda: (["mean", "mu2", "mu3", "mu4"], list(d.central_moments())),
        "shape": lambda: (
            ["cv", "skewness", "kurtosis", "index_of_dispersion"],
            [getattr(d.shape_measures(), k) for k in ("cv", "skewness", "kurtosis", "index_of_dispersion")],
        ),
        "mgf": lambda: (["t", "mgf"], [_need(a, "t", float), d.mgf(_need(a, "t", float))]),
        "cumulant": lambda: (["r", "cumulant"], [_need(a, "r", int), d.cumulant(_need(a, "r", int))]),
        "gini": lambda: (["closed", "numeric"], list(d.gini())),
        "renyi": lambda: (["eta", "renyi"], [_need(a, "eta", float), d.renyi_entropy(_need(a, "eta", float))]),
        "shannon": lambda: (["shannon"], [d.shannon_entropy()]),
    }


QUANTITIES = sorted([*_X_QUANTITIES, *_P_QUANTITIES, "mean", "raw-moment", "central-moments", "shape",
                     "mgf", "cumulant", "gini", "renyi", "shannon", "stress-strength"])


def _need(args, name: str, kind=float):
    v = getattr(args, name)
    if v is None:
        raise UsageError(f"--{name} is required for this quantity")
    if kind is int and int(v) != v:
        raise UsageError(f"--{name} must be an integer")
    return kind(v)


def _curve_points(args) -> np.ndarray:
    x0, x1, steps = args.curve
    if int(steps) != steps or steps < 1:
        raise UsageError("--curve steps must be a positive integer")
    return np.linspace(x0, x1, int(steps) + 1)


def cmd_eval(args) -> OutputTable:
    q = args.quantity
    if q == "stress-strength":
        t1, t2 = _need(args, "theta1"), _need(args, "theta2")
        return OutputTable(["theta1", "theta2", "R"], [[t1, t2, stress_strength(t1, t2)]])
    family = args.family or "igarima"
    if family != "igarima" and q not in _GENERIC_OK:
        raise UsageError(f"{q!r} is only available for the i-Garima family")
    dist = get_family(family)(_need(args, "theta"))
    if q in _X_QUANTITIES or q in _P_QUANTITIES:
        fn = _X_QUANTITIES.get(q) or _P_QUANTITIES[q]
        var = "x" if q in _X_QUANTITIES else "p"
        if args.curve is not None:
            pts = _curve_points(args)
        else:
            pts = np.array([_need(args, var)])
        return OutputTable([var, q], [[float(v), float(fn(dist, args, float(v)))] for v in pts])
    scalar = _scalar_quantities(dist, args)
    cols, vals = scalar[q]()
    return OutputTable(["theta", *cols], [[dist.theta, *vals]])


def cmd_sample(args) -> str:
    family = args.family_opt or args.family or "igarima"
    dist = get_family(family)(_need(args, "theta"))
    n = args.n
    if n is None or n < 1:
        raise UsageError("--n must be a positive integer")
    draws = dist.sample(n, seed=args.seed)
    return "value\n" + "".join(f"{v!r}\n" for v in draws.tolist())


def cmd_reproduce(args) -> tuple[OutputTable, int]:
    overrides = {}
    for spec in args.replace or []:
        name, _, path = spec.partition("=")
        if not path:
            raise UsageError(f"--replace expects NAME=PATH, got {spec!r}")
        overrides[name] = load_csv(path, name=name)
    report = reproduce_table1(overrides)
    out = OutputTable(["block", "dataset", "family", "column", "printed", "computed", "diff", "tolerance", "status"])
    for c in report.cells:
        out.rows.append([c.block, c.dataset, c.family, c.column, c.printed, c.computed, c.diff, c.tolerance, c.status])
    n_fail = len(report.failures())
    print(
        f"{len(report.cells)} cells, {n_fail} failed"
        f" ({len(report.failures('igarima'))} in i-Garima rows)",
        file=sys.stderr,
    )
    return out, EXIT_OK if report.igarima_ok else EXIT_DIFF


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="igarima", description="i-Garima lifetime distribution toolkit")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def fmt(p):
        p.add_argument("--format", choices=("tsv", "json"), default="tsv", help="output format (default tsv)")

    p = sub.add_parser("fit", help="fit one family by maximum likelihood")
    p.add_argument("family", nargs="?", help=f"family tag: {', '.join(FAMILIES)}")
    p.add_argument("--family", dest="family_opt", help="family tag (alternative to the positional)")
    p.add_argument("--data", required=True, help="builtin:<name> or path to a CSV file")
    fmt(p)

    p = sub.add_parser("compare", help="fit several families and compare")
    p.add_argument("--data", required=True, help="builtin:<name> or path to a CSV file")
    p.add_argument("--families", help="comma-separated family tags (default: all seven)")
    fmt(p)

    p = sub.add_parser("eval", help="evaluate a distributional quantity")
    p.add_argument("quantity", choices=QUANTITIES)
    p.add_argument("--family", help="family for pdf/cdf/survival/hazard/quantile/mean (default igarima)")
    p.add_argument("--theta", type=float)
    p.add_argument("--theta1", type=float)
    p.add_argument("--theta2", type=float)
    p.add_argument("--x", type=float)
    p.add_argument("--p", type=float)
    p.add_argument("--eta", type=float)
    p.add_argument("--t", type=float, help="argument of the mgf")
    p.add_argument("--r", type=float, help="moment/cumulant order or order-statistic rank")
    p.add_argument("--m", type=float, help="sample size for order statistics")
    p.add_argument("--curve", nargs=3, type=float, metavar=("X0", "X1", "STEPS"),
                   help="evaluate on STEPS equal steps from X0 to X1 (x or p axis)")
    fmt(p)

    p = sub.add_parser("sample", help="draw a random sample as CSV")
    p.add_argument("family", nargs="?", help="family tag (default igarima)")
    p.add_argument("--family", dest="family_opt")
    p.add_argument("--theta", type=float, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("reproduce-table1", help="refit all datasets and diff against the published table")
    p.add_argument("--replace", action="append", metavar="NAME=PATH",
                   help="substitute a bundled dataset (negative controls)")
    fmt(p)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code = EXIT_OK
        if args.command == "sample":
            sys.stdout.write(cmd_sample(args))
            return EXIT_OK
        if args.command == "fit":
            table = cmd_fit(args)
        elif args.command == "compare":
            table = cmd_compare(args)
        elif args.command == "eval":
            table = cmd_eval(args)
        else:
            table, code = cmd_reproduce(args)
        sys.stdout.write(table.render(args.format))
        return code
    except UsageError as exc:
        print(f"igarima: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DataError as exc:
        print(f"igarima: data error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except (FitError, IntegrationError, ArithmeticError) as exc:
        print(f"igarima: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except ValueError as exc:
        print(f"igarima: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

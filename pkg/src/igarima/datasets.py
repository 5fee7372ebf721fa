"""Lifetime datasets: the four bundled benchmarks and CSV ingestion.

CSV format: UTF-8, LF or CRLF line endings, one observation per row, an
optional ``value`` header, ``#`` comment lines and blank lines ignored.
"""

from __future__ import annotations

import hashlib
import math
import os
from dataclasses import dataclass, field
from importlib import resources
from typing import IO, Iterable

import numpy as np

from .reference import TABLE1, implied_sample_size

__all__ = [
    "BUILTIN_NAMES",
    "DataError",
    "Dataset",
    "builtin",
    "load_csv",
    "manifest",
    "parse_csv",
    "write_csv",
]

BUILTIN_NAMES = ("vinyl_chloride", "bladder_cancer", "insulating_fluid", "air_conditioning")


class DataError(ValueError):
    """Bad input data: unreadable, malformed, or failing validation."""


@dataclass(frozen=True)
class Dataset:
    """A validated sample of strictly positive lifetimes."""

    name: str
    values: tuple[float, ...]
    source: str = ""
    units: str = ""
    _array: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        vals = tuple(float(v) for v in self.values)
        if len(vals) < 2:
            raise DataError(f"dataset {self.name!r} needs at least 2 values, got {len(vals)}")
        for i, v in enumerate(vals):
            if not (math.isfinite(v) and v > 0):
                raise DataError(f"dataset {self.name!r}: value #{i + 1} = {v!r} is not a positive finite number")
        arr = np.array(vals)
        arr.setflags(write=False)
        object.__setattr__(self, "values", vals)
        object.__setattr__(self, "_array", arr)

    @property
    def n(self) -> int:
        return len(self.values)

    @property
    def array(self) -> np.ndarray:
        """Read-only float array view of the values."""
        return self._array

    @property
    def mean(self) -> float:
        return float(np.mean(self._array))

    def __len__(self) -> int:
        return self.n


def parse_csv(lines: Iterable[str], name: str = "data", source: str = "") -> Dataset:
    values: list[float] = []
    header_allowed = True
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip().lstrip("﻿")
        if not line or line.startswith("#"):
            continue
        if header_allowed and line.lower() == "value":
            header_allowed = False
            continue
        header_allowed = False
        try:
            v = float(line)
        except ValueError:
            raise DataError(f"{source or name}: line {lineno}: not a number: {line!r}") from None
        if not math.isfinite(v):
            raise DataError(f"{source or name}: line {lineno}: non-finite value {line!r}")
        if v <= 0:
            raise DataError(f"{source or name}: line {lineno}: lifetimes must be > 0, got {line!r}")
        values.append(v)
    if not values:
        raise DataError(f"{source or name}: no data values")
    return Dataset(name=name, values=tuple(values), source=source)


def load_csv(path: str | os.PathLike, name: str | None = None) -> Dataset:
    """Read and validate a one-column CSV of lifetimes."""
    path = os.fspath(path)
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise DataError(f"cannot read {path}: {exc.strerror or exc}") from exc
    except UnicodeDecodeError as exc:
        raise DataError(f"{path}: not valid UTF-8") from exc
    stem = os.path.splitext(os.path.basename(path))[0]
    return parse_csv(lines, name=name or stem, source=path)


def write_csv(dataset: Dataset, dest: str | os.PathLike | IO[str]) -> None:
    """Write ``dataset`` so that :func:`load_csv` recovers identical floats."""
    text = "value\n" + "".join(f"{v!r}\n" for v in dataset.values)
    if hasattr(dest, "write"):
        dest.write(text)
    else:
        with open(os.fspath(dest), "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _data_dir():
    return resources.files("igarima") / "data"


def manifest() -> dict[str, dict[str, str]]:
    """Parsed ``data/MANIFEST``: name -> {n, units, sha256, source}."""
    out = {}
    text = (_data_dir() / "MANIFEST").read_text(encoding="utf-8")
    for line in text.splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        name, n, units, digest, source = line.split("\t")
        out[name] = {"n": n, "units": units, "sha256": digest, "source": source}
    return out


def _expected_n(name: str) -> int | None:
    for block in TABLE1.values():
        if block.dataset == name:
            row = block.rows["igarima"]
            return implied_sample_size(row.aic, row.bic)
    return None


def builtin(name: str) -> Dataset:
    """One of the four bundled benchmark datasets.

    The file checksum is verified against the manifest, and the sample size
    against the one implied by the published AIC/BIC pair.
    """
    key = name.removeprefix("builtin:")
    if key not in BUILTIN_NAMES:
        raise DataError(f"unknown builtin dataset {name!r}; expected one of {', '.join(BUILTIN_NAMES)}")
    entry = manifest()[key]
    raw = (_data_dir() / f"{key}.csv").read_bytes()
    digest = hashlib.sha256(raw).hexdigest()
    if digest != entry["sha256"]:
        raise DataError(f"checksum mismatch for builtin {key!r}: {digest} != {entry['sha256']}")
    ds = parse_csv(raw.decode("utf-8").splitlines(), name=key, source=entry["source"])
    ds = Dataset(name=key, values=ds.values, source=entry["source"], units=entry["units"])
    if ds.n != int(entry["n"]) or ds.n != _expected_n(key):
        raise DataError(f"builtin {key!r} has n={ds.n}, expected {entry['n']}")
    return ds

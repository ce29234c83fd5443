"""Bundled knot table: PD codes, curated Seifert matrices, surface data.

CSV format: header ``name,pd,seifert,lin_ref,det``; the seifert field holds
semicolon-separated rows of space-separated integers; an empty field means
absent.  (The unknot's planar-diagram code is the empty string, which CSV
cannot distinguish from an absent field, so its pd cell holds a single
space; the PD grammar treats whitespace-only input as the unknot.)

The environment variable ``TWISTSPIN_TABLE`` overrides the bundled table
path.  Surface-presentation records live in a companion text file, one
block per knot::

    knot 3_1
    genus 1
    alpha -1 2
    alpha -2
    beta -1
    beta 1 -2

with 2g alpha lines then 2g beta lines of signed generator indices.
"""

from __future__ import annotations

import csv
import os
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .errors import InputError, MalformedToken
from .invariants import (
    SeifertMatrix,
    alexander_polynomial,
    bareiss_determinant,
    determinant_of_poly,
    determinant_of_seifert,
    wirtinger,
)
from .metabelian import character_condition_matrix
from .notation import parse_pd
from .spinning import LinPresentation

TABLE_ENV = "TWISTSPIN_TABLE"


@dataclass(frozen=True)
class KnotRecord:
    name: str
    pd: str | None
    seifert: SeifertMatrix | None
    lin: LinPresentation | None
    det_expected: int | None

    def __post_init__(self):
        if self.pd is None and self.seifert is None:
            raise InputError(f"{self.name}: need a PD code or a Seifert matrix")


def _bundled(name: str) -> Path:
    return Path(resources.files("twistspin") / "data" / name)


def parse_seifert_text(text: str) -> SeifertMatrix:
    rows = []
    for part in text.strip().split(";"):
        part = part.strip()
        if not part:
            continue
        try:
            rows.append(tuple(int(tok) for tok in part.split()))
        except ValueError:
            raise MalformedToken(f"bad Seifert matrix row {part!r}") from None
    return SeifertMatrix(tuple(rows))


def load_lin_data(path: Path | None = None) -> dict[str, LinPresentation]:
    path = path or _bundled("lin_presentations.txt")
    records: dict[str, LinPresentation] = {}
    name = None
    genus = None
    alphas: list[tuple[int, ...]] = []
    betas: list[tuple[int, ...]] = []

    def flush():
        if name is None:
            return
        if genus is None:
            raise MalformedToken(f"{name}: missing genus line")
        records[name] = LinPresentation(genus, tuple(alphas), tuple(betas))

    for raw in Path(path).read_text().splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, *rest = line.split()
        if key == "knot":
            flush()
            name = rest[0]
            genus = None
            alphas, betas = [], []
        elif key == "genus":
            genus = int(rest[0])
        elif key == "alpha":
            alphas.append(tuple(int(t) for t in rest))
        elif key == "beta":
            betas.append(tuple(int(t) for t in rest))
        else:
            raise MalformedToken(f"unexpected line in surface data: {line!r}")
    flush()
    return records


def load_table(path: str | os.PathLike | None = None) -> list[KnotRecord]:
    """Load the knot table, honoring the TWISTSPIN_TABLE override."""
    if path is None:
        path = os.environ.get(TABLE_ENV) or _bundled("knots.csv")
    lin_data = load_lin_data()
    records = []
    try:
        with open(path, newline="") as fh:
            reader = csv.DictReader(fh)
            expected = ["name", "pd", "seifert", "lin_ref", "det"]
            if reader.fieldnames != expected:
                raise MalformedToken(
                    f"table header must be {','.join(expected)}, got {reader.fieldnames}")
            for row in reader:
                if row["name"] is None or any(v is None for v in row.values()):
                    raise MalformedToken(f"short row in table: {row}")
                name = row["name"].strip()
                pd = row["pd"] if row["pd"] else None
                seifert = parse_seifert_text(row["seifert"]) if row["seifert"].strip() else None
                lin = None
                if row["lin_ref"].strip():
                    ref = row["lin_ref"].strip()
                    if ref not in lin_data:
                        raise MalformedToken(f"{name}: unknown surface-data reference {ref!r}")
                    lin = lin_data[ref]
                det = int(row["det"].strip()) if row["det"].strip() else None
                records.append(KnotRecord(name, pd, seifert, lin, det))
    except OSError as exc:
        raise InputError(f"cannot read table {path}: {exc}") from None
    return records


def find_knot(name: str, path=None) -> KnotRecord:
    for rec in load_table(path):
        if rec.name == name:
            return rec
    raise InputError(f"knot {name!r} not in the table")


def verify_record(rec: KnotRecord) -> dict:
    """Cross-check every data route the record carries.

    Computes the determinant through each route (Fox calculus on the PD's
    Wirtinger presentation, det(V + V^t) of the Seifert matrix, |det(A+B)|
    of the surface words) and flags any disagreement, including with the
    stated expected determinant.  Surface words must also satisfy
    |det(A - B)| = 1, the hallmark of genuine dual push-off data.
    """
    routes: dict[str, int | None] = {"fox": None, "seifert": None, "lin": None}
    problems: list[str] = []
    if rec.pd is not None:
        delta = alexander_polynomial(wirtinger(parse_pd(rec.pd)))
        routes["fox"] = determinant_of_poly(delta)
    if rec.seifert is not None:
        routes["seifert"] = determinant_of_seifert(rec.seifert)
    if rec.lin is not None:
        routes["lin"] = abs(bareiss_determinant(character_condition_matrix(rec.lin)))
        a, b = rec.lin.exponent_matrices()
        skew = [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]
        if abs(bareiss_determinant(skew)) != 1:
            problems.append("surface words fail |det(A - B)| = 1")
    values = {v for v in routes.values() if v is not None}
    if len(values) > 1:
        problems.append(f"determinant routes disagree: {routes}")
    if rec.det_expected is not None and values and rec.det_expected not in values:
        problems.append(f"expected determinant {rec.det_expected}, computed {sorted(values)}")
    det = rec.det_expected if rec.det_expected is not None else (min(values) if values else None)
    return {
        "name": rec.name,
        "determinant": det,
        "routes": routes,
        "ok": not problems,
        "problems": problems,
    }

"""MTF versus IMTF comparison runs and their CSV output."""
from __future__ import annotations

import csv
import io
import statistics
from collections.abc import Iterable, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from decimal import ROUND_HALF_UP, Decimal
from pathlib import Path

from .algorithms import gain, gain_fraction, run_imtf, run_mtf
from .charts import EmptyInput, emit_chart
from .core import CostModel, RequestSequence
from .datagen import NUMERIC_BASES, GenSpec, build_list, gen_sequence, read_sequence

CSV_HEADER = ("N", "L", "C_MTF", "C_IMTF", "g_percent")
SUMMARY_HEADER = ("family", "N", "trials", "L_mean", "C_MTF_mean", "C_IMTF_mean", "g_mean", "g_std")

TABLE1_N = tuple(range(100, 1001, 100))
TABLE2_N = (50, 100, 200)
TABLE2_BASES = (16, 10, 8, 2)
# rows of a table get seeds this far apart so trials (seed + t) never collide
ROW_SEED_STRIDE = 1000

__all__ = [
    "CSV_HEADER", "CellSummary", "EmptyInput", "ExperimentRow", "ExperimentSpec", "FileRow",
    "emit_chart", "emit_csv", "emit_summary_csv", "format_gain", "load_spec", "parse_csv",
    "parse_spec", "run_experiment", "run_pair", "summarize", "table1_spec", "table2_spec",
]


@dataclass(frozen=True)
class FileRow:
    """A dataset row read from a sequence file instead of generated."""

    path: str
    family: str = "alpha"
    base: int | None = None

    @property
    def label(self) -> str:
        return Path(self.path).name


@dataclass
class ExperimentSpec:
    rows: list[GenSpec | FileRow]
    model: CostModel = CostModel.FULL
    # each extra trial reruns a generated row with seed + trial
    trials: int = 1
    jobs: int = 1

    def __post_init__(self):
        if not self.rows:
            raise ValueError("an experiment needs at least one row")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")


@dataclass(frozen=True)
class ExperimentRow:
    n: int
    l: int
    c_mtf: int
    c_imtf: int
    g: float
    family: str = ""
    seed: int | None = None
    cell: int = 0
    trial: int = 0

    @property
    def g_text(self) -> str:
        return format_gain(self.c_mtf, self.c_imtf)


def format_gain(c_mtf: int, c_imtf: int) -> str:
    """Gain to two decimals, ties rounded half-up, e.g. ``"19.03"``."""
    frac = gain_fraction(c_mtf, c_imtf)
    exact = Decimal(frac.numerator) / Decimal(frac.denominator)
    return str(exact.quantize(Decimal("0.01"), rounding=ROUND_HALF_UP))


def run_pair(lst, seq, model: CostModel = CostModel.FULL, **meta) -> ExperimentRow:
    """Run both algorithms on the same list and sequence."""
    mtf = run_mtf(lst, seq, model)
    imtf = run_imtf(lst, seq, model)
    return ExperimentRow(
        n=len(mtf.per_access_costs),
        l=len(mtf.final_list),
        c_mtf=mtf.total_cost,
        c_imtf=imtf.total_cost,
        g=gain(mtf.total_cost, imtf.total_cost),
        **meta,
    )


def _materialize(row: GenSpec | FileRow) -> RequestSequence:
    if isinstance(row, GenSpec):
        return gen_sequence(row)
    return read_sequence(row.path, row.family, row.base).sequence


def _task(args) -> ExperimentRow:
    row, model, cell, trial = args
    seq = _materialize(row)
    seed = row.seed if isinstance(row, GenSpec) else None
    return run_pair(build_list(seq), seq, model, family=row.label, seed=seed, cell=cell, trial=trial)


def _tasks(spec: ExperimentSpec):
    for cell, row in enumerate(spec.rows):
        if isinstance(row, GenSpec):
            for t in range(spec.trials):
                yield row.with_seed(row.seed + t), spec.model, cell, t
        else:
            yield row, spec.model, cell, 0


def run_experiment(spec: ExperimentSpec) -> list[ExperimentRow]:
    """One result per (row, trial), in spec order regardless of `jobs`."""
    tasks = list(_tasks(spec))
    if spec.jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=spec.jobs) as pool:
            return list(pool.map(_task, tasks))
    return [_task(t) for t in tasks]


@dataclass
class CellSummary:
    family: str
    n: int
    trials: int
    l: float
    c_mtf: float
    c_imtf: float
    g: float
    g_std: float
    gains: list[float] = field(repr=False, default_factory=list)


def summarize(rows: Iterable[ExperimentRow]) -> list[CellSummary]:
    """Collapse trials of each spec row into mean and sample stddev."""
    cells: dict[tuple, list[ExperimentRow]] = {}
    for row in rows:
        cells.setdefault((row.cell, row.family, row.n), []).append(row)
    out = []
    for group in cells.values():
        gains = [r.g for r in group]
        out.append(CellSummary(
            family=group[0].family,
            n=group[0].n,
            trials=len(group),
            l=statistics.fmean(r.l for r in group),
            c_mtf=statistics.fmean(r.c_mtf for r in group),
            c_imtf=statistics.fmean(r.c_imtf for r in group),
            g=statistics.fmean(gains),
            g_std=statistics.stdev(gains) if len(gains) > 1 else 0.0,
            gains=gains,
        ))
    return out


def emit_csv(rows: Sequence[ExperimentRow]) -> str:
    if not rows:
        raise EmptyInput("no rows to write")
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in rows:
        writer.writerow((r.n, r.l, r.c_mtf, r.c_imtf, r.g_text))
    return buf.getvalue()


def emit_summary_csv(cells: Sequence[CellSummary]) -> str:
    if not cells:
        raise EmptyInput("no cells to write")
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(SUMMARY_HEADER)
    for c in cells:
        writer.writerow((c.family, c.n, c.trials, f"{c.l:.2f}", f"{c.c_mtf:.2f}",
                         f"{c.c_imtf:.2f}", f"{c.g:.2f}", f"{c.g_std:.2f}"))
    return buf.getvalue()


def parse_csv(text: str) -> list[ExperimentRow]:
    reader = csv.reader(io.StringIO(text))
    header = tuple(next(reader))
    if header != CSV_HEADER:
        raise ValueError(f"unexpected CSV header {header}")
    rows = []
    for n, l, c_mtf, c_imtf, g in reader:
        rows.append(ExperimentRow(int(n), int(l), int(c_mtf), int(c_imtf), float(g), family=f"L={l}"))
    return rows


def parse_spec(text: str) -> list[GenSpec | FileRow]:
    """Read spec rows, one per line.

    Formats::

        alpha <N> <seed>
        numeric <base> <N> <seed>
        file <path> [alpha | numeric <base>]

    Blank lines and ``#`` comments are skipped.
    """
    rows: list[GenSpec | FileRow] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            kind = parts[0]
            if kind == "alpha" and len(parts) == 3:
                rows.append(GenSpec("alpha", int(parts[1]), int(parts[2])))
            elif kind == "numeric" and len(parts) == 4:
                rows.append(GenSpec("numeric", int(parts[2]), int(parts[3]), base=int(parts[1])))
            elif kind == "file" and len(parts) == 2:
                rows.append(FileRow(parts[1]))
            elif kind == "file" and len(parts) == 3 and parts[2] == "alpha":
                rows.append(FileRow(parts[1]))
            elif kind == "file" and len(parts) == 4 and parts[2] == "numeric":
                rows.append(FileRow(parts[1], "numeric", int(parts[3])))
            else:
                raise ValueError("unrecognised row")
        except ValueError as exc:
            raise ValueError(f"spec line {lineno}: {raw.strip()!r}: {exc}") from None
    return rows


def load_spec(path: str | Path) -> list[GenSpec | FileRow]:
    return parse_spec(Path(path).read_text(encoding="utf-8"))


def table1_spec(seed: int = 0, trials: int = 1, model: CostModel = CostModel.FULL) -> ExperimentSpec:
    """Alphabetic/special-character rows for N = 100, 200, ..., 1000."""
    rows = [GenSpec("alpha", n, seed + ROW_SEED_STRIDE * k) for k, n in enumerate(TABLE1_N)]
    return ExperimentSpec(rows, model, trials)


def table2_spec(seed: int = 0, trials: int = 1, model: CostModel = CostModel.FULL) -> ExperimentSpec:
    """Numeric rows ordered as the published table: by N, then base 16, 10, 8, 2."""
    assert set(TABLE2_BASES) == set(NUMERIC_BASES)
    cells = [(n, b) for n in TABLE2_N for b in TABLE2_BASES]
    rows = [GenSpec("numeric", n, seed + ROW_SEED_STRIDE * k, base=b) for k, (n, b) in enumerate(cells)]
    return ExperimentSpec(rows, model, trials)

"""List accessing algorithms: MTF, lookahead IMTF, a static baseline and an
exhaustive move/stay oracle for small instances."""
from __future__ import annotations

import enum
import os
from collections.abc import Iterable
from fractions import Fraction

from .core import (
    CostModel,
    CostReport,
    ListConfiguration,
    RequestSequence,
    Symbol,
    access_cost,
    as_list,
    as_sequence,
)

DEFAULT_ORACLE_MAX_N = 16
ORACLE_MAX_N_ENV = "LISTACCESS_ORACLE_MAX_N"


class InstanceTooLarge(ValueError):
    pass


class AlgorithmId(enum.Enum):
    MTF = "mtf"
    IMTF = "imtf"
    STATIC = "static"
    ORACLE = "oracle"


def lookahead_hit(seq: RequestSequence | Iterable[Symbol], current_index: int, position: int) -> bool:
    """True if the request at `current_index` recurs in the next `position - 1` requests.

    `current_index` is 1-based; the window is cut short at the end of the
    sequence and is empty when the element was already in front.
    """
    seq = as_sequence(seq)
    if not 1 <= current_index <= len(seq):
        raise IndexError(f"request index {current_index} outside 1..{len(seq)}")
    if position <= 1:
        return False
    return seq[current_index - 1] in seq.window(current_index + 1, position - 1)


def _run(lst, seq, model, should_move) -> CostReport:
    lst = as_list(lst).copy()
    seq = as_sequence(seq)
    seq.validate_against(lst)
    costs = []
    moves = 0
    for index, symbol in enumerate(seq, start=1):
        position = lst.position(symbol)
        costs.append(access_cost(position, model))
        if position > 1 and should_move(seq, index, position):
            lst.promote(position)
            moves += 1
    return CostReport(costs, 0, moves, sum(costs), lst)


def run_mtf(lst, seq, model: CostModel = CostModel.FULL) -> CostReport:
    """Move every accessed element to the front.

    `move_count` counts every access, including ones already at the front
    where the move is a no-op.
    """
    report = _run(lst, seq, model, lambda seq, index, position: True)
    report.move_count = report.n
    return report


def run_imtf(lst, seq, model: CostModel = CostModel.FULL) -> CostReport:
    return _run(lst, seq, model, lookahead_hit)


def run_static(lst, seq, model: CostModel = CostModel.FULL) -> CostReport:
    return _run(lst, seq, model, lambda seq, index, position: False)


def oracle_limit() -> int:
    value = os.environ.get(ORACLE_MAX_N_ENV)
    return int(value) if value else DEFAULT_ORACLE_MAX_N


def run_bruteforce_oracle(
    lst, seq, model: CostModel = CostModel.FULL, max_n: int | None = None
) -> CostReport:
    """Cheapest schedule over every per-access move-to-front/stay choice.

    Only free exchanges are considered. Identical (index, list) states are
    solved once, which keeps the search exact while avoiding the full 2**N
    blow-up on repetitive inputs. Ties prefer staying.
    """
    lst = as_list(lst)
    seq = as_sequence(seq)
    limit = oracle_limit() if max_n is None else max_n
    if len(seq) > limit:
        raise InstanceTooLarge(f"N={len(seq)} exceeds oracle limit {limit}")
    seq.validate_against(lst)

    memo: dict[tuple[int, tuple], tuple[int, tuple[bool, ...]]] = {}

    def best(k: int, items: tuple) -> tuple[int, tuple[bool, ...]]:
        if k == len(seq):
            return 0, ()
        key = (k, items)
        if key in memo:
            return memo[key]
        idx = items.index(seq[k])
        here = access_cost(idx + 1, model)
        stay_cost, stay_plan = best(k + 1, items)
        result = (here + stay_cost, (False,) + stay_plan)
        if idx > 0:
            moved = (items[idx],) + items[:idx] + items[idx + 1:]
            move_cost, move_plan = best(k + 1, moved)
            if here + move_cost < result[0]:
                result = (here + move_cost, (True,) + move_plan)
        memo[key] = result
        return result

    total, plan = best(0, lst.items)

    final = lst.copy()
    costs = []
    for symbol, move in zip(seq, plan):
        position = final.position(symbol)
        costs.append(access_cost(position, model))
        if move:
            final.promote(position)
    assert sum(costs) == total
    return CostReport(costs, 0, sum(plan), total, final)


_RUNNERS = {
    AlgorithmId.MTF: run_mtf,
    AlgorithmId.IMTF: run_imtf,
    AlgorithmId.STATIC: run_static,
    AlgorithmId.ORACLE: run_bruteforce_oracle,
}


def run(algorithm: AlgorithmId | str, lst, seq, model: CostModel = CostModel.FULL) -> CostReport:
    return _RUNNERS[AlgorithmId(algorithm)](lst, seq, model)


def gain_fraction(c_mtf: int, c_imtf: int) -> Fraction:
    if c_mtf == 0:
        raise ZeroDivisionError("gain is undefined when the MTF cost is 0")
    return Fraction(c_mtf - c_imtf, c_mtf) * 100


def gain(c_mtf: int, c_imtf: int) -> float:
    """Percentage saved by IMTF relative to MTF, ``(c_mtf - c_imtf) / c_mtf * 100``.

    Positive when IMTF is cheaper.
    """
    return float(gain_fraction(c_mtf, c_imtf))

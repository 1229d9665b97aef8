"""Seeded request-sequence generators and list construction."""
from __future__ import annotations

import random
import string
from collections import Counter
from collections.abc import Iterable
from dataclasses import dataclass, field
from pathlib import Path

from .core import ListConfiguration, RequestSequence, Symbol, as_sequence

SPECIAL_CHARACTERS = string.punctuation[:30]
ALPHA_SPECIAL = string.ascii_lowercase + string.ascii_uppercase + string.digits + SPECIAL_CHARACTERS
NUMERIC_BASES = (2, 8, 10, 16)
_DIGITS = string.digits + "ABCDEF"


class EmptySequence(ValueError):
    pass


def numeric_alphabet(base: int) -> str:
    if base not in NUMERIC_BASES:
        raise ValueError(f"unsupported base {base}; expected one of {NUMERIC_BASES}")
    return _DIGITS[:base]


@dataclass(frozen=True)
class GenSpec:
    """One dataset draw: `family` is ``"alpha"`` or ``"numeric"`` (with `base`)."""

    family: str
    n: int
    seed: int = 0
    base: int | None = None

    def __post_init__(self):
        if self.family not in ("alpha", "numeric"):
            raise ValueError(f"unknown family {self.family!r}")
        if self.family == "numeric":
            numeric_alphabet(self.base)
        elif self.base is not None:
            raise ValueError("base only applies to the numeric family")
        if self.n < 1:
            raise ValueError("n must be at least 1")

    @property
    def alphabet(self) -> str:
        return ALPHA_SPECIAL if self.family == "alpha" else numeric_alphabet(self.base)

    @property
    def label(self) -> str:
        return "alpha" if self.family == "alpha" else f"base{self.base}"

    def with_seed(self, seed: int) -> GenSpec:
        return GenSpec(self.family, self.n, seed, self.base)


def gen_sequence(spec: GenSpec) -> RequestSequence:
    """Draw `spec.n` symbols uniformly and independently from the family alphabet."""
    rng = random.Random(spec.seed)
    return RequestSequence(rng.choices(spec.alphabet, k=spec.n))


def build_list(seq: RequestSequence | Iterable[Symbol]) -> ListConfiguration:
    """Distinct symbols of `seq` in order of first occurrence."""
    distinct = list(dict.fromkeys(seq))
    if not distinct:
        raise EmptySequence("cannot build a list from an empty sequence")
    return ListConfiguration(distinct)


@dataclass
class LocalityStats:
    distinct: int
    frequencies: dict = field(repr=False)
    # requests strictly between consecutive accesses to the same symbol;
    # None when no symbol repeats
    mean_reuse_distance: float | None


def locality_stats(seq: RequestSequence | Iterable[Symbol]) -> LocalityStats:
    seq = as_sequence(seq)
    if not seq:
        raise EmptySequence("no statistics for an empty sequence")
    last_seen: dict = {}
    gaps = []
    for index, symbol in enumerate(seq):
        if symbol in last_seen:
            gaps.append(index - last_seen[symbol] - 1)
        last_seen[symbol] = index
    freq = dict(Counter(seq))
    mean = sum(gaps) / len(gaps) if gaps else None
    return LocalityStats(len(freq), freq, mean)


@dataclass
class LoadedSequence:
    sequence: RequestSequence
    skipped: int


def parse_sequence(text: str, family: str = "alpha", base: int | None = None) -> LoadedSequence:
    """Turn raw text into requests, one per character.

    Newlines are ignored. Characters outside the family alphabet are dropped
    and counted. Hex digits are accepted in either case.
    """
    if family == "alpha":
        alphabet = ALPHA_SPECIAL
    elif family == "numeric":
        alphabet = numeric_alphabet(base)
        text = text.upper()
    else:
        raise ValueError(f"unknown family {family!r}")
    allowed = set(alphabet)
    kept = []
    skipped = 0
    for ch in text:
        if ch in "\r\n":
            continue
        if ch in allowed:
            kept.append(ch)
        else:
            skipped += 1
    return LoadedSequence(RequestSequence(kept), skipped)


def read_sequence(path: str | Path, family: str = "alpha", base: int | None = None) -> LoadedSequence:
    return parse_sequence(Path(path).read_text(encoding="utf-8"), family, base)


def write_sequence(seq: RequestSequence | Iterable[Symbol], path: str | Path) -> None:
    Path(path).write_text("".join(str(s) for s in seq) + "\n", encoding="utf-8")

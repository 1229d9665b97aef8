"""Self-organizing list and the cost rules shared by every accessing algorithm.

Positions are 1-based everywhere in the public interface.
"""
from __future__ import annotations

import enum
from collections.abc import Hashable, Iterable, Iterator, Sequence
from dataclasses import dataclass

Symbol = Hashable


class SymbolNotInList(KeyError):
    """A request names a symbol the list does not contain."""


class PositionOutOfRange(IndexError):
    pass


class CostModel(enum.Enum):
    FULL = "full"
    PARTIAL = "partial"

    def cost(self, position: int) -> int:
        return access_cost(position, self)


class ListConfiguration:
    """An ordered list of distinct symbols.

    The mutating methods (`promote`, `swap_adjacent`) work in place and are
    what the algorithms use; the module-level functions of the same purpose
    return fresh copies.
    """

    __slots__ = ("_items",)

    def __init__(self, items: Iterable[Symbol]):
        items = list(items)
        if not items:
            raise ValueError("a list configuration needs at least one symbol")
        if len(set(items)) != len(items):
            raise ValueError("list symbols must be pairwise distinct")
        self._items = items

    def __len__(self) -> int:
        return len(self._items)

    def __iter__(self) -> Iterator[Symbol]:
        return iter(self._items)

    def __contains__(self, symbol: object) -> bool:
        return symbol in self._items

    def __eq__(self, other: object) -> bool:
        if isinstance(other, ListConfiguration):
            return self._items == other._items
        if isinstance(other, (list, tuple)):
            return self._items == list(other)
        return NotImplemented

    def __repr__(self) -> str:
        return f"ListConfiguration({self._items!r})"

    @property
    def items(self) -> tuple[Symbol, ...]:
        return tuple(self._items)

    def copy(self) -> ListConfiguration:
        new = object.__new__(ListConfiguration)
        new._items = list(self._items)
        return new

    def at(self, position: int) -> Symbol:
        self._check(position, len(self._items))
        return self._items[position - 1]

    def position(self, symbol: Symbol) -> int:
        # linear scan: the list is the unsorted search structure being costed
        for idx, item in enumerate(self._items):
            if item == symbol:
                return idx + 1
        raise SymbolNotInList(symbol)

    def promote(self, position: int) -> None:
        """Move the element at `position` to the front (a free exchange)."""
        self._check(position, len(self._items))
        if position > 1:
            self._items.insert(0, self._items.pop(position - 1))

    def swap_adjacent(self, position: int) -> None:
        """Swap the elements at `position` and `position + 1` (a paid exchange)."""
        self._check(position, len(self._items) - 1)
        i = position - 1
        self._items[i], self._items[i + 1] = self._items[i + 1], self._items[i]

    @staticmethod
    def _check(position: int, upper: int) -> None:
        if not 1 <= position <= upper:
            raise PositionOutOfRange(f"position {position} outside 1..{upper}")


class RequestSequence(Sequence):
    """Immutable sequence of requests with 1-based lookahead windows."""

    __slots__ = ("_requests",)

    def __init__(self, requests: Iterable[Symbol] = ()):
        self._requests = tuple(requests)

    def __len__(self) -> int:
        return len(self._requests)

    def __getitem__(self, index):
        if isinstance(index, slice):
            return RequestSequence(self._requests[index])
        return self._requests[index]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RequestSequence):
            return self._requests == other._requests
        if isinstance(other, (list, tuple)):
            return self._requests == tuple(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._requests)

    def __repr__(self) -> str:
        return f"RequestSequence({list(self._requests)!r})"

    def window(self, start: int, length: int) -> tuple[Symbol, ...]:
        """Requests `start .. start+length-1` (1-based), truncated at the end."""
        if start < 1 or length < 0:
            raise ValueError("window needs start >= 1 and length >= 0")
        return self._requests[start - 1:start - 1 + length]

    def validate_against(self, lst: ListConfiguration) -> None:
        members = set(lst)
        for request in self._requests:
            if request not in members:
                raise SymbolNotInList(request)


@dataclass
class CostReport:
    per_access_costs: list[int]
    paid_exchange_count: int
    move_count: int
    total_cost: int
    final_list: ListConfiguration

    @property
    def n(self) -> int:
        return len(self.per_access_costs)

    def replay_total(self) -> int:
        return sum(self.per_access_costs) + self.paid_exchange_count


def as_list(lst: ListConfiguration | Iterable[Symbol]) -> ListConfiguration:
    return lst if isinstance(lst, ListConfiguration) else ListConfiguration(lst)


def as_sequence(seq: RequestSequence | Iterable[Symbol]) -> RequestSequence:
    return seq if isinstance(seq, RequestSequence) else RequestSequence(seq)


def find_position(lst: ListConfiguration | Iterable[Symbol], symbol: Symbol) -> int:
    return as_list(lst).position(symbol)


def access_cost(position: int, model: CostModel) -> int:
    if position < 1:
        raise PositionOutOfRange(f"position {position} < 1")
    return position if model is CostModel.FULL else position - 1


def move_to_front(lst: ListConfiguration | Iterable[Symbol], position: int) -> ListConfiguration:
    moved = as_list(lst).copy()
    moved.promote(position)
    return moved


def paid_exchange(
    lst: ListConfiguration | Iterable[Symbol], position: int
) -> tuple[ListConfiguration, int]:
    swapped = as_list(lst).copy()
    swapped.swap_adjacent(position)
    return swapped, 1

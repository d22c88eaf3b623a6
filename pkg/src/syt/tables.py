"""Exact count tables keyed by descent number, optionally refined."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .tableaux import Shape


@dataclass(frozen=True)
class RefinedKey:
    """Descent number d, optionally refined by the entry k at the end of
    the first row and the entry c in a one-cell third row."""

    d: int
    k: int | None = None
    c: int | None = None

    def fields(self) -> tuple[str, ...]:
        names = ["d"]
        if self.k is not None:
            names.append("k")
        if self.c is not None:
            names.append("c")
        return tuple(names)

    def values(self) -> tuple[int, ...]:
        return tuple(v for v in (self.d, self.k, self.c) if v is not None)

    def sort_key(self):
        return (self.d, self.k if self.k is not None else -1,
                self.c if self.c is not None else -1)

    def __str__(self):
        return ",".join(f"{f}={v}" for f, v in zip(self.fields(), self.values()))


class CountTable:
    """Map from refined keys to positive counts; zero counts are dropped,
    so a complete table sums to the total tableau count of its shape."""

    def __init__(self, shape: Shape,
                 entries: Mapping[RefinedKey, int] | Iterable[tuple[RefinedKey, int]]):
        items = entries.items() if isinstance(entries, Mapping) else entries
        data: dict[RefinedKey, int] = {}
        fields: tuple[str, ...] | None = None
        for key, count in items:
            if count < 0:
                raise ValueError(f"negative count {count} at key {key}")
            if count == 0:
                continue
            if fields is None:
                fields = key.fields()
            elif key.fields() != fields:
                raise ValueError("mixed refinement keys in one table")
            if key in data:
                raise ValueError(f"duplicate key {key}")
            data[key] = count
        self.shape = shape
        self._entries = data
        self._fields = fields if fields is not None else ("d",)

    @property
    def key_fields(self) -> tuple[str, ...]:
        return self._fields

    def get(self, key: RefinedKey) -> int:
        return self._entries.get(key, 0)

    def total(self) -> int:
        return sum(self._entries.values())

    def sorted_items(self) -> list[tuple[RefinedKey, int]]:
        return sorted(self._entries.items(), key=lambda kv: kv[0].sort_key())

    def descent_marginal(self) -> "CountTable":
        """Collapse the refinements, keeping only the descent number."""
        out: dict[RefinedKey, int] = {}
        for key, count in self._entries.items():
            dkey = RefinedKey(key.d)
            out[dkey] = out.get(dkey, 0) + count
        return CountTable(self.shape, out)

    def as_dict(self) -> dict[RefinedKey, int]:
        return dict(self._entries)

    def __iter__(self):
        return iter(self.sorted_items())

    def __len__(self):
        return len(self._entries)

    def __eq__(self, other):
        return (isinstance(other, CountTable)
                and self.shape == other.shape
                and self._entries == other._entries)

    def __repr__(self):
        body = ", ".join(f"({key}): {count}" for key, count in self.sorted_items())
        return f"CountTable({self.shape} | {body})"

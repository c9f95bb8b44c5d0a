"""Graded character values, one integer per homogeneous degree."""

from __future__ import annotations

from dataclasses import dataclass

__all__ = ["GradedCharacter"]


@dataclass(frozen=True)
class GradedCharacter:
    """Integer sequence chi^0 .. chi^N indexed by homogeneous degree."""

    values: tuple[int, ...]

    def __getitem__(self, k: int) -> int:
        return self.values[k]

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def validate(self, group_order: int) -> None:
        """Sanity constraints: chi^0 = 1, top value is a sign, total mass
        is either 0 or the group order (regular representation)."""
        if not self.values:
            raise ValueError("empty graded character")
        if self.values[0] != 1:
            raise ValueError(f"chi^0 = {self.values[0]} != 1")
        if self.values[-1] not in (-1, 1):
            raise ValueError(f"top coefficient {self.values[-1]} is not a sign")
        total = sum(self.values)
        if total not in (0, group_order):
            raise ValueError(f"total mass {total} not in {{0, {group_order}}}")

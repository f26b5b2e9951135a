"""Structured vertex labels and their fixed total order.

Graphs in this package keep meaningful vertex names through every induced
subgraph operation, so labels are small immutable records rather than bare
ints. The total order (variant tag first, then indices) fixes the canonical
enumeration order that graph, complex, and matrix code all inherit; outputs
are reproducible bit-for-bit because of it.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

__all__ = [
    "VertexLabel",
    "GridNode",
    "EdgeOfGrid",
    "E",
    "F",
    "Raw",
    "parse_label",
]


class VertexLabel:
    """Base for the label variants; ordered via :meth:`sort_key`."""

    __slots__ = ()

    def sort_key(self) -> tuple:
        raise NotImplementedError

    def __lt__(self, other):
        if not isinstance(other, VertexLabel):
            return NotImplemented
        return self.sort_key() < other.sort_key()

    def __le__(self, other):
        if not isinstance(other, VertexLabel):
            return NotImplemented
        return self.sort_key() <= other.sort_key()

    def __gt__(self, other):
        if not isinstance(other, VertexLabel):
            return NotImplemented
        return self.sort_key() > other.sort_key()

    def __ge__(self, other):
        if not isinstance(other, VertexLabel):
            return NotImplemented
        return self.sort_key() >= other.sort_key()


@dataclass(frozen=True, slots=True)
class GridNode(VertexLabel):
    """Lattice point (row i, column j), both 1-based."""

    i: int
    j: int

    def __post_init__(self):
        if self.i < 1 or self.j < 1:
            raise ValueError(f"grid coordinates must be positive, got ({self.i},{self.j})")

    def sort_key(self):
        return (0, self.i, self.j)

    def __str__(self):
        return f"g({self.i},{self.j})"


@dataclass(frozen=True, slots=True)
class EdgeOfGrid(VertexLabel):
    """An edge of a grid graph, used as a line-graph vertex.

    Endpoints are stored in sorted order regardless of argument order.
    """

    a: GridNode
    b: GridNode

    def __post_init__(self):
        if not isinstance(self.a, GridNode) or not isinstance(self.b, GridNode):
            raise ValueError("endpoints must be GridNode labels")
        if self.a == self.b:
            raise ValueError(f"degenerate edge at {self.a}")
        if self.b < self.a:
            a, b = self.b, self.a
            object.__setattr__(self, "a", a)
            object.__setattr__(self, "b", b)

    def sort_key(self):
        return (1, self.a.i, self.a.j, self.b.i, self.b.j)

    def __str__(self):
        return f"le(({self.a.i},{self.a.j}),({self.b.i},{self.b.j}))"


@dataclass(frozen=True, slots=True)
class E(VertexLabel):
    """Spine vertex e_i of the delta family."""

    i: int

    def __post_init__(self):
        if self.i < 1:
            raise ValueError(f"index must be positive, got {self.i}")

    def sort_key(self):
        return (2, self.i)

    def __str__(self):
        return f"e{self.i}"


@dataclass(frozen=True, slots=True)
class F(VertexLabel):
    """Row vertex f^k_i of the delta family: row k, position i."""

    k: int
    i: int

    def __post_init__(self):
        if self.k < 1 or self.i < 1:
            raise ValueError(f"indices must be positive, got k={self.k}, i={self.i}")

    def sort_key(self):
        return (3, self.k, self.i)

    def __str__(self):
        return f"f{self.k}_{self.i}"


@dataclass(frozen=True, slots=True)
class Raw(VertexLabel):
    """Free-form label for arbitrary input graphs."""

    name: str

    def __post_init__(self):
        if not isinstance(self.name, str) or not self.name:
            raise ValueError("raw label needs a nonempty string name")

    def sort_key(self):
        return (4, self.name)

    def __str__(self):
        return self.name


_E_RE = re.compile(r"e([0-9]+)\Z")
_F_RE = re.compile(r"f([0-9]+)_([0-9]+)\Z")
_G_RE = re.compile(r"g\(([0-9]+),([0-9]+)\)\Z")
_LE_RE = re.compile(r"le\(\(([0-9]+),([0-9]+)\),\(([0-9]+),([0-9]+)\)\)\Z")


def parse_label(s: str) -> VertexLabel:
    """Parse the canonical string form back into a label.

    Strings that do not match any structured pattern become Raw labels, so
    raw names colliding with the reserved patterns do not round-trip as Raw.
    """
    if not isinstance(s, str) or not s:
        raise ValueError("label string must be nonempty")
    m = _E_RE.fullmatch(s)
    if m:
        return E(int(m.group(1)))
    m = _F_RE.fullmatch(s)
    if m:
        return F(int(m.group(1)), int(m.group(2)))
    m = _G_RE.fullmatch(s)
    if m:
        return GridNode(int(m.group(1)), int(m.group(2)))
    m = _LE_RE.fullmatch(s)
    if m:
        i1, j1, i2, j2 = (int(m.group(t)) for t in range(1, 5))
        return EdgeOfGrid(GridNode(i1, j1), GridNode(i2, j2))
    return Raw(s)

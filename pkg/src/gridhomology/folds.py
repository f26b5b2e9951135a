"""Homotopy-preserving graph reductions and split certificates.

A fold removes a vertex w when some witness v has N(v) contained in N(w);
the inclusion of independence complexes is then a homotopy equivalence.
A split certificate is a machine-checkable witness that deleting a pivot
vertex splits the independence complex as a wedge: a zig-zag of folds
carries the pivot's link graph to a final graph whose vertices all avoid
the neighborhood of a star witness, so the link's inclusion into the
deletion is null-homotopic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .graphs import (
    Graph,
    closed_neighborhood,
    delete_vertices,
)
from .labels import E, F, VertexLabel, parse_label

__all__ = [
    "FoldStep",
    "IsolatedVertexHalt",
    "CONTRACTIBLE",
    "ReductionTrace",
    "find_fold",
    "fold_reduce",
    "ZigzagMove",
    "SplitCertificate",
    "VerifiedSplit",
    "CertificateError",
    "PivotMissingError",
    "ZigzagMoveInvalidError",
    "StarConditionFailedError",
    "check_split",
    "split_certificate_x",
    "split_certificate_y",
]


@dataclass(frozen=True)
class FoldStep:
    """Removal of ``removed`` justified by N(witness) <= N(removed)."""

    removed: VertexLabel
    witness: VertexLabel

    def __post_init__(self):
        if self.removed == self.witness:
            raise ValueError("fold witness must differ from the removed vertex")


@dataclass(frozen=True)
class IsolatedVertexHalt:
    """Terminal marker: the remaining graph was edgeless and nonempty."""

    vertex: VertexLabel


class _Contractible:
    __slots__ = ()

    def __repr__(self):
        return "CONTRACTIBLE"


CONTRACTIBLE = _Contractible()


@dataclass(frozen=True)
class ReductionTrace:
    """Record of a greedy fold reduction; replayable from ``initial``."""

    initial: Graph
    steps: tuple
    final: Union[Graph, _Contractible]

    @property
    def is_contractible(self) -> bool:
        return self.final is CONTRACTIBLE

    @property
    def vertices_removed(self) -> int:
        return sum(1 for s in self.steps if isinstance(s, FoldStep))

    @property
    def final_vertex_count(self) -> int:
        if self.is_contractible:
            return self.initial.n_vertices - self.vertices_removed
        return self.final.n_vertices

    def replay(self) -> Union[Graph, _Contractible]:
        """Re-apply the recorded steps from the initial graph."""
        g = self.initial
        for s in self.steps:
            if isinstance(s, IsolatedVertexHalt):
                return CONTRACTIBLE
            g = delete_vertices(g, {s.removed})
        return g


def find_fold(g: Graph) -> Optional[FoldStep]:
    """Least (witness, removed) pair with N(witness) <= N(removed), if any."""
    vs = g.vertices
    for v in vs:
        nv = g.neighbors(v)
        for w in vs:
            if w == v:
                continue
            if nv <= g.neighbors(w):
                # comparable open neighborhoods force non-adjacency in a
                # simple graph; a violation would mean a self-loop slipped in
                assert w not in nv
                return FoldStep(removed=w, witness=v)
    return None


def fold_reduce(g: Graph) -> ReductionTrace:
    """Apply folds greedily until none remain.

    Halts with the CONTRACTIBLE marker exactly when the current graph is
    edgeless and nonempty (its independence complex is a full simplex); an
    isolated vertex alongside remaining edges does not by itself certify
    anything and simply keeps feeding folds.
    """
    steps: list = []
    cur = g
    while True:
        if cur.n_vertices > 0 and cur.n_edges == 0:
            steps.append(IsolatedVertexHalt(cur.vertices[0]))
            return ReductionTrace(g, tuple(steps), CONTRACTIBLE)
        step = find_fold(cur)
        if step is None:
            return ReductionTrace(g, tuple(steps), cur)
        steps.append(step)
        cur = delete_vertices(cur, {step.removed})


class CertificateError(Exception):
    """A split certificate failed to validate."""


class PivotMissingError(CertificateError):
    pass


class ZigzagMoveInvalidError(CertificateError):
    pass


class StarConditionFailedError(CertificateError):
    pass


@dataclass(frozen=True)
class ZigzagMove:
    """A signed fold: remove a dominated-neighborhood vertex, or re-add one.

    An "add" is valid when removing the vertex again would be a valid fold
    in the grown graph, so both directions are inclusion homotopy
    equivalences of independence complexes.
    """

    op: str
    vertex: VertexLabel
    witness: VertexLabel

    def __post_init__(self):
        if self.op not in ("remove", "add"):
            raise ValueError(f"unknown zigzag op {self.op!r}")
        if self.vertex == self.witness:
            raise ValueError("zigzag witness must differ from the moved vertex")

    def to_json_obj(self) -> dict:
        return {"op": self.op, "vertex": str(self.vertex), "witness": str(self.witness)}

    @classmethod
    def from_json_obj(cls, obj: dict) -> "ZigzagMove":
        return cls(obj["op"], parse_label(obj["vertex"]), parse_label(obj["witness"]))


@dataclass(frozen=True)
class SplitCertificate:
    """Witness that deleting ``pivot`` splits the independence complex.

    The zig-zag transforms the pivot's link graph into a final graph all of
    whose vertices avoid the neighborhood of ``star_witness`` inside the
    pivot-deleted graph.
    """

    pivot: VertexLabel
    zigzag: tuple[ZigzagMove, ...]
    star_witness: VertexLabel

    def to_json_obj(self) -> dict:
        return {
            "pivot": str(self.pivot),
            "zigzag": [mv.to_json_obj() for mv in self.zigzag],
            "star_witness": str(self.star_witness),
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> "SplitCertificate":
        return cls(
            parse_label(obj["pivot"]),
            tuple(ZigzagMove.from_json_obj(mv) for mv in obj["zigzag"]),
            parse_label(obj["star_witness"]),
        )


@dataclass(frozen=True)
class VerifiedSplit:
    """The two graphs whose complexes assemble the wedge after a valid split."""

    deleted: Graph  # graph minus the pivot
    link: Graph  # graph minus the pivot's closed neighborhood


def check_split(g: Graph, cert: SplitCertificate) -> VerifiedSplit:
    """Validate a split certificate against g.

    On success the independence complex of g is the wedge of the complex of
    the pivot-deleted graph with the suspension of the complex of the link
    graph; callers compose homotopy types (or Betti numbers) downstream.
    """
    if cert.pivot not in g:
        raise PivotMissingError(f"pivot {cert.pivot} is not a vertex of the graph")
    deleted = delete_vertices(g, {cert.pivot})
    link = delete_vertices(g, closed_neighborhood(g, cert.pivot))

    current = set(link.vertices)
    for pos, mv in enumerate(cert.zigzag):
        where = f"zigzag move {pos} ({mv.op} {mv.vertex}, witness {mv.witness})"
        if mv.op == "remove":
            if mv.vertex not in current or mv.witness not in current:
                raise ZigzagMoveInvalidError(f"{where}: vertex not in the current graph")
            stage = deleted.induced(current)
            if not stage.neighbors(mv.witness) <= stage.neighbors(mv.vertex):
                raise ZigzagMoveInvalidError(f"{where}: domination does not hold")
            current.remove(mv.vertex)
        else:  # add
            if mv.vertex not in deleted or mv.vertex in current:
                raise ZigzagMoveInvalidError(
                    f"{where}: vertex must be a fresh vertex of the pivot-deleted graph"
                )
            if mv.witness not in current:
                raise ZigzagMoveInvalidError(f"{where}: witness not in the current graph")
            current.add(mv.vertex)
            stage = deleted.induced(current)
            if not stage.neighbors(mv.witness) <= stage.neighbors(mv.vertex):
                raise ZigzagMoveInvalidError(f"{where}: domination does not hold after adding")

    u = cert.star_witness
    if u not in deleted:
        raise StarConditionFailedError(
            f"star witness {u} is not a vertex of the pivot-deleted graph"
        )
    bad = sorted(x for x in current if x != u and deleted.has_edge(u, x))
    if bad:
        raise StarConditionFailedError(
            f"final graph vertex {bad[0]} is adjacent to the star witness {u}"
        )
    return VerifiedSplit(deleted=deleted, link=link)


def split_certificate_x(m: int, n: int) -> SplitCertificate:
    """Certificate splitting the X graph at the spine vertex e_{n-2}.

    The link graph loses f^1_{n-1} (dominated once a second row exists), and
    everything left avoids f^1_{n-2} in the deletion. Needs m >= 2, n >= 4.
    """
    if m < 2 or n < 4:
        raise ValueError(f"certificate needs m >= 2 and n >= 4, got ({m},{n})")
    return SplitCertificate(
        pivot=E(n - 2),
        zigzag=(ZigzagMove("remove", F(1, n - 1), F(2, n - 1)),),
        star_witness=F(1, n - 2),
    )


def split_certificate_y(m: int, n: int) -> SplitCertificate:
    """Certificate splitting the Y graph at the last spine vertex e_n.

    The zig-zag walks the link down to the Z graph, re-adds the last f
    column, and removes the f column before it, landing on the graph that
    avoids the neighborhood of e_{n-3}. Needs m >= 2, n >= 5.
    """
    if m < 2 or n < 5:
        raise ValueError(f"certificate needs m >= 2 and n >= 5, got ({m},{n})")
    moves: list[ZigzagMove] = []
    for k in range(1, m + 1):
        moves.append(ZigzagMove("remove", F(k, n - 4), F(k, n - 2)))
    moves.append(ZigzagMove("remove", E(n - 3), F(1, n - 2)))
    for k in range(1, m + 1):
        moves.append(ZigzagMove("add", F(k, n - 1), F(k, n - 3)))
    for k in range(1, m + 1):
        moves.append(ZigzagMove("remove", F(k, n - 3), F(k, n - 1)))
    return SplitCertificate(
        pivot=E(n),
        zigzag=tuple(moves),
        star_witness=E(n - 3),
    )

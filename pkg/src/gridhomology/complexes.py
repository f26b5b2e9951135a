"""Abstract simplicial complexes with explicit per-dimension face lists.

Faces are stored explicitly (not just facets) because boundary-matrix
assembly needs per-dimension face indices; at desk scale that is the
simpler, cache-friendly choice. The empty face lives at dimension -1 and is
present exactly when the complex is nonvoid, so the empty complex {()} --
which arises from deleting closed neighborhoods of dominating vertices --
is representable and distinct from the void complex.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Optional

from .graphs import Graph, edge_label
from .labels import VertexLabel

__all__ = [
    "SimplicialComplex",
    "ComplexSizeError",
    "independence_complex",
    "matching_complex",
    "equals_complex",
    "DEFAULT_MAX_FACES",
]

DEFAULT_MAX_FACES = 10_000_000


class ComplexSizeError(RuntimeError):
    """Face enumeration exceeded the configured cap."""


class SimplicialComplex:
    """Finite abstract complex over canonically ordered vertex labels.

    Internally faces are tuples of vertex indices into ``labels``; since
    ``labels`` is sorted, index order and label order agree, and the
    per-dimension lists are lexicographically sorted.
    """

    __slots__ = ("_labels", "_faces")

    def __init__(self, labels: Iterable[VertexLabel], faces_by_dim: dict):
        labs = tuple(labels)
        if list(labs) != sorted(set(labs)):
            raise ValueError("labels must be sorted and duplicate-free")
        n = len(labs)
        faces: dict[int, list[tuple[int, ...]]] = {}
        for d, fs in faces_by_dim.items():
            if not fs:
                continue
            for f in fs:
                if len(f) != d + 1:
                    raise ValueError(f"face {f} filed under dimension {d}")
                if any(not (0 <= i < n) for i in f):
                    raise ValueError(f"face {f} has out-of-range vertex indices")
                if any(f[t] >= f[t + 1] for t in range(len(f) - 1)):
                    raise ValueError(f"face {f} is not strictly sorted")
            if any(fs[t] >= fs[t + 1] for t in range(len(fs) - 1)):
                raise ValueError(f"dimension {d} face list is not sorted and duplicate-free")
            faces[d] = list(fs)
        if faces and -1 not in faces:
            raise ValueError("nonvoid complex must contain the empty face")
        if -1 in faces and faces[-1] != [()]:
            raise ValueError("dimension -1 must hold exactly the empty face")
        self._labels = labs
        self._faces = faces

    # -- construction -----------------------------------------------------

    @classmethod
    def from_faces(cls, faces: Iterable[Iterable[VertexLabel]]) -> "SimplicialComplex":
        """Build from explicit faces, checking downward closure.

        The empty face is added automatically when any face is given.
        """
        norm = set()
        for f in faces:
            t = tuple(sorted(f))
            if len(set(t)) != len(t):
                raise ValueError(f"face {t} has repeated vertices")
            norm.add(t)
        if norm:
            norm.add(())
        for f in norm:
            for p in range(len(f)):
                sub = f[:p] + f[p + 1 :]
                if sub not in norm:
                    raise ValueError(f"not downward closed: {sub} missing under {f}")
        labels = sorted({v for f in norm for v in f})
        index = {v: i for i, v in enumerate(labels)}
        by_dim: dict[int, list] = {}
        for f in norm:
            by_dim.setdefault(len(f) - 1, []).append(tuple(index[v] for v in f))
        for fs in by_dim.values():
            fs.sort()
        return cls(labels, by_dim)

    @classmethod
    def from_facets(cls, facets: Iterable[Iterable[VertexLabel]]) -> "SimplicialComplex":
        """Downward closure of the given maximal faces."""
        closure = set()
        for f in facets:
            t = tuple(sorted(f))
            for r in range(len(t) + 1):
                closure.update(combinations(t, r))
        return cls.from_faces(closure)

    # -- accessors ---------------------------------------------------------

    @property
    def labels(self) -> tuple[VertexLabel, ...]:
        return self._labels

    @property
    def is_void(self) -> bool:
        return not self._faces

    @property
    def dimension(self) -> Optional[int]:
        """Largest face dimension; None for the void complex."""
        return max(self._faces) if self._faces else None

    def dims(self) -> list[int]:
        return sorted(self._faces)

    def face_count(self, d: int) -> int:
        return len(self._faces.get(d, ()))

    @property
    def total_faces(self) -> int:
        return sum(len(fs) for fs in self._faces.values())

    def index_faces(self, d: int) -> list[tuple[int, ...]]:
        """Faces of dimension d as vertex-index tuples (canonical order)."""
        return self._faces.get(d, [])

    def faces(self, d: int) -> list[tuple[VertexLabel, ...]]:
        """Faces of dimension d as label tuples (canonical order)."""
        labs = self._labels
        return [tuple(labs[i] for i in f) for f in self.index_faces(d)]

    def face_set(self) -> frozenset:
        """All faces, as a set of label tuples."""
        return frozenset(f for d in self._faces for f in self.faces(d))

    def dump(self) -> str:
        """One face per line, vertices comma-separated, dimensions ascending."""
        lines = []
        for d in self.dims():
            for f in self.faces(d):
                lines.append(",".join(str(v) for v in f))
        return "\n".join(lines) + ("\n" if lines else "")

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self._labels == other._labels and self._faces == other._faces

    __hash__ = None

    def __repr__(self):
        if self.is_void:
            return "SimplicialComplex(void)"
        counts = {d: self.face_count(d) for d in self.dims()}
        return f"SimplicialComplex(dim {self.dimension}, faces {counts})"


def _enumerate_upward(
    n_items: int,
    compatible_mask,
    max_faces: int,
    what: str,
) -> dict[int, list[tuple[int, ...]]]:
    """Shared lexicographic DFS over index subsets.

    ``compatible_mask(i)`` gives the bitmask of items that may follow item i
    in a face. Aborts once more than ``max_faces`` faces are produced.
    """
    faces: dict[int, list[tuple[int, ...]]] = {-1: [()]}
    count = 1

    def grow(prefix: tuple[int, ...], allowed: int):
        nonlocal count
        d = len(prefix)  # dimension of the faces produced here
        bucket = faces.setdefault(d, [])
        a = allowed
        while a:
            low = a & -a
            i = low.bit_length() - 1
            a ^= low
            face = prefix + (i,)
            count += 1
            if count > max_faces:
                raise ComplexSizeError(
                    f"{what} exceeds the face cap ({max_faces}); raise the cap to proceed"
                )
            bucket.append(face)
            above = allowed & ~((1 << (i + 1)) - 1)
            grow(face, above & compatible_mask(i))

    grow((), (1 << n_items) - 1)
    return {d: fs for d, fs in faces.items() if fs}


def independence_complex(g: Graph, max_faces: int = DEFAULT_MAX_FACES) -> SimplicialComplex:
    """Complex whose faces are the independent vertex sets of g."""
    masks = g.adjacency_masks()
    faces = _enumerate_upward(
        g.n_vertices, lambda i: ~masks[i], max_faces, "independence complex"
    )
    return SimplicialComplex(g.vertices, faces)


def matching_complex(g: Graph, max_faces: int = DEFAULT_MAX_FACES) -> SimplicialComplex:
    """Complex whose faces are the matchings of g.

    Enumerated directly over edge subsets with endpoint-disjointness
    tracking -- deliberately not via the line graph, so the identity with
    the line graph's independence complex stays a two-route check.
    """
    labelled = sorted((edge_label(u, v), u, v) for u, v in g.edges())
    endpoint_masks = [
        (1 << g.index_of(u)) | (1 << g.index_of(v)) for _, u, v in labelled
    ]
    labels = [lab for lab, _, _ in labelled]

    faces: dict[int, list[tuple[int, ...]]] = {-1: [()]}
    count = 1
    cap = max_faces

    def grow(prefix: tuple[int, ...], used: int, start: int):
        nonlocal count
        bucket = faces.setdefault(len(prefix), [])
        for j in range(start, len(labels)):
            if endpoint_masks[j] & used:
                continue
            face = prefix + (j,)
            count += 1
            if count > cap:
                raise ComplexSizeError(
                    f"matching complex exceeds the face cap ({cap}); raise the cap to proceed"
                )
            bucket.append(face)
            grow(face, used | endpoint_masks[j], j + 1)

    grow((), 0, 0)
    return SimplicialComplex(labels, {d: fs for d, fs in faces.items() if fs})


def equals_complex(
    c1: SimplicialComplex,
    c2: SimplicialComplex,
    relabel: Optional[dict] = None,
) -> bool:
    """Face-set equality, optionally through an explicit vertex bijection.

    With ``relabel`` absent the identity is used and any mismatch simply
    returns False; an explicit map that is not a bijection between the two
    vertex sets raises ValueError.
    """
    if relabel is None:
        return c1.face_set() == c2.face_set()
    v1, v2 = set(c1.labels), set(c2.labels)
    missing = v1 - set(relabel)
    if missing:
        raise ValueError(f"relabeling undefined on {sorted(missing)[:3]}")
    image = {relabel[v] for v in v1}
    if len(image) != len(v1) or image != v2:
        raise ValueError("relabeling is not a bijection between the vertex sets")
    mapped = frozenset(tuple(sorted(relabel[v] for v in f)) for f in c1.face_set())
    return mapped == c2.face_set()

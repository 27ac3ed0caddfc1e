"""Finite abstract simplicial complexes: faces, adjacency, degrees, incidence.

Faces are plain tuples of strictly increasing non-negative vertex ids; a
face of cardinality ``n + 1`` has dimension ``n``.  Complexes are immutable
after construction and store their faces grouped by dimension in
lexicographic order, which fixes every matrix row and column order used
elsewhere in the package.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import (
    DimensionOutOfRange,
    DuplicateVertexInFace,
    EmptyInput,
    FaceNotInComplex,
    InvalidVertex,
)

Face = tuple[int, ...]


class Mode(enum.Enum):
    """Adjacency direction: shared coface (UP) or shared subface (DOWN)."""

    UP = "up"
    DOWN = "down"


def as_face(vertices: Iterable[int]) -> Face:
    """Canonicalize a vertex collection into a sorted face tuple."""
    vs = list(vertices)
    if not vs:
        raise EmptyInput("a face needs at least one vertex")
    for v in vs:
        if not isinstance(v, int) or isinstance(v, bool) or v < 0:
            raise InvalidVertex(f"vertex id {v!r} is not a non-negative integer")
    face = tuple(sorted(vs))
    for a, b in zip(face, face[1:]):
        if a == b:
            raise DuplicateVertexInFace(f"vertex {a} repeated in face {vs!r}")
    return face


def subfaces(face: Face) -> Iterator[Face]:
    """All non-empty proper and improper subfaces of a face."""
    for k in range(1, len(face) + 1):
        yield from combinations(face, k)


def boundary(face: Face) -> list[Face]:
    """The codimension-one subfaces, in lexicographic order."""
    return sorted(combinations(face, len(face) - 1)) if len(face) > 1 else []


@dataclass(frozen=True)
class IncidenceMatrix:
    """0/1 incidence between two consecutive face dimensions.

    ``entries[i][j] == 1`` iff ``col_faces[j]`` is a boundary face of
    ``row_faces[i]`` (UP) or ``row_faces[i]`` is a boundary face of
    ``col_faces[j]`` (DOWN).
    """

    row_faces: tuple[Face, ...]
    col_faces: tuple[Face, ...]
    entries: tuple[tuple[int, ...], ...]

    def row_support(self, i: int) -> tuple[int, ...]:
        return tuple(j for j, e in enumerate(self.entries[i]) if e)

    def col_sum(self, j: int) -> int:
        return sum(row[j] for row in self.entries)


class SimplicialComplex:
    """Downward-closed family of faces over integer vertex labels."""

    __slots__ = ("_by_dim", "_members", "_vertices")

    def __init__(self, faces: Iterable[Face]):
        """Build from an inclusion-closed collection of canonical faces.

        Use :meth:`from_maximal_faces` for arbitrary input; this constructor
        trusts that the collection is already closed.
        """
        by_dim: dict[int, set[Face]] = {}
        for f in faces:
            by_dim.setdefault(len(f) - 1, set()).add(f)
        if not by_dim:
            raise EmptyInput("a complex needs at least one face")
        self._by_dim: dict[int, tuple[Face, ...]] = {
            d: tuple(sorted(fs)) for d, fs in sorted(by_dim.items())
        }
        self._members: dict[Face, int] = {}
        for d, fs in self._by_dim.items():
            for i, f in enumerate(fs):
                self._members[f] = i
        self._vertices: tuple[int, ...] = tuple(v for (v,) in self._by_dim.get(0, ()))

    # -- construction --------------------------------------------------------

    @classmethod
    def from_maximal_faces(cls, maximal: Sequence[Iterable[int]]) -> "SimplicialComplex":
        """Inclusion-closure of the given faces.

        Idempotent: re-ingesting the complex's own maximal faces reproduces it.
        """
        if not maximal:
            raise EmptyInput("no faces given")
        closed: set[Face] = set()
        for raw in maximal:
            face = as_face(raw)
            closed.update(subfaces(face))
        return cls(closed)

    # -- basic queries ---------------------------------------------------------

    @property
    def vertices(self) -> tuple[int, ...]:
        return self._vertices

    @property
    def dim(self) -> int:
        return max(self._by_dim)

    def faces_of_dim(self, d: int) -> tuple[Face, ...]:
        """Lexicographically sorted d-faces; empty outside [0, dim]."""
        return self._by_dim.get(d, ())

    def num_faces(self, d: int) -> int:
        return len(self._by_dim.get(d, ()))

    def all_faces(self) -> Iterator[Face]:
        for d in sorted(self._by_dim):
            yield from self._by_dim[d]

    def has_face(self, face: Face) -> bool:
        return tuple(face) in self._members

    def face_index(self, face: Face) -> int:
        """Position of a face within its dimension's sorted list."""
        try:
            return self._members[tuple(face)]
        except KeyError:
            raise FaceNotInComplex(f"{face!r} is not a face of this complex") from None

    def maximal_faces(self) -> tuple[Face, ...]:
        """Faces not strictly contained in any other face."""
        out = []
        for f in self.all_faces():
            fs = set(f)
            for d in range(len(f), self.dim + 1):
                if any(fs < set(g) for g in self._by_dim.get(d, ())):
                    break
            else:
                out.append(f)
        return tuple(sorted(out, key=lambda f: (len(f), f)))

    # -- adjacency and degrees -------------------------------------------------

    def _check_dim(self, d: int, *, down: bool = False) -> None:
        if not 0 <= d <= self.dim:
            raise DimensionOutOfRange(f"dimension {d} not in [0, {self.dim}]")
        if down and d < 1:
            raise DimensionOutOfRange("down relations need dimension >= 1")

    def adjacency(self, d: int, mode: Mode) -> dict[Face, tuple[Face, ...]]:
        """Neighbour map on d-faces: UP via a shared (d+1)-face, DOWN via a
        shared (d-1)-face.  Irreflexive and symmetric."""
        self._check_dim(d, down=mode is Mode.DOWN)
        nbrs: dict[Face, set[Face]] = {f: set() for f in self.faces_of_dim(d)}
        groups: Iterable[tuple[Face, ...]]
        if mode is Mode.UP:
            groups = (tuple(boundary(g)) for g in self.faces_of_dim(d + 1))
        else:
            cofaces: dict[Face, list[Face]] = {}
            for f in self.faces_of_dim(d):
                for e in boundary(f):
                    cofaces.setdefault(e, []).append(f)
            groups = (tuple(v) for v in cofaces.values())
        for group in groups:
            for a, b in combinations(group, 2):
                nbrs[a].add(b)
                nbrs[b].add(a)
        return {f: tuple(sorted(s)) for f, s in nbrs.items()}

    def degree(self, face: Face, mode: Mode) -> int:
        """UP: number of cofaces one dimension up.  DOWN: dim(face) + 1."""
        face = tuple(face)
        if face not in self._members:
            raise FaceNotInComplex(f"{face!r} is not a face of this complex")
        if mode is Mode.DOWN:
            return len(face)
        fs = set(face)
        return sum(1 for g in self.faces_of_dim(len(face)) if fs < set(g))

    def up_degrees(self, d: int) -> tuple[int, ...]:
        """Up-degrees of all d-faces, aligned with faces_of_dim(d)."""
        self._check_dim(d)
        degs = [0] * self.num_faces(d)
        for g in self.faces_of_dim(d + 1):
            for f in boundary(g):
                degs[self._members[f]] += 1
        return tuple(degs)

    def incidence(self, d: int, mode: Mode) -> IncidenceMatrix:
        """UP: rows (d+1)-faces x cols d-faces.  DOWN: rows (d-1)-faces x
        cols d-faces.  Entry 1 marks boundary containment."""
        self._check_dim(d, down=mode is Mode.DOWN)
        cols = self.faces_of_dim(d)
        col_at = {f: j for j, f in enumerate(cols)}
        rows = self.faces_of_dim(d + 1) if mode is Mode.UP else self.faces_of_dim(d - 1)
        entries = [[0] * len(cols) for _ in rows]
        if mode is Mode.UP:
            for i, g in enumerate(rows):
                for f in boundary(g):
                    entries[i][col_at[f]] = 1
        else:
            row_at = {e: i for i, e in enumerate(rows)}
            for j, f in enumerate(cols):
                for e in boundary(f):
                    entries[row_at[e]][j] = 1
        return IncidenceMatrix(rows, cols, tuple(tuple(r) for r in entries))

    def extremal_containment(self, i: int) -> tuple[int, int]:
        """(min, max) over i-faces of the number of (i+1)-faces containing them."""
        if not 0 <= i <= self.dim - 1:
            raise DimensionOutOfRange(f"dimension {i} not in [0, {self.dim - 1}]")
        degs = self.up_degrees(i)
        return (min(degs), max(degs))

    # -- relabeling and comparison ----------------------------------------------

    def relabel(self, mapping: Mapping[int, int]) -> "SimplicialComplex":
        """Apply an injective vertex relabeling."""
        image = [mapping[v] for v in self._vertices]
        if len(set(image)) != len(image):
            raise InvalidVertex("relabeling is not injective")
        return SimplicialComplex(
            as_face(mapping[v] for v in f) for f in self.all_faces()
        )

    def canonical_relabel(self) -> "SimplicialComplex":
        """Relabel vertices to 0..n-1 by sorted order."""
        rank = {v: i for i, v in enumerate(self._vertices)}
        return self.relabel(rank)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SimplicialComplex) and self._by_dim == other._by_dim

    def __hash__(self) -> int:
        return hash(tuple((d, fs) for d, fs in self._by_dim.items()))

    def __repr__(self) -> str:
        counts = ", ".join(f"#S_{d}={len(fs)}" for d, fs in self._by_dim.items())
        return f"SimplicialComplex(dim={self.dim}, {counts})"

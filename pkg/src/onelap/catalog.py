"""Named complexes available to the CLI and reused across the test suite."""

from __future__ import annotations

from .complexes import SimplicialComplex
from .errors import EmptyInput


def simplex(n: int) -> SimplicialComplex:
    """The full n-simplex on vertices 1..n+1."""
    if n < 0:
        raise EmptyInput("simplex dimension must be >= 0")
    return SimplicialComplex.from_maximal_faces([list(range(1, n + 2))])


def path_complex() -> SimplicialComplex:
    """Two edges 1-2-3, no triangle."""
    return SimplicialComplex.from_maximal_faces([[1, 2], [2, 3]])


def remark_complex() -> SimplicialComplex:
    """The 5-vertex complex separating the facet and top-dimension
    independence numbers (alpha = 3, alpha_2 = 4)."""
    return SimplicialComplex.from_maximal_faces([[1, 2, 3], [1, 4], [2, 5]])


def builtin(name: str) -> SimplicialComplex:
    """Resolve a builtin name: ``simplex:n``, ``path``, or ``remark5``."""
    if name == "path":
        return path_complex()
    if name == "remark5":
        return remark_complex()
    if name.startswith("simplex:"):
        return simplex(int(name.split(":", 1)[1]))
    raise EmptyInput(f"unknown builtin complex {name!r}")

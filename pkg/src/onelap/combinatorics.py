"""Exact combinatorial parameters on faces and vertices, and the inequality
suite tying them to computed eigenvalues.

All NP-hard quantities are computed by exact branch-and-bound or
backtracking search under a node budget; there are no heuristics and no
approximation anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor
from typing import Iterable, Sequence

from .complexes import Face, Mode, SimplicialComplex
from .errors import BudgetExceeded, DimensionOutOfRange, MissingInput

DEFAULT_SEARCH_BUDGET = 1 << 20


class _Budget:
    __slots__ = ("left", "what")

    def __init__(self, nodes: int, what: str):
        self.left = nodes
        self.what = what

    def tick(self) -> None:
        self.left -= 1
        if self.left < 0:
            raise BudgetExceeded(f"{self.what} exceeded its search budget")


@dataclass(frozen=True)
class FaceGraph:
    """Simple undirected graph on the d-faces of a complex."""

    nodes: tuple[Face, ...]
    adj: tuple[frozenset[int], ...]

    @classmethod
    def from_complex(cls, K: SimplicialComplex, d: int, mode: Mode = Mode.UP) -> "FaceGraph":
        nbrs = K.adjacency(d, mode)
        nodes = K.faces_of_dim(d)
        index = {f: i for i, f in enumerate(nodes)}
        adj = tuple(frozenset(index[g] for g in nbrs[f]) for f in nodes)
        return cls(nodes, adj)

    def complement(self) -> "FaceGraph":
        n = len(self.nodes)
        return FaceGraph(
            self.nodes,
            tuple(
                frozenset(u for u in range(n) if u != v and u not in self.adj[v])
                for v in range(n)
            ),
        )


def independence_number(graph: FaceGraph, budget: int = DEFAULT_SEARCH_BUDGET) -> int:
    """Exact maximum size of a pairwise non-adjacent node set."""
    adj = graph.adj
    n = len(adj)
    guard = _Budget(budget, "independence search")
    order = sorted(range(n), key=lambda v: (-len(adj[v]), v))
    best = 0

    def expand(cands: list[int], size: int) -> None:
        nonlocal best
        guard.tick()
        if size > best:
            best = size
        if not cands or size + len(cands) <= best:
            return
        v = cands[0]
        expand([u for u in cands[1:] if u not in adj[v]], size + 1)
        if size + len(cands) - 1 > best:
            expand(cands[1:], size)

    expand(order, 0)
    return best


def _greedy_clique(adj: Sequence[frozenset[int]]) -> int:
    n = len(adj)
    if n == 0:
        return 0
    best = 1
    for v in sorted(range(n), key=lambda v: (-len(adj[v]), v)):
        clique = [v]
        for u in sorted(adj[v]):
            if all(u in adj[w] for w in clique):
                clique.append(u)
        best = max(best, len(clique))
    return best


def is_k_colorable(
    adj: Sequence[frozenset[int]], k: int, budget: int = DEFAULT_SEARCH_BUDGET
) -> bool:
    """Exact backtracking k-colorability on an adjacency structure."""
    n = len(adj)
    if n == 0:
        return True
    if k <= 0:
        return False
    guard = _Budget(budget, "coloring search")
    order = sorted(range(n), key=lambda v: (-len(adj[v]), v))
    colors = [-1] * n

    def assign(i: int, used: int) -> bool:
        guard.tick()
        if i == n:
            return True
        v = order[i]
        banned = {colors[u] for u in adj[v] if colors[u] >= 0}
        for c in range(min(used + 1, k)):
            if c in banned:
                continue
            colors[v] = c
            if assign(i + 1, max(used, c + 1)):
                return True
            colors[v] = -1
        return False

    return assign(0, 0)


def chromatic_number(graph: FaceGraph, budget: int = DEFAULT_SEARCH_BUDGET) -> int:
    n = len(graph.nodes)
    if n == 0:
        return 0
    k = _greedy_clique(graph.adj)
    while not is_k_colorable(graph.adj, k, budget):
        k += 1
    return k


def clique_cover_number(graph: FaceGraph, budget: int = DEFAULT_SEARCH_BUDGET) -> int:
    """Exact minimum number of cliques covering all nodes: the chromatic
    number of the complement graph."""
    return chromatic_number(graph.complement(), budget)


def face_chromatic_number(
    K: SimplicialComplex, d: int, budget: int = DEFAULT_SEARCH_BUDGET
) -> int:
    """Exact chromatic number of the up-adjacency graph on d-faces: no two
    faces of a common (d+1)-face share a color."""
    return chromatic_number(FaceGraph.from_complex(K, d, Mode.UP), budget)


# -- vertex-level parameters -----------------------------------------------------


def _blockers_by_vertex(
    vertices: Sequence[int], blocking: Iterable[Face]
) -> dict[int, list[frozenset[int]]]:
    """For each vertex, the rest-sets of the blocking faces through it."""
    out: dict[int, list[frozenset[int]]] = {v: [] for v in vertices}
    for f in blocking:
        fs = set(f)
        for v in f:
            out[v].append(frozenset(fs - {v}))
    return out


def _max_set_avoiding(
    vertices: Sequence[int],
    blocking: Iterable[Face],
    budget: int,
    what: str,
) -> int:
    """Largest vertex set containing no blocking face in full."""
    blockers = _blockers_by_vertex(vertices, blocking)
    guard = _Budget(budget, what)
    n = len(vertices)
    best = 0

    def expand(i: int, chosen: set[int], size: int) -> None:
        nonlocal best
        guard.tick()
        if size > best:
            best = size
        if i == n or size + (n - i) <= best:
            return
        v = vertices[i]
        if all(not rest <= chosen for rest in blockers[v]):
            chosen.add(v)
            expand(i + 1, chosen, size + 1)
            chosen.remove(v)
        expand(i + 1, chosen, size)

    expand(0, set(), 0)
    return best


def _min_parts_avoiding(
    vertices: Sequence[int],
    blocking: Iterable[Face],
    budget: int,
    what: str,
) -> int | None:
    """Smallest number of parts such that no part contains a blocking face.

    Returns None when no partition works at all, which happens exactly when
    some blocking face is a single vertex.
    """
    blocking = list(blocking)
    if any(len(f) == 1 for f in blocking):
        return None
    blockers = _blockers_by_vertex(vertices, blocking)
    guard = _Budget(budget, what)
    n = len(vertices)

    def fits(k: int) -> bool:
        parts: list[set[int]] = [set() for _ in range(k)]

        def assign(i: int, used: int) -> bool:
            guard.tick()
            if i == n:
                return True
            v = vertices[i]
            for p in range(min(used + 1, k)):
                if any(rest <= parts[p] for rest in blockers[v]):
                    continue
                parts[p].add(v)
                if assign(i + 1, max(used, p + 1)):
                    return True
                parts[p].remove(v)
            return False

        return assign(0, 0)

    for k in range(1, n + 1):
        if fits(k):
            return k
    return None


def vertex_alpha_s(K: SimplicialComplex, s: int, budget: int = DEFAULT_SEARCH_BUDGET) -> int:
    """Max |A| with |A & F| <= s for every face F.  Only s-faces can be
    violated, so they are the blocking sets."""
    if s < 1:
        raise DimensionOutOfRange("s must be >= 1")
    return _max_set_avoiding(K.vertices, K.faces_of_dim(s), budget, "alpha_s search")


def vertex_chi_s(K: SimplicialComplex, s: int, budget: int = DEFAULT_SEARCH_BUDGET) -> int:
    """Min k-partition with |V_i & F| <= s for every face and part."""
    if s < 1:
        raise DimensionOutOfRange("s must be >= 1")
    result = _min_parts_avoiding(
        K.vertices, K.faces_of_dim(s), budget, "chi_s search"
    )
    assert result is not None  # s-faces have s+1 >= 2 vertices
    return result


def vertex_alpha_facet(K: SimplicialComplex, budget: int = DEFAULT_SEARCH_BUDGET) -> int:
    """Max |A| containing no maximal face in full."""
    return _max_set_avoiding(K.vertices, K.maximal_faces(), budget, "alpha search")


def vertex_chi_facet(K: SimplicialComplex, budget: int = DEFAULT_SEARCH_BUDGET) -> int | None:
    """Min k-partition in which no part contains a maximal face; None when a
    maximal face is a single vertex (no partition can avoid it)."""
    return _min_parts_avoiding(K.vertices, K.maximal_faces(), budget, "chi search")


# -- inequality suite --------------------------------------------------------------


@dataclass(frozen=True)
class InequalityCheck:
    name: str
    lhs: Fraction
    relation: str  # "<=" or ">="
    rhs: Fraction
    holds: bool
    note: str = ""


@dataclass(frozen=True)
class BoundReport:
    dim: int
    inputs: dict[str, object]
    checks: tuple[InequalityCheck, ...]
    skipped: tuple[tuple[str, str], ...] = ()

    @property
    def all_hold(self) -> bool:
        return all(c.holds for c in self.checks)


def _check(name: str, lhs, relation: str, rhs, note: str = "") -> InequalityCheck:
    lhs = Fraction(lhs)
    rhs = Fraction(rhs)
    holds = lhs <= rhs if relation == "<=" else lhs >= rhs
    return InequalityCheck(name, lhs, relation, rhs, holds, note)


def bound_report(
    K: SimplicialComplex,
    d: int,
    *,
    mu_prev: Fraction | None,
    c1: Fraction | None = None,
    vol_mode: str = "up-degree",
    budget: int = DEFAULT_SEARCH_BUDGET,
) -> BoundReport:
    """Evaluate the full inequality suite exactly.

    The vertex-level bounds always refer to the complex's own dimension
    D = dim K (their statements require it); the face-level bounds (the
    coloring bound and alpha <= kappa) are evaluated at the requested face
    dimension d.

    mu_prev: minimum unnormalized up eigenvalue one level below the top
             (dimension D-1).
    c1:      minimum up eigenvalue at dimension d with respect to the chosen
             volume (up-degree weights by default, plain counting for
             vol_mode="unit").  May be omitted when no (d+1)-face exists.
    """
    D = K.dim
    if D < 1:
        raise DimensionOutOfRange("bound report needs a complex of dimension >= 1")
    if not 0 <= d <= D:
        raise DimensionOutOfRange(f"dimension {d} not in [0, {D}]")
    if mu_prev is None:
        raise MissingInput("mu_prev (min unnormalized up eigenvalue at D-1) required")
    mu_prev = Fraction(mu_prev)

    nv = len(K.vertices)
    m0, M0 = K.extremal_containment(0)
    m_prev = K.extremal_containment(D - 1)[0]

    alpha_s = {s: vertex_alpha_s(K, s, budget) for s in range(1, D + 1)}
    chi_s = {s: vertex_chi_s(K, s, budget) for s in range(1, D + 1)}
    alpha = vertex_alpha_facet(K, budget)
    chi = vertex_chi_facet(K, budget)

    graph = FaceGraph.from_complex(K, d, Mode.UP)
    alpha_face = independence_number(graph, budget)
    kappa_face = clique_cover_number(graph, budget)
    chi_face = chromatic_number(graph, budget)
    e_next = K.num_faces(d + 1)
    degs = K.up_degrees(d)
    vol = Fraction(sum(degs) if vol_mode == "up-degree" else len(degs))

    checks: list[InequalityCheck] = []
    skipped: list[tuple[str, str]] = []

    for s in range(1, D + 1):
        checks.append(
            _check(f"chi_{s}*alpha_{s}>=|V|", chi_s[s] * alpha_s[s], ">=", nv)
        )
        checks.append(
            _check(f"chi_{s}<=ceil(chi_1/{s})", chi_s[s], "<=", ceil(Fraction(chi_s[1], s)))
        )
        for t in range(1, s):
            q = floor(Fraction(s, t))
            checks.append(
                _check(
                    f"chi_{s}<=ceil(chi_{t}/floor({s}/{t}))",
                    chi_s[s],
                    "<=",
                    ceil(Fraction(chi_s[t], q)),
                )
            )

    checks.append(_check("alpha<=alpha_D", alpha, "<=", alpha_s[D]))
    if chi is None:
        skipped.append(("chi>=chi_D", "facet chromatic number is infinite"))
        skipped.append(("chi*alpha>=|V|", "facet chromatic number is infinite"))
    else:
        checks.append(_check("chi>=chi_D", chi, ">=", chi_s[D]))
        checks.append(_check("chi*alpha>=|V|", chi * alpha, ">=", nv))

    checks.append(
        _check(
            "alpha_D<=|V|(1-mu_prev/(2M_0))",
            alpha_s[D],
            "<=",
            nv * (1 - mu_prev / (2 * M0)),
        )
    )
    denom = 2 * M0 - mu_prev
    if denom <= 0:
        checks.append(
            InequalityCheck(
                "chi_D>=2M_0/(2M_0-mu_prev)",
                Fraction(chi_s[D]),
                ">=",
                Fraction(0),
                False,
                "non-positive denominator",
            )
        )
    else:
        checks.append(
            _check("chi_D>=2M_0/(2M_0-mu_prev)", chi_s[D], ">=", Fraction(2 * M0) / denom)
        )
    checks.append(
        _check(
            "alpha_D<=M_0|V|/(M_0+mu_prev)",
            alpha_s[D],
            "<=",
            Fraction(M0 * nv) / (M0 + mu_prev),
        )
    )
    checks.append(
        _check("alpha_D>=|V|D/(M_0+D)", alpha_s[D], ">=", Fraction(nv * D, M0 + D))
    )
    checks.append(
        _check("alpha_D>=|V|D/(2M_0)", alpha_s[D], ">=", Fraction(nv * D, 2 * M0))
    )

    if vol == 0 or (vol_mode == "up-degree" and 0 in degs):
        # the coloring bound needs a strictly positive volume function
        skipped.append(("coloring_bound", "up-degree volume is not positive at d"))
    elif c1 is None:
        raise MissingInput("c1 (min up eigenvalue at d for the chosen volume) required")
    else:
        rhs = (
            Fraction((d + 2) * e_next) / vol
            * (1 - Fraction(2 * (d + 1), d + chi_face))
        )
        checks.append(_check("c1<=coloring_bound", Fraction(c1), "<=", rhs))

    checks.append(_check("alpha_faces<=kappa_faces", alpha_face, "<=", kappa_face))

    inputs: dict[str, object] = {
        "|V|": nv,
        "dim": D,
        "face_dim": d,
        "alpha_s": alpha_s,
        "chi_s": chi_s,
        "alpha": alpha,
        "chi": chi,
        "alpha_d": alpha_s[D],
        "chi_d": chi_s[D],
        "M_0": M0,
        "m_0": m0,
        "m_prev": m_prev,
        "mu_prev": mu_prev,
        "c1": c1,
        "chi_faces": chi_face,
        "alpha_faces": alpha_face,
        "kappa_faces": kappa_face,
        "e_next": e_next,
        "vol": vol,
        "vol_mode": vol_mode,
    }
    return BoundReport(d, inputs, tuple(checks), tuple(skipped))

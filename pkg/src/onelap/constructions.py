"""Complex constructions and their spectral effects: closure/star/link,
wedge sums, motif recognition, and motif duplication.

The star of a face collection M is every face sharing a vertex set with a
member of M; the link is Cl St M minus St Cl M.  A motif is a subcomplex
closed under joint cofaces whose link is non-empty; duplicating it mirrors
all faces mixing motif and link vertices onto fresh primed vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .complexes import Face, Mode, SimplicialComplex, as_face, subfaces
from .eigen import (
    Normalization,
    ProblemSpec,
    SumForm,
    VerifyResult,
    as_chain,
    form_verify,
    verify_eigenpair,
)
from .errors import (
    ConditionViolated,
    DimensionMismatch,
    FaceNotInComplex,
    NotAMotif,
    NotSubcomplex,
)
from .spectrum import compute_spectrum

_face_order = lambda f: (len(f), f)


def _validated(K: SimplicialComplex, M: Iterable[Sequence[int]]) -> set[Face]:
    faces = {as_face(f) for f in M}
    for f in faces:
        if not K.has_face(f):
            raise FaceNotInComplex(f"{f!r} is not a face of the complex")
    return faces


def closure(K: SimplicialComplex, M: Iterable[Sequence[int]]) -> tuple[Face, ...]:
    """All subfaces of members of M: the smallest subcomplex containing M."""
    faces = _validated(K, M)
    out: set[Face] = set()
    for f in faces:
        out.update(subfaces(f))
    return tuple(sorted(out, key=_face_order))


def star(K: SimplicialComplex, M: Iterable[Sequence[int]]) -> tuple[Face, ...]:
    """All faces of K that have a face in M, i.e. share a vertex set with
    some member of M."""
    faces = _validated(K, M)
    out = [
        g
        for g in K.all_faces()
        if any(set(g) & set(f) for f in faces)
    ]
    return tuple(sorted(out, key=_face_order))


def link(K: SimplicialComplex, M: Iterable[Sequence[int]]) -> tuple[Face, ...]:
    """Cl St M minus St Cl M."""
    cl_st = set(closure(K, star(K, M)))
    st_cl = set(star(K, closure(K, M)))
    return tuple(sorted(cl_st - st_cl, key=_face_order))


def subcomplex(faces: Iterable[Face]) -> SimplicialComplex:
    """Bundle an inclusion-closed face set into a complex of its own."""
    return SimplicialComplex(faces)


# -- wedge sums ---------------------------------------------------------------


def wedge_sum_with_map(
    K1: SimplicialComplex,
    F1: Sequence[int],
    K2: SimplicialComplex,
    F2: Sequence[int],
) -> tuple[SimplicialComplex, dict[int, int]]:
    """Wedge K1 and K2 along F1 ~ F2; also return the vertex relabeling
    applied to K2 (sorted F2 vertices map onto sorted F1 vertices, the rest
    get fresh ids)."""
    f1, f2 = as_face(F1), as_face(F2)
    if not K1.has_face(f1):
        raise FaceNotInComplex(f"{f1!r} is not a face of the first complex")
    if not K2.has_face(f2):
        raise FaceNotInComplex(f"{f2!r} is not a face of the second complex")
    if len(f1) != len(f2):
        raise DimensionMismatch(
            f"cannot identify a {len(f1) - 1}-face with a {len(f2) - 1}-face"
        )
    mapping = dict(zip(f2, f1))
    fresh = max(K1.vertices) + 1
    for v in K2.vertices:
        if v not in mapping:
            mapping[v] = fresh
            fresh += 1
    faces = set(K1.all_faces())
    faces.update(as_face(mapping[v] for v in g) for g in K2.all_faces())
    return SimplicialComplex(faces), mapping


def wedge_sum(
    K1: SimplicialComplex,
    F1: Sequence[int],
    K2: SimplicialComplex,
    F2: Sequence[int],
) -> SimplicialComplex:
    """The quotient of the disjoint union identifying F1 with F2 pointwise."""
    return wedge_sum_with_map(K1, F1, K2, F2)[0]


@dataclass(frozen=True)
class WedgeSpectrumReport:
    glue_dim: int
    dim: int
    operator: Mode
    normalization: Normalization
    spectrum_left: tuple[Fraction, ...]
    spectrum_right: tuple[Fraction, ...]
    spectrum_wedge: tuple[Fraction, ...]

    @property
    def holds(self) -> bool:
        return set(self.spectrum_wedge) == set(self.spectrum_left) | set(
            self.spectrum_right
        )


def check_wedge_spectrum(
    K1: SimplicialComplex,
    F1: Sequence[int],
    K2: SimplicialComplex,
    F2: Sequence[int],
    d: int,
    operator: Mode,
    normalization: Normalization = Normalization.NORMALIZED,
) -> WedgeSpectrumReport:
    """Compare spec(K1 v_k K2) with spec(K1) | spec(K2) at dimension d.

    Valid (and asserted by the caller's tests) only under the dimension
    hypotheses: k < d for UP, d > k + 1 for DOWN; otherwise the check is
    skipped by raising ConditionViolated.
    """
    k = len(as_face(F1)) - 1
    if operator is Mode.UP and not 0 <= k < d:
        raise ConditionViolated(f"up wedge spectra split only for k < d, got k={k}, d={d}")
    if operator is Mode.DOWN and not d > k + 1:
        raise ConditionViolated(f"down wedge spectra split only for d > k+1, got k={k}, d={d}")
    wedge = wedge_sum(K1, F1, K2, F2)
    s1 = compute_spectrum(ProblemSpec(K1, d, operator, normalization))
    s2 = compute_spectrum(ProblemSpec(K2, d, operator, normalization))
    sw = compute_spectrum(ProblemSpec(wedge, d, operator, normalization))
    return WedgeSpectrumReport(
        k, d, operator, normalization, s1.eigenvalues, s2.eigenvalues, sw.eigenvalues
    )


@dataclass(frozen=True)
class MatchedWedgeReport:
    wedge: SimplicialComplex
    vector: tuple[Fraction, ...]
    result: VerifyResult


def check_matched_wedge_eigenpair(
    K1: SimplicialComplex,
    F1: Sequence[int],
    x1: Sequence,
    K2: SimplicialComplex,
    F2: Sequence[int],
    x2: Sequence,
    mu,
    normalization: Normalization = Normalization.NORMALIZED,
) -> MatchedWedgeReport:
    """Glue two eigenvectors that agree on the identified d-faces and verify
    the combined vector on the d-wedge at the same eigenvalue."""
    f1, f2 = as_face(F1), as_face(F2)
    d = len(f1) - 1
    vec1 = as_chain(x1, K1.num_faces(d))
    vec2 = as_chain(x2, K2.num_faces(d))
    if vec1[K1.face_index(f1)] != vec2[K2.face_index(f2)]:
        raise ConditionViolated("eigenvectors disagree on the identified faces")
    wedge, mapping = wedge_sum_with_map(K1, F1, K2, F2)
    values: dict[Face, Fraction] = {
        f: vec1[i] for i, f in enumerate(K1.faces_of_dim(d))
    }
    for i, g in enumerate(K2.faces_of_dim(d)):
        values[as_face(mapping[v] for v in g)] = vec2[i]
    vector = tuple(values[f] for f in wedge.faces_of_dim(d))
    spec = ProblemSpec(wedge, d, Mode.UP, normalization)
    return MatchedWedgeReport(wedge, vector, verify_eigenpair(spec, mu, vector))


# -- motifs and duplication ------------------------------------------------------


@dataclass(frozen=True)
class MotifCheck:
    is_motif: bool
    link_dim: int | None
    reason: str | None


def _joint_coface_violation(K: SimplicialComplex, faces: set[Face]) -> str | None:
    """Reason string when two distinct motif faces sit in a common face of K
    that is not itself in the motif; None when the condition holds.  Also
    checks that the collection is a subcomplex."""
    for f in faces:
        for g in subfaces(f):
            if g not in faces:
                raise NotSubcomplex(f"{g!r} missing: the collection is not closed")
    for g in K.all_faces():
        if g in faces:
            continue
        gs = set(g)
        inside = 0
        for f in faces:
            if set(f) <= gs:
                inside += 1
                if inside >= 2:
                    return f"two motif faces join inside {g!r}"
    return None


def is_i_motif(K: SimplicialComplex, M: Iterable[Sequence[int]]) -> MotifCheck:
    """Check the motif conditions: joint cofaces of two motif faces stay in
    the motif, and the link is non-empty (its dimension is the i)."""
    faces = _validated(K, M)
    violation = _joint_coface_violation(K, faces)
    if violation is not None:
        return MotifCheck(False, None, violation)
    lk = link(K, faces)
    if not lk:
        return MotifCheck(False, None, "link is empty")
    return MotifCheck(True, max(len(f) for f in lk) - 1, None)


def duplicate_motif_with_map(
    K: SimplicialComplex, M: Iterable[Sequence[int]]
) -> tuple[SimplicialComplex, dict[int, int]]:
    """Duplicate a motif onto fresh primed vertices; every face of K made of
    motif and link vertices (with at least one motif vertex) gets a primed
    copy.

    An empty link is allowed here: no face then mixes motif and link
    vertices and the primed copy comes out disjoint.
    """
    faces = _validated(K, M)
    violation = _joint_coface_violation(K, faces)
    if violation is not None:
        raise NotAMotif(violation)
    motif_vertices = sorted({v for f in faces for v in f})
    link_vertices = {v for f in link(K, faces) for v in f}
    fresh = max(K.vertices) + 1
    prime = {p: fresh + i for i, p in enumerate(motif_vertices)}
    allowed = set(motif_vertices) | link_vertices
    new_faces = set(K.all_faces())
    for g in K.all_faces():
        gs = set(g)
        if gs <= allowed and gs & prime.keys():
            new_faces.add(as_face(prime.get(v, v) for v in g))
    return SimplicialComplex(new_faces), prime


def duplicate_motif(
    K: SimplicialComplex, M: Iterable[Sequence[int]]
) -> SimplicialComplex:
    return duplicate_motif_with_map(K, M)[0]


# -- restricted star problems and the duplication eigenpair check ------------------


def star_restricted_form(
    K: SimplicialComplex,
    M: Iterable[Sequence[int]],
    d: int,
    normalization: Normalization = Normalization.NORMALIZED,
) -> tuple[SumForm, tuple[Face, ...], tuple[Face, ...]]:
    """The up problem of Cl St M restricted to the d-faces of St M.

    Variables are St M's d-faces; one constraint row per (d+1)-face of
    St M, summing only the variables (faces of Cl St M outside St M carry
    zero); weights are up-degrees within Cl St M.
    Returns (form, variable faces, constraint faces).
    """
    st = star(K, M)
    var_faces = tuple(f for f in st if len(f) == d + 1)
    cfaces = tuple(f for f in st if len(f) == d + 2)
    pos = {f: i for i, f in enumerate(var_faces)}
    rows = []
    degrees = [0] * len(var_faces)
    for cf in cfaces:
        support = []
        cs = set(cf)
        for f, i in pos.items():
            if set(f) <= cs:
                support.append(i)
                degrees[i] += 1
        rows.append(tuple(sorted(support)))
    if normalization is Normalization.NORMALIZED:
        weights = tuple(Fraction(w) for w in degrees)
    else:
        weights = (Fraction(1),) * len(var_faces)
    return SumForm(len(var_faces), tuple(rows), weights), var_faces, cfaces


@dataclass(frozen=True)
class DuplicationReport:
    duplicated: SimplicialComplex
    restricted: VerifyResult
    vector: tuple[Fraction, ...]
    result: VerifyResult

    @property
    def holds(self) -> bool:
        return self.restricted.accepted and self.result.accepted


def check_duplication_eigenpair(
    K: SimplicialComplex,
    M: Iterable[Sequence[int]],
    d: int,
    mu,
    h: Sequence,
    normalization: Normalization = Normalization.NORMALIZED,
) -> DuplicationReport:
    """Verify that a restricted eigenpair (mu, h) on St M's d-faces glues to
    an eigenpair of the duplicated complex: h on St M, -h on the primed
    copy, zero elsewhere."""
    form, var_faces, _ = star_restricted_form(K, M, d, normalization)
    vec = as_chain(h, form.nvars)
    restricted = form_verify(form, mu, vec)
    duplicated, prime = duplicate_motif_with_map(K, M)
    values: dict[Face, Fraction] = {}
    for i, f in enumerate(var_faces):
        values[f] = vec[i]
        values[as_face(prime.get(v, v) for v in f)] = -vec[i]
    rho = tuple(
        values.get(f, Fraction(0)) for f in duplicated.faces_of_dim(d)
    )
    spec = ProblemSpec(duplicated, d, Mode.UP, normalization)
    return DuplicationReport(
        duplicated, restricted, rho, verify_eigenpair(spec, mu, rho)
    )

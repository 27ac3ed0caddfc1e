"""Signless 1-Laplacian energies, norms, and eigenpair verification.

A candidate pair (mu, x) is an eigenpair when the set-valued inclusion
``0 in dI(x) - mu D Sgn(x)`` admits a selection: one scalar z per constraint
face, lying in the sign set of that face's coordinate sum, such that the
incident z's at every d-face hit ``mu * weight * Sgn(x_F)``.  Verification
is exact linear feasibility over the z's; the feasible point is returned as
a certificate.

Everything here is phrased over :class:`SumForm`, the generic shape
``I(x) = sum_rows |sum_{j in row} x_j|`` with a weighted 1-norm.  Complex
problems (up/down, normalized or not) reduce to it, and so do the
star-restricted problems used by motif duplication.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ._rat import ONE, ZERO, Rat, to_fraction
from .complexes import Face, Mode, SimplicialComplex
from .errors import (
    DegenerateNorm,
    DimensionOutOfRange,
    LengthMismatch,
    NegativeMu,
    ZeroVector,
)
from .feasibility import LinearSystem, solve

REASON_WRONG_VALUE = "WrongValue"
REASON_INFEASIBLE = "InclusionInfeasible"


class Normalization(enum.Enum):
    NORMALIZED = "normalized"
    UNNORMALIZED = "unnormalized"


@dataclass(frozen=True)
class ProblemSpec:
    """An eigenvalue problem: which complex, face dimension, operator
    direction, and norm weighting."""

    complex: SimplicialComplex
    dim: int
    operator: Mode
    normalization: Normalization

    def __post_init__(self) -> None:
        if not 0 <= self.dim <= self.complex.dim:
            raise DimensionOutOfRange(
                f"dimension {self.dim} not in [0, {self.complex.dim}]"
            )
        if self.operator is Mode.DOWN and self.dim < 1:
            raise DimensionOutOfRange("down problems need dimension >= 1")

    @property
    def faces(self) -> tuple[Face, ...]:
        return self.complex.faces_of_dim(self.dim)


@dataclass(frozen=True)
class SumForm:
    """I(x) = sum over rows of |sum of the row's coordinates|, with
    norm(x) = sum_i weights[i] |x_i|."""

    nvars: int
    rows: tuple[tuple[int, ...], ...]
    weights: tuple[Fraction, ...]


@dataclass(frozen=True)
class Certificate:
    """One z value per constraint face, witnessing the eigen-inclusion."""

    faces: tuple[Face, ...]
    values: tuple[Fraction, ...]

    def as_dict(self) -> dict[Face, Fraction]:
        return dict(zip(self.faces, self.values))


@dataclass(frozen=True)
class VerifyResult:
    accepted: bool
    certificate: Certificate | None
    reason: str | None

    def __bool__(self) -> bool:
        return self.accepted


def _sign(v) -> int:
    if v > 0:
        return 1
    if v < 0:
        return -1
    return 0


def as_chain(x: Sequence, nvars: int) -> tuple[Fraction, ...]:
    """Coerce a coordinate sequence into an exact chain vector."""
    vec = tuple(to_fraction(v) for v in x)
    if len(vec) != nvars:
        raise LengthMismatch(f"expected {nvars} coordinates, got {len(vec)}")
    return vec


# -- spec -> form --------------------------------------------------------------


def constraint_faces(spec: ProblemSpec) -> tuple[Face, ...]:
    """The faces carrying one z each: (d+1)-faces for UP, (d-1)-faces for DOWN."""
    d = spec.dim
    if spec.operator is Mode.UP:
        return spec.complex.faces_of_dim(d + 1)
    return spec.complex.faces_of_dim(d - 1)


def problem_form(spec: ProblemSpec) -> SumForm:
    K, d = spec.complex, spec.dim
    inc = K.incidence(d, spec.operator)
    rows = tuple(inc.row_support(i) for i in range(len(inc.row_faces)))
    if spec.normalization is Normalization.UNNORMALIZED:
        weights = (Fraction(1),) * K.num_faces(d)
    elif spec.operator is Mode.UP:
        weights = tuple(Fraction(w) for w in K.up_degrees(d))
    else:
        weights = (Fraction(d + 1),) * K.num_faces(d)
    return SumForm(K.num_faces(d), rows, weights)


# -- form-level operations -------------------------------------------------------


def form_energy(form: SumForm, x: Sequence) -> Fraction:
    vec = as_chain(x, form.nvars)
    return to_fraction(sum(abs(sum(vec[j] for j in row)) for row in form.rows))


def form_norm(form: SumForm, x: Sequence) -> Fraction:
    vec = as_chain(x, form.nvars)
    if any(w == 0 for w in form.weights):
        raise DegenerateNorm("norm weight vanishes on some coordinate")
    return to_fraction(sum(w * abs(v) for w, v in zip(form.weights, vec)))


def _incidence_lists(form: SumForm) -> list[list[int]]:
    incident: list[list[int]] = [[] for _ in range(form.nvars)]
    for c, row in enumerate(form.rows):
        for j in row:
            incident[j].append(c)
    return incident


def form_verify(form: SumForm, mu, x: Sequence) -> VerifyResult:
    """Exact eigenpair check on a SumForm; faces in the certificate are the
    row indices rendered as singleton tuples unless mapped by the caller."""
    mu = to_fraction(mu)
    vec = as_chain(x, form.nvars)
    if mu < 0:
        raise NegativeMu(f"candidate eigenvalue {mu} is negative")
    if all(v == 0 for v in vec):
        raise ZeroVector("eigenvectors must be non-zero")
    nrm = form_norm(form, vec)
    if nrm != 0 and mu != form_energy(form, vec) / nrm:
        return VerifyResult(False, None, REASON_WRONG_VALUE)

    sums = [sum(vec[j] for j in row) for row in form.rows]
    fixed: dict[int, int] = {c: _sign(s) for c, s in enumerate(sums) if s != 0}
    free = [c for c, s in enumerate(sums) if s == 0]
    free_pos = {c: k for k, c in enumerate(free)}
    incident = _incidence_lists(form)

    eq_rows: list[tuple[list, object]] = []
    ge_rows: list[tuple[list, object]] = []
    nfree = len(free)
    for i in range(form.nvars):
        const = sum(fixed.get(c, 0) for c in incident[i])
        cols = [c for c in incident[i] if c not in fixed]
        bound = mu * form.weights[i]
        if vec[i] != 0:
            target = bound * _sign(vec[i]) - const
            if not cols:
                if target != 0:
                    return VerifyResult(False, None, REASON_INFEASIBLE)
                continue
            coeffs = [ZERO] * nfree
            for c in cols:
                coeffs[free_pos[c]] += ONE
            eq_rows.append((coeffs, Rat(target)))
        else:
            if not cols:
                if abs(Fraction(const)) > bound:
                    return VerifyResult(False, None, REASON_INFEASIBLE)
                continue
            coeffs = [ZERO] * nfree
            for c in cols:
                coeffs[free_pos[c]] += ONE
            ge_rows.append((coeffs, Rat(-bound - const)))
            ge_rows.append(([-v for v in coeffs], Rat(-(bound - const))))

    zvals: dict[int, Fraction] = {c: Fraction(s) for c, s in fixed.items()}
    if nfree:
        if eq_rows or ge_rows:
            names = [f"z{c}" for c in free]
            system = LinearSystem.make(
                names,
                [(coeffs, "=", rhs) for coeffs, rhs in eq_rows]
                + [(coeffs, ">=", rhs) for coeffs, rhs in ge_rows],
                {n: (Fraction(-1), Fraction(1)) for n in names},
            )
            res = solve(system)
            if not res.feasible:
                return VerifyResult(False, None, REASON_INFEASIBLE)
            for c in free:
                zvals[c] = res.witness[f"z{c}"]
        else:
            for c in free:
                zvals[c] = Fraction(0)
    cert = Certificate(
        tuple((c,) for c in range(len(form.rows))),
        tuple(zvals[c] for c in range(len(form.rows))),
    )
    return VerifyResult(True, cert, None)


# -- spec-level operations --------------------------------------------------------


def _check_degenerate(spec: ProblemSpec) -> None:
    if (
        spec.operator is Mode.UP
        and spec.normalization is Normalization.NORMALIZED
        and any(d == 0 for d in spec.complex.up_degrees(spec.dim))
    ):
        raise DegenerateNorm(
            "normalized up problem needs every d-face to have positive up-degree"
        )


def energy(spec: ProblemSpec, x: Sequence) -> Fraction:
    """I(x): sum over constraint faces of |sum of incident coordinates|.
    Satisfies energy(t*x) = |t|*energy(x)."""
    return form_energy(problem_form(spec), x)


def norm(spec: ProblemSpec, x: Sequence) -> Fraction:
    """Weighted 1-norm: degree weights when normalized, plain 1-norm otherwise."""
    _check_degenerate(spec)
    return form_norm(problem_form(spec), x)


def face_key(face: Face) -> str:
    return ",".join(str(v) for v in face)


def build_inclusion_system(spec: ProblemSpec, mu, x: Sequence) -> LinearSystem:
    """The literal z-feasibility system for the inclusion
    ``0 in dI(x) - mu D Sgn(x)``: one z per constraint face, z pinned to the
    sign of its coordinate sum when that sum is non-zero, and the incident-z
    total at each d-face pinned to mu*weight*sign(x_F) (an interval when
    x_F = 0)."""
    mu = to_fraction(mu)
    if mu < 0:
        raise NegativeMu(f"candidate eigenvalue {mu} is negative")
    form = problem_form(spec)
    vec = as_chain(x, form.nvars)
    if all(v == 0 for v in vec):
        raise ZeroVector("eigenvectors must be non-zero")
    cfaces = constraint_faces(spec)
    names = [f"z:{face_key(f)}" for f in cfaces]
    rows: list[tuple[list, str, Fraction]] = []
    for c, row in enumerate(form.rows):
        s = sum(vec[j] for j in row)
        if s != 0:
            coeffs = [0] * len(names)
            coeffs[c] = 1
            rows.append((coeffs, "=", Fraction(_sign(s))))
    incident = _incidence_lists(form)
    for i in range(form.nvars):
        coeffs = [0] * len(names)
        for c in incident[i]:
            coeffs[c] += 1
        bound = mu * form.weights[i]
        if vec[i] != 0:
            rows.append((coeffs, "=", bound * _sign(vec[i])))
        else:
            rows.append((coeffs, ">=", -bound))
            rows.append(([-v for v in coeffs], ">=", -bound))
    box = {n: (Fraction(-1), Fraction(1)) for n in names}
    return LinearSystem.make(names, rows, box)


def verify_eigenpair(spec: ProblemSpec, mu, x: Sequence) -> VerifyResult:
    """Accept (mu, x) iff the inclusion system is feasible, returning the
    witness z's; rejects immediately with WrongValue when mu is not the
    Rayleigh quotient energy(x)/norm(x)."""
    _check_degenerate(spec)
    form = problem_form(spec)
    result = form_verify(form, mu, x)
    if result.certificate is None:
        return result
    cfaces = constraint_faces(spec)
    return VerifyResult(
        True, Certificate(cfaces, result.certificate.values), None
    )

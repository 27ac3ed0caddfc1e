"""Nodal domains of chain vectors and the per-domain renormalized
restrictions, which inherit the eigenvalue of the vector they came from."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .complexes import Face, Mode, SimplicialComplex
from .eigen import (
    ProblemSpec,
    VerifyResult,
    as_chain,
    problem_form,
    verify_eigenpair,
)
from .errors import DomainMismatch, ZeroVector


@dataclass(frozen=True)
class NodalDecomposition:
    """Maximal adjacency-connected components of a vector's support."""

    domains: tuple[tuple[Face, ...], ...]
    mode: Mode

    @property
    def count(self) -> int:
        return len(self.domains)


def nodal_domains(
    K: SimplicialComplex, d: int, x: Sequence, mode: Mode
) -> NodalDecomposition:
    """Split the support {F : x_F != 0} into maximal connected components
    under the chosen adjacency; ordered by smallest face index."""
    faces = K.faces_of_dim(d)
    vec = as_chain(x, len(faces))
    support = [i for i, v in enumerate(vec) if v != 0]
    if not support:
        raise ZeroVector("the zero vector has no nodal domains")
    nbrs = K.adjacency(d, mode)
    index = {f: i for i, f in enumerate(faces)}
    in_support = set(support)
    seen: set[int] = set()
    domains: list[tuple[Face, ...]] = []
    for start in support:
        if start in seen:
            continue
        comp = []
        stack = [start]
        seen.add(start)
        while stack:
            i = stack.pop()
            comp.append(i)
            for g in nbrs[faces[i]]:
                j = index[g]
                if j in in_support and j not in seen:
                    seen.add(j)
                    stack.append(j)
        domains.append(tuple(faces[i] for i in sorted(comp)))
    return NodalDecomposition(tuple(domains), mode)


def restrict_to_domain(
    spec: ProblemSpec, x: Sequence, domain: Sequence[Face]
) -> tuple[Fraction, ...]:
    """x scaled onto one nodal domain: values divided by the domain's
    weighted 1-norm, zero elsewhere; the result has norm exactly 1."""
    form = problem_form(spec)
    vec = as_chain(x, form.nvars)
    decomposition = nodal_domains(spec.complex, spec.dim, vec, spec.operator)
    wanted = tuple(domain)
    if wanted not in decomposition.domains:
        raise DomainMismatch(f"{wanted!r} is not a nodal domain of this vector")
    faces = spec.faces
    members = {faces.index(f) for f in wanted}
    total = sum(form.weights[i] * abs(vec[i]) for i in members)
    return tuple(
        vec[i] / total if i in members else Fraction(0) for i in range(form.nvars)
    )


@dataclass(frozen=True)
class DomainCheck:
    domain: tuple[Face, ...]
    restriction: tuple[Fraction, ...]
    result: VerifyResult


@dataclass(frozen=True)
class NodalCheckReport:
    mu: Fraction
    decomposition: NodalDecomposition
    checks: tuple[DomainCheck, ...]

    @property
    def all_accepted(self) -> bool:
        return all(c.result.accepted for c in self.checks)


def check_nodal_restriction_property(
    spec: ProblemSpec, mu, x: Sequence
) -> NodalCheckReport:
    """Verify that every nodal-domain restriction of an eigenpair is again an
    eigenpair with the same eigenvalue."""
    mu = Fraction(mu)
    decomposition = nodal_domains(spec.complex, spec.dim, x, spec.operator)
    checks = []
    for domain in decomposition.domains:
        restriction = restrict_to_domain(spec, x, domain)
        checks.append(
            DomainCheck(domain, restriction, verify_eigenpair(spec, mu, restriction))
        )
    return NodalCheckReport(mu, decomposition, tuple(checks))

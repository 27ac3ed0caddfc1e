"""Sign-vector enumeration of the constraint-row/coordinate arrangement.

Every non-zero chain vector realizes one sign pattern over the constraint
row sums and the coordinates.  Two vectors with the same pattern have the
same subdifferentials, so one representative per realizable pattern suffices
to exhaust the spectrum.  The enumeration walks the patterns depth first,
constraint rows before coordinates, pruning any prefix whose strict system
has no solution, and takes the antipodal quotient by forcing the first
non-zero coordinate positive.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterator, Sequence

from ._rat import ONE, ZERO, Rat, to_fraction
from .eigen import ProblemSpec, SumForm, problem_form
from .feasibility import _margin_core

SignVector = tuple[int, ...]

_BOX = (Rat(-1), ONE)


@dataclass(frozen=True)
class ArrangementFace:
    """A realizable sign pattern with a canonical interior point.

    The representative realizes every recorded sign exactly and is scaled to
    coprime integer coordinates with positive leading entry.
    """

    signs: SignVector
    representative: tuple[Fraction, ...]


def rows(spec: ProblemSpec) -> tuple[tuple[int, ...], ...]:
    """Dense coefficient vectors of all arrangement forms: one sum form per
    constraint face, then one coordinate form per d-face."""
    form = problem_form(spec)
    out = []
    for support in form.rows:
        coeffs = [0] * form.nvars
        for j in support:
            coeffs[j] = 1
        out.append(tuple(coeffs))
    for j in range(form.nvars):
        coeffs = [0] * form.nvars
        coeffs[j] = 1
        out.append(tuple(coeffs))
    return tuple(out)


def _canonical_scale(sol: Sequence) -> tuple[Fraction, ...]:
    """Clear denominators and divide by the gcd: coprime integer coordinates."""
    fracs = [to_fraction(v) for v in sol]
    scale = 1
    for v in fracs:
        d = v.denominator
        scale = scale * d // gcd(scale, d)
    nums = [int(v * scale) for v in fracs]
    g = 0
    for a in nums:
        g = gcd(g, abs(a))
    if g > 1:
        nums = [a // g for a in nums]
    return tuple(Fraction(a) for a in nums)


def enumerate_form_faces(form: SumForm) -> Iterator[ArrangementFace]:
    """All realizable sign vectors of a SumForm's arrangement, one canonical
    representative each, antipodal quotient included."""
    n = form.nvars
    if n == 0:
        return
    ncr = len(form.rows)
    total = ncr + n
    coeff: list[list[int]] = []
    for support in form.rows:
        row = [0] * n
        for j in support:
            row[j] = 1
        coeff.append(row)
    for j in range(n):
        row = [0] * n
        row[j] = 1
        coeff.append(row)

    box = [_BOX] * n
    signs: list[int] = [0] * total

    def lp(upto: int):
        eqs = []
        stricts = []
        for r in range(upto + 1):
            s = signs[r]
            if s == 0:
                eqs.append((coeff[r], ZERO))
            elif s > 0:
                stricts.append((coeff[r], ZERO))
            else:
                stricts.append(([-c for c in coeff[r]], ZERO))
        return _margin_core(n, eqs, stricts, box)

    def evaluate(r: int, point) -> int:
        row = coeff[r]
        s = sum(v for c, v in zip(row, point) if c)
        if s > 0:
            return 1
        if s < 0:
            return -1
        return 0

    def walk(r: int, witness, seen_nonzero: bool) -> Iterator[ArrangementFace]:
        if r == total:
            ok, sol, _ = lp(total - 1)
            assert ok, "leaf must be feasible"
            yield ArrangementFace(tuple(signs), _canonical_scale(sol))
            return
        if r < ncr:
            allowed = (0, 1, -1)
        elif not seen_nonzero:
            # zero vector excluded; first non-zero coordinate forced positive
            allowed = (1,) if r == total - 1 else (0, 1)
        else:
            allowed = (0, 1, -1)
        wsign = evaluate(r, witness) if witness is not None else 0
        for s in allowed:
            signs[r] = s
            nz = seen_nonzero or (r >= ncr and s != 0)
            if s == wsign and witness is not None:
                yield from walk(r + 1, witness, nz)
                continue
            ok, sol, _ = lp(r)
            if ok:
                yield from walk(r + 1, sol, nz)
        signs[r] = 0

    zero = [ZERO] * n
    yield from walk(0, zero, False)


def enumerate_faces(spec: ProblemSpec) -> Iterator[ArrangementFace]:
    """Arrangement faces of the spec's constraint rows plus coordinate
    hyperplanes; every non-zero chain vector lies (up to sign) in exactly
    one yielded face."""
    yield from enumerate_form_faces(problem_form(spec))

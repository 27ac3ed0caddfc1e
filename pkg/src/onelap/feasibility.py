"""Exact rational linear feasibility with witness extraction.

The solver is a two-phase primal simplex over exact rationals with native
lower/upper variable bounds and Bland's rule, so every answer is an exact
decision and every run is deterministic.  Strict inequalities are decided
by margin maximization: a shared margin variable ``t in [0, 1]`` is pushed
into every strict row and the system is strictly feasible iff the optimal
margin is positive.  The optimizer doubles as a canonical relative-interior
witness of the strict system.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from ._rat import ONE, ZERO, Rat, to_fraction
from .errors import MalformedSystem

Bound = tuple[Fraction | None, Fraction | None]

_RELATIONS = ("=", ">=", ">")


@dataclass(frozen=True)
class LinearRow:
    coeffs: tuple[Fraction, ...]
    relation: str
    rhs: Fraction


@dataclass(frozen=True)
class LinearSystem:
    """Rows over a named variable set, with optional per-variable box bounds."""

    variables: tuple[str, ...]
    rows: tuple[LinearRow, ...]
    bounds: tuple[Bound, ...]

    @classmethod
    def make(
        cls,
        variables: Sequence[str],
        rows: Iterable[tuple[Sequence, str, object]],
        bounds: Mapping[str, Bound] | None = None,
    ) -> "LinearSystem":
        names = tuple(variables)
        built = tuple(
            LinearRow(tuple(to_fraction(c) for c in coeffs), rel, to_fraction(rhs))
            for coeffs, rel, rhs in rows
        )
        bmap = bounds or {}
        packed = tuple(
            tuple(None if b is None else to_fraction(b) for b in bmap.get(v, (None, None)))
            for v in names
        )
        return cls(names, built, packed)

    def validate(self) -> None:
        n = len(self.variables)
        if len(set(self.variables)) != n:
            raise MalformedSystem("duplicate variable names")
        if len(self.bounds) != n:
            raise MalformedSystem("bounds not aligned with variables")
        for lo, hi in self.bounds:
            if lo is not None and hi is not None and lo > hi:
                raise MalformedSystem(f"empty bound interval [{lo}, {hi}]")
        for row in self.rows:
            if len(row.coeffs) != n:
                raise MalformedSystem("coefficient vector length mismatch")
            if row.relation not in _RELATIONS:
                raise MalformedSystem(f"unknown relation {row.relation!r}")


@dataclass(frozen=True)
class FeasibilityResult:
    feasible: bool
    witness: dict[str, Fraction] | None
    slack: Fraction

    @property
    def status(self) -> str:
        return "Feasible" if self.feasible else "Infeasible"


# -- bounded-variable simplex -------------------------------------------------

_LO, _HI, _FREE, _BASIC = 0, 1, 2, 3


class _Unbounded(Exception):
    pass


def _lp_maximize(ncols, bounds, rows, obj_col):
    """Maximize the variable in column obj_col (or nothing if obj_col < 0)
    subject to ``rows`` as equalities and the given bounds.

    bounds: list of (lo, hi) with None for an unbounded side.
    rows:   list of (coeff list, rhs).
    Returns (feasible, solution list) with exact rationals.
    """
    m = len(rows)
    n = ncols + m  # artificial columns appended
    lo = [b[0] for b in bounds] + [ZERO] * m
    hi = [b[1] for b in bounds] + [None] * m

    status = []
    val = []
    for j in range(ncols):
        if lo[j] is not None:
            status.append(_LO)
            val.append(lo[j])
        elif hi[j] is not None:
            status.append(_HI)
            val.append(hi[j])
        else:
            status.append(_FREE)
            val.append(ZERO)

    tab = []
    basis = []
    for i, (coeffs, rhs) in enumerate(rows):
        resid = rhs
        for c, v in zip(coeffs, val):
            if c and v:
                resid -= c * v
        row = [Rat(c) for c in coeffs] + [ZERO] * m + [Rat(rhs)]
        if resid < 0:
            row = [-c for c in row]
        row[ncols + i] = ONE
        tab.append(row)
        basis.append(ncols + i)
        status.append(_BASIC)
        val.append(None)

    def basic_values():
        out = []
        for i in range(m):
            row = tab[i]
            s = row[n]
            for j in range(ncols):
                if status[j] != _BASIC:
                    vj = val[j]
                    if vj:
                        cij = row[j]
                        if cij:
                            s -= cij * vj
            out.append(s)
        return out

    def reduced_costs(cost):
        z = list(cost)
        for i in range(m):
            cb = cost[basis[i]]
            if cb:
                row = tab[i]
                for j in range(n):
                    if row[j]:
                        z[j] -= cb * row[j]
        return z

    def run(zrow):
        while True:
            xb = basic_values()
            enter = -1
            direction = 0
            for j in range(n):
                if status[j] == _BASIC:
                    continue
                lj, hj = lo[j], hi[j]
                if lj is not None and hj is not None and lj == hj:
                    continue
                zj = zrow[j]
                if not zj:
                    continue
                if status[j] == _FREE:
                    enter, direction = j, (1 if zj > 0 else -1)
                    break
                if status[j] == _LO and zj > 0:
                    enter, direction = j, 1
                    break
                if status[j] == _HI and zj < 0:
                    enter, direction = j, -1
                    break
            if enter < 0:
                return xb
            e, d = enter, direction

            theta = None
            leave = -1
            for i in range(m):
                a = tab[i][e]
                if not a:
                    continue
                rate = -a if d > 0 else a
                bi = basis[i]
                if rate > 0:
                    if hi[bi] is None:
                        continue
                    cap = (hi[bi] - xb[i]) / rate
                else:
                    if lo[bi] is None:
                        continue
                    cap = (xb[i] - lo[bi]) / (-rate)
                assert cap >= 0, "simplex lost primal feasibility"
                if (
                    theta is None
                    or cap < theta
                    or (cap == theta and basis[i] < basis[leave])
                ):
                    theta, leave = cap, i

            if d > 0:
                self_cap = None if hi[e] is None else hi[e] - val[e]
            else:
                self_cap = None if lo[e] is None else val[e] - lo[e]

            if theta is None and self_cap is None:
                raise _Unbounded
            if self_cap is not None and (theta is None or self_cap < theta):
                # bound flip, no basis change
                val[e] = hi[e] if d > 0 else lo[e]
                status[e] = _HI if d > 0 else _LO
                continue

            r = leave
            prow = tab[r]
            piv = prow[e]
            leaving = basis[r]
            rate = -piv if d > 0 else piv
            to_hi = rate > 0
            if piv != ONE:
                inv = ONE / piv
                for j in range(n + 1):
                    if prow[j]:
                        prow[j] = prow[j] * inv
            for i in range(m):
                if i == r:
                    continue
                f = tab[i][e]
                if f:
                    trow = tab[i]
                    for j in range(n + 1):
                        pj = prow[j]
                        if pj:
                            trow[j] -= f * pj
            fz = zrow[e]
            if fz:
                for j in range(n):
                    pj = prow[j]
                    if pj:
                        zrow[j] -= fz * pj
            status[leaving] = _HI if to_hi else _LO
            val[leaving] = hi[leaving] if to_hi else lo[leaving]
            basis[r] = e
            status[e] = _BASIC
            val[e] = None

    # phase 1: drive artificials to zero
    cost1 = [ZERO] * ncols + [-ONE] * m
    xb = run(reduced_costs(cost1))
    for i in range(m):
        if basis[i] >= ncols and xb[i] != 0:
            return False, None
    for j in range(ncols, n):
        hi[j] = ZERO  # freeze artificials
        if status[j] != _BASIC:
            val[j] = ZERO

    # phase 2
    if obj_col >= 0:
        cost2 = [ZERO] * n
        cost2[obj_col] = ONE
        xb = run(reduced_costs(cost2))

    sol = [None] * ncols
    for j in range(ncols):
        if status[j] != _BASIC:
            sol[j] = val[j]
    for i in range(m):
        if basis[i] < ncols:
            sol[basis[i]] = xb[i]
    return True, sol


# -- public operations ---------------------------------------------------------


def _margin_core(ncols, eq_rows, strict_rows, bounds):
    """Margin LP over raw coefficient rows.

    Returns (strictly_feasible, solution, margin) where solution covers the
    ncols structural variables only.
    """
    nstrict = len(strict_rows)
    total = ncols + (1 if nstrict else 0) + nstrict
    all_bounds = list(bounds)
    rows = []
    for coeffs, rhs in eq_rows:
        rows.append((list(coeffs) + [ZERO] * (total - ncols), rhs))
    if nstrict:
        t_col = ncols
        all_bounds.append((ZERO, ONE))
        all_bounds.extend([(ZERO, None)] * nstrict)
        for k, (coeffs, rhs) in enumerate(strict_rows):
            ext = list(coeffs) + [ZERO] * (total - ncols)
            ext[t_col] = -ONE
            ext[t_col + 1 + k] = -ONE
            rows.append((ext, rhs))
    try:
        ok, sol = _lp_maximize(total, all_bounds, rows, ncols if nstrict else -1)
    except _Unbounded:
        raise MalformedSystem("margin objective unbounded") from None
    if not ok:
        return False, None, ZERO
    tstar = sol[ncols] if nstrict else ZERO
    if nstrict and tstar <= 0:
        return False, None, ZERO
    return True, sol[:ncols], tstar


def solve(system: LinearSystem) -> FeasibilityResult:
    """Exact feasibility decision for a LinearSystem.

    Strict rows are decided through margin maximization; the system is
    Feasible iff the closed relaxation is solvable and the optimal margin is
    strictly positive.  The witness is the margin optimizer.
    """
    system.validate()
    ncols = len(system.variables)
    ge_rows = [r for r in system.rows if r.relation == ">="]
    n_ge = len(ge_rows)
    total = ncols + n_ge  # one slack column per ">=" row
    bounds = [
        (None if lo is None else Rat(lo), None if hi is None else Rat(hi))
        for lo, hi in system.bounds
    ] + [(ZERO, None)] * n_ge

    eq_rows = []
    strict_rows = []
    k = 0
    for row in system.rows:
        coeffs = [Rat(c) for c in row.coeffs] + [ZERO] * n_ge
        rhs = Rat(row.rhs)
        if row.relation == "=":
            eq_rows.append((coeffs, rhs))
        elif row.relation == ">=":
            coeffs[ncols + k] = -ONE
            k += 1
            eq_rows.append((coeffs, rhs))
        else:
            strict_rows.append((coeffs, rhs))

    ok, sol, _ = _margin_core(total, eq_rows, strict_rows, bounds)
    if not ok:
        return FeasibilityResult(False, None, Fraction(0))
    witness = {
        name: to_fraction(sol[j]) for j, name in enumerate(system.variables)
    }
    slack = Fraction(0)
    if strict_rows:
        margins = []
        for coeffs, rhs in strict_rows:
            lhs = sum(c * sol[j] for j, c in enumerate(coeffs) if c)
            margins.append(lhs - rhs)
        slack = to_fraction(min(margins))
    return FeasibilityResult(True, witness, slack)


def maximize_margin(
    equalities: Sequence[Sequence],
    strict_rows: Sequence[Sequence],
    box: Sequence[tuple],
    variables: Sequence[str] | None = None,
) -> FeasibilityResult:
    """Margin-maximal witness for a homogeneous system of equalities and
    strict inequalities within a finite box.

    The witness is the canonical relative-interior representative of the open
    polyhedral face cut out by the rows.
    """
    ncols = len(box)
    names = tuple(variables) if variables is not None else tuple(
        f"x{j}" for j in range(ncols)
    )
    if len(names) != ncols:
        raise MalformedSystem("box and variable names disagree")
    bounds = []
    for lo, hi in box:
        if lo is None or hi is None:
            raise MalformedSystem("margin problems need a finite box")
        bounds.append((Rat(lo), Rat(hi)))
    for rows in (equalities, strict_rows):
        for coeffs in rows:
            if len(coeffs) != ncols:
                raise MalformedSystem("coefficient vector length mismatch")
    eq = [([Rat(c) for c in coeffs], ZERO) for coeffs in equalities]
    st = [([Rat(c) for c in coeffs], ZERO) for coeffs in strict_rows]
    ok, sol, _ = _margin_core(ncols, eq, st, bounds)
    if not ok:
        return FeasibilityResult(False, None, Fraction(0))
    witness = {name: to_fraction(sol[j]) for j, name in enumerate(names)}
    slack = Fraction(0)
    if st:
        slack = to_fraction(min(sum(c * sol[j] for j, c in enumerate(coeffs) if c) for coeffs, _ in st))
    return FeasibilityResult(True, witness, slack)

"""Complete spectra from arrangement representatives, the brute-force grid
oracle used to cross-check them, and the zero-eigenvalue conditions.

Every eigenvector shares its sign pattern with the canonical representative
of one arrangement face, and equal sign patterns transfer eigenpairs, so
verifying each representative at its own Rayleigh quotient yields the whole
spectrum.  The grid oracle reproduces the same set from scratch by scanning
integer points, complete once the grid bound reaches (N-1)! for N
coordinates.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .arrangement import ArrangementFace, enumerate_form_faces
from .combinatorics import FaceGraph, is_k_colorable
from .complexes import Face, Mode, SimplicialComplex
from .eigen import (
    Certificate,
    ProblemSpec,
    SumForm,
    _check_degenerate,
    constraint_faces,
    form_energy,
    form_norm,
    form_verify,
    problem_form,
)
from .errors import BudgetExceeded, DimensionOutOfRange, EmptyDimension

DEFAULT_GRID_BUDGET = 2_000_000
DEFAULT_WITNESS_CAP = 8


@dataclass(frozen=True)
class Eigenpair:
    mu: Fraction
    vector: tuple[Fraction, ...]
    certificate: Certificate


@dataclass(frozen=True)
class SpectrumStats:
    faces_enumerated: int
    verifier_calls: int
    accepted: int


@dataclass(frozen=True)
class SpectrumReport:
    spec: ProblemSpec | None
    eigenvalues: tuple[Fraction, ...]
    witnesses: dict[Fraction, tuple[Eigenpair, ...]]
    stats: SpectrumStats


def _spectrum_core(
    form: SumForm,
    witness_cap: int,
    retain_all: bool,
    threads: int,
    cert_faces: tuple[Face, ...] | None,
) -> SpectrumReport:
    faces = list(enumerate_form_faces(form))

    def judge(face: ArrangementFace):
        y = face.representative
        mu = form_energy(form, y) / form_norm(form, y)
        return mu, y, form_verify(form, mu, y)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(judge, faces))
    else:
        results = [judge(face) for face in faces]

    witnesses: dict[Fraction, list[Eigenpair]] = {}
    accepted = 0
    for mu, y, res in results:
        if not res.accepted:
            continue
        accepted += 1
        bucket = witnesses.setdefault(mu, [])
        if retain_all or len(bucket) < witness_cap:
            cert = res.certificate
            if cert_faces is not None:
                cert = Certificate(cert_faces, cert.values)
            bucket.append(Eigenpair(mu, y, cert))
    eigenvalues = tuple(sorted(witnesses))
    stats = SpectrumStats(len(faces), len(results), accepted)
    return SpectrumReport(
        None, eigenvalues, {mu: tuple(ws) for mu, ws in witnesses.items()}, stats
    )


def compute_form_spectrum(
    form: SumForm,
    *,
    witness_cap: int = DEFAULT_WITNESS_CAP,
    retain_all: bool = False,
    cert_faces: tuple[Face, ...] | None = None,
) -> SpectrumReport:
    """Spectrum of a bare SumForm (used for star-restricted problems)."""
    return _spectrum_core(form, witness_cap, retain_all, 1, cert_faces)


def compute_spectrum(
    spec: ProblemSpec,
    *,
    witness_cap: int = DEFAULT_WITNESS_CAP,
    retain_all: bool = False,
    threads: int = 1,
) -> SpectrumReport:
    """The complete eigenvalue set with witness eigenpairs and statistics.

    Each arrangement representative y is tested at mu = energy(y)/norm(y);
    the accepted values are exactly the spectrum.
    """
    _check_degenerate(spec)
    if spec.complex.num_faces(spec.dim) == 0:
        raise EmptyDimension(f"no faces of dimension {spec.dim}")
    report = _spectrum_core(
        problem_form(spec), witness_cap, retain_all, threads, constraint_faces(spec)
    )
    return SpectrumReport(spec, report.eigenvalues, report.witnesses, report.stats)


def extreme_eigenvalues(spec: ProblemSpec) -> tuple[Fraction, Fraction]:
    """(min, max) of energy/norm over arrangement representatives; these are
    the smallest and largest eigenvalues."""
    _check_degenerate(spec)
    if spec.complex.num_faces(spec.dim) == 0:
        raise EmptyDimension(f"no faces of dimension {spec.dim}")
    form = problem_form(spec)
    lo = hi = None
    for face in enumerate_form_faces(form):
        ratio = form_energy(form, face.representative) / form_norm(
            form, face.representative
        )
        lo = ratio if lo is None or ratio < lo else lo
        hi = ratio if hi is None or ratio > hi else hi
    return lo, hi


def grid_oracle_spectrum(
    spec: ProblemSpec,
    grid_bound: int,
    *,
    budget: int = DEFAULT_GRID_BUDGET,
) -> set[Fraction]:
    """Brute-force spectrum over the integer grid {-C..C}^N.

    Complete whenever C >= (N-1)!, since the arrangement's polyhedron
    vertices have coordinates clearable to integers of that size and every
    eigenvalue is carried by such a vertex.  (Hadamard's determinant bound
    would allow the smaller C = 2*(sqrt(N)/2)^N; the factorial form is the
    default here.)  Verification outcomes are cached per sign pattern since
    the inclusion system depends on the candidate only through its signs and
    Rayleigh quotient.
    """
    _check_degenerate(spec)
    if grid_bound < 1:
        raise DimensionOutOfRange("grid bound must be >= 1")
    form = problem_form(spec)
    n = form.nvars
    points = (2 * grid_bound + 1) ** n
    if points > budget:
        raise BudgetExceeded(
            f"grid enumeration needs {points} points, budget is {budget}"
        )
    values: set[Fraction] = set()
    cache: dict[tuple, bool] = {}
    rng = range(-grid_bound, grid_bound + 1)
    for x in product(rng, repeat=n):
        lead = next((v for v in x if v != 0), 0)
        if lead <= 0:  # skip zero and take the antipodal quotient
            continue
        vec = tuple(Fraction(v) for v in x)
        mu = form_energy(form, vec) / form_norm(form, vec)
        signs = tuple(
            (s > 0) - (s < 0)
            for s in (sum(x[j] for j in row) for row in form.rows)
        ) + tuple((v > 0) - (v < 0) for v in x)
        key = (signs, mu)
        hit = cache.get(key)
        if hit is None:
            hit = form_verify(form, mu, vec).accepted
            cache[key] = hit
        if hit:
            values.add(mu)
    return values


@dataclass(frozen=True)
class ZeroConditionReport:
    """The three sufficient conditions for 0 being an up eigenvalue."""

    fewer_cofaces: bool          # more d-faces than (d+1)-faces
    degree_bound: bool           # all up-degrees <= d+2, one strictly below
    colorable: bool              # up graph is (d+2)-colorable
    implies_zero: bool
    num_d: int
    num_d_plus_1: int
    max_up_degree: int
    min_up_degree: int


def check_zero_eigenvalue_conditions(K: SimplicialComplex, d: int) -> ZeroConditionReport:
    """Evaluate the sufficient conditions for 0 in the up spectrum at d."""
    if not 0 <= d < K.dim:
        raise DimensionOutOfRange(f"dimension {d} not in [0, {K.dim - 1}]")
    nd = K.num_faces(d)
    nd1 = K.num_faces(d + 1)
    degs = K.up_degrees(d)
    cond1 = nd > nd1
    cond2 = all(deg <= d + 2 for deg in degs) and any(deg < d + 2 for deg in degs)
    graph = FaceGraph.from_complex(K, d, Mode.UP)
    cond3 = is_k_colorable(graph.adj, d + 2)
    return ZeroConditionReport(
        cond1,
        cond2,
        cond3,
        cond1 or cond2 or cond3,
        nd,
        nd1,
        max(degs),
        min(degs),
    )

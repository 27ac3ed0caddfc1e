"""Acceptance gate: one test per criterion, each printing a pass line with
its runtime.  Exact arithmetic means every comparison below is ==, no
tolerances anywhere.  Run with ``pytest -s tests/test_acceptance.py`` to see
the per-criterion lines.
"""

import time
from fractions import Fraction as F
from math import factorial

from onelap.catalog import simplex
from onelap.combinatorics import bound_report
from onelap.complexes import Mode, SimplicialComplex
from onelap.constructions import (
    check_duplication_eigenpair,
    check_wedge_spectrum,
    closure,
    link,
    star,
    star_restricted_form,
    wedge_sum,
)
from onelap.eigen import ProblemSpec, verify_eigenpair
from onelap.nodal import check_nodal_restriction_property
from onelap.spectrum import (
    check_zero_eigenvalue_conditions,
    compute_form_spectrum,
    compute_spectrum,
    extreme_eigenvalues,
    grid_oracle_spectrum,
)

from corpus import (
    ALL_PROBLEMS,
    COMPLEXES,
    NORM,
    UNNORM,
    cached_spectrum,
    generate_wedge_pairs,
    problem,
)


def _passed(n, detail, t0):
    print(f"\n[PASS] criterion {n}: {detail} ({time.monotonic() - t0:.2f}s)")


def test_criterion_1_tetrahedron_spectrum():
    t0 = time.monotonic()
    spec = problem(("tetrahedron", 2, Mode.UP, NORM))
    report = compute_spectrum(spec)
    assert report.eigenvalues == (F(0), F(1))
    assert verify_eigenpair(spec, 0, (1, -1, 1, -1)).accepted
    assert verify_eigenpair(spec, 1, (1, 0, 0, 0)).accepted
    elapsed = time.monotonic() - t0
    assert elapsed < 1.0
    _passed(1, "tetrahedron spectrum {0, 1} with the paper's witnesses", t0)


def test_criterion_2_simplex_family():
    t0 = time.monotonic()
    for n in (2, 3, 4):
        spec = ProblemSpec(simplex(n), n - 1, Mode.UP, NORM)
        assert cached_spectrum(spec).eigenvalues == (F(0), F(1)), n
    elapsed = time.monotonic() - t0
    assert elapsed < 30.0
    _passed(2, "spectrum {0, 1} on the n-simplex at d = n-1 for n in {2,3,4}", t0)


def test_criterion_3_oracle_equivalence():
    t0 = time.monotonic()
    checked = 0
    for spec in ALL_PROBLEMS:
        n = spec.complex.num_faces(spec.dim)
        if n > 4:
            continue
        bound = factorial(max(n - 1, 1))
        assert grid_oracle_spectrum(spec, bound) == set(
            cached_spectrum(spec).eigenvalues
        ), spec
        checked += 1
    elapsed = time.monotonic() - t0
    assert elapsed < 300.0
    assert checked >= 10
    _passed(3, f"grid oracle at C=(N-1)! matches the engine on {checked} problems", t0)


def test_criterion_4_range_and_extremes():
    t0 = time.monotonic()
    for spec in ALL_PROBLEMS:
        report = cached_spectrum(spec)
        if spec.normalization is NORM:
            assert all(0 <= v <= 1 for v in report.eigenvalues), spec
        if (
            spec.operator is Mode.UP
            and spec.normalization is NORM
            and spec.complex.num_faces(spec.dim + 1) > 0
            and 0 not in spec.complex.up_degrees(spec.dim)
        ):
            assert F(1) in report.eigenvalues, spec
        lo, hi = extreme_eigenvalues(spec)
        assert lo in report.eigenvalues and hi in report.eigenvalues
        assert lo == report.eigenvalues[0] and hi == report.eigenvalues[-1]
    _passed(4, f"ranges and extremes hold on all {len(ALL_PROBLEMS)} problems", t0)


def test_criterion_5_zero_eigenvalue_conditions():
    t0 = time.monotonic()
    checked = 0
    for name, K in COMPLEXES.items():
        for d in range(K.dim):
            if K.num_faces(d) > 6:
                continue
            report = check_zero_eigenvalue_conditions(K, d)
            if report.implies_zero:
                spec = ProblemSpec(K, d, Mode.UP, UNNORM)
                assert F(0) in cached_spectrum(spec).eigenvalues, (name, d)
                checked += 1
    assert checked >= 6
    _passed(5, f"each satisfied zero-condition produced 0 in the spectrum ({checked} cases)", t0)


def test_criterion_6_wedge_theorems():
    t0 = time.monotonic()
    cases = generate_wedge_pairs()
    assert len(cases) >= 20
    for i, (left, right, K1, f1, K2, f2, k, d, op, nrm) in enumerate(cases):
        wedge = wedge_sum(K1, f1, K2, f2)
        s1 = set(cached_spectrum(ProblemSpec(K1, d, op, nrm)).eigenvalues)
        s2 = set(cached_spectrum(ProblemSpec(K2, d, op, nrm)).eigenvalues)
        sw = set(cached_spectrum(ProblemSpec(wedge, d, op, nrm)).eigenvalues)
        assert sw == s1 | s2, (left, right, k, d, op, nrm)
        if i % 7 == 0:  # also drive the op surface on a sample
            assert check_wedge_spectrum(K1, f1, K2, f2, d, op, nrm).holds
    elapsed = time.monotonic() - t0
    assert elapsed < 600.0
    _passed(6, f"wedge spectrum union holds on {len(cases)} generated pairs", t0)


def test_criterion_7_nodal_restrictions():
    t0 = time.monotonic()
    pairs = 0
    for spec in ALL_PROBLEMS:
        report = cached_spectrum(spec)
        for mu, witnesses in report.witnesses.items():
            for pair in witnesses:
                check = check_nodal_restriction_property(spec, mu, pair.vector)
                assert check.all_accepted, (spec, mu, pair.vector)
                pairs += 1
    assert pairs >= 100
    _passed(7, f"all nodal-domain restrictions re-verified ({pairs} eigenpairs)", t0)


def test_criterion_8_coloring_bound_sharpness():
    t0 = time.monotonic()
    for d in (1, 2):
        K = simplex(d + 1)
        c1 = cached_spectrum(ProblemSpec(K, d, Mode.UP, NORM)).eigenvalues[0]
        mu_prev = cached_spectrum(
            ProblemSpec(K, K.dim - 1, Mode.UP, UNNORM)
        ).eigenvalues[0]
        report = bound_report(K, d, mu_prev=mu_prev, c1=c1)
        line = next(c for c in report.checks if c.name == "c1<=coloring_bound")
        assert line.lhs == line.rhs == 0, d
    # the inequality itself holds wherever it is evaluable on the corpus
    checked = 0
    for name, K in COMPLEXES.items():
        if K.dim < 1:
            continue
        mu_prev = cached_spectrum(
            ProblemSpec(K, K.dim - 1, Mode.UP, UNNORM)
        ).eigenvalues[0]
        for d in range(K.dim + 1):
            if K.num_faces(d) > 6 or K.num_faces(d + 1) == 0:
                continue
            if 0 in K.up_degrees(d):
                continue
            c1 = cached_spectrum(ProblemSpec(K, d, Mode.UP, NORM)).eigenvalues[0]
            report = bound_report(K, d, mu_prev=mu_prev, c1=c1)
            line = next(c for c in report.checks if c.name == "c1<=coloring_bound")
            assert line.holds, (name, d)
            checked += 1
    assert checked >= 6
    _passed(8, f"coloring bound sharp on simplexes, holds on {checked} corpus cases", t0)


def test_criterion_9_inequality_suite():
    t0 = time.monotonic()
    for name, K in COMPLEXES.items():
        if K.dim < 1:
            continue
        mu_prev = cached_spectrum(
            ProblemSpec(K, K.dim - 1, Mode.UP, UNNORM)
        ).eigenvalues[0]
        report = bound_report(K, K.dim, mu_prev=mu_prev, c1=None)
        failing = [c for c in report.checks if not c.holds]
        assert not failing, (name, failing)
    remark = COMPLEXES["remark5"]
    mu_prev = cached_spectrum(ProblemSpec(remark, 1, Mode.UP, UNNORM)).eigenvalues[0]
    report = bound_report(remark, 2, mu_prev=mu_prev, c1=None)
    assert report.inputs["alpha"] == 3 and report.inputs["alpha_d"] == 4
    _passed(9, "the full inequality suite holds on every corpus complex", t0)


def _duplication_instances():
    path = COMPLEXES["path"]
    bowtie = COMPLEXES["bowtie"]
    triangle = COMPLEXES["triangle"]
    shared = COMPLEXES["shared_edge"]
    twotri = COMPLEXES["two_triangles"]
    two_tetra = wedge_sum(simplex(3), (1,), simplex(3), (1,))
    return [
        ("path edge motif", path, closure(path, [(1, 2)]), 1, UNNORM),
        ("path middle vertex", path, closure(path, [(2,)]), 1, UNNORM),
        ("bowtie triangle", bowtie, closure(bowtie, [(1, 2, 3)]), 1, NORM),
        ("triangle vertex", triangle, closure(triangle, [(1,)]), 1, NORM),
        ("shared-edge third vertex", shared, closure(shared, [(3,)]), 1, NORM),
        ("disjoint triangle", twotri, closure(twotri, [(1, 2, 3)]), 1, NORM),
        ("tetra in vertex wedge", two_tetra, closure(two_tetra, [(1, 2, 3, 4)]), 2, NORM),
    ]


def test_criterion_10_duplication():
    t0 = time.monotonic()
    instances = _duplication_instances()
    assert len(instances) >= 5
    verified = 0
    for name, K, motif, d, nrm in instances:
        form, var_faces, _ = star_restricted_form(K, motif, d, nrm)
        restricted = compute_form_spectrum(form)
        assert restricted.eigenvalues, name
        for mu, witnesses in restricted.witnesses.items():
            for pair in witnesses[:2]:
                check = check_duplication_eigenpair(K, motif, d, mu, pair.vector, nrm)
                assert check.restricted.accepted, (name, mu)
                assert check.result.accepted, (name, mu)
                verified += 1
    assert verified >= 10

    # Corollary case: an eigenvector of Cl St M vanishing on the link puts
    # its eigenvalue into the duplicated complex's spectrum.
    triangle = COMPLEXES["triangle"]
    motif = closure(triangle, [(1,)])
    cl_st = SimplicialComplex(closure(triangle, star(triangle, motif)))
    spec = ProblemSpec(cl_st, 1, Mode.UP, NORM)
    link_edges = {f for f in link(triangle, motif) if len(f) == 2}
    _, var_faces, _ = star_restricted_form(triangle, motif, 1, NORM)
    found = 0
    for mu, witnesses in cached_spectrum(spec).witnesses.items():
        for pair in witnesses:
            values = dict(zip(cl_st.faces_of_dim(1), pair.vector))
            if any(values[f] != 0 for f in link_edges):
                continue
            h = tuple(values[f] for f in var_faces)
            if all(v == 0 for v in h):
                continue
            check = check_duplication_eigenpair(triangle, motif, 1, mu, h, NORM)
            assert check.holds
            dup_spec = ProblemSpec(check.duplicated, 1, Mode.UP, NORM)
            assert mu in cached_spectrum(dup_spec).eigenvalues
            found += 1
    assert found >= 1
    _passed(10, f"duplication eigenpairs verified ({verified} pairs, corollary included)", t0)

"""Command-line surface: file formats, subcommands, machine-readable reports.

Exit codes: 0 success, 1 semantic rejection or failed assertion, 2 input or
parse error, 3 degenerate problem, 4 search budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from ._rat import format_rational, parse_rational
from . import combinatorics, constructions, nodal, spectrum
from .catalog import builtin
from .complexes import Face, Mode, SimplicialComplex, as_face
from .eigen import Normalization, ProblemSpec, face_key, verify_eigenpair
from .errors import (
    BudgetExceeded,
    ConditionViolated,
    DegenerateNorm,
    FaceNotInComplex,
    NotAMotif,
    OneLapError,
)

EXIT_OK = 0
EXIT_REJECTED = 1
EXIT_INPUT = 2
EXIT_DEGENERATE = 3
EXIT_BUDGET = 4


# -- file formats ---------------------------------------------------------------


def load_complex_file(path: str) -> SimplicialComplex:
    with open(path) as fh:
        data = json.load(fh)
    if not isinstance(data, dict) or "maximal_faces" not in data:
        raise OneLapError("complex file needs a 'maximal_faces' field")
    faces = [list(f) for f in data["maximal_faces"]]
    listed = data.get("vertices")
    if listed:
        present = {v for f in faces for v in f}
        faces.extend([[v] for v in listed if v not in present])
    return SimplicialComplex.from_maximal_faces(faces)


def complex_to_json(K: SimplicialComplex) -> dict:
    return {
        "vertices": list(K.vertices),
        "maximal_faces": [list(f) for f in K.maximal_faces()],
    }


def load_vector_file(path: str, spec: ProblemSpec) -> tuple[Fraction, ...]:
    with open(path) as fh:
        data = json.load(fh)
    if not isinstance(data, dict):
        raise OneLapError("vector file must be a JSON object")
    faces = spec.faces
    index = {face_key(f): i for i, f in enumerate(faces)}
    values = [Fraction(0)] * len(faces)
    for key, text in data.items():
        if key not in index:
            raise FaceNotInComplex(f"{key!r} is not a {spec.dim}-face of the complex")
        values[index[key]] = parse_rational(str(text))
    return tuple(values)


def _vector_json(faces: Sequence[Face], values: Sequence[Fraction]) -> dict:
    return {
        face_key(f): format_rational(v)
        for f, v in zip(faces, values)
        if v != 0
    }


def _certificate_json(cert) -> dict:
    return {face_key(f): format_rational(v) for f, v in zip(cert.faces, cert.values)}


# -- shared argument handling ------------------------------------------------------


def _add_complex_arg(p: argparse.ArgumentParser, suffix: str = "") -> None:
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument(f"--input{suffix}", help="complex JSON file")
    group.add_argument(
        f"--builtin{suffix}", help="named complex: simplex:n, path, remark5"
    )


def _get_complex(args, suffix: str = "") -> SimplicialComplex:
    path = getattr(args, f"input{suffix}")
    name = getattr(args, f"builtin{suffix}")
    return load_complex_file(path) if path is not None else builtin(name)


def _add_problem_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--op", choices=["up", "down"], required=True)
    p.add_argument(
        "--norm", choices=["normalized", "unnormalized"], default="normalized"
    )


def _problem(args, K: SimplicialComplex) -> ProblemSpec:
    return ProblemSpec(K, args.dim, Mode(args.op), Normalization(args.norm))


def _problem_json(args) -> dict:
    out = {
        "source": getattr(args, "input", None) or getattr(args, "builtin", None),
        "dim": getattr(args, "dim", None),
        "operator": getattr(args, "op", None),
        "normalization": getattr(args, "norm", None),
    }
    if getattr(args, "seed", None) is not None:
        out["seed"] = args.seed
    return out


def _parse_face(text: str) -> Face:
    return as_face(int(v) for v in text.split(","))


def _emit(payload: dict, as_json: bool, lines: Sequence[str]) -> None:
    if as_json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)


# -- subcommands --------------------------------------------------------------------


def cmd_spectrum(args) -> int:
    spec = _problem(args, _get_complex(args))
    report = spectrum.compute_spectrum(
        spec,
        witness_cap=args.witness_cap,
        retain_all=args.all_witnesses,
        threads=args.threads,
    )
    eig_text = ", ".join(format_rational(v) for v in report.eigenvalues)
    payload = {
        "problem": _problem_json(args),
        "eigenvalues": [format_rational(v) for v in report.eigenvalues],
        "witnesses": {
            format_rational(mu): [
                {
                    "vector": _vector_json(spec.faces, w.vector),
                    "certificate": _certificate_json(w.certificate),
                }
                for w in ws
            ]
            for mu, ws in report.witnesses.items()
        },
        "stats": {
            "faces_enumerated": report.stats.faces_enumerated,
            "verifier_calls": report.stats.verifier_calls,
            "accepted": report.stats.accepted,
        },
    }
    lines = [f"eigenvalues: {eig_text}"]
    if args.seed is not None:
        lines.insert(0, f"seed: {args.seed}")
    for mu in report.eigenvalues:
        first = report.witnesses[mu][0]
        vec = " ".join(
            f"{face_key(f)}={format_rational(v)}"
            for f, v in zip(spec.faces, first.vector)
            if v != 0
        )
        lines.append(f"witness mu={format_rational(mu)}: {vec}")
    lines.append(
        f"stats: faces={report.stats.faces_enumerated}"
        f" verified={report.stats.verifier_calls} accepted={report.stats.accepted}"
    )
    _emit(payload, args.json, lines)
    return EXIT_OK


def cmd_verify(args) -> int:
    spec = _problem(args, _get_complex(args))
    mu = parse_rational(args.mu)
    x = load_vector_file(args.vector, spec)
    result = verify_eigenpair(spec, mu, x)
    if result.accepted:
        print(
            json.dumps(
                {"accepted": True, "certificate": _certificate_json(result.certificate)},
                indent=2,
                sort_keys=True,
            )
        )
        return EXIT_OK
    print(json.dumps({"accepted": False, "reason": result.reason}))
    return EXIT_REJECTED


def cmd_oracle(args) -> int:
    spec = _problem(args, _get_complex(args))
    n = spec.complex.num_faces(spec.dim)
    bound = args.grid_bound
    if bound is None:
        bound = 1
        for i in range(1, n):
            bound *= i  # (N-1)!
        if args.grid_cap is not None:
            bound = min(bound, args.grid_cap)
    oracle = spectrum.grid_oracle_spectrum(spec, bound, budget=args.budget)
    engine = set(spectrum.compute_spectrum(spec).eigenvalues)
    oracle_text = "{" + ", ".join(format_rational(v) for v in sorted(oracle)) + "}"
    engine_text = "{" + ", ".join(format_rational(v) for v in sorted(engine)) + "}"
    payload = {
        "problem": _problem_json(args),
        "grid_bound": bound,
        "oracle": [format_rational(v) for v in sorted(oracle)],
        "engine": [format_rational(v) for v in sorted(engine)],
        "equal": oracle == engine,
    }
    if oracle == engine:
        _emit(payload, args.json, [f"oracle = engine = {oracle_text}"])
        return EXIT_OK
    _emit(payload, args.json, [f"oracle {oracle_text} != engine {engine_text}"])
    return EXIT_REJECTED


def cmd_invariants(args) -> int:
    K = _get_complex(args)
    budget = args.budget
    payload: dict = {
        "vertices": len(K.vertices),
        "dim": K.dim,
        "faces_per_dim": {str(d): K.num_faces(d) for d in range(K.dim + 1)},
        "alpha": combinatorics.vertex_alpha_facet(K, budget),
        "chi": combinatorics.vertex_chi_facet(K, budget),
        "alpha_s": {},
        "chi_s": {},
    }
    for s in range(1, K.dim + 1):
        payload["alpha_s"][str(s)] = combinatorics.vertex_alpha_s(K, s, budget)
        payload["chi_s"][str(s)] = combinatorics.vertex_chi_s(K, s, budget)
    payload["extremal_containment"] = {
        str(i): list(K.extremal_containment(i)) for i in range(K.dim)
    }
    lines = [
        f"|V|={payload['vertices']} dim={payload['dim']}",
        f"alpha={payload['alpha']} chi={payload['chi']}",
    ]
    for s in range(1, K.dim + 1):
        lines.append(
            f"alpha_{s}={payload['alpha_s'][str(s)]} chi_{s}={payload['chi_s'][str(s)]}"
        )
    if args.dim is not None:
        graph = combinatorics.FaceGraph.from_complex(K, args.dim, Mode.UP)
        payload["face_graph"] = {
            "dim": args.dim,
            "alpha": combinatorics.independence_number(graph, budget),
            "kappa": combinatorics.clique_cover_number(graph, budget),
            "chi": combinatorics.chromatic_number(graph, budget),
        }
        fg = payload["face_graph"]
        lines.append(
            f"faces dim={args.dim}: alpha={fg['alpha']} kappa={fg['kappa']} chi={fg['chi']}"
        )
    if args.seed is not None:
        payload["seed"] = args.seed
    _emit(payload, args.json, lines)
    return EXIT_OK


def cmd_bounds(args) -> int:
    K = _get_complex(args)
    D = K.dim
    mu_prev = spectrum.compute_spectrum(
        ProblemSpec(K, D - 1, Mode.UP, Normalization.UNNORMALIZED)
    ).eigenvalues[0]
    norm = (
        Normalization.NORMALIZED
        if args.vol == "up-degree"
        else Normalization.UNNORMALIZED
    )
    c1 = None
    try:
        c1 = spectrum.compute_spectrum(
            ProblemSpec(K, args.dim, Mode.UP, norm)
        ).eigenvalues[0]
    except DegenerateNorm:
        pass  # bound_report skips the coloring line in this case
    report = combinatorics.bound_report(
        K, args.dim, mu_prev=mu_prev, c1=c1, vol_mode=args.vol, budget=args.budget
    )
    payload = {
        "problem": _problem_json(args),
        "inputs": {
            k: (
                format_rational(v)
                if isinstance(v, Fraction)
                else {str(s): sv for s, sv in v.items()}
                if isinstance(v, dict)
                else v
            )
            for k, v in report.inputs.items()
        },
        "checks": [
            {
                "name": c.name,
                "lhs": format_rational(c.lhs),
                "relation": c.relation,
                "rhs": format_rational(c.rhs),
                "holds": c.holds,
                "note": c.note,
            }
            for c in report.checks
        ],
        "skipped": [{"name": n, "reason": r} for n, r in report.skipped],
        "all_hold": report.all_hold,
    }
    lines = []
    for c in report.checks:
        mark = "ok " if c.holds else "FAIL"
        lines.append(
            f"[{mark}] {c.name}: {format_rational(c.lhs)} {c.relation} "
            f"{format_rational(c.rhs)}"
        )
    for name, reason in report.skipped:
        lines.append(f"[skip] {name}: {reason}")
    _emit(payload, args.json, lines)
    return EXIT_OK if report.all_hold else EXIT_REJECTED


def cmd_nodal(args) -> int:
    spec = _problem(args, _get_complex(args))
    mu = parse_rational(args.mu)
    x = load_vector_file(args.vector, spec)
    base = verify_eigenpair(spec, mu, x)
    if not base.accepted:
        print(json.dumps({"accepted": False, "reason": base.reason}))
        return EXIT_REJECTED
    report = nodal.check_nodal_restriction_property(spec, mu, x)
    payload = {
        "problem": _problem_json(args),
        "mu": format_rational(mu),
        "domains": [
            {
                "faces": [face_key(f) for f in c.domain],
                "restriction": _vector_json(spec.faces, c.restriction),
                "accepted": c.result.accepted,
            }
            for c in report.checks
        ],
        "count": report.decomposition.count,
        "all_accepted": report.all_accepted,
    }
    lines = [f"nodal domains: {report.decomposition.count}"]
    for c in report.checks:
        status = "accepted" if c.result.accepted else "REJECTED"
        lines.append(f"  {{{' '.join(face_key(f) for f in c.domain)}}}: {status}")
    _emit(payload, args.json, lines)
    return EXIT_OK if report.all_accepted else EXIT_REJECTED


def cmd_wedge(args) -> int:
    K1 = _get_complex(args, "1")
    K2 = _get_complex(args, "2")
    f1 = _parse_face(args.face1)
    f2 = _parse_face(args.face2)
    wedge = constructions.wedge_sum(K1, f1, K2, f2)
    with open(args.out, "w") as fh:
        json.dump(complex_to_json(wedge), fh, indent=2)
    print(f"wedge written to {args.out}")
    if args.check_dim is None:
        return EXIT_OK
    try:
        report = constructions.check_wedge_spectrum(
            K1, f1, K2, f2, args.check_dim, Mode(args.op), Normalization(args.norm)
        )
    except ConditionViolated as exc:
        print(f"check skipped: {exc}")
        return EXIT_OK
    union = sorted(set(report.spectrum_left) | set(report.spectrum_right))
    print(
        "wedge spectrum {"
        + ", ".join(format_rational(v) for v in report.spectrum_wedge)
        + "} vs union {"
        + ", ".join(format_rational(v) for v in union)
        + "}"
    )
    return EXIT_OK if report.holds else EXIT_REJECTED


def cmd_duplicate(args) -> int:
    K = _get_complex(args)
    motif = [_parse_face(part) for part in args.motif.split(";") if part.strip()]
    motif_faces = constructions.closure(K, motif)
    duplicated = constructions.duplicate_motif(K, motif_faces)
    with open(args.out, "w") as fh:
        json.dump(complex_to_json(duplicated), fh, indent=2)
    print(f"duplication written to {args.out}")
    return EXIT_OK


# -- entry point -----------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="onelap",
        description="Exact spectra of signless 1-Laplacians on simplicial complexes",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", help="complete spectrum with witnesses")
    _add_complex_arg(p)
    _add_problem_args(p)
    p.add_argument("--json", action="store_true")
    p.add_argument("--witness-cap", type=int, default=spectrum.DEFAULT_WITNESS_CAP)
    p.add_argument("--all-witnesses", action="store_true")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--seed", type=int)
    p.set_defaults(fn=cmd_spectrum)

    p = sub.add_parser("verify", help="check one candidate eigenpair")
    _add_complex_arg(p)
    _add_problem_args(p)
    p.add_argument("--mu", required=True)
    p.add_argument("--vector", required=True, help="vector JSON file")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("oracle", help="grid oracle spectrum and engine diff")
    _add_complex_arg(p)
    _add_problem_args(p)
    p.add_argument("--grid-bound", type=int)
    p.add_argument("--grid-cap", type=int, help="cap the default (N-1)! bound")
    p.add_argument("--budget", type=int, default=spectrum.DEFAULT_GRID_BUDGET)
    p.add_argument("--json", action="store_true")
    p.add_argument("--seed", type=int)
    p.set_defaults(fn=cmd_oracle)

    p = sub.add_parser("invariants", help="combinatorial parameters")
    _add_complex_arg(p)
    p.add_argument("--dim", type=int, help="also report the face graph at this dim")
    p.add_argument("--budget", type=int, default=combinatorics.DEFAULT_SEARCH_BUDGET)
    p.add_argument("--json", action="store_true")
    p.add_argument("--seed", type=int)
    p.set_defaults(fn=cmd_invariants)

    p = sub.add_parser("bounds", help="evaluate the inequality suite")
    _add_complex_arg(p)
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--vol", choices=["up-degree", "unit"], default="up-degree")
    p.add_argument("--budget", type=int, default=combinatorics.DEFAULT_SEARCH_BUDGET)
    p.add_argument("--json", action="store_true")
    p.add_argument("--seed", type=int)
    p.set_defaults(fn=cmd_bounds)

    p = sub.add_parser("nodal", help="nodal domains and restriction checks")
    _add_complex_arg(p)
    _add_problem_args(p)
    p.add_argument("--mu", required=True)
    p.add_argument("--vector", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_nodal)

    p = sub.add_parser("wedge", help="build a wedge sum, optionally check spectra")
    _add_complex_arg(p, "1")
    _add_complex_arg(p, "2")
    p.add_argument("--face1", required=True, help="comma-separated vertex ids")
    p.add_argument("--face2", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--check-dim", type=int)
    p.add_argument("--op", choices=["up", "down"], default="up")
    p.add_argument(
        "--norm", choices=["normalized", "unnormalized"], default="normalized"
    )
    p.set_defaults(fn=cmd_wedge)

    p = sub.add_parser("duplicate", help="duplicate a motif")
    _add_complex_arg(p)
    p.add_argument("--motif", required=True, help="faces like '1,2;2,3'")
    p.add_argument("--out", required=True)
    p.set_defaults(fn=cmd_duplicate)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except NotAMotif as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_REJECTED
    except DegenerateNorm as exc:
        print(f"error: degenerate norm: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (OneLapError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

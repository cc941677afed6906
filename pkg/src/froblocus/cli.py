"""Command line front end.

Subcommands: ``locus`` (default), ``check``, ``link``, ``oracle``, ``nci``.
Input comes from a file argument or stdin.  Exit codes: 0 success, 1 input
error, 2 method disagreement.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Any

from .criterion import (
    OracleParams,
    _criterion,
    degreewise_report,
)
from .locus import (
    LocusResult,
    MethodDisagreementError,
    Witness,
    is_nci,
    nci_locus,
    non_fg_locus,
)
from .monomials import Monomial, MonomialIdeal
from .parsing import ParseError, ProblemInput, parse_face, parse_problem
from .simplicial import SimplicialComplex, face_monomial, face_prime

COMMANDS = ("locus", "check", "link", "oracle", "nci")


@dataclass
class ProblemSpec:
    """Everything one invocation needs: input, subcommand and options."""

    problem: ProblemInput
    command: str = "locus"
    method: str = "both"
    fmt: str = "text"
    char: int = 2
    e_max: int = 3
    k: int = 1
    prune: bool = True
    face_text: str = ""


@dataclass
class Report:
    data: dict[str, Any]
    text: str


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # keep exit code 2 reserved for disagreement
        raise UsageError(message)


def _mono_json(m: Monomial) -> dict[str, Any]:
    return {"text": str(m), "exponents": list(m.exponents)}


def _ideal_json(ideal: MonomialIdeal) -> list[dict[str, Any]]:
    if ideal.is_zero:
        return []
    return [_mono_json(g) for g in ideal.generators]


def _face_json(face: frozenset[int]) -> list[int]:
    return [v + 1 for v in sorted(face)]


def _witness_json(w: Witness) -> dict[str, Any]:
    out: dict[str, Any] = {"kind": w.kind}
    if w.monomial is not None:
        out["monomial"] = _mono_json(w.monomial)
    if w.face is not None:
        out["face"] = _face_json(w.face)
    return out


def _resolve(problem: ProblemInput) -> tuple[MonomialIdeal, SimplicialComplex]:
    context = problem.context
    if problem.ideal is not None:
        ideal = problem.ideal
        if not ideal.is_squarefree:
            raise ParseError("generators must be squarefree")
        if ideal.is_unit:
            raise ParseError("the unit ideal is not a valid input")
        complex_ = SimplicialComplex.from_ideal(ideal)
    else:
        assert problem.complex is not None
        complex_ = problem.complex
        ideal = complex_.to_ideal(context)
        if ideal.is_unit:
            raise ParseError("the void complex is not a valid input")
    return ideal, complex_


def _locus_payload(spec: ProblemSpec, result: LocusResult, ideal: MonomialIdeal) -> dict:
    return {
        "vars": list(spec.problem.context.names),
        "ideal": _ideal_json(ideal),
        "igl": [
            {
                "face": _face_json(f),
                "prime": _ideal_json(face_prime(f, spec.problem.context)),
                "witness": [_witness_json(w) for w in result.witnesses.get(f, ())],
            }
            for f in result.faces
        ],
        "igl_maximal": [_face_json(f) for f in result.maximal_faces],
        "j_ideal": _ideal_json(result.defining_ideal),
        "empty_locus": result.empty,
        "method": result.method,
    }


def _render_locus_text(data: dict[str, Any]) -> str:
    lines = [
        "vars: " + ", ".join(data["vars"]),
        "I = " + _gen_list_text(data["ideal"]),
        "method: " + data["method"],
    ]
    if data["empty_locus"]:
        lines.append("locus: empty")
    else:
        faces = ", ".join(_face_text(e["face"]) for e in data["igl"])
        maximal = ", ".join(_face_text(f) for f in data["igl_maximal"])
        lines.append(f"IGL faces: {faces}")
        lines.append(f"IGL maximal faces: {maximal}")
        for entry in data["igl"]:
            for w in entry["witness"]:
                lines.append(
                    f"  {_face_text(entry['face'])}: {_witness_text(w)}"
                )
    lines.append("J = " + _gen_list_text(data["j_ideal"]))
    return "\n".join(lines)


def _gen_list_text(gens: list[dict[str, Any]]) -> str:
    if not gens:
        return "(0)"
    return "(" + ", ".join(g["text"] for g in gens) + ")"


def _face_text(face: list[int]) -> str:
    return "{" + ",".join(str(v) for v in face) + "}"


def _witness_text(w: dict[str, Any]) -> str:
    if w["kind"] == "colon_generator":
        return f"colon generator {w['monomial']['text']}"
    if w["kind"] == "free_face":
        return f"free face {_face_text(w['face'])}"
    return f"implied by {_face_text(w['face'])}"


def _run_locus(spec: ProblemSpec) -> Report:
    ideal, complex_ = _resolve(spec.problem)
    if spec.method == "combinatorial":
        result = non_fg_locus(
            complex_,
            context=spec.problem.context,
            method="combinatorial",
            prune=spec.prune,
        )
    else:
        result = non_fg_locus(ideal, method=spec.method, prune=spec.prune)
    data = _locus_payload(spec, result, ideal)
    return Report(data, _render_locus_text(data))


def _run_check(spec: ProblemSpec) -> Report:
    ideal, complex_ = _resolve(spec.problem)
    context = spec.problem.context
    face = parse_face(spec.face_text, context.n)
    if not ideal.is_zero and not complex_.is_face(face):
        raise ParseError(f"{_face_text(_face_json(face))} is not a face")
    colon = ideal.colon(face_monomial(face, context))
    verdict, offender = _criterion(colon)
    data = {
        "vars": list(context.names),
        "ideal": _ideal_json(ideal),
        "face": _face_json(face),
        "colon_ideal": _ideal_json(colon),
        "finitely_generated": verdict,
        "witness": None if offender is None else _mono_json(offender),
    }
    lines = [
        "vars: " + ", ".join(data["vars"]),
        "face: " + _face_text(data["face"]),
        "colon ideal: " + _gen_list_text(data["colon_ideal"]),
        "result: " + ("finitely generated" if verdict else "not finitely generated"),
    ]
    if offender is not None:
        lines.append(f"witness: {offender}")
    return Report(data, "\n".join(lines))


def _run_link(spec: ProblemSpec) -> Report:
    _, complex_ = _resolve(spec.problem)
    context = spec.problem.context
    face = parse_face(spec.face_text, context.n)
    link = complex_.link(face)
    data = {
        "vars": list(context.names),
        "face": _face_json(face),
        "facets": [_face_json(f) for f in link.facets],
    }
    facets = ", ".join(_face_text(f) for f in data["facets"]) or "(void)"
    text = "\n".join(
        [
            "vars: " + ", ".join(data["vars"]),
            "face: " + _face_text(data["face"]),
            "link facets: " + facets,
        ]
    )
    return Report(data, text)


def _run_oracle(spec: ProblemSpec) -> Report:
    ideal, _ = _resolve(spec.problem)
    if ideal.is_zero:
        raise ParseError("oracle needs a nonzero ideal")
    params = OracleParams(p=spec.char, e_max=spec.e_max, k=spec.k)
    table = degreewise_report(ideal, params)
    data = {
        "vars": list(spec.problem.context.names),
        "ideal": _ideal_json(ideal),
        "char": params.p,
        "k": params.k,
        "table": [{"e": e, "vanishes": ok} for e, ok in table],
        "generated_up_to": all(ok for _, ok in table),
    }
    lines = [
        "vars: " + ", ".join(data["vars"]),
        "I = " + _gen_list_text(data["ideal"]),
        f"char: {params.p}",
    ]
    for row in data["table"]:
        verdict = "yes" if row["vanishes"] else "no"
        lines.append(f"degree {row['e']}: no new generators: {verdict}")
    lines.append(
        "generated up to degree "
        f"{params.k}: {'yes' if data['generated_up_to'] else 'no'}"
    )
    return Report(data, "\n".join(lines))


def _run_nci(spec: ProblemSpec) -> Report:
    ideal, _ = _resolve(spec.problem)
    nci = is_nci(ideal)
    data: dict[str, Any] = {
        "vars": list(spec.problem.context.names),
        "ideal": _ideal_json(ideal),
        "is_nci": nci,
    }
    lines = [
        "vars: " + ", ".join(data["vars"]),
        "I = " + _gen_list_text(data["ideal"]),
        "nearly complete intersection: " + ("yes" if nci else "no"),
    ]
    if nci:
        result = nci_locus(ideal)
        data["locus"] = _locus_payload(spec, result, ideal)
        lines.append("J = " + _gen_list_text(data["locus"]["j_ideal"]))
        if result.empty:
            lines.append("locus: empty")
    else:
        data["locus"] = None
    return Report(data, "\n".join(lines))


_RUNNERS = {
    "locus": _run_locus,
    "check": _run_check,
    "link": _run_link,
    "oracle": _run_oracle,
    "nci": _run_nci,
}


def run(spec: ProblemSpec) -> Report:
    return _RUNNERS[spec.command](spec)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="froblocus", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("input", nargs="?", default="-", help="problem file or - for stdin")
        p.add_argument("--format", choices=("text", "json"), default="text")

    p_locus = sub.add_parser("locus", help="compute the non-finitely-generated locus")
    common(p_locus)
    p_locus.add_argument(
        "--method", choices=("algebraic", "combinatorial", "both"), default="both"
    )
    p_locus.add_argument(
        "--no-prune",
        action="store_true",
        help="re-test every face instead of inheriting memberships",
    )

    p_check = sub.add_parser("check", help="finite-generation test at one face")
    common(p_check)
    p_check.add_argument("--face", default="", help="1-based vertex list, e.g. '1 3'")

    p_link = sub.add_parser("link", help="facets of the link of a face")
    common(p_link)
    p_link.add_argument("--face", default="", help="1-based vertex list, e.g. '1 3'")

    p_oracle = sub.add_parser("oracle", help="degree-wise generation table")
    common(p_oracle)
    p_oracle.add_argument("--char", type=int, default=2)
    p_oracle.add_argument("--emax", type=int, default=3)
    p_oracle.add_argument("--k", type=int, default=1)

    p_nci = sub.add_parser("nci", help="nearly-complete-intersection shortcut")
    common(p_nci)

    return parser


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def main(argv: list[str] | None = None) -> int:
    args = list(sys.argv[1:] if argv is None else argv)
    if not args or (args[0] not in COMMANDS and args[0] not in ("-h", "--help")):
        args.insert(0, "locus")
    parser = build_parser()
    try:
        ns = parser.parse_args(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    try:
        problem = parse_problem(_read_input(ns.input))
        spec = ProblemSpec(
            problem=problem,
            command=ns.command,
            method=getattr(ns, "method", "both"),
            fmt=ns.format,
            char=getattr(ns, "char", 2),
            e_max=getattr(ns, "emax", 3),
            k=getattr(ns, "k", 1),
            prune=not getattr(ns, "no_prune", False),
            face_text=getattr(ns, "face", ""),
        )
        report = run(spec)
    except MethodDisagreementError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ParseError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    if spec.fmt == "json":
        print(json.dumps(report.data, indent=2, sort_keys=True))
    else:
        print(report.text)
    return 0


if __name__ == "__main__":
    sys.exit(main())

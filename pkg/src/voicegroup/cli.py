"""Command-line frontend.

Exit codes: 0 success, 1 parse/usage error, 2 matrix not in the group,
3 search budget exceeded. Permutations are written in comma-free cycle
notation ('(12)', '(13)'), vectors with commas ('0,4,7'); matrices and
progression files are JSON.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .modring import DEFAULT_BUDGET, BudgetExceeded, Modulus
from .linalg import Mat3, Perm3, Vec3
from .voicing import Generator, JElement, NotInJ, word_to_element
from .extension import ExtElement, NotInExtension, ext_decode, parse_element
from .structure import (
    Ambient,
    center_of_J,
    centralizer_in_Aff,
    centralizer_in_GL3,
    centralizer_in_M3,
    count_GL3,
    count_SL3,
    index_of_J,
)
from .triadic import NotInHook, HookElement, UTT, rho, rho_inverse
from .analysis import (
    Progression,
    export_network_dot,
    export_network_json,
    orbit_of_element,
    rich_element,
    solve_uniform,
    solve_uniform_all_cases,
)
from . import triadic

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_NOT_IN_GROUP = 2
EXIT_BUDGET = 3


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_PARSE):
        super().__init__(message)
        self.code = code


class _Parser(argparse.ArgumentParser):
    """argparse variant whose usage errors exit with the parse-error code."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def _parse_vec(text: str, modulus: Modulus) -> Vec3:
    parts = text.split(",")
    if len(parts) != 3:
        raise CliError(f"expected three comma-separated entries, got {text!r}")
    try:
        return Vec3.of(*(int(p) for p in parts), modulus)
    except ValueError as exc:
        raise CliError(f"cannot parse vector {text!r}: {exc}") from exc


def _parse_matrix(text: str, modulus: Modulus) -> Mat3:
    try:
        rows = json.loads(text)
        return Mat3.of(rows, modulus)
    except (json.JSONDecodeError, TypeError, ValueError) as exc:
        raise CliError(f"cannot parse matrix {text!r}: {exc}") from exc


def _element_payload(e: ExtElement) -> dict:
    return {
        "sigma": e.sigma.cycle_notation(),
        "k": e.j.k,
        "m": e.j.m,
        "n": e.j.n,
        "modulus": e.modulus.n,
        "text": str(e),
        "matrix": [list(r) for r in e.matrix().rows],
    }


def _emit(payload: dict, args, text_lines: list[str]) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        for line in text_lines:
            print(line)


def _load_progression(path: str, args) -> Progression:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            prog = Progression.from_jsonable(json.load(fh))
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}")
    except (json.JSONDecodeError, ValueError, TypeError) as exc:
        raise CliError(f"malformed progression file {path}: {exc}")
    if getattr(args, "cyclic", False) and not prog.cyclic:
        prog = Progression(prog.modulus, prog.tuples, cyclic=True)
    return prog


def _cmd_normal_form(args) -> int:
    modulus = Modulus(args.mod)
    if args.word:
        cleaned = args.word.replace(" ", "")
        if not cleaned or any(c not in "UVW" for c in cleaned):
            raise CliError(f"word must consist of the letters U, V, W: {args.word!r}")
        element = ExtElement.from_j(word_to_element(cleaned, modulus))
    else:
        element = ext_decode(_parse_matrix(args.matrix, modulus))
    _emit(
        _element_payload(element),
        args,
        [str(element), f"matrix: {element.matrix()}"],
    )
    return EXIT_OK


def _cmd_solve(args) -> int:
    prog = _load_progression(args.progression, args)
    if args.sigma is None and args.k is None:
        solutions = solve_uniform_all_cases(prog)
    else:
        sigma = Perm3.from_cycle(args.sigma) if args.sigma else Perm3.identity()
        k = args.k if args.k is not None else 0
        solutions = solve_uniform(prog, sigma, k)
    payload = {
        "modulus": prog.modulus.n,
        "cyclic": prog.cyclic,
        "solutions": [_element_payload(s.element) for s in solutions],
    }
    if not solutions:
        _emit(payload, args, ["no solutions"])
    else:
        _emit(payload, args, [f"{s}  matrix: {s.matrix}" for s in solutions])
    return EXIT_OK


def _cmd_centralizer(args) -> int:
    modulus = Modulus(args.mod)
    ambient = Ambient(args.ambient)
    if ambient is Ambient.M3:
        report = centralizer_in_M3(modulus, args.budget)
    elif ambient is Ambient.GL3:
        report = centralizer_in_GL3(modulus, args.budget)
    else:
        report = centralizer_in_Aff(modulus, ambient is Ambient.AFF_GROUP, args.budget)
    payload = report.to_jsonable()
    lines = [f"ambient: {report.ambient.value}", f"size: {report.size}"]
    if ambient in (Ambient.M3, Ambient.GL3):
        lines += [str(m) for m in sorted(report.elements, key=lambda m: m.rows)]
    else:
        lines += [
            f"{f.linear} + {f.translation}"
            for f in sorted(report.elements, key=lambda f: (f.linear.rows, f.translation.entries))
        ]
    _emit(payload, args, lines)
    return EXIT_OK


def _cmd_center(args) -> int:
    modulus = Modulus(args.mod)
    elements = center_of_J(modulus)
    elements.sort(key=JElement.sort_key)
    payload = {
        "modulus": modulus.n,
        "size": len(elements),
        "elements": [{"k": e.k, "m": e.m, "n": e.n, "text": str(e)} for e in elements],
    }
    _emit(payload, args, [f"size: {len(elements)}"] + [str(e) for e in elements])
    return EXIT_OK


def _cmd_count(args) -> int:
    modulus = Modulus(args.mod)
    count = count_GL3(modulus, args.budget) if args.ambient == "gl3" else count_SL3(modulus, args.budget)
    index = index_of_J(modulus, args.ambient.upper(), args.budget)
    payload = {
        "ambient": args.ambient,
        "modulus": modulus.n,
        "order": count,
        "voicing_group_index": index,
    }
    _emit(payload, args, [f"|{args.ambient.upper()}(3,Z/{modulus.n})| = {count}", f"index of voicing group: {index}"])
    return EXIT_OK


_ORBIT_GENERATORS = {
    "j": lambda m: [ExtElement.from_j(JElement.from_generator(g, m)) for g in Generator],
    "j+": lambda m: [
        ExtElement.from_j(JElement(0, 1, 0, m)),
        ExtElement.from_j(JElement(0, 0, 1, m)),
    ],
    "extension": lambda m: [ExtElement.from_j(JElement.from_generator(g, m)) for g in Generator]
    + [
        ExtElement.from_sigma(Perm3.from_cycle("(12)"), m),
        ExtElement.from_sigma(Perm3.from_cycle("(13)"), m),
    ],
    "sigma-j+": lambda m: [
        ExtElement.from_j(JElement(0, 1, 0, m)),
        ExtElement.from_j(JElement(0, 0, 1, m)),
        ExtElement.from_sigma(Perm3.from_cycle("(12)"), m),
        ExtElement.from_sigma(Perm3.from_cycle("(123)"), m),
    ],
    "hook": lambda m: [
        ExtElement(Perm3.from_cycle("(13)"), JElement(1, 0, 0, m)),
        ExtElement(Perm3.from_cycle("(13)"), JElement(1, 0, 1, m)),
    ],
}


def _cmd_orbit(args) -> int:
    modulus = Modulus(args.mod)
    seed = _parse_vec(args.seed, modulus)
    generators = _ORBIT_GENERATORS[args.group](modulus)
    result = sorted(triadic.orbit(generators, seed), key=lambda v: v.entries)
    payload = {
        "modulus": modulus.n,
        "group": args.group,
        "seed": list(seed.entries),
        "size": len(result),
        "orbit": [list(v.entries) for v in result],
    }
    _emit(payload, args, [f"size: {len(result)}"] + [str(v) for v in result])
    return EXIT_OK


def _cmd_hook(args) -> int:
    if args.direction == "to-utt":
        if not args.element:
            raise CliError("to-utt needs --element")
        element = parse_element(args.element, Modulus(12))
        utt = rho_inverse(HookElement(element))
        payload = {"element": str(element), "utt": str(utt)}
        _emit(payload, args, [str(utt)])
    else:
        if not args.utt:
            raise CliError("from-utt needs --utt")
        utt = UTT.parse(args.utt)
        h = rho(utt)
        payload = {"utt": str(utt), **_element_payload(h.underlying)}
        _emit(payload, args, [str(h), f"matrix: {h.matrix()}"])
    return EXIT_OK


def _cmd_rich(args) -> int:
    modulus = Modulus(args.mod)
    seed = _parse_vec(args.seed, modulus)
    element = rich_element(modulus)
    cycle = orbit_of_element(element, seed)
    if args.steps is not None:
        shown = [seed]
        current = seed
        for _ in range(args.steps):
            current = element.apply(current)
            shown.append(current)
    else:
        shown = cycle
    payload = {
        "modulus": modulus.n,
        "seed": list(seed.entries),
        "cycle_length": len(cycle),
        "tuples": [list(v.entries) for v in shown],
    }
    _emit(payload, args, [f"cycle length: {len(cycle)}"] + [" -> ".join(str(v) for v in shown)])
    return EXIT_OK


def _cmd_export_dot(args) -> int:
    prog = _load_progression(args.progression, args)
    labels = None
    if args.sigma is not None or args.k is not None:
        sigma = Perm3.from_cycle(args.sigma) if args.sigma else Perm3.identity()
        k = args.k if args.k is not None else 0
        solutions = solve_uniform(prog, sigma, k)
        if not solutions:
            print("no solutions", file=sys.stderr)
            return EXIT_OK
        labels = [solutions[0].element] * len(prog.steps())
    if args.format == "json":
        print(json.dumps(export_network_json(prog, labels), indent=2))
    else:
        sys.stdout.write(export_network_dot(prog, labels))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="voicegroup", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, default_format="text"):
        p.add_argument("--mod", type=int, default=12, help="modulus (default 12)")
        p.add_argument("--format", choices=("text", "json", "dot"), default=default_format)
        p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="candidate budget for exhaustive searches")

    p = sub.add_parser("normal-form", help="normal form of a generator word or matrix")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--word", help="generator word, e.g. VW")
    group.add_argument("--matrix", help="row-major JSON matrix, e.g. [[0,1,0],[1,0,0],[1,1,11]]")
    add_common(p)
    p.set_defaults(func=_cmd_normal_form)

    p = sub.add_parser("solve", help="uniform solutions realizing a progression")
    p.add_argument("progression", help="progression JSON file")
    p.add_argument("--sigma", help="permutation part in cycle notation, e.g. (12)")
    p.add_argument("--k", type=int, choices=(0, 1), help="reflection bit")
    p.add_argument("--cyclic", action="store_true", help="include the wrap-around step")
    add_common(p)
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("centralizer", help="centralizer of the voicing group")
    p.add_argument("--ambient", choices=[a.value for a in Ambient], default="gl3")
    add_common(p)
    p.set_defaults(func=_cmd_centralizer)

    p = sub.add_parser("center", help="center of the voicing group")
    add_common(p)
    p.set_defaults(func=_cmd_center)

    p = sub.add_parser("count", help="order of GL3 or SL3 over Z/n by brute force")
    p.add_argument("ambient", choices=("gl3", "sl3"))
    add_common(p)
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("orbit", help="orbit of a seed voicing under a chosen group")
    p.add_argument("--seed", required=True, help="comma-separated voicing, e.g. 0,4,7")
    p.add_argument("--group", choices=sorted(_ORBIT_GENERATORS), default="extension")
    add_common(p)
    p.set_defaults(func=_cmd_orbit)

    p = sub.add_parser("hook", help="convert between triadic transformations and group elements")
    p.add_argument("direction", choices=("to-utt", "from-utt"))
    p.add_argument("--element", help="group element, e.g. (13)W")
    p.add_argument("--utt", help="triadic transformation, e.g. <-,0,0>")
    add_common(p)
    p.set_defaults(func=_cmd_hook)

    p = sub.add_parser("rich", help="iterate retrograde inversion enchaining from a seed")
    p.add_argument("--seed", required=True)
    p.add_argument("--steps", type=int, help="number of steps (default: full cycle)")
    add_common(p)
    p.set_defaults(func=_cmd_rich)

    p = sub.add_parser("export-dot", help="export a progression network")
    p.add_argument("progression")
    p.add_argument("--sigma", help="label edges with the first uniform solution for this case")
    p.add_argument("--k", type=int, choices=(0, 1))
    p.add_argument("--cyclic", action="store_true")
    add_common(p, default_format="dot")
    p.set_defaults(func=_cmd_export_dot)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except (NotInJ, NotInExtension, NotInHook) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_IN_GROUP
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())

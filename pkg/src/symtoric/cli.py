"""Command line frontend.

Subcommands: cone info/dual/hilbert, classgroup, multiplier, verify,
sharpness, duval.  Reports go to stdout and are byte-identical across
runs for identical inputs; diagnostics go to stderr as a single line
with an ``error:`` prefix and exit code 1.  ``verify`` (and ``duval
check-an``) exit 0 when the verification passes and 2 when it fails.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from typing import Sequence

from .class_group import class_group_of, det_multiplier, group_exponent, group_order
from .cones import Cone, dual_cone, hilbert_basis, make_cone
from .duval import cross_check_an, lookup
from .ideals import PureHeightOneIdeal, find_sharpness_witness, verify_containment

__all__ = ["main"]


class CliError(Exception):
    """Input problem; reported on stderr with exit code 1."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise CliError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="symtoric", description="toric class groups and symbolic power checks")
    sub = parser.add_subparsers(dest="command", required=True)

    cone = sub.add_parser("cone", help="cone reports")
    cone_sub = cone.add_subparsers(dest="action", required=True)
    for action in ("info", "dual", "hilbert"):
        p = cone_sub.add_parser(action)
        p.add_argument("file")
        p.add_argument("--json", action="store_true", dest="as_json")

    for name in ("classgroup", "multiplier"):
        p = sub.add_parser(name)
        p.add_argument("file")
        p.add_argument("--json", action="store_true", dest="as_json")

    verify = sub.add_parser("verify", help="symbolic-into-ordinary containment sweep")
    sharp = sub.add_parser("sharpness", help="search for a failing level of a candidate multiplier")
    for p in (verify, sharp):
        p.add_argument("file")
        p.add_argument("--json", action="store_true", dest="as_json")
        p.add_argument("--ray", action="append", type=int, required=True,
                       help="ray index; repeat to intersect several ray primes")
        p.add_argument("--b", default=None,
                       help="comma separated multiplicities, one per --ray (default all ones)")
        p.add_argument("--D", type=int, required=True, dest="multiplier")
        p.add_argument("--amax", type=int, required=True)

    duval = sub.add_parser("duval", help="du Val catalog lookups and checks")
    duval.add_argument("family", help="A, D, E, or check-an")
    duval.add_argument("n", type=int)
    return parser


def _parse_cone_text(text: str) -> tuple[int, list[tuple[int, ...]]]:
    dim: int | None = None
    rays: list[tuple[int, ...]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if dim is None:
            if len(parts) != 2 or parts[0] != "dim":
                raise CliError(f"line {lineno}: expected 'dim N' header, got {line!r}")
            try:
                dim = int(parts[1])
            except ValueError:
                raise CliError(f"line {lineno}: dimension {parts[1]!r} is not an integer") from None
            continue
        try:
            rays.append(tuple(int(tok) for tok in parts))
        except ValueError:
            raise CliError(f"line {lineno}: ray {line!r} is not an integer vector") from None
    if dim is None:
        raise CliError("missing 'dim N' header")
    return dim, rays


def _parse_cone_json(text: str) -> tuple[int, list[tuple[int, ...]]]:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CliError(f"invalid JSON: {exc}") from None
    if not isinstance(payload, dict) or "dim" not in payload or "rays" not in payload:
        raise CliError("JSON cone needs 'dim' and 'rays' keys")
    dim = payload["dim"]
    if not isinstance(dim, int):
        raise CliError(f"JSON 'dim' must be an integer, got {dim!r}")
    rays = []
    for k, ray in enumerate(payload["rays"]):
        if not isinstance(ray, list) or not all(isinstance(x, int) for x in ray):
            raise CliError(f"ray {k} is not a list of integers")
        rays.append(tuple(ray))
    return dim, rays


def _load_cone(path: str, as_json: bool) -> Cone:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}") from None
    dim, rays = _parse_cone_json(text) if as_json else _parse_cone_text(text)
    try:
        return make_cone(rays, dim)
    except ValueError as exc:
        raise CliError(str(exc)) from None


def _cone_block(cone: Cone) -> list[str]:
    """Echo of the cone in re-ingestible file format."""
    return [f"dim {cone.ambient_dim}"] + [" ".join(map(str, ray)) for ray in cone.rays]


def _digest(cone: Cone) -> str:
    canonical = "\n".join(_cone_block(cone)) + "\n"
    return hashlib.sha256(canonical.encode()).hexdigest()[:12]


def _header(argv: Sequence[str], cone: Cone | None) -> list[str]:
    lines = ["command: " + " ".join(argv)]
    if cone is not None:
        lines.append(f"input: sha256:{_digest(cone)}")
    return lines


def _fmt_infinite(value: int | None) -> str:
    return "infinite" if value is None else str(value)


def _fmt_group(factors: tuple[int, ...], free_rank: int) -> str:
    parts = ["Z"] * free_rank + [f"Z/{d}" for d in factors]
    return " x ".join(parts) if parts else "trivial"


def _cmd_cone(ns: argparse.Namespace, argv: Sequence[str]) -> tuple[str, int]:
    cone = _load_cone(ns.file, ns.as_json)
    lines = _header(argv, cone)
    if ns.action == "info":
        lines += _cone_block(cone)
        lines.append(f"rays: {len(cone.rays)}")
        lines.append(f"simplicial: {'true' if cone.is_simplicial else 'false'}")
        lines.append(f"full: {'true' if cone.is_full else 'false'}")
        if len(cone.rays) == cone.ambient_dim:
            from .exact_linalg import determinant

            lines.append(f"det: {abs(determinant(cone.ray_matrix()))}")
    elif ns.action == "dual":
        lines += _cone_block(dual_cone(cone))
    else:  # hilbert
        data = hilbert_basis(cone)
        lines.append("hilbert basis:")
        lines += [str(h) for h in data.hilbert_basis]
    return "\n".join(lines) + "\n", 0


def _cmd_classgroup(ns: argparse.Namespace, argv: Sequence[str]) -> tuple[str, int]:
    cone = _load_cone(ns.file, ns.as_json)
    group = class_group_of(cone)
    lines = _header(argv, cone)
    lines.append(f"invariant factors: {list(group.invariant_factors)}")
    lines.append(f"free rank: {group.free_rank}")
    lines.append(f"order: {_fmt_infinite(group_order(group))}")
    lines.append(f"exponent: {_fmt_infinite(group_exponent(group))}")
    return "\n".join(lines) + "\n", 0


def _cmd_multiplier(ns: argparse.Namespace, argv: Sequence[str]) -> tuple[str, int]:
    cone = _load_cone(ns.file, ns.as_json)
    d = det_multiplier(cone)
    d_min = group_exponent(class_group_of(cone))
    lines = _header(argv, cone)
    lines.append(f"D (determinant): {d}")
    lines.append(f"D_min (exponent): {d_min}")
    if d_min != d:
        lines.append("note: D_min is smaller than D (class group is not cyclic)")
    return "\n".join(lines) + "\n", 0


def _build_ideal(ns: argparse.Namespace, cone: Cone) -> PureHeightOneIdeal:
    rays = list(ns.ray)
    if ns.b is None:
        mults = [1] * len(rays)
    else:
        try:
            mults = [int(tok) for tok in ns.b.split(",")]
        except ValueError:
            raise CliError(f"--b {ns.b!r} is not a comma separated integer list") from None
        if len(mults) != len(rays):
            raise CliError(f"--b lists {len(mults)} multiplicities for {len(rays)} rays")
    data = hilbert_basis(cone)
    try:
        return PureHeightOneIdeal(data, tuple(zip(rays, mults)))
    except (IndexError, ValueError) as exc:
        raise CliError(str(exc)) from None


def _fmt_components(q: PureHeightOneIdeal) -> str:
    return " & ".join(f"P{ray}^({mult})" for ray, mult in q.components)


def _cmd_verify(ns: argparse.Namespace, argv: Sequence[str]) -> tuple[str, int]:
    cone = _load_cone(ns.file, ns.as_json)
    q = _build_ideal(ns, cone)
    if ns.multiplier < 1:
        raise CliError(f"--D must be >= 1, got {ns.multiplier}")
    if ns.amax < 1:
        raise CliError(f"--amax must be >= 1, got {ns.amax}")
    report = verify_containment(q, ns.multiplier, ns.amax)
    lines = _header(argv, cone)
    lines.append(f"ideal: {_fmt_components(q)}")
    lines.append(f"D: {ns.multiplier}")
    lines.append(f"a_max: {ns.amax}")
    for check in report.levels:
        if check.passed:
            lines.append(f"a = {check.level}: PASS")
        else:
            lines.append(f"a = {check.level}: FAIL witness {check.witness}")
    lines.append(f"verdict: {'PASS' if report.passed else 'FAIL'}")
    return "\n".join(lines) + "\n", 0 if report.passed else 2


def _cmd_sharpness(ns: argparse.Namespace, argv: Sequence[str]) -> tuple[str, int]:
    cone = _load_cone(ns.file, ns.as_json)
    q = _build_ideal(ns, cone)
    if ns.multiplier < 1:
        raise CliError(f"--D must be >= 1, got {ns.multiplier}")
    if ns.amax < 1:
        raise CliError(f"--amax must be >= 1, got {ns.amax}")
    found = find_sharpness_witness(q, ns.multiplier, ns.amax)
    lines = _header(argv, cone)
    lines.append(f"ideal: {_fmt_components(q)}")
    lines.append(f"D_candidate: {ns.multiplier}")
    lines.append(f"a_max: {ns.amax}")
    if found is None:
        lines.append(f"witness: none (up to a = {ns.amax})")
    else:
        level, monomial = found
        lines.append(f"witness: a = {level}, monomial {monomial}")
    return "\n".join(lines) + "\n", 0


def _cmd_duval(ns: argparse.Namespace, argv: Sequence[str]) -> tuple[str, int]:
    lines = ["command: " + " ".join(argv)]
    if ns.family == "check-an":
        if ns.n < 1:
            raise CliError(f"check-an needs a positive bound, got {ns.n}")
        all_ok = True
        for k in range(1, ns.n + 1):
            ok = cross_check_an(k)
            all_ok = all_ok and ok
            lines.append(f"n = {k}: {'ok' if ok else 'MISMATCH'}")
        lines.append(f"verdict: {'PASS' if all_ok else 'FAIL'}")
        return "\n".join(lines) + "\n", 0 if all_ok else 2
    record = lookup(ns.family, ns.n)
    lines.append(f"group: {_fmt_group(record.group.invariant_factors, record.group.free_rank)}")
    lines.append(f"D_min: {record.d_min}")
    lines.append(f"equation: {record.local_equation}")
    return "\n".join(lines) + "\n", 0


_HANDLERS = {
    "cone": _cmd_cone,
    "classgroup": _cmd_classgroup,
    "multiplier": _cmd_multiplier,
    "verify": _cmd_verify,
    "sharpness": _cmd_sharpness,
    "duval": _cmd_duval,
}


def main(argv: Sequence[str] | None = None) -> int:
    args = list(sys.argv[1:] if argv is None else argv)
    try:
        ns = _build_parser().parse_args(args)
        report, code = _HANDLERS[ns.command](ns, args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        # domain errors from the library (unsupported cone, bad catalog pair, ...)
        print(f"error: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(report)
    return code


if __name__ == "__main__":
    sys.exit(main())

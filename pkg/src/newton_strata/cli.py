"""Command-line front end.

Every command is a thin adapter over one library call: parse the documented
JSON schema, dispatch, render.  Exit code 0 means the evaluation completed
(the verdict itself lives in the payload), 2 means rejected input, 1 means an
internal bug.  Output bytes are deterministic for identical invocations.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from typing import Callable, Sequence

from . import hypersym, muord, pel, strata, weil
from .errors import SchemaError, SlopeDataError

JSON = "json"
TEXT = "text"


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # noqa: D102 - argparse hook
        raise SchemaError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="newton-strata", description=__doc__, add_help=True)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, *, takes_input: bool = True) -> argparse.ArgumentParser:
        p = sub.add_parser(name)
        p.set_defaults(takes_input=takes_input)
        if takes_input:
            p.add_argument("--input", default=None, help="input file (default: stdin)")
        p.add_argument("--format", choices=[JSON, TEXT], default=JSON)
        return p

    p = add("check-balanced")
    p.add_argument("--brauer", type=int, default=None,
                   help="also test for the all-(1/2) polygon of this Brauer order")
    add("check-symmetric")
    add("check-star")
    add("verdict")
    add("restrict")
    add("transfer")
    add("hypotheses")
    add("muord")
    p = add("poset", takes_input=False)
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--dot", action="store_true")
    p = add("bw", takes_input=False)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--scaling", choices=[strata.LITERAL, strata.TIMES_R],
                   default=strata.LITERAL)
    add("weil")
    return parser


def execute(argv: Sequence[str], stdin: bytes | Callable[[], bytes] = b"") -> tuple[int, bytes]:
    """Run one invocation; returns (exit_code, output_bytes)."""
    try:
        args = _build_parser().parse_args(list(argv))
        input_bytes = b""
        if getattr(args, "takes_input", False):
            if args.input is not None:
                try:
                    with open(args.input, "rb") as fh:
                        input_bytes = fh.read()
                except OSError as exc:
                    raise SchemaError(f"cannot read input: {exc}") from exc
            else:
                input_bytes = stdin() if callable(stdin) else stdin
        result, text = _dispatch(args, input_bytes)
        if result is None or args.format == TEXT:
            return 0, text.encode()
        payload = {
            "command": args.command,
            "input_digest": hashlib.sha256(input_bytes).hexdigest(),
            "result": result,
        }
        return 0, (json.dumps(payload, indent=2, sort_keys=True) + "\n").encode()
    except SlopeDataError as exc:
        return 2, f"error: {exc}\n".encode()
    except Exception as exc:  # noqa: BLE001 - contract: any other escape is a bug
        return 1, f"internal error: {type(exc).__name__}: {exc}\n".encode()


def _parse_datum(input_bytes: bytes) -> pel.PELSlopeDatum:
    return pel.PELSlopeDatum.from_json(_parse_json(input_bytes))


def _parse_json(input_bytes: bytes):
    try:
        return json.loads(input_bytes.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise SchemaError(f"input is not valid JSON: {exc}") from exc


def _datum_text(datum: pel.PELSlopeDatum) -> str:
    lines = [f"cm: {_bool(datum.tower.cm)}"]
    lines += [f"{name}: {poly.exponent_str()}" for name, poly in datum.polygons]
    return "\n".join(lines) + "\n"


def _bool(value: bool) -> str:
    return "true" if value else "false"


def _dispatch(args, input_bytes: bytes):
    """Returns (json_result, text_rendering)."""
    cmd = args.command

    if cmd == "check-balanced":
        datum = _parse_datum(input_bytes)
        result = {"balanced": hypersym.is_balanced(datum)}
        lines = [f"balanced: {_bool(result['balanced'])}"]
        if args.brauer is not None:
            result["zeta_b"] = hypersym.is_zeta_B(datum, args.brauer)
            lines.append(f"zeta_b: {_bool(result['zeta_b'])}")
        return result, "\n".join(lines) + "\n"

    if cmd == "check-symmetric":
        datum = _parse_datum(input_bytes)
        value = hypersym.is_B_symmetric(datum)
        return {"symmetric": value}, f"symmetric: {_bool(value)}\n"

    if cmd == "check-star":
        datum = _parse_datum(input_bytes)
        value = pel.condition_star(datum)
        return {"condition_star": value}, f"condition_star: {_bool(value)}\n"

    if cmd == "verdict":
        datum = _parse_datum(input_bytes)
        verdict = hypersym.hypersymmetric_verdict(datum)
        result = hypersym.verdict_to_json(verdict)
        lines = [f"level: {verdict.level.value}"]
        components = verdict.witness.components if verdict.witness else ()
        for i, comp in enumerate(components, start=1):
            lines.append(f"component {i}:")
            lines += [f"  {name}: {poly.exponent_str()}" for name, poly in comp.polygons]
        return result, "\n".join(lines) + "\n"

    if cmd == "restrict":
        restricted = pel.restrict(_parse_datum(input_bytes))
        return restricted.to_json(), _datum_text(restricted)

    if cmd == "transfer":
        value = hypersym.subfield_transfer(_parse_datum(input_bytes))
        return {"transfer": value.value}, f"transfer: {value.value}\n"

    if cmd == "hypotheses":
        report = hypersym.theorem_checklist(_parse_datum(input_bytes))
        result = {
            "hypersymmetric": report.hypersymmetric,
            "branch": report.branch.value,
            "satisfied": report.satisfied,
        }
        text = (
            f"hypersymmetric: {_bool(report.hypersymmetric)}\n"
            f"branch: {report.branch.value}\n"
            f"satisfied: {_bool(report.satisfied)}\n"
        )
        return result, text

    if cmd == "muord":
        sig = muord.SignatureDatum.from_json(_parse_json(input_bytes))
        polys = muord.mu_ordinary(sig)
        result = {
            "polygons": [
                {"name": o.name, "polygon": polys[o.name].to_json()} for o in sig.orbits
            ]
        }
        text = "".join(f"{o.name}: {polys[o.name].exponent_str()}\n" for o in sig.orbits)
        return result, text

    if cmd == "poset":
        poset = strata.build_poset(strata.enumerate_siegel(args.g))
        if args.dot:
            return None, strata.to_dot(poset)
        result = {
            "nodes": [node.to_json() for node in poset.nodes],
            "cover_edges": [list(edge) for edge in poset.cover_edges],
            "basic_index": poset.basic_index,
            "ordinary_index": poset.ordinary_index,
        }
        lines = [f"nodes: {len(poset.nodes)}"]
        lines += [f"n{i}: {node.exponent_str()}" for i, node in enumerate(poset.nodes)]
        lines.append(f"basic: n{poset.basic_index}")
        lines.append(f"ordinary: n{poset.ordinary_index}")
        lines += [f"cover: n{a} -> n{b}" for a, b in poset.cover_edges]
        return result, "\n".join(lines) + "\n"

    if cmd == "bw":
        poly = strata.bueltel_wedhorn(args.n, args.r, args.scaling)
        return {"polygon": poly.to_json()}, poly.exponent_str() + "\n"

    if cmd == "weil":
        slopes = weil.CMPlaceSlopes.from_json(_parse_json(input_bytes))
        exponents = weil.weil_parameters(slopes)
        result = weil.exponents_to_json(slopes, exponents)
        lines = [f"a: {exponents.a}", f"c: {exponents.c}"]
        for entry in result["per_pair"]:
            lines.append(
                f"{entry['w']}/{entry['wbar']}: m={entry['m']} n={entry['n']} "
                f"inert_compatible={_bool(entry['inert_compatible'])}"
            )
        return result, "\n".join(lines) + "\n"

    raise SchemaError(f"unknown command {cmd!r}")


def main(argv: Sequence[str] | None = None) -> int:
    code, output = execute(
        sys.argv[1:] if argv is None else argv,
        stdin=lambda: sys.stdin.buffer.read(),
    )
    stream = sys.stdout if code == 0 else sys.stderr
    stream.buffer.write(output)
    stream.flush()
    return code


if __name__ == "__main__":
    raise SystemExit(main())

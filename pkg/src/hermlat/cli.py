"""Command line front end.

    hermlat invariants LATTICE
    hermlat trace LATTICE
    hermlat isometry LATTICE LATTICE
    hermlat verify LATTICE
    hermlat catalog
    hermlat paper-suite

LATTICE is a JSON file, the name of a shipped file (e.g. ex1.json) or a
registry name (e.g. Ex1, "U+U(2)+E8(-2)"). Exit status: 0 pass, 1 fail,
2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from typing import Optional

from .conditions import DEFAULT_BOUND
from .hlattice import HermLattice, TraceIntegralityError, herm_signature, trace_lattice
from .isometry import NotApplicableError, is_isometric_definite, is_isometric_indef_2elem
from .lattice_io import (LatticeFormatError, dumps_lattice, lattice_to_json, load_shipped,
                         parse_lattice_file, shipped_files)
from .paperlab import catalog
from .paperlab.suite import paper_suite
from .paperlab.verdict import theorem_verdict
from .qlattice import DEFAULT_LIMIT, EnumerationLimitError, QuadLattice, invariant_profile

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class CommandResult:
    exit_code: int
    payload: dict
    text: Optional[str] = None     # rendering for non-JSON output
    raw: Optional[str] = None      # emitted verbatim (lattice files)


def resolve_lattice(arg: str):
    """File path, shipped file name, or registry name."""
    if os.path.exists(arg):
        return parse_lattice_file(arg)
    if arg.endswith(".json") or arg + ".json" in shipped_files():
        try:
            return load_shipped(arg)
        except FileNotFoundError:
            raise UsageError(f"no such lattice file: {arg}") from None
    if arg in catalog.hermitian_names() or arg == "Ex7":
        return catalog.make_named_hermitian(arg)
    try:
        return catalog.make_quadratic(arg)
    except catalog.UnknownNameError:
        raise UsageError(f"unknown lattice {arg!r} (not a file or registry name)") from None


def _limit(args) -> int:
    if args.limit is not None:
        return args.limit
    env = os.environ.get("HERMLAT_LIMIT")
    if env:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"HERMLAT_LIMIT must be an integer, got {env!r}") from None
    return DEFAULT_LIMIT


def _kv_text(doc: dict) -> str:
    return "\n".join(f"{k}: {json.dumps(v)}" for k, v in sorted(doc.items()))


def cmd_invariants(args) -> CommandResult:
    L = resolve_lattice(args.lattice)
    if isinstance(L, HermLattice):
        p, q = herm_signature(L)
        doc = {"kind": "hermitian", "field_d": L.field.d, "rank": L.rank,
               "hermitian_signature": [p, q],
               "trace_lattice": invariant_profile(trace_lattice(L)).to_json()}
    else:
        doc = {"kind": "quadratic", **invariant_profile(L).to_json()}
    return CommandResult(EXIT_PASS, doc, _kv_text(doc))


def cmd_trace(args) -> CommandResult:
    L = resolve_lattice(args.lattice)
    if not isinstance(L, HermLattice):
        raise UsageError("trace needs a Hermitian lattice")
    LQ = trace_lattice(L)
    return CommandResult(EXIT_PASS, lattice_to_json(LQ), raw=dumps_lattice(LQ))


def _as_quadratic(L) -> QuadLattice:
    return trace_lattice(L) if isinstance(L, HermLattice) else L


def cmd_isometry(args) -> CommandResult:
    A = _as_quadratic(resolve_lattice(args.first))
    B = _as_quadratic(resolve_lattice(args.second))
    if A.is_definite and B.is_definite:
        w = is_isometric_definite(A, B, limit=_limit(args))
        doc = {"method": "backtracking", "isometric": w is not None,
               "witness": None if w is None else [list(r) for r in w.matrix],
               "witness_verified": None if w is None else w.verify(A, B),
               "convention": "columns are images of the first basis in the second"}
    else:
        try:
            same = is_isometric_indef_2elem(A, B)
        except NotApplicableError as e:
            doc = {"method": "none", "isometric": None, "reason": str(e)}
            return CommandResult(EXIT_FAIL, doc, _kv_text(doc))
        doc = {"method": "nikulin", "isometric": same,
               "triples": [invariant_profile(L).to_json()["nikulin_triple"] for L in (A, B)]}
    return CommandResult(EXIT_PASS if doc["isometric"] else EXIT_FAIL, doc, _kv_text(doc))


def cmd_verify(args) -> CommandResult:
    L = resolve_lattice(args.lattice)
    if not isinstance(L, HermLattice):
        raise UsageError("verify needs a Hermitian lattice")
    v = theorem_verdict(L, args.bound)
    doc = v.to_json()
    lines = [f"{'PASS' if h.passed else 'FAIL'} {h.label}: {h.evidence}"
             for h in v.hypothesis_results]
    lines += [f"theorem: {v.theorem_id}", f"n={v.n} a={v.a} k={v.k} bound={v.bound}",
              f"uniruled: {str(v.uniruled).lower()}", f"fano: {str(v.fano).lower()}"]
    lines += [f"  {t}" for t in v.trail]
    return CommandResult(EXIT_PASS if v.uniruled else EXIT_FAIL, doc, "\n".join(lines))


def cmd_catalog(args) -> CommandResult:
    doc = {"hermitian": catalog.hermitian_names(),
           "quadratic": catalog.QUADRATIC_NAMES,
           "files": shipped_files()}
    text = "\n".join(f"{k}: {', '.join(v)}" for k, v in doc.items())
    return CommandResult(EXIT_PASS, doc, text)


def cmd_paper_suite(args) -> CommandResult:
    report = paper_suite(args.bound)
    return CommandResult(EXIT_PASS if report.passed else EXIT_FAIL, report.to_json(),
                         report.render_text())


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--bound", type=int, default=DEFAULT_BOUND,
                        help="box bound for the pairing-condition search (default 3)")
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--limit", type=int, default=None,
                        help="cap on enumerated vectors (default $HERMLAT_LIMIT or 10000)")
    p = argparse.ArgumentParser(prog="hermlat", description=__doc__.split("\n")[0])
    sub = p.add_subparsers(dest="command", metavar="command")
    for name, fn, pos, help_ in [
        ("invariants", cmd_invariants, ["lattice"], "invariant profile"),
        ("trace", cmd_trace, ["lattice"], "trace lattice as a quadratic lattice file"),
        ("isometry", cmd_isometry, ["first", "second"], "isometry test"),
        ("verify", cmd_verify, ["lattice"], "theorem verdict"),
        ("catalog", cmd_catalog, [], "list registry names and shipped files"),
        ("paper-suite", cmd_paper_suite, [], "check every registry claim"),
    ]:
        sp = sub.add_parser(name, parents=[common], help=help_)
        for a in pos:
            sp.add_argument(a)
        sp.set_defaults(func=fn)
    return p


def run_command(argv) -> CommandResult:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        code = EXIT_PASS if e.code == 0 else EXIT_USAGE
        return CommandResult(code, {"error": "usage"} if code else {}, text="")
    if not getattr(args, "command", None):
        return CommandResult(EXIT_USAGE, {"error": "no command"}, parser.format_usage())
    if args.bound < 1:
        return CommandResult(EXIT_USAGE, {"error": "--bound must be >= 1"}, "error: --bound must be >= 1")
    try:
        return args.func(args)
    except (UsageError, LatticeFormatError, TraceIntegralityError, OSError) as e:
        return CommandResult(EXIT_USAGE, {"error": str(e)}, f"error: {e}")
    except EnumerationLimitError as e:
        return CommandResult(EXIT_FAIL, {"error": str(e)}, f"error: {e}")


def emit_report(result: CommandResult, fmt: str = "text") -> bytes:
    if result.raw is not None:
        return result.raw.encode()
    if fmt == "json":
        return (json.dumps(result.payload, sort_keys=True, indent=2) + "\n").encode()
    text = result.text if result.text is not None else json.dumps(result.payload, sort_keys=True)
    return (text + "\n").encode() if text else b""


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    result = run_command(argv)
    fmt = "json" if "--json" in argv else "text"
    out = emit_report(result, fmt)
    stream = sys.stderr.buffer if result.exit_code == EXIT_USAGE else sys.stdout.buffer
    stream.write(out)
    stream.flush()
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Usage: fatkahler VERB --scheme FILE [--rows R] [--cols C] [--format F] ...

Scheme files are JSON, either ``{"points": [{"x": [a0, a1], "y": [b0, b1],
"m": k}, ...]}`` or ``{"generators": ["X1^2", "Y0 - Y1"]}``.  Generator
files are only accepted by ``omega``, which then compares the sequence
formula (with I^2 as thickening) against the presentation oracle.

Exit codes: 0 success, 1 precondition failure, 2 usage error,
3 file not found, 4 malformed scheme file.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .different import kaehler_different_hf, minimal_generators
from .errors import InconsistencyError, MalformedSchemeError, PreconditionError, SearchCapError
from .kaehler import (
    hf_omega,
    hf_omega_closed,
    hf_omega_formula_ideal,
    hf_omega_oracle,
)
from .ring import parse_poly
from .schemes import (
    GeneratedIdeal,
    HilbertMatrix,
    find_nzd_pair,
    first_difference,
    from_spec,
    hf,
    load_document,
    tuples,
)
from .separators import (
    cbp_different_criterion,
    is_aci,
    is_cbp,
    is_ci,
    minimal_separators,
)

VERBS = ("hf", "omega", "theta", "tuples", "acm", "cbp", "ci", "aci", "separators", "diff", "generators")
FORMATS = ("pretty", "csv", "json")
GENERATOR_WINDOW = 6


@dataclass(frozen=True)
class Command:
    verb: str
    scheme_path: str
    rows: int | None = None
    cols: int | None = None
    format: str = "pretty"
    oracle: bool = False
    closed: str | None = None
    point: int = 0
    method: str = "auto"
    of: str = "hf"


def _parser():
    p = argparse.ArgumentParser(prog="fatkahler", description="Hilbert functions of fat points in P1 x P1.")
    p.add_argument("verb", choices=VERBS)
    p.add_argument("--scheme", required=True, help="JSON scheme or generator file")
    p.add_argument("--rows", type=int)
    p.add_argument("--cols", type=int)
    p.add_argument("--format", choices=FORMATS, default="pretty")
    p.add_argument("--oracle", action="store_true", help="omega: also run the presentation oracle")
    p.add_argument("--closed", choices=("large-i", "large-j"), help="omega: closed form far out along an axis")
    p.add_argument("--point", type=int, default=0, help="separators: entry index of the point")
    p.add_argument("--method", choices=("auto", "separators", "deletion", "different"), default="auto", help="cbp: test used")
    p.add_argument("--of", choices=("hf", "omega", "theta"), default="hf", help="diff: which Hilbert function")
    return p


def parse_args(argv):
    ns = _parser().parse_args(argv)
    for name in ("rows", "cols"):
        v = getattr(ns, name)
        if v is not None and v < 0:
            _parser().error(f"--{name} must be nonnegative")
    return Command(
        verb=ns.verb,
        scheme_path=ns.scheme,
        rows=ns.rows,
        cols=ns.cols,
        format=ns.format,
        oracle=ns.oracle,
        closed=ns.closed,
        point=ns.point,
        method=ns.method,
        of=ns.of,
    )


# rendering


def render_matrix(H, fmt="pretty"):
    data = H.tolist()
    if fmt == "csv":
        return "".join(",".join(str(v) for v in row) + "\n" for row in data)
    if fmt == "json":
        return json.dumps(H.to_json_dict()) + "\n"
    if fmt != "pretty":
        raise ValueError(f"unknown format {fmt!r}")
    width = max((len(str(v)) for row in data for v in row), default=1)
    lines = [" ".join(str(v).rjust(width) for v in row) for row in data]
    notes = []
    if H.row_bound is not None and H.col_bound is not None:
        notes.append(f"stable for i >= {H.row_bound}, j >= {H.col_bound}")
    if H.eventual is not None:
        notes.append(f"eventual value {H.eventual}")
    lines.append("# " + ("; ".join(notes) if notes else f"{H.rows} x {H.cols} window"))
    return "\n".join(lines) + "\n"


def _render_value(name, value, fmt):
    if fmt == "json":
        return json.dumps({name: value}) + "\n"
    if isinstance(value, bool):
        return ("true" if value else "false") + "\n"
    if fmt == "csv" and isinstance(value, (list, tuple)):
        return ",".join(str(v) for v in value) + "\n"
    return f"{name}: {value}\n"


def _render_records(records, fmt):
    """records: list of dicts with 'degree' and 'poly'."""
    if fmt == "json":
        return json.dumps(records) + "\n"
    if fmt == "csv":
        return "".join(f"{r['degree'][0]},{r['degree'][1]},{r['poly']}\n" for r in records)
    return "".join(f"({r['degree'][0]},{r['degree'][1]})  {r['poly']}\n" for r in records)


# dispatch


def _load(path):
    doc = load_document(path)
    if isinstance(doc, dict) and "generators" in doc and "points" not in doc:
        gens = doc["generators"]
        if not isinstance(gens, list) or not gens:
            raise MalformedSchemeError("'generators' must be a nonempty list of strings")
        try:
            return [parse_poly(str(g)) for g in gens]
        except ValueError as exc:
            raise MalformedSchemeError(f"bad generator: {exc}") from None
    return from_spec(doc)


def _omega_generators(cmd, gens, out):
    rows = GENERATOR_WINDOW if cmd.rows is None else cmd.rows
    cols = GENERATOR_WINDOW if cmd.cols is None else cmd.cols
    ideal = GeneratedIdeal(gens)
    formula = hf_omega_formula_ideal(ideal, rows, cols)
    if not cmd.oracle:
        out.write(render_matrix(formula, cmd.format))
        return 0
    oracle = hf_omega_oracle(ideal, rows, cols)
    _write_comparison(formula, oracle, cmd.format, out)
    return 0


def _write_comparison(formula, oracle, fmt, out):
    verdict = "EQUAL" if formula.data == oracle.data else "DIFFER"
    if fmt == "json":
        out.write(
            json.dumps({"formula": formula.to_json_dict(), "oracle": oracle.to_json_dict(), "verdict": verdict})
            + "\n"
        )
        return
    out.write("formula\n")
    out.write(render_matrix(formula, fmt))
    out.write("oracle\n")
    out.write(render_matrix(oracle, fmt))
    out.write(verdict + "\n")


def _omega(cmd, Y, out):
    if cmd.closed:
        tb = tuples(Y)
        length = cmd.cols if cmd.closed == "large-i" else cmd.rows
        if length is None:
            length = tb.l_prime + tb.t + 1 if cmd.closed == "large-i" else tb.l + tb.r + 1
        values = [hf_omega_closed(Y, cmd.closed, k) for k in range(length)]
        out.write(_render_value(cmd.closed, values, cmd.format))
        return 0
    H = hf_omega(Y, cmd.rows, cmd.cols)
    if cmd.oracle:
        _write_comparison(H, hf_omega_oracle(Y, H.rows, H.cols), cmd.format, out)
    else:
        out.write(render_matrix(H, cmd.format))
    return 0


def _dispatch(cmd, Y, out):
    v = cmd.verb
    if v == "hf":
        out.write(render_matrix(hf(Y, cmd.rows, cmd.cols), cmd.format))
    elif v == "omega":
        return _omega(cmd, Y, out)
    elif v == "theta":
        out.write(render_matrix(kaehler_different_hf(Y, cmd.rows, cmd.cols), cmd.format))
    elif v == "diff":
        source = {"hf": hf, "omega": hf_omega, "theta": kaehler_different_hf}[cmd.of]
        H = source(Y, cmd.rows, cmd.cols)
        out.write(render_matrix(HilbertMatrix(tuple(map(tuple, first_difference(H)))), cmd.format))
    elif v == "tuples":
        tb = tuples(Y)
        fields = ("alpha", "beta", "alpha_star", "beta_star", "alpha_hat", "beta_hat", "nu", "nu_prime")
        values = {f: list(getattr(tb, f)) for f in fields}
        values.update(l=tb.l, l_prime=tb.l_prime, r=tb.r, t=tb.t)
        if cmd.format == "json":
            out.write(json.dumps(values) + "\n")
        else:
            sep = "," if cmd.format == "csv" else ": "
            for k, val in values.items():
                shown = " ".join(map(str, val)) if isinstance(val, list) else val
                out.write(f"{k}{sep}{shown}\n")
    elif v == "acm":
        cert = find_nzd_pair(Y)
        if cmd.format == "json":
            out.write(json.dumps({"acm": cert is not None, "c1": None if cert is None else str(cert.c1),
                                  "c2": None if cert is None else str(cert.c2)}) + "\n")
        elif cert is None:
            out.write("false\n")
        else:
            out.write(f"true\nregular sequence: X0 + ({cert.c1})*X1, Y0 + ({cert.c2})*Y1\n")
    elif v == "cbp":
        value = cbp_different_criterion(Y) if cmd.method == "different" else is_cbp(Y, cmd.method)
        out.write(_render_value("cbp", value, cmd.format))
    elif v == "ci":
        out.write(_render_value("ci", is_ci(Y), cmd.format))
    elif v == "aci":
        out.write(_render_value("aci", is_aci(Y), cmd.format))
    elif v == "separators":
        if not 0 <= cmd.point < len(Y):
            raise PreconditionError(f"--point must be an entry index in [0, {len(Y) - 1}]")
        seps = minimal_separators(Y, cmd.point)
        out.write(_render_records([{"degree": list(d), "poly": str(F)} for F, d in seps], cmd.format))
    elif v == "generators":
        gs = minimal_generators(Y)
        if not gs.verified:
            raise SearchCapError("generator search did not stabilize below its cap")
        out.write(_render_records([{"degree": list(d), "poly": str(F)} for F, d in gs.gens], cmd.format))
    return 0


def run(cmd, out=None, err=None):
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        Y = _load(cmd.scheme_path)
        if isinstance(Y, list):
            if cmd.verb != "omega":
                raise PreconditionError(f"'{cmd.verb}' needs a fat point scheme, not a generator file")
            return _omega_generators(cmd, Y, out)
        return _dispatch(cmd, Y, out)
    except FileNotFoundError as exc:
        err.write(f"error: file not found: {exc.filename}\n")
        return 3
    except MalformedSchemeError as exc:
        err.write(f"error: malformed scheme file: {exc}\n")
        return 4
    except (PreconditionError, InconsistencyError, SearchCapError) as exc:
        err.write(f"error: {exc}\n")
        return 1


def main(argv=None):
    cmd = parse_args(sys.argv[1:] if argv is None else argv)
    return run(cmd)


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Every command prints one document ``{schema_version, command, params, data}``
with scalars as strings.  Exit status: 0 ok, 1 verification failure,
2 invalid input, 3 mathematical breakdown (denominator, collision, pivot).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from dataclasses import dataclass
from typing import Callable, Sequence

from . import battery, bialgebra, connection, darboux, recurrence
from .errors import InvalidParams, MinusOneError
from .field import Scalar, parse_scalar, render_scalar, to_json
from .presets import PRESETS, preset
from .seqs import PARAM_NAMES, ParamSet, build_lattice

SCHEMA_VERSION = "1"


@dataclass(frozen=True)
class Form:
    arg_names: tuple
    to_params: Callable[..., ParamSet]
    coeffs: Callable[..., recurrence.RecurrencePair]


def _rst_from_pq(p, q, r, s, b2):
    return recurrence.rst_params(*recurrence.pq_to_rst(p, q, r, s), b2)


def _rst_from_continuous(y1, y2, w1, w2):
    return recurrence.rst_params(*recurrence.continuous_to_rst(y1, y2, w1, w2))


FORMS: dict[str, Form] = {
    "raw": Form(PARAM_NAMES, lambda *v: ParamSet(*v), lambda *a: recurrence.coeffs_minus1(ParamSet(*a[:-1]), a[-1])),
    "rst": Form(("r", "s", "t1", "t2", "b2"), recurrence.rst_params, recurrence.coeffs_rst),
    "pq": Form(("p", "q", "r", "s", "b2"), _rst_from_pq, recurrence.coeffs_pq),
    "b2zero": Form(("b1", "s", "t1", "t2"), recurrence.b2zero_params, recurrence.coeffs_b2zero),
    "continuous": Form(("y1", "y2", "w1", "w2"), _rst_from_continuous, recurrence.coeffs_continuous),
}


# -- parameter handling ---------------------------------------------------


def parse_args_list(text: str | None) -> dict[str, str]:
    out: dict[str, str] = {}
    if not text:
        return out
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        if "=" not in item:
            raise InvalidParams(f"expected key=value, got {item!r}")
        key, value = (s.strip() for s in item.split("=", 1))
        if key in out:
            raise InvalidParams(f"argument {key} given twice")
        out[key] = value
    return out


@dataclass(frozen=True)
class Resolved:
    form: str
    args: dict
    params: ParamSet
    shift: Scalar | None
    values: tuple  # positional scalars for the form's generator

    def echo(self) -> dict:
        return {
            "form": self.form,
            "args": {k: _js(v) for k, v in self.args.items()},
            "lattice": {k: _js(v) for k, v in self.params.values().items()},
        }


def _js(v):
    return str(v) if isinstance(v, int) else to_json(v)


def resolve(form: str, args_text: str | None) -> Resolved:
    raw = parse_args_list(args_text)
    if form.startswith("preset:"):
        name = form.split(":", 1)[1]
        r = preset(name, raw)
        return Resolved(form, r.args, r.params, r.shift, ())
    spec = FORMS.get(form)
    if spec is None:
        raise InvalidParams(f"unknown form {form!r}; use one of {', '.join(FORMS)} or preset:<name>")
    unknown = sorted(set(raw) - set(spec.arg_names))
    if unknown:
        raise InvalidParams(f"form {form} does not take {', '.join(unknown)}")
    missing = [a for a in spec.arg_names if a not in raw]
    if missing:
        raise InvalidParams(f"form {form} needs {', '.join(missing)}")
    values = tuple(parse_scalar(raw[a]) for a in spec.arg_names)
    args = dict(zip(spec.arg_names, values))
    return Resolved(form, args, spec.to_params(*values), None, values)


def _form_name(ns) -> str:
    if ns.form == "preset":
        if not ns.preset:
            raise InvalidParams("--form preset needs --preset NAME")
        return f"preset:{ns.preset}"
    return ns.form


def _order(ns, minimum: int = 1) -> int:
    if ns.order < minimum:
        raise InvalidParams(f"order must be at least {minimum}")
    return ns.order


# -- output ----------------------------------------------------------------


def _strs(values: Sequence[Scalar]) -> list:
    return [to_json(v) for v in values]


def envelope(command: str, params: dict, data: dict) -> dict:
    return {"schema_version": SCHEMA_VERSION, "command": command, "params": params, "data": data}


def render_json(doc: dict) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def render_csv(header: Sequence[str], rows: Sequence[Sequence]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([render_scalar(c) if not isinstance(c, (str, bool)) else c for c in row])
    return buf.getvalue()


def _matrix_csv(rows: Sequence[Sequence[Scalar]]) -> str:
    width = max((len(r) for r in rows), default=0)
    return render_csv([f"c{j}" for j in range(width)], rows)


# -- commands --------------------------------------------------------------


def cmd_coeffs(ns) -> tuple[str, int]:
    form = _form_name(ns)
    N = _order(ns)
    r = resolve(form, ns.args)
    if form.startswith("preset:") or form == "raw":
        rp = recurrence.coeffs_minus1(r.params, N)
    else:
        rp = FORMS[form].coeffs(*r.values, N)
    params = {**r.echo(), "order": N}
    if ns.format == "csv":
        rows = [[n, rp.a(n) if n else "", rp.b(n)] for n in range(N + 1)]
        return render_csv(["n", "alpha", "beta"], rows), 0
    return render_json(envelope("coeffs", params, {"alpha": _strs(rp.alpha), "beta": _strs(rp.beta)})), 0


def _shift(spec: str | None, r: Resolved) -> tuple[str, Scalar]:
    p = r.params
    if spec is None:
        if r.shift is not None:
            return "preset", r.shift
        spec = "x0"
    if spec == "x0":
        return spec, p.b0 + p.b1
    if spec == "-d2/a2":
        return spec, -p.d2 / p.a2
    return "value", parse_scalar(spec)


def cmd_darboux(ns) -> tuple[str, int]:
    N = _order(ns)
    r = resolve(_form_name(ns), ns.args)
    how, w = _shift(ns.shift, r)
    L = recurrence.jacobi(recurrence.coeffs_minus1(r.params, N + 1))
    lu = darboux.lu_shift(L, w)
    params = {**r.echo(), "order": N, "shift": {"spec": how, "w": to_json(w)}, "emit": ns.emit}
    if ns.emit == "M":
        M = darboux.darboux_M(lu)
        rows = M.to_banded().rows()
        if ns.format == "csv":
            return _matrix_csv(rows), 0
        data = {"diag": _strs(M.diag), "sub": _strs(M.sub), "window": len(M.diag),
                "matrix": [_strs(row) for row in rows]}
    elif ns.emit == "yz":
        if ns.format == "csv":
            return render_csv(["k", "y", "z"], [[k, lu.y[k], lu.z[k]] for k in range(N + 1)]), 0
        data = {"w": to_json(w), "y": _strs(lu.y[: N + 1]), "z": _strs(lu.z[: N + 1]), "window": N + 1}
    else:
        C = connection.build_C(build_lattice(r.params, N + 1), N + 1)
        Ct = darboux.complementary_C(C, lu)
        rows = [Ct.row(n) for n in range(N + 1)]
        if ns.format == "csv":
            return _matrix_csv(rows), 0
        data = {"rows": [_strs(row) for row in rows], "window": N + 1}
    return render_json(envelope("darboux", params, data)), 0


def cmd_connection(ns) -> tuple[str, int]:
    N = _order(ns)
    r = resolve(_form_name(ns), ns.args)
    seqs = build_lattice(r.params, N)
    params = {**r.echo(), "order": N, "emit": ns.emit}
    if ns.emit == "moments":
        m = connection.moments(seqs, N)
        if ns.format == "csv":
            return render_csv(["n", "moment"], [[n, v] for n, v in enumerate(m)]), 0
        return render_json(envelope("connection", params, {"moments": _strs(m)})), 0
    C = connection.build_C(seqs, N) if ns.emit == "C" else connection.build_C_inverse(seqs, N)
    if ns.format == "csv":
        return _matrix_csv(C.rows), 0
    return render_json(envelope("connection", params, {"rows": [_strs(row) for row in C.rows]})), 0


def _report_json(report: bialgebra.AlgebraReport) -> dict:
    return {
        "relations": [
            {
                "name": rel.name,
                "claimed": to_json(rel.claimed),
                "measured": None if rel.measured is None else to_json(rel.measured),
                "holds": rel.holds,
                "window": rel.window,
            }
            for rel in report.relations
        ],
        "casimir": {
            "claimed": to_json(report.casimir_claim),
            "measured": None if report.casimir_measured is None else to_json(report.casimir_measured),
            "commutes": report.casimir_commutes,
            "window": report.casimir_window,
        },
        "holds": report.holds,
    }


def cmd_algebra(ns) -> tuple[str, int]:
    N = _order(ns, 8)
    a1, b1, d1, d2 = (parse_scalar(v) for v in (ns.a1, ns.b1, ns.d1, ns.d2))
    B = bialgebra.verify_algebra(bialgebra.build_B_triple(a1, b1, d1, d2, N))
    L = bialgebra.verify_algebra(bialgebra.build_L_triple(a1, b1, d1, d2, N))
    params = {"a1": to_json(a1), "b1": to_json(b1), "d1": to_json(d1), "d2": to_json(d2), "order": N}
    if ns.format == "csv":
        rows = []
        for name, rep in (("B", B), ("L", L)):
            for rel in rep.relations:
                rows.append([name, rel.name, rel.claimed, "" if rel.measured is None else rel.measured, rel.holds, rel.window])
            rows.append([name, "casimir", rep.casimir_claim,
                         "" if rep.casimir_measured is None else rep.casimir_measured,
                         rep.casimir_measured == rep.casimir_claim and rep.casimir_commutes, rep.casimir_window])
        return render_csv(["triple", "constant", "claimed", "measured", "holds", "window"], rows), 0
    data = {"B": _report_json(B), "L": _report_json(L), "agree": B.measured == L.measured}
    return render_json(envelope("algebra", params, data)), 0


def cmd_verify(ns) -> tuple[str, int]:
    if ns.draws < 1:
        raise InvalidParams("draws must be at least 1")
    try:
        results = battery.run_battery(ns.seed, _order(ns, 4), ns.draws, ns.inject_fault)
    except ValueError as exc:
        if isinstance(exc, MinusOneError):
            raise
        raise InvalidParams(str(exc)) from exc
    failed = [r.name for r in results if not r.passed]
    for name in failed:
        print(f"property failed: {name}", file=sys.stderr)
    status = 1 if failed else 0
    params = {"seed": ns.seed, "order": ns.order, "draws": ns.draws, "inject_fault": ns.inject_fault}
    if ns.format == "csv":
        rows = [[r.name, "pass" if r.passed else "FAIL", str(r.draws)] for r in results]
        return render_csv(["property", "status", "draws"], rows), status
    table = [{"property": r.name, "status": "pass" if r.passed else "fail", "draws": r.draws} for r in results]
    return render_json(envelope("verify", params, {"properties": table, "failed": failed})), status


def cmd_presets(ns) -> tuple[str, int]:
    infos = [PRESETS[name] for name in sorted(PRESETS)]
    if ns.format == "csv":
        return render_csv(["name", "args", "anchor"], [[i.name, " ".join(i.arg_names), i.anchor] for i in infos]), 0
    data = {"presets": [{"name": i.name, "args": list(i.arg_names), "anchor": i.anchor} for i in infos]}
    return render_json(envelope("presets", {}, data)), 0


# -- argument parsing ------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InvalidParams(message)


def _add_form(sp: argparse.ArgumentParser):
    sp.add_argument("--form", "--param-form", dest="form", default="raw",
                    help="raw | rst | pq | b2zero | continuous | preset:<name> | preset")
    sp.add_argument("--preset", help="preset name when --form preset is used")
    sp.add_argument("--args", default="", help="comma-separated key=value list")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="minusone", description="Exact minus-one orthogonal polynomial toolkit.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def fmt(sp):
        sp.add_argument("--format", choices=("json", "csv"), default="json")

    sp = sub.add_parser("coeffs", help="recurrence coefficients alpha_1..alpha_N, beta_0..beta_N")
    _add_form(sp)
    sp.add_argument("--order", "--n", dest="order", type=int, default=8)
    fmt(sp)
    sp.set_defaults(run=cmd_coeffs)

    sp = sub.add_parser("darboux", help="shifted Darboux transform of the Jacobi matrix")
    _add_form(sp)
    sp.add_argument("--shift", help="x0 | -d2/a2 | explicit scalar (default: preset shift or x0)")
    sp.add_argument("--order", type=int, default=8)
    sp.add_argument("--emit", choices=("M", "yz", "Ctilde"), default="M")
    fmt(sp)
    sp.set_defaults(run=cmd_darboux)

    sp = sub.add_parser("connection", help="connection matrix, its inverse, or the moments")
    _add_form(sp)
    sp.add_argument("--order", type=int, default=8)
    sp.add_argument("--emit", choices=("C", "Cinv", "moments"), default="C")
    fmt(sp)
    sp.set_defaults(run=cmd_connection)

    sp = sub.add_parser("algebra", help="check the algebra relations of the B and L generator triples")
    for name in ("a1", "b1", "d1", "d2"):
        sp.add_argument(f"--{name}", required=True)
    sp.add_argument("--order", type=int, default=16)
    fmt(sp)
    sp.set_defaults(run=cmd_algebra)

    sp = sub.add_parser("verify", help="run the seeded oracle battery")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--order", type=int, default=12)
    sp.add_argument("--draws", type=int, default=3)
    sp.add_argument("--inject-fault", choices=battery.FAULTS, default=None, help=argparse.SUPPRESS)
    fmt(sp)
    sp.set_defaults(run=cmd_verify)

    sp = sub.add_parser("presets", help="list named parameter substitutions")
    fmt(sp)
    sp.set_defaults(run=cmd_presets)
    return parser


_NEGATIVE = re.compile(r"^[-\u2212](?:[0-9]|d2/a2$)")


def _glue_negatives(argv: Sequence[str]) -> list[str]:
    """argparse takes "-1/2" for a flag; rewrite "--opt -1/2" as "--opt=-1/2"."""
    out: list[str] = []
    i = 0
    while i < len(argv):
        a = argv[i]
        if a.startswith("--") and "=" not in a and i + 1 < len(argv) and _NEGATIVE.match(argv[i + 1]):
            out.append(f"{a}={argv[i + 1]}")
            i += 2
            continue
        out.append(a)
        i += 1
    return out


def run(argv: Sequence[str] | None = None) -> tuple[str, str, int]:
    """Execute a command and return (stdout, stderr, exit status) without printing."""
    argv = _glue_negatives(sys.argv[1:] if argv is None else list(argv))
    err = io.StringIO()
    old = sys.stderr
    sys.stderr = err
    try:
        ns = build_parser().parse_args(argv)
        out, status = ns.run(ns)
    except MinusOneError as exc:
        out, status = "", exc.exit_code
        err.write(json.dumps({"error": {"code": exc.code, "message": str(exc)}}) + "\n")
    finally:
        sys.stderr = old
    return out, err.getvalue(), status


def main(argv: Sequence[str] | None = None) -> int:
    out, err, status = run(argv)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return status


if __name__ == "__main__":
    sys.exit(main())

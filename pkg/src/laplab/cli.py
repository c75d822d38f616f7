"""Command-line front end: ``laplab <command> [options]``.

Exit status: 0 when every checked conclusion holds, 2 when a verification
found a counterexample, 1 on usage or operational errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from .canon import enumerate_connected, enumerate_trees
from .errors import LaplabError, ParameterError
from .families import PARAM_NAMES, FamilyKind, FamilySpec, make_family
from .graph import Graph
from .graph_io import edge_list_loads, graph6_decode, graph6_encode
from .interval import parse_interval
from .partitions import PARAMETRIC_FAMILIES, Partition, check_quotient_containment, verify_parametric_identity
from .report import TheoremReport, dumps
from .spectral import spectrum
from .theorems import (BOUND_THEOREMS, EXACT_MODES, THEOREM_IDS, classify_exhaustive, in_class_G,
                       interval_count, sufficient_condition_witness, verify_all, verify_bound,
                       verify_gndt_strictness)

COMMANDS = ("family", "spectrum", "count", "verify", "enumerate", "classify", "quotient")
OUTPUTS = ("json", "csv", "graph6", "text")
EXIT_OK, EXIT_ERROR, EXIT_VIOLATION = 0, 1, 2


class UsageError(Exception):
    def __init__(self, message: str, usage: str = ""):
        super().__init__(message)
        self.usage = usage


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit 2, which means "violation" here
        raise UsageError(message, self.format_usage())


@dataclass
class CommandPlan:
    command: str
    options: dict[str, Any] = field(default_factory=dict)
    output: str = "json"


def _add_graph_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("--graph", help="graph6 string")
    p.add_argument("--edges", help="edge-list file (first line n, then 'u v' per line)")
    _add_family_flags(p)


def _add_family_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--kind", choices=[k.value for k in FamilyKind], help="family name")
    p.add_argument("--n", type=int)
    for name in ("d", "t", "a", "b", "s"):
        p.add_argument(f"--{name}", type=int)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="laplab", description="Laplacian eigenvalue distribution toolkit", allow_abbrev=False)
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    kw = {"allow_abbrev": False}

    def common(p: argparse.ArgumentParser, default_output: str = "json") -> None:
        p.add_argument("--output", choices=OUTPUTS, default=default_output)
        p.add_argument("--timing", action="store_true", help="include runtime_ms in JSON output")

    p = sub.add_parser("family", **kw, help="build a family member")
    _add_family_flags(p)
    common(p, "graph6")

    p = sub.add_parser("spectrum", **kw, help="Laplacian spectrum")
    _add_graph_input(p)
    common(p)

    p = sub.add_parser("count", **kw, help="eigenvalue count in an interval")
    _add_graph_input(p)
    p.add_argument("--interval", required=True, help="e.g. [2,3], (n-1,n] with rational endpoints")
    p.add_argument("--exact", choices=EXACT_MODES, default="auto")
    common(p)

    p = sub.add_parser("verify", **kw, help="check a theorem on one graph or exhaustively")
    _add_graph_input(p)
    p.add_argument("--theorem", required=True, help=f"one of {', '.join(THEOREM_IDS)}")
    p.add_argument("--all", action="store_true", help="every connected graph of order --n")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--cap", type=int, default=10_000, help="diametral path cap")
    common(p)

    p = sub.add_parser("enumerate", **kw, help="connected graphs (or trees) of order n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--trees", action="store_true")
    common(p, "graph6")

    p = sub.add_parser("classify", **kw, help="exhaustive classification at order n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    common(p)

    p = sub.add_parser("quotient", **kw, help="quotient matrix checks")
    p.add_argument("--family", choices=PARAMETRIC_FAMILIES, help="closed-form polynomial family")
    p.add_argument("--params", help="comma-separated parameters, e.g. 9,2")
    p.add_argument("--blocks", help="partition of --graph/--edges/--kind input, e.g. '0,1;2,3'")
    _add_graph_input(p)
    common(p)
    return parser


def _int_list(text: str, sep: str = ",") -> list[int]:
    try:
        return [int(x) for x in text.split(sep) if x.strip()]
    except ValueError:
        raise UsageError(f"expected integers separated by {sep!r}, got {text!r}") from None


def parse_args(argv: list[str]) -> CommandPlan:
    parser = build_parser()
    if not argv:
        raise UsageError("missing command", parser.format_usage())
    ns = parser.parse_args(argv)
    if ns.command is None:
        raise UsageError("missing command", parser.format_usage())
    opts = {k: v for k, v in vars(ns).items() if k not in ("command", "output")}
    plan = CommandPlan(ns.command, opts, ns.output)
    _validate(plan)
    return plan


def _graph_source_count(o: dict[str, Any]) -> int:
    return sum(x is not None for x in (o.get("graph"), o.get("edges"), o.get("kind")))


def _validate(plan: CommandPlan) -> None:
    o, c = plan.options, plan.command
    if c == "family" and o.get("kind") is None:
        raise UsageError("family needs --kind")
    if c in ("spectrum", "count") and _graph_source_count(o) != 1:
        raise UsageError(f"{c} needs exactly one of --graph, --edges, --kind")
    if c == "count":
        parse_interval(o["interval"], allow_float=o["exact"] == "never")
    if c == "verify":
        tid = o["theorem"].upper()
        if tid not in THEOREM_IDS:
            raise UsageError(f"unknown theorem {o['theorem']!r}; expected one of {', '.join(THEOREM_IDS)}")
        o["theorem"] = tid
        if o["all"] or tid in ("T6", "T8"):
            if o.get("n") is None:
                raise UsageError("exhaustive verification needs --n")
        elif tid in ("P12", "P13"):
            if o.get("n") is None:
                raise UsageError(f"{tid} needs --n (and --d, --t for P13)")
        elif _graph_source_count(o) != 1:
            raise UsageError(f"verify {tid} needs exactly one of --graph, --edges, --kind, or --all --n")
        if o["jobs"] < 1:
            raise UsageError("--jobs must be >= 1")
    if c in ("enumerate", "classify") and o["n"] < 1:
        raise UsageError("--n must be >= 1")
    if c == "classify" and o["jobs"] < 1:
        raise UsageError("--jobs must be >= 1")
    if c == "quotient":
        if o.get("family"):
            if not o.get("params"):
                raise UsageError("quotient --family needs --params")
        elif not o.get("blocks") or _graph_source_count(o) != 1:
            raise UsageError("quotient needs --family/--params, or a graph input with --blocks")
    if plan.output == "graph6" and c not in ("family", "enumerate"):
        raise UsageError("graph6 output is only available for family and enumerate")
    if plan.output == "csv" and c not in ("spectrum", "enumerate", "classify"):
        raise UsageError("csv output is only available for spectrum, enumerate and classify")


def _family_spec(o: dict[str, Any]) -> FamilySpec:
    kind = FamilyKind(o["kind"])
    params = []
    for name in PARAM_NAMES[kind]:
        v = o.get(name)
        if v is None:
            raise ParameterError(f"{kind.value} needs --{name}")
        params.append(v)
    return FamilySpec(kind, tuple(params))


def _load_graph(o: dict[str, Any]) -> Graph:
    if o.get("graph") is not None:
        return graph6_decode(o["graph"])
    if o.get("edges") is not None:
        try:
            text = Path(o["edges"]).read_text()
        except OSError as exc:
            raise ParameterError(f"cannot read edge list: {exc}") from None
        return edge_list_loads(text)
    return make_family(_family_spec(o))


def _report_exit(reports: list[TheoremReport]) -> int:
    return EXIT_VIOLATION if any(r.violated for r in reports) else EXIT_OK


def _render_reports(reports: list[TheoremReport], plan: CommandPlan) -> str:
    if plan.output == "text":
        lines = []
        for r in reports:
            if "checked" in r.witness:
                lines.append(f"{r.theorem_id} n={r.witness['n']}: checked {r.witness['checked']}, "
                             f"violations {len(r.witness['violations'])}")
            else:
                state = ("undetermined" if r.undetermined else "hypothesis not met" if not r.hypothesis_met
                         else "holds" if r.conclusion_holds else "VIOLATED")
                lines.append(f"{r.theorem_id} {r.instance}: {state}")
        return "\n".join(lines)
    payload: Any = [r.to_dict() for r in reports]
    return dumps(payload[0] if len(payload) == 1 else payload)


def _csv(rows: list[list[Any]]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue().rstrip("\n")


def _run(plan: CommandPlan) -> tuple[int, str]:
    o, c, out = plan.options, plan.command, plan.output
    if c == "family":
        spec = _family_spec(o)
        g = make_family(spec)
        if out == "graph6":
            return EXIT_OK, graph6_encode(g)
        if out == "text":
            return EXIT_OK, f"{spec}: n={g.n} edges={list(g.edges)}"
        return EXIT_OK, dumps({"family": spec.as_dict(), "graph6": graph6_encode(g), "edges": g.edges})

    if c == "spectrum":
        g = _load_graph(o)
        s = spectrum(g)
        if out == "csv":
            return EXIT_OK, _csv([["graph6", "eigenvalues"],
                                  [graph6_encode(g), " ".join(f"{v:.12g}" for v in s.values)]])
        if out == "text":
            return EXIT_OK, " ".join(f"{v:.10g}" for v in s.values)
        return EXIT_OK, dumps({"graph6": graph6_encode(g), **s.to_dict()})

    if c == "count":
        g = _load_graph(o)
        iv = parse_interval(o["interval"], allow_float=o["exact"] == "never")
        res = interval_count(g, iv, o["exact"])
        if out == "text":
            return EXIT_OK, str(res["count"])
        return EXIT_OK, dumps({"graph6": graph6_encode(g), "interval": str(iv), **res})

    if c == "verify":
        tid = o["theorem"]
        if o["all"] or tid in ("T6", "T8"):
            rep = verify_all(tid, o["n"], o["jobs"])
        elif tid in ("P12", "P13"):
            d = 4 if tid == "P12" and o.get("d") is None else o.get("d")
            t = 3 if tid == "P12" and o.get("t") is None else o.get("t")
            if d is None or t is None:
                raise ParameterError("P13 needs --d and --t")
            rep = verify_gndt_strictness(o["n"], d, t)
        else:
            g = _load_graph(o)
            if tid in BOUND_THEOREMS:
                rep = verify_bound(g, tid)
            elif tid == "CLASS_G":
                rep = in_class_G(g)
            else:
                rep = sufficient_condition_witness(g, o["cap"])
        return _report_exit([rep]), _render_reports([rep], plan)

    if c == "enumerate":
        graphs = list(enumerate_trees(o["n"]) if o["trees"] else enumerate_connected(o["n"]))
        codes = [graph6_encode(g) for g in graphs]
        if out in ("graph6", "text"):
            return EXIT_OK, "\n".join(codes)
        if out == "csv":
            return EXIT_OK, _csv([["graph6", "n", "edges"]] + [[graph6_encode(g), g.n, g.size] for g in graphs])
        return EXIT_OK, dumps({"n": o["n"], "count": len(codes), "graphs": codes})

    if c == "classify":
        res = classify_exhaustive(o["n"], o["jobs"])
        code = EXIT_VIOLATION if res.violations else EXIT_OK
        if out == "csv":
            return code, _csv([["n", "d", "total_graphs", "members_of_class_G", "equality_count"]] + res.csv_rows())
        if out == "text":
            lines = [f"n={r.n} d={r.d}: {r.total_graphs} graphs, {r.members_of_class_G} in class, "
                     f"{len(r.equality_graphs)} at equality" for r in res.rows]
            lines += [f"{r['theorem_id']} d={r['d']}: checked {r['checked']}, violations {len(r['violations'])}"
                      for r in res.records]
            return code, "\n".join(lines)
        return code, dumps(res.to_dict())

    # quotient
    if o.get("family"):
        rep = verify_parametric_identity(o["family"], _int_list(o["params"]))
    else:
        g = _load_graph(o)
        blocks = [_int_list(b) for b in o["blocks"].split(";")]
        rep = check_quotient_containment(g, Partition(blocks))
    return _report_exit([rep]), _render_reports([rep], plan)


def execute(plan: CommandPlan) -> tuple[int, str]:
    """Run a validated plan; returns (exit status, serialized output)."""
    start = time.perf_counter()
    try:
        code, text = _run(plan)
    except (LaplabError, ValueError) as exc:
        return EXIT_ERROR, f"error: {exc}"
    if plan.options.get("timing") and plan.output == "json":
        obj = json.loads(text)
        elapsed = round((time.perf_counter() - start) * 1000.0, 3)
        text = dumps({"result": obj, "runtime_ms": elapsed} if isinstance(obj, list) else {**obj, "runtime_ms": elapsed})
    return code, text


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        plan = parse_args(argv)
    except UsageError as exc:
        sys.stderr.write(f"{exc.usage}laplab: error: {exc}\n")
        return EXIT_ERROR
    except (LaplabError, ValueError) as exc:
        sys.stderr.write(f"laplab: error: {exc}\n")
        return EXIT_ERROR
    code, text = execute(plan)
    stream = sys.stderr if code == EXIT_ERROR else sys.stdout
    stream.write(text + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())

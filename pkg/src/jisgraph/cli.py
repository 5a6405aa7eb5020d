"""Command-line front end: ``jisgraph <command> ...``.

Exit status: 0 success, 1 certificate rejected, 2 usage or parse error,
3 search budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence, TextIO

from .census import MAX_CENSUS_ORDER, classify, connected_census, summarize, summary_table
from .edgemove import distance_graph, edge_move_distance, jis_family_to_graphs, q_family
from .graph import Graph, cartesian_product, gen_named
from .graph_io import FormatError, read_graphs, to_graph6
from .realization import (
    Certificate,
    SetFamily,
    family_from_json,
    product_realization,
    realize_complete,
    realize_constructively,
    realize_cycle,
    verify_realization,
)
from .recognizer import Decision, SearchConfig, decide_jis, jis_diameter

EXIT_OK = 0
EXIT_REJECTED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


class UsageError(Exception):
    pass


def _dump(obj: object) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _open_input(path: str | None) -> TextIO:
    if path is None or path == "-":
        return sys.stdin
    try:
        return open(path, encoding="ascii")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc


def _graphs(args: argparse.Namespace) -> list[tuple[int, Graph]]:
    stream = _open_input(args.path)
    try:
        return list(read_graphs(stream, args.format))
    finally:
        if stream is not sys.stdin:
            stream.close()


def _one_graph(args: argparse.Namespace, count: int = 1) -> list[Graph]:
    graphs = _graphs(args)
    if len(graphs) < count:
        raise UsageError(f"expected {count} graph(s) on input, found {len(graphs)}")
    return [g for _, g in graphs[:count]]


def _config(args: argparse.Namespace) -> SearchConfig:
    return SearchConfig(
        max_m=args.max_m,
        node_limit=args.budget,
        deterministic_certificate=args.deterministic,
    )


def _human_decision(g: Graph, d: Decision) -> str:
    head = f"{to_graph6(g)}: "
    if d.outcome == "jis":
        fam = d.certificate.family  # type: ignore[union-attr]
        sets = "  ".join(f"S{v + 1}={''.join(map(str, s)) if fam.ground_size < 10 else ','.join(map(str, s))}" for v, s in enumerate(fam.sets))
        return head + f"JIS with {fam.m}-sets over {{1..{fam.ground_size}}}: {sets}"
    if d.outcome == "not_jis" and d.reason == "filter":
        return head + "not JIS, " + d.verdict.describe()  # type: ignore[union-attr]
    if d.outcome == "not_jis":
        tried = sorted({r["m"] for r in d.stats.per_m})
        return head + f"not JIS, search exhausted for m in {tried}"
    return head + "inconclusive (search budget exhausted)"


def cmd_recognize(args: argparse.Namespace, out: TextIO) -> int:
    cfg = _config(args)
    status = EXIT_OK
    for lineno, g in _graphs(args):
        d = decide_jis(g, cfg)
        if d.outcome == "inconclusive":
            status = EXIT_BUDGET
        if args.output == "human":
            print(_human_decision(g, d), file=out)
        else:
            print(_dump({"line": lineno, "graph6": to_graph6(g), **d.to_json_dict(args.timing)}), file=out)
    return status


def _read_certificate(path: str) -> SetFamily:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError:
        # A JSON-lines stream from `recognize`: take the first record.
        first = next((ln for ln in text.splitlines() if ln.strip()), "")
        try:
            data = json.loads(first)
        except json.JSONDecodeError as exc:
            raise UsageError(f"{path}: invalid JSON ({exc.msg})") from exc
    if data.get("outcome", "jis") != "jis":
        raise UsageError(f"{path}: decision carries no certificate (outcome {data['outcome']})")
    try:
        return family_from_json(data)
    except ValueError as exc:
        raise UsageError(f"{path}: {exc}") from exc


def cmd_certify(args: argparse.Namespace, out: TextIO) -> int:
    (g,) = _one_graph(args)
    family = _read_certificate(args.cert)
    if len(family) != g.order:
        raise UsageError(f"certificate has {len(family)} sets, graph has {g.order} vertices")
    report = verify_realization(g, family)
    if args.output == "human":
        if report.ok:
            print(f"ok: {family.m}-sets over {{1..{family.ground_size}}} realize {to_graph6(g)}", file=out)
        for (v, w), inter, adj in report.violations:
            kind = "adjacent" if adj else "non-adjacent"
            print(f"violation: v{v + 1}, v{w + 1} are {kind} but share {inter} of {family.m}", file=out)
        for v, w in report.duplicate_sets:
            print(f"duplicate: v{v + 1} and v{w + 1} have the same set", file=out)
    else:
        print(_dump(report.to_json_dict()), file=out)
    return EXIT_OK if report.ok else EXIT_REJECTED


_DIRECT = {"complete": realize_complete, "cycle": realize_cycle}


def _parse_spec(spec: str) -> tuple[str, list[int]]:
    name, _, rest = spec.partition(":")
    try:
        params = [int(x) for x in rest.split(",") if x]
    except ValueError:
        raise UsageError(f"bad family spec {spec!r}; use name:k or bipartite:a,b") from None
    return name, params


def _construct_one(name: str, params: Sequence[int]) -> tuple[Graph, SetFamily | None]:
    try:
        g = gen_named(name, *params)
    except (ValueError, TypeError) as exc:
        raise UsageError(str(exc)) from exc
    if name in _DIRECT and params[0] >= (1 if name == "complete" else 3):
        return g, _DIRECT[name](params[0])
    return g, realize_constructively(g)


def cmd_construct(args: argparse.Namespace, out: TextIO) -> int:
    name = args.family
    if name == "qfamily":
        if len(args.params) != 1:
            raise UsageError("qfamily takes one parameter n >= 5")
        try:
            members = q_family(int(args.params[0]))
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        if args.output == "json":
            print(_dump({"family": "qfamily", "members": [to_graph6(q) for q in members]}), file=out)
        else:
            for q in members:
                print(to_graph6(q), file=out)
        return EXIT_OK
    if name == "product":
        if len(args.params) != 2:
            raise UsageError("product takes two family specs, e.g. cycle:3 complete:3")
        (g1, f1), (g2, f2) = (_construct_one(*_parse_spec(p)) for p in args.params)
        g = cartesian_product(g1, g2)
        family = product_realization(f1, f2) if f1 is not None and f2 is not None else None
    else:
        try:
            params = [int(p) for p in args.params]
        except ValueError:
            raise UsageError("family parameters must be integers") from None
        g, family = _construct_one(name, params)

    cert = Certificate.issue(g, family) if family is not None else None
    if args.cert_out and cert is not None:
        Path(args.cert_out).write_text(cert.to_json() + "\n")
    if args.output == "json":
        print(_dump({"graph6": to_graph6(g), "certificate": cert.to_json_dict() if cert else None}), file=out)
    elif args.output == "human":
        print(to_graph6(g), file=out)
        print(f"certificate: {cert.family.compact()}" if cert else "certificate: none (no explicit construction)", file=out)
    else:
        print(to_graph6(g), file=out)
    return EXIT_OK


def cmd_census(args: argparse.Namespace, out: TextIO) -> int:
    cfg = _config(args)
    if args.path is None and args.max_order is None:
        raise UsageError("census needs --max-order K or an input stream")
    if args.max_order is not None:
        if not 1 <= args.max_order <= MAX_CENSUS_ORDER:
            raise UsageError(f"--max-order must be in 1..{MAX_CENSUS_ORDER}; pipe larger graphs in as graph6")
        records = connected_census(args.max_order, cfg, args.jobs)
    else:
        records = classify([g for _, g in _graphs(args)], cfg, args.jobs)
    summaries = summarize(records)
    if args.output == "human":
        for rec in records:
            print(_human_decision(rec.graph, rec.decision), file=out)
        print(summary_table(summaries), end="", file=out)
    else:
        for rec in records:
            print(_dump(rec.to_json_dict()), file=out)
        print(_dump({"summary": [s.to_json_dict() for s in summaries]}), file=out)
    if args.report_dir:
        _write_report(Path(args.report_dir), records, summaries)
    return EXIT_BUDGET if any(r.decision.outcome == "inconclusive" for r in records) else EXIT_OK


def _write_report(folder: Path, records, summaries) -> None:
    from .plotting import save_census_figure

    folder.mkdir(parents=True, exist_ok=True)
    lines = ["index\tgraph6\torder\toutcome\treason\tm\tground_size"]
    for rec in records:
        d = rec.decision
        fam = d.certificate.family if d.certificate else None
        lines.append(
            "\t".join(
                str(x)
                for x in (
                    rec.index,
                    to_graph6(rec.graph),
                    rec.graph.order,
                    d.outcome,
                    d.reason or "",
                    fam.m if fam else "",
                    fam.ground_size if fam else "",
                )
            )
        )
    (folder / "verdicts.tsv").write_text("\n".join(lines) + "\n")
    (folder / "summary.tsv").write_text(summary_table(summaries))
    save_census_figure(summaries, folder / "census.png")


def cmd_diameter(args: argparse.Namespace, out: TextIO) -> int:
    (g,) = _one_graph(args)
    try:
        result = jis_diameter(g, args.budget)
    except RuntimeError as exc:
        print(f"inconclusive: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.output == "human":
        if result.pair is None:
            print("JIS-diameter 0 (single vertex)", file=out)
        else:
            v, w = result.pair
            fam = result.families[result.pair]
            print(f"JIS-diameter {result.diameter}, attained by v{v + 1}, v{w + 1}; e.g. {fam.compact()}", file=out)
    else:
        print(_dump(result.to_json_dict()), file=out)
    return EXIT_OK


def cmd_emd_distance(args: argparse.Namespace, out: TextIO) -> int:
    g, h = _one_graph(args, 2)
    try:
        d = edge_move_distance(g, h)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.output == "human":
        print(d, file=out)
    else:
        print(_dump({"graphs": [to_graph6(g), to_graph6(h)], "distance": d}), file=out)
    return EXIT_OK


def cmd_emd_graph(args: argparse.Namespace, out: TextIO) -> int:
    if args.q_family is not None:
        try:
            members = q_family(args.q_family)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    elif args.from_cert is not None:
        members = jis_family_to_graphs(_read_certificate(args.from_cert))
    else:
        members = [g for _, g in _graphs(args)]
    if not members:
        raise UsageError("emd-graph needs at least one member graph")
    try:
        dg = distance_graph(members)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.output == "human":
        print(to_graph6(dg), file=out)
        for i, g in enumerate(members):
            print(f"{i}\t{to_graph6(g)}", file=out)
    else:
        print(_dump({"graph6": to_graph6(dg), "members": {str(i): to_graph6(g) for i, g in enumerate(members)}}), file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["graph6", "edgelist"], default="graph6")
    common.add_argument("--output", choices=["json", "human"], default="json")
    common.add_argument("--budget", type=int, default=None, help="search node budget")
    common.add_argument("--deterministic", action="store_true", help="return the enumeration-least certificate")
    common.add_argument("--max-m", type=int, default=None, dest="max_m")
    common.add_argument("--timing", action="store_true", help="include wall time in JSON stats")

    parser = argparse.ArgumentParser(prog="jisgraph", description="Induced subgraphs of Johnson graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("recognize", parents=[common], help="decide JIS for each input graph")
    p.add_argument("path", nargs="?")
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("certify", parents=[common], help="check a certificate against a graph")
    p.add_argument("path", nargs="?")
    p.add_argument("--cert", required=True, help="certificate or decision JSON")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("construct", parents=[common], help="emit a named graph (and certificate)")
    p.add_argument("family", help="complete, cycle, path, star, empty, bipartite, theta, delta, qfamily, product")
    p.add_argument("params", nargs="*")
    p.add_argument("--cert-out", default=None)
    p.set_defaults(func=cmd_construct)
    for action in p._actions:
        if action.dest == "output":
            action.choices = ["graph6", "json", "human"]
            action.default = "graph6"

    p = sub.add_parser("census", parents=[common], help="classify all small connected graphs or a stream")
    p.add_argument("path", nargs="?")
    p.add_argument("--max-order", type=int, default=None, dest="max_order")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--report-dir", default=None, help="write TSV tables and a figure here")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("diameter", parents=[common], help="JIS-diameter of a connected JIS graph")
    p.add_argument("path", nargs="?")
    p.set_defaults(func=cmd_diameter)

    p = sub.add_parser("emd-distance", parents=[common], help="edge move distance of two graphs")
    p.add_argument("path", nargs="?")
    p.set_defaults(func=cmd_emd_distance)

    p = sub.add_parser("emd-graph", parents=[common], help="edge move distance graph of a family")
    p.add_argument("path", nargs="?")
    p.add_argument("--q-family", type=int, default=None, dest="q_family")
    p.add_argument("--from-cert", default=None, dest="from_cert")
    p.set_defaults(func=cmd_emd_graph)
    return parser


def main(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    out = out or sys.stdout
    try:
        return args.func(args, out)
    except FormatError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

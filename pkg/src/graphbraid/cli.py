"""Command line interface.

Four subcommands: `uc` builds a configuration complex and reports its
shape, `homology` computes Betti numbers and torsion, `decompose` cuts
along the hyperplanes over a set of edges and prints the resulting graph
of groups, and `check` runs the internal cross-validations on a complex.

Graphs come either from --graph (inline JSON or @file.json, with keys
"vertices" and "edges") or from --family NAME[:INT...] for the built-in
constructions.  All JSON output is deterministic: sorted keys, two-space
indent, schema_version 1.

Exit codes: 0 success, 2 bad input, 3 an internal cross-check failed.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import families
from .complexes import (
    build_uc,
    complement_isomorphism,
    complex_to_dot,
    euler_characteristic,
)
from .decomposition import (
    decompose,
    decomposition_to_dot,
    decomposition_to_json,
    free_product_criterion_1,
    free_product_criterion_2,
    fundamental_group,
    render_group,
    resolve_by_decomposition,
)
from .graphs import (
    FiniteGraph,
    InternalCheckError,
    check_subdivision,
    graph_to_json,
    parse_graph,
)
from .homology import betti_numbers, boundary_matrices, homology
from .hyperplanes import (
    check_special,
    hyperplanes,
    hyperplanes_by_propagation,
)

SCHEMA_VERSION = 1

_FAMILIES = {
    "segment": (families.segment, 1),
    "cycle": (families.cycle, 1),
    "star": (families.star, 1),
    "subdivided_star": (families.subdivided_star, 2),
    "modified_star": (families.modified_star, 3),
    "radial_tree": (lambda *ls: families.radial_tree(ls), None),
    "h_graph": (
        lambda *ls: families.h_graph(((ls[0], ls[1]), (ls[2], ls[3])))
        if ls
        else families.h_graph(),
        None,
    ),
    "a_graph": (families.a_graph, None),
    "theta_graph": (families.theta_graph, None),
    "q_graph": (families.q_graph, None),
    "double_triangle": (families.double_triangle, None),
}


def _load_graph(args) -> FiniteGraph:
    if args.family and args.graph:
        raise ValueError("give either --graph or --family, not both")
    if args.family:
        name, _, rest = args.family.partition(":")
        if name not in _FAMILIES:
            known = ", ".join(sorted(_FAMILIES))
            raise ValueError(f"unknown family {name!r} (known: {known})")
        fn, arity = _FAMILIES[name]
        params = [int(x) for x in rest.split(":")] if rest else []
        if arity is not None and len(params) not in (0, arity):
            raise ValueError(f"family {name} takes {arity} integer parameters")
        return fn(*params)
    if args.graph:
        text = args.graph
        if text.startswith("@"):
            with open(text[1:], "r", encoding="utf-8") as fh:
                text = fh.read()
        return parse_graph(text)
    raise ValueError("a graph is required (--graph or --family)")


def _parse_cut(spec: str) -> list[tuple[str, str]]:
    out = []
    for part in spec.split(","):
        u, sep, v = part.partition(":")
        if not sep or not u or not v:
            raise ValueError(f"bad cut edge {part!r}; expected u:v")
        out.append((u, v))
    return out


def _emit(args, payload: dict | str):
    if isinstance(payload, dict):
        payload = dict(payload, schema_version=SCHEMA_VERSION)
        text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    else:
        text = payload if payload.endswith("\n") else payload + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_uc(args) -> int:
    g = _load_graph(args)
    cc = build_uc(g, args.n, max_dim=args.max_dim)
    if args.format == "dot":
        _emit(args, complex_to_dot(cc))
        return 0
    comps = cc.components()
    info = {
        "graph": graph_to_json(g),
        "n": args.n,
        "dims": cc.dim_counts(),
        "built_dim": cc.built_dim,
        "complete": cc.complete,
        "euler": euler_characteristic(cc) if cc.complete else None,
        "components": [
            {"signature": list(c.signature), "size": len(c.zero_cubes)}
            for c in comps
        ],
        "hyperplanes": len(hyperplanes(cc)) if len(cc.cubes) > 1 else 0,
    }
    if args.format == "text":
        lines = [
            f"UC_{args.n} on {len(g.vertices)} vertices / {len(g.edges)} edges",
            f"cubes by dimension: {info['dims']}"
            + ("" if cc.complete else f" (built only through dim {cc.built_dim})"),
            f"components: {len(comps)}",
        ]
        if info["euler"] is not None:
            lines.append(f"euler characteristic: {info['euler']}")
        _emit(args, "\n".join(lines))
    else:
        _emit(args, info)
    return 0


def _cmd_homology(args) -> int:
    g = _load_graph(args)
    if args.up_to is not None:
        cc = build_uc(g, args.n, max_dim=args.up_to + 1)
        betti = betti_numbers(cc, args.up_to)
        info = {
            "n": args.n,
            "betti": list(betti),
            "torsion": None,
            "cube_counts": cc.dim_counts(),
            "partial": True,
        }
    else:
        cc = build_uc(g, args.n)
        prof = homology(cc)
        info = {
            "n": args.n,
            "betti": list(prof.betti),
            "torsion": [list(t) for t in prof.torsion],
            "cube_counts": list(prof.cube_counts),
            "partial": False,
        }
    if args.format == "text":
        if info["torsion"] is None:
            _emit(args, "betti: " + ", ".join(map(str, info["betti"])))
        else:
            tor = "; ".join(
                f"H{k}: Z/{'+Z/'.join(map(str, t))}" for k, t in enumerate(info["torsion"]) if t
            )
            _emit(
                args,
                "betti: "
                + ", ".join(map(str, info["betti"]))
                + (f"\ntorsion: {tor}" if tor else "\ntorsion: none"),
            )
    else:
        _emit(args, info)
    return 0


def _cmd_decompose(args) -> int:
    g = _load_graph(args)
    cut = _parse_cut(args.cut)
    dec = decompose(g, args.n, cut)
    if args.format == "dot":
        _emit(args, decomposition_to_dot(dec))
    elif args.format == "text":
        lines = [f"cut at {dec.cut_vertex} along {len(dec.cut_edges)} edge(s)"]
        for node in dec.nodes:
            sig = ",".join(map(str, node.signature))
            lines.append(f"node {node.index}: ({sig})  {render_group(node.group)}")
        for link in dec.links:
            u, v = link.label
            mark = "tree" if link.in_tree else "loop"
            lines.append(
                f"link {link.index}: {u}-{v} "
                f"{link.tail}->{link.head} [{mark}]  {render_group(link.group)}"
            )
        lines.append(f"fundamental group: {render_group(fundamental_group(dec))}")
        lines.append(f"resolved group: {render_group(resolve_by_decomposition(g, args.n))}")
        _emit(args, "\n".join(lines))
    else:
        payload = decomposition_to_json(dec)
        # the assembly of this decomposition, with vertex groups chased
        # through further cuts where the one-step table leaves them opaque
        payload["resolved_group"] = render_group(resolve_by_decomposition(g, args.n))
        _emit(args, payload)
    return 0


def _cmd_check(args) -> int:
    g = _load_graph(args)
    cc = build_uc(g, args.n, max_dim=args.max_dim)
    results: dict[str, bool] = {}

    sub = check_subdivision(g, args.n)
    results["sufficiently_subdivided"] = sub.ok  # informational, not a failure

    failures = []

    try:
        if len(cc.cubes) > 1:
            hyperplanes_by_propagation(cc)
        results["hyperplane_partition_match"] = True
    except (InternalCheckError, ValueError) as exc:
        results["hyperplane_partition_match"] = False
        failures.append(f"hyperplanes: {exc}")

    try:
        report = check_special(cc)
        results["special"] = report.ok
        if not report.ok:
            failures.append("specialness scan found witnesses")
    except ValueError as exc:
        results["special"] = False
        failures.append(f"special: {exc}")

    try:
        boundary_matrices(cc)
        results["boundary_squared_zero"] = True
    except InternalCheckError as exc:
        results["boundary_squared_zero"] = False
        failures.append(f"homology: {exc}")

    try:
        complement_isomorphism(g, args.n)
        results["complement_duality"] = True
    except RuntimeError as exc:
        results["complement_duality"] = False
        failures.append(f"duality: {exc}")

    cert = free_product_criterion_1(g, args.n) or free_product_criterion_2(g, args.n)

    info = {
        "n": args.n,
        "checks": results,
        "failures": failures,
        "free_splitting": _certificate_json(cert),
    }
    if args.format == "text":
        lines = [
            f"{name}: {'ok' if ok else 'FAIL'}" for name, ok in sorted(results.items())
        ]
        if cert is None:
            lines.append("free_splitting: none")
        else:
            at = cert.vertex if cert.vertex else "-".join(cert.edge)
            lines.append(f"free_splitting: {cert.kind} at {at}")
        _emit(args, "\n".join(lines))
    else:
        _emit(args, info)
    return 3 if failures else 0


def _certificate_json(cert):
    if cert is None:
        return None
    out = {"kind": cert.kind}
    if cert.vertex is not None:
        out["vertex"] = cert.vertex
    if cert.edge is not None:
        out["edge"] = list(cert.edge)
    if cert.center is not None:
        out["center"] = cert.center
    if cert.flower_part:
        out["flower_part"] = list(cert.flower_part)
    if cert.segment_component:
        out["segment_component"] = list(cert.segment_component)
    return out


def _add_common(p: argparse.ArgumentParser, need_n: bool = True):
    p.add_argument("--graph", help="inline JSON or @file with vertices/edges")
    p.add_argument(
        "--family",
        help="built-in graph family, e.g. cycle:6, modified_star:3:1:4",
    )
    if need_n:
        p.add_argument("-n", type=int, required=True, help="number of particles")
    p.add_argument("--out", help="write output to a file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphbraid",
        description="configuration complexes and decompositions of graph braid groups",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("uc", help="build a configuration complex")
    _add_common(p)
    p.add_argument("--max-dim", type=int, default=None)
    p.add_argument("--format", choices=("json", "dot", "text"), default="json")
    p.set_defaults(fn=_cmd_uc)

    p = subs.add_parser("homology", help="integral homology of the complex")
    _add_common(p)
    p.add_argument(
        "--up-to",
        type=int,
        default=None,
        help="only Betti numbers through this degree (allows a capped build)",
    )
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(fn=_cmd_homology)

    p = subs.add_parser("decompose", help="graph of groups over cut edges")
    _add_common(p)
    p.add_argument(
        "--cut", required=True, help="cut edges as u:v[,u:w...] sharing a vertex"
    )
    p.add_argument("--format", choices=("json", "dot", "text"), default="json")
    p.set_defaults(fn=_cmd_decompose)

    p = subs.add_parser("check", help="run the internal cross-validations")
    _add_common(p)
    p.add_argument("--max-dim", type=int, default=None)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(fn=_cmd_check)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits on usage errors and --help
        return int(exc.code or 0)
    try:
        return args.fn(args)
    except InternalCheckError as exc:
        print(f"internal check failed: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

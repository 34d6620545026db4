"""Command-line interface.

Results go to stdout as machine-parseable ``key: value`` lines (or JSON
with --json); diagnostics go to stderr.  Exit codes: 0 for success/true,
1 for false/absent outcomes, 2 for input errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import core, cliques, constructions, homomorphism, oracle, seeing, \
    structure
from .core import GraphInputError, NMParams


def _emit(payload: dict, as_json: bool):
    if as_json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for key, value in payload.items():
            print(f"{key}: {value}")


def _load(path: str) -> core.NMGraph:
    with open(path, encoding="utf-8") as fh:
        return core.parse(fh.read())


def _write_graph(g: core.NMGraph, path, extra_comments=()):
    text = "".join(f"# {line}\n" for line in extra_comments) + core.serialize(g)
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _parse_vertex_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.replace(",", " ").split()]
    except ValueError as exc:
        raise GraphInputError(f"bad vertex list {text!r}") from exc


# ---------------------------------------------------------------------------
# Subcommands.

def cmd_gen(args) -> int:
    params = NMParams(args.n, args.m)
    if args.kind == "tight":
        tc = constructions.generate_tight(params)
        good = " ".join(str(v) for v in tc.good_set)
        _write_graph(tc.graph, args.output, [f"good: {good}"])
    elif args.kind == "exceptional":
        gadget = constructions.generate_exceptional(params, args.alpha,
                                                    args.beta)
        good = " ".join(str(v) for v in gadget.good_set)
        _write_graph(gadget.graph, args.output, [f"good: {good}"])
    else:
        pairs = []
        for tok in args.pairs.split(","):
            a, _, b = tok.partition(":")
            pairs.append((int(a), int(b)))
        gadget = constructions.generate_Fk(params, pairs)
        good = " ".join(str(v) for v in gadget.good_set)
        _write_graph(gadget.graph, args.output,
                     [f"good: {good}", "poles: 0 1"])
    return 0


def cmd_relative_clique(args) -> int:
    g = _load(args.file)
    if args.verify is not None:
        vs = _parse_vertex_list(args.verify)
        cert = cliques.verify_relative_clique(g, vs)
        if cert is None:
            pair = cliques.first_non_seeing_pair(g, vs)
            _emit({"verified": False, "failing_pair": f"{pair[0]} {pair[1]}"},
                  args.json)
            return 1
        payload = {"verified": True, "size": len(cert.vertices)}
        if args.certificate:
            payload["certificate"] = cliques.serialize_certificate(cert)
        _emit(payload, args.json)
        return 0
    size, cert = cliques.relative_clique_number(g)
    payload = {"omega_r": size,
               "vertices": " ".join(str(v) for v in cert.vertices)}
    if args.certificate:
        payload["certificate"] = cliques.serialize_certificate(cert)
    _emit(payload, args.json)
    return 0


def cmd_absolute_clique(args) -> int:
    g = _load(args.file)
    size, cert = cliques.absolute_clique_number(g)
    _emit({"omega_a": size,
           "vertices": " ".join(str(v) for v in cert.vertices)}, args.json)
    return 0


def cmd_chromatic(args) -> int:
    g = _load(args.file)
    result = homomorphism.chromatic_number(g, args.max_order)
    if result.exhausted:
        _emit({"chi": "exhausted",
               "lower_bound_used": result.lower_bound_used,
               "max_order": result.max_order_reached}, args.json)
        return 1
    _emit({"chi": result.value,
           "lower_bound_used": result.lower_bound_used,
           "witness": homomorphism.serialize_witness(result.witness)},
          args.json)
    return 0


def cmd_hom(args) -> int:
    g = _load(args.source)
    h = _load(args.target)
    witness = homomorphism.homomorphism_exists(g, h)
    if witness is None:
        _emit({"homomorphism": False}, args.json)
        return 1
    _emit({"homomorphism": True,
           "witness": homomorphism.serialize_witness(witness)}, args.json)
    return 0


def cmd_seeing(args) -> int:
    g = _load(args.file)
    restrict = _parse_vertex_list(args.restrict) if args.restrict else None
    sg = seeing.seeing_graph(g, restrict)
    if args.json:
        edges = {f"{u} {v}": [w.kind if w.kind == "direct" else f"via {w.via}"
                              for w in sg.witnesses[(u, v)]]
                 for (u, v) in sg.edges()}
        _emit({"vertices": sg.vertex_count, "edges": edges}, True)
    else:
        sys.stdout.write(seeing.serialize_seeing(sg))
    return 0


def cmd_check(args) -> int:
    g = _load(args.file)
    gi = structure.girth(g)
    rot = structure.is_planar(g)
    payload = {
        "girth": gi if gi is not None else "none",
        "triangle_free": structure.is_triangle_free(g),
        "planar": rot is not None,
    }
    if g.embedding is not None:
        faces, euler_ok = structure.validate_embedding(g, g.embedding)
        payload["faces"] = faces
        payload["euler_ok"] = euler_ok
    _emit(payload, args.json)
    return 0


def cmd_oracle_sweep(args) -> int:
    params = NMParams(args.n, args.m)
    checked = 0
    for g in oracle.enumerate_nm_graphs(args.vertices, params):
        checked += 1
        fast_r, _ = cliques.relative_clique_number(g)
        fast_a, _ = cliques.absolute_clique_number(g)
        fast_chi = homomorphism.chromatic_number(g).value
        ref_r = oracle.brute_relative_clique(g)
        ref_a = oracle.brute_absolute_clique(g)
        ref_chi = oracle.brute_chromatic(g)
        bad = (fast_r != ref_r or fast_a != ref_a or fast_chi != ref_chi
               or not fast_a <= fast_r <= fast_chi)
        if bad:
            _emit({"result": "FAIL", "graphs_checked": checked,
                   "omega_r": f"{fast_r} vs {ref_r}",
                   "omega_a": f"{fast_a} vs {ref_a}",
                   "chi": f"{fast_chi} vs {ref_chi}",
                   "counterexample": core.serialize(g)}, args.json)
            return 1
    _emit({"result": "PASS", "graphs_checked": checked}, args.json)
    return 0


def cmd_verify_theorem(args) -> int:
    params = NMParams(args.n, args.m)
    p = params.p
    tc = constructions.generate_tight(params)
    expected = 2 * p * p + 2
    gi = structure.girth(tc.graph)
    planar = structure.is_planar(tc.graph) is not None
    faces, euler_ok = structure.validate_embedding(tc.graph, tc.embedding)
    size, _cert = cliques.relative_clique_number(tc.graph)
    ok = gi == 4 and planar and euler_ok and size == expected
    payload = {
        "p": p,
        "girth": gi,
        "planar": planar,
        "euler_ok": euler_ok,
        "omega_r": size,
        "expected": expected,
        "result": "PASS" if ok else "FAIL",
    }
    _emit(payload, args.json)
    if not args.json:
        status = "PASS" if ok else "FAIL"
        print(f"omega_r = {size} = 2*{p}^2+2 {status}" if size == expected
              else f"omega_r = {size} != {expected} {status}")
    return 0 if ok else 1


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="nmgraph",
        description="Exact toolkit for (n,m)-colored mixed graphs")
    sub = top.add_subparsers(dest="command", required=True)

    def add_json(p):
        p.add_argument("--json", action="store_true",
                       help="structured output")

    gen = sub.add_parser("gen", help="generate named constructions")
    gen_sub = gen.add_subparsers(dest="kind", required=True)
    for kind in ("tight", "exceptional", "fk"):
        gp = gen_sub.add_parser(kind)
        gp.add_argument("--n", type=int, required=True)
        gp.add_argument("--m", type=int, required=True)
        gp.add_argument("-o", "--output", default=None,
                        help="output .nmg file (default stdout)")
        if kind == "exceptional":
            gp.add_argument("--alpha", type=int, required=True)
            gp.add_argument("--beta", type=int, required=True)
        if kind == "fk":
            gp.add_argument("--pairs", required=True,
                            help="comma-separated alpha:beta label pairs")
        add_json(gp)
        gp.set_defaults(func=cmd_gen)

    rc = sub.add_parser("relative-clique")
    rc.add_argument("file")
    rc.add_argument("--verify", default=None,
                    help="comma-separated vertex set to verify")
    rc.add_argument("--certificate", action="store_true")
    add_json(rc)
    rc.set_defaults(func=cmd_relative_clique)

    ac = sub.add_parser("absolute-clique")
    ac.add_argument("file")
    add_json(ac)
    ac.set_defaults(func=cmd_absolute_clique)

    ch = sub.add_parser("chromatic")
    ch.add_argument("file")
    ch.add_argument("--max-order", type=int, default=None)
    add_json(ch)
    ch.set_defaults(func=cmd_chromatic)

    hm = sub.add_parser("hom")
    hm.add_argument("source")
    hm.add_argument("target")
    add_json(hm)
    hm.set_defaults(func=cmd_hom)

    se = sub.add_parser("seeing")
    se.add_argument("file")
    se.add_argument("--restrict", default=None)
    add_json(se)
    se.set_defaults(func=cmd_seeing)

    ck = sub.add_parser("check")
    ck.add_argument("file")
    add_json(ck)
    ck.set_defaults(func=cmd_check)

    orc = sub.add_parser("oracle")
    orc_sub = orc.add_subparsers(dest="oracle_command", required=True)
    sweep = orc_sub.add_parser("sweep")
    sweep.add_argument("--vertices", type=int, required=True)
    sweep.add_argument("--n", type=int, required=True)
    sweep.add_argument("--m", type=int, required=True)
    add_json(sweep)
    sweep.set_defaults(func=cmd_oracle_sweep)

    vt = sub.add_parser("verify-theorem")
    vt.add_argument("--n", type=int, required=True)
    vt.add_argument("--m", type=int, required=True)
    add_json(vt)
    vt.set_defaults(func=cmd_verify_theorem)

    return top


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (GraphInputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Subcommands: gen (instance generators), cliques (enumeration and
component table), verify (the two counting checks as a JSON/text
report), isr (exact or augmenting transversal solver), hit (the full
pipeline). Graphs travel on stdin/stdout in DIMACS edge format;
partitions come from a --partition file or from 'c block ...' comment
lines embedded in the DIMACS stream, so generators pipe straight into
solvers.

Exit codes: 0 found/success, 1 proven non-existence, 2 hypothesis not
met and answer unknown, 3 input error, 4 budget exhausted, 5 internal
invariant violation. All vertex ids in input and output are 1-based.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import cliques as cq
from . import graphs as gr
from . import hitting as ht
from . import isr as tr
from .errors import BudgetExceededError, InvariantViolationError

_PALETTE = [
    "lightblue",
    "lightgreen",
    "lightpink",
    "khaki",
    "lightsalmon",
    "plum",
    "palegreen",
    "lightgray",
]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # raise instead of SystemExit(2)
        raise UsageError(message)


@dataclass
class RunConfig:
    subcommand: str
    input_path: str | None
    output_format: str
    clique_budget: int
    isr_budget: int
    aug_budget: int
    brute_limit: int
    k_override: int | None
    pinned: int | None
    trace: bool

    def __post_init__(self):
        for name in ("clique_budget", "isr_budget", "aug_budget", "brute_limit"):
            if getattr(self, name) < 1:
                raise UsageError(f"--{name.replace('_', '-')} must be positive")
        if self.k_override is not None and self.k_override < 1:
            raise UsageError("--k must be at least 1")


def _config(args) -> RunConfig:
    return RunConfig(
        subcommand=args.cmd,
        input_path=getattr(args, "input", None),
        output_format=getattr(args, "format", "text"),
        clique_budget=getattr(args, "clique_budget", cq.DEFAULT_CLIQUE_BUDGET),
        isr_budget=getattr(args, "isr_budget", tr.DEFAULT_ISR_BUDGET),
        aug_budget=getattr(args, "aug_budget", tr.DEFAULT_AUG_BUDGET),
        brute_limit=getattr(args, "brute_limit", ht.DEFAULT_BRUTE_LIMIT),
        k_override=getattr(args, "k_override", None),
        pinned=getattr(args, "pin", None),
        trace=getattr(args, "trace", False),
    )


def build_parser() -> _Parser:
    p = _Parser(prog="cliquehit", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    g = sub.add_parser("gen", help="emit a generated instance as DIMACS")
    g.add_argument(
        "kind",
        choices=["blown-cycle", "haxell-gadget", "random", "linked-cliques"],
    )
    g.add_argument("--cycle-len", type=int, default=5)
    g.add_argument("--k", type=int, default=1, help="blob size for blown-cycle")
    g.add_argument("--n", type=int, default=10)
    g.add_argument("--p", type=float, default=0.5)
    g.add_argument("--seed", type=int, default=1)
    g.add_argument("--q", type=int, default=3)
    g.add_argument("--t", type=int, default=2)
    g.add_argument("--matching", action="store_true")
    g.add_argument("--partition-out", help="also write the partition file here")
    g.add_argument("--format", choices=["dimacs", "dot"], default="dimacs")
    g.add_argument("-o", "--output", help="write here instead of stdout")
    g.set_defaults(func=cmd_gen)

    c = sub.add_parser("cliques", help="enumerate maximum cliques and components")
    c.add_argument("input", nargs="?", help="DIMACS file, '-' or absent for stdin")
    c.add_argument("--format", choices=["text", "json", "dot"], default="text")
    c.add_argument("--clique-budget", type=int, default=cq.DEFAULT_CLIQUE_BUDGET)
    c.set_defaults(func=cmd_cliques)

    v = sub.add_parser("verify", help="run the component counting checks")
    v.add_argument("input", nargs="?")
    v.add_argument("--format", choices=["text", "json"], default="text")
    v.add_argument("--clique-budget", type=int, default=cq.DEFAULT_CLIQUE_BUDGET)
    v.set_defaults(func=cmd_verify)

    i = sub.add_parser("isr", help="solve the transversal instance")
    i.add_argument("input", nargs="?")
    i.add_argument("--partition", help="partition file; default: embedded comments")
    i.add_argument("--exact", action="store_true", help="exact solver (default)")
    i.add_argument("--augmenting", action="store_true")
    i.add_argument("--pin", type=int, help="1-based vertex the ISR must contain")
    i.add_argument("--isr-budget", type=int, default=tr.DEFAULT_ISR_BUDGET)
    i.add_argument("--aug-budget", type=int, default=tr.DEFAULT_AUG_BUDGET)
    i.add_argument("--trace", action="store_true", help="emit the augmentation trace")
    i.add_argument("--format", choices=["text", "json"], default="text")
    i.set_defaults(func=cmd_isr)

    h = sub.add_parser("hit", help="stable set meeting every maximum clique")
    h.add_argument("input", nargs="?")
    h.add_argument("--format", choices=["text", "json"], default="text")
    h.add_argument("--clique-budget", type=int, default=cq.DEFAULT_CLIQUE_BUDGET)
    h.add_argument("--isr-budget", type=int, default=tr.DEFAULT_ISR_BUDGET)
    h.add_argument("--brute-limit", type=int, default=ht.DEFAULT_BRUTE_LIMIT)
    h.add_argument("--k", type=int, dest="k_override", help="override the degree cap")
    h.set_defaults(func=cmd_hit)
    return p


def _read_text(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_json(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")


def cmd_gen(args) -> int:
    cfg = _config(args)
    pg = None
    if args.kind == "blown-cycle":
        g = gr.gen_blown_up_cycle(args.cycle_len, args.k)
    elif args.kind == "haxell-gadget":
        pg = gr.gen_haxell_gadget()
        g = pg.graph
    elif args.kind == "random":
        g = gr.gen_random(args.n, args.p, args.seed)
    else:
        g = gr.gen_linked_cliques(args.q, args.t, args.matching)
    if cfg.output_format == "dot":
        text = gr.to_dot(g, blocks=pg.blocks if pg else None)
    elif pg is not None:
        text = gr.emit_dimacs_with_blocks(pg)
    else:
        text = gr.emit_dimacs(g)
    _write(text, args.output)
    if args.partition_out:
        if pg is None:
            raise UsageError(f"'{args.kind}' generates no partition")
        _write(gr.emit_partition(pg), args.partition_out)
    return 0


def cmd_cliques(args) -> int:
    cfg = _config(args)
    g = gr.parse_dimacs(_read_text(cfg.input_path))
    cs = cq.maximum_cliques(g, cfg.clique_budget)
    cg = cq.clique_graph(cs)
    comps = cq.components(cs, cg)
    if cfg.output_format == "json":
        _emit_json(
            {
                "schema_version": 1,
                "vertex_base": 1,
                "omega": cs.omega,
                "n_cliques": len(cs.cliques),
                "cliques": [[v + 1 for v in c] for c in cs.cliques],
                "components": [
                    {
                        "index": i,
                        "clique_indices": list(c.clique_indices),
                        "d_set": sorted(v + 1 for v in c.d_set),
                        "f_set": sorted(v + 1 for v in c.f_set),
                    }
                    for i, c in enumerate(comps)
                ],
            }
        )
    elif cfg.output_format == "dot":
        colors = {}
        for i, comp in enumerate(comps):
            for idx in comp.clique_indices:
                colors[idx] = _PALETTE[i % len(_PALETTE)]
        sys.stdout.write(gr.to_dot(cg, node_colors=colors, name="clique_graph"))
    else:
        print(f"omega {cs.omega}")
        print(f"maximum cliques {len(cs.cliques)}")
        for i, c in enumerate(cs.cliques):
            print(f"  clique {i + 1}: " + " ".join(str(v + 1) for v in c))
        print(f"components {len(comps)}")
        for i, comp in enumerate(comps):
            f = " ".join(str(v + 1) for v in sorted(comp.f_set)) or "-"
            d = " ".join(str(v + 1) for v in sorted(comp.d_set))
            print(
                f"  component {i + 1}: cliques {len(comp.clique_indices)}"
                f" |D|={len(comp.d_set)} |F|={len(comp.f_set)}"
            )
            print(f"    D: {d}")
            print(f"    F: {f}")
    return 0


def cmd_verify(args) -> int:
    cfg = _config(args)
    g = gr.parse_dimacs(_read_text(cfg.input_path))
    cs = cq.maximum_cliques(g, cfg.clique_budget)
    comps = cq.components(cs, cq.clique_graph(cs))
    report = cq.build_verify_report(g, cs, comps)
    if cfg.output_format == "json":
        _emit_json(report)
    else:
        hyp = "met" if report["hypothesis_met"] else "not met"
        print(
            f"omega {report['omega']}  delta {report['delta']}  hypothesis {hyp}"
        )
        for ha, ko in zip(report["hajnal"], report["kostochka"]):
            print(
                f"  component {ha['component'] + 1}:"
                f" intersection+union {ha['lhs']} >= {ha['rhs']}"
                f" {'OK' if ha['holds'] else 'VIOLATED'};"
                f" core {ko['f_size']} >= {ko['bound']}"
                f" {'OK' if ko['holds'] else ('VIOLATED' if ko['hypothesis_met'] else 'n/a')}"
            )
    return 0


def cmd_isr(args) -> int:
    cfg = _config(args)
    if args.exact and args.augmenting:
        raise UsageError("choose one of --exact / --augmenting")
    text = _read_text(cfg.input_path)
    g = gr.parse_dimacs(text)
    if args.partition:
        pg = gr.parse_partition(_read_text(args.partition), g)
    else:
        pg = gr.parse_embedded_partition(text, g)
        if pg is None:
            raise UsageError(
                "no --partition file given and no 'c block' lines in the input"
            )
    pin = None
    if cfg.pinned is not None:
        if not (1 <= cfg.pinned <= g.n):
            raise UsageError(f"--pin must be in 1..{g.n}")
        pin = cfg.pinned - 1

    if args.augmenting:
        if pin is None:
            raise UsageError("--augmenting requires --pin")
        res = tr.find_isr_augmenting(pg, pin, budget=cfg.aug_budget, trace=cfg.trace)
        payload = {
            "schema_version": 1,
            "vertex_base": 1,
            "solver": "augmenting",
            "status": res.status,
            "nodes": res.nodes,
            "isr": _isr_json(res.isr),
            "certificate": _cert_json(pg, res.certificate),
            "trace": _trace_json(res.trace) if cfg.trace else None,
        }
        if cfg.output_format == "json":
            _emit_json(payload)
        else:
            _print_isr_text(res.status, res.isr, res.certificate)
        return {tr.ISR_FOUND: 0, tr.CERTIFICATE_FOUND: 1, tr.BUDGET_EXHAUSTED: 4}[
            res.status
        ]

    picks = tr.find_isr_exact(pg, pinned=pin, node_budget=cfg.isr_budget)
    status = tr.ISR_FOUND if picks is not None else "none"
    if cfg.output_format == "json":
        _emit_json(
            {
                "schema_version": 1,
                "vertex_base": 1,
                "solver": "exact",
                "status": status,
                "isr": _isr_json(picks),
                "certificate": None,
                "trace": None,
            }
        )
    else:
        _print_isr_text(status, picks, None)
    return 0 if picks is not None else 1


def _isr_json(picks) -> dict | None:
    if picks is None:
        return None
    return {str(b + 1): v + 1 for b, v in enumerate(picks)}


def _cert_json(pg, cert) -> dict | None:
    if cert is None:
        return None
    check = tr.verify_certificate(pg, cert)
    return {
        "j_set": sorted(b + 1 for b in cert.j_set),
        "x_set": sorted(v + 1 for v in cert.x_set),
        "y_set": sorted(v + 1 for v in cert.y_set),
        "pinned": cert.pinned + 1,
        "ok": check.ok,
        "conditions": check.conditions,
    }


def _trace_json(trace) -> list | None:
    if trace is None:
        return None
    out = []
    for entry in trace:
        if entry.get("event") == "round":
            out.append(
                {
                    "event": "round",
                    "x": entry["x"] + 1,
                    "y_prime": [v + 1 for v in entry["y_prime"]],
                    "isr": {str(b + 1): v + 1 for b, v in entry["isr"].items()},
                }
            )
        else:
            out.append(dict(entry))
    return out


def _print_isr_text(status, picks, cert) -> None:
    if picks is not None:
        pairs = " ".join(f"{b + 1}->{v + 1}" for b, v in enumerate(picks))
        print(f"ISR found: {pairs}")
    elif cert is not None:
        print("no pinned ISR: domination certificate")
        print(f"  blocks J: {' '.join(str(b + 1) for b in sorted(cert.j_set))}")
        print(f"  X: {' '.join(str(v + 1) for v in sorted(cert.x_set))}")
        print(f"  Y: {' '.join(str(v + 1) for v in sorted(cert.y_set))}")
    elif status == "none":
        print("no ISR exists")
    else:
        print(f"status: {status}")


def cmd_hit(args) -> int:
    cfg = _config(args)
    g = gr.parse_dimacs(_read_text(cfg.input_path))
    rep = ht.hitting_stable_set(
        g,
        clique_budget=cfg.clique_budget,
        isr_budget=cfg.isr_budget,
        brute_limit=cfg.brute_limit,
        k_override=cfg.k_override,
    )
    if cfg.output_format == "json":
        _emit_json(rep.to_json())
    else:
        hyp = {True: "met", False: "not met", None: "unknown"}[rep.hypothesis_met]
        print(
            f"omega {rep.omega}  delta {rep.delta}  hypothesis {hyp}  "
            f"status {rep.status}"
        )
        if rep.stable_set is not None:
            print(
                "stable set: "
                + " ".join(str(v + 1) for v in sorted(rep.stable_set))
            )
        if rep.reason:
            print(f"reason: {rep.reason}")
    if rep.status in (ht.FOUND_UNDER_HYPOTHESIS, ht.FOUND_WITHOUT_HYPOTHESIS):
        return 0
    if rep.status == ht.NONE_EXISTS_PROVEN:
        return 1
    return 4 if rep.reason and "budget" in rep.reason else 2


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except InvariantViolationError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 5


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface.

Subcommands:
  enumerate    list every switching-isomorphism class of a graph
  invariants   balance, cycle spectrum, frustration and canonical form
               of one signature
  equivalent   decide switching isomorphism of two signatures
  canonical    print the canonical form of one signature
  frustration  print the frustration index and a minimiser
  types        count automorphism orbits of edge subsets
  reproduce    check the package against the stored six-vertex data

A graph spec is complete:N, cycle:N, path:N, petersen, heawood, or @FILE
where the file holds `n <count>` and `e <u> <v>` lines. A signature is
`u-v,u-v,...` over the graph's edges; the empty string is all-positive.

Exit codes: 0 success, 1 parse or validation error, 2 size guard
exceeded, 3 signatures not equivalent, 4 reproduction mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Sequence

from .classify import (
    ClassReport,
    _negative_max_degree,
    apply_automorphism,
    automorphic_type_count,
    canonical_form,
    enumerate_isomorphism_classes,
    frustration_index,
    is_switching_isomorphic,
)
from .errors import InvalidParam, SwitchIsoError, TooLarge
from .graphs import Graph, automorphism_group, builtin_graph, load_graph_file
from .k6 import (
    CLASS_COUNTS,
    CLASS_SPECTRA,
    EQUIVALENT_LABEL,
    MAX_FRUSTRATION,
    MIN_REP_DEGREE_BOUND,
    SWITCH_WITNESSES,
    TYPE_COUNTS_MAX_DEG_TWO,
    k6,
    reference_signatures,
)
from .signatures import (
    is_balanced,
    negative_cycle_spectrum,
    signature_from_string,
    switch,
)


@dataclass(frozen=True)
class RunConfig:
    """Parsed command line, one flat record per invocation."""

    command: str
    graph: str | None = None
    sigs: tuple[str, ...] = ()
    max_cycle_len: int | None = None
    format: str = "text"
    workers: int = 1
    size: int | None = None
    max_deg: int | None = None
    corrupt_golden: bool = False


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on usage errors; route them through the
    # package's own exit-code table instead
    def error(self, message: str) -> None:
        raise _UsageError(message)


_SIG_COUNTS = {
    "enumerate": 0,
    "invariants": 1,
    "equivalent": 2,
    "canonical": 1,
    "frustration": 1,
    "types": 0,
    "reproduce": 0,
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="switchiso",
        description="classify signatures on small graphs up to switching isomorphism",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def add_command(name, help_text, graph=True, sigs=0, cycles=False, workers=False):
        sp = sub.add_parser(name, help=help_text, description=help_text)
        if graph:
            sp.add_argument(
                "--graph",
                required=True,
                metavar="SPEC",
                help="complete:N, cycle:N, path:N, petersen, heawood, or @FILE",
            )
        if sigs:
            sp.add_argument(
                "--sig",
                action="append",
                default=[],
                metavar="EDGES",
                help=f"negative edges as u-v,u-v,... (exactly {sigs})",
            )
        if cycles:
            sp.add_argument(
                "--max-cycle-len",
                type=int,
                default=None,
                metavar="K",
                help="longest cycle length in spectra (default min(n, 6))",
            )
        if workers:
            sp.add_argument(
                "--workers",
                type=int,
                default=1,
                metavar="N",
                help="parallel canonical-form workers",
            )
        sp.add_argument("--format", choices=("text", "json"), default="text")
        return sp

    add_command("enumerate", "list all switching-isomorphism classes", cycles=True, workers=True)
    add_command("invariants", "report the invariants of one signature", sigs=1, cycles=True)
    add_command("equivalent", "decide switching isomorphism of two signatures", sigs=2)
    add_command("canonical", "print the canonical form of a signature", sigs=1)
    add_command("frustration", "print the frustration index and a minimiser", sigs=1)
    tp = add_command("types", "count automorphism orbits of edge subsets")
    tp.add_argument("--size", type=int, required=True, metavar="K",
                    help="number of edges per subset")
    tp.add_argument("--max-deg", type=int, default=None, metavar="D",
                    help="maximum degree allowed in a subset")
    rp = add_command("reproduce", "check the package against the stored six-vertex data",
                     graph=False, workers=True)
    rp.add_argument("--corrupt-golden", action="store_true",
                    help="flip one stored value to exercise the failure path")
    return parser


def parse_args(argv: Sequence[str] | None = None) -> RunConfig:
    ns = build_parser().parse_args(argv)
    sigs = tuple(getattr(ns, "sig", ()))
    need = _SIG_COUNTS[ns.command]
    if len(sigs) != need:
        raise _UsageError(
            f"{ns.command} needs exactly {need} --sig option(s), got {len(sigs)}"
        )
    workers = getattr(ns, "workers", 1)
    if workers < 1:
        raise _UsageError(f"workers must be positive, got {workers}")
    return RunConfig(
        command=ns.command,
        graph=getattr(ns, "graph", None),
        sigs=sigs,
        max_cycle_len=getattr(ns, "max_cycle_len", None),
        format=ns.format,
        workers=workers,
        size=getattr(ns, "size", None),
        max_deg=getattr(ns, "max_deg", None),
        corrupt_golden=getattr(ns, "corrupt_golden", False),
    )


def resolve_graph(spec: str) -> Graph:
    """Turn a --graph value into a Graph: builtin[:N] or @file."""
    if spec.startswith("@"):
        return load_graph_file(spec[1:])
    name, sep, param = spec.partition(":")
    if not sep:
        return builtin_graph(name)
    try:
        value = int(param)
    except ValueError:
        raise InvalidParam(f"bad graph parameter {param!r}") from None
    return builtin_graph(name, value)


def _fmt(value) -> str:
    # empty signatures and sets print as "-" in text output
    s = str(value)
    return s if s else "-"


def _set_text(vertices) -> str:
    return " ".join(str(v) for v in sorted(vertices)) if vertices else "-"


def _spectrum_payload(spectrum) -> dict[str, int]:
    return {str(k): v for k, v in spectrum.counts}


def _emit(cfg: RunConfig, lines: list[str], payload) -> None:
    if cfg.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print("\n".join(lines))


def _class_table(spec: str, reports: Sequence[ClassReport]) -> list[str]:
    lines = [f"switching-isomorphism classes of {spec}: {len(reports)}"]
    if not reports:
        return lines
    lines.append("")
    labels = [f"C{i + 1:02d}" for i in range(len(reports))]
    lengths = sorted({k for r in reports for k, _ in r.spectrum.counts})
    rows = [
        (f"negative {k}-cycles", [r.spectrum.count(k) for r in reports])
        for k in lengths
    ]
    rows.append(("frustration", [r.frustration for r in reports]))
    rows.append(("class size", [r.class_size for r in reports]))
    head = max(len(name) for name, _ in rows)
    width = max(3, *(len(str(v)) for _, vals in rows for v in vals)) + 2
    lines.append(" " * head + "".join(lab.rjust(width) for lab in labels))
    for name, vals in rows:
        lines.append(name.ljust(head) + "".join(str(v).rjust(width) for v in vals))
    lines.append("")
    for lab, r in zip(labels, reports):
        lines.append(f"{lab}: min rep {_fmt(r.min_rep)}  canonical {_fmt(r.canonical)}")
    return lines


def cmd_enumerate(cfg: RunConfig) -> int:
    g = resolve_graph(cfg.graph)
    reports = enumerate_isomorphism_classes(g, cfg.max_cycle_len, cfg.workers)
    payload = [
        {
            "canonical": str(r.canonical),
            "class_size": r.class_size,
            "spectrum": _spectrum_payload(r.spectrum),
            "frustration": r.frustration,
            "min_rep": str(r.min_rep),
        }
        for r in reports
    ]
    _emit(cfg, _class_table(cfg.graph, reports), payload)
    return 0


def cmd_invariants(cfg: RunConfig) -> int:
    g = resolve_graph(cfg.graph)
    sig = signature_from_string(g, cfg.sigs[0])
    spectrum = negative_cycle_spectrum(sig, cfg.max_cycle_len)
    frustration, min_rep = frustration_index(sig)
    key = canonical_form(sig)
    balanced = is_balanced(sig)
    lines = [
        f"graph: {cfg.graph}",
        f"negative edges: {_fmt(sig)}",
        f"balanced: {'yes' if balanced else 'no'}",
        f"spectrum: {_fmt(spectrum)}",
        f"frustration: {frustration}",
        f"minimal representative: {_fmt(min_rep)}",
        f"canonical: {_fmt(key)}",
    ]
    payload = {
        "graph": cfg.graph,
        "negative_edges": str(sig),
        "balanced": balanced,
        "spectrum": _spectrum_payload(spectrum),
        "frustration": frustration,
        "min_rep": str(min_rep),
        "canonical": str(key),
    }
    _emit(cfg, lines, payload)
    return 0


def cmd_equivalent(cfg: RunConfig) -> int:
    g = resolve_graph(cfg.graph)
    first = signature_from_string(g, cfg.sigs[0])
    second = signature_from_string(g, cfg.sigs[1])
    witness = is_switching_isomorphic(first, second)
    if witness is None:
        s1 = negative_cycle_spectrum(first)
        s2 = negative_cycle_spectrum(second)
        lines = [
            "switching isomorphic: no",
            f"spectrum of first: {_fmt(s1)}",
            f"spectrum of second: {_fmt(s2)}",
        ]
        payload = {
            "equivalent": False,
            "spectra": [_spectrum_payload(s1), _spectrum_payload(s2)],
        }
        _emit(cfg, lines, payload)
        return 3
    lines = [
        "switching isomorphic: yes",
        f"permutation: {' '.join(str(v) for v in witness.perm.vertices)}",
        f"switch at: {_set_text(witness.switch_set)}",
    ]
    payload = {
        "equivalent": True,
        "permutation": list(witness.perm.vertices),
        "switch_set": sorted(witness.switch_set),
    }
    _emit(cfg, lines, payload)
    return 0


def cmd_canonical(cfg: RunConfig) -> int:
    g = resolve_graph(cfg.graph)
    sig = signature_from_string(g, cfg.sigs[0])
    key = canonical_form(sig)
    payload = {
        "graph": cfg.graph,
        "negative_edges": str(sig),
        "canonical": str(key),
    }
    _emit(cfg, [f"canonical: {_fmt(key)}"], payload)
    return 0


def cmd_frustration(cfg: RunConfig) -> int:
    g = resolve_graph(cfg.graph)
    sig = signature_from_string(g, cfg.sigs[0])
    frustration, min_rep = frustration_index(sig)
    lines = [
        f"frustration index: {frustration}",
        f"minimal representative: {_fmt(min_rep)}",
    ]
    payload = {
        "graph": cfg.graph,
        "negative_edges": str(sig),
        "frustration": frustration,
        "min_rep": str(min_rep),
    }
    _emit(cfg, lines, payload)
    return 0


def cmd_types(cfg: RunConfig) -> int:
    g = resolve_graph(cfg.graph)
    count = automorphic_type_count(g, cfg.size, cfg.max_deg)
    suffix = "" if cfg.max_deg is None else f" with max degree {cfg.max_deg}"
    payload = {
        "graph": cfg.graph,
        "size": cfg.size,
        "max_deg": cfg.max_deg,
        "count": count,
    }
    _emit(cfg, [f"automorphic types of size {cfg.size}{suffix}: {count}"], payload)
    return 0


def _reproduce_items(workers: int, corrupt: bool) -> list[dict]:
    spectra = dict(CLASS_SPECTRA)
    if corrupt:
        spectra["sigma1"] = (4, 12, 25)
    items: list[dict] = []

    def add(item, expected, got):
        items.append(
            {"item": item, "expected": expected, "got": got, "pass": expected == got}
        )

    reports_k6: tuple[ClassReport, ...] = ()
    for spec, want in CLASS_COUNTS.items():
        reports = enumerate_isomorphism_classes(resolve_graph(spec), workers=workers)
        if spec == "complete:6":
            reports_k6 = reports
        add(f"class count {spec}", want, len(reports))

    add(
        "class spectrum triples complete:6",
        sorted(spectra.values()),
        sorted(r.spectrum.triple() for r in reports_k6),
    )

    refs = reference_signatures()
    for label, sig in refs.items():
        expected = spectra[EQUIVALENT_LABEL.get(label, label)]
        add(f"spectrum {label}", expected, negative_cycle_spectrum(sig, 5).triple())

    for dup, cls in EQUIVALENT_LABEL.items():
        add(
            f"class of {dup} equals class of {cls}",
            True,
            canonical_form(refs[dup]) == canonical_form(refs[cls]),
        )
    add(
        "distinct classes among references",
        len(CLASS_SPECTRA),
        len({canonical_form(sig).bits for sig in refs.values()}),
    )

    for size, want in enumerate(TYPE_COUNTS_MAX_DEG_TWO):
        got = automorphic_type_count(k6(), size, MIN_REP_DEGREE_BOUND)
        add(f"type count size {size} max degree {MIN_REP_DEGREE_BOUND}", want, got)

    group = automorphism_group(k6())
    for src, switch_set, dst in SWITCH_WITNESSES:
        switched = switch(refs[src], switch_set)
        in_orbit = any(apply_automorphism(switched, a) == refs[dst] for a in group)
        add(f"switch witness {src} to {dst}", True, in_orbit)

    add(
        "max frustration complete:6",
        MAX_FRUSTRATION,
        max(r.frustration for r in reports_k6),
    )
    add(
        "max degree of minimum representatives complete:6",
        MIN_REP_DEGREE_BOUND,
        max(_negative_max_degree(r.min_rep) for r in reports_k6),
    )
    return items


def cmd_reproduce(cfg: RunConfig) -> int:
    items = _reproduce_items(cfg.workers, cfg.corrupt_golden)
    failures = [it for it in items if not it["pass"]]
    if cfg.format == "json":
        print(json.dumps(items, indent=2))
    else:
        for it in items:
            if it["pass"]:
                print(f"PASS  {it['item']}")
            else:
                print(
                    f"FAIL  {it['item']}: expected {it['expected']}, got {it['got']}"
                )
        print(f"{len(items) - len(failures)}/{len(items)} checks passed")
    return 4 if failures else 0


_HANDLERS = {
    "enumerate": cmd_enumerate,
    "invariants": cmd_invariants,
    "equivalent": cmd_equivalent,
    "canonical": cmd_canonical,
    "frustration": cmd_frustration,
    "types": cmd_types,
    "reproduce": cmd_reproduce,
}


def main(argv: Sequence[str] | None = None) -> int:
    try:
        cfg = parse_args(argv)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except SystemExit as exc:
        # argparse exits itself only for --help
        return 0 if exc.code in (None, 0) else 1
    try:
        return _HANDLERS[cfg.command](cfg)
    except TooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (SwitchIsoError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

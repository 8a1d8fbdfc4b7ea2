"""Command-line interface: file ingestion, orchestration, JSON/DOT/figure
emission.

Exit codes: 0 success (including genuine scan discoveries, which are data),
2 input errors, 3 bound errors, 4 theorem-violation alarms.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict
from datetime import datetime, timezone

from . import __version__
from .builtins import FAMILY_NAMES, DEFAULT_PRODUCT_SEED, family_specs, looks_like_reference, parse_group_reference
from .config import Config, load_config
from .errors import BoundError, InputError, NonfratError, TheoremViolation
from .files import parse_group_file, parse_rep_file
from .lattice import (
    Subgroup,
    composition_factors,
    frattini_subgroup,
    minimal_generating_size,
    non_omissible_elements,
)
from .perm import FiniteGroup, GroupSpec, enumerate_group, is_soluble, prime_support, quotient_group
from .primegraph import PrimeGraph, graphs_equal, non_frattini_prime_graph, prime_graph
from .triple import TripleCandidate, check_triple, cyclic_sylow_invariable_pair, invariably_generates
from .witness import ScanNotice, non_frattini_witness, scan_group, witness_survey

TOOL_NAME = "nonfrat"


def emit_dot(graph: PrimeGraph) -> str:
    """Deterministic DOT text: sorted vertices, sorted edges, fixed name."""
    lines = ["graph prime_graph {"]
    for v in sorted(graph.vertices):
        lines.append(f"  {v};")
    for p, q in graph.edge_list():
        lines.append(f"  {p} -- {q};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def envelope(command: str, group_label: str, findings) -> dict:
    return {
        "tool": TOOL_NAME,
        "version": __version__,
        "groupLabel": group_label,
        "command": command,
        "generatedAt": datetime.now(timezone.utc).isoformat(),
        "findings": findings,
    }


def _print_json(payload: dict) -> None:
    print(json.dumps(payload, sort_keys=True))


def resolve_group(reference: str, cfg: Config) -> FiniteGroup:
    """Accept either name:parameter builtin syntax or a group file path."""
    if looks_like_reference(reference):
        spec = parse_group_reference(reference)
    elif os.path.exists(reference):
        with open(reference, "r", encoding="utf-8") as fh:
            spec = parse_group_file(fh.read())
        if not spec.label:
            stem = os.path.splitext(os.path.basename(reference))[0]
            spec = GroupSpec(spec.degree, spec.generators, stem)
    else:
        raise InputError(
            f"{reference!r} is neither builtin name:parameter syntax nor an existing file"
        )
    return enumerate_group(spec, bound=cfg.enumeration_bound)


def _graph_payload(graph: PrimeGraph) -> dict:
    return {
        "vertices": list(graph.vertices),
        "edges": [list(e) for e in graph.edge_list()],
        "edgeWitnesses": {f"{p}*{q}": idx for (p, q), idx in graph.edge_witness},
    }


def _witness_payload(result) -> dict:
    return {
        "found": result.found,
        "witnessIndex": result.witness,
        "witnessOrder": result.witness_order,
        "targetSupport": list(result.target_support),
        "witnessSupport": list(result.witness_support),
        "allowedSupport": list(result.allowed_support),
    }


def _parse_bool(text: str) -> bool:
    value = text.strip().lower()
    if value in ("true", "yes", "1"):
        return True
    if value in ("false", "no", "0"):
        return False
    raise InputError(f"expected a boolean, got {text!r}")


def _parse_primes(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise InputError(f"expected comma-separated integers, got {text!r}") from None


# -- subcommands --------------------------------------------------------------


def cmd_analyze(args, cfg: Config) -> int:
    G = resolve_group(args.group, cfg)
    frat = frattini_subgroup(G, cfg.lattice_bound)
    factors = composition_factors(G, cfg.lattice_bound)
    findings = {
        "order": G.order,
        "soluble": is_soluble(G),
        "frattiniOrder": frat.order,
        "minGenerators": minimal_generating_size(G, cfg.generation_bound),
        "primes": list(prime_support(G.order)),
        "compositionFactors": [
            {"order": f.order, "abelian": f.abelian, "spectrum": [list(s) for s in f.spectrum]}
            for f in factors
        ],
    }
    _print_json(envelope("analyze", G.label(), findings))
    return 0


def cmd_graph(args, cfg: Config) -> int:
    G = resolve_group(args.group, cfg)
    gamma = prime_graph(G)
    tilde = non_frattini_prime_graph(G, cfg.lattice_bound)
    frat = frattini_subgroup(G, cfg.lattice_bound)
    quotient = quotient_group(G, frat.members, cfg.enumeration_bound).group
    qgraph = prime_graph(quotient)
    findings = {
        "primeGraph": _graph_payload(gamma),
        "nonFrattiniPrimeGraph": _graph_payload(tilde),
        "frattiniQuotientGraph": _graph_payload(qgraph),
        "graphsCoincide": graphs_equal(gamma, tilde),
    }
    panels = [("prime graph", gamma), ("non-Frattini prime graph", tilde)]
    if args.quotient_frattini:
        panels.append(("prime graph of the Frattini quotient", qgraph))
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(emit_dot(gamma))
    if args.fig:
        from .plots import save_prime_graph_figure

        save_prime_graph_figure(panels, args.fig)
    _print_json(envelope("graph", G.label(), findings))
    return 0


def cmd_witness(args, cfg: Config) -> int:
    G = resolve_group(args.group, cfg)
    result = non_frattini_witness(G, _parse_primes(args.primes), cfg.lattice_bound)
    _print_json(envelope("witness", G.label(), _witness_payload(result)))
    return 0


def _corrupt_frattini(G: FiniteGroup) -> None:
    # Self-test hook: pretend every element is a non-generator.  Downstream
    # computations read the cached value, so verification must now alarm.
    full = (1 << G.order) - 1
    G._cache["frattini"] = Subgroup(members=full, order=G.order, is_maximal=False, is_normal=True)


def cmd_verify(args, cfg: Config) -> int:
    G = resolve_group(args.group, cfg)
    if args.selftest_corrupt_frattini:
        _corrupt_frattini(G)
    alarms = []
    gamma = prime_graph(G)
    tilde = non_frattini_prime_graph(G, cfg.lattice_bound)
    coincide = graphs_equal(gamma, tilde)
    if not coincide:
        alarms.append("prime graph and non-Frattini prime graph differ")
    survey_payload = None
    try:
        survey = witness_survey(G, cfg.lattice_bound)
        survey_payload = {
            "supportSetsChecked": len(survey.results),
            "soluble": survey.soluble,
            "results": [_witness_payload(r) for r in survey.results],
        }
    except TheoremViolation as exc:
        alarms.append(str(exc))
    generation = {"checked": False, "minGenerators": None, "identityHolds": None}
    if 1 < G.order <= cfg.generation_bound:
        d = minimal_generating_size(G, cfg.generation_bound)
        non_omissible = non_omissible_elements(G, d + 1, cfg.generation_bound)
        frat = frattini_subgroup(G, cfg.lattice_bound)
        holds = non_omissible == ((1 << G.order) - 1) & ~frat.members
        generation = {"checked": True, "minGenerators": d, "identityHolds": holds}
        if not holds:
            alarms.append("non-omissible elements do not match the Frattini complement")
    findings = {
        "graphsCoincide": coincide,
        "witnessSurvey": survey_payload,
        "generationIdentity": generation,
        "alarms": alarms,
    }
    _print_json(envelope("verify", G.label(), findings))
    return 4 if alarms else 0


def _scan_payload(spec: GroupSpec, max_order: int, cfg: Config, question: bool):
    if question:
        return scan_group(spec, max_order, cfg)
    limit = min(cfg.enumeration_bound, max_order)
    try:
        G = enumerate_group(spec, bound=limit)
        gamma = prime_graph(G)
        tilde = non_frattini_prime_graph(G, cfg.lattice_bound)
        survey = witness_survey(G, cfg.lattice_bound)
    except BoundError:
        return ScanNotice(group_label=spec.label, reason=f"bounds exceeded at {limit}")
    coincide = graphs_equal(gamma, tilde)
    if not coincide:
        raise TheoremViolation(f"{G.label()}: prime graph and non-Frattini prime graph differ")
    return {
        "group": G.label(),
        "order": G.order,
        "soluble": survey.soluble,
        "graphsCoincide": coincide,
        "supportSetsChecked": len(survey.results),
        "allWitnessesFound": all(r.found for r in survey.results),
    }


def _scan_worker(payload):
    spec, max_order, cfg, question = payload
    return spec.label, _scan_payload(spec, max_order, cfg, question)


def cmd_scan(args, cfg: Config) -> int:
    specs = family_specs(args.family, args.max_order, seed=args.seed)
    payloads = [(spec, args.max_order, cfg, args.question) for spec in specs]
    workers = cfg.workers
    if workers > 1 and len(payloads) > 1:
        pool = ProcessPoolExecutor(max_workers=workers)
        outcomes = pool.map(_scan_worker, payloads)
    else:
        pool = None
        outcomes = map(_scan_worker, payloads)
    all_findings = []
    try:
        for label, outcome in outcomes:
            if isinstance(outcome, ScanNotice):
                print(f"notice: {outcome.group_label}: skipped ({outcome.reason})", file=sys.stderr)
                continue
            if isinstance(outcome, dict):
                _print_json(envelope("scan", label, outcome))
                continue
            for finding in outcome:
                all_findings.append(finding)
                _print_json(
                    envelope(
                        "scan",
                        finding.group_label,
                        {
                            "group": finding.group_label,
                            "order": finding.group_order,
                            "p": finding.p,
                            "q": finding.q,
                            "hasDivisibleOrderElement": finding.has_divisible,
                            "hasExactSupportWitness": finding.has_exact_support_witness,
                            "counterexample": finding.counterexample,
                        },
                    )
                )
    finally:
        if pool is not None:
            pool.shutdown()
    if args.fig and args.question:
        from .plots import save_scan_figure

        save_scan_figure(all_findings, args.fig)
    return 0


def cmd_triple(args, cfg: Config) -> int:
    S = resolve_group(args.group, cfg)
    with open(args.modp, "r", encoding="utf-8") as fh:
        P = parse_rep_file(fh.read())
    with open(args.modq, "r", encoding="utf-8") as fh:
        Q = parse_rep_file(fh.read())
    candidate = TripleCandidate(
        S=S,
        p=P.prime,
        q=Q.prime,
        P=P,
        Q=Q,
        h2p_attested=_parse_bool(args.attest_h2p),
        h2q_attested=_parse_bool(args.attest_h2q),
        attestation_note=args.note or "",
    )
    report = check_triple(candidate, cfg.lattice_bound, cfg.spin_bound)
    findings = {
        "p": candidate.p,
        "q": candidate.q,
        "simpleS": report.simple_s,
        "faithfulP": report.faithful_p,
        "faithfulQ": report.faithful_q,
        "irreducibleP": report.irreducible_p,
        "irreducibleQ": report.irreducible_q,
        "noOrderPqElement": report.no_order_pq_element,
        "pModuleFixedPointFree": report.p_module_fixed_point_free,
        "qModuleFixedPointFree": report.q_module_fixed_point_free,
        "h2pAttested": report.h2p_attested,
        "h2qAttested": report.h2q_attested,
        "attestationNote": candidate.attestation_note,
        "verdict": report.verdict.value,
    }
    _print_json(envelope("triple", S.label(), findings))
    return 0


def cmd_invgen(args, cfg: Config) -> int:
    G = resolve_group(args.group, cfg)
    for idx in (args.x, args.y):
        if not 0 <= idx < G.order:
            raise InputError(f"element index {idx} outside 0..{G.order - 1}")
    result = invariably_generates(G, args.x, args.y)
    findings = {
        "x": {"index": args.x, "cycles": str(G.element(args.x)), "order": G.order_of(args.x)},
        "y": {"index": args.y, "cycles": str(G.element(args.y)), "order": G.order_of(args.y)},
        "invariablyGenerates": result,
    }
    _print_json(envelope("invgen", G.label(), findings))
    return 0


def cmd_prop28(args, cfg: Config) -> int:
    S = resolve_group(args.group, cfg)
    report = cyclic_sylow_invariable_pair(S, args.p, args.q, cfg.lattice_bound)
    findings = asdict(report)
    if report.x is not None:
        findings["xCycles"] = str(S.element(report.x))
        findings["yCycles"] = str(S.element(report.y))
    _print_json(envelope("prop28", S.label(), findings))
    return 0


# -- argument parsing ----------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=TOOL_NAME,
        description="Frattini subgroups, prime graphs and non-Frattini element structure",
    )
    parser.add_argument("--config", metavar="FILE", help="key = value config file")
    parser.add_argument("--enumeration-bound", type=int, metavar="N")
    parser.add_argument("--lattice-bound", type=int, metavar="N")
    parser.add_argument("--generation-bound", type=int, metavar="N")
    parser.add_argument("--spin-bound", type=int, metavar="N")
    parser.add_argument("--parallelism", type=int, metavar="N")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="order, solubility, Frattini order, generators, factors")
    p.add_argument("group")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("graph", help="prime graph and non-Frattini prime graph")
    p.add_argument("group")
    p.add_argument("--dot", metavar="FILE", help="write the prime graph as DOT")
    p.add_argument("--fig", metavar="FILE", help="render the graphs to an image file")
    p.add_argument(
        "--quotient-frattini",
        action="store_true",
        help="also compute the prime graph of the quotient by the Frattini subgroup",
    )
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("witness", help="non-Frattini witness for a prime set")
    p.add_argument("group")
    p.add_argument("--primes", required=True, metavar="P1,P2,...")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("verify", help="run every proved-statement check on one group")
    p.add_argument("group")
    p.add_argument("--selftest-corrupt-frattini", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("scan", help="scan a family of groups (JSON lines)")
    p.add_argument("--family", required=True, choices=FAMILY_NAMES + ("all",))
    p.add_argument("--max-order", required=True, type=int)
    p.add_argument(
        "--question",
        action="store_true",
        help="report per-pair exact-support witness findings instead of verification results",
    )
    p.add_argument("--fig", metavar="FILE", help="render a scan summary figure (question mode)")
    p.add_argument("--seed", type=int, default=DEFAULT_PRODUCT_SEED, help="seed for the products family")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("triple", help="check the computable candidate-triple conditions")
    p.add_argument("--group", required=True)
    p.add_argument("--modp", required=True, metavar="FILE")
    p.add_argument("--modq", required=True, metavar="FILE")
    p.add_argument("--attest-h2p", required=True, metavar="BOOL")
    p.add_argument("--attest-h2q", required=True, metavar="BOOL")
    p.add_argument("--note", metavar="TEXT")
    p.set_defaults(func=cmd_triple)

    p = sub.add_parser("invgen", help="invariable generation check for two elements")
    p.add_argument("group")
    p.add_argument("--x", required=True, type=int, metavar="IDX")
    p.add_argument("--y", required=True, type=int, metavar="IDX")
    p.set_defaults(func=cmd_invgen)

    p = sub.add_parser("prop28", help="cyclic Sylow subgroups and invariable generator pair")
    p.add_argument("group")
    p.add_argument("-p", required=True, type=int)
    p.add_argument("-q", required=True, type=int)
    p.set_defaults(func=cmd_prop28)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = load_config(
            args.config,
            overrides={
                "enumeration_bound": args.enumeration_bound,
                "lattice_bound": args.lattice_bound,
                "generation_bound": args.generation_bound,
                "spin_bound": args.spin_bound,
                "parallelism": args.parallelism,
            },
        )
        return args.func(args, cfg)
    except TheoremViolation as exc:
        print(f"theorem violation: {exc}", file=sys.stderr)
        return 4
    except BoundError as exc:
        print(f"bound exceeded: {exc}", file=sys.stderr)
        return 3
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except NonfratError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

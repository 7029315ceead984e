"""Command-line interface.

Exit codes: 0 success, 2 invalid input, 3 capacity exceeded, 4 a check failed.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any, Sequence

from . import constructions, engine, formulas, oracle
from .core import ColoredGraph, PartiteSpec, build_host, contains_rainbow_clique
from .errors import CapacityError, ValidationError
from .io import read_colored, write_colored

EXIT_OK, EXIT_VALIDATION, EXIT_CAPACITY, EXIT_MISMATCH = 0, 2, 3, 4

log = logging.getLogger("antiramsey")


@dataclass
class RunReport:
    command: list[str]
    inputs: dict[str, Any] = field(default_factory=dict)
    results: dict[str, Any] = field(default_factory=dict)
    timing_s: float = 0.0
    counters: dict[str, int] = field(default_factory=dict)
    outputs: list[str] = field(default_factory=list)
    status: str = "ok"

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "RunReport":
        return cls(**json.loads(text))


class CheckFailed(Exception):
    """A construction or verification did not meet its contract."""


def _spec(text: str) -> PartiteSpec:
    return PartiteSpec.parse(text)


# ---- ar ----

def _degenerate(spec: PartiteSpec, k: int, want_witness: bool) -> formulas.ArResult:
    host = build_host(spec)
    witness = ColoredGraph(host, tuple(range(host.e)), "rainbow") if want_witness else None
    return formulas.ArResult(host.e, "degenerate:no-k-clique", k, witness)


def compute_ar(spec: PartiteSpec, k: int, method: str, *, jobs: int = 1, edge_cap: int = oracle.EDGE_CAP,
               base_limit: int = engine.BASE_LIMIT, degenerate_ok: bool = False,
               want_witness: bool = True) -> formulas.ArResult:
    if k < 3:
        raise ValidationError(f"k must be >= 3, got {k}")
    if spec.r < k:
        if not degenerate_ok:
            raise ValidationError(
                f"r={spec.r} < k={k}: the host has no K_{k}; pass --degenerate-ok to get e(G)")
        return _degenerate(spec, k, want_witness)
    if method == "formula":
        found = formulas.formula_for(spec, k, want_witness)
        if found is None:
            raise ValidationError(f"no closed formula applies to sizes {spec} with k={k}")
        return found
    if method == "theorem6":
        return engine.ar_via_theorem6(spec, k, base_limit=base_limit, jobs=jobs, with_witness=want_witness)
    if method == "oracle":
        return oracle.brute_force_ar(build_host(spec), k, edge_cap=edge_cap, jobs=jobs)
    # auto
    found = formulas.formula_for(spec, k, want_witness)
    if found is not None:
        return found
    if spec.r <= base_limit:
        return engine.ar_via_theorem6(spec, k, base_limit=base_limit, jobs=jobs, with_witness=want_witness)
    if spec.edge_count <= edge_cap:
        return oracle.brute_force_ar(build_host(spec), k, edge_cap=edge_cap, jobs=jobs)
    raise CapacityError(
        f"no formula applies, r={spec.r} exceeds the base limit {base_limit} "
        f"and e(G)={spec.edge_count} exceeds the edge cap {edge_cap}", parameter="r")


def cmd_ar(args, report: RunReport) -> None:
    spec = _spec(args.sizes)
    report.inputs.update(sizes=list(spec.sizes), k=args.k, method=args.method)
    res = compute_ar(spec, args.k, args.method, jobs=args.jobs, edge_cap=args.edge_cap,
                     degenerate_ok=args.degenerate_ok, want_witness=bool(args.witness))
    if res.witness is not None and not res.check_witness():
        raise CheckFailed(f"witness does not attain {res.value} colors without a rainbow K_{args.k}")
    report.results.update(value=res.value, method=res.method)
    report.counters.update({key: v for key, v in res.stats.items() if isinstance(v, int)})
    if args.witness:
        write_colored(res.witness, args.witness, res.witness.name or res.method)
        report.outputs.append(str(args.witness))
    _say(args, f"ar(K_{{{spec}}}, K_{args.k}) = {res.value}  [{res.method}]", res.value)


# ---- construct ----

def _validated(cg: ColoredGraph, k: int, expected: int) -> ColoredGraph:
    if cg.color_count != expected:
        raise CheckFailed(f"{cg.name}: expected {expected} colors, built {cg.color_count}")
    witness = contains_rainbow_clique(cg, k)
    if witness:
        raise CheckFailed(f"{cg.name}: contains a rainbow K_{k}")
    return cg


def cmd_construct(args, report: RunReport) -> None:
    name = args.name
    report.inputs["name"] = name
    if name == "normal":
        spec = _spec(args.sizes)
        k = spec.r
        built = [_validated(constructions.normal_coloring(spec), k, formulas.kpartite_value(spec))]
        report.inputs.update(sizes=list(spec.sizes))
    elif name == "turan":
        k = args.k
        expected = formulas.ar_balanced(args.r, args.t, k, with_witness=False).value
        built = [_validated(constructions.turan_coloring(args.r, args.t, k), k, expected)]
        report.inputs.update(r=args.r, t=args.t, k=k)
    elif name == "book":
        k = 3
        built = [_validated(cg, 3, args.n + 1) for cg in constructions.book_colorings(args.n, args.dedupe)]
        report.inputs.update(n=args.n, dedupe=args.dedupe)
    else:
        k = args.k
        t = args.t1 + args.t2
        expected = t * t * formulas.turan_number(args.r, k - 1) + 1
        built = [_validated(constructions.example1_coloring(args.r, k, args.t1, args.t2), k, expected)]
        report.inputs.update(r=args.r, k=k, t1=args.t1, t2=args.t2)
    report.results.update(count=len(built), colors=[cg.color_count for cg in built])
    if args.out:
        out = Path(args.out)
        if len(built) == 1 and out.suffix == ".json":
            paths = [write_colored(built[0], out, name)]
        else:
            paths = [write_colored(cg, out / f"{name}_{i:03d}.json", name) for i, cg in enumerate(built)]
        report.outputs.extend(str(p) for p in paths)
    summary = f"{name}: {len(built)} coloring(s), colors {sorted(set(report.results['colors']))}, no rainbow K_{k}"
    _say(args, summary, built[0].color_count if len(built) == 1 else len(built))


# ---- enumerate ----

def cmd_enumerate(args, report: RunReport) -> None:
    spec = _spec(args.sizes)
    report.inputs.update(sizes=list(spec.sizes), k=args.k)
    fam = oracle.enumerate_extremal(build_host(spec), args.k, edge_cap=args.edge_cap, jobs=args.jobs)
    report.results.update(ar_value=fam.ar_value, count=fam.count, complete=fam.complete)
    report.counters.update({key: v for key, v in fam.stats.items() if isinstance(v, int)})
    if args.out:
        manifest = oracle.write_manifest(fam, args.out)
        report.outputs.append(str(manifest))
    _say(args, f"ar = {fam.ar_value}; {fam.count} extremal coloring(s) up to isomorphism", fam.count)


# ---- classify ----

def cmd_classify(args, report: RunReport) -> None:
    cg = read_colored(args.file)
    report.inputs.update(file=str(args.file), k=args.k)
    tag = oracle.classify_theorem8(cg, args.k)
    report.results["tag"] = tag
    _say(args, f"{args.file}: {tag}", tag)
    if tag == "none":
        raise CheckFailed("coloring matches none of the three extremal shapes")


# ---- verify ----

def _expected_dirac_names(n: int, k: int) -> list[str]:
    extra = {(5, 4): ["hourglass", "house"], (6, 4): ["prism"]}
    return sorted(["turan", *extra.get((n, k), [])])


def cmd_verify(args, report: RunReport) -> None:
    report.inputs["target"] = args.target
    if args.target == "dirac":
        report.inputs.update(n=args.n, k=args.k)
        graphs = oracle.dirac_extremal_graphs(args.n, args.k)
        names = sorted(oracle.dirac_graph_name(g, args.k) for g in graphs)
        expected = _expected_dirac_names(args.n, args.k)
        report.results.update(edges=formulas.dirac_extremal_bound(args.n, args.k), graphs=names,
                              expected=expected, passed=names == expected)
        _say(args, f"{len(names)} graph(s): {', '.join(names)}", len(names))
        if names != expected:
            raise CheckFailed(f"found {names}, expected {expected}")
        return
    report.inputs.update(r=args.r, t=args.t, k=args.k)
    rep = oracle.verify_theorem10(args.r, args.t, args.k, jobs=args.jobs)
    report.results.update(value=rep.value, expected_value=rep.expected_value, bases=rep.found_names,
                          expected=rep.expected_names, passed=rep.passed)
    _say(args, f"value {rep.value} (expected {rep.expected_value}); bases: {', '.join(rep.found_names)}",
         "pass" if rep.passed else "fail")
    if not rep.passed:
        raise CheckFailed(f"bases {rep.found_names}, expected {rep.expected_names}")


# ---- plumbing ----

def _say(args, text: str, quiet_value: Any) -> None:
    if args.json:
        return
    print(quiet_value if args.quiet else text)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--quiet", action="store_true", help="print only the answer")
    common.add_argument("--json", action="store_true", help="print the run report as JSON")
    common.add_argument("--report", metavar="PATH", help="also write the run report to PATH")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for searches")
    common.add_argument("-v", "--verbose", action="store_true", help="search progress on stderr")

    parser = argparse.ArgumentParser(prog="antiramsey", description="Exact anti-Ramsey numbers of cliques in complete multipartite graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ar", parents=[common], help="compute ar(K_{n1..nr}, K_k)")
    p.add_argument("--sizes", required=True, help="comma-separated part sizes, e.g. 2,1,1")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--method", choices=["auto", "formula", "theorem6", "oracle"], default="auto")
    p.add_argument("--witness", metavar="PATH", help="write an extremal coloring here")
    p.add_argument("--edge-cap", type=int, default=oracle.EDGE_CAP)
    p.add_argument("--degenerate-ok", action="store_true", help="for r < k return e(G) instead of failing")
    p.set_defaults(func=cmd_ar)

    p = sub.add_parser("construct", parents=[common], help="build a named extremal coloring")
    p.add_argument("name", choices=["normal", "turan", "book", "example1"])
    p.add_argument("--sizes")
    p.add_argument("--r", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--t1", type=int)
    p.add_argument("--t2", type=int)
    p.add_argument("--dedupe", action="store_true", help="books: one coloring per isomorphism class")
    p.add_argument("--out", help="output file (.json) or directory")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("enumerate", parents=[common], help="all extremal colorings up to isomorphism")
    p.add_argument("--sizes", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--edge-cap", type=int, default=oracle.EDGE_CAP)
    p.add_argument("--out", help="directory for the manifest and coloring files")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("classify", parents=[common], help="match a coloring against the extremal shapes")
    p.add_argument("--file", required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", parents=[common], help="small-scale structural checks")
    p.add_argument("target", choices=["dirac", "theorem10"])
    p.add_argument("--n", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--t", type=int, default=2)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_verify)
    return parser


_REQUIRED = {
    ("construct", "normal"): ["sizes"],
    ("construct", "turan"): ["r", "t", "k"],
    ("construct", "book"): ["n"],
    ("construct", "example1"): ["r", "k", "t1", "t2"],
    ("verify", "dirac"): ["n"],
    ("verify", "theorem10"): ["r"],
}


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s", stream=sys.stderr)
    sub = getattr(args, "name", None) or getattr(args, "target", None)
    missing = [f"--{a.replace('_', '-')}" for a in _REQUIRED.get((args.command, sub), []) if getattr(args, a) is None]
    if missing:
        parser.error(f"{args.command} {sub} needs {', '.join(missing)}")

    report = RunReport(command=["antiramsey", *argv])
    start = time.perf_counter()
    code = EXIT_OK
    try:
        args.func(args, report)
    except ValidationError as exc:
        report.status, code = f"validation error: {exc}", EXIT_VALIDATION
    except CapacityError as exc:
        report.status, code = f"capacity error ({exc.parameter}): {exc}", EXIT_CAPACITY
    except CheckFailed as exc:
        report.status, code = f"check failed: {exc}", EXIT_MISMATCH
    report.timing_s = round(time.perf_counter() - start, 6)
    if code != EXIT_OK:
        print(report.status, file=sys.stderr)
    if report.counters and args.verbose:
        print(" ".join(f"{key}={v}" for key, v in sorted(report.counters.items())), file=sys.stderr)
    if args.json:
        print(report.to_json(), end="")
    if args.report:
        Path(args.report).write_text(report.to_json())
    return code


if __name__ == "__main__":
    sys.exit(main())

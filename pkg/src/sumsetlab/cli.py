"""Command-line front end.

Subcommands mirror the library: compute, bound, verify (direct,
factorization, complement, inclusions), decompose, scan (extremal,
inverse-eh).  Output is plain text by default; ``--format records``
emits one JSON object per line, one per checked instance, closing with
a summary line, so a scan can be piped into other tooling and re-run
from its own records.

Exit codes: 0 success, 1 bad parameters or unparsable input, 2 a
verification that was supposed to hold failed, 3 a scan refused by the
resource cap.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from .core import (
    GroundSet,
    SumParams,
    bound_direct_integers,
    bound_direct_mod_p,
    generalized_sumset,
    parse_ground_set,
)
from .decompose import MultiplicityVector, check_sumset_factorization, greedy_decompose
from .errors import DomainError, InvariantViolationError, ResourceCapError
from .scan import (
    DEFAULT_CAP,
    parse_manifest,
    scan_extremal_integers,
    scan_inverse_eh_mod_p,
)
from .verify import (
    check_complement_identity,
    check_direct_bound,
    check_inclusions_and_witnesses,
)

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_VERIFICATION = 2
EXIT_CAP = 3


class _ParseError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse maps usage errors to exit code 2; this CLI reserves 2
    for verification failures, so usage errors surface as exceptions
    and run() turns them into exit code 1."""

    def error(self, message):
        raise _ParseError(message)


@dataclass(frozen=True)
class CliConfig:
    """Parsed invocation, independent of argparse internals."""

    command: str
    subcommand: Optional[str] = None
    set_literal: Optional[str] = None
    h: Optional[int] = None
    r: Optional[int] = None
    p: Optional[int] = None
    k: Optional[int] = None
    counts: Optional[str] = None
    max_diameter: Optional[int] = None
    cap: int = DEFAULT_CAP
    jobs: int = 1
    manifest: Optional[str] = None
    format: str = "plain"
    verbose: bool = False


def _json_line(obj: dict) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


class _Output:
    """Collects instance records; prints them only in records mode."""

    def __init__(self, records: bool, verbose: bool = False):
        self.records = records
        self.verbose = verbose
        self.instances = 0
        self.failures = 0

    def instance(self, record: dict, failed: bool = False) -> None:
        self.instances += 1
        if failed:
            self.failures += 1
        if self.records:
            print(_json_line(record))

    def text(self, line: str = "") -> None:
        if not self.records:
            print(line)

    def summary(self, verdict: str) -> None:
        if self.records:
            print(
                _json_line(
                    {
                        "op": "summary",
                        "instances": self.instances,
                        "failures": self.failures,
                        "verdict": verdict,
                    }
                )
            )


def _fmt_set(values, modulus=None) -> str:
    body = "{" + ",".join(str(v) for v in values) + "}"
    return f"{body} mod {modulus}" if modulus else body


def build_parser() -> _Parser:
    parser = _Parser(prog="sumsetlab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_set=True, with_hr=True, with_p=True):
        if with_set:
            p.add_argument("--set", dest="set_literal", help='e.g. "0,1,3,7 mod 11"')
        if with_hr:
            p.add_argument("--h", type=int, required=True)
            p.add_argument("--r", type=int, required=True)
        if with_p:
            p.add_argument("--p", type=int, help="modulus (alternative to 'mod p')")
        p.add_argument("--format", choices=("plain", "records"), default="plain")
        p.add_argument(
            "--verbose",
            action="store_true",
            help="plain mode: list every equality set and full check details",
        )

    c = sub.add_parser("compute", help="compute h^(r)A")
    add_common(c)

    b = sub.add_parser("bound", help="closed-form lower bound for |h^(r)A|")
    add_common(b, with_set=True)
    b.add_argument("--k", type=int, help="set size (alternative to --set)")

    v = sub.add_parser("verify", help="check bounds and identities")
    vsub = v.add_subparsers(dest="subcommand", required=True)
    for name, blurb in (
        ("direct", "computed cardinality against the closed-form bound"),
        ("factorization", "h^(r)A against the r-fold sumset of m^A (needs r | h)"),
        ("complement", "|h^(r)A| against |(rk-h)^(r)A|"),
        ("inclusions", "split inclusion, case bundles, witness chains"),
    ):
        vp = vsub.add_parser(name, help=blurb)
        add_common(vp)

    d = sub.add_parser("decompose", help="greedy rewrite into r parts of m distinct elements")
    add_common(d, with_hr=False)
    d.add_argument("--counts", required=True, help='multiplicities, e.g. "2,1,1"')
    d.add_argument("--r", type=int, required=True, help="per-element cap")

    s = sub.add_parser("scan", help="exhaustive equality-set scans")
    ssub = s.add_subparsers(dest="subcommand", required=True)

    se = ssub.add_parser("extremal", help="normalized integer sets up to a diameter")
    se.add_argument("--k", type=int)
    se.add_argument("--h", type=int)
    se.add_argument("--r", type=int)
    se.add_argument("--max-diameter", dest="max_diameter", type=int)
    se.add_argument("--manifest", help="grid manifest file")
    _add_scan_common(se)

    si = ssub.add_parser("inverse-eh", help="k-subsets of Z/pZ, distinct-sum equality sets")
    si.add_argument("--p", type=int)
    si.add_argument("--k", type=int)
    si.add_argument("--h", type=int, default=2)
    si.add_argument("--manifest", help="grid manifest file")
    _add_scan_common(si)

    return parser


def _add_scan_common(p) -> None:
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.add_argument(
        "--jobs",
        type=int,
        default=None,
        help="worker processes (default: all available cores)",
    )
    p.add_argument("--format", choices=("plain", "records"), default="plain")
    p.add_argument(
        "--verbose",
        action="store_true",
        help="plain mode: list every equality set and full check details",
    )


def _config_from(ns: argparse.Namespace) -> CliConfig:
    get = lambda name, default=None: getattr(ns, name, default)
    return CliConfig(
        command=ns.command,
        subcommand=get("subcommand"),
        set_literal=get("set_literal"),
        h=get("h"),
        r=get("r"),
        p=get("p"),
        k=get("k"),
        counts=get("counts"),
        max_diameter=get("max_diameter"),
        cap=get("cap", DEFAULT_CAP),
        jobs=get("jobs") or os.cpu_count() or 1,
        manifest=get("manifest"),
        format=get("format", "plain"),
        verbose=bool(get("verbose", False)),
    )


def _resolve_ground(config: CliConfig) -> GroundSet:
    if not config.set_literal:
        raise DomainError("--set is required for this command")
    literal = config.set_literal
    if config.p is not None and "mod" not in literal:
        literal = f"{literal} mod {config.p}"
    ground = parse_ground_set(literal)
    if config.p is not None and ground.modulus != config.p:
        raise DomainError(
            f"--p {config.p} conflicts with 'mod {ground.modulus}' in the set literal"
        )
    return ground


def _params(config: CliConfig) -> SumParams:
    if config.h is None or config.r is None:
        raise DomainError("--h and --r are required for this command")
    return SumParams(h=config.h, r=config.r)


def _cmd_compute(config: CliConfig, out: _Output) -> int:
    ground = _resolve_ground(config)
    params = _params(config)
    result = generalized_sumset(ground, params)
    record = {
        "op": "compute",
        "set": list(ground.elements),
        "p": ground.modulus,
        "h": params.h,
        "r": params.r,
        "values": list(result.values),
        "cardinality": result.cardinality,
        "min": result.min,
        "max": result.max,
    }
    out.instance(record)
    out.text(_fmt_set(result.values, ground.modulus))
    out.text(f"cardinality {result.cardinality}")
    if ground.modulus is None:
        out.text(f"min {result.min} max {result.max}")
    out.summary("pass")
    return EXIT_OK


def _cmd_bound(config: CliConfig, out: _Output) -> int:
    p = config.p
    if config.set_literal:
        ground = _resolve_ground(config)
        k = ground.size
        p = ground.modulus
    elif config.k is not None:
        k = config.k
    else:
        raise DomainError("one of --set or --k is required for bound")
    params = _params(config)
    if p is None:
        value = bound_direct_integers(k, params.h, params.r)
    else:
        value = bound_direct_mod_p(k, params.h, params.r, p)
    out.instance(
        {"op": "bound", "k": k, "h": params.h, "r": params.r, "p": p, "bound": value}
    )
    out.text(str(value))
    out.summary("pass")
    return EXIT_OK


def _cmd_verify(config: CliConfig, out: _Output) -> int:
    ground = _resolve_ground(config)
    params = _params(config)
    sub = config.subcommand
    if sub == "direct":
        report = check_direct_bound(ground, params)
        out.instance(report.to_record(), failed=report.verdict == "fail")
        out.text(f"cardinality {report.cardinality}")
        out.text(f"bound {report.bound}")
        out.text(f"slack {report.slack}")
        out.text(f"equality {'yes' if report.equality else 'no'}")
    elif sub == "factorization":
        report = check_sumset_factorization(ground, params)
        out.instance(report.to_record(), failed=report.verdict == "fail")
        out.text(f"left cardinality {report.left.cardinality}")
        out.text(f"right cardinality {report.right.cardinality}")
        out.text(f"equal {'yes' if report.equal else 'no'}")
    elif sub == "complement":
        report = check_complement_identity(ground, params)
        out.instance(report.to_record(), failed=report.verdict == "fail")
        out.text(f"cardinality {report.cardinality}")
        out.text(
            f"complement h'={report.h_complement} cardinality "
            f"{report.complement_cardinality}"
        )
        out.text(f"equal {'yes' if report.equal else 'no'}")
    elif sub == "inclusions":
        report = check_inclusions_and_witnesses(ground, params)
        out.instance(report.to_record(), failed=report.verdict == "fail")
        for item in report.checks:
            line = f"{item.name}: {item.status}"
            if item.detail and (out.verbose or item.status == "fail"):
                line += f" ({item.detail})"
            out.text(line)
    else:
        raise DomainError(f"unknown verify subcommand {sub!r}")
    out.text(f"verdict {report.verdict}")
    out.summary(report.verdict)
    return EXIT_OK if report.verdict == "pass" else EXIT_VERIFICATION


def _cmd_decompose(config: CliConfig, out: _Output) -> int:
    ground = _resolve_ground(config)
    if config.r is None:
        raise DomainError("--r is required for decompose")
    if not config.counts:
        raise DomainError("--counts is required for decompose")
    try:
        counts = tuple(int(t) for t in config.counts.split(",") if t.strip())
    except ValueError:
        raise DomainError(f"bad --counts {config.counts!r}") from None
    vector = MultiplicityVector(counts=counts, cap=config.r)
    result = greedy_decompose(ground, vector)
    out.instance(result.to_record())
    out.text(
        f"total {result.total_sum} from counts {vector.counts} cap {vector.cap}"
    )
    for step, part, value in zip(result.trace, result.parts, result.part_sums):
        values = tuple(ground.elements[i] for i in part)
        out.text(
            f"part {step.step}: indices {part} values {values} sum {value} "
            f"[active_before={step.active_before} max_after={step.max_after}]"
        )
    out.summary("pass")
    return EXIT_OK


def _scan_combos(config: CliConfig) -> list:
    if config.manifest:
        with open(config.manifest, "r", encoding="utf-8") as fh:
            return parse_manifest(fh.read())
    combo = {}
    for key in ("k", "h", "r", "max_diameter", "p"):
        value = getattr(config, key)
        if value is not None:
            combo[key] = value
    return [combo]


def _cmd_scan(config: CliConfig, out: _Output) -> int:
    combos = _scan_combos(config)
    code = EXIT_OK
    for combo in combos:
        if config.subcommand == "extremal":
            for key in ("k", "h", "r", "max_diameter"):
                if key not in combo:
                    raise DomainError(f"scan extremal needs {key} (flag or manifest)")
            report = scan_extremal_integers(
                k=combo["k"],
                h=combo["h"],
                r=combo["r"],
                max_diameter=combo["max_diameter"],
                cap=config.cap,
                jobs=config.jobs,
                on_instance=(
                    (lambda rec: out.instance(rec, failed=rec["slack"] < 0))
                    if out.records
                    else None
                ),
            )
        elif config.subcommand == "inverse-eh":
            for key in ("p", "k"):
                if key not in combo:
                    raise DomainError(f"scan inverse-eh needs {key} (flag or manifest)")
            report = scan_inverse_eh_mod_p(
                p=combo["p"],
                k=combo["k"],
                h=combo.get("h", 2),
                cap=config.cap,
                jobs=config.jobs,
                on_instance=(
                    (lambda rec: out.instance(rec, failed=rec["slack"] < 0))
                    if out.records
                    else None
                ),
            )
        else:
            raise DomainError(f"unknown scan subcommand {config.subcommand!r}")
        if out.records:
            print(_json_line(report.to_record()))
        else:
            _print_scan_plain(report, out)
        if report.verdict == "fail":
            code = EXIT_VERIFICATION
    out.summary("pass" if code == EXIT_OK else "fail")
    return code


def _print_scan_plain(report, out: _Output) -> None:
    header = f"scan {report.kind} k={report.k} h={report.h} r={report.r}"
    if report.p is not None:
        header += f" p={report.p}"
    if report.max_diameter is not None:
        header += f" max_diameter={report.max_diameter}"
    out.text(header)
    out.text(
        f"candidates {report.candidates}  evaluated {report.evaluated}  "
        f"bound {report.bound}"
    )
    out.text(f"equality sets: {len(report.equality_sets)}")
    shown = report.equality_sets if out.verbose else report.equality_sets[:10]
    for s in shown:
        out.text(f"  {_fmt_set(s, report.p)}")
    if len(shown) < len(report.equality_sets):
        hidden = len(report.equality_sets) - len(shown)
        out.text(f"  ... and {hidden} more (--verbose lists all)")
    if report.violations:
        out.text(f"bound violations: {len(report.violations)}")
        for s in report.violations:
            out.text(f"  {_fmt_set(s, report.p)}")
    side = "inside" if report.in_hypothesis else "outside"
    out.text(f"hypothesis ({report.hypothesis}): {side}")
    out.text(f"verdict {report.verdict}")


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except _ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    config = _config_from(ns)
    out = _Output(records=config.format == "records", verbose=config.verbose)
    handlers = {
        "compute": _cmd_compute,
        "bound": _cmd_bound,
        "verify": _cmd_verify,
        "decompose": _cmd_decompose,
        "scan": _cmd_scan,
    }
    try:
        return handlers[config.command](config, out)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except InvariantViolationError as exc:
        print(f"invariant violated: {exc}", file=sys.stderr)
        return EXIT_VERIFICATION
    except ResourceCapError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_CAP
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


def main() -> None:
    sys.exit(run(sys.argv[1:]))

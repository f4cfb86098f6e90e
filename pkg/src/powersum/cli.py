"""Command-line front end.

Every subcommand writes JSON-lines records to stdout. Integers are written
as decimal strings so big values survive any JSON reader. Exit codes:
0 success, 1 a verification record has ok=false, 2 usage or validation
error, 3 resource limit (factorization budget, orbit search depth).
"""

from __future__ import annotations

import argparse
import dataclasses
import hashlib
import json
import os
import sys
import tempfile
from fractions import Fraction
from pathlib import Path

from . import __version__
from .catalog import FAMILIES, anomalous_catalog, family_instances, mersenne_quotient_scan, pair_transform
from .classify import association_tag, group_by_association
from .errors import NotFound, PowersumError, ResourceLimit
from .grouplat import invariants
from .instance import Instance
from .modmath import small_primes
from .orbits import detect_case, minimal_pair_power, predicted_solution, verify_lemma1
from .search import distinct_values, enumerate_general
from . import verify as V

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3
DEFAULT_CACHE = ".powersum-cache"


def jsonable(obj):
    """Convert to JSON-ready data with every integer rendered as a decimal string."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, Fraction):
        return str(obj.numerator) if obj.denominator == 1 else f"{obj.numerator}/{obj.denominator}"
    if dataclasses.is_dataclass(obj):
        return jsonable(dataclasses.asdict(obj))
    if isinstance(obj, dict):
        return {str(k) if not isinstance(k, tuple) else ",".join(map(str, k)): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = sorted(obj) if isinstance(obj, (set, frozenset)) else obj
        return [jsonable(v) for v in items]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(record: dict) -> str:
    return json.dumps(jsonable(record), sort_keys=True, separators=(",", ":"))


def _int_list(text: str) -> list[int]:
    return [int(v) for v in text.split(",") if v.strip()]


def _int_range(text: str) -> list[int]:
    """'2-6' or '2,3,5'."""
    if "-" in text and "," not in text:
        lo, hi = text.split("-")
        return list(range(int(lo), int(hi) + 1))
    return _int_list(text)


def _depth(args, default: int) -> int:
    return default if args.z_max is None else args.z_max


def _load_instance(args) -> Instance:
    if args.instance:
        data = json.loads(Path(args.instance).read_text())
        c = int(data["c"])
        d = [int(v) for v in data["d"]]
        z_max = int(data.get("z_max", 10))
        r, s = int(data.get("r", 1)), int(data.get("s", 1))
    else:
        if args.c is None or args.d is None:
            raise ValueError("give --instance FILE or both -c and -d")
        c, d, z_max, r, s = args.c, _int_list(args.d), _depth(args, 10), args.r, args.s
    return Instance(c, tuple(d), z_max, r, s)


def _solution_record(sol, inst: Instance) -> dict:
    rec = {"z": sol.z, "A": sol.A, "B": sol.B, "x": sol.x, "y": sol.y, "parity": sol.parity, "tag": None, "case": None}
    if inst.plain and inst.c % 2 == 1:
        tag = association_tag(sol, inst)
        rec["tag"] = {"D": tag.D, "L": tag.L}
        rec["case"] = _case_record(detect_case(sol.A, sol.B, sol.z))
    return rec


def _case_record(case) -> dict:
    return {"kind": case.kind, "nu": case.nu, "partner": case.partner}


def _report_record(rep: V.VerificationReport) -> dict:
    return dataclasses.asdict(rep)


# subcommand handlers: each returns a list of records


def cmd_solve(args):
    inst = _load_instance(args)
    return [_solution_record(s, inst) for s in enumerate_general(inst)]


def cmd_invariants(args):
    inst = _load_instance(args)
    inv = invariants(inst)
    rec = dataclasses.asdict(inv)
    rec.update(c=inst.c, d=inst.d)
    return [rec]


def cmd_classify(args):
    inst = _load_instance(args)
    grouping = group_by_association(enumerate_general(inst), inst)
    out = []
    for tag, sols in grouping.tags.items():
        out.append({
            "tag": {"D": tag.D, "L": tag.L, "omega_c": tag.omega_c},
            "solutions": distinct_values(sols),
            "parity": sorted({s.parity for s in sols}),
        })
    return out


def cmd_orbits(args):
    inst = _load_instance(args)
    sols = enumerate_general(inst)
    grouping = group_by_association(sols, inst)
    out = []
    missing = False
    for tag, members in grouping.tags.items():
        rec = {"tag": {"D": tag.D, "L": tag.L}, "solutions": distinct_values(members), "seed": None, "predicted": []}
        try:
            seed = minimal_pair_power(tag, inst, args.j_max)
        except NotFound:
            missing = True
        else:
            rec["seed"] = seed
            rec["predicted"] = [predicted_solution(seed, t, inst.c) for t in range(1, inst.z_max // seed.j + 1)]
        out.append(rec)
    rep = verify_lemma1(inst, sols)
    out.append({
        "claim": "lemma1", "N": max(rep.multiplicity.values(), default=0), "bound": 2 if rep.doubled else 1,
        "ok": rep.ok, "witnesses": distinct_values(sols), "multiplicity": rep.multiplicity,
        "cases": rep.cases, "violations": rep.violations,
    })
    if missing:
        # records are still emitted; the exit code reports the depth limit
        args._resource_limit = True
    return out


def cmd_verify(args):
    claim = args.claim
    if claim == "corollary1":
        if None in (args.a, args.b, args.c):
            raise ValueError("corollary1 needs -a, -b and -c")
        return [_report_record(V.verify_corollary1(args.r, args.s, args.a, args.b, args.c, args.x_max, args.y_max, _depth(args, 12)))]
    if claim == "corollary2":
        if args.primes is None or args.c is None:
            raise ValueError("corollary2 needs --primes and -c")
        return [_report_record(V.verify_corollary2(_int_list(args.primes), args.c, _depth(args, 10)))]
    if claim == "sweep":
        z_max = _depth(args, 10)
        insts = V.sweep_instances(args.n, args.c_max, args.d_max, z_max)
        claims = ["theorem1", "pq_bound", "lemma1", "lemma2", "orbits"] + (["theorem2"] if args.n == 2 else [])
        reports = V.run_sweep(insts, claims, workers=args.workers)
        bad = [r for r in reports if not r.ok]
        out = [_report_record(r) for r in bad]
        out.append({"claim": "sweep", "n": args.n, "c_max": args.c_max, "d_max": args.d_max, "z_max": z_max,
                    "checks": len(reports), "N": len(bad), "bound": 0, "ok": not bad, "witnesses": []})
        return out
    inst = _load_instance(args)
    if claim == "pq":
        return [V.verify_pq(inst)]
    fn = {
        "theorem1": V.verify_theorem1, "pq_bound": V.verify_pq_bound, "theorem2": V.verify_theorem2,
        "lemma1": V.verify_lemma1_claim, "lemma2": V.verify_lemma2, "lemma3": V.verify_lemma3, "orbits": V.verify_orbits,
    }[claim]
    return [_report_record(fn(inst))]


def cmd_families(args):
    names = [args.family] if args.family else list(FAMILIES)
    out = []
    for name in names:
        ranges = {}
        for param, lo in FAMILIES[name]:
            text = getattr(args, param)
            ranges[param] = _int_range(text) if text else list(range(lo, lo + 5))
        for e in family_instances(name, **ranges):
            out.append({"family": e.family, "params": e.params, "d": e.d, "c": e.c,
                        "solutions": e.values(), "verified": e.verified})
    return out


def cmd_anomalous(args):
    return [{"d": e.d, "c": e.c, "solutions": e.values(), "verified": e.verified} for e in anomalous_catalog()]


def cmd_pair_transform(args):
    res = pair_transform(args.a, args.b, args.cc, args.q, args.rr, args.ss, args.t)
    return [dataclasses.asdict(res)]


def cmd_scan_mq(args):
    primes = _int_list(args.primes) if args.primes else [p for p in small_primes(37)]
    limit = None if args.large else args.digit_limit
    out = []
    for m in mersenne_quotient_scan(primes, args.t_max, limit):
        rec = dataclasses.asdict(m)
        if m.value is not None and m.digits > 60:
            rec["value"] = None  # keep lines short; digits and bits identify it
        out.append(rec)
    return out


def _instance_opts(p: argparse.ArgumentParser):
    p.add_argument("-c", type=int)
    p.add_argument("-d", help="comma-separated bases, e.g. 10,3")
    p.add_argument("--z-max", type=int, default=None, help="search depth (default 10; 12 for corollary1)")
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--s", type=int, default=1)
    p.add_argument("--instance", help="JSON file with c, d, z_max, r, s")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="powersum", description=__doc__.splitlines()[0])
    parser.add_argument("--cache-dir", default=None)
    parser.add_argument("--no-cache", action="store_true")
    # cache flags also work after the subcommand; SUPPRESS keeps the top-level value otherwise
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cache-dir", default=argparse.SUPPRESS)
    common.add_argument("--no-cache", action="store_true", default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True)
    _add = sub.add_parser
    sub.add_parser = lambda name, **kw: _add(name, parents=[common], **kw)

    for name, fn in (("solve", cmd_solve), ("invariants", cmd_invariants), ("classify", cmd_classify)):
        p = sub.add_parser(name)
        _instance_opts(p)
        p.set_defaults(fn=fn)

    p = sub.add_parser("orbits")
    _instance_opts(p)
    p.add_argument("--j-max", type=int, default=12)
    p.set_defaults(fn=cmd_orbits)

    p = sub.add_parser("verify")
    p.add_argument("claim", choices=["theorem1", "pq_bound", "theorem2", "lemma1", "lemma2", "lemma3", "orbits",
                                     "pq", "corollary1", "corollary2", "sweep"])
    _instance_opts(p)
    p.add_argument("-a", type=int)
    p.add_argument("-b", type=int)
    p.add_argument("--x-max", type=int, default=40)
    p.add_argument("--y-max", type=int, default=40)
    p.add_argument("--primes")
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--c-max", type=int, default=99)
    p.add_argument("--d-max", type=int, default=20)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("families")
    p.add_argument("--family", choices=sorted(FAMILIES))
    for param in ("k", "m", "r", "g"):
        p.add_argument(f"--{param}", help="range like 2-6 or list like 2,3,5")
    p.set_defaults(fn=cmd_families)

    p = sub.add_parser("anomalous")
    p.set_defaults(fn=cmd_anomalous)

    p = sub.add_parser("pair-transform")
    for name, dest in (("a", "a"), ("b", "b"), ("c", "cc"), ("q", "q"), ("r", "rr"), ("s", "ss"), ("t", "t")):
        p.add_argument(dest, type=int, metavar=name)
    p.set_defaults(fn=cmd_pair_transform)

    p = sub.add_parser("scan-mq")
    p.add_argument("--primes", help="comma-separated primes (default: all primes <= 37)")
    p.add_argument("--t-max", type=int, default=1)
    p.add_argument("--digit-limit", type=int, default=400)
    p.add_argument("--large", action="store_true", help="test every quotient regardless of size")
    p.set_defaults(fn=cmd_scan_mq)
    return parser


def _cache_key(args) -> str:
    payload = {k: v for k, v in sorted(vars(args).items()) if k not in ("fn", "cache_dir", "no_cache")}
    if getattr(args, "instance", None):
        payload["instance"] = Path(args.instance).read_text()
    blob = json.dumps([__version__, payload], sort_keys=True, default=str)
    return hashlib.sha256(blob.encode()).hexdigest()


def _cache_dir(args) -> Path | None:
    if args.no_cache:
        return None
    return Path(args.cache_dir or os.environ.get("POWERSUM_CACHE") or DEFAULT_CACHE)


def _write_atomic(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=".tmp-")
    with os.fdopen(fd, "w") as fh:
        fh.write(text)
    os.replace(tmp, path)


def _exit_code(records, args) -> int:
    if getattr(args, "_resource_limit", False):
        return EXIT_RESOURCE
    return EXIT_FAILED if any(r.get("ok") is False for r in records) else EXIT_OK


def run(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    cache = _cache_dir(args)
    try:
        key = _cache_key(args) if cache else None
        if cache and (cache / f"{key}.json").exists():
            hit = json.loads((cache / f"{key}.json").read_text())
            stdout.write(hit["output"])
            return hit["exit"]
        records = args.fn(args)
    except ResourceLimit as exc:
        print(dumps({"error": type(exc).__name__, "message": str(exc)}), file=sys.stderr)
        return EXIT_RESOURCE
    except (PowersumError, ValueError, OSError, KeyError) as exc:
        print(dumps({"error": type(exc).__name__, "message": str(exc)}), file=sys.stderr)
        return EXIT_USAGE
    text = "".join(dumps(r) + "\n" for r in records)
    code = _exit_code(records, args)
    stdout.write(text)
    if cache:
        _write_atomic(cache / f"{key}.json", json.dumps({"exit": code, "output": text}))
    return code


def main() -> None:
    sys.exit(run())

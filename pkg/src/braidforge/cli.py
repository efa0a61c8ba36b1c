"""Command-line front door: build, regenerate, verify, audit, export.

Subcommands: degen, regen, table, verify, relations, goldens.
JSON is the only interchange format; all runs are deterministic and emit a
RunManifest alongside requested artifacts.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time

from . import __version__
from .braid import Braid, artin_gen
from .data import golden_json, golden_names
from .degeneration import (build_tt, degree_audit, dt_notation, markers,
                           phi8, tilde_Cj, tilde_Delta2)
from .factorization import Factorization
from .lefschetz import golden_check
from .regeneration import (conic_identity, conic_tables, hv_diff,
                           hv_paper_factors, hv_table, regen_audit, regenerate)
from .verify import VerificationReport, check_full_twist, emit_relations


def _sha256(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()


class RunManifest:
    def __init__(self, command: str, seed: int = 0):
        self.data = {"command": command, "engine_version": __version__,
                     "seed": seed, "inputs": {}, "outputs": {},
                     "wall_time_s": None}
        self._t0 = time.time()

    def add_input(self, path: str, text: str):
        self.data["inputs"][path] = _sha256(text)

    def add_output(self, path: str, text: str):
        self.data["outputs"][path] = _sha256(text)

    def finish(self) -> dict:
        self.data["wall_time_s"] = round(time.time() - self._t0, 3)
        return self.data


def _write(path: str, text: str, manifest: RunManifest):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
    manifest.add_output(path, text)


def _emit_report(rep: VerificationReport, args, manifest: RunManifest) -> int:
    for line in rep.lines():
        print(line)
    if getattr(args, "report", None):
        payload = rep.to_json()
        payload["manifest"] = manifest.finish()
        _write(args.report, json.dumps(payload, indent=2, sort_keys=True), manifest)
    return 0 if rep.passed else 1


def cmd_degen(args) -> int:
    manifest = RunManifest("degen")
    g = build_tt()
    fz = phi8(g)
    rep = VerificationReport()
    if args.audit:
        c_total = sum(tilde_Cj(g, j).degree for j in range(1, 10))
        d_total = sum(tilde_Delta2(g, j).degree for j in range(1, 10))
        rep.totals = {"parasitic": c_total, "vertex": d_total,
                      "total": fz.degree}
        rep.add("parasitic degree == 432", c_total == 432,
                "" if c_total == 432 else f"got {c_total}")
        rep.add("vertex degree == 270", d_total == 270,
                "" if d_total == 270 else f"got {d_total}")
        rep.add("total degree == 702", fz.degree == 702,
                "" if fz.degree == 702 else f"got {fz.degree}")
        print(f"totals: parasitic {c_total}, vertex {d_total}, "
              f"total {fz.degree}")
    if args.identity:
        for c in check_full_twist(fz).checks:
            rep.checks.append(c)
    if args.out:
        _write(args.out, fz.dumps(), manifest)
    return _emit_report(rep, args, manifest)


def cmd_regen(args) -> int:
    manifest = RunManifest("regen")
    g = build_tt()
    if args.infile:
        with open(args.infile, encoding="utf-8") as fh:
            text = fh.read()
        manifest.add_input(args.infile, text)
        given = Factorization.loads(text)
        if given != phi8(g):
            print("input factorization differs from the engine's "
                  "degenerated factorization", file=sys.stderr)
            return 1
    fz = regenerate(g)
    rep = VerificationReport()
    if args.audit:
        a = regen_audit(fz)
        rep.totals = a | {"per_vertex": a["per_vertex"]}
        rep.add("total degree == 2862", a["total"] == 2862,
                "" if a["total"] == 2862 else f"got {a['total']}")
        rep.add("parasitic degree == 1728", a["parasitic"] == 1728,
                "" if a["parasitic"] == 1728 else f"got {a['parasitic']}")
        bad = {v: d for v, d in a["per_vertex"].items() if d != 126}
        rep.add("per-vertex degree == 126", not bad,
                "" if not bad else f"off: {bad}")
        print(f"totals: {a['total']} (parasitic {a['parasitic']}, "
              f"per-vertex {sorted(a['per_vertex'].values())})")
    if args.identity:
        for c in check_full_twist(fz).checks:
            rep.checks.append(c)
    if args.out:
        _write(args.out, fz.dumps(), manifest)
    return _emit_report(rep, args, manifest)


def cmd_table(args) -> int:
    manifest = RunManifest("table")
    obj = golden_json(f"tables/{args.name}.json")
    rep = VerificationReport()
    rows = golden_check(obj)
    bad = [d for d, ok in rows if not ok]
    for desc, ok in rows:
        print(f"{'ok  ' if ok else 'DIFF'} {desc}")
    rep.add(f"{len(rows)} rows match the transcription braid-by-braid",
            not bad, "" if not bad else f"mismatched: {bad}")
    return _emit_report(rep, args, manifest)


def cmd_verify(args) -> int:
    manifest = RunManifest("verify")
    with open(args.path, encoding="utf-8") as fh:
        text = fh.read()
    manifest.add_input(args.path, text)
    fz = Factorization.loads(text)
    rep = check_full_twist(fz)
    return _emit_report(rep, args, manifest)


def cmd_relations(args) -> int:
    manifest = RunManifest("relations")
    with open(args.path, encoding="utf-8") as fh:
        text = fh.read()
    manifest.add_input(args.path, text)
    fz = Factorization.loads(text)
    rels = emit_relations(fz)
    out = json.dumps(rels, indent=2)
    if args.out:
        _write(args.out, out, manifest)
    else:
        print(out)
    return 0


def cmd_goldens(args) -> int:
    manifest = RunManifest("goldens")
    rep = VerificationReport()
    g = build_tt()
    # parasitic factor lists, string-level
    dt = golden_json("dt_list.json")
    bad = [t for t in range(1, 28)
           if [p for p in range(1, t) if g.disjoint(p, t)] != dt[str(t)]["i"]
           or (dt[str(t)]["i"]
               and list(markers(g, t)) != dt[str(t)]["markers"])]
    rep.add("parasitic index sets and markers match transcription (27 lists)",
            not bad, "" if not bad else f"mismatched lines: {bad}")
    # local monodromy tables, braid-by-braid
    for name in golden_names("tables"):
        rows = golden_check(golden_json(f"tables/{name}.json"))
        bad = [d for d, ok in rows if not ok]
        rep.add(f"table {name}: {len(rows)} rows match", not bad,
                "" if not bad else f"mismatched: {bad}")
    # doubled local models
    for name, obj in conic_tables().items():
        ok = conic_identity(obj)
        rep.add(f"doubled local identity {name}", ok,
                "" if ok else "full-twist identity fails")
    # worked-vertex diffs (informational)
    eng = regenerate(g)
    for name in ("hv1", "hv4", "hv7"):
        obj = hv_table(name)
        diff = hv_diff(eng, obj["vertex"], hv_paper_factors(obj))
        status = "identical" if not diff else "; ".join(diff[:3])
        print(f"local monodromy V{obj['vertex']} diff: {status}")
    return _emit_report(rep, args, manifest)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="forge",
                                description="exact braid-monodromy engine")
    p.add_argument("--jobs", type=int, default=1,
                   help="parallel workers (advisory)")
    sub = p.add_subparsers(dest="command", required=True)

    d = sub.add_parser("degen", help="build the degenerated factorization")
    d.add_argument("target", choices=["phi8"])
    d.add_argument("--audit", action="store_true")
    d.add_argument("--identity", action="store_true",
                   help="also certify the full-twist product")
    d.add_argument("--out")
    d.add_argument("--report")
    d.set_defaults(fn=cmd_degen)

    r = sub.add_parser("regen", help="double the factorization (27 -> 54)")
    rs = r.add_subparsers(dest="subcommand", required=True)
    rr = rs.add_parser("run")
    rr.add_argument("--in", dest="infile")
    rr.add_argument("--out")
    rr.add_argument("--audit", action="store_true")
    rr.add_argument("--identity", action="store_true")
    rr.add_argument("--report")
    rr.set_defaults(fn=cmd_regen)

    t = sub.add_parser("table", help="print one local monodromy table")
    t.add_argument("name")
    t.add_argument("--report")
    t.set_defaults(fn=cmd_table)

    v = sub.add_parser("verify", help="certify a factorization file")
    v.add_argument("path")
    v.add_argument("--hurwitz-budget", type=int, default=10 ** 6)
    v.add_argument("--report")
    v.set_defaults(fn=cmd_verify)

    rel = sub.add_parser("relations", help="emit van Kampen relation templates")
    rel.add_argument("path")
    rel.add_argument("--out")
    rel.set_defaults(fn=cmd_relations)

    go = sub.add_parser("goldens", help="replay all transcribed goldens")
    go.add_argument("--report")
    go.set_defaults(fn=cmd_goldens)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())

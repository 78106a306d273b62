"""Command line front end: ``braidcleft <command> [config] [flags]``."""

from __future__ import annotations

import argparse
import json
import sys

from .braided import verify_braided_hopf
from .cleft import CleftExtension
from .comodalg import build_comodule_algebra, induced_kG_subalgebra, regular_comodule_algebra_data, validate_comodalg
from .config import ConfigError, WorkbenchConfig
from .cyclotomic import format_cyc
from .fixtures import fixture_reports, group_comodule_algebra_data
from .hd import HDAlgebra, dump_structure, verify_hd_extras
from .report import Report


class _Output:
    """Collects reports and tables, prints them in order."""

    def __init__(self):
        self.reports = []
        self.tables = {}

    def report(self, r):
        self.reports.append(r)
        print(r)
        print()

    def table(self, name, lines):
        self.tables[name] = lines
        print(f"{name}:")
        for line in lines:
            print("  " + line)
        print()

    @property
    def ok(self):
        return all(r.ok for r in self.reports)

    def to_json(self):
        data = {"ok": self.ok, "reports": [r.to_dict() for r in self.reports], "tables": self.tables}
        return json.dumps(data, indent=2, sort_keys=True)


def _build_hd(cfg, args, out):
    try:
        D = cfg.datum()
    except ConfigError:
        raise
    if D.group.order > args.max_group_order:
        r = Report("datum")
        r.add("group_order_within_bound", False, value=f"{D.group.order} > {args.max_group_order}")
        out.report(r)
        return None
    try:
        H = HDAlgebra(D)
    except ValueError as exc:
        r = Report("datum")
        r.add("datum_valid", False, witness=str(exc))
        out.report(r)
        return None
    H.max_group_order = args.max_group_order
    return H


def cmd_verify_hopf(cfg, args, out):
    H = _build_hd(cfg, args, out)
    if H is None:
        return
    r = Report(f"H_D of dimension {H.dim}")
    r.add("dimension", H.dim == H.n * H.group.order, value=str(H.dim))
    r.extend(verify_braided_hopf(H))
    r.extend(verify_hd_extras(H))
    r.info("aut_chi_z_order", value=str(len(H.auts)))
    out.report(r)


def cmd_dump(cfg, args, out):
    H = _build_hd(cfg, args, out)
    if H is None:
        return
    out.table("structure", dump_structure(H))


def _comodule_algebra(cfg, H, out):
    src = cfg.comodule_source()
    try:
        H.check_supported()
        if src == "regular":
            data = regular_comodule_algebra_data(H)
        elif src == "group_algebra":
            data = group_comodule_algebra_data(H)
        else:
            data = cfg.comodule_algebra_data(H)
    except ValueError as exc:
        r = Report("comodule algebra data")
        r.add("supported_parameters", False, witness=str(exc))
        out.report(r)
        return None, None
    return src, data


def cmd_comodalg(cfg, args, out):
    H = _build_hd(cfg, args, out)
    if H is None:
        return
    src, data = _comodule_algebra(cfg, H, out)
    if data is None:
        return
    r = validate_comodalg(H, data)
    r.title = f"comodule algebra data ({src})"
    out.report(r)
    if not r.ok:
        return
    ca, rb = build_comodule_algebra(H, data)
    out.report(rb)
    _, rs = induced_kG_subalgebra(ca)
    rs.info("coinvariants_dimension", value=str(len(ca.coinvariants())))
    out.report(rs)


def _labels_of(ca):
    return {ca.label_name(b): b for b in ca.B.basis}


def _map_table(H, C, f, keys, show_key):
    lines = []
    for key in keys:
        img = f.on_basis(key)
        terms = sorted(f"{format_cyc(v)} * {k[0]}" for k, v in img.items())
        lines.append(f"{show_key(key)} -> [{', '.join(terms)}]")
    return sorted(lines)


def cmd_cleft(cfg, args, out):
    H = _build_hd(cfg, args, out)
    if H is None:
        return
    src, data = _comodule_algebra(cfg, H, out)
    if data is None:
        return
    ca, rb = build_comodule_algebra(H, data, check=False)
    d = cfg.cleft_datum(H, _labels_of(ca))
    ext = CleftExtension(ca, d)
    r = ext.full_report(experimental=args.experimental_diagram_checks)
    out.report(r)
    if r.ok and ext.gamma_inverse() is not None:
        C = ext.C
        rho, _ = ext.weak_action()
        sigma, _ = ext.cocycle()
        basis_lines = [f"{lab} = {_fmt_vec(ca, v)}" for lab, v in C.vectors.items()]
        out.table("coinvariant basis", basis_lines)
        out.table("rho", _map_table(H, C, rho, [(h, c) for h in H.basis for c in C.labels],
                                    lambda k: f"({H.name_of(k[0])},{k[1]})"))
        out.table("sigma", _map_table(H, C, sigma, H.pairs(),
                                      lambda k: f"({H.name_of(k[0])},{H.name_of(k[1])})"))


def _fmt_vec(ca, v):
    terms = sorted(f"{format_cyc(c)} * {ca.label_name(k[0])}" for k, c in v.items())
    return "[" + ", ".join(terms) + "]"


def cmd_fixtures(cfg, args, out):
    for r in fixture_reports(args.max_group_order, args.experimental_diagram_checks):
        out.report(r)


COMMANDS = {
    "verify-hopf": cmd_verify_hopf,
    "dump-structure": cmd_dump,
    "verify-comodule-algebra": cmd_comodalg,
    "cleft": cmd_cleft,
    "fixtures": cmd_fixtures,
}


def build_parser():
    p = argparse.ArgumentParser(prog="braidcleft", description="Exact checks for rank-one braided Hopf algebras "
                                "H_D, their comodule algebras and cleft extensions.")
    p.add_argument("command", choices=sorted(COMMANDS))
    p.add_argument("config", nargs="?", help="config file (not used by 'fixtures')")
    p.add_argument("--machine-out", metavar="PATH", help="also write a JSON report to PATH")
    p.add_argument("--experimental-diagram-checks", action="store_true",
                   help="add direct transcriptions of the cocycle and twisted-module conditions")
    p.add_argument("--max-group-order", type=int, default=64, metavar="K",
                   help="refuse groups larger than K (default 64)")
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    cfg = None
    if args.command != "fixtures":
        if not args.config:
            print(f"error: '{args.command}' needs a config file", file=sys.stderr)
            return 2
        try:
            cfg = WorkbenchConfig.from_file(args.config)
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        except ConfigError as exc:
            print(f"{args.config}: {exc}", file=sys.stderr)
            return 2
    out = _Output()
    try:
        COMMANDS[args.command](cfg, args, out)
    except ConfigError as exc:
        print(f"{args.config}: {exc}", file=sys.stderr)
        return 2
    if args.machine_out:
        with open(args.machine_out, "w", encoding="utf-8") as fh:
            fh.write(out.to_json() + "\n")
    status = "PASS" if out.ok else "FAIL"
    print(f"{status}: {sum(len(r.failures()) for r in out.reports)} failing checks")
    return 0 if out.ok else 1


if __name__ == "__main__":
    sys.exit(main())

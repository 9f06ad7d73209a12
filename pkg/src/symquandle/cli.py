"""Command line front end.

Exit status: 0 success, 1 validation failure or table mismatch, 2 input
error, 3 search ceiling exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from .braided_surface import (
    BraidSystem,
    NonGenuineError,
    adequacy_necessary,
    apply_slides,
    component_count,
    euler_characteristic,
    family_bmpg,
    is_genuine,
    load_braid_system,
    plat_lower_bound,
)
from .coloring import DEFAULT_CEILING, ColoringCeilingError, coloring_count_for_system
from .presentation import PresentationError, plat_presentation, to_group_presentation
from .symmetric_quandle import (
    FiniteSymQuandle,
    InvalidQuandleError,
    dihedral,
    validate,
)

EXIT_OK, EXIT_INVALID, EXIT_INPUT, EXIT_CEILING = 0, 1, 2, 3


class InputError(Exception):
    pass


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _system(args) -> BraidSystem:
    if args.family is not None:
        m, p, g = args.family
        try:
            bs = family_bmpg(m, p, g)
        except ValueError as exc:
            raise InputError(str(exc))
    elif args.system:
        try:
            bs = load_braid_system(args.system)
        except (OSError, ValueError, KeyError, TypeError) as exc:
            raise InputError(f"cannot read braid system {args.system}: {exc}")
    else:
        raise InputError("give a braid system file or --family M P G")
    if bs.degree % 2:
        raise InputError("degree must be even")
    return bs


def _quandle(args) -> FiniteSymQuandle:
    if getattr(args, "dihedral", None) is not None:
        try:
            return dihedral(args.dihedral)
        except ValueError as exc:
            raise InputError(str(exc))
    if getattr(args, "quandle", None):
        return _load_quandle(args.quandle)
    return dihedral(3)


def _load_quandle(path: str) -> FiniteSymQuandle:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, ValueError) as exc:
        raise InputError(f"cannot read quandle {path}: {exc}")
    try:
        return FiniteSymQuandle.from_dict(data)
    except InvalidQuandleError as exc:
        raise InputError(f"invalid quandle {path}:\n{exc.report.summary()}")
    except (ValueError, KeyError, TypeError) as exc:
        raise InputError(f"malformed quandle {path}: {exc}")


def cmd_validate(args) -> int:
    try:
        with open(args.quandle_file) as fh:
            data = json.load(fh)
        report = validate(data["op"], data.get("rho"))
        if "size" in data and data["size"] != report.size:
            raise InputError(f"size {data['size']} disagrees with table of {report.size} rows")
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise InputError(f"cannot read quandle {args.quandle_file}: {exc}")
    lines = [f"order {report.size}"]
    for axiom, state in report.status.items():
        lines.append(f"{axiom:<11}{state}")
    for v in report.violations:
        lines.append(f"  {v}")
    lines.append("valid symmetric quandle" if report.ok else "INVALID")
    _emit(args, report.to_dict(), "\n".join(lines))
    return EXIT_OK if report.ok else EXIT_INVALID


def cmd_present(args) -> int:
    bs = _system(args)
    try:
        pres = plat_presentation(bs)
    except PresentationError as exc:
        raise InputError(str(exc))
    payload = pres.to_dict()
    head = f"{pres.num_generators} generators, {len(pres.relators)} relators"
    text = head + "\n" + pres.to_text()
    if args.group:
        grp = to_group_presentation(pres)
        payload["group"] = grp
        text = grp
    _emit(args, payload, text)
    return EXIT_OK


def cmd_color(args) -> int:
    bs = _system(args)
    X = _quandle(args)
    count = coloring_count_for_system(bs, X, ceiling=args.ceiling)
    bound = plat_lower_bound(count, X.size) if X.size >= 2 else None
    payload = {"count": count, "quandle_order": X.size, "plat_lower_bound": bound,
               "degree": bs.degree}
    text = f"count {count}\nquandle order {X.size}\nplat index lower bound {bound if bound is not None else 'n/a'}"
    _emit(args, payload, text)
    return EXIT_OK


def _invariants(bs: BraidSystem) -> dict:
    genuine = is_genuine(bs)
    out = {
        "degree": bs.degree,
        "entries": len(bs),
        "boundary_braid_trivial": genuine,
        "adequacy_necessary_condition": adequacy_necessary(bs),
        "euler_characteristic": euler_characteristic(bs),
        "components": None,
        "genus_assuming_orientable": None,
    }
    if genuine:
        comps = component_count(bs)
        out["components"] = comps
        if comps == 1:
            chi = out["euler_characteristic"]
            if chi <= 2 and chi % 2 == 0:
                out["genus_assuming_orientable"] = (2 - chi) // 2
    return out


def cmd_invariants(args) -> int:
    bs = _system(args)
    inv = _invariants(bs)
    comps = inv["components"]
    genus = inv["genus_assuming_orientable"]
    lines = [
        f"degree {inv['degree']}",
        f"entries {inv['entries']}",
        f"boundary braid trivial {'yes' if inv['boundary_braid_trivial'] else 'no'}",
        f"adequacy necessary condition {'holds' if inv['adequacy_necessary_condition'] else 'fails'}"
        " (necessary only; adequacy is not decided)",
        f"chi = {inv['euler_characteristic']}",
        f"components {comps if comps is not None else 'n/a (non-genuine)'}",
    ]
    if genus is not None:
        lines.append(f"genus {genus} (assuming orientable)")
    _emit(args, inv, "\n".join(lines))
    return EXIT_OK


def expected_count(m: int, p: int, q: int) -> int:
    return q**m if p == q else q


def cmd_table(args) -> int:
    rows = []
    mismatch = False
    for m in args.m:
        for p in args.p:
            bs = family_bmpg(m, p, 0)
            for q in args.q:
                count = coloring_count_for_system(bs, dihedral(q), ceiling=args.ceiling)
                exp = expected_count(m, p, q)
                rows.append({"m": m, "p": p, "q": q, "count": count, "expected": exp,
                             "match": count == exp})
                mismatch |= count != exp
    lines = [f"{'m':>3} {'p':>3} {'q':>3} {'count':>8} {'expected':>9}"]
    for r in rows:
        flag = "" if r["match"] else "  MISMATCH"
        lines.append(f"{r['m']:>3} {r['p']:>3} {r['q']:>3} {r['count']:>8} {r['expected']:>9}{flag}")
    _emit(args, {"rows": rows}, "\n".join(lines))
    return EXIT_INVALID if mismatch else EXIT_OK


def cmd_slide(args) -> int:
    bs = _system(args)
    try:
        moves = [int(t) for t in args.moves.replace(",", " ").split()]
        out = apply_slides(bs, moves)
    except (ValueError, IndexError) as exc:
        raise InputError(f"bad move list: {exc}")
    X = _quandle(args)
    before = coloring_count_for_system(bs, X, ceiling=args.ceiling)
    after = coloring_count_for_system(out, X, ceiling=args.ceiling)
    summary = {
        "moves": moves,
        "chi_before": euler_characteristic(bs),
        "chi_after": euler_characteristic(out),
        "count_before": before,
        "count_after": after,
        "quandle_order": X.size,
        "invariant": before == after and euler_characteristic(bs) == euler_characteristic(out),
    }
    if args.output:
        with open(args.output, "w") as fh:
            json.dump(out.to_dict(), fh)
        _emit(args, {"summary": summary, "system": out.to_dict()},
              f"wrote {args.output}\n" + _slide_text(summary))
    else:
        print(json.dumps(out.to_dict()))
        print(_slide_text(summary), file=sys.stderr)
    return EXIT_OK


def _slide_text(s: dict) -> str:
    return (f"chi {s['chi_before']} -> {s['chi_after']}\n"
            f"colorings (order {s['quandle_order']}) {s['count_before']} -> {s['count_after']}")


def _add_system_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("system", nargs="?", help="braid system JSON file")
    p.add_argument("--family", nargs=3, type=int, metavar=("M", "P", "G"),
                   help="use the family b(m,p,g) instead of a file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="symquandle", description=__doc__.splitlines()[0])
    parser.add_argument("--json", action="store_true", help="machine readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
        p.set_defaults(func=func)
        return p

    p = add("validate", cmd_validate, "check the symmetric quandle axioms of a table")
    p.add_argument("quandle_file")

    p = add("present", cmd_present, "print the plat presentation")
    _add_system_args(p)
    p.add_argument("--group", action="store_true", help="print the group presentation instead")

    for name, func, hlp in (("color", cmd_color, "count colorings"),
                            ("slide", cmd_slide, "apply slide moves")):
        p = add(name, func, hlp)
        _add_system_args(p)
        grp = p.add_mutually_exclusive_group()
        grp.add_argument("--quandle", help="quandle JSON file")
        grp.add_argument("--dihedral", type=int, metavar="Q")
        p.add_argument("--ceiling", type=int, default=DEFAULT_CEILING)
        if name == "slide":
            p.add_argument("--moves", default="", help='signed positions, e.g. "1 -2"')
            p.add_argument("--output", "-o")

    p = add("invariants", cmd_invariants, "Euler characteristic, components and related data")
    _add_system_args(p)

    p = add("table", cmd_table, "coloring numbers of F(m,p) by dihedral quandles")
    p.add_argument("--m", nargs="+", type=int, default=[2, 3])
    p.add_argument("--p", nargs="+", type=int, default=[3, 5, 7])
    p.add_argument("--q", nargs="+", type=int, default=[3, 5, 7])
    p.add_argument("--ceiling", type=int, default=DEFAULT_CEILING)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ColoringCeilingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CEILING
    except NonGenuineError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

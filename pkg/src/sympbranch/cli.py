"""Command line interface.

Subcommands mirror the library: factor sets, factor posets (text, JSON,
or DOT), Weyl socles, branching multisets, restriction structure,
dimension tables, inductive-system checks, the grid selftest, and a file
report combining Hasse-diagram figures with a CSV dimension table.

Exit codes: 0 on success, 2 on usage errors (including a composite p or
an out-of-range index), 1 when the selftest finds a counterexample.
"""

from __future__ import annotations

import argparse
import json
import sys

from .branching import branch_omega, branch_pi, restriction_structure
from .dims import dims_table
from .inductive import (
    FamilySpec,
    first_closure_failure,
    r_catalogue,
    verify_family,
)
from .padic import Prime
from .selftest import run_selftest
from .weyl import FactorPoset, socle_factor, tuple_of_factor


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def _pi_str(m: int) -> str:
    return f"π_{m}"


def _factors_header(n: int, l: int, poset: FactorPoset) -> str:
    listing = ", ".join(_pi_str(m) for m in poset.factors)
    return f"V_{l}^{n}: {listing}"


def cmd_factors(args, parser) -> int:
    poset = FactorPoset(args.n, args.l, args.p)
    if args.format == "json":
        _emit(
            {
                "p": int(poset.p),
                "n": args.n,
                "l": args.l,
                "factors": list(poset.factors),
            }
        )
    else:
        print(_factors_header(args.n, args.l, poset))
    return 0


def cmd_poset(args, parser) -> int:
    poset = FactorPoset(args.n, args.l, args.p)
    covers = poset.covers()
    if args.format == "json":
        _emit(
            {
                "p": int(poset.p),
                "n": args.n,
                "l": args.l,
                "factors": list(poset.factors),
                "socle": poset.minimum(),
                "covers": [[lo, hi] for lo, hi in covers],
                "submodules": poset.submodule_count(),
            }
        )
        return 0
    if args.format == "dot":
        lines = ["digraph factor_poset {", "  rankdir=BT;"]
        for m in poset.factors:
            omega = poset.n + 1 - m
            lines.append(
                f'  "pi_{m}" [label="π_{m} = ω_{omega}"];'
            )
        for lo, hi in covers:
            lines.append(f'  "pi_{lo}" -> "pi_{hi}";')
        lines.append("}")
        print("\n".join(lines))
        return 0
    print(_factors_header(args.n, args.l, poset) + f" (p={int(poset.p)})")
    print(f"socle: {_pi_str(poset.minimum())}")
    if covers:
        print("covers:")
        for lo, hi in covers:
            print(f"  {_pi_str(lo)} < {_pi_str(hi)}")
    print(f"submodules: {poset.submodule_count()}")
    return 0


def cmd_socle_weyl(args, parser) -> int:
    soc = socle_factor(args.n, args.l, args.p)
    sig = tuple_of_factor(soc, args.l, args.p)
    if args.format == "json":
        _emit(
            {
                "p": int(Prime(args.p)),
                "n": args.n,
                "l": args.l,
                "socle": soc,
                "tuple": list(sig.lambdas),
            }
        )
    else:
        print(f"socle of V_{args.l}^{args.n}: {_pi_str(soc)} (tuple {sig})")
    return 0


def _branch_multiset(args):
    if args.coords == "pi":
        return branch_pi(args.n, args.i, args.p), f"π_{args.i}^{args.n}"
    return branch_omega(args.n, args.i, args.p), f"ω_{args.i}^{args.n}"


def cmd_branch(args, parser) -> int:
    multiset, name = _branch_multiset(args)
    if args.format == "json":
        _emit(
            {
                "p": int(Prime(args.p)),
                "n": args.n,
                "i": args.i,
                "coords": args.coords,
                "restriction": multiset.json_obj(),
            }
        )
    else:
        print(f"res {name} (p={int(Prime(args.p))}): {multiset}")
    return 0


def cmd_socle_branch(args, parser) -> int:
    if args.coords == "pi":
        if not 1 <= args.i <= args.n + 1:
            raise ValueError(
                f"pi-index must lie in [1, {args.n + 1}], got {args.i}"
            )
        i_omega = args.n + 1 - args.i
        name = f"π_{args.i}^{args.n}"
    else:
        i_omega = args.i
        name = f"ω_{args.i}^{args.n}"
    rs = restriction_structure(args.n, i_omega, args.p)
    convert = (lambda ms: ms) if args.coords == "pi" else (lambda ms: ms.to_omega())
    if args.format == "json":
        _emit(
            {
                "p": int(rs.p),
                "n": args.n,
                "i": args.i,
                "coords": args.coords,
                "split": convert(rs.split).json_obj(),
                "layers": [convert(layer).json_obj() for layer in rs.layers],
                "completely_reducible": rs.is_completely_reducible,
                "d_submodules": rs.d_submodule_count,
            }
        )
        return 0
    print(f"res {name} (p={int(rs.p)})")
    print(f"split: {convert(rs.split)}")
    if rs.layers:
        print("layers of D (socle first):")
        for depth, layer in enumerate(rs.layers, start=1):
            print(f"  {depth}: {convert(layer)}")
    else:
        print("D = 0")
    print(f"completely reducible: {'yes' if rs.is_completely_reducible else 'no'}")
    print(f"submodules of D: {rs.d_submodule_count}")
    return 0


def cmd_dims(args, parser) -> int:
    rows = dims_table(args.n, args.p)
    if args.i is not None:
        if not 0 <= args.i <= args.n:
            raise ValueError(
                f"omega-index must lie in [0, {args.n}], got {args.i}"
            )
        rows = [rows[args.i]]
    if args.format == "json":
        _emit({"p": int(Prime(args.p)), "n": args.n, "rows": rows})
        return 0
    header = ("i_omega", "i_pi", "weyl_dim", "irr_dim")
    widths = [
        max(len(header[c]), *(len(str(row[header[c]])) for row in rows))
        for c in range(4)
    ]
    print("  ".join(h.ljust(w) for h, w in zip(header, widths)))
    for row in rows:
        print("  ".join(str(row[h]).ljust(w) for h, w in zip(header, widths)))
    return 0


def cmd_inductive(args, parser) -> int:
    p = Prime(args.p)
    if args.kind is None and args.u is None and args.s is None:
        widths = r_catalogue(p, args.n_max)
        if args.format == "json":
            _emit({"p": int(p), "n_max": args.n_max, "r_widths": widths})
        else:
            listing = ", ".join(str(u) for u in widths) if widths else "none"
            print(
                f"inductive final-segment widths for p={int(p)} "
                f"up to {args.n_max}: {listing}"
            )
        return 0
    kind = args.kind
    if kind is None:
        kind = "R" if args.s is None else ("LR" if args.u is not None else "L")
    spec = FamilySpec(
        kind,
        s=args.s if kind in ("L", "LR") else None,
        u=args.u if kind in ("R", "LR") else None,
    )
    ok = verify_family(spec, p, args.n_max)
    bad = None if ok else first_closure_failure(spec, p, args.n_max)
    if args.format == "json":
        _emit(
            {
                "p": int(p),
                "family": str(spec),
                "n_max": args.n_max,
                "inductive": ok,
                "first_failure_rank": bad,
            }
        )
    elif ok:
        print(
            f"{spec} is an inductive system for p={int(p)} "
            f"(checked to rank {args.n_max})"
        )
    else:
        print(
            f"{spec} is not an inductive system for p={int(p)}: "
            f"closure fails from rank {bad} to rank {bad - 1}"
        )
    return 0


def cmd_selftest(args, parser) -> int:
    failures = run_selftest(p_max=args.p_max, n_max=args.n_max)
    if failures:
        print(f"selftest FAILED: {failures[0]}")
        return 1
    print("selftest passed")
    return 0


def cmd_report(args, parser) -> int:
    from .report import run_report

    written = run_report(args.p, args.n, args.outdir, l=args.l)
    for path in written:
        print(path)
    return 0


def _add_common(sub, *, l_flag=False, i_flag=False, coords=False) -> None:
    sub.add_argument("--p", type=int, required=True, help="prime characteristic")
    sub.add_argument("--n", type=int, required=True, help="rank")
    if l_flag:
        sub.add_argument(
            "--l", type=int, required=True, help="pi-index of the Weyl module top"
        )
    if i_flag:
        sub.add_argument(
            "--i", type=int, required=True, help="index of the simple module"
        )
    if coords:
        sub.add_argument(
            "--coords",
            choices=("omega", "pi"),
            default="omega",
            help="coordinate convention for --i and for output",
        )


def _add_format(sub, *choices) -> None:
    sub.add_argument(
        "--format", choices=choices, default="text", help="output format"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sympbranch",
        description=(
            "Modular representation combinatorics of symplectic groups: "
            "Weyl module factors, submodule posets, branching to the rank "
            "below, exact dimensions, inductive systems."
        ),
    )
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("factors", help="composition factors of a Weyl module")
    _add_common(sub, l_flag=True)
    _add_format(sub, "text", "json")
    sub.set_defaults(func=cmd_factors)

    sub = subs.add_parser("poset", help="submodule poset of a Weyl module")
    _add_common(sub, l_flag=True)
    _add_format(sub, "text", "json", "dot")
    sub.set_defaults(func=cmd_poset)

    sub = subs.add_parser("socle-weyl", help="socle of a Weyl module")
    _add_common(sub, l_flag=True)
    _add_format(sub, "text", "json")
    sub.set_defaults(func=cmd_socle_weyl)

    sub = subs.add_parser("branch", help="restriction of a simple module")
    _add_common(sub, i_flag=True, coords=True)
    _add_format(sub, "text", "json")
    sub.set_defaults(func=cmd_branch)

    sub = subs.add_parser(
        "socle-branch", help="layer structure of a restricted simple module"
    )
    _add_common(sub, i_flag=True, coords=True)
    _add_format(sub, "text", "json")
    sub.set_defaults(func=cmd_socle_branch)

    sub = subs.add_parser("dims", help="Weyl and simple dimensions at a rank")
    _add_common(sub)
    sub.add_argument("--i", type=int, default=None, help="restrict to one omega-index")
    _add_format(sub, "text", "json")
    sub.set_defaults(func=cmd_dims)

    sub = subs.add_parser("inductive", help="check or list inductive systems")
    sub.add_argument("--p", type=int, required=True, help="prime characteristic")
    sub.add_argument(
        "--n-max", type=int, default=30, help="largest rank to check (default 30)"
    )
    sub.add_argument("--kind", choices=("F", "L", "R", "LR"), default=None)
    sub.add_argument("--s", type=int, default=None, help="initial-segment cut")
    sub.add_argument("--u", type=int, default=None, help="final-segment width")
    _add_format(sub, "text", "json")
    sub.set_defaults(func=cmd_inductive)

    sub = subs.add_parser("selftest", help="sweep internal cross-checks over a grid")
    sub.add_argument(
        "--p-max", type=int, default=None, help="largest prime (default: env or 7)"
    )
    sub.add_argument(
        "--n-max", type=int, default=None, help="largest rank (default: env or 60)"
    )
    sub.set_defaults(func=cmd_selftest)

    sub = subs.add_parser(
        "report", help="write Hasse figures and a dims CSV to a directory"
    )
    _add_common(sub)
    sub.add_argument("--l", type=int, default=None, help="single Weyl module only")
    sub.add_argument("--outdir", required=True, help="output directory")
    sub.set_defaults(func=cmd_report)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, parser)
    except ValueError as exc:
        parser.error(str(exc))
        return 2


if __name__ == "__main__":
    sys.exit(main())

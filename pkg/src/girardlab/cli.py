"""Command surface tying the engines together.

Exit codes: 0 all checks passed, 1 some law failed, 2 input error.
"""
from __future__ import annotations

import argparse
import sys

import numpy as np

from . import structfile
from .girard import (
    check_boolean_idempotent_criterion,
    check_dualizer_join_formula,
    check_unit_downset_boolean,
    find_cyclic_dualizing,
    girard_equivalences,
    is_cyclic,
    is_dualizing,
)
from .orders import (
    NotALattice,
    NotBounded,
    OrderError,
    PosetViolation,
    check_inversion,
    compute_lattice,
    is_boolean,
    is_complemented,
    is_distributive,
)
from .ortho import NotOrthomodularInput, OrthoLattice, blocks, check_ortholattice, check_orthomodular
from .render import exit_code, export_dot, render_report
from .reports import law_fail, law_pass
from .residuation import (
    ResiduationError,
    boolean_residuation,
    check_associative,
    classify,
    derive_residua,
    godel_chain,
    lukasiewicz_chain,
    residuated_structure,
)
from .search import BoundExceeded, confirm_boolean_forcing, enumerate_lattices, \
    search_integral_residuation, search_unital_residuation
from .structfile import StructError, build_lattice, build_ortholattice, build_poset, from_lattice, \
    load, serialize
from .subspaces import (
    DimensionMismatch,
    QuantaleContext,
    join,
    meet,
    mul,
    ortho,
    residuum,
    span,
    verify_quantale_laws,
)


def _build_order(sf):
    """Lattice when the order admits one, otherwise the bare poset."""
    poset = structfile.build_poset(sf)
    try:
        return compute_lattice(poset)
    except (NotALattice, NotBounded):
        return poset


def _print_table(name, table, labels):
    print(f"{name}:")
    width = max(len(x) for x in labels)
    header = " " * (width + 2) + " ".join(f"{x:>{width}}" for x in labels)
    print(header)
    for i, row in enumerate(np.asarray(table)):
        cells = " ".join(f"{labels[v]:>{width}}" for v in row)
        print(f"  {labels[i]:>{width}} {cells}")


def _labels(obj):
    return [obj.label(i) for i in range(obj.n)]


def cmd_verify(args) -> int:
    sf = load(args.file)
    sections = []
    order_reports = []
    info = []
    try:
        poset = structfile.build_poset(sf)
        order_reports.append(law_pass("poset-axioms"))
    except PosetViolation as exc:
        order_reports.append(law_fail("poset-axioms", exc.witness, exc.axiom))
        sections.append(("order", order_reports))
        print(render_report(sections, args.format), end="")
        return exit_code(sections)
    lattice = None
    try:
        lattice = compute_lattice(poset)
        order_reports.append(law_pass("lattice-structure"))
    except (NotALattice, NotBounded) as exc:
        order_reports.append(law_fail("lattice-structure", exc.witness, str(exc)))
    sections.append(("order", order_reports))

    if lattice is not None:
        info.append(f"distributive: {is_distributive(lattice).passed}")
        comp, _ = is_complemented(lattice)
        info.append(f"complemented: {comp.passed}")
        info.append(f"boolean: {is_boolean(lattice).passed}")

    if sf.ortho is not None:
        reports = [check_inversion(poset, sf.ortho)]
        sections.append(("inversion", reports))
        if lattice is not None and reports[0].passed:
            olat = OrthoLattice(lattice, sf.ortho)
            ortho_ok = check_ortholattice(lattice, sf.ortho).passed
            info.append(f"ortholattice: {ortho_ok}")
            if ortho_ok:
                omod = all(r.passed for r in check_orthomodular(olat))
                info.append(f"orthomodular: {omod}")

    if sf.mul is not None:
        order = lattice if lattice is not None else poset
        m = np.array(sf.mul, dtype=np.intp)
        reports = [check_associative(m)]
        if reports[0].passed:
            try:
                derive_residua(order, m)
                reports.append(law_pass("residuation"))
            except ResiduationError as exc:
                reports.append(law_fail("residuation", exc.witness, str(exc)))
            flags = classify(order, m)
            info.append(f"flags: {flags}")
            if sf.unit is not None:
                ok = flags.unit == sf.unit
                reports.append(
                    law_pass("declared-unit") if ok
                    else law_fail("declared-unit", (sf.unit,), f"actual unit is {flags.unit}")
                )
            if sf.dualizing is not None and reports[1].passed:
                s = residuated_structure(order, m)
                cyc = is_cyclic(s, sf.dualizing)
                dua = is_dualizing(s, sf.dualizing)
                reports.append(cyc if cyc.failed else law_pass("declared-dualizer-cyclic"))
                reports.append(dua if dua.failed else law_pass("declared-dualizer-dualizing"))
        sections.append(("multiplication", reports))

    print(render_report(sections, args.format), end="")
    if info and args.format == "human":
        print("classification:")
        for line in info:
            print(f"  {line}")
    return exit_code(sections)


def cmd_residuate(args) -> int:
    sf = load(args.file)
    order = _build_order(sf)
    if sf.mul is None:
        raise StructError("file has no mul section")
    m = np.array(sf.mul, dtype=np.intp)
    assoc = check_associative(m)
    if assoc.failed:
        print(render_report([("multiplication", [assoc])], "human"), end="")
        return 1
    try:
        rres, lres = derive_residua(order, m)
    except ResiduationError as exc:
        rep = law_fail("residuation", exc.witness, str(exc))
        print(render_report([("multiplication", [rep])], "human"), end="")
        return 1
    labels = _labels(order)
    _print_table("right residuum (row -> col)", rres, labels)
    _print_table("left residuum (row <- col)", lres, labels)
    print(f"flags: {classify(order, m)}")
    return 0


def cmd_girard(args) -> int:
    sf = load(args.file)
    order = _build_order(sf)
    if sf.mul is None:
        raise StructError("girard analysis needs a mul section")
    s = residuated_structure(order, np.array(sf.mul, dtype=np.intp))
    labels = _labels(order)
    certs = find_cyclic_dualizing(s)
    if certs:
        for c in certs:
            neg = " ".join(f"{labels[x]}->{labels[c.neg[x]]}" for x in range(s.n))
            print(f"cyclic dualizing element d={labels[c.d]}  unit e={labels[c.e]}  negation: {neg}")
    else:
        print("no cyclic dualizing element")
    inversion = None
    if args.inversion:
        inversion = tuple(int(x) for x in args.inversion.split(","))
    reports = []
    try:
        eq = girard_equivalences(s, inversion=inversion)
        reports.append(eq.agreement)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    for c in certs:
        reports.append(check_dualizer_join_formula(s, c))
    reports.append(check_boolean_idempotent_criterion(s))
    if sf.ortho is not None and s.lattice is not None:
        olat = OrthoLattice(s.lattice, sf.ortho)
        reports.append(check_unit_downset_boolean(olat, s))
    sections = [("girard", reports)]
    print(render_report(sections, "human"), end="")
    return exit_code(sections)


def cmd_blocks(args) -> int:
    sf = load(args.file)
    olat = build_ortholattice(sf)
    for block in blocks(olat):
        print(" ".join(olat.label(i) for i in block))
    return 0


def cmd_enumerate(args) -> int:
    filters = ("complemented",) if args.complemented else ()
    result = enumerate_lattices(args.max_n, filters)
    for size in sorted(result.counts):
        print(f"n={size}: {result.counts[size]}")
    print(f"total: {len(result.lattices)}" + (f" (filters: {', '.join(filters)})" if filters else ""))
    if args.confirm_thm2:
        report = confirm_boolean_forcing(args.max_n)
        sections = [("search", [report])]
        print(render_report(sections, "human"), end="")
        return exit_code(sections)
    return 0


def cmd_search_residuation(args) -> int:
    sf = load(args.file)
    if args.mode == "integral":
        result = search_integral_residuation(build_lattice(sf))
    else:
        result = search_unital_residuation(build_ortholattice(sf), budget=args.budget)
    print(f"mode={result.mode} found={len(result.found)} exhausted={result.exhausted} "
          f"nodes={result.nodes}")
    lattice = build_lattice(sf)
    for k, (table, s) in enumerate(zip(result.found, result.structures)):
        out = from_lattice(lattice, ortho=sf.ortho, mul=table, unit=s.flags.unit)
        print(f"# solution {k}")
        print(serialize(out))
    if result.downset_unit_reports:
        sections = [("unit-downset", result.downset_unit_reports)]
        print(render_report(sections, "human"), end="")
        return exit_code(sections)
    return 0


def cmd_rn(args) -> int:
    ctx = QuantaleContext(args.dim, tau_rank=args.tol_rank, tau_eq=args.tol_eq)
    reports = verify_quantale_laws(ctx, args.trials, args.seed)
    sections = [(f"subspace-quantale dim={args.dim}", reports)]
    print(render_report(sections, args.format), end="")
    return exit_code(sections)


def _parse_vectors(text: str, n: int, ctx: QuantaleContext):
    if not text:
        return span(ctx, [])
    vectors = []
    for part in text.split(";"):
        part = part.strip()
        if not part:
            continue
        vectors.append([float(x) for x in part.split(",")])
    return span(ctx, vectors)


def cmd_rn_op(args) -> int:
    ctx = QuantaleContext(args.dim)
    a = _parse_vectors(args.a, args.dim, ctx)
    ops = {"mul": mul, "meet": meet, "join": join, "residuum": residuum}
    if args.op == "ortho":
        result = ortho(ctx, a)
    else:
        if args.b is None:
            raise DimensionMismatch(f"op {args.op} needs --b")
        b = _parse_vectors(args.b, args.dim, ctx)
        result = ops[args.op](ctx, a, b)
    print(f"dim: {result.dim}")
    for row in result.basis.T:
        print(";".join(f"{x:.12g}" for x in row))
    return 0


def cmd_gen(args) -> int:
    if args.family == "lukasiewicz":
        s = lukasiewicz_chain(args.size)
        flip = tuple(range(s.n - 1, -1, -1))
        sf = from_lattice(s.lattice, ortho=flip, mul=s.mul, unit=s.n - 1, dualizing=0)
    elif args.family == "godel":
        s = godel_chain(args.size)
        sf = from_lattice(s.lattice, mul=s.mul, unit=s.n - 1)
    else:
        from .catalog import boolean_ortho

        o = boolean_ortho(args.atoms)
        s = boolean_residuation(o.lattice)
        sf = from_lattice(o.lattice, ortho=o.ortho, mul=s.mul,
                          unit=o.lattice.top, dualizing=o.lattice.bottom)
    print(serialize(sf), end="")
    return 0


def cmd_export_dot(args) -> int:
    sf = load(args.file)
    print(export_dot(build_poset(sf)), end="")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="girardlab",
                                     description="finite residuated/ortholattice structure toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check every law declared by a structure file")
    p.add_argument("file")
    p.add_argument("--format", choices=("human", "machine"), default="human")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("residuate", help="derive residua tables and classify")
    p.add_argument("file")
    p.set_defaults(func=cmd_residuate)

    p = sub.add_parser("girard", help="certificates, recognition agreement, propositions")
    p.add_argument("file")
    p.add_argument("--inversion", help="comma-separated candidate inversion, e.g. 2,1,0")
    p.set_defaults(func=cmd_girard)

    p = sub.add_parser("blocks", help="maximal Boolean subalgebras, one per line")
    p.add_argument("file")
    p.set_defaults(func=cmd_blocks)

    p = sub.add_parser("enumerate", help="enumerate small lattices up to isomorphism")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--complemented", action="store_true")
    p.add_argument("--confirm-thm2", action="store_true",
                   help="verify integral residuation exists iff Boolean, per complemented lattice")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("search-residuation", help="exhaustive/budgeted multiplication search")
    p.add_argument("file")
    p.add_argument("--mode", choices=("integral", "unital"), required=True)
    p.add_argument("--budget", type=int, default=200_000)
    p.set_defaults(func=cmd_search_residuation)

    p = sub.add_parser("rn", help="verify the subspace-quantale laws of R^n on random trials")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol-rank", type=float, default=1e-9)
    p.add_argument("--tol-eq", type=float, default=None)
    p.add_argument("--format", choices=("human", "machine"), default="human")
    p.set_defaults(func=cmd_rn)

    p = sub.add_parser("rn-op", help="evaluate one subspace operation")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--op", choices=("mul", "meet", "join", "ortho", "residuum"), required=True)
    p.add_argument("--a", required=True, help="vectors, semicolon-separated comma lists")
    p.add_argument("--b", help="second operand, same syntax")
    p.set_defaults(func=cmd_rn_op)

    p = sub.add_parser("gen", help="emit a structure file for a standard family")
    gen_sub = p.add_subparsers(dest="family", required=True)
    g = gen_sub.add_parser("lukasiewicz")
    g.add_argument("--size", type=int, required=True)
    g.set_defaults(func=cmd_gen)
    g = gen_sub.add_parser("godel")
    g.add_argument("--size", type=int, required=True)
    g.set_defaults(func=cmd_gen)
    g = gen_sub.add_parser("boolean")
    g.add_argument("--atoms", type=int, required=True)
    g.set_defaults(func=cmd_gen)

    p = sub.add_parser("export-dot", help="Hasse diagram as DOT")
    p.add_argument("file")
    p.set_defaults(func=cmd_export_dot)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (StructError, OSError, OrderError, NotOrthomodularInput, DimensionMismatch,
            ResiduationError, BoundExceeded, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Command line interface: ``lpk <subcommand> ...``.

Exit codes: 0 success, 1 a requested check failed, 2 unusable input,
3 a result contradicting a proven statement (a bug).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .errors import InternalError, LpkError
from .families import FAMILY_NAMES, FamilySpec, family
from .homology import (
    betti_table, codim, h_polynomial, hilbert_function, hilbert_numerator, linear_resolution,
)
from .letterplace import (
    coletterplace, letterplace, letterplace_ideal, linear_quotients_certificate,
)
from .monomial import (
    DUAL_METHODS, MonomialIdeal, alexander_dual, export, parse_ideal, transpose,
)
from .poset import (
    Poset, chain, downset, full_ideal, hom_poset, pair_label, parse_poset, poset_from_json, product,
    split_pair,
)
from .quotient import (
    FiberedMap, classify_fibers, is_regular_sequence, kernel_basis, parse_pairs_json, quotient_ideal,
    separations,
)
from .suite import DEFAULT_SEED, format_report, run_suite

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_BUG = 0, 1, 2, 3


class InputError(Exception):
    """Unusable command-line input; reported with exit code 2."""


# -- input helpers ---------------------------------------------------------------------


def _read_ideal(path: str) -> MonomialIdeal:
    try:
        text = sys.stdin.read() if path == "-" else open(path).read()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    try:
        return parse_ideal(text)
    except LpkError as exc:
        raise InputError(f"{path}: {exc}") from None


def _poset(expr: str) -> Poset:
    try:
        return parse_poset(expr)
    except (LpkError, OSError, KeyError, json.JSONDecodeError) as exc:
        raise InputError(f"--poset {expr!r}: {exc}") from None


def _map_gens(h, text: str | None):
    """Maps given as ``"1,2;2,2"`` (values along the source's element order)."""
    if not text:
        return None
    out = []
    for item in text.split(";"):
        vals = [v.strip() for v in item.split(",")]
        try:
            out.append(h.find(vals))
        except LpkError as exc:
            raise InputError(f"--gens: {exc}") from None
    return out


def _hom_ideal(p: Poset, n: int, gens: str | None, weak: str | None):
    h = hom_poset(p, chain(n))
    maps = _map_gens(h, gens)
    mode = ("weak", weak) if weak else "full"
    if maps is None:
        if weak:
            raise InputError("--weak needs --gens")
        return full_ideal(h)
    return downset(h, maps, mode)


def _build_map(spec: str, n: int, p: Poset) -> FiberedMap:
    """``proj`` | ``shift`` | ``mult`` | a JSON file ``{"target": ..., "pairs": [...]}``."""
    q = chain(n)
    if spec == "proj":
        return FiberedMap.from_function(q, p, p, lambda i, a: a)
    if spec == "shift":
        if not p.is_total():
            raise InputError("--map shift needs a chain poset")
        ranks = {e: k for k, e in enumerate(p.linear_extension, 1)}
        return FiberedMap.from_function(q, p, chain(n + len(p) - 1),
                                        lambda i, a: str(int(i) + ranks[a] - 1))
    if spec == "mult":
        if p.factors is None or not p.factors[1].is_total():
            raise InputError("--map mult needs a poset of the form prod(Q,chain:m)")
        base, col = p.factors
        ranks = {e: k for k, e in enumerate(col.linear_extension, 1)}

        def fn(i, qa):
            b, a = split_pair(qa)
            return pair_label(b, str(ranks[a] + int(i) - 1))

        return FiberedMap.from_function(q, p, product(base, chain(len(col) + n - 1)), fn)
    try:
        with open(spec) as fh:
            text = fh.read()
        data = json.loads(text)
        target = data.get("target")
        if isinstance(target, str):
            target = parse_poset(target)
        elif isinstance(target, dict):
            target = poset_from_json(target)
        else:
            raise InputError(f"{spec}: map JSON needs a 'target' poset")
        return FiberedMap.from_pairs(q, p, target, parse_pairs_json(text))
    except OSError as exc:
        raise InputError(f"--map {spec}: {exc.strerror}") from None
    except (LpkError, json.JSONDecodeError) as exc:
        raise InputError(f"--map {spec}: {exc}") from None


def _source_ideal(args) -> tuple[MonomialIdeal, str]:
    if getattr(args, "ideal", None):
        return _read_ideal(args.ideal), args.ideal
    if getattr(args, "poset", None) and getattr(args, "n", None):
        p = _poset(args.poset)
        if getattr(args, "coletterplace", False):
            return coletterplace(p, args.n), f"L({args.poset},{args.n})"
        return letterplace_ideal(args.n, p), f"L({args.n},{args.poset})"
    raise InputError("give --ideal FILE or --n N --poset EXPR")


def _int_list(text: str) -> tuple[int, ...]:
    return tuple(int(v) for v in text.split(",") if v.strip())


def _family_params(name: str, pairs: list[str]) -> dict:
    params: dict = {}
    for item in pairs:
        key, sep, val = item.partition("=")
        if not sep:
            raise InputError(f"--param {item!r}: expected key=value")
        key = key.strip()
        try:
            if key == "P":
                params[key] = _poset(val)
            elif key in ("m", "n", "s", "d"):
                params[key] = int(val)
            elif key in ("e", "f", "a", "lam", "sizes"):
                params[key] = _int_list(val)
            elif key == "gens":
                params[key] = [g if "x" in g else _int_list(g) for g in val.split(";") if g.strip()]
            elif key == "cells":
                params[key] = [_int_list(c) for c in val.split(";") if c.strip()]
            elif key == "faces":
                params[key] = [[v.strip() for v in f.split(",") if v.strip()]
                               for f in val.split(";") if f.strip()]
            else:
                raise InputError(f"unknown family parameter {key!r}")
        except ValueError as exc:
            raise InputError(f"--param {item!r}: {exc}") from None
    return params


# -- output helpers --------------------------------------------------------------------


def _report(args, check: str, instance: str, passed: bool, witness=None, lines=()) -> int:
    verdict = "PASS" if passed else "FAIL"
    if args.json:
        rep = {"check": check, "instance": instance, "verdict": verdict}
        if witness is not None:
            rep["witness"] = witness
        print(json.dumps(rep, sort_keys=True))
    else:
        print(f"{verdict} {check} {instance}")
        for line in lines:
            print(f"  {line}")
        if witness is not None and not passed:
            print(f"  witness: {json.dumps(witness, sort_keys=True)}")
    return EXIT_OK if passed else EXIT_FAIL


# -- subcommands -----------------------------------------------------------------------


def cmd_ideal(args) -> int:
    p = _poset(args.poset)
    if args.kind == "letterplace":
        ideal = letterplace_ideal(args.n, p)
    elif args.kind == "coletterplace":
        ideal = coletterplace(p, args.n)
    elif args.kind == "subideal":
        j = _hom_ideal(p, args.n, args.gens, args.weak)
        ideal = letterplace(p, chain(args.n), j).ideal
    else:  # quotient
        if not args.map:
            raise InputError("ideal quotient needs --map")
        ideal = quotient_ideal(letterplace_ideal(args.n, p), _build_map(args.map, args.n, p))
    sys.stdout.write(ideal.to_text())
    return EXIT_OK


def cmd_family(args) -> int:
    fam = family(FamilySpec(args.name, _family_params(args.name, args.param or [])))
    sys.stdout.write(fam.ideal.to_text())
    if args.sidecar:
        data = {
            "family": args.name,
            "params": args.param or [],
            "source_ideal": fam.source_ideal.to_text(),
            "map": fam.map.to_json() if fam.map is not None else None,
        }
        with open(args.sidecar, "w") as fh:
            json.dump(data, fh, indent=2, sort_keys=True)
            fh.write("\n")
    return EXIT_OK


def cmd_dual(args) -> int:
    ideal, _ = _source_ideal(args)
    if args.method == "all":
        duals = {m: alexander_dual(ideal, m) for m in DUAL_METHODS}
        first = duals[DUAL_METHODS[0]]
        if any(d != first for d in duals.values()):
            raise InternalError("Alexander dual methods disagree")
        dual = first
    else:
        dual = alexander_dual(ideal, args.method)
    sys.stdout.write(dual.to_text())
    return EXIT_OK


def cmd_betti(args) -> int:
    ideal, _ = _source_ideal(args)
    table = betti_table(ideal, args.char, jobs=args.jobs, method=args.method)
    if args.json:
        print(json.dumps(table.to_json(), sort_keys=True))
    else:
        print(table.format())
    return EXIT_OK


def cmd_hilbert(args) -> int:
    ideal, _ = _source_ideal(args)
    k = hilbert_numerator(ideal)
    h = h_polynomial(ideal)
    values = hilbert_function(ideal, args.upto) if args.upto is not None else None
    if args.json:
        rep = {"K": list(k.coeffs), "h": list(h.coeffs), "codim": codim(ideal),
               "nvars": len(ideal.variables)}
        if values is not None:
            rep["H"] = values
        print(json.dumps(rep, sort_keys=True))
    else:
        print(f"K(t) = {k}")
        print(f"h(t) = {h}")
        print(f"codim = {codim(ideal)}, nvars = {len(ideal.variables)}")
        if values is not None:
            print("H = " + " ".join(str(v) for v in values))
    return EXIT_OK


def cmd_export(args) -> int:
    ideal, _ = _source_ideal(args)
    sys.stdout.write(export(ideal, args.dialect, args.name))
    return EXIT_OK


def _map_check_inputs(args):
    if not (args.poset and args.n and args.map):
        raise InputError("this check needs --n N --poset EXPR --map MAP")
    p = _poset(args.poset)
    return p, _build_map(args.map, args.n, p), f"L({args.n},{args.poset}) --map {args.map}"


def cmd_check(args) -> int:
    kind = args.kind
    if kind == "fibers":
        _, fmap, inst = _map_check_inputs(args)
        summary = classify_fibers(fmap)
        bad = next((f for f in summary.fibers if not (f.bistrict if args.bistrict else f.left_strict)), None)
        lines = [f"chain={summary.chain} left_strict={summary.left_strict} "
                 f"right_strict={summary.right_strict} bistrict={summary.bistrict}"]
        witness = None if bad is None else {"target": bad.target, "fiber": list(bad.elements)}
        return _report(args, "fibers", inst, bad is None, witness, lines)
    if kind == "regular-seq":
        p, fmap, inst = _map_check_inputs(args)
        source = letterplace_ideal(args.n, p)
        basis = kernel_basis(fmap)
        verdict = is_regular_sequence(source, basis, args.oracle)
        fail = verdict.failure
        witness = None
        if fail is not None:
            witness = {"difference": [fail.a, fail.b],
                       "monomial": str(fail.monomial) if fail.monomial is not None else None,
                       "prime": sorted(fail.prime) if fail.prime else None}
        lines = [f"{len(basis)} differences", f"image: {verdict.final_ideal}"] if verdict.regular else []
        left = classify_fibers(fmap).left_strict
        if left and not verdict.regular:
            raise InternalError(f"left strict fibers but {fail.a} - {fail.b} is a zerodivisor")
        return _report(args, "regular-seq", inst, verdict.regular, witness, lines)
    if kind == "duality":
        if args.ideal:
            ideal = _read_ideal(args.ideal)
            if not args.dual:
                raise InputError("duality check with --ideal needs --dual FILE")
            other = _read_ideal(args.dual)
            dual = alexander_dual(ideal)
            ok = dual == other
            witness = None if ok else {"computed": str(dual)}
            return _report(args, "duality", f"{args.ideal} vs {args.dual}", ok, witness)
        if not (args.poset and args.n):
            raise InputError("duality check needs --n N --poset EXPR or --ideal/--dual")
        p = _poset(args.poset)
        lp = letterplace_ideal(args.n, p)
        expected = transpose(coletterplace(p, args.n))
        for method in DUAL_METHODS:
            if alexander_dual(lp, method) != expected:
                raise InternalError(f"{method} dual of L({args.n},{args.poset}) is not L(P,n) transposed")
        return _report(args, "duality", f"L({args.n},{args.poset})", True, None,
                       [f"dual has {len(expected.generators)} generators, all methods agree"])
    if kind in ("linear-res", "cm"):
        ideal, inst = _source_ideal(args)
        table = betti_table(ideal, args.char, jobs=args.jobs)
        if kind == "linear-res":
            ok, reason = linear_resolution(ideal, table)
            return _report(args, kind, inst, ok, None if ok else {"reason": reason}, [reason])
        c = codim(ideal)
        ok = table.pd == c
        return _report(args, kind, inst, ok, None if ok else {"pd": table.pd, "codim": c},
                       [f"pd = {table.pd}, codim = {c}"])
    if kind == "unseparable":
        ideal, inst = _source_ideal(args)
        res = separations(ideal, budget=args.budget)
        if res.separable:
            w = res.witness
            witness = {"variable": w.split_variable, "labels": list(w.new_labels),
                       "lifted": str(w.lifted_ideal)}
            return _report(args, kind, inst, False, witness)
        if not res.exhaustive:
            return _report(args, kind, inst, False, {"reason": f"budget exhausted after {res.examined}"})
        return _report(args, kind, inst, True, None, [f"{res.examined} candidate liftings examined"])
    if kind == "colon-cert":
        if not (args.poset and args.n):
            raise InputError("colon-cert needs --n N --poset EXPR")
        p = _poset(args.poset)
        j = _hom_ideal(p, args.n, args.gens, args.weak)
        cert = linear_quotients_certificate(j)
        lines = [f"{len(cert.steps)} generators, pd = {cert.pd}, max |Lambda| = {cert.max_lambda}"]
        if args.verbose:
            lines += [f"{s.phi.label}: ({', '.join(s.colon_vars)})" for s in cert.steps]
        return _report(args, kind, f"L(J) in Hom({args.poset},[{args.n}])", True, None, lines)
    raise InputError(f"unknown check {kind!r}")


def cmd_suite(args) -> int:
    only = [int(v) for v in args.only.split(",")] if args.only else None
    results = run_suite(args.seed, only)
    report = format_report(results, args.seed)
    sys.stdout.write(report)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(report)
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


# -- parser --------------------------------------------------------------------------------


def _add_source(sp, with_map: bool = False):
    sp.add_argument("--ideal", help="ideal text file ('-' for stdin)")
    sp.add_argument("--n", type=int, help="chain length n")
    sp.add_argument("--poset", help="poset expression, e.g. prod(chain:2,chain:2)")
    sp.add_argument("--coletterplace", action="store_true", help="use L(P,n) instead of L(n,P)")
    if with_map:
        sp.add_argument("--map", help="proj | shift | mult | path to a JSON map")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lpk", description="Letterplace ideals of posets.")
    parser.add_argument("--version", action="version", version=f"lpk {__version__}")
    parser.add_argument("--json", action="store_true", help="JSON output where supported")
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED)
    parser.add_argument("--jobs", type=int, default=1, help="worker processes for Betti numbers")
    parser.add_argument("--char", type=int, default=None,
                        help="field characteristic (default: LPK_CHAR or 0)")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("ideal", help="print L(n,P), L(P,n), L(J) or a quotient")
    sp.add_argument("kind", choices=["letterplace", "coletterplace", "subideal", "quotient"])
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--poset", required=True)
    sp.add_argument("--gens", help="generators of J as value lists, e.g. '1,2;2,2'")
    sp.add_argument("--weak", help="maximal element for the weak order")
    sp.add_argument("--map")
    sp.set_defaults(func=cmd_ideal)

    sp = sub.add_parser("family", help="generate a named family")
    sp.add_argument("name", choices=FAMILY_NAMES)
    sp.add_argument("--param", action="append", help="key=value (repeatable)")
    sp.add_argument("--sidecar", help="write source ideal and map as JSON here")
    sp.set_defaults(func=cmd_family)

    sp = sub.add_parser("dual", help="Alexander dual")
    _add_source(sp)
    sp.add_argument("--method", choices=list(DUAL_METHODS) + ["all"], default="transversal")
    sp.set_defaults(func=cmd_dual)

    sp = sub.add_parser("betti", help="graded Betti table of S/I")
    _add_source(sp)
    sp.add_argument("--method", choices=["auto", "koszul", "split"], default="auto")
    sp.set_defaults(func=cmd_betti)

    sp = sub.add_parser("hilbert", help="K-polynomial and h-polynomial")
    _add_source(sp)
    sp.add_argument("--upto", type=int, help="also print the Hilbert function up to this degree")
    sp.set_defaults(func=cmd_hilbert)

    sp = sub.add_parser("check", help="run one check and print PASS/FAIL")
    sp.add_argument("kind", choices=["regular-seq", "fibers", "duality", "linear-res", "cm",
                                     "unseparable", "colon-cert"])
    _add_source(sp, with_map=True)
    sp.add_argument("--dual", help="claimed dual (duality check with --ideal)")
    sp.add_argument("--gens")
    sp.add_argument("--weak")
    sp.add_argument("--bistrict", action="store_true", help="fibers: require bistrict fibers")
    sp.add_argument("--oracle", choices=["associated", "brute", "face"], default="associated")
    sp.add_argument("--budget", type=int, default=100_000)
    sp.add_argument("--verbose", action="store_true")
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("export", help="Macaulay2 or Singular script")
    _add_source(sp)
    sp.add_argument("--dialect", choices=["m2", "singular"], default="m2")
    sp.add_argument("--name", default="I")
    sp.set_defaults(func=cmd_export)

    sp = sub.add_parser("suite", help="run the acceptance catalog")
    sp.add_argument("--only", help="comma separated criterion numbers")
    sp.add_argument("--output", help="also write the report to this file")
    sp.set_defaults(func=cmd_suite)
    return parser


def _hoist_globals(argv: list[str]) -> list[str]:
    """Allow global flags after the subcommand (``lpk check ... --json``)."""
    flags = {"--json"}
    valued = {"--seed", "--jobs", "--char"}
    front, rest = [], []
    k = 0
    while k < len(argv):
        a = argv[k]
        key = a.split("=", 1)[0]
        if key in flags:
            front.append(a)
        elif key in valued:
            front.append(a)
            if "=" not in a and k + 1 < len(argv):
                front.append(argv[k + 1])
                k += 1
        else:
            rest.append(a)
        k += 1
    return front + rest


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_hoist_globals(argv))
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except InternalError as exc:
        print(f"internal contradiction (bug): {exc}", file=sys.stderr)
        return EXIT_BUG
    except (InputError, LpkError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

"""Command line front end: ``gobs sba|analyze|degen <file> [flags]``.

Exit status is 0 on success, 1 for usage, input or weight errors and 2 when
an internal invariant fails.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .degen import degeneration_check
from .errors import IncompatibleWeightError, InconsistencyError
from .freemod import SchreyerOrder
from .obstruct import format_betti, gobs, minimal_resolution
from .ring import lm_ideal
from .sba import run_sba
from .signatures import is_groebner, minimum_obstruction
from .textio import ParseError, format_module_monomial, format_polynomial, parse_system

SCHEMA = 1


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="gobs", description="Gröbner bases with syzygy obstruction modules.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("sba", help="complete a system, one appended generator per step")
    s.add_argument("file")
    s.add_argument("--trace", action="store_true", help="print every step")
    s.add_argument("--betti", action="store_true", help="resolve the obstruction module per step")
    s.add_argument("--json", metavar="PATH", help="write a JSON report ('-' for stdout)")

    a = sub.add_parser("analyze", help="diagnose a tuple without completing it")
    a.add_argument("file")
    a.add_argument("--gobs", action="store_true", help="show the obstruction module")
    a.add_argument("--is-gb", action="store_true", help="decide whether the tuple is a GB")
    a.add_argument("--min-obstruction", action="store_true",
                   help="smallest guessed signature with a nonzero remainder")
    a.add_argument("--json", metavar="PATH")

    d = sub.add_parser("degen", help="flatness of the weight degeneration")
    d.add_argument("file")
    d.add_argument("--weight", metavar="W1,...,WN", help="use this weight instead of deriving one")
    d.add_argument("--json", metavar="PATH")
    return p


# --------------------------------------------------------------------------
# report builders
# --------------------------------------------------------------------------

def _mm(mm, ring):
    return format_module_monomial(mm, ring)


def _mono(a, ring):
    return ring.format_monomial(a)


def _lm_list(F):
    ring = F[0].ring
    return [_mono(a, ring) for a in sorted(lm_ideal(F), key=ring.key, reverse=True)]


def _ring_info(system):
    return {"field": system.field_spec, "vars": list(system.ring.variables),
            "order": system.order_spec}


def _sba_report(system, betti: bool):
    ring = system.ring
    res = run_sba(system.polys, betti=betti)
    steps = []
    for k, s in enumerate(res.trace.steps):
        m = len(s.tuple_before)
        rec = {
            "tuple_size": m,
            "lm_ideal": _lm_list(s.tuple_before),
            "guessed_signatures": [_mm(g, ring) for g in s.guessed],
            "processed": [{"signature": _mm(g, ring), "zero": z} for g, z in s.processed],
            "appended_index": m + 1,
            "appended": format_polynomial(s.appended),
            "guessed_signature": _mm(s.guessed_signature, ring),
            "pair": [_mm(s.pair.left, ring), _mm(s.pair.right, ring)],
            "signature": _mm(s.signature, ring) if s.signature is not None else None,
        }
        if betti:
            rec["betti"] = s.betti
        steps.append(rec)
    final = {"tuple_size": len(res.final), "lm_ideal": _lm_list(res.final)}
    if betti:
        final["betti"] = res.final_betti
    return {
        "steps": steps,
        "final": final,
        "final_tuple": [format_polynomial(f) for f in res.final],
        "reduced_gb": [format_polynomial(g) for g in res.reduced],
    }


def _analyze_report(system, want_gobs, want_gb, want_obs):
    ring = system.ring
    F = tuple(system.polys)
    out = {}
    if want_gobs:
        M = gobs(F)
        out["gobs"] = {
            "numerator": [_mm(s, ring) for s in M.numerator],
            "nonzero_generators": [_mm(s, ring) for s in M.nonzero_generators],
            "denominator": [_mm(s, ring) for s in M.denominator],
            "betti": minimal_resolution(M).ranks,
        }
    if want_gb:
        ok, witness = is_groebner(F)
        out["is_groebner"] = {"value": ok,
                              "witness": None if witness is None else _mm(witness, ring)}
    if want_obs:
        obs = minimum_obstruction(F)
        if obs is None:
            out["min_obstruction"] = None
        else:
            order = SchreyerOrder(F)
            out["min_obstruction"] = {
                "signature": _mm(obs.signature, ring),
                "pair": [_mm(obs.pair.left, ring), _mm(obs.pair.right, ring)],
                "remainder": format_polynomial(obs.remainder.monic()),
                "remainder_lm": _mono(obs.remainder.lm, ring),
                "preimage": obs.preimage.to_string(order),
            }
    return out


def _degen_report(system, weight):
    ring = system.ring
    if weight is not None:
        try:
            weight = tuple(int(x) for x in weight.split(","))
        except ValueError:
            raise UsageError(f"bad weight {weight!r}") from None
        if len(weight) != ring.nvars or any(x < 1 for x in weight):
            raise UsageError(f"weight must have {ring.nvars} positive integer entries")
    try:
        r = degeneration_check(system.polys, weight)
    except IncompatibleWeightError as exc:
        lo, hi = (_mono(a, ring) for a in exc.pair)
        raise IncompatibleWeightError(
            *exc.pair, f"{lo} < {hi} in the term order, but weight {weight} "
            f"does not rank them that way") from None
    return {
        "weight": list(r.weight.weights),
        "weight_support_size": len(r.weight.certified_on),
        "lims": [_mm(s, ring) for s in r.lims],
        "ls": [_mm(s, ring) for s in r.ls],
        "lsl": [_mm(s, ring) for s in r.lsl],
        "flat": r.flat,
        "chain_holds": r.chain_holds,
        "routes_agree": r.routes_agree,
        "M_betti": r.m_ranks,
        "N_betti": r.n_ranks,
    }


# --------------------------------------------------------------------------
# human-readable output
# --------------------------------------------------------------------------

def _braces(items):
    return "<" + ", ".join(items) + ">"


def _print_sba(rep, trace, betti, out):
    first = rep["steps"][0]["tuple_size"] if rep["steps"] else rep["final"]["tuple_size"]
    rows = rep["steps"] + [rep["final"]]
    for k, row in enumerate(rows):
        i = first + k
        if trace and k < len(rep["steps"]):
            print(f"F_{i}: guessed signatures {', '.join(row['guessed_signatures'])}", file=out)
            for p in row["processed"]:
                print(f"  {p['signature']}: {'zero' if p['zero'] else 'nonzero'} remainder",
                      file=out)
            print(f"  get f_{row['appended_index']} = {row['appended']} from Spoly"
                  f"({row['pair'][0]}, {row['pair'][1]}), signature "
                  f"{row['signature'] or row['guessed_signature']}", file=out)
        line = f"<LM(F_{i})> = {_braces(row['lm_ideal'])}"
        if betti:
            line = f"G_obs[F_{i}] <- {format_betti(row['betti'])},  " + line
        print(line, file=out)
    print("reduced GB:", file=out)
    for g in rep["reduced_gb"]:
        print(f"  {g}", file=out)


def _print_analyze(rep, out):
    if "gobs" in rep:
        g = rep["gobs"]
        print(f"G_obs = {_braces(g['numerator'])} / {_braces(g['denominator'])}", file=out)
        print(f"  surviving generators: {_braces(g['nonzero_generators'])}", file=out)
        print(f"  resolution: G_obs <- {format_betti(g['betti'])}", file=out)
    if "is_groebner" in rep:
        g = rep["is_groebner"]
        tail = "" if g["value"] else f" (witness {g['witness']})"
        print(f"is Groebner basis: {str(g['value']).lower()}{tail}", file=out)
    if "min_obstruction" in rep:
        o = rep["min_obstruction"]
        if o is None:
            print("minimal obstruction: none", file=out)
        else:
            print(f"minimal obstruction: signature {o['signature']}, pair "
                  f"({o['pair'][0]}, {o['pair'][1]}), remainder {o['remainder']}", file=out)


def _print_degen(rep, out):
    print(f"weight: ({', '.join(map(str, rep['weight']))})", file=out)
    print(f"LImS = {_braces(rep['lims'])}", file=out)
    print(f"LS   = {_braces(rep['ls'])}", file=out)
    print(f"LSL  = {_braces(rep['lsl'])}", file=out)
    print(f"flat: {str(rep['flat']).lower()}", file=out)
    print(f"M <- {format_betti(rep['M_betti'])}", file=out)
    print(f"N <- {format_betti(rep['N_betti'])}", file=out)


# --------------------------------------------------------------------------
# entry point
# --------------------------------------------------------------------------

def _run(args, out):
    try:
        with open(args.file, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {args.file}: {exc.strerror}") from None
    system = parse_system(text, name=args.file)
    start = time.perf_counter()
    if args.command == "sba":
        body = _sba_report(system, args.betti)
        flags = {"trace": args.trace, "betti": args.betti}
    elif args.command == "analyze":
        chosen = args.gobs or args.is_gb or args.min_obstruction
        g, b, o = (args.gobs, args.is_gb, args.min_obstruction) if chosen else (True,) * 3
        body = _analyze_report(system, g, b, o)
        flags = {"gobs": g, "is_gb": b, "min_obstruction": o}
    else:
        body = _degen_report(system, args.weight)
        flags = {"weight": args.weight}
    elapsed = time.perf_counter() - start
    report = {
        "schema": SCHEMA,
        "command": {"name": args.command, "file": args.file, "flags": flags},
        "ring": _ring_info(system),
        "input": [format_polynomial(f) for f in system.polys],
        **body,
        "timing": {"seconds": round(elapsed, 6)},
    }
    if args.json != "-":
        if args.command == "sba":
            _print_sba(body, args.trace, args.betti, out)
        elif args.command == "analyze":
            _print_analyze(body, out)
        else:
            _print_degen(body, out)
    if args.json:
        text = json.dumps(report, indent=2, ensure_ascii=False) + "\n"
        if args.json == "-":
            out.write(text)
        else:
            with open(args.json, "w", encoding="utf-8") as fh:
                fh.write(text)
    return report


def main(argv=None) -> int:
    out = sys.stdout
    try:
        args = _build_parser().parse_args(argv)
        _run(args, out)
    except UsageError as exc:
        print(f"gobs: error: {exc}", file=sys.stderr)
        return 1
    except ParseError as exc:
        print(f"gobs: parse error: {exc}", file=sys.stderr)
        return 1
    except IncompatibleWeightError as exc:
        print(f"gobs: incompatible weight: {exc}", file=sys.stderr)
        return 1
    except InconsistencyError as exc:
        print(f"gobs: internal consistency failure: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())

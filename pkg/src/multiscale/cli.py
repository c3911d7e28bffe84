"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O error.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import expected as E
from . import mersenne as mer
from . import render, storage, verify as verify_mod
from .analytic import li, psi
from .encoding import EncodingParams, build_hierarchy
from .errors import ConfigurationError, MissingDataError, MultiscaleError, StorageError
from .primality import sieve
from .primes import (
    block_proportions,
    classify_blocks,
    histogram,
    level_report,
    position_probabilities_level1,
    position_probabilities_level2,
    prime_chain,
)
from .reconstruction import reconstruct
from .twins import STATED_LEVEL2_RANGES, expand_ranges, straddling_pairs, twin_chain, twin_value_coverage

CHAINS = {"primes": prime_chain, "twins": twin_chain, "mersenne": mer.mersenne_chain}


def _emit(args, kind: str, payload: dict, csv_text: str | None = None) -> None:
    if args.format == "json":
        sys.stdout.write(render.report_json(kind, payload))
    elif args.format == "csv" and csv_text is not None:
        sys.stdout.write(csv_text)
    else:
        sys.stdout.write(render.report_text(payload))


def _params(args) -> EncodingParams:
    return EncodingParams(n_max=args.n_max, levels=args.levels, t=args.t)


def _hierarchy(args, chain: str):
    if args.store is not None:
        path = verify_mod.store_path(args.store, chain)
        if path.exists():
            return storage.load(path, tag=chain)
    return build_hierarchy(CHAINS[chain](), _params(args))


def cmd_sieve(args) -> int:
    bitmap = sieve(args.n_max)
    if args.store is not None:
        Path(args.store).mkdir(parents=True, exist_ok=True)
        storage.save_bitmap(bitmap, Path(args.store) / "bitmap.msp")
    _emit(args, "sieve", {"n_max": args.n_max, "prime_count": bitmap.count()})
    return 0


def cmd_build(args) -> int:
    if args.store is None:
        raise ConfigurationError("build needs --store DIR to write the hierarchy to")
    hier = build_hierarchy(CHAINS[args.chain](), _params(args))
    Path(args.store).mkdir(parents=True, exist_ok=True)
    path = verify_mod.store_path(args.store, args.chain)
    storage.save(hier, path)
    _emit(args, "build", {"path": str(path), "tag": hier.tag, "n_max": hier.n_max,
                          "levels": hier.depth, "t": hier.params.t})
    return 0


def cmd_hist(args) -> int:
    hier = _hierarchy(args, args.chain)
    hist = histogram(hier.level(args.level), t=hier.params.t)
    _emit(args, "histogram", {"chain": args.chain, "level": args.level, "total": hist.total,
                              "counts": hist.as_dict()}, render.histogram_csv(hist))
    return 0


def cmd_spiral(args) -> int:
    hier = _hierarchy(args, args.chain)
    grid = render.spiral(hier.level(args.level), args.side)
    if args.format == "text":
        sys.stdout.write(render.render_spiral(grid))
    else:
        _emit(args, "spiral", {"chain": args.chain, "level": args.level, "side": grid.side,
                               "cells": grid.cells}, render.spiral_csv(grid))
    return 0


def cmd_tree(args) -> int:
    sys.stdout.write(render.tree(_hierarchy(args, args.chain), args.n3))
    return 0


def cmd_stats(args) -> int:
    hier = _hierarchy(args, "primes")
    h1 = histogram(hier.level(1))
    classes = classify_blocks(h1)
    m = hier.n_max
    li_m, psi_m = li(m), psi(m)
    pi = sieve(m).count()
    payload = {
        "n_max": m,
        "prime_count": pi,
        "N1": classes.n1, "N2": classes.n2, "N3": classes.n3,
        "proportions": block_proportions(h1),
        "li": li_m,
        "psi": psi_m,
        "li_over_pi": li_m / pi,
        "psi_li_over_N1": psi_m * li_m / classes.n1,
        "multi_over_psi_li": (2 * classes.n2 + 3 * classes.n3 + 1) / ((1 - psi_m) * li_m),
        "level1_positions": position_probabilities_level1(h1).probabilities,
    }
    if hier.depth >= 2:
        p2 = position_probabilities_level2(hier)
        payload["level2_positions"] = p2.probabilities
        payload["level2_search_order"] = p2.search_order
    if hier.depth >= 3:
        rep = level_report(hier, 3)
        payload.update({
            "level3_distinct": len(rep.values), "level3_missing": rep.missing,
            "level3_values": rep.values, "level3_min_primes": rep.min_popcount,
            "level3_constant_prefix": rep.constant_prefix,
            "level3_first_deviation": rep.first_deviation,
            "level3_longest_prime_free_runs": {c: r for c, r in rep.empty_runs.items() if r},
        })
    _emit(args, "stats", payload)
    return 0


def cmd_twins(args) -> int:
    hier = _hierarchy(args, "twins")
    cov2 = twin_value_coverage(hier, 2)
    stated = expand_ranges(STATED_LEVEL2_RANGES)
    payload = {
        "n_max": hier.n_max,
        "level2_prefix": [int(v) for v in hier[2][:20]],
        "level2_distinct": cov2.distinct,
        "level2_missing": cov2.missing,
        "level2_values": cov2.values,
        "level2_outside_stated_ranges": cov2.values - stated,
        "stated_ranges_not_attained": stated - cov2.values,
        "straddling_pairs": straddling_pairs(hier[1]),
    }
    if hier.depth >= 3:
        level3_n = min(args.level3_n, hier.n_max)
        cov3 = twin_value_coverage(hier, 3, level3_n)
        payload.update({"level3_prefix": [int(v) for v in hier[3][:20]], "level3_n_max": level3_n,
                        "level3_distinct": cov3.distinct})
    _emit(args, "twins", payload)
    return 0


def cmd_mersenne(args) -> int:
    k_max, m_max = (args.k_max, args.m_max) if not args.fast else (min(args.k_max, 401), min(args.m_max, 24))
    if args.format == "csv":
        sys.stdout.write(render.mersenne_csv(mer.scan(k_max)))
        return 0
    rep = mer.mersenne_observations(k_max, m_max)
    payload = {
        "k_max": k_max, "m_max": m_max,
        "histogram": rep.histogram, "exponents": rep.exponents,
        "nonzero_patterns": rep.nonzero_patterns,
        "max_primes_per_block_from_k7": rep.max_primes_from_k7,
        "offset_counts_from_k7": rep.offset_counts,
        "exclusive_from_k11": rep.exclusive_from_k11,
        "level2_nonzero": rep.level2, "level2_nonempty": rep.level2_nonempty,
        "level2_blocks": rep.level2_blocks, "level2_empty_fraction": rep.level2_empty_fraction,
    }
    _emit(args, "mersenne", payload)
    return 0


def cmd_reconstruct(args) -> int:
    result = reconstruct(_hierarchy(args, args.chain), args.target)
    if args.format == "csv":
        sys.stdout.write(render.reconstruction_csv(result))
    elif args.format == "json":
        sys.stdout.write(render.report_json("reconstruct", {
            "target": result.target, "matches": result.matches, "integers": result.integers}))
    else:
        sys.stdout.write("".join(f"{i}\n" for i in result.integers))
    return 0


def cmd_verify(args) -> int:
    checks = verify_mod.verify(args.scope, args.store, args.n_max)
    if args.format == "json":
        sys.stdout.write(render.report_json("verify", verify_mod.as_payload(checks)))
    else:
        for c in checks:
            status = "PASS" if c.passed else "FAIL"
            line = f"{status} [{c.id}] {c.name}"
            if not c.passed:
                line += f"\n      measured: {c.measured}\n      expected: {c.expected}"
            if c.note:
                line += f"\n      note: {c.note}"
            print(line)
    return 0 if all(c.passed for c in checks) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="multiscale", description=__doc__.splitlines()[0])
    parser.add_argument("--n-max", type=int, default=E.FULL_N, help="interval end N (default %(default)s)")
    parser.add_argument("--levels", type=int, default=3)
    parser.add_argument("--t", type=int, default=3, help="block width exponent, B = 2**t")
    parser.add_argument("--store", help="directory holding <chain>.msp containers")
    parser.add_argument("--format", choices=("text", "csv", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("sieve", help="count primes up to --n-max (saves bitmap.msp with --store)")

    p = sub.add_parser("build", help="build a hierarchy and save it to --store")
    p.add_argument("--chain", choices=CHAINS, default="primes")

    p = sub.add_parser("hist", help="pattern histogram of one level")
    p.add_argument("--chain", choices=CHAINS, default="primes")
    p.add_argument("--level", type=int, default=1)

    p = sub.add_parser("spiral", help="first side**2 values of a level laid out as a spiral")
    p.add_argument("--chain", choices=CHAINS, default="primes")
    p.add_argument("--level", type=int, default=1)
    p.add_argument("--side", type=int, default=7)

    p = sub.add_parser("tree", help="three-level tree under one level-3 block")
    p.add_argument("--chain", choices=CHAINS, default="primes")
    p.add_argument("--n3", type=int, default=0)

    sub.add_parser("stats", help="prime block classes, estimator ratios and position probabilities")

    p = sub.add_parser("twins", help="twin-prime sequence prefixes and value coverage")
    p.add_argument("--level3-n", type=int, default=E.TWIN_LEVEL3_N)

    p = sub.add_parser("mersenne", help="patterns of the blocks 2**k-7 .. 2**k")
    p.add_argument("--k-max", type=int, default=mer.DEFAULT_K_MAX)
    p.add_argument("--m-max", type=int, default=mer.DEFAULT_M_MAX)
    p.add_argument("--fast", action="store_true", help="cap exponents for a quick smoke run")

    p = sub.add_parser("reconstruct", help="integers encoded under a level-3 pattern value")
    p.add_argument("--chain", choices=CHAINS, default="primes")
    p.add_argument("--target", type=int, required=True)

    p = sub.add_parser("verify", help="run the published-value regression checks")
    p.add_argument("--scope", choices=verify_mod.SCOPES + ("all",), default="all")
    return parser


COMMANDS = {
    "sieve": cmd_sieve, "build": cmd_build, "hist": cmd_hist, "spiral": cmd_spiral,
    "tree": cmd_tree, "stats": cmd_stats, "twins": cmd_twins, "mersenne": cmd_mersenne,
    "reconstruct": cmd_reconstruct, "verify": cmd_verify,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (StorageError, MissingDataError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ConfigurationError, MultiscaleError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

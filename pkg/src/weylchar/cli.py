"""Command-line front end: data dumps and batch verification suites.

Per-element dumps are JSON Lines; summaries are single JSON documents;
``--format csv`` switches the tabular dumps to comma-separated rows.
Exit codes: 0 success, 1 verification failure, 2 usage or budget errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .cartan import LabelError, cartan_from_label
from .characters import (
    FactorizationFailed,
    molien_character,
    packable_partitions,
    theorem4_character,
    verify_theorem4,
)
from .parabolic import MuPacking, Unpackable, all_packings, pack_partition, v_mu, weight_mu
from .roots import NonFiniteType, positive_roots
from .schubert import (
    ConventionFlags,
    DEFAULT_FLAGS,
    OPERATOR_ORDERS,
    PAIRING_ORDERS,
    resolve_conventions,
    verify_corollary2,
    verify_corollary3,
    verify_theorem1,
)
from .typea import chi_typea, validate_partition
from .weyl import DEFAULT_BUDGET, BudgetExceeded, Level, WeylElement, weyl_group

_USAGE_ERRORS = (LabelError, Unpackable, BudgetExceeded, NonFiniteType, ValueError)

_OPERATOR_ALIASES = {
    "rtl": "right-to-left",
    "ltr": "left-to-right",
    "right-to-left": "right-to-left",
    "left-to-right": "left-to-right",
}
_PAIRING_ALIASES = {
    "ia": "simple-on-coroot",
    "ai": "root-on-simple",
    "simple-on-coroot": "simple-on-coroot",
    "root-on-simple": "root-on-simple",
}


def _parse_mu(text: str) -> tuple[int, ...]:
    try:
        parts = tuple(int(x) for x in text.split(","))
    except ValueError as err:
        raise ValueError(f"bad partition {text!r}: {err}") from None
    return validate_partition(parts)


def _parse_conventions(text: str | None) -> list[ConventionFlags]:
    if text is None:
        return [DEFAULT_FLAGS]
    if text.strip() == "all":
        return [
            ConventionFlags(op, pair)
            for op in OPERATOR_ORDERS
            for pair in PAIRING_ORDERS
        ]
    out = []
    for combo in text.split(","):
        bits = combo.strip().split("/")
        if len(bits) != 2:
            raise ValueError(
                f"bad convention {combo!r}; expected <operator>/<pairing>, "
                f"e.g. rtl/ia or right-to-left/simple-on-coroot"
            )
        op, pair = bits[0].strip(), bits[1].strip()
        if op not in _OPERATOR_ALIASES:
            raise ValueError(f"unknown operator order {op!r}")
        if pair not in _PAIRING_ALIASES:
            raise ValueError(f"unknown pairing order {pair!r}")
        out.append(ConventionFlags(_OPERATOR_ALIASES[op], _PAIRING_ALIASES[pair]))
    return out


def _parse_packing(datum, mu: tuple[int, ...], text: str) -> MuPacking:
    given = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        given.append(tuple(int(x) for x in chunk.split(",")))
    chains = []
    index = 0
    for part in mu:
        if part == 1:
            chains.append(())
            continue
        if index >= len(given):
            raise ValueError(f"packing {text!r} has too few chains for mu {mu}")
        chains.append(given[index])
        index += 1
    if index != len(given):
        raise ValueError(f"packing {text!r} has too many chains for mu {mu}")
    packing = MuPacking(datum=datum, mu=mu, chains=tuple(chains))
    packing.validate()
    return packing


# -- level cache --------------------------------------------------------------


def _cache_file(cache_dir: str, label: str) -> str:
    return os.path.join(cache_dir, f"levels_{label.replace('x', '_')}.json")


def _load_cached_levels(group, cache_dir: str) -> bool:
    path = _cache_file(cache_dir, group.datum.label)
    if not os.path.exists(path):
        return False
    try:
        with open(path) as handle:
            data = json.load(handle)
        if data.get("format") != 1 or data.get("label") != group.datum.label:
            return False
        n = group.rank
        levels = []
        for k, flat_list in enumerate(data["levels"]):
            elements = []
            for flat in flat_list:
                rows = tuple(
                    tuple(flat[r * n + c] for c in range(n)) for r in range(n)
                )
                elements.append(WeylElement(matrix=rows, length=k))
            levels.append(Level(k, tuple(elements)))
        group.install_levels(tuple(levels))
        return True
    except (OSError, ValueError, KeyError, IndexError) as err:
        print(f"ignoring unusable level cache {path}: {err}", file=sys.stderr)
        return False


def _store_levels(group, cache_dir: str, budget: int) -> None:
    os.makedirs(cache_dir, exist_ok=True)
    path = _cache_file(cache_dir, group.datum.label)
    data = {
        "format": 1,
        "label": group.datum.label,
        "rank": group.rank,
        "levels": [
            [list(w.key) for w in level.elements]
            for level in group.levels(budget)
        ],
    }
    with open(path, "w") as handle:
        json.dump(data, handle)


def _group_for(args):
    datum = cartan_from_label(args.type)
    group = weyl_group(datum)
    if getattr(args, "cache_dir", None):
        if not _load_cached_levels(group, args.cache_dir):
            group.levels(args.budget)
            _store_levels(group, args.cache_dir, args.budget)
    return datum, group


# -- subcommands ----------------------------------------------------------------


def _emit_rows(rows, header, fmt):
    if fmt == "csv":
        print(",".join(header))
        for row in rows:
            print(",".join(str(row[key]).replace(" ", "") for key in header))
    else:
        for row in rows:
            print(json.dumps(row))


def _cmd_roots(args) -> int:
    datum = cartan_from_label(args.type)
    rows = [
        {"root": list(rv.root), "coroot": list(rv.coroot), "height": rv.height}
        for rv in positive_roots(datum)
    ]
    _emit_rows(rows, ("root", "coroot", "height"), args.format)
    return 0


def _cmd_poincare(args) -> int:
    datum, group = _group_for(args)
    sizes = group.level_sizes(args.budget)
    if args.format == "csv":
        print("k,size")
        for k, size in enumerate(sizes):
            print(f"{k},{size}")
    else:
        print(
            json.dumps(
                {
                    "type": datum.label,
                    "level_sizes": list(sizes),
                    "order": sum(sizes),
                    "positive_roots": len(sizes) - 1,
                }
            )
        )
    return 0


def _cmd_chi_a(args) -> int:
    mu = _parse_mu(args.mu)
    character = chi_typea(args.n, mu, bound=args.n_bound, threads=args.threads)
    if args.format == "csv":
        print("k,value")
        for k, value in enumerate(character):
            print(f"{k},{value}")
    else:
        print(json.dumps({str(k): value for k, value in enumerate(character)}))
    return 0


def _cmd_weights(args) -> int:
    datum, group = _group_for(args)
    mu = _parse_mu(args.mu)
    if args.packing:
        packing = _parse_packing(datum, mu, args.packing)
    else:
        packing = pack_partition(datum, mu)
    rows = []
    for level in group.levels(args.budget):
        for w in level.elements:
            rows.append(
                {
                    "word": list(group.reduced_word(w)),
                    "length": w.length,
                    "weight": weight_mu(w, packing, group),
                }
            )
    _emit_rows(rows, ("word", "length", "weight"), args.format)
    return 0


def _cmd_character(args) -> int:
    datum, group = _group_for(args)
    mu = _parse_mu(args.mu)
    if args.packing:
        packing = _parse_packing(datum, mu, args.packing)
    else:
        packing = pack_partition(datum, mu)
    combinatorial = theorem4_character(
        datum, packing, budget=args.budget, threads=args.threads
    )
    oracle = molien_character(datum, v_mu(packing, group), budget=args.budget)
    match = combinatorial.values == oracle.values
    if args.format == "csv":
        print("k,theorem4,molien")
        for k, (a, b) in enumerate(zip(combinatorial, oracle)):
            print(f"{k},{a},{b}")
    else:
        print(
            json.dumps(
                {
                    "type": datum.label,
                    "mu": list(mu),
                    "packing": [list(c) for c in packing.chains],
                    "theorem4": list(combinatorial),
                    "molien": list(oracle),
                    "match": match,
                }
            )
        )
    return 0 if match else 1


def _verify_theorem4(args, datum) -> tuple[bool, dict]:
    mus = None
    if args.mu and not args.all_mu:
        mus = [_parse_mu(args.mu)]
    report = verify_theorem4(datum, mus=mus, budget=args.budget)
    return report.passed, report.to_dict()


def _verify_theorem1(args, datum) -> tuple[bool, dict]:
    conventions = _parse_conventions(args.conventions)
    resolution = resolve_conventions([datum], budget=args.budget)
    wanted = {flags.combo for flags in conventions}
    entries = [e for e in resolution.entries if e["convention"] in wanted]
    if args.conventions and args.conventions.strip() == "all":
        passed = bool(resolution.passing_combos(datum.label))
    else:
        passed = all(e["theorem1_passed"] for e in entries)
    return passed, {
        "type": datum.label,
        "entries": entries,
        "passing": [e["convention"] for e in entries if e["theorem1_passed"]],
    }


def _verify_corollary(args, datum, which) -> tuple[bool, dict]:
    verifier = verify_corollary2 if which == 2 else verify_corollary3
    reports = [
        verifier(datum, flags, budget=args.budget)
        for flags in _parse_conventions(args.conventions)
    ]
    return all(r.passed for r in reports), {
        "type": datum.label,
        "reports": [r.to_dict() for r in reports],
    }


def _cmd_verify(args) -> int:
    datum, _ = _group_for(args)
    outcomes: dict[str, dict] = {}
    ok = True
    if args.target in ("theorem4", "all"):
        passed, doc = _verify_theorem4(args, datum)
        outcomes["theorem4"] = doc
        ok = ok and passed
    schubert_possible = datum.rank <= 4
    if args.target in ("theorem1", "corollary2", "corollary3", "all") and not schubert_possible:
        if args.target == "all":
            outcomes["schubert"] = {
                "skipped": "divided-difference suites are restricted to rank <= 4"
            }
        else:
            raise ValueError(
                f"{args.target} verification is restricted to rank <= 4 types"
            )
    if schubert_possible:
        if args.target == "theorem1":
            passed, doc = _verify_theorem1(args, datum)
            outcomes["theorem1"] = doc
            ok = ok and passed
        if args.target in ("corollary2", "all"):
            passed, doc = _verify_corollary(args, datum, 2)
            outcomes["corollary2"] = doc
            ok = ok and passed
        if args.target in ("corollary3", "all"):
            passed, doc = _verify_corollary(args, datum, 3)
            outcomes["corollary3"] = doc
            ok = ok and passed
        if args.target == "all":
            # convention resolution counts as definitive when every cell
            # either passes or carries a populated mismatch table
            resolution = resolve_conventions([datum], budget=args.budget)
            outcomes["conventions"] = resolution.to_dict()
            ok = ok and resolution.definitive
    print(json.dumps({"type": datum.label, "passed": ok, "suites": outcomes}))
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weylchar",
        description="Exact graded characters of Weyl group coinvariant algebras",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, mu_required=False, with_packing=False):
        p.add_argument("--type", "-t", required=True, help="type label, e.g. B3 or A2xA1")
        if mu_required is not None:
            p.add_argument(
                "--mu", required=mu_required, help="partition, comma separated, e.g. 2,1"
            )
        if with_packing:
            p.add_argument(
                "--packing",
                help="chain override: chains ';'-separated, nodes ','-separated, e.g. 1,2;4",
            )
        p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                       help="maximum number of group elements to enumerate")
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--threads", type=int, default=1,
                       help="worker threads for the embarrassingly parallel sums")
        p.add_argument("--cache-dir", help="directory for the JSON level cache")

    p_roots = sub.add_parser("roots", help="dump the positive roots")
    p_roots.add_argument("--type", "-t", required=True)
    p_roots.add_argument("--format", choices=("json", "csv"), default="json")
    p_roots.set_defaults(func=_cmd_roots)

    p_poincare = sub.add_parser("poincare", help="dump the level sizes")
    common(p_poincare, mu_required=None)
    p_poincare.set_defaults(func=_cmd_poincare)

    p_chia = sub.add_parser("chi-a", help="symmetric-group character by brute force")
    p_chia.add_argument("--n", type=int, required=True)
    p_chia.add_argument("--mu", required=True)
    p_chia.add_argument("--n-bound", type=int, default=8)
    p_chia.add_argument("--format", choices=("json", "csv"), default="json")
    p_chia.add_argument("--threads", type=int, default=1)
    p_chia.set_defaults(func=_cmd_chi_a)

    p_weights = sub.add_parser("weights", help="per-element weights as JSON lines")
    common(p_weights, mu_required=True, with_packing=True)
    p_weights.set_defaults(func=_cmd_weights)

    p_character = sub.add_parser(
        "character", help="combinatorial character and the graded-trace oracle"
    )
    common(p_character, mu_required=True, with_packing=True)
    p_character.set_defaults(func=_cmd_character)

    p_verify = sub.add_parser("verify", help="batch verification suites")
    p_verify.add_argument(
        "target",
        choices=("theorem4", "theorem1", "corollary2", "corollary3", "all"),
    )
    common(p_verify, mu_required=False, with_packing=False)
    p_verify.add_argument("--all-mu", action="store_true",
                          help="check every packable partition (default when --mu absent)")
    p_verify.add_argument(
        "--conventions",
        help="'all' or comma list of <operator>/<pairing> combos (aliases rtl,ltr / ia,ai)",
    )
    p_verify.set_defaults(func=_cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _USAGE_ERRORS as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except FactorizationFailed as err:
        print(f"internal error: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

"""Command-line surface.

Weights on the command line are comma-separated fundamental coordinates.
JSON is the interchange format of record; char and tensor tables can
also be rendered as TSV for spreadsheet diffing.

Exit codes: 0 success/pass, 1 mathematical failure (nonempty diff or
condition violation), 2 input error, 3 oracle incompleteness.
"""

import argparse
import json
import os
import random
import sys

from . import oracle, rigidity, serialize
from .lattice import (
    from_fundamental,
    fundamental_coords,
    orbit_size,
    processing_key,
)
from .serialize import FormatError


class CLIError(Exception):
    def __init__(self, code: int, message: str):
        self.code = code
        self.message = message
        super().__init__(message)


def _parse_coords(text: str, l: int) -> tuple[int, ...]:
    try:
        coords = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise CLIError(2, f"malformed weight {text!r}") from None
    if len(coords) != l:
        raise CLIError(2, f"expected {l} coordinates in {text!r}")
    return coords


def _parse_dominant(text: str, l: int):
    coords = _parse_coords(text, l)
    if any(c < 0 for c in coords):
        raise CLIError(2, f"weight {text!r} has a negative fundamental coordinate")
    return from_fundamental(l, coords)


def _cache_dir(args) -> str | None:
    return getattr(args, "cache_dir", None) or os.environ.get("CHARRIG_CACHE") or None


def _coords_str(eps) -> str:
    return ",".join(str(c) for c in fundamental_coords(eps))


def _emit(doc, fmt: str, tsv_lines) -> None:
    if fmt == "json":
        sys.stdout.write(serialize.dump_doc(doc))
    else:
        sys.stdout.write("\n".join(tsv_lines) + "\n")


def _write_file(path: str, text: str) -> None:
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise CLIError(2, f"cannot write {path}: {exc}") from None


def cmd_char(args) -> int:
    lam = _parse_dominant(args.weight, args.rank)
    ch = oracle.freudenthal_character(args.rank, lam, _cache_dir(args))
    rows = sorted(ch.terms.items(), key=lambda kv: processing_key(kv[0]), reverse=True)
    dim = oracle.weyl_dim(args.rank, lam)
    doc = {
        "rank": args.rank,
        "lambda": serialize.weight_doc(lam),
        "rows": [
            {
                "mu": serialize.weight_doc(mu),
                "multiplicity": m,
                "orbit_size": orbit_size(mu),
            }
            for mu, m in rows
        ],
        "dimension": dim,
    }
    tsv = ["mu\tmultiplicity\torbit_size"]
    tsv += [f"{_coords_str(mu)}\t{m}\t{orbit_size(mu)}" for mu, m in rows]
    tsv.append(f"dimension\t{dim}\t")
    _emit(doc, args.format, tsv)
    return 0


def cmd_tensor(args) -> int:
    mu = _parse_dominant(args.mu, args.rank)
    nu = _parse_dominant(args.nu, args.rank)
    cache = _cache_dir(args)
    row = oracle.tensor_decompose(args.rank, mu, nu, cache)
    rows = sorted(row.items(), key=lambda kv: processing_key(kv[0]), reverse=True)
    dims = {lam: oracle.weyl_dim(args.rank, lam) for lam, _ in rows}
    total = sum(c * dims[lam] for lam, c in rows)
    product = oracle.weyl_dim(args.rank, mu) * oracle.weyl_dim(args.rank, nu)
    doc = {
        "rank": args.rank,
        "mu": serialize.weight_doc(mu),
        "nu": serialize.weight_doc(nu),
        "rows": [
            {"lambda": serialize.weight_doc(lam), "coeff": c, "dimension": dims[lam]}
            for lam, c in rows
        ],
        "dimension_sum": total,
        "dimension_product": product,
    }
    tsv = ["lambda\tcoeff\tdimension"]
    tsv += [f"{_coords_str(lam)}\t{c}\t{dims[lam]}" for lam, c in rows]
    tsv.append(f"dimension_check\t{total}\t{product}")
    _emit(doc, args.format, tsv)
    return 0


def _family_diff(fam, cache_dir):
    """Memberwise diff against the true characters."""
    diff = []
    for lam in fam.index_set():
        truth = oracle.freudenthal_character(fam.rank, lam, cache_dir)
        found = fam.members[lam]
        if found != truth:
            diff.append(
                {
                    "lambda": serialize.weight_doc(lam),
                    "expected": [
                        {"mu": serialize.weight_doc(mu), "coeff": c}
                        for mu, c in sorted(
                            truth.terms.items(),
                            key=lambda kv: processing_key(kv[0]),
                            reverse=True,
                        )
                    ],
                    "found": [
                        {"mu": serialize.weight_doc(mu), "coeff": c}
                        for mu, c in sorted(
                            found.terms.items(),
                            key=lambda kv: processing_key(kv[0]),
                            reverse=True,
                        )
                    ],
                }
            )
    return diff


def cmd_reconstruct(args) -> int:
    cache = _cache_dir(args)
    if args.oracle == "lr":
        query = rigidity.lr_oracle(args.rank, cache)
    else:
        if not args.table:
            raise CLIError(2, "--oracle file requires --table")
        try:
            with open(args.table, encoding="utf-8") as fh:
                doc = json.load(fh)
        except (OSError, ValueError) as exc:
            raise CLIError(2, f"cannot read table {args.table}: {exc}") from None
        table_rank, entries = serialize.table_from_doc(doc)
        if table_rank != args.rank:
            raise CLIError(2, f"table rank {table_rank} does not match --rank {args.rank}")
        query = rigidity.table_oracle(entries)
    try:
        fam = rigidity.reconstruct_family(query, args.rank, args.bound)
    except rigidity.OracleIncomplete as exc:
        mu, nu, s = exc.triple
        raise CLIError(
            3,
            "oracle incomplete: missing entry for "
            f"({_coords_str(mu)}; {_coords_str(nu)}; {_coords_str(s)})",
        ) from None
    diff = _family_diff(fam, cache)
    if args.out:
        _write_file(args.out, serialize.dump_doc(serialize.family_to_doc(fam)))
    doc = {
        "rank": args.rank,
        "bound": args.bound,
        "oracle": args.oracle,
        "members": len(fam.members),
        "diff": diff,
        "equal": not diff,
    }
    sys.stdout.write(serialize.dump_doc(doc))
    return 0 if not diff else 1


def _load_family(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except (OSError, ValueError) as exc:
        raise CLIError(2, f"cannot read family {path}: {exc}") from None
    try:
        return serialize.family_from_doc(doc)
    except FormatError as exc:
        raise CLIError(2, f"malformed family file: {exc}") from None


def cmd_verify(args) -> int:
    fam = _load_family(args.family)
    if args.rank is not None and args.rank != fam.rank:
        raise CLIError(2, f"family rank {fam.rank} does not match --rank {args.rank}")
    report = rigidity.verify_family(fam, _cache_dir(args))
    doc = {
        "rank": fam.rank,
        "bound": fam.bound,
        "support_condition": {
            "verdict": "pass" if report.support_pass else "fail",
            "violations": [
                {
                    "lambda": serialize.weight_doc(lam),
                    "mu": serialize.weight_doc(mu),
                    "expected": expected,
                    "found": found,
                }
                for lam, mu, expected, found in report.support_violations
            ],
        },
        "duality_condition": {
            "verdict": "pass" if report.duality_pass else "fail",
            "violations": [
                {
                    "mu": serialize.weight_doc(mu),
                    "nu": serialize.weight_doc(nu),
                    "lambda": serialize.weight_doc(lam),
                    "lhs": lhs,
                    "rhs": rhs,
                }
                for mu, nu, lam, lhs, rhs in report.duality_violations
            ],
            "skipped_count": len(report.skipped),
        },
        "members_equal": report.members_equal,
    }
    sys.stdout.write(serialize.dump_doc(doc))
    return 0 if report.passed else 1


def cmd_perturb(args) -> int:
    cache = _cache_dir(args)
    fam = rigidity.true_family(args.rank, args.bound, cache)
    applied = []
    if args.site is not None:
        if args.delta is None:
            raise CLIError(2, "--site requires --delta")
        if args.delta == 0:
            raise CLIError(2, "delta must be nonzero")
        try:
            lam_text, mu_text = args.site.split(":")
        except ValueError:
            raise CLIError(2, f"malformed site {args.site!r}, expected LAM:MU") from None
        lam = _parse_dominant(lam_text, args.rank)
        mu = _parse_dominant(mu_text, args.rank)
        try:
            fam = rigidity.perturb_family(fam, lam, mu, args.delta)
        except rigidity.PerturbationError as exc:
            raise CLIError(2, str(exc)) from None
        applied.append((lam, mu, args.delta))
    elif args.seed is not None:
        rng = random.Random(args.seed)
        sites = rigidity.perturbation_sites(fam)
        if not sites:
            raise CLIError(2, "family has no perturbation sites")
        count = min(args.count, len(sites))
        for lam, mu in rng.sample(sites, count):
            delta = rng.choice([-3, -2, -1, 1, 2, 3])
            fam = rigidity.perturb_family(fam, lam, mu, delta)
            applied.append((lam, mu, delta))
    else:
        raise CLIError(2, "either --site/--delta or --seed is required")
    _write_file(args.out, serialize.dump_doc(serialize.family_to_doc(fam)))
    doc = {
        "rank": args.rank,
        "bound": args.bound,
        "out": args.out,
        "perturbations": [
            {
                "lambda": serialize.weight_doc(lam),
                "mu": serialize.weight_doc(mu),
                "delta": delta,
            }
            for lam, mu, delta in applied
        ],
    }
    sys.stdout.write(serialize.dump_doc(doc))
    return 0


def cmd_table(args) -> int:
    entries = rigidity.lr_table(args.rank, args.bound, _cache_dir(args))
    text = serialize.dump_doc(serialize.table_to_doc(args.rank, entries))
    if args.out:
        _write_file(args.out, text)
    else:
        sys.stdout.write(text)
    return 0


def _add_common(p, cache=True, fmt=False) -> None:
    if cache:
        p.add_argument("--cache-dir", help="persistent character cache directory")
    if fmt:
        p.add_argument("--format", choices=("json", "tsv"), default="json")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="charrig",
        description="Exact type A characters, tensor decompositions, and "
        "rigidity checks for candidate character families.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("char", help="weight multiplicity table of a character")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--weight", required=True, help="fundamental coordinates, e.g. 1,1")
    _add_common(p, fmt=True)
    p.set_defaults(func=cmd_char)

    p = sub.add_parser("tensor", help="tensor product decomposition")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--nu", required=True)
    _add_common(p, fmt=True)
    p.set_defaults(func=cmd_tensor)

    p = sub.add_parser(
        "reconstruct", help="rebuild a family from a structure-constant oracle"
    )
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--oracle", choices=("lr", "file"), default="lr")
    p.add_argument("--table", help="structure-constant table file (for --oracle file)")
    p.add_argument("--out", help="write the reconstructed family here")
    _add_common(p)
    p.set_defaults(func=cmd_reconstruct)

    p = sub.add_parser("verify", help="run the rigidity checks on a family file")
    p.add_argument("--family", required=True)
    p.add_argument("--rank", type=int)
    _add_common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("perturb", help="write a perturbed true family")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--site", help="perturbation site LAM:MU, e.g. 1,1:0,0")
    p.add_argument("--delta", type=int)
    p.add_argument("--seed", type=int, help="randomized site selection")
    p.add_argument("--count", type=int, default=1, help="sites to perturb with --seed")
    p.add_argument("--out", required=True)
    _add_common(p)
    p.set_defaults(func=cmd_perturb)

    p = sub.add_parser("table", help="emit the true structure-constant table")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--out")
    _add_common(p)
    p.set_defaults(func=cmd_table)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "rank", None) is not None and args.rank < 1 and args.command != "verify":
        print(f"charrig: rank must be >= 1, got {args.rank}", file=sys.stderr)
        return 2
    if getattr(args, "bound", None) is not None and args.bound < 0:
        print(f"charrig: bound must be >= 0, got {args.bound}", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except CLIError as exc:
        print(f"charrig: {exc.message}", file=sys.stderr)
        return exc.code


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()

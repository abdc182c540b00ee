"""Command line frontend: sanity checks, normal forms, expansions, the
arity-5 and arity-7 runs, per-partition multiplicity rows, and
verification of the bundled 60-term relation."""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

SCHEMA_VERSION = 1


def _parse_delta(text: str) -> Fraction:
    delta = Fraction(text)
    if not Fraction(1, 4) < delta <= 1:
        raise argparse.ArgumentTypeError("delta must lie in (1/4, 1]")
    return delta


def _parse_prime(text: str) -> int:
    p = int(text)
    if p < 2 or any(p % q == 0 for q in range(2, int(p**0.5) + 1)):
        raise argparse.ArgumentTypeError(f"{p} is not prime")
    return p


def _parse_dump(text: str) -> tuple[str, str]:
    if "=" not in text:
        raise argparse.ArgumentTypeError("expected NAME=PATH")
    name, path = text.split("=", 1)
    return name, path


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tortkara",
        description="defining relations of tortkara triple systems in the free Zinbiel operad",
    )
    parser.add_argument(
        "--format", choices=("text", "json"), default="text", help="report output format"
    )
    parser.add_argument(
        "--threads",
        type=int,
        default=None,
        help="cap the numeric thread pools (set before numpy is loaded)",
    )
    sub = parser.add_subparsers(dest="command")

    sub.add_parser("sanity", help="run the four exact sanity identities")

    p_znf = sub.add_parser("znf", help="Zinbiel normal form of a parenthesized monomial")
    p_znf.add_argument("monomial", help='e.g. "(((ab)c)d)e" or "(ab)(cd)"')

    p_exp = sub.add_parser("expand", help="expand a skew-ternary monomial into Zinbiel")
    p_exp.add_argument("monomial", help='e.g. "[[a,b,c],d,e]" or "[[abc]de]"')

    p_a5 = sub.add_parser("arity5", help="full arity-5 discovery run (exact arithmetic)")
    p_a5.add_argument("--delta", type=_parse_delta, default=Fraction(999, 1000))
    p_a5.add_argument("--figures", metavar="DIR", default=None)
    p_a5.add_argument("--dump-matrix", type=_parse_dump, action="append", default=[])

    p_a7 = sub.add_parser("arity7", help="full arity-7 verification run (modular arithmetic)")
    p_a7.add_argument("--prime", type=_parse_prime, default=101)
    p_a7.add_argument("--figures", metavar="DIR", default=None)
    p_a7.add_argument("--dump-matrix", type=_parse_dump, action="append", default=[])
    p_a7.add_argument("--quiet", action="store_true", help="suppress progress lines")

    p_rep = sub.add_parser("rep", help="multiplicity table row for one partition")
    p_rep.add_argument("--arity", type=int, default=7, choices=(7,))
    p_rep.add_argument("--partition", required=True, help='e.g. "4,2,1"')
    p_rep.add_argument("--prime", type=_parse_prime, default=101)

    p_fig = sub.add_parser(
        "verify-figure2", help="verify the bundled 60-term arity-7 relation"
    )
    p_fig.add_argument("--prime", type=_parse_prime, default=101)
    p_fig.add_argument("--quiet", action="store_true")
    return parser


# ---------------------------------------------------------------------------
# report rendering


def _emit(payload: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps({"schema": SCHEMA_VERSION, **payload}, indent=2, sort_keys=True))
    else:
        _emit_text(payload)


def _emit_text(payload: dict, indent: str = "") -> None:
    for key, value in payload.items():
        if isinstance(value, dict):
            print(f"{indent}{key}:")
            _emit_text(value, indent + "  ")
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            print(f"{indent}{key}:")
            for item in value:
                print(f"{indent}  - " + ", ".join(f"{k}={v}" for k, v in item.items()))
        else:
            print(f"{indent}{key}\t{value}")


def _label_map(d: dict, fmt) -> dict:
    return {fmt(k): v for k, v in d.items()}


def _arity5_payload(report) -> dict:
    from . import symrep

    return {
        "nullity": report.nullity,
        "measure_hnf": round(report.measure_hnf, 3),
        "measure_lll": {k: round(v, 3) for k, v in report.measure_lll.items()},
        "squared_lengths_hnf": _label_map(report.sq_lengths_hnf, str),
        "squared_lengths_lll": {
            k: _label_map(v, str) for k, v in report.sq_lengths_lll.items()
        },
        "shortest_squared_length": report.shortest_sq_length,
        "shortest_terms": report.shortest_terms,
        "relation": str(report.relation),
        "matches_bundled_up_to_signed_permutation": report.matches_bundled,
        "closure_rank": report.closure_rank,
        "closure_equals_nullspace": report.closure_equals_nullspace,
        "character": report.character,
        "decomposition": _label_map(report.decomposition, symrep.partition_label),
        "conjugate_decomposition": _label_map(
            report.conjugate_decomposition, symrep.partition_label
        ),
        "labeling_note": report.labeling_note,
    }


def _arity7_payload(report) -> dict:
    return {
        "prime": report.p,
        "basis_size": report.basis_size,
        "con_cumulative_ranks": report.con_ranks,
        "dim_con": report.dim_con,
        "expansion_rank": report.expansion_rank,
        "nullity": report.nullity,
        "dim_new": report.dim_new,
        "row_weight_min": report.row_weight_min,
        "row_weight_max": report.row_weight_max,
        "filtration": report.filtration,
        "generator_coefficients": report.generator_coefficients,
        "bundled_relation_rank_with_con": report.bundled_rank,
        "partitions": report.table_partitions,
        "tables": report.tables,
        "multiplicities": report.multiplicities,
        "dimension_audits": report.dimension_audits,
        "quotient_dims": report.quotient_dims,
        "reference_mismatches": report.reference_mismatches,
        "second_prime": report.second_prime,
        "second_prime_agrees": report.second_prime_agrees,
    }


def _dump_matrices(requests: list[tuple[str, str]], prime: int | None) -> None:
    from . import expansion, linalg
    from .linalg import GF, ZZ, ExactMatrix

    known = {"E3": 3, "E5": 5, "E7": 7}
    for name, path in requests:
        if name not in known:
            raise SystemExit(f"unknown matrix {name!r}; available: {', '.join(known)}")
        n = known[name]
        if n == 7:
            data = expansion.expansion_matrix(n, prime)
            mat = ExactMatrix(GF(prime), data)
        else:
            data = expansion.expansion_matrix(n)
            mat = ExactMatrix(ZZ, [[int(x) for x in row] for row in data])
        mat.dump(path)


# ---------------------------------------------------------------------------
# command implementations


def _cmd_sanity(args) -> int:
    from . import pipeline

    checks = pipeline.sanity_checks()
    _emit({"checks": checks}, args.format)
    failing = [name for name, ok in checks.items() if not ok]
    if failing:
        print(f"FAILED: {failing[0]}", file=sys.stderr)
        return 1
    return 0


def _cmd_znf(args) -> int:
    from . import words

    element = words.znf_element(words.parse_binary(args.monomial))
    if args.format == "json":
        _emit(
            {
                "monomial": args.monomial,
                "terms": [[words.format_word(w), c] for w, c in element.terms()],
            },
            "json",
        )
    else:
        print(element)
    return 0


def _cmd_expand(args) -> int:
    from . import expansion, ternary

    mono = ternary.parse_ternary(args.monomial)
    sign, canonical = ternary.straighten(mono)
    element = expansion.expand(canonical)
    if sign < 0:
        element = -element
    if args.format == "json":
        _emit(
            {"monomial": args.monomial, "signs": element.sign_string()},
            "json",
        )
    else:
        for line in expansion.sign_matrix_string(element):
            print(line)
    return 0


def _cmd_arity5(args) -> int:
    from . import pipeline

    _dump_matrices(args.dump_matrix, None)
    report = pipeline.run_arity5(args.delta)
    _emit(_arity5_payload(report), args.format)
    if args.figures:
        from . import figures

        for path in figures.render_arity5(report, args.figures):
            print(f"wrote {path}", file=sys.stderr)
    if not (report.closure_equals_nullspace and report.nullity == 30):
        print("FAILED: closure_equals_nullspace", file=sys.stderr)
        return 1
    return 0


def _cmd_arity7(args) -> int:
    from . import pipeline

    _dump_matrices(args.dump_matrix, args.prime)
    progress = None if args.quiet else lambda m: print(m, file=sys.stderr, flush=True)
    report = pipeline.run_arity7(args.prime, progress=progress)
    _emit(_arity7_payload(report), args.format)
    if args.figures:
        from . import figures

        for path in figures.render_arity7(report, args.figures):
            print(f"wrote {path}", file=sys.stderr)
    if not report.second_prime_agrees:
        print("FAILED: second_prime_agrees", file=sys.stderr)
        return 1
    return 0


def _cmd_rep(args) -> int:
    from . import expansion, pipeline, symrep, ternary

    lam = symrep.parse_partition(args.partition)
    if sum(lam) != args.arity:
        raise SystemExit(f"partition {args.partition} is not a partition of {args.arity}")
    p = args.prime
    sym_rows = [{t: elt} for t, elt in pipeline.type_symmetries(7)]
    con_rows = [pipeline._block_row(c) for c in ternary.consequences(pipeline.tt_relation())]
    new_row = pipeline._block_row(pipeline.new_arity7_relation())
    signs = expansion.base_sign_vectors(7)
    row = {
        "partition": symrep.partition_label(lam),
        "dimension": symrep.dimension(lam),
        "sym": symrep.stacked_rank(lam, sym_rows, 6, 7, p),
        "symcon": symrep.stacked_rank(lam, sym_rows + con_rows, 6, 7, p),
        "symconnew": symrep.stacked_rank(lam, sym_rows + con_rows + [new_row], 6, 7, p),
        "exp": symrep.expansion_rank(lam, signs, 7, p),
        "nul": symrep.isotypic_nullity(lam, signs, 7, p),
    }
    _emit(row, args.format)
    return 0


def _cmd_verify_figure2(args) -> int:
    from . import pipeline

    progress = None if args.quiet else lambda m: print(m, file=sys.stderr, flush=True)
    report = pipeline.verify_bundled_relation(args.prime, progress=progress)
    _emit(
        {
            "term_count": report.term_count,
            "coefficients": report.coefficients,
            "expansion_is_zero": report.expansion_is_zero,
            "rank_with_con": report.rank_with_con,
            "dim_con": report.dim_con,
            "ok": report.ok,
        },
        args.format,
    )
    if not report.ok:
        checks = {
            "term_count": report.term_count == 60,
            "expansion_is_zero": report.expansion_is_zero,
            "rank_with_con": report.rank_with_con == report.dim_con + 106,
        }
        failing = next(name for name, ok in checks.items() if not ok)
        print(f"FAILED: {failing}", file=sys.stderr)
        return 1
    return 0


_COMMANDS = {
    "sanity": _cmd_sanity,
    "znf": _cmd_znf,
    "expand": _cmd_expand,
    "arity5": _cmd_arity5,
    "arity7": _cmd_arity7,
    "rep": _cmd_rep,
    "verify-figure2": _cmd_verify_figure2,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_usage(sys.stderr)
        return 2
    if args.threads is not None:
        for var in ("OMP_NUM_THREADS", "OPENBLAS_NUM_THREADS", "MKL_NUM_THREADS"):
            os.environ[var] = str(args.threads)
    try:
        return _COMMANDS[args.command](args)
    except (ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

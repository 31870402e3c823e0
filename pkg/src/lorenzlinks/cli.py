"""Command-line front end and the census ("atlas") builder.

The atlas is a JSON-lines file, one record per canonical word in
(length, spelling) order, every field recomputable from the word alone.
Records are emitted compactly with a fixed key order, so rebuilding an atlas
with the same arguments is byte-identical.  Generation is embarrassingly
parallel by word length (the merge would be a sorted concatenation), but the
built-in builder is sequential.

Subcommands: word info, convert, jones, modular {encode, decode, rademacher},
flow itinerary, atlas {build, query}.  Exit codes: 0 success, 2 validation
error, 3 resource cap exceeded, 4 I/O failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Iterable, Iterator, Sequence, TextIO

from . import braid as braid_mod
from . import flow as flow_mod
from . import invariants as inv_mod
from . import jones as jones_mod
from . import modular as mod_mod
from . import tlink as tlink_mod
from . import words as words_mod
from .errors import (
    AmbiguousSymbolError,
    BadFilterError,
    CapExceededError,
    NonFiniteError,
    ResourceCapError,
    ValidationError,
)

DEFAULT_ATLAS_CAP = 18
_FILTER_OPS = ("<=", ">=", "!=", "=", "<", ">")


# ---------------------------------------------------------------------------
# atlas records


def word_record(word: words_mod.CyclicWord, jones_max_crossings: int = 0) -> dict:
    """The full atlas record of one canonical word; every field derives from it."""
    link = words_mod.LinkWords((word,))
    braid = braid_mod.braid_of_words(link)
    profile = braid_mod.strand_profile(braid)
    record = inv_mod.compute_record(braid)
    jones_pairs = None
    if jones_max_crossings and profile.crossings <= jones_max_crossings:
        gens = braid_mod.braid_generators(braid)
        poly = jones_mod.jones_of_braid(gens, braid.n, max_crossings=jones_max_crossings)
        jones_pairs = [list(pair) for pair in poly.pairs()]
    return {
        "word": str(word),
        "length": len(word),
        "components": record.components,
        "n": record.strands,
        "c": record.crossings,
        "trip": [list(pq) for pq in profile.trip],
        "LL": profile.ll,
        "LR": profile.lr,
        "RL": profile.rl,
        "RR": profile.rr,
        "genus": record.genus,
        "chi": record.chi,
        "braid_index": record.braid_index,
        "c_min": record.min_crossings,
        "torus": list(record.torus) if record.torus else None,
        "jones": jones_pairs,
    }


def build_atlas(
    max_len: int,
    jones_max_crossings: int = 0,
    cap: int = DEFAULT_ATLAS_CAP,
) -> Iterator[str]:
    """JSON lines for every canonical word of length <= max_len, in
    (length, spelling) order.  Raises CapExceededError beyond the cap."""
    if max_len > cap:
        raise CapExceededError(f"max_len {max_len} exceeds the cap of {cap}")
    for word in words_mod.enumerate_words(max_len):
        yield json.dumps(word_record(word, jones_max_crossings), separators=(",", ":"))


def verify_record(record: dict) -> None:
    """Consistency relations every atlas record must satisfy on load."""
    n, c = record["n"], record["c"]
    if record["chi"] != n - c:
        raise ValidationError(f"corrupt atlas record {record['word']}: chi != n - c")
    if record["LL"] + record["LR"] + record["RL"] + record["RR"] != n:
        raise ValidationError(f"corrupt atlas record {record['word']}: ear counts != n")
    if record["LR"] != record["RL"]:
        raise ValidationError(f"corrupt atlas record {record['word']}: |LR| != |RL|")
    if record["components"] == 1:
        g, bi, c_min = record["genus"], record["braid_index"], record["c_min"]
        if 2 * g != c - n + 1:
            raise ValidationError(f"corrupt atlas record {record['word']}: 2g != c - n + 1")
        if c_min != 2 * g + bi - 1:
            raise ValidationError(f"corrupt atlas record {record['word']}: c_min relation")
        if record["torus"] is not None:
            p, q = record["torus"]
            if g != (p - 1) * (q - 1) // 2:
                raise ValidationError(f"corrupt atlas record {record['word']}: torus genus")


def parse_filter(expression: str) -> tuple[str, str, object]:
    """Parse ``field OP value`` with OP in =, !=, <=, >=, <, >."""
    for op in _FILTER_OPS:
        if op in expression:
            field, _, raw = expression.partition(op)
            field, raw = field.strip(), raw.strip()
            if not field or not raw:
                raise BadFilterError(f"cannot parse filter {expression!r}")
            return field, op, _parse_filter_value(raw)
    raise BadFilterError(f"no comparison operator in {expression!r}")


def _parse_filter_value(raw: str) -> object:
    if raw == "null":
        return None
    try:
        return int(raw)
    except ValueError:
        pass
    try:
        return json.loads(raw)
    except json.JSONDecodeError:
        pass
    if "," in raw and all(part.strip().isdigit() for part in raw.split(",")):
        return [int(part) for part in raw.split(",")]
    return raw


def record_matches(record: dict, filters: Iterable[tuple[str, str, object]]) -> bool:
    for field, op, value in filters:
        if field not in record:
            raise BadFilterError(f"unknown field {field!r}")
        actual = record[field]
        if op == "=":
            if actual != value:
                return False
        elif op == "!=":
            if actual == value:
                return False
        else:
            if actual is None or value is None:
                return False
            try:
                if op == "<=" and not actual <= value:
                    return False
                if op == ">=" and not actual >= value:
                    return False
                if op == "<" and not actual < value:
                    return False
                if op == ">" and not actual > value:
                    return False
            except TypeError as exc:
                raise BadFilterError(
                    f"cannot order {field!r} against {value!r}"
                ) from exc
    return True


def query_atlas(
    lines: Iterable[str], filters: Iterable[tuple[str, str, object]]
) -> Iterator[dict]:
    """Stream records matching every filter, verifying each record on load."""
    filters = list(filters)
    for line in lines:
        line = line.strip()
        if not line:
            continue
        record = json.loads(line)
        verify_record(record)
        if record_matches(record, filters):
            yield record


# ---------------------------------------------------------------------------
# output helpers


def _emit(payload: dict, fmt: str, stream: TextIO) -> None:
    if fmt == "json":
        print(json.dumps(payload, separators=(",", ":")), file=stream)
    elif fmt == "table":
        width = max(len(k) for k in payload)
        for key, value in payload.items():
            print(f"{key:<{width}}  {_plain(value)}", file=stream)
    elif fmt == "csv":
        print(",".join(payload.keys()), file=stream)
        print(",".join(_csv_cell(v) for v in payload.values()), file=stream)
    else:
        raise ValidationError(f"unknown format {fmt!r}")


def _plain(value: object) -> str:
    if value is None:
        return "-"
    if isinstance(value, (list, tuple)):
        return json.dumps(value, separators=(",", ":"))
    return str(value)


def _csv_cell(value: object) -> str:
    text = _plain(value)
    if "," in text or '"' in text:
        return '"' + text.replace('"', '""') + '"'
    return text


# ---------------------------------------------------------------------------
# subcommand handlers


def _cmd_word_info(args: argparse.Namespace) -> int:
    word = words_mod.canonicalize(args.word)
    link = words_mod.LinkWords((word,))
    braid = braid_mod.braid_of_words(link)
    sequences = braid_mod.position_sequences(link)
    record = word_record(word)
    payload = {
        "word": record["word"],
        "length": record["length"],
        "new_positions": list(sequences[0]),
        "targets": list(braid.targets),
        "over_strands": len(braid.over_positions),
        "under_strands": len(braid.under_positions),
        **{k: record[k] for k in (
            "trip", "LL", "LR", "RL", "RR", "components", "n", "c",
            "genus", "chi", "braid_index", "c_min", "torus",
        )},
    }
    _emit(payload, args.format, sys.stdout)
    return 0


def _parse_pairs(text: str) -> tlink_mod.TLinkParams:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"cannot parse parameter list {text!r}: {exc}") from exc
    if not isinstance(data, list) or not all(
        isinstance(pq, list) and len(pq) == 2 for pq in data
    ):
        raise ValidationError("parameters must be a JSON array of [p, q] pairs")
    return tlink_mod.TLinkParams.from_pairs(data)


def _braid_from_source(source: str) -> braid_mod.LorenzBraid:
    if source.lstrip().startswith("["):
        return tlink_mod.to_lorenz(_parse_pairs(source))
    return braid_mod.braid_of_words(words_mod.validate_link([source]))


def _cmd_convert(args: argparse.Namespace) -> int:
    braid = _braid_from_source(args.source)
    if args.to == "braid":
        _emit(braid.to_json_dict(), args.format, sys.stdout)
    elif args.to == "tlink":
        payload = {"pairs": tlink_mod.from_lorenz(braid).to_json_list()}
        _emit(payload, args.format, sys.stdout)
    elif args.to == "word":
        payload = {"words": [str(w) for w in braid_mod.words_of_braid(braid)]}
        _emit(payload, args.format, sys.stdout)
    return 0


def _cmd_jones(args: argparse.Namespace) -> int:
    tokens = [tok.strip() for tok in args.target.split(",")]
    if all(tok.isdigit() for tok in tokens) and len(tokens) == 2:
        p, q = (int(tok) for tok in tokens)
        poly = jones_mod.jones_torus(p, q)
        source = f"torus({p},{q})"
    else:
        link = words_mod.validate_link(tokens)
        braid = braid_mod.braid_of_words(link)
        gens = braid_mod.braid_generators(braid)
        poly = jones_mod.jones_of_braid(
            gens, braid.n, max_crossings=args.jones_max_crossings
        )
        source = ",".join(str(w) for w in link.words)
    payload = {
        "source": source,
        "jones": poly.format(),
        "pairs": [list(pair) for pair in poly.pairs()],
    }
    _emit(payload, args.format, sys.stdout)
    return 0


def _cmd_modular(args: argparse.Namespace) -> int:
    if args.action == "encode":
        matrix = mod_mod.matrix_of_word(args.value)
        _emit({"matrix": matrix.to_rows(), "trace": matrix.trace}, args.format, sys.stdout)
    elif args.action == "decode":
        try:
            rows = json.loads(args.value)
        except json.JSONDecodeError as exc:
            raise ValidationError(f"cannot parse matrix {args.value!r}: {exc}") from exc
        word = mod_mod.word_of_matrix(mod_mod.Mat2Z.from_rows(rows))
        _emit({"word": str(word)}, args.format, sys.stdout)
    else:  # rademacher
        word = words_mod.canonicalize(args.value)
        value = mod_mod.rademacher(word)
        matrix = mod_mod.matrix_of_word(word)
        payload = {
            "word": str(word),
            "rademacher": value,
            "phi": str(mod_mod.rademacher_phi(matrix)),
            "psi": mod_mod.rademacher_psi(matrix),
        }
        _emit(payload, args.format, sys.stdout)
    return 0


def _cmd_flow_itinerary(args: argparse.Namespace) -> int:
    seed = [float(part) for part in args.seed_state.split(",")]
    if len(seed) != 3:
        raise ValidationError("seed state must be x,y,z")
    trajectory = flow_mod.integrate(seed, dt=args.dt, steps=args.steps)
    if args.csv:
        with open(args.csv, "w", newline="") as handle:
            trajectory.write_csv(handle)
    symbols = flow_mod.itinerary(trajectory, skip_transient=args.skip_transient)
    print(symbols)
    return 0


def _cmd_atlas_build(args: argparse.Namespace) -> int:
    count = 0
    with open(args.out, "w") as handle:
        for line in build_atlas(
            args.max_len, jones_max_crossings=args.jones_max_crossings, cap=args.cap
        ):
            handle.write(line + "\n")
            count += 1
    print(f"wrote {count} records to {args.out}")
    return 0


def _cmd_atlas_query(args: argparse.Namespace) -> int:
    filters = [parse_filter(expr) for expr in args.where or []]
    with open(args.atlas) as handle:
        first = True
        for record in query_atlas(handle, filters):
            if args.format == "json":
                print(json.dumps(record, separators=(",", ":")))
            elif args.format == "csv":
                if first:
                    print(",".join(record.keys()))
                print(",".join(_csv_cell(v) for v in record.values()))
            else:
                if not first:
                    print()
                _emit(record, "table", sys.stdout)
            first = False
    return 0


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lorenzlinks",
        description="Lorenz links: words, braids, T-links, invariants, census.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("json", "table", "csv"), default="json")

    word = sub.add_parser("word", help="word-level operations")
    word_sub = word.add_subparsers(dest="action", required=True)
    info = word_sub.add_parser("info", help="braid and invariants of one word")
    info.add_argument("word")
    add_format(info)
    info.set_defaults(func=_cmd_word_info)

    convert = sub.add_parser("convert", help="convert between parametrizations")
    convert.add_argument("source", help="a word, or a JSON array of [p,q] pairs")
    convert.add_argument("--to", choices=("braid", "tlink", "word"), required=True)
    add_format(convert)
    convert.set_defaults(func=_cmd_convert)

    jones = sub.add_parser("jones", help="Jones polynomial of words or a torus knot")
    jones.add_argument("target", help="comma-separated words, or 'p,q' integers")
    jones.add_argument(
        "--jones-max-crossings", type=int, default=jones_mod.DEFAULT_MAX_CROSSINGS
    )
    add_format(jones)
    jones.set_defaults(func=_cmd_jones)

    modular = sub.add_parser("modular", help="matrix classes and Rademacher values")
    modular.add_argument("action", choices=("encode", "decode", "rademacher"))
    modular.add_argument("value", help="a word, or a JSON matrix for decode")
    add_format(modular)
    modular.set_defaults(func=_cmd_modular)

    flow = sub.add_parser("flow", help="integrate the ODE system")
    flow_sub = flow.add_subparsers(dest="action", required=True)
    itin = flow_sub.add_parser("itinerary", help="LR symbols of a trajectory")
    itin.add_argument("--seed-state", default="1,1,1")
    itin.add_argument("--dt", type=float, default=None)
    itin.add_argument("--steps", type=int, default=40000)
    itin.add_argument("--skip-transient", type=float, default=10.0)
    itin.add_argument("--csv", default=None, help="also dump the trajectory as CSV")
    itin.set_defaults(func=_cmd_flow_itinerary)

    atlas = sub.add_parser("atlas", help="build and query the word census")
    atlas_sub = atlas.add_subparsers(dest="action", required=True)
    build = atlas_sub.add_parser("build", help="write a JSON-lines census")
    build.add_argument("--max-len", type=int, required=True)
    build.add_argument("--jones-max-crossings", type=int, default=0)
    build.add_argument("--out", required=True)
    build.add_argument("--cap", type=int, default=DEFAULT_ATLAS_CAP)
    build.set_defaults(func=_cmd_atlas_build)
    query = atlas_sub.add_parser("query", help="stream matching records")
    query.add_argument("atlas")
    query.add_argument(
        "--where", action="append", default=[],
        help="conjunctive filter, e.g. genus=5, c_min<=3, torus=null",
    )
    add_format(query)
    query.set_defaults(func=_cmd_atlas_query)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValidationError, NonFiniteError, AmbiguousSymbolError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ResourceCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4


def run() -> None:
    """Console entry point."""
    sys.exit(main())


if __name__ == "__main__":
    run()

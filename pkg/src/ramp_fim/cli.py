"""Command-line front end.

    ramp-fim mine --mode all --min-sup 0.01 --input data.dat --sorted
    ramp-fim oracle --mode closed --min-sup 2 --input small.dat
    ramp-fim gen --transactions 100000 --items 1000 --avg-len 10 --patterns 200 --seed 7
    ramp-fim bench --mode max --min-sup 50 --input data.dat --repeat 5

Results go to stdout (or ``--output``) as ``i1 i2 ... ik (support)`` lines;
the summary and any warnings go to stderr. Exit codes: 0 ok, 2 input parse
error, 3 I/O error, 4 invalid configuration.
"""
from __future__ import annotations

import argparse
import statistics
import sys
import time
from dataclasses import dataclass
from typing import Callable, Iterable, TextIO

from .bitvec import width_from_env
from .dataset import ParseError, absolute_min_sup, build_root_index, parse_transactions
from .mine_all import ramp_all
from .mine_closed import ramp_closed
from .mine_max import ramp_max
from .oracle import apriori_all, closed_filter, maximal_filter
from .search import MineOptions
from .synthetic import gen_synthetic

EXIT_OK, EXIT_PARSE, EXIT_IO, EXIT_CONFIG = 0, 2, 3, 4
DEFAULT_BUFFER = 4096


class ConfigError(ValueError):
    pass


def render_itemset_line(items: Iterable[int], support: int) -> str:
    return f"{' '.join(map(str, items))} ({support})\n"


class OutputBuffer:
    """Collects rendered lines and writes them to ``stream`` in batches.

    A physical write happens every ``threshold`` lines and once more on
    :meth:`close` if anything is pending.
    """

    def __init__(self, stream: TextIO, threshold: int = DEFAULT_BUFFER):
        if threshold < 1:
            raise ValueError("buffer threshold must be >= 1")
        self.stream = stream
        self.threshold = threshold
        self.pending: list[str] = []
        self.lines = 0
        self.writes = 0

    def write(self, line: str) -> None:
        self.pending.append(line)
        if len(self.pending) >= self.threshold:
            self.flush()

    def flush(self) -> None:
        if self.pending:
            self.stream.write("".join(self.pending))
            self.writes += 1
            self.lines += len(self.pending)
            self.pending.clear()

    def close(self) -> None:
        self.flush()
        self.stream.flush()


def write_itemsets_buffered(buffer: OutputBuffer, line: str) -> None:
    buffer.write(line)


@dataclass
class MineConfig:
    mode: str = "all"
    min_sup: str = "1"
    input: str | None = None
    output: str | None = None
    pair_prune: bool = True
    pep: bool = True
    fhut: bool = True
    hutmfi: bool = True
    erfco: bool = True
    projection: str = "pbr"
    order: str = "support"
    row_order: str = "clustered"
    subsumption: str = "lind"
    width: int | None = None
    sorted: bool = False
    buffer_size: int = DEFAULT_BUFFER

    def validate(self) -> None:
        if self.mode not in ("all", "max", "closed"):
            raise ConfigError(f"unknown mode {self.mode!r}")
        if self.mode == "all":
            off = [n for n in ("pep", "fhut", "hutmfi") if not getattr(self, n)]
            if off:
                raise ConfigError(f"--no-{off[0]} only applies to --mode max/closed")
        if self.buffer_size < 1:
            raise ConfigError("--buffer must be >= 1")
        text = str(self.min_sup).strip()
        try:
            if any(c in text for c in ".eE"):
                value = float(text)
                if not 0 < value <= 1:
                    raise ConfigError(f"fractional --min-sup must lie in (0, 1], got {text}")
            elif int(text) < 1:
                raise ConfigError(f"absolute --min-sup must be >= 1, got {text}")
        except ValueError as exc:
            if isinstance(exc, ConfigError):
                raise
            raise ConfigError(f"--min-sup must be an integer or a fraction, got {text!r}") from None

    def options(self) -> MineOptions:
        return MineOptions(
            pair_prune=self.pair_prune,
            pep=self.pep,
            fhut=self.fhut,
            hutmfi=self.hutmfi,
            erfco=self.erfco,
            projection=self.projection,
            order=self.order,
            subsumption=self.subsumption,
        )


def _open_input(path: str | None, stdin: TextIO):
    if path is None or path == "-":
        return parse_transactions(stdin)
    with open(path, "r", encoding="ascii") as fh:
        return parse_transactions(fh)


def mine_db(db, config: MineConfig, emit: Callable[[tuple, int], None]) -> int:
    """Mine ``db`` per ``config``, calling ``emit`` for each result; return the count."""
    width = config.width or width_from_env()
    min_sup = absolute_min_sup(config.min_sup, len(db))
    root = build_root_index(db, min_sup, width, config.row_order)
    opts = config.options()
    if config.mode == "all":
        return ramp_all(root, min_sup, emit, opts)
    found = (ramp_max if config.mode == "max" else ramp_closed)(root, min_sup, opts)
    for items, support in found:
        emit(items, support)
    return len(found)


def oracle_db(db, config: MineConfig, emit: Callable[[tuple, int], None]) -> int:
    min_sup = absolute_min_sup(config.min_sup, len(db))
    fi = apriori_all(db, min_sup)
    if config.mode == "max":
        fi = maximal_filter(fi)
    elif config.mode == "closed":
        fi = closed_filter(fi)
    for items, support in fi.items():
        emit(items, support)
    return len(fi)


def _run(config: MineConfig, engine, stdin: TextIO, stdout: TextIO, stderr: TextIO) -> int:
    try:
        config.validate()
    except ConfigError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_CONFIG
    try:
        db = _open_input(config.input, stdin)
    except ParseError as exc:
        print(f"error: parse error in {config.input or '<stdin>'}: {exc}", file=stderr)
        return EXIT_PARSE
    except (OSError, UnicodeDecodeError) as exc:
        print(f"error: cannot read {config.input}: {exc}", file=stderr)
        return EXIT_IO

    sink_stream = None
    started = time.perf_counter()
    try:
        sink_stream = stdout if config.output in (None, "-") else open(config.output, "w", encoding="ascii")
        buf = OutputBuffer(sink_stream, config.buffer_size)
        if config.sorted:
            held: list[tuple[tuple, int]] = []
            count = engine(db, config, lambda items, sup: held.append((items, sup)))
            held.sort()
            for items, sup in held:
                buf.write(render_itemset_line(items, sup))
        else:
            count = engine(db, config, lambda items, sup: buf.write(render_itemset_line(items, sup)))
        buf.close()
    except OSError as exc:
        print(f"error: write failed: {exc}; output may be partial", file=stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_CONFIG
    finally:
        if sink_stream is not None and sink_stream is not stdout:
            sink_stream.close()
    elapsed = time.perf_counter() - started
    width = config.width or width_from_env()
    print(f"{count} itemsets in {elapsed:.3f}s (mode={config.mode}, width={width})", file=stderr)
    return EXIT_OK


def run_mine(config: MineConfig, stdin=None, stdout=None, stderr=None) -> int:
    return _run(config, mine_db, stdin or sys.stdin, stdout or sys.stdout, stderr or sys.stderr)


def run_oracle(config: MineConfig, stdin=None, stdout=None, stderr=None) -> int:
    return _run(config, oracle_db, stdin or sys.stdin, stdout or sys.stdout, stderr or sys.stderr)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_CONFIG, f"{self.prog}: error: {message}\n")


def _add_data_flags(p: argparse.ArgumentParser, toggles: bool) -> None:
    p.add_argument("--mode", choices=["all", "max", "closed"], default="all")
    p.add_argument("--min-sup", required=True, help="absolute count or fraction in (0, 1]")
    p.add_argument("--input", help="FIMI file (default stdin)")
    p.add_argument("--output", help="result file (default stdout)")
    p.add_argument("--sorted", action="store_true", help="sort result lines by item sequence")
    p.add_argument("--buffer", type=int, default=DEFAULT_BUFFER, help="itemsets per physical write")
    if not toggles:
        return
    p.add_argument("--no-pair-prune", dest="pair_prune", action="store_false")
    p.add_argument("--no-pep", dest="pep", action="store_false")
    p.add_argument("--no-fhut", dest="fhut", action="store_false")
    p.add_argument("--no-hutmfi", dest="hutmfi", action="store_false")
    p.add_argument("--no-erfco", "--no-ercfo", dest="erfco", action="store_false")
    p.add_argument("--projection", choices=["pbr", "full"], default="pbr")
    p.add_argument("--order", choices=["support", "lexicographic"], default="support")
    p.add_argument("--row-order", choices=["clustered", "original"], default="clustered")
    p.add_argument("--subsumption", choices=["lind", "scan"], default="lind")
    p.add_argument("--width", type=int, choices=[1, 8, 16, 32, 64], help="word width (default $RAMP_WORD_WIDTH or 64)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ramp-fim", description="Frequent itemset mining over projected bit-vectors.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    _add_data_flags(sub.add_parser("mine", help="mine all / maximal / closed itemsets"), True)
    _add_data_flags(sub.add_parser("oracle", help="brute-force Apriori reference"), False)
    bench = sub.add_parser("bench", help="time repeated mine runs")
    _add_data_flags(bench, True)
    bench.add_argument("--repeat", type=int, default=5)
    gen = sub.add_parser("gen", help="write a synthetic FIMI dataset")
    gen.add_argument("--transactions", type=int, required=True)
    gen.add_argument("--items", type=int, required=True)
    gen.add_argument("--avg-len", type=float, required=True)
    gen.add_argument("--patterns", type=int, required=True)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--noise", type=float, default=0.1)
    gen.add_argument("--output")
    return parser


def _config(ns: argparse.Namespace) -> MineConfig:
    fields = MineConfig.__dataclass_fields__
    kw = {k: v for k, v in vars(ns).items() if k in fields}
    kw["buffer_size"] = ns.buffer
    return MineConfig(**kw)


def _bench(config: MineConfig, repeat: int, stdin, stderr) -> int:
    try:
        config.validate()
        db = _open_input(config.input, stdin)
    except ConfigError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_CONFIG
    except ParseError as exc:
        print(f"error: parse error: {exc}", file=stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_IO
    times = []
    count = 0
    for _ in range(max(1, repeat)):
        t0 = time.perf_counter()
        count = mine_db(db, config, lambda items, sup: None)
        times.append(time.perf_counter() - t0)
    print(f"{count} itemsets; median {statistics.median(times):.4f}s over {len(times)} runs", file=stderr)
    return EXIT_OK


def main(argv: list[str] | None = None, stdin=None, stdout=None, stderr=None) -> int:
    stdin, stdout, stderr = stdin or sys.stdin, stdout or sys.stdout, stderr or sys.stderr
    ns = build_parser().parse_args(argv)
    if ns.command == "gen":
        try:
            db = gen_synthetic(ns.transactions, ns.items, ns.avg_len, ns.patterns, ns.seed, ns.noise)
        except ValueError as exc:
            print(f"error: {exc}", file=stderr)
            return EXIT_CONFIG
        try:
            if ns.output in (None, "-"):
                stdout.write(db.to_fimi())
            else:
                with open(ns.output, "w", encoding="ascii") as fh:
                    fh.write(db.to_fimi())
        except OSError as exc:
            print(f"error: {exc}", file=stderr)
            return EXIT_IO
        return EXIT_OK
    config = _config(ns)
    if ns.command == "mine":
        return run_mine(config, stdin, stdout, stderr)
    if ns.command == "oracle":
        return run_oracle(config, stdin, stdout, stderr)
    return _bench(config, ns.repeat, stdin, stderr)


if __name__ == "__main__":
    sys.exit(main())

"""Command-line driver: run a command stream or benchmark the index against
the rerun-from-scratch baseline."""

from __future__ import annotations

import argparse
import random
import statistics
import sys
import time

from .blocks import TwoEcIndex, blocks_snapshot, static_blocks
from .graph import Digraph
from .oracle import oracle_blocks, oracle_scc, oracle_strong_bridges, oracle_two_ec, reaches_without
from .query import are_two_edge_connected, separating_edge

ORACLE_MAX_N = 200


class StreamError(Exception):
    """Parse or contract error, tagged with a 1-based line number."""

    def __init__(self, line: int, msg: str):
        super().__init__(f"line {line}: {msg}")
        self.line = line


class OracleMismatch(Exception):
    pass


_ARITY = {"graph": 1, "insert": 2, "query2ec": 2, "blocks": 0, "bridges": 0, "dump-dom": 0}


def parse_stream(text: str):
    """Yield ``(line number, command, int args)``; validates arity and that
    ``graph`` comes first, exactly once."""
    seen_graph = False
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        cmd, rest = parts[0], parts[1:]
        if cmd not in _ARITY:
            raise StreamError(no, f"unknown command {cmd!r}")
        if len(rest) != _ARITY[cmd]:
            raise StreamError(no, f"{cmd} takes {_ARITY[cmd]} argument(s)")
        try:
            args = [int(a) for a in rest]
        except ValueError:
            raise StreamError(no, f"non-integer argument in {line!r}") from None
        if cmd == "graph":
            if seen_graph:
                raise StreamError(no, "graph given twice")
            seen_graph = True
        elif not seen_graph:
            raise StreamError(no, "stream must start with 'graph n'")
        yield no, cmd, args


def _dump_dom(index: TwoEcIndex) -> list:
    lines = []
    for sid in sorted(index.states, key=lambda t: min(index.states[t].vertices)):
        st = index.states[sid]
        for name, dom in (("fwd", st.fwd), ("rev", st.rev)):
            lines.append(f"dom {name} {st.s} {len(st.vertices)}")
            lines.extend(dom.dump().splitlines())
    return lines


def _oracle_fail(no, what, got, want, index):
    msg = [f"oracle mismatch at line {no}: {what}", f"  engine: {got}", f"  oracle: {want}",
           f"  edges: {list(index.g.edges())}"]
    raise OracleMismatch("\n".join(msg))


def run_stream(text: str, engine: str = "twoway", oracle_check: bool = False,
               metrics: bool = False, out=None) -> str:
    """Execute a command stream and return its output text.  Raises
    :class:`StreamError` or :class:`OracleMismatch`."""
    lines: list = []
    emit = lines.append
    index = None
    for no, cmd, args in parse_stream(text):
        if cmd == "graph":
            n = args[0]
            if n < 1:
                raise StreamError(no, "graph needs n >= 1")
            if oracle_check and n > ORACLE_MAX_N:
                raise StreamError(no, f"--oracle-check supports n <= {ORACLE_MAX_N}")
            index = TwoEcIndex(n, engine)
            continue
        for v in args:
            if not 1 <= v <= index.n:
                raise StreamError(no, f"vertex {v} out of range [1, {index.n}]")
        if cmd == "insert":
            u, v = args
            if index.insert_edge(u, v) is None:
                emit(f"noop {u} {v}")
        elif cmd == "query2ec":
            u, v = args
            ok = are_two_edge_connected(index, u, v)
            if ok:
                emit(f"2ec {u} {v} true")
            else:
                w = separating_edge(index, u, v)
                tail = f"witness {w.edge[0]} {w.edge[1]}" if w.edge else "nsc"
                emit(f"2ec {u} {v} false {tail}")
            if oracle_check:
                _check_query(no, index, u, v, ok, None if ok else w)
        elif cmd == "blocks":
            blocks = blocks_snapshot(index)
            emit(f"blocks {len(blocks)}")
            for b in blocks:
                emit("block " + " ".join(map(str, b)))
            if oracle_check:
                want = oracle_blocks(index.g)
                if want != blocks:
                    _oracle_fail(no, "blocks", blocks, want, index)
        elif cmd == "bridges":
            bridges = index.strong_bridges()
            for a, b in bridges:
                emit(f"bridge {a} {b}")
            if oracle_check:
                want = sorted(oracle_strong_bridges(index.g))
                if want != bridges:
                    _oracle_fail(no, "bridges", bridges, want, index)
        elif cmd == "dump-dom":
            lines.extend(_dump_dom(index))
    if index is None:
        raise StreamError(0, "empty stream (missing 'graph n')")
    if metrics:
        for k, v in index.metrics.as_dict(index).items():
            emit(f"# metric {k} {v}")
    return "\n".join(lines) + ("\n" if lines else "")


def _check_query(no, index, u, v, ok, w):
    g = index.g
    want = u == v or oracle_two_ec(g, u, v)
    if want != ok:
        _oracle_fail(no, f"query2ec {u} {v}", ok, want, index)
    if ok:
        return
    if w.edge is None:
        comp = {x: i for i, c in enumerate(oracle_scc(g)) for x in c}
        if comp[u] == comp[v]:
            _oracle_fail(no, f"witness {u} {v}", "nsc", "same SCC", index)
    elif reaches_without(g, u, v, w.edge) and reaches_without(g, v, u, w.edge):
        _oracle_fail(no, f"witness {u} {v}", w.edge, "edge does not separate", index)


# -- benchmark ---------------------------------------------------------------

def random_sequence(n: int, m: int, seed: int) -> list:
    """``m`` distinct non-loop pairs (capped at ``n(n-1)``), seeded."""
    rng = random.Random(seed)
    total = n * (n - 1)
    m = min(m, total)
    if m * 2 > total:
        pairs = [(u, v) for u in range(1, n + 1) for v in range(1, n + 1) if u != v]
        rng.shuffle(pairs)
        return pairs[:m]
    seen = set()
    seq = []
    while len(seq) < m:
        u, v = rng.randint(1, n), rng.randint(1, n)
        if u != v and (u, v) not in seen:
            seen.add((u, v))
            seq.append((u, v))
    return seq


def _percentiles(times: list) -> dict:
    if len(times) < 2:
        t = times[0] if times else 0.0
        return {"p50": t, "p90": t, "p99": t, "max": t}
    q = statistics.quantiles(times, n=100, method="inclusive")
    return {"p50": q[49], "p90": q[89], "p99": q[98], "max": max(times)}


def bench(n: int, m: int, seed: int = 1, engine: str = "twoway", baseline: bool = True) -> dict:
    """Time the incremental index and (optionally) the baseline that reruns
    the static labeling after every insertion; asserts equal final blocks."""
    if n < 2 or m < 1:
        raise ValueError("bench needs n >= 2 and m >= 1")
    seq = random_sequence(n, m, seed)
    clock = time.perf_counter
    index = TwoEcIndex(n, engine)
    inc_times = []
    t0 = clock()
    for u, v in seq:
        t = clock()
        index.insert_edge(u, v)
        inc_times.append(clock() - t)
    inc_total = clock() - t0
    final = blocks_snapshot(index)
    report = {"n": n, "m": len(seq), "seed": seed, "engine": engine,
              "incremental_total": inc_total}
    report.update({f"incremental_{k}": v for k, v in _percentiles(inc_times).items()})
    report.update(index.metrics.as_dict(index))
    if baseline:
        g = Digraph(n)
        base_times = []
        t0 = clock()
        blocks = static_blocks(g)
        for u, v in seq:
            t = clock()
            g.add_edge(u, v)
            blocks = static_blocks(g)
            base_times.append(clock() - t)
        base_total = clock() - t0
        if blocks != final:
            raise AssertionError("incremental and baseline block partitions differ")
        report["baseline_total"] = base_total
        report.update({f"baseline_{k}": v for k, v in _percentiles(base_times).items()})
        report["ratio"] = inc_total / base_total if base_total > 0 else float("inf")
        report["partitions_equal"] = True
    report["blocks"] = len(final)
    return report


# -- entry point -------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="inc2ecb", description="Incremental 2-edge-connected blocks of a digraph.")
    sub = ap.add_subparsers(dest="command")
    run = sub.add_parser("run", help="execute a command stream")
    run.add_argument("input", nargs="?", default="-", help="command file (default: stdin)")
    run.add_argument("output", nargs="?", default="-", help="output file (default: stdout)")
    run.add_argument("--oracle-check", action="store_true", help="verify every answer by brute force (n <= 200)")
    run.add_argument("--engine", choices=("oneway", "twoway"), default="twoway",
                     help="auxiliary-component engine")
    run.add_argument("--metrics", action="store_true", help="append '# metric name value' lines")
    b = sub.add_parser("bench", help="incremental index vs. static rerun per insertion")
    b.add_argument("--n", type=int, default=2000)
    b.add_argument("--m", type=int, default=20000)
    b.add_argument("--seed", type=int, default=1)
    b.add_argument("--engine", choices=("oneway", "twoway"), default="twoway")
    b.add_argument("--no-baseline", action="store_true", help="time only the incremental index")
    return ap


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    if not argv or argv[0] not in ("run", "bench", "-h", "--help"):
        argv.insert(0, "run")
    args = _build_parser().parse_args(argv)
    if args.command == "bench":
        try:
            rep = bench(args.n, args.m, args.seed, args.engine, not args.no_baseline)
        except (ValueError, AssertionError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
        for k, v in rep.items():
            print(f"bench {k} {v:.6f}" if isinstance(v, float) else f"bench {k} {v}")
        return 0
    if args.command != "run":
        _build_parser().print_help(sys.stderr)
        return 1
    try:
        if args.input == "-":
            text = sys.stdin.read()
        else:
            with open(args.input, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    try:
        result = run_stream(text, args.engine, args.oracle_check, args.metrics)
    except StreamError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OracleMismatch as exc:
        print(str(exc), file=sys.stderr)
        return 2
    if args.output == "-":
        sys.stdout.write(result)
    else:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(result)
    return 0


if __name__ == "__main__":
    sys.exit(main())

"""Timing tables over seeded random instances, with cross-method agreement checks."""

from __future__ import annotations

import contextlib
import csv
import io
import signal
import threading
import time
from dataclasses import dataclass, field
from fractions import Fraction

from .arith import format_rational
from .errors import CapExceeded
from .generate import Rng, parse_generator, random_polynomial, random_vertices
from .integrate import count_primitive_forms, integrate

DEFAULT_TIME_LIMIT = 600.0


class TimeLimitExceeded(Exception):
    pass


@contextlib.contextmanager
def time_limit(seconds: float | None):
    """Interrupt the body after ``seconds`` of wall-clock time (main thread only)."""
    if not seconds or threading.current_thread() is not threading.main_thread():
        yield
        return

    def handler(signum, frame):
        raise TimeLimitExceeded(f"time limit of {seconds} s exceeded")

    old = signal.signal(signal.SIGALRM, handler)
    signal.setitimer(signal.ITIMER_REAL, seconds)
    try:
        yield
    finally:
        signal.setitimer(signal.ITIMER_REAL, 0)
        signal.signal(signal.SIGALRM, old)


@dataclass
class BenchConfig:
    dimensions: list
    degrees: list
    instances: int = 5
    generator: str = "monomial"
    seed: int = 0
    time_limit: float = DEFAULT_TIME_LIMIT
    methods: list = field(default_factory=lambda: ["waring", "duality", "laurent"])

    def __post_init__(self):
        if self.instances < 1 or not self.dimensions or not self.degrees or not self.methods:
            raise ValueError("bench needs positive counts and nonempty dimension, degree and method lists")
        if any(n < 1 for n in self.dimensions) or any(M < 0 for M in self.degrees):
            raise ValueError("dimensions must be positive and degrees nonnegative")
        parse_generator(self.generator)


@dataclass
class BenchResult:
    config: BenchConfig
    # (method, n, M) -> list of elapsed seconds, None for a timeout
    timings: dict = field(default_factory=dict)
    skipped: dict = field(default_factory=dict)  # (method, n, M) -> count of cap refusals
    integrals: list = field(default_factory=list)  # per instance: n, M, k, {method: "p/q"}
    disagreements: list = field(default_factory=list)

    def cell(self, method: str, n: int, M: int) -> tuple[float, float, float] | None:
        done = [t for t in self.timings.get((method, n, M), []) if t is not None]
        if not done:
            return None
        return min(done), sum(done) / len(done), max(done)


def run_bench(config: BenchConfig) -> BenchResult:
    kind, D = parse_generator(config.generator)
    result = BenchResult(config)
    for n in config.dimensions:
        for M in config.degrees:
            rng = Rng(config.seed, n, M)
            for k in range(config.instances):
                simplex = random_vertices(rng, n)
                f = random_polynomial(rng, n, M, kind, D if D is None else min(D, n))
                values: dict[str, Fraction] = {}
                for method in config.methods:
                    key = (method, n, M)
                    start = time.perf_counter()
                    try:
                        with time_limit(config.time_limit):
                            value, _ = integrate(simplex, f, method)
                    except TimeLimitExceeded:
                        result.timings.setdefault(key, []).append(None)
                        continue
                    except CapExceeded:
                        result.skipped[key] = result.skipped.get(key, 0) + 1
                        continue
                    result.timings.setdefault(key, []).append(time.perf_counter() - start)
                    values[method] = value
                result.integrals.append({"n": n, "M": M, "instance": k,
                                         "values": {m: format_rational(v) for m, v in values.items()}})
                if len(set(values.values())) > 1:
                    result.disagreements.append({"n": n, "M": M, "instance": k,
                                                 "values": {m: format_rational(v) for m, v in values.items()}})
    return result


def _fmt(seconds: float) -> str:
    return f"{seconds:.1f}"


def to_csv(result: BenchResult) -> str:
    """One block per method: header of degrees, one row per dimension, cells min/avg/max in seconds."""
    cfg = result.config
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["method", "n"] + [str(M) for M in cfg.degrees])
    for method in cfg.methods:
        for n in cfg.dimensions:
            row = [method, str(n)]
            for M in cfg.degrees:
                c = result.cell(method, n, M)
                row.append("" if c is None else "/".join(_fmt(x) for x in c))
            w.writerow(row)
    return buf.getvalue()


def summary(result: BenchResult, include_timings: bool = True) -> dict:
    cfg = result.config
    out = {
        "config": {"dimensions": cfg.dimensions, "degrees": cfg.degrees, "instances": cfg.instances,
                   "generator": cfg.generator, "seed": cfg.seed, "time_limit": cfg.time_limit,
                   "methods": cfg.methods},
        "integrals": result.integrals,
        "disagreements": result.disagreements,
        "all_agree": not result.disagreements,
        "timeouts": {f"{m}/{n}/{M}": sum(1 for t in ts if t is None)
                     for (m, n, M), ts in sorted(result.timings.items()) if any(t is None for t in ts)},
        "skipped": {f"{m}/{n}/{M}": c for (m, n, M), c in sorted(result.skipped.items())},
    }
    if include_timings:
        cells = {}
        for method in cfg.methods:
            for n in cfg.dimensions:
                for M in cfg.degrees:
                    c = result.cell(method, n, M)
                    cells[f"{method}/{n}/{M}"] = None if c is None else [round(x, 1) for x in c]
        out["timings"] = cells
    return out


TABLE1_DIMENSIONS = [2, 3, 4, 5, 8, 10, 15, 20, 30, 40]
TABLE1_DEGREES = [1, 2, 5, 10, 20, 30, 40, 50]


def count_forms_table(dimensions=None, degrees=None) -> list[list[int]]:
    dimensions = dimensions or TABLE1_DIMENSIONS
    degrees = degrees or TABLE1_DEGREES
    return [[count_primitive_forms(n, M) for M in degrees] for n in dimensions]


def count_forms_csv(dimensions=None, degrees=None) -> str:
    dimensions = dimensions or TABLE1_DIMENSIONS
    degrees = degrees or TABLE1_DEGREES
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n"] + [str(M) for M in degrees])
    for n, row in zip(dimensions, count_forms_table(dimensions, degrees)):
        w.writerow([str(n)] + [str(x) for x in row])
    return buf.getvalue()


__all__ = [
    "BenchConfig",
    "BenchResult",
    "TimeLimitExceeded",
    "count_forms_csv",
    "count_forms_table",
    "run_bench",
    "summary",
    "time_limit",
    "to_csv",
]

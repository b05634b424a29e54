"""Wall-clock isolated trial runner and the blowup-vs-axioms benchmark.

Each timed computation runs in a forked worker process so that a trial that
overruns its timeout can be killed without disturbing the others.  The time
reported is measured inside the worker around the computation only.
"""
from __future__ import annotations

import csv
import multiprocessing as mp
import statistics
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable

import numpy as np

from .blowup import intersection_multiplicity
from .fulton import RandomCurveSpec, fulton_im, random_curve
from .poly import BiPoly

__all__ = ["TrialOutcome", "run_isolated", "BenchRow", "bench", "ALGORITHMS"]

_CTX = mp.get_context("fork")


@dataclass
class TrialOutcome:
    value: int | float | None
    micros: int
    dnf: bool = False
    error: str | None = None


def _blowup_value(f: BiPoly, g: BiPoly):
    return intersection_multiplicity(f, g).value


def _axioms_value(f: BiPoly, g: BiPoly):
    return fulton_im(f, g, budget=10**12)


ALGORITHMS: dict[str, Callable] = {"axioms": _axioms_value, "blowup": _blowup_value}


def _worker(conn, fn, args):
    try:
        start = time.perf_counter()
        value = fn(*args)
        micros = max(1, int((time.perf_counter() - start) * 1e6))
        conn.send((value, micros, None))
    except Exception as exc:  # reported to the parent, never raised across the pipe
        conn.send((None, 0, f"{type(exc).__name__}: {exc}"))
    finally:
        conn.close()


def run_isolated(fn: Callable, args: tuple, timeout_s: float) -> TrialOutcome:
    """Run ``fn(*args)`` in a worker; a DNF outcome if it exceeds ``timeout_s``."""
    recv, send = _CTX.Pipe(duplex=False)
    proc = _CTX.Process(target=_worker, args=(send, fn, args), daemon=True)
    proc.start()
    send.close()
    try:
        if recv.poll(timeout_s):
            value, micros, error = recv.recv()
            return TrialOutcome(value, micros, False, error)
        return TrialOutcome(None, int(timeout_s * 1e6), True)
    except EOFError:
        return TrialOutcome(None, 0, False, "worker died")
    finally:
        if proc.is_alive():
            proc.kill()
        proc.join()
        recv.close()


def trial_seeds(seed: int, n: int) -> list[tuple[int, int]]:
    raw = np.random.default_rng(seed).integers(0, 2**63, size=(n, 2))
    return [(int(a), int(b)) for a, b in raw]


@dataclass
class BenchRow:
    """Timings of both algorithms over the same random pairs."""

    degree: int
    multiplicity: int
    trials: int
    values: list = field(default_factory=list)
    outcomes: dict = field(default_factory=dict)

    def completed_ms(self, algorithm: str) -> list[float]:
        return [o.micros / 1000 for o in self.outcomes[algorithm] if not o.dnf and o.error is None]

    def median_ms(self, algorithm: str) -> float:
        """Median over all trials, a DNF counting as the full timeout."""
        return statistics.median(o.micros / 1000 for o in self.outcomes[algorithm])

    def mean_ms(self, algorithm: str) -> float | None:
        done = self.completed_ms(algorithm)
        return statistics.fmean(done) if done else None

    def dnf(self, algorithm: str) -> int:
        return sum(o.dnf for o in self.outcomes[algorithm])

    def format(self) -> str:
        seen = sorted({v for v in self.values if v is not None})
        cells = [f"{self.degree:>4}", f"{self.multiplicity:>3}", f"{','.join(map(str, seen)) or '--':>8}"]
        for alg in ("axioms", "blowup"):
            mean = self.mean_ms(alg)
            text = "--" if mean is None else f"{mean:.2f} ms"
            if self.dnf(alg):
                text += f" ({self.dnf(alg)} DNF)"
            cells.append(f"{text:>22}")
        return " ".join(cells)

    @staticmethod
    def header() -> str:
        return f"{'deg':>4} {'m':>3} {'I(f,g)':>8} {'axioms (mean)':>22} {'blowup (mean)':>22}"


def bench(degree: int, multiplicity: int, trials: int = 10, timeout_ms: int = 10_000,
          seed: int = 0, bound: int = 10, tangent_cone: BiPoly | None = None,
          csv_path: str | Path | None = None) -> BenchRow:
    """Time both algorithms on ``trials`` random pairs through the origin."""
    row = BenchRow(degree, multiplicity, trials, outcomes={a: [] for a in ALGORITHMS})
    records = []
    for t, (sf, sg) in enumerate(trial_seeds(seed, trials)):
        f = random_curve(RandomCurveSpec(degree, multiplicity, bound, sf), tangent_cone)
        g = random_curve(RandomCurveSpec(degree, multiplicity, bound, sg), tangent_cone)
        value = None
        for alg, fn in ALGORITHMS.items():
            out = run_isolated(fn, (f, g), timeout_ms / 1000)
            row.outcomes[alg].append(out)
            if out.value is not None:
                value = out.value
            records.append((degree, multiplicity, t, alg, out.micros,
                            "" if out.value is None else out.value, int(out.dnf)))
        row.values.append(value)
    if csv_path is not None:
        with open(csv_path, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["deg", "mult", "trial", "algorithm", "micros", "value", "dnf"])
            w.writerows(records)
    return row

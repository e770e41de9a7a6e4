"""Wall-clock timing of the pipeline stages on seeded synthetic inputs."""
from __future__ import annotations

import statistics
import time
from dataclasses import dataclass, field

import numpy as np

from . import shapes
from .classifier import WordSetDatabase, classify
from .errors import InvalidInputError
from .sax import SaxConfig, SaxWord, discretize, paa, sax_transform, znormalize
from .signature import signature

OPS = ("sax", "signature", "classify")
DEFAULT_SEED = 20240417
MIN_REPS = 3


@dataclass(frozen=True)
class BenchConfig:
    op: str
    size: int
    reps: int = 10
    seed: int = DEFAULT_SEED
    alphabet_size: int = 4
    word_length: int = 64
    bins: int = 360

    def __post_init__(self):
        if self.op not in OPS:
            raise InvalidInputError(f"unknown bench op {self.op!r}; choose one of {', '.join(OPS)}")
        if self.reps < MIN_REPS:
            raise InvalidInputError(f"--reps must be at least {MIN_REPS}, got {self.reps}")
        if self.size < 1:
            raise InvalidInputError(f"--size must be positive, got {self.size}")


@dataclass(frozen=True)
class BenchReport:
    operation: str
    size: int
    repetitions: int
    durations_ns: tuple[int, ...]
    seed: int
    params: dict = field(default_factory=dict)
    stages: dict = field(default_factory=dict)

    @property
    def min_ns(self) -> int:
        return min(self.durations_ns)

    @property
    def median_ns(self) -> float:
        return statistics.median(self.durations_ns)

    @property
    def mean_ns(self) -> float:
        return statistics.fmean(self.durations_ns)

    def to_tsv(self) -> str:
        rows = [
            ("op", self.operation),
            ("size", self.size),
            ("reps", self.repetitions),
            ("seed", self.seed),
            *self.params.items(),
            ("min_ns", self.min_ns),
            ("median_ns", f"{self.median_ns:.0f}"),
            ("mean_ns", f"{self.mean_ns:.0f}"),
            *((f"stage_{name}_median_ns", f"{v:.0f}") for name, v in self.stages.items()),
        ]
        lines = [f"{k}\t{v}" for k, v in rows]
        lines.append("durations_ns\t" + "\t".join(str(d) for d in self.durations_ns))
        return "\n".join(lines) + "\n"


def _timed(fn) -> int:
    t0 = time.perf_counter_ns()
    fn()
    return time.perf_counter_ns() - t0


def _bench_sax(cfg: BenchConfig, rng):
    series = rng.standard_normal(cfg.size)
    config = SaxConfig(cfg.alphabet_size, min(cfg.word_length, cfg.size))
    params = {"alphabet": config.alphabet_size, "word_length": config.word_length}

    def stage_run():
        t0 = time.perf_counter_ns()
        z, _ = znormalize(series)
        t1 = time.perf_counter_ns()
        p = paa(z, config.word_length)
        t2 = time.perf_counter_ns()
        discretize(p, config)
        t3 = time.perf_counter_ns()
        return {"normalize": t1 - t0, "paa": t2 - t1, "discretize": t3 - t2}

    return (lambda: sax_transform(series, config)), params, stage_run


def _bench_signature(cfg: BenchConfig, rng):
    if cfg.size < 8:
        raise InvalidInputError("signature bench needs --size >= 8 (image side in pixels)")
    radius = 0.4 * cfg.size * (0.9 + 0.1 * rng.random())
    image = shapes.regular_polygon(cfg.size, int(rng.integers(3, 9)), radius, float(rng.random()))
    return (lambda: signature(image, cfg.bins)), {"bins": cfg.bins, "image_side": cfg.size}, None


def _bench_classify(cfg: BenchConfig, rng):
    a, w = cfg.alphabet_size, cfg.word_length
    words = np.unique(rng.integers(1, a + 1, size=(cfg.size, w)), axis=0)
    classes: dict[str, set] = {}
    for k, row in enumerate(words):
        classes.setdefault(f"class{k % 3}", set()).add(SaxWord(tuple(row.tolist()), a))
    db = WordSetDatabase(a, w, classes)
    candidate = SaxWord(tuple(rng.integers(1, a + 1, size=w).tolist()), a)
    params = {"alphabet": a, "word_length": w, "stored_words": len(db)}
    return (lambda: classify(candidate, db)), params, None


_BUILDERS = {"sax": _bench_sax, "signature": _bench_signature, "classify": _bench_classify}


def run_bench(cfg: BenchConfig) -> BenchReport:
    """One warm-up call, then ``reps`` strictly sequential timed calls."""
    rng = np.random.default_rng(cfg.seed)
    fn, params, stage_run = _BUILDERS[cfg.op](cfg, rng)
    fn()
    durations = tuple(_timed(fn) for _ in range(cfg.reps))
    stage_medians = {}
    if stage_run is not None:
        runs = [stage_run() for _ in range(cfg.reps)]
        stage_medians = {name: statistics.median(r[name] for r in runs) for name in runs[0]}
    return BenchReport(cfg.op, cfg.size, cfg.reps, durations, cfg.seed, params, stage_medians)

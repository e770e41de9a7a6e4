"""Median wall-clock time of the SAX pipeline across input sizes.

Absolute numbers depend on the machine; the useful output is the ratio
column, which should sit near 10 for each tenfold size step.
"""
import argparse
from dataclasses import dataclass

from saxshape.bench import BenchConfig, run_bench


@dataclass
class ScalingConfig:
    sizes: tuple = (1_000, 10_000, 100_000, 1_000_000)
    reps: int = 9
    alphabet_size: int = 4
    word_length: int = 64
    seed: int = 20240417


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--reps", type=int, default=ScalingConfig.reps)
    args = parser.parse_args()
    cfg = ScalingConfig(reps=args.reps)
    print("size\tmedian_ms\tratio\tnormalize_ms\tpaa_ms\tdiscretize_ms")
    previous = None
    for size in cfg.sizes:
        report = run_bench(BenchConfig("sax", size, cfg.reps, cfg.seed, cfg.alphabet_size, cfg.word_length))
        ratio = f"{report.median_ns / previous:.2f}" if previous else "-"
        stages = "\t".join(f"{report.stages[k] / 1e6:.3f}" for k in ("normalize", "paa", "discretize"))
        print(f"{size}\t{report.median_ns / 1e6:.3f}\t{ratio}\t{stages}")
        previous = report.median_ns


if __name__ == "__main__":
    main()

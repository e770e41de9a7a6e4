"""Letter-change events on a synthetic two-week indoor temperature log.

One sample per minute: a daily cycle, sensor noise and a heating outage on
day 9.  Small alphabets report only the large shifts, while large alphabets
and long words also pick up the daily swing.
"""
import argparse
from dataclasses import dataclass

import numpy as np

from saxshape import SaxConfig, detect_transitions, sax_transform

MINUTES_PER_DAY = 24 * 60


@dataclass
class TemperatureConfig:
    days: int = 14
    base: float = 21.0
    daily_swing: float = 1.5
    noise: float = 0.2
    outage_day: int = 9
    outage_drop: float = 6.0
    seed: int = 7


def synthetic_log(cfg: TemperatureConfig) -> np.ndarray:
    rng = np.random.default_rng(cfg.seed)
    t = np.arange(cfg.days * MINUTES_PER_DAY)
    temp = cfg.base + cfg.daily_swing * np.sin(2 * np.pi * t / MINUTES_PER_DAY)
    outage = (t >= cfg.outage_day * MINUTES_PER_DAY) & (t < (cfg.outage_day + 1) * MINUTES_PER_DAY)
    temp[outage] -= cfg.outage_drop
    return temp + rng.normal(0, cfg.noise, t.size)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=TemperatureConfig.seed)
    args = parser.parse_args()
    log = synthetic_log(TemperatureConfig(seed=args.seed))
    print(f"{log.size} samples, range {log.min():.2f} to {log.max():.2f}")
    print("alphabet\twords/day\tevents\tword")
    for a in (3, 8):
        for per_day in (1, 4):
            word = sax_transform(log, SaxConfig(a, 14 * per_day))
            events = detect_transitions(word)
            print(f"{a}\t{per_day}\t{len(events)}\t{word.letters}")
    print("\nevents for a=3, one letter per day (position = day):")
    for event in detect_transitions(sax_transform(log, SaxConfig(3, 14))):
        print(event.render())


if __name__ == "__main__":
    main()

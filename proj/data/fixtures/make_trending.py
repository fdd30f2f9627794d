"""Generates data/fixtures/trending.csv, the synthetic trending fixture.

Long up and down legs with a fast oscillation and noise on top: short EMA
pairs whipsaw on the oscillation, long pairs ride the legs.

    python3 data/fixtures/make_trending.py [--seed N] [--out PATH]
"""

import argparse
import csv
import math
from pathlib import Path

import numpy as np

BARS = 3000
INTERVAL_MS = 3600 * 1000
START_TS = 1_609_459_200_000  # 2021-01-01T00:00:00Z


def generate(seed):
    rng = np.random.default_rng(seed)
    drift = []
    while len(drift) < BARS:
        length = int(rng.integers(250, 500))
        up = not drift or drift[-1] < 0
        mu = rng.uniform(0.0015, 0.003) * (1 if up else -0.8)
        drift.extend([mu] * length)
    drift = np.array(drift[:BARS])

    phase = rng.uniform(0, 2 * math.pi)
    period = rng.uniform(18, 30)
    t = np.arange(BARS)
    wave = 0.02 * np.sin(2 * math.pi * t / period + phase)
    noise = rng.normal(0.0, 0.004, BARS)
    log_close = math.log(100.0) + np.cumsum(drift + noise) + wave
    close = np.exp(log_close)

    rows = []
    prev = close[0]
    for i in range(BARS):
        o = prev * math.exp(rng.normal(0.0, 0.0005))
        c = close[i]
        hi = max(o, c) * (1 + abs(rng.normal(0.0, 0.002)))
        lo = min(o, c) * (1 - abs(rng.normal(0.0, 0.002)))
        vol = float(rng.integers(500, 5000))
        rows.append((START_TS + i * INTERVAL_MS, round(o, 4), round(hi, 4), round(lo, 4),
                     round(c, 4), vol))
        prev = c
    # Rounding must not break high >= max(open, close) or low <= min(open, close).
    fixed = []
    for ts, o, h, l, c, v in rows:
        fixed.append((ts, o, max(h, o, c), min(l, o, c), c, v))
    return fixed


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=8)
    ap.add_argument("--out", type=Path, default=Path(__file__).with_name("trending.csv"))
    args = ap.parse_args()
    with args.out.open("w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["timestamp", "open", "high", "low", "close", "volume"])
        for ts, o, h, l, c, v in generate(args.seed):
            w.writerow([ts, f"{o:.4f}", f"{h:.4f}", f"{l:.4f}", f"{c:.4f}", f"{v:.0f}"])


if __name__ == "__main__":
    main()

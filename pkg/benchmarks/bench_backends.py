#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure-numpy fallbacks.

Times the three hot kernels (batch pooling, token-cache pooling, one SGD
epoch) with both implementations, then measures end-to-end predict
throughput under the active backend. Run with --both to re-run the
end-to-end figure under each backend via subprocesses:

    python benchmarks/bench_backends.py --both
"""

import argparse
import os
import subprocess
import sys
import time

import numpy as np

from cslid import kernels
from cslid.cli import Predictions, _format_prediction
from cslid.model import LinearModel, LossMode
from cslid.textprep import build_vocabulary


def _time(fn, *args, repeat=5):
    fn(*args)  # warm-up / JIT
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def bench_kernels():
    rng = np.random.default_rng(0)
    dim = 256

    # batch pooling: 4096 lines x ~400 embedding rows each
    E = rng.random((22000, dim), dtype=np.float32)
    ids = rng.integers(0, 22000, 4096 * 400).astype(np.int32)
    offs = np.arange(0, len(ids) + 1, 400, dtype=np.int64)
    out = np.empty((4096, dim), np.float32)
    rows = [("pool_rows", kernels.pool_rows_nb, kernels.pool_rows_np,
             (E, ids, offs, out), 4096)]

    # token-cache pooling: 4096 lines x 15 cached token rows
    T = rng.random((50000, dim), dtype=np.float32)
    counts = rng.integers(1, 30, 50000).astype(np.int32)
    tids = rng.integers(0, 50000, 4096 * 15).astype(np.int32)
    toffs = np.arange(0, len(tids) + 1, 15, dtype=np.int64)
    H = np.empty((4096, dim), np.float32)
    n = np.empty(4096, np.int64)
    rows.append(("pool_token_sums", kernels.pool_token_sums_nb,
                 kernels.pool_token_sums_np,
                 (T, counts, tids, toffs, H, n), 4096))

    print(f"{'kernel':<18}{'numba':>12}{'numpy':>12}{'speedup':>9}")
    for name, nb, np_, args, units in rows:
        if kernels.HAS_NUMBA:
            t_nb = _time(nb, *args)
        else:
            t_nb = float("nan")
        t_np = _time(np_, *args)
        speed = t_np / t_nb if t_nb == t_nb else float("nan")
        print(f"{name:<18}{units / t_nb:>10,.0f}/s{units / t_np:>10,.0f}/s"
              f"{speed:>8.1f}x")

    # one SGD epoch: 2000 examples, 5 labels, dim 128
    n_ex, L, d = 2000, 5, 128
    E2 = (rng.random((4000, d), dtype=np.float32) - 0.5) * 0.1
    W2 = np.zeros((L, d), np.float32)
    bag_sizes = rng.integers(50, 200, n_ex)
    idx = rng.integers(0, 4000, int(bag_sizes.sum())).astype(np.int32)
    bag_off = np.zeros(n_ex + 1, np.int64)
    np.cumsum(bag_sizes, out=bag_off[1:])
    gold = rng.integers(0, L, n_ex).astype(np.int32)
    gold_off = np.arange(n_ex + 1, dtype=np.int64)
    order = np.arange(n_ex, dtype=np.int64)

    def run(impl):
        e, w = E2.copy(), W2.copy()
        impl(e, w, idx, bag_off, gold, gold_off, order,
             0.3, np.int64(0), np.int64(n_ex), np.int64(0))

    if kernels.HAS_NUMBA:
        t_nb = _time(run, kernels.sgd_epoch_nb, repeat=3)
    else:
        t_nb = float("nan")
    t_np = _time(run, kernels.sgd_epoch_np, repeat=3)
    speed = t_np / t_nb if t_nb == t_nb else float("nan")
    print(f"{'sgd_epoch':<18}{n_ex / t_nb:>10,.0f}/s{n_ex / t_np:>10,.0f}/s"
          f"{speed:>8.1f}x")


def bench_end_to_end(n_lines=50_000):
    rng = np.random.default_rng(1)
    letters = [chr(c) for c in range(0x61, 0x7B)]
    words = sorted({"".join(rng.choice(letters, size=rng.integers(3, 9)))
                    for _ in range(2000)})
    vocab = build_vocabulary([words, words], min_word_count=1)
    dim = 256
    E = (rng.random((vocab.size, dim), dtype=np.float32) - 0.5) * 0.1
    W = (rng.random((200, dim), dtype=np.float32) - 0.5) * 0.5
    m = LinearModel(vocab, dim, E, W,
                    tuple(f"l{i:03d}_Latn" for i in range(200)),
                    LossMode.SOFTMAX_CE)
    warr = np.array(words)
    lines = [" ".join(rng.choice(warr, size=25))[:100]
             for _ in range(n_lines)]
    engine = Predictions.from_components(linear=m, strategy_text="fixed:0.3")
    for _ in engine.run(lines[:2000]):
        pass
    t0 = time.perf_counter()
    chars = 0
    for _, pred, smap in engine.run(lines):
        chars += len(_format_prediction(pred, smap))
    dt = time.perf_counter() - t0
    print(f"predict end-to-end [{kernels.BACKEND}]: "
          f"{n_lines / dt:,.0f} lines/s ({dt:.2f}s for {n_lines} lines)")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--both", action="store_true",
                    help="run the end-to-end benchmark under both backends")
    ap.add_argument("--end-to-end-only", action="store_true")
    args = ap.parse_args()

    if args.both:
        for backend in ("numba", "numpy"):
            env = dict(os.environ, CSLID_BACKEND=backend)
            subprocess.run([sys.executable, __file__, "--end-to-end-only"],
                           env=env, check=True)
        return

    if not args.end_to_end_only:
        print(f"active backend: {kernels.BACKEND}")
        bench_kernels()
    bench_end_to_end()


if __name__ == "__main__":
    main()

"""Hot numeric kernels: embedding pooling and the SGD inner loop.

Two interchangeable backends:

* ``numba`` (default when importable): @njit-compiled loops, cached on disk.
* ``numpy``: pure-numpy reference implementations, also used as the
  correctness oracle for the compiled path.

Selection is via the ``CSLID_BACKEND`` environment variable (``auto``,
``numba``, or ``numpy``), read once at import. Both implementations are
always importable under explicit names (``*_nb`` / ``*_np``) so they can be
benchmarked and cross-checked regardless of the active backend.

Within one backend every function is deterministic; across backends results
may differ in the last float32 bits because summation order differs.
"""

import math
import os

import numpy as np

try:
    from numba import njit

    HAS_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    HAS_NUMBA = False

    def njit(*args, **kwargs):
        def wrap(fn):
            return fn
        return wrap


# --- pooling -----------------------------------------------------------

@njit(cache=True)
def pool_rows_nb(M, ids, offs, out):
    """out[r] = mean of M rows listed in ids[offs[r]:offs[r+1]].

    Segments must be non-empty; empty bags are filtered by callers.
    """
    dim = M.shape[1]
    for r in range(len(offs) - 1):
        for d in range(dim):
            out[r, d] = 0.0
        b0, b1 = offs[r], offs[r + 1]
        for j in range(b0, b1):
            row = ids[j]
            for d in range(dim):
                out[r, d] += M[row, d]
        inv = np.float32(1.0) / np.float32(b1 - b0)
        for d in range(dim):
            out[r, d] *= inv
    return out


def pool_rows_np(M, ids, offs, out):
    for r in range(len(offs) - 1):
        seg = ids[offs[r]:offs[r + 1]]
        np.sum(M[seg], axis=0, out=out[r])
        out[r] *= np.float32(1.0) / np.float32(len(seg))
    return out


@njit(cache=True)
def pool_token_sums_nb(T, feat_counts, tok_ids, offs, out_h, out_n):
    """Pool per-token partial sums into per-line mean vectors.

    T[t] holds the sum of the embedding rows for token t's features and
    feat_counts[t] how many features that was. out_n[r] gets the line's
    total feature count (0 means no features; out_h[r] is zeroed).
    """
    dim = T.shape[1]
    for r in range(len(offs) - 1):
        for d in range(dim):
            out_h[r, d] = 0.0
        n = 0
        for j in range(offs[r], offs[r + 1]):
            t = tok_ids[j]
            n += feat_counts[t]
            for d in range(dim):
                out_h[r, d] += T[t, d]
        out_n[r] = n
        if n > 0:
            inv = np.float32(1.0) / np.float32(n)
            for d in range(dim):
                out_h[r, d] *= inv
    return out_h


def pool_token_sums_np(T, feat_counts, tok_ids, offs, out_h, out_n):
    for r in range(len(offs) - 1):
        seg = tok_ids[offs[r]:offs[r + 1]]
        n = int(feat_counts[seg].sum())
        out_n[r] = n
        if n > 0:
            np.sum(T[seg], axis=0, out=out_h[r])
            out_h[r] *= np.float32(1.0) / np.float32(n)
        else:
            out_h[r] = 0.0
    return out_h


# --- SGD epoch ---------------------------------------------------------
#
# Plain sequential SGD, one example per step, learning rate
# lr0 * (1 - t/T) at global step t of T. mode 0 = softmax + cross-entropy
# (one gold label), mode 1 = sigmoid + summed binary cross-entropy.
# Returns (loss_sum, bad_step): bad_step >= 0 flags a non-finite loss and
# the epoch stops there.

_EPS = 1e-12


@njit(cache=True)
def sgd_epoch_nb(E, W, idx, bag_off, gold, gold_off, order,
                 lr0, step0, total_steps, mode):
    L, dim = W.shape
    h = np.zeros(dim, np.float32)
    dz = np.zeros(L, np.float32)
    gh = np.zeros(dim, np.float32)
    z = np.zeros(L, np.float64)
    loss_sum = 0.0
    for k in range(len(order)):
        ex = order[k]
        t = step0 + k
        lr = np.float32(lr0 * (1.0 - t / total_steps))
        b0, b1 = bag_off[ex], bag_off[ex + 1]
        nb = b1 - b0
        for d in range(dim):
            h[d] = 0.0
        for j in range(b0, b1):
            row = idx[j]
            for d in range(dim):
                h[d] += E[row, d]
        inv = np.float32(1.0) / np.float32(nb)
        for d in range(dim):
            h[d] *= inv

        for l in range(L):
            acc = np.float32(0.0)
            for d in range(dim):
                acc += W[l, d] * h[d]
            z[l] = acc

        g0, g1 = gold_off[ex], gold_off[ex + 1]
        loss = 0.0
        if mode == 0:
            m = z[0]
            for l in range(1, L):
                if z[l] > m:
                    m = z[l]
            s = 0.0
            for l in range(L):
                s += math.exp(z[l] - m)
            gl = gold[g0]
            for l in range(L):
                p = math.exp(z[l] - m) / s
                y = 1.0 if l == gl else 0.0
                dz[l] = np.float32(p - y)
                if l == gl:
                    pc = min(max(p, _EPS), 1.0 - _EPS)
                    loss = -math.log(pc)
        else:
            # dz starts at -y; adding the sigmoid below gives dz = s - y
            for l in range(L):
                dz[l] = 0.0
            for g in range(g0, g1):
                dz[gold[g]] = np.float32(-1.0)
            for l in range(L):
                zl = z[l]
                if zl >= 0.0:
                    sig = 1.0 / (1.0 + math.exp(-zl))
                else:
                    e = math.exp(zl)
                    sig = e / (1.0 + e)
                y = 1.0 if dz[l] < 0.0 else 0.0
                dz[l] += np.float32(sig)
                sc = min(max(sig, _EPS), 1.0 - _EPS)
                loss -= y * math.log(sc) + (1.0 - y) * math.log(1.0 - sc)

        if not math.isfinite(loss):
            return loss_sum, t
        loss_sum += loss

        # dL/dh with the pre-update W, then the W and E row updates
        for d in range(dim):
            acc2 = np.float32(0.0)
            for l in range(L):
                acc2 += dz[l] * W[l, d]
            gh[d] = acc2
        for l in range(L):
            c = lr * dz[l]
            for d in range(dim):
                W[l, d] -= c * h[d]
        ce = lr * inv
        for j in range(b0, b1):
            row = idx[j]
            for d in range(dim):
                E[row, d] -= ce * gh[d]
    return loss_sum, np.int64(-1)


def sgd_epoch_np(E, W, idx, bag_off, gold, gold_off, order,
                 lr0, step0, total_steps, mode):
    with np.errstate(over="ignore", invalid="ignore"):
        return _sgd_epoch_np(E, W, idx, bag_off, gold, gold_off, order,
                             lr0, step0, total_steps, mode)


def _sgd_epoch_np(E, W, idx, bag_off, gold, gold_off, order,
                  lr0, step0, total_steps, mode):
    # overflow to inf is tolerated: the loss check below catches it
    loss_sum = 0.0
    for k in range(len(order)):
        ex = int(order[k])
        t = step0 + k
        lr = np.float32(lr0 * (1.0 - t / total_steps))
        seg = idx[bag_off[ex]:bag_off[ex + 1]]
        h = E[seg].sum(axis=0)
        h *= np.float32(1.0) / np.float32(len(seg))
        z = (W @ h).astype(np.float64)
        gl = gold[gold_off[ex]:gold_off[ex + 1]]
        y = np.zeros(len(W), np.float64)
        y[gl] = 1.0
        if mode == 0:
            p = np.exp(z - z.max())
            p /= p.sum()
            pc = min(max(p[gl[0]], _EPS), 1.0 - _EPS)
            loss = -math.log(pc)
            dz = (p - y).astype(np.float32)
        else:
            s = np.where(z >= 0, 1.0 / (1.0 + np.exp(-np.abs(z))),
                         np.exp(-np.abs(z)) / (1.0 + np.exp(-np.abs(z))))
            sc = np.clip(s, _EPS, 1.0 - _EPS)
            loss = float(-(y * np.log(sc) + (1.0 - y) * np.log(1.0 - sc)).sum())
            dz = (s - y).astype(np.float32)
        if not math.isfinite(loss):
            return loss_sum, t
        loss_sum += loss
        gh = W.T @ dz
        W -= lr * np.outer(dz, h)
        np.subtract.at(E, seg, (lr / np.float32(len(seg))) * gh)
    return loss_sum, np.int64(-1)


# --- backend selection -------------------------------------------------

BACKEND = os.environ.get("CSLID_BACKEND", "auto")
if BACKEND not in ("auto", "numba", "numpy"):
    raise ValueError(
        f"CSLID_BACKEND={BACKEND!r}: expected auto, numba, or numpy")
if BACKEND == "auto":
    BACKEND = "numba" if HAS_NUMBA else "numpy"
elif BACKEND == "numba" and not HAS_NUMBA:
    raise RuntimeError("CSLID_BACKEND=numba but numba is not importable")

if BACKEND == "numba":
    pool_rows = pool_rows_nb
    pool_token_sums = pool_token_sums_nb
    sgd_epoch = sgd_epoch_nb
else:
    pool_rows = pool_rows_np
    pool_token_sums = pool_token_sums_np
    sgd_epoch = sgd_epoch_np

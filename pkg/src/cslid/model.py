"""Averaged-embedding linear classifier with two training modes.

The architecture: a sentence vector is the mean of the embedding rows for
the sentence's word and character-n-gram features, followed by one linear
layer. Softmax + cross-entropy trains a single-label classifier; sigmoid +
summed binary cross-entropy trains per-label independent scores so several
languages can fire at once.

Training is plain sequential SGD with a linearly decaying learning rate and
is bit-reproducible for a given (corpus, config, mode, backend).
"""

from __future__ import annotations

import math
import struct
from dataclasses import dataclass, field
from enum import IntEnum
from typing import Iterable

import numpy as np

from . import kernels, textprep
from .errors import (FormatError, MultiLabelGold, NoFeatures, NonFiniteLoss,
                     UnknownLabel)
from .textprep import FeatureBag, Vocabulary

LabelSet = frozenset[str]

_CLAMP = 1e-12


class LossMode(IntEnum):
    SOFTMAX_CE = 0
    SIGMOID_BCE = 1


@dataclass(frozen=True, eq=False)
class ScoreVector:
    """Per-label scores aligned with ``labels``.

    kind is "softmax" (simplex), "sigmoid" (independent per label), or
    "scaled" (max pinned to 1, from the trigram classifier).
    """

    labels: tuple[str, ...]
    scores: np.ndarray
    kind: str = "softmax"

    def __post_init__(self):
        if len(self.labels) != len(self.scores):
            raise ValueError("labels/scores length mismatch")

    def top(self) -> tuple[str, float]:
        i = int(np.argmax(self.scores))
        return self.labels[i], float(self.scores[i])


@dataclass(frozen=True)
class TrainConfig:
    dim: int = 256
    epochs: int = 2
    lr0: float = 0.5
    min_word_count: int = 1000
    ngram_lo: int = 2
    ngram_hi: int = 5
    seed: int = 0

    def __post_init__(self):
        if self.dim < 1 or self.epochs < 1 or self.lr0 <= 0:
            raise ValueError("need dim >= 1, epochs >= 1, lr0 > 0")


@dataclass(frozen=True, eq=False)
class LinearModel:
    vocab: Vocabulary
    dim: int
    E: np.ndarray  # (n_words + n_ngrams, dim) float32
    W: np.ndarray  # (n_labels, dim) float32
    labels: tuple[str, ...]
    loss_mode: LossMode
    label_index: dict[str, int] = field(repr=False, default=None)

    def __post_init__(self):
        if self.label_index is None:
            object.__setattr__(
                self, "label_index",
                {t: i for i, t in enumerate(self.labels)})

    @property
    def n_labels(self) -> int:
        return len(self.labels)


def softmax(z: np.ndarray) -> np.ndarray:
    z = np.asarray(z, dtype=np.float64)
    e = np.exp(z - z.max())
    return e / e.sum()


def sigmoid(z: np.ndarray) -> np.ndarray:
    z = np.asarray(z, dtype=np.float64)
    out = np.empty_like(z)
    pos = z >= 0
    out[pos] = 1.0 / (1.0 + np.exp(-z[pos]))
    ez = np.exp(z[~pos])
    out[~pos] = ez / (1.0 + ez)
    return out


def forward(model: LinearModel, bag: FeatureBag) -> ScoreVector:
    """Score one feature bag. Raises NoFeatures on an empty bag."""
    if len(bag) == 0:
        raise NoFeatures("empty feature bag")
    # canonical bag order makes the float result permutation-invariant
    h = model.E[np.sort(bag)].mean(axis=0, dtype=np.float64)
    z = model.W @ h
    if model.loss_mode == LossMode.SOFTMAX_CE:
        return ScoreVector(model.labels, softmax(z), "softmax")
    return ScoreVector(model.labels, sigmoid(z), "sigmoid")


def _gold_indices(labels: tuple[str, ...], gold: LabelSet,
                  index: dict[str, int] | None = None) -> list[int]:
    idx = index or {t: i for i, t in enumerate(labels)}
    out = []
    for tag in gold:
        if tag not in idx:
            raise UnknownLabel(f"gold label {tag!r} not in model labels")
        out.append(idx[tag])
    return sorted(out)


def bce_loss(scores: ScoreVector, gold: LabelSet) -> float:
    """Summed binary cross-entropy over all labels, scores clamped."""
    gidx = _gold_indices(scores.labels, gold)
    y = np.zeros(len(scores.labels))
    y[gidx] = 1.0
    s = np.clip(np.asarray(scores.scores, dtype=np.float64),
                _CLAMP, 1.0 - _CLAMP)
    return float(-(y * np.log(s) + (1.0 - y) * np.log(1.0 - s)).sum())


def ce_loss(scores: ScoreVector, gold: LabelSet) -> float:
    """Negative log probability of the single gold label."""
    if len(gold) != 1:
        raise MultiLabelGold(f"expected exactly one gold label, got {len(gold)}")
    gidx = _gold_indices(scores.labels, gold)[0]
    p = min(max(float(scores.scores[gidx]), _CLAMP), 1.0 - _CLAMP)
    return -math.log(p)


def loss_from_wh(W: np.ndarray, h: np.ndarray, gold_idx: list[int],
                 mode: LossMode) -> float:
    """Loss as a function of the output weights and pooled vector."""
    z = W @ h
    if mode == LossMode.SOFTMAX_CE:
        p = softmax(z)
        pc = min(max(float(p[gold_idx[0]]), _CLAMP), 1.0 - _CLAMP)
        return -math.log(pc)
    s = np.clip(sigmoid(z), _CLAMP, 1.0 - _CLAMP)
    y = np.zeros(len(z))
    y[gold_idx] = 1.0
    return float(-(y * np.log(s) + (1.0 - y) * np.log(1.0 - s)).sum())


def loss_gradients(W: np.ndarray, h: np.ndarray, gold_idx: list[int],
                   mode: LossMode) -> tuple[float, np.ndarray, np.ndarray]:
    """(loss, dL/dW, dL/dh) for one example; analytic form."""
    z = W @ h
    y = np.zeros(len(z))
    y[gold_idx] = 1.0
    if mode == LossMode.SOFTMAX_CE:
        p = softmax(z)
        pc = min(max(float(p[gold_idx[0]]), _CLAMP), 1.0 - _CLAMP)
        loss = -math.log(pc)
        dz = p - y
    else:
        s = sigmoid(z)
        sc = np.clip(s, _CLAMP, 1.0 - _CLAMP)
        loss = float(-(y * np.log(sc) + (1.0 - y) * np.log(1.0 - sc)).sum())
        dz = s - y
    return loss, np.outer(dz, h), W.T @ dz


@dataclass
class TrainStats:
    n_examples: int = 0
    n_dropped_empty: int = 0
    n_steps: int = 0
    mean_loss_last_epoch: float = float("nan")


def train(corpus: Iterable[tuple[str, LabelSet]], cfg: TrainConfig,
          mode: LossMode, stats: TrainStats | None = None) -> LinearModel:
    """Train from (text, gold labels) pairs.

    Softmax mode requires exactly one gold label per example. Examples whose
    cleaned text yields no vocabulary features are dropped (counted in
    *stats*). Raises NonFiniteLoss with the failing step if the loss blows
    up.
    """
    examples = [(textprep.tokenize(textprep.clean(text)), frozenset(gold))
                for text, gold in corpus]
    if not examples:
        raise ValueError("empty training corpus")
    for i, (_, gold) in enumerate(examples):
        if not gold:
            raise ValueError(f"example {i} has no gold labels")
        if mode == LossMode.SOFTMAX_CE and len(gold) != 1:
            raise MultiLabelGold(
                f"example {i} has {len(gold)} labels; softmax training "
                "is single-label")

    vocab = textprep.build_vocabulary(
        (toks for toks, _ in examples), cfg.min_word_count,
        cfg.ngram_lo, cfg.ngram_hi)
    labels = tuple(sorted({t for _, gold in examples for t in gold}))
    lab_idx = {t: i for i, t in enumerate(labels)}

    bags, golds = [], []
    dropped = 0
    for toks, gold in examples:
        bag = textprep.featurize(toks, vocab)
        if len(bag) == 0:
            dropped += 1
            continue
        bags.append(bag)
        golds.append(sorted(lab_idx[t] for t in gold))
    n = len(bags)
    if n == 0:
        raise NoFeatures("every training example produced an empty bag")

    idx = np.concatenate(bags).astype(np.int32)
    bag_off = np.zeros(n + 1, np.int64)
    np.cumsum([len(b) for b in bags], out=bag_off[1:])
    gold_flat = np.array([g for gs in golds for g in gs], np.int32)
    gold_off = np.zeros(n + 1, np.int64)
    np.cumsum([len(g) for g in golds], out=gold_off[1:])

    rng = np.random.default_rng(cfg.seed)
    E = rng.uniform(-1.0 / cfg.dim, 1.0 / cfg.dim,
                    (vocab.size, cfg.dim)).astype(np.float32)
    W = np.zeros((len(labels), cfg.dim), np.float32)

    total_steps = cfg.epochs * n
    last_loss = float("nan")
    for epoch in range(cfg.epochs):
        order = rng.permutation(n).astype(np.int64)
        loss_sum, bad = kernels.sgd_epoch(
            E, W, idx, bag_off, gold_flat, gold_off, order,
            float(cfg.lr0), np.int64(epoch * n), np.int64(total_steps),
            np.int64(int(mode)))
        if bad >= 0:
            raise NonFiniteLoss(
                f"non-finite loss at step {int(bad)}/{total_steps} "
                f"(epoch {epoch}, example {int(order[int(bad) - epoch * n])}, "
                f"lr0 {cfg.lr0}, dim {cfg.dim})")
        last_loss = loss_sum / n
    E.setflags(write=False)
    W.setflags(write=False)
    if stats is not None:
        stats.n_examples = n
        stats.n_dropped_empty = dropped
        stats.n_steps = total_steps
        stats.mean_loss_last_epoch = last_loss
    return LinearModel(vocab, cfg.dim, E, W, labels, mode)


# --- serialization -----------------------------------------------------
#
# Little-endian binary layout:
#   magic "CSLID" | version u32 | loss_mode u8 | dim u32 | L u32
#   | V_words u32 | V_ngrams u32 | min_word_count u32 | ngram_lo u32
#   | ngram_hi u32 | L label strings | V_words + V_ngrams vocab strings
#   | E row-major f32 | W row-major f32
# Strings are u32 byte-length + UTF-8. The three vocabulary-parameter
# fields let a loaded model featurize unseen text.

MAGIC = b"CSLID"
VERSION = 1


def save(model: LinearModel, path: str) -> None:
    out = bytearray()
    out += MAGIC
    out += struct.pack("<IBIIII", VERSION, int(model.loss_mode), model.dim,
                       len(model.labels), model.vocab.n_words,
                       model.vocab.n_ngrams)
    out += struct.pack("<III", model.vocab.min_word_count,
                       model.vocab.ngram_lo, model.vocab.ngram_hi)
    for s in model.labels:
        b = s.encode("utf-8")
        out += struct.pack("<I", len(b)) + b
    for s in model.vocab.words():
        b = s.encode("utf-8")
        out += struct.pack("<I", len(b)) + b
    for s in model.vocab.ngrams():
        b = s.encode("utf-8")
        out += struct.pack("<I", len(b)) + b
    out += np.ascontiguousarray(model.E, dtype="<f4").tobytes()
    out += np.ascontiguousarray(model.W, dtype="<f4").tobytes()
    with open(path, "wb") as f:
        f.write(out)


class _Reader:
    def __init__(self, data: bytes):
        self.data = data
        self.pos = 0

    def take(self, n: int, what: str) -> bytes:
        if self.pos + n > len(self.data):
            raise FormatError(
                f"truncated file: needed {n} bytes for {what}, "
                f"had {len(self.data) - self.pos}", offset=self.pos)
        b = self.data[self.pos:self.pos + n]
        self.pos += n
        return b

    def u32(self, what: str) -> int:
        return struct.unpack("<I", self.take(4, what))[0]

    def string(self, what: str) -> str:
        n = self.u32(f"{what} length")
        start = self.pos
        try:
            return self.take(n, what).decode("utf-8")
        except UnicodeDecodeError as e:
            raise FormatError(f"bad UTF-8 in {what}: {e}", offset=start)


def load(path: str) -> LinearModel:
    with open(path, "rb") as f:
        data = f.read()
    r = _Reader(data)
    magic = r.take(len(MAGIC), "magic")
    if magic != MAGIC:
        raise FormatError(f"bad magic {magic!r}, expected {MAGIC!r}", offset=0)
    version = r.u32("version")
    if version != VERSION:
        raise FormatError(f"unsupported version {version}", offset=5)
    mode_byte = r.take(1, "loss mode")[0]
    try:
        mode = LossMode(mode_byte)
    except ValueError:
        raise FormatError(f"bad loss mode byte {mode_byte}", offset=9)
    dim = r.u32("dim")
    n_labels = r.u32("label count")
    n_words = r.u32("word count")
    n_ngrams = r.u32("ngram count")
    min_word_count = r.u32("min word count")
    ngram_lo = r.u32("ngram lo")
    ngram_hi = r.u32("ngram hi")
    labels = tuple(r.string(f"label {i}") for i in range(n_labels))
    words = [r.string(f"word {i}") for i in range(n_words)]
    ngrams = [r.string(f"ngram {i}") for i in range(n_ngrams)]
    word_index = {w: i for i, w in enumerate(words)}
    ngram_index = {g: n_words + i for i, g in enumerate(ngrams)}
    if len(word_index) != n_words or len(ngram_index) != n_ngrams:
        raise FormatError("duplicate vocabulary entries", offset=r.pos)
    if len(set(labels)) != n_labels:
        raise FormatError("duplicate labels", offset=r.pos)
    v = n_words + n_ngrams
    e_bytes = r.take(v * dim * 4, "embedding matrix")
    w_bytes = r.take(n_labels * dim * 4, "output matrix")
    if r.pos != len(data):
        raise FormatError(
            f"trailing data: {len(data) - r.pos} unexpected bytes",
            offset=r.pos)
    E = np.frombuffer(e_bytes, dtype="<f4").reshape(v, dim).copy()
    W = np.frombuffer(w_bytes, dtype="<f4").reshape(n_labels, dim).copy()
    if not (np.isfinite(E).all() and np.isfinite(W).all()):
        raise FormatError("non-finite matrix entries")
    E.setflags(write=False)
    W.setflags(write=False)
    vocab = Vocabulary(word_index, ngram_index, min_word_count,
                       ngram_lo, ngram_hi)
    return LinearModel(vocab, dim, E, W, labels, mode)


# --- batched inference -------------------------------------------------


class BatchScorer:
    """Streaming scorer with a per-token pooled-vector cache.

    Repeated tokens dominate real corpora, so the sum of embedding rows for
    each distinct token is computed once and reused; per-line pooling then
    touches one cached row per token instead of one embedding row per
    feature. The cache is capped and reset when full, keeping memory
    bounded on arbitrarily long streams.
    """

    def __init__(self, model: LinearModel, max_cache_tokens: int = 65536):
        self.model = model
        self.max_cache_tokens = max_cache_tokens
        self._reset_cache()

    def _reset_cache(self):
        self._tok2row: dict[str, int] = {}
        cap = 1024
        self._T = np.zeros((cap, self.model.dim), np.float32)
        self._counts = np.zeros(cap, np.int32)
        self._n_rows = 0

    def _token_row(self, tok: str) -> int:
        row = self._tok2row.get(tok)
        if row is not None:
            return row
        if self._n_rows == len(self._T):
            grow = len(self._T) * 2
            T = np.zeros((grow, self.model.dim), np.float32)
            T[:self._n_rows] = self._T
            counts = np.zeros(grow, np.int32)
            counts[:self._n_rows] = self._counts
            self._T, self._counts = T, counts
        row = self._n_rows
        bag = textprep.featurize([tok], self.model.vocab)
        if len(bag):
            self._T[row] = self.model.E[bag].sum(axis=0, dtype=np.float32)
        else:
            self._T[row] = 0.0
        self._counts[row] = len(bag)
        self._tok2row[tok] = row
        self._n_rows += 1
        return row

    def score_lines(self, lines: list[str]) -> tuple[np.ndarray, np.ndarray]:
        """(scores (B, L) float64, has_features (B,) bool) for raw lines."""
        # reset only between calls: row ids handed out within one call must
        # stay valid, so a call may overshoot the cap by its own tokens
        if self._n_rows >= self.max_cache_tokens:
            self._reset_cache()
        tok_rows: list[int] = []
        offs = np.zeros(len(lines) + 1, np.int64)
        for i, line in enumerate(lines):
            for tok in textprep.tokenize(textprep.clean(line)):
                tok_rows.append(self._token_row(tok))
            offs[i + 1] = len(tok_rows)
        ids = np.array(tok_rows, np.int32)
        H = np.empty((len(lines), self.model.dim), np.float32)
        n = np.empty(len(lines), np.int64)
        kernels.pool_token_sums(self._T, self._counts, ids, offs, H, n)
        Z = (H @ self.model.W.T).astype(np.float64)
        if self.model.loss_mode == LossMode.SOFTMAX_CE:
            Z -= Z.max(axis=1, keepdims=True)
            np.exp(Z, out=Z)
            Z /= Z.sum(axis=1, keepdims=True)
        else:
            Z = sigmoid(Z)
        return Z, n > 0

    @property
    def score_kind(self) -> str:
        return ("softmax" if self.model.loss_mode == LossMode.SOFTMAX_CE
                else "sigmoid")

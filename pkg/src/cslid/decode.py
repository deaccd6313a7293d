"""Turn a score vector into a predicted label set.

Four selection strategies:

* ``top1``        - the single best label (ties broken lexicographically)
* ``fixed:k``     - every label scoring strictly above k (simplex scores);
                    may be empty, never more than floor(1/k) labels
* ``dynamic:m``   - the best label, plus the runner-up if it scores
                    strictly above mean + m * population-sigma of the
                    vector (sigmoid scores); at most two labels
* ``closest:c``   - the best label, plus the runner-up if it scores
                    strictly above c (max-scaled scores); at most two

Note the dynamic rule cannot mathematically admit a second label when the
model covers fewer than 10 labels with m=2: for any vector, the second
largest value is at most mean + sigma * sqrt((L-2)/2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .model import ScoreVector

LabelSet = frozenset[str]

DEFAULT_FIXED_K = 0.3
DEFAULT_DYNAMIC_M = 2.0
DEFAULT_CLOSEST_C = 0.99


@dataclass(frozen=True)
class DecodeStrategy:
    kind: str  # "top1" | "fixed" | "dynamic" | "closest"
    param: float = 0.0

    def __post_init__(self):
        if self.kind == "fixed" and not 0.0 < self.param < 1.0:
            raise ValueError(f"fixed threshold must be in (0, 1), got {self.param}")
        if self.kind == "dynamic" and self.param < 0.0:
            raise ValueError(f"dynamic multiplier must be >= 0, got {self.param}")
        if self.kind == "closest" and not 0.0 < self.param <= 1.0:
            raise ValueError(f"closest threshold must be in (0, 1], got {self.param}")
        if self.kind not in ("top1", "fixed", "dynamic", "closest"):
            raise ValueError(f"unknown decode strategy {self.kind!r}")


def parse_strategy(text: str) -> DecodeStrategy:
    """Parse ``top1 | fixed:<k> | dynamic:<m> | closest:<c>`` CLI syntax."""
    kind, _, arg = text.partition(":")
    if kind == "top1":
        if arg:
            raise ValueError("top1 takes no parameter")
        return DecodeStrategy("top1")
    defaults = {"fixed": DEFAULT_FIXED_K, "dynamic": DEFAULT_DYNAMIC_M,
                "closest": DEFAULT_CLOSEST_C}
    if kind not in defaults:
        raise ValueError(f"unknown decode strategy {text!r}")
    return DecodeStrategy(kind, float(arg) if arg else defaults[kind])


def _argmax_lex(labels: tuple[str, ...], scores: np.ndarray) -> int:
    """Index of the max score; equal scores resolve to the smallest tag."""
    best = int(np.argmax(scores))
    m = scores[best]
    for i in np.flatnonzero(scores == m):
        if labels[int(i)] < labels[best]:
            best = int(i)
    return best


def _runner_up(labels, scores, skip: int) -> tuple[int, float]:
    best = -1
    m = -math.inf
    for i in range(len(scores)):
        if i == skip:
            continue
        s = scores[i]
        if best < 0 or s > m or (s == m and labels[i] < labels[best]):
            best, m = i, s
    return best, m


def decode_top1(scores: ScoreVector) -> LabelSet:
    """Exactly one label: the argmax."""
    if len(scores.labels) < 1:
        raise ValueError("empty score vector")
    return frozenset({scores.labels[_argmax_lex(scores.labels, scores.scores)]})


def decode_fixed(scores: ScoreVector, k: float = DEFAULT_FIXED_K) -> LabelSet:
    """All labels scoring strictly above k; possibly none."""
    if not 0.0 < k < 1.0:
        raise ValueError(f"threshold must be in (0, 1), got {k}")
    hits = np.flatnonzero(np.asarray(scores.scores) > k)
    result = frozenset(scores.labels[int(i)] for i in hits)
    if scores.kind == "softmax":
        # scores sum to 1, so more than floor(1/k) strict exceedances
        # is impossible
        assert len(result) <= math.floor(1.0 / k), "simplex cap violated"
    return result


def dynamic_threshold(scores: np.ndarray, m: float = DEFAULT_DYNAMIC_M,
                      sample_std: bool = False) -> float:
    """mean + m * standard deviation, in float64.

    Population sigma (divide by L) by default; sample_std switches to the
    L-1 divisor.
    """
    s = np.asarray(scores, dtype=np.float64)
    return float(s.mean() + m * s.std(ddof=1 if sample_std else 0))


def decode_dynamic(scores: ScoreVector, m: float = DEFAULT_DYNAMIC_M,
                   sample_std: bool = False) -> LabelSet:
    """The argmax, plus the runner-up if it clears the dynamic threshold."""
    labels, s = scores.labels, np.asarray(scores.scores, dtype=np.float64)
    if len(labels) < 2:
        raise ValueError("dynamic decoding needs at least two labels")
    theta = dynamic_threshold(s, m, sample_std)
    i1 = _argmax_lex(labels, s)
    i2, s2 = _runner_up(labels, s, i1)
    if s2 > theta:
        return frozenset({labels[i1], labels[i2]})
    return frozenset({labels[i1]})


def decode_closest_plus(scores: ScoreVector,
                        c: float = DEFAULT_CLOSEST_C) -> LabelSet:
    """The best label, plus the second-ranked one scoring above c.

    An empty score vector (no same-script candidates upstream) decodes to
    the empty set.
    """
    if not 0.0 < c <= 1.0:
        raise ValueError(f"threshold must be in (0, 1], got {c}")
    labels, s = scores.labels, np.asarray(scores.scores, dtype=np.float64)
    if len(labels) == 0:
        return frozenset()
    i1 = _argmax_lex(labels, s)
    if len(labels) == 1:
        return frozenset({labels[i1]})
    i2, s2 = _runner_up(labels, s, i1)
    if s2 > c:
        return frozenset({labels[i1], labels[i2]})
    return frozenset({labels[i1]})


def decode(scores: ScoreVector, strategy: DecodeStrategy) -> LabelSet:
    if strategy.kind == "top1":
        return decode_top1(scores)
    if strategy.kind == "fixed":
        return decode_fixed(scores, strategy.param)
    if strategy.kind == "dynamic":
        return decode_dynamic(scores, strategy.param)
    return decode_closest_plus(scores, strategy.param)


def default_strategy(score_kind: str) -> DecodeStrategy:
    """The conventional strategy for each score type."""
    if score_kind == "softmax":
        return DecodeStrategy("fixed", DEFAULT_FIXED_K)
    if score_kind == "sigmoid":
        return DecodeStrategy("dynamic", DEFAULT_DYNAMIC_M)
    return DecodeStrategy("closest", DEFAULT_CLOSEST_C)

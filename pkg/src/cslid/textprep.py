"""Text cleaning, tokenization, character n-grams, and vocabulary building.

The same preprocessing feeds both the linear classifiers and the trigram
classifier, so everything here is deterministic and total: cleaning never
fails, and rebuilding a vocabulary from the same corpus always yields the
same index assignment.
"""

from __future__ import annotations

import unicodedata
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import EmptyVocabulary
from .uniprops import VS15, VS16, ZWJ, codepoints, emoji_presentation_mask

# A feature bag is a multiset of vocabulary indices (int32, duplicates kept).
FeatureBag = np.ndarray

_HASH = 0x23


def clean(text: str) -> str:
    """Normalize to NFC, strip emoji / ``#`` / stray joiners, collapse spaces.

    Removes code points with Emoji_Presentation=Yes, the variation selectors
    U+FE0E/U+FE0F, and any zero-width joiner left touching a removed code
    point. Whitespace runs collapse to single spaces; case and scripts are
    untouched. Idempotent.
    """
    text = unicodedata.normalize("NFC", text)
    if text.isascii():
        if "#" in text:
            text = text.replace("#", "")
        return " ".join(text.split())

    cps = codepoints(text)
    rm = emoji_presentation_mask(cps)
    rm |= (cps == _HASH) | (cps == VS15) | (cps == VS16)
    zwj = cps == ZWJ
    if zwj.any():
        # a ZWJ is dangling if it touches a removed code point, including
        # a ZWJ removed earlier in the same chain
        while True:
            touch = np.zeros_like(rm)
            touch[1:] |= rm[:-1]
            touch[:-1] |= rm[1:]
            more = zwj & touch & ~rm
            if not more.any():
                break
            rm |= more
    if rm.any():
        text = cps[~rm].tobytes().decode("utf-32-le")
    text = " ".join(text.split())
    # removal can expose combining marks that now compose with their base
    return unicodedata.normalize("NFC", text)


def tokenize(text: str) -> list[str]:
    """Split on Unicode whitespace, preserving order; no empty tokens."""
    return text.split()


def char_ngrams(word: str, lo: int, hi: int) -> list[str]:
    """Code-point n-grams of ``<word>`` (boundary-marked), shortest first.

    Lengths run lo..hi inclusive; within a length, left to right; duplicates
    are kept.
    """
    if not 1 <= lo <= hi:
        raise ValueError(f"bad n-gram range [{lo}, {hi}]")
    wrapped = f"<{word}>"
    n_cp = len(wrapped)
    grams = []
    for n in range(lo, hi + 1):
        for i in range(n_cp - n + 1):
            grams.append(wrapped[i:i + n])
    return grams


@dataclass(frozen=True)
class Vocabulary:
    """Word and n-gram entries with dense, deterministic indices.

    Words occupy [0, n_words) in lexicographic order, n-grams follow in
    [n_words, n_words + n_ngrams), also lexicographic.
    """

    word_index: dict[str, int]
    ngram_index: dict[str, int]
    min_word_count: int
    ngram_lo: int
    ngram_hi: int

    @property
    def n_words(self) -> int:
        return len(self.word_index)

    @property
    def n_ngrams(self) -> int:
        return len(self.ngram_index)

    @property
    def size(self) -> int:
        return len(self.word_index) + len(self.ngram_index)

    def words(self) -> list[str]:
        """Word entries in index order."""
        return sorted(self.word_index, key=self.word_index.__getitem__)

    def ngrams(self) -> list[str]:
        """N-gram entries in index order."""
        return sorted(self.ngram_index, key=self.ngram_index.__getitem__)


def build_vocabulary(corpus: Iterable[Sequence[str]], min_word_count: int,
                     lo: int = 2, hi: int = 5) -> Vocabulary:
    """Count words over a token stream and index the survivors.

    Keeps words seen strictly more than *min_word_count* times, plus every
    distinct lo..hi-gram of those words. Raises EmptyVocabulary if nothing
    survives.
    """
    if min_word_count < 1:
        raise ValueError("min_word_count must be >= 1")
    counts: Counter[str] = Counter()
    for tokens in corpus:
        counts.update(tokens)
    kept = sorted(w for w, c in counts.items() if c > min_word_count)
    if not kept:
        raise EmptyVocabulary(
            f"no word seen more than {min_word_count} times "
            f"({len(counts)} distinct words counted)")
    grams: set[str] = set()
    for w in kept:
        grams.update(char_ngrams(w, lo, hi))
    word_index = {w: i for i, w in enumerate(kept)}
    base = len(kept)
    ngram_index = {g: base + i for i, g in enumerate(sorted(grams))}
    return Vocabulary(word_index, ngram_index, min_word_count, lo, hi)


def featurize(tokens: Sequence[str], vocab: Vocabulary) -> FeatureBag:
    """Multiset of indices for the tokens' words and known n-grams.

    Out-of-vocabulary words still contribute any of their n-grams that are
    indexed. The bag may be empty; callers decide what that means.
    """
    widx = vocab.word_index
    gidx = vocab.ngram_index
    lo, hi = vocab.ngram_lo, vocab.ngram_hi
    out: list[int] = []
    for tok in tokens:
        wi = widx.get(tok)
        if wi is not None:
            out.append(wi)
        for g in char_ngrams(tok, lo, hi):
            gi = gidx.get(g)
            if gi is not None:
                out.append(gi)
    return np.array(out, dtype=np.int32)


def vocabulary_to_tsv(vocab: Vocabulary) -> str:
    """Render ``entry<TAB>index<TAB>kind`` lines, index order."""
    lines = []
    for w in vocab.words():
        lines.append(f"{w}\t{vocab.word_index[w]}\tword")
    for g in vocab.ngrams():
        lines.append(f"{g}\t{vocab.ngram_index[g]}\tngram")
    return "\n".join(lines) + "\n"

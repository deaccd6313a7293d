"""Character-trigram rank-profile classifier with script gating.

Each language gets a profile: its R most frequent trigrams in rank order.
An input is compared only against languages written in its detected script,
using the classic out-of-place rank distance; distances are min-max scaled
so the closest language scores exactly 1.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import FormatError
from .model import ScoreVector
from .uniprops import codepoints, script_code_of, script_ids

DEFAULT_PROFILE_SIZE = 300

# Tag scripts that are unions of Unicode script values: a profile tagged
# Hans matches text whose majority script is Han, and so on.
_SCRIPT_CONSTITUENTS = {
    "Hans": ("Hani",),
    "Hant": ("Hani",),
    "Jpan": ("Hani", "Hira", "Kana"),
    "Kore": ("Hang", "Hani"),
    "Hrkt": ("Hira", "Kana"),
}


def detect_script(text: str) -> str | None:
    """ISO 15924 code of the strict-majority script, else None.

    Common, Inherited, and unassigned code points are not counted. Returns
    None on ties, mixed scripts with no majority, or no countable points.
    """
    ids = script_ids(codepoints(text))
    ids = ids[ids >= 0]
    if len(ids) == 0:
        return None
    counts = np.bincount(ids)
    best = int(np.argmax(counts))
    if 2 * int(counts[best]) > len(ids):
        return script_code_of(best)
    return None


def script_matches(tag_script: str, detected: str | None) -> bool:
    if detected is None:
        return False
    return detected in _SCRIPT_CONSTITUENTS.get(tag_script, (tag_script,))


def _count_trigrams(text: str, counts: Counter) -> None:
    for word in text.lower().split():
        padded = f"_{word}_"
        for i in range(len(padded) - 2):
            counts[padded[i:i + 3]] += 1


def profile(text: str | Iterable[str],
            size: int = DEFAULT_PROFILE_SIZE) -> tuple[str, ...]:
    """Top-*size* trigrams by frequency, ties broken lexicographically.

    Words are padded with a single ``_`` on each side before extraction and
    the text is lowercased. Accepts one string or an iterable of lines.
    """
    counts: Counter[str] = Counter()
    if isinstance(text, str):
        _count_trigrams(text, counts)
    else:
        for line in text:
            _count_trigrams(line, counts)
    ranked = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))
    return tuple(t for t, _ in ranked[:size])


def distance(input_ranks: tuple[str, ...], lang_ranks: tuple[str, ...],
             size: int = DEFAULT_PROFILE_SIZE) -> int:
    """Out-of-place distance: sum of rank displacements over the input's
    trigrams, with *size* as the penalty for trigrams the language profile
    lacks."""
    lang_pos = {t: r for r, t in enumerate(lang_ranks)}
    total = 0
    for r, t in enumerate(input_ranks):
        p = lang_pos.get(t)
        total += size if p is None else abs(r - p)
    return total


@dataclass(frozen=True)
class TrigramProfile:
    language: str          # e.g. "eng_Latn"
    script: str            # ISO 15924, from the tag
    ranks: tuple[str, ...]

    def __post_init__(self):
        if len(set(self.ranks)) != len(self.ranks):
            raise ValueError(f"duplicate trigrams in {self.language} profile")


@dataclass(frozen=True)
class ProfileSet:
    profiles: tuple[TrigramProfile, ...]
    size: int = DEFAULT_PROFILE_SIZE

    def __post_init__(self):
        langs = [p.language for p in self.profiles]
        if len(set(langs)) != len(langs):
            raise ValueError("duplicate language in profile set")
        for p in self.profiles:
            if len(p.ranks) > self.size:
                raise ValueError(
                    f"{p.language} profile longer than size {self.size}")


def tag_script(tag: str) -> str:
    """Script half of a language_Script tag."""
    lang, _, script = tag.partition("_")
    if not lang or not script:
        raise ValueError(f"tag {tag!r} is not of the form lang_Script")
    return script


def train_profiles(corpus: Iterable[tuple[str, frozenset[str]]],
                   size: int = DEFAULT_PROFILE_SIZE) -> ProfileSet:
    """Build one profile per language from (text, labels) pairs.

    A line labeled with several languages contributes its text to each of
    them. Text should already be cleaned.
    """
    counters: dict[str, Counter[str]] = {}
    for text, labels in corpus:
        for tag in labels:
            c = counters.get(tag)
            if c is None:
                c = counters[tag] = Counter()
            _count_trigrams(text, c)
    profiles = []
    for tag in sorted(counters):
        ranked = sorted(counters[tag].items(), key=lambda kv: (-kv[1], kv[0]))
        profiles.append(TrigramProfile(
            tag, tag_script(tag), tuple(t for t, _ in ranked[:size])))
    return ProfileSet(tuple(profiles), size)


def classify_trigram(text: str, pset: ProfileSet) -> ScoreVector:
    """Scores over same-script candidate languages, closest scaled to 1.

    Returns an empty score vector when no script has a strict majority in
    the text or no profile matches the detected script; downstream decoding
    then yields the empty prediction.
    """
    script = detect_script(text)
    cands = [p for p in pset.profiles if script_matches(p.script, script)]
    if not cands:
        return ScoreVector((), np.empty(0, dtype=np.float64), "scaled")
    in_ranks = profile(text, pset.size)
    d = np.array([distance(in_ranks, p.ranks, pset.size) for p in cands],
                 dtype=np.float64)
    lo, hi = d.min(), d.max()
    if hi == lo:
        scores = np.ones(len(cands))
    else:
        scores = 1.0 - (d - lo) / (hi - lo)
    return ScoreVector(tuple(p.language for p in cands), scores, "scaled")


# --- profile file I/O ---------------------------------------------------
#
# UTF-8 TSV, one language per line: tag <TAB> script <TAB> trigram:rank;...
# Trigrams may contain the separator characters, so backslash escapes are
# used for \ : ; tab and newline.

_ESC = {"\\": "\\\\", ":": "\\:", ";": "\\;", "\t": "\\t", "\n": "\\n"}
_UNESC = {"\\": "\\", ":": ":", ";": ";", "t": "\t", "n": "\n"}


def _escape(t: str) -> str:
    return "".join(_ESC.get(ch, ch) for ch in t)


def _split_items(field: str, sep: str) -> list[str]:
    items, cur, i = [], [], 0
    while i < len(field):
        ch = field[i]
        if ch == "\\" and i + 1 < len(field):
            cur.append(ch)
            cur.append(field[i + 1])
            i += 2
            continue
        if ch == sep:
            items.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
        i += 1
    items.append("".join(cur))
    return items


def _unescape(t: str, lineno: int) -> str:
    out, i = [], 0
    while i < len(t):
        ch = t[i]
        if ch == "\\":
            if i + 1 >= len(t) or t[i + 1] not in _UNESC:
                raise FormatError(f"bad escape in profile file line {lineno}")
            out.append(_UNESC[t[i + 1]])
            i += 2
        else:
            out.append(ch)
            i += 1
    return "".join(out)


def save_profiles(pset: ProfileSet, path: str) -> None:
    with open(path, "w", encoding="utf-8") as f:
        f.write(f"#cslid-profiles\tsize={pset.size}\n")
        for p in pset.profiles:
            items = ";".join(f"{_escape(t)}:{r}"
                             for r, t in enumerate(p.ranks))
            f.write(f"{p.language}\t{p.script}\t{items}\n")


def load_profiles(path: str) -> ProfileSet:
    with open(path, encoding="utf-8") as f:
        header = f.readline().rstrip("\n")
        if not header.startswith("#cslid-profiles\tsize="):
            raise FormatError(f"{path}: not a profile file (bad header)")
        try:
            size = int(header.split("size=", 1)[1])
        except ValueError:
            raise FormatError(f"{path}: bad size in header")
        profiles = []
        for lineno, line in enumerate(f, start=2):
            line = line.rstrip("\n")
            if not line:
                continue
            parts = line.split("\t")
            if len(parts) != 3:
                raise FormatError(
                    f"{path}: expected 3 tab-separated fields "
                    f"on line {lineno}")
            tag, script, items = parts
            ranks = []
            if items:
                for r, item in enumerate(_split_items(items, ";")):
                    fields = _split_items(item, ":")
                    if len(fields) != 2 or fields[1] != str(r):
                        raise FormatError(
                            f"{path}: bad trigram:rank item on line {lineno}")
                    ranks.append(_unescape(fields[0], lineno))
            profiles.append(TrigramProfile(tag, script, tuple(ranks)))
    return ProfileSet(tuple(profiles), size)

"""Fast lookups over the frozen Unicode property tables.

The tables in ``_unicode_data`` are flattened into sorted numpy arrays once
at import; membership tests are then vectorized binary searches, which keeps
per-line cleaning and script detection cheap on streaming input.
"""

import numpy as np

from ._unicode_data import EMOJI_PRESENTATION, SCRIPT_RANGES

ZWJ = 0x200D
VS15 = 0xFE0E
VS16 = 0xFE0F


def codepoints(text: str) -> np.ndarray:
    """Code points of *text* as a uint32 array."""
    if not text:
        return np.empty(0, dtype=np.uint32)
    return np.frombuffer(text.encode("utf-32-le"), dtype=np.uint32)


def _flatten(ranges):
    starts = np.array([lo for lo, _ in ranges], dtype=np.uint32)
    ends = np.array([hi for _, hi in ranges], dtype=np.uint32)
    order = np.argsort(starts)
    return starts[order], ends[order]


_EMOJI_STARTS, _EMOJI_ENDS = _flatten(EMOJI_PRESENTATION)

# All script ranges in one sorted table, each tagged with a script id.
_SCRIPTS = sorted(SCRIPT_RANGES)
_SCRIPT_IDS = {code: i for i, code in enumerate(_SCRIPTS)}
_all = [(lo, hi, _SCRIPT_IDS[code])
        for code, ranges in SCRIPT_RANGES.items() for lo, hi in ranges]
_all.sort()
_SCRIPT_STARTS = np.array([r[0] for r in _all], dtype=np.uint32)
_SCRIPT_ENDS = np.array([r[1] for r in _all], dtype=np.uint32)
_SCRIPT_TAG = np.array([r[2] for r in _all], dtype=np.int32)

NUM_SCRIPTS = len(_SCRIPTS)


def script_names() -> list[str]:
    """ISO 15924 codes covered by the tables, in id order."""
    return list(_SCRIPTS)


def emoji_presentation_mask(cps: np.ndarray) -> np.ndarray:
    """Boolean mask of code points with Emoji_Presentation=Yes."""
    idx = np.searchsorted(_EMOJI_STARTS, cps, side="right") - 1
    ok = idx >= 0
    safe = np.where(ok, idx, 0)
    return ok & (cps <= _EMOJI_ENDS[safe])


def script_ids(cps: np.ndarray) -> np.ndarray:
    """Script id per code point; -1 for Common/Inherited/unassigned."""
    idx = np.searchsorted(_SCRIPT_STARTS, cps, side="right") - 1
    ok = idx >= 0
    safe = np.where(ok, idx, 0)
    hit = ok & (cps <= _SCRIPT_ENDS[safe])
    return np.where(hit, _SCRIPT_TAG[safe], -1).astype(np.int32)


def script_id_of(code: str) -> int:
    """Id of an ISO 15924 code, or -1 if not in the tables."""
    return _SCRIPT_IDS.get(code, -1)


def script_code_of(script_id: int) -> str:
    return _SCRIPTS[script_id]

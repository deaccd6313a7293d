"""Label universe and raw-code normalization.

A universe is the ordered set of tags a pipeline scores against. Raw codes
from third-party tools (bare ISO 639 codes, legacy synonyms) are folded
into it through a static alias table; anything that neither matches a tag
nor an alias normalizes to EMPTY (None), which scoring treats as no
prediction.

The packaged default universe has 201 tags; a 204-tag variant and the
default alias table ship alongside it. All three are plain text files, so
a different tag scheme is a file away.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources
from typing import Iterable

from .errors import FormatError

EMPTY = None

DEFAULT_UNIVERSE_RESOURCE = "openlid-201.txt"
FULL_UNIVERSE_RESOURCE = "flores200-204.txt"
DEFAULT_ALIASES_RESOURCE = "aliases.tsv"


@dataclass(frozen=True)
class LabelUniverse:
    tags: tuple[str, ...]
    aliases: dict[str, str] = field(default_factory=dict)
    tag_set: frozenset[str] = field(init=False)

    def __post_init__(self):
        if len(set(self.tags)) != len(self.tags):
            raise ValueError("duplicate tags in universe")
        for t in self.tags:
            if not t or t.split() != [t]:
                raise ValueError(f"bad tag {t!r}")
        object.__setattr__(self, "tag_set", frozenset(self.tags))
        # alias targets outside the universe are unusable; drop them
        kept = {k: v for k, v in self.aliases.items() if v in self.tag_set}
        object.__setattr__(self, "aliases", kept)

    def __len__(self) -> int:
        return len(self.tags)

    def __contains__(self, tag: str) -> bool:
        return tag in self.tag_set


def normalize(raw: str, universe: LabelUniverse) -> str | None:
    """Fold a raw code into the universe; EMPTY (None) when impossible."""
    if raw in universe.tag_set:
        return raw
    return universe.aliases.get(raw, EMPTY)


def normalize_set(raw_tags: Iterable[str],
                  universe: LabelUniverse) -> frozenset[str]:
    """Normalize a label set, dropping EMPTY results."""
    out = set()
    for raw in raw_tags:
        tag = normalize(raw, universe)
        if tag is not EMPTY:
            out.add(tag)
    return frozenset(out)


def _read_lines(text: str) -> list[str]:
    out = []
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            out.append(line)
    return out


def load_universe(path: str, aliases_path: str | None = None) -> LabelUniverse:
    """Universe from a one-tag-per-line file, optionally with aliases."""
    with open(path, encoding="utf-8") as f:
        tags = _read_lines(f.read())
    if not tags:
        raise FormatError(f"{path}: no tags found")
    aliases = load_aliases(aliases_path) if aliases_path else {}
    return LabelUniverse(tuple(tags), aliases)


def load_aliases(path: str) -> dict[str, str]:
    """raw<TAB>target pairs; duplicates take the last value."""
    aliases = {}
    with open(path, encoding="utf-8") as f:
        for lineno, line in enumerate(f, start=1):
            line = line.rstrip("\n")
            if not line or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 2 or not parts[0] or not parts[1]:
                raise FormatError(
                    f"{path}: expected raw<TAB>target on line {lineno}")
            aliases[parts[0]] = parts[1]
    return aliases


def _resource_text(name: str) -> str:
    return (resources.files("cslid") / "data" / name).read_text("utf-8")


def default_universe() -> LabelUniverse:
    """The packaged 201-tag universe with the packaged alias table."""
    tags = tuple(_read_lines(_resource_text(DEFAULT_UNIVERSE_RESOURCE)))
    aliases = {}
    for line in _read_lines(_resource_text(DEFAULT_ALIASES_RESOURCE)):
        raw, _, target = line.partition("\t")
        aliases[raw] = target
    return LabelUniverse(tags, aliases)


def universe_from_tags(tags: Iterable[str]) -> LabelUniverse:
    """Ad-hoc universe: the given tags, sorted, no aliases."""
    return LabelUniverse(tuple(sorted(set(tags))))

"""Script detection shared by language tagging, token counting, and scoring."""

from __future__ import annotations

import enum

# CJK Unified Ideographs and its extension/compatibility blocks.
_CJK_RANGES = (
    (0x4E00, 0x9FFF),    # CJK Unified Ideographs
    (0x3400, 0x4DBF),    # Extension A
    (0xF900, 0xFAFF),    # Compatibility Ideographs
    (0x20000, 0x2A6DF),  # Extension B
    (0x2A700, 0x2EBEF),  # Extensions C-F
    (0x30000, 0x3134F),  # Extension G
)

# Latin letters: ASCII plus the Latin-1/Extended-A/B letter ranges.
_LATIN_RANGES = (
    (0x41, 0x5A),
    (0x61, 0x7A),
    (0xC0, 0xD6),
    (0xD8, 0xF6),
    (0xF8, 0x24F),
)


class Language(str, enum.Enum):
    LATIN = "latin"
    CJK = "cjk"
    MIXED = "mixed"


def is_cjk(ch: str) -> bool:
    cp = ord(ch)
    return any(lo <= cp <= hi for lo, hi in _CJK_RANGES)


def is_latin_letter(ch: str) -> bool:
    cp = ord(ch)
    return any(lo <= cp <= hi for lo, hi in _LATIN_RANGES)


def detect_language(text: str) -> Language:
    """Tag text by script: CJK if it has ideographs and no Latin letters,
    Mixed if both scripts appear, Latin otherwise."""
    has_cjk = False
    has_latin = False
    for ch in text:
        if not has_cjk and is_cjk(ch):
            has_cjk = True
        elif not has_latin and is_latin_letter(ch):
            has_latin = True
        if has_cjk and has_latin:
            return Language.MIXED
    if has_cjk:
        return Language.CJK
    return Language.LATIN

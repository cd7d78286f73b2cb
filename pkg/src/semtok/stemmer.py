"""English Snowball (Porter 2) stemmer and stem/suffix decomposition.

The stemmer follows the classic Porter 2 English algorithm as published by
the Snowball project (the rule set used before the 3.0 revision). It works on
lowercase words; anything outside ``a-z`` is simply a non-vowel.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

VOWELS = frozenset("aeiouy")
DOUBLES = ("bb", "dd", "ff", "gg", "mm", "nn", "pp", "rr", "tt")
VALID_LI = frozenset("cdeghkmnrt")

EXCEPTIONS1 = {
    "skis": "ski",
    "skies": "sky",
    "dying": "die",
    "lying": "lie",
    "tying": "tie",
    "idly": "idl",
    "gently": "gentl",
    "ugly": "ugli",
    "early": "earli",
    "only": "onli",
    "singly": "singl",
    "sky": "sky",
    "news": "news",
    "howe": "howe",
    "atlas": "atlas",
    "cosmos": "cosmos",
    "bias": "bias",
    "andes": "andes",
}
EXCEPTIONS2 = frozenset(
    ["inning", "outing", "canning", "herring", "earring", "proceed", "exceed", "succeed"]
)
REGION_PREFIXES = ("gener", "commun", "arsen")

# (suffix, replacement); a replacement of None marks a rule with an extra test.
STEP2 = [
    ("ization", "ize"), ("ational", "ate"), ("fulness", "ful"), ("ousness", "ous"),
    ("iveness", "ive"), ("tional", "tion"), ("biliti", "ble"), ("lessli", "less"),
    ("entli", "ent"), ("ation", "ate"), ("alism", "al"), ("aliti", "al"),
    ("ousli", "ous"), ("iviti", "ive"), ("fulli", "ful"), ("enci", "ence"),
    ("anci", "ance"), ("abli", "able"), ("izer", "ize"), ("ator", "ate"),
    ("alli", "al"), ("bli", "ble"), ("ogi", None), ("li", None),
]
STEP3 = [
    ("ational", "ate"), ("tional", "tion"), ("alize", "al"), ("icate", "ic"),
    ("iciti", "ic"), ("ative", None), ("ical", "ic"), ("ness", ""), ("ful", ""),
]
STEP4 = [
    "ement", "ance", "ence", "able", "ible", "ment", "ant", "ent", "ism", "ate",
    "iti", "ous", "ive", "ize", "ion", "al", "er", "ic",
]


def _longest(word: str, entries):
    """Return the entry with the longest suffix ending ``word``, or None.

    Porter 2 commits to the longest match even when its condition then fails.
    """
    best = None
    for entry in entries:
        suffix = entry[0] if isinstance(entry, tuple) else entry
        if word.endswith(suffix):
            if best is None or len(suffix) > len(best[0] if isinstance(best, tuple) else best):
                best = entry
    return best


def _is_vowel(ch: str) -> bool:
    return ch in VOWELS


def _short_syllable_at_end(w: str) -> bool:
    """True if ``w`` ends in a short syllable."""
    n = len(w)
    if n >= 3:
        a, b, c = w[-3], w[-2], w[-1]
        if not _is_vowel(a) and _is_vowel(b) and not _is_vowel(c) and c not in "wxY":
            return True
    if n == 2:
        return _is_vowel(w[0]) and not _is_vowel(w[1])
    return False


def _mark_regions(w: str) -> tuple[int, int]:
    n = len(w)

    def after_vc(start: int) -> int:
        i = start
        while i < n and not _is_vowel(w[i]):
            i += 1
        while i < n and _is_vowel(w[i]):
            i += 1
        return min(i + 1, n) if i < n else n

    p1 = None
    for prefix in REGION_PREFIXES:
        if w.startswith(prefix):
            p1 = len(prefix)
            break
    if p1 is None:
        p1 = after_vc(0)
    p2 = after_vc(p1)
    return p1, p2


def _prelude(word: str) -> str:
    if word.startswith("'"):
        word = word[1:]
    chars = list(word)
    if chars and chars[0] == "y":
        chars[0] = "Y"
    for i in range(1, len(chars)):
        if chars[i] == "y" and _is_vowel(chars[i - 1]):
            chars[i] = "Y"
    return "".join(chars)


def _step0(w: str) -> str:
    for suffix in ("'s'", "'s", "'"):
        if w.endswith(suffix):
            return w[: -len(suffix)]
    return w


def _step1a(w: str) -> str:
    if w.endswith("sses"):
        return w[:-2]
    if w.endswith("ied") or w.endswith("ies"):
        return w[:-2] if len(w) > 4 else w[:-1]
    if w.endswith("us") or w.endswith("ss"):
        return w
    if w.endswith("s"):
        # a vowel must occur before the letter preceding the s
        if any(_is_vowel(c) for c in w[:-2]):
            return w[:-1]
    return w


def _step1b(w: str, p1: int) -> str:
    hit = _longest(w, ("eedly", "ingly", "edly", "eed", "ing", "ed"))
    if hit is None:
        return w
    if hit in ("eed", "eedly"):
        if len(w) - len(hit) >= p1:
            return w[: -len(hit)] + "ee"
        return w
    stem = w[: -len(hit)]
    if not any(_is_vowel(c) for c in stem):
        return w
    if stem.endswith(("at", "bl", "iz")):
        return stem + "e"
    if stem.endswith(DOUBLES):
        return stem[:-1]
    if p1 == len(stem) and _short_syllable_at_end(stem):
        return stem + "e"
    return stem


def _step1c(w: str) -> str:
    if len(w) > 2 and w[-1] in "yY" and not _is_vowel(w[-2]):
        return w[:-1] + "i"
    return w


def _step2(w: str, p1: int) -> str:
    hit = _longest(w, STEP2)
    if hit is None:
        return w
    suffix, repl = hit
    start = len(w) - len(suffix)
    if start < p1:
        return w
    if suffix == "ogi":
        return w[:start] + "og" if start > 0 and w[start - 1] == "l" else w
    if suffix == "li":
        return w[:start] if start > 0 and w[start - 1] in VALID_LI else w
    return w[:start] + repl


def _step3(w: str, p1: int, p2: int) -> str:
    hit = _longest(w, STEP3)
    if hit is None:
        return w
    suffix, repl = hit
    start = len(w) - len(suffix)
    if start < p1:
        return w
    if suffix == "ative":
        return w[:start] if start >= p2 else w
    return w[:start] + repl


def _step4(w: str, p2: int) -> str:
    hit = _longest(w, STEP4)
    if hit is None:
        return w
    start = len(w) - len(hit)
    if start < p2:
        return w
    if hit == "ion":
        return w[:start] if start > 0 and w[start - 1] in "st" else w
    return w[:start]


def _step5(w: str, p1: int, p2: int) -> str:
    start = len(w) - 1
    if w.endswith("e"):
        if start >= p2 or (start >= p1 and not _short_syllable_at_end(w[:start])):
            return w[:start]
    elif w.endswith("l"):
        if start >= p2 and start > 0 and w[start - 1] == "l":
            return w[:start]
    return w


@lru_cache(maxsize=1 << 16)
def stem(word: str) -> str:
    """Return the Porter 2 stem of a lowercase word.

    >>> stem("advise"), stem("condition"), stem("flies")
    ('advis', 'condit', 'fli')
    """
    if word in EXCEPTIONS1:
        return EXCEPTIONS1[word]
    if len(word) < 3:
        return word
    w = _prelude(word)
    p1, p2 = _mark_regions(w)
    w = _step1a(_step0(w))
    if w not in EXCEPTIONS2:
        w = _step1b(w, p1)
        w = _step1c(w)
        w = _step2(w, p1)
        w = _step3(w, p1, p2)
        w = _step4(w, p2)
        w = _step5(w, p1, p2)
    return w.replace("Y", "y")


@dataclass(frozen=True)
class StemSplit:
    stem: str
    suffix: str

    @property
    def word(self) -> str:
        return self.stem + self.suffix


def split_stem_suffix(word: str, min_stem_length: int = 2) -> Optional[StemSplit]:
    """Split ``word`` at its stem when the stem is a strict character prefix.

    Returns None when stemming is not possible: the stem equals the word,
    the stem rewrites letters (``happy`` -> ``happi``), or it is shorter than
    ``min_stem_length``.
    """
    s = stem(word)
    if len(s) < max(min_stem_length, 1) or len(s) >= len(word) or not word.startswith(s):
        return None
    return StemSplit(s, word[len(s):])

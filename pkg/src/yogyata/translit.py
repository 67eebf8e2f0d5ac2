"""Deterministic transliteration among IAST, SLP1, and Devanagari.

IAST is the canonical storage form; SLP1 serves romanized typing and
Devanagari serves display. Conversion pivots through SLP1 (one code per
sound), tokenizing the source with longest-match so digraphs like "ch"
and "ai" win over their prefixes. Characters outside a scheme pass
through unchanged; anything that is not ordinary punctuation or a digit
is additionally flagged for the caller.
"""

from __future__ import annotations

import enum
import unicodedata
from dataclasses import dataclass

from .errors import ValidationError


class Scheme(enum.Enum):
    IAST = "iast"
    SLP1 = "slp1"
    DEVANAGARI = "devanagari"

    @classmethod
    def parse(cls, text: str) -> "Scheme":
        key = str(text).strip().lower()
        for scheme in cls:
            if key == scheme.value:
                return scheme
        raise ValidationError(
            f"unknown scheme {text!r}; expected one of {[s.value for s in cls]}")


# One (IAST, SLP1) pair per sound. Order is irrelevant; the tokenizer
# always prefers the longest match.
_IAST_SLP1 = [
    ("a", "a"), ("ā", "A"), ("i", "i"), ("ī", "I"), ("u", "u"), ("ū", "U"),
    ("ṛ", "f"), ("ṝ", "F"), ("ḷ", "x"), ("ḹ", "X"),
    ("e", "e"), ("ai", "E"), ("o", "o"), ("au", "O"),
    ("ṃ", "M"), ("ḥ", "H"), ("m̐", "~"),
    ("k", "k"), ("kh", "K"), ("g", "g"), ("gh", "G"), ("ṅ", "N"),
    ("c", "c"), ("ch", "C"), ("j", "j"), ("jh", "J"), ("ñ", "Y"),
    ("ṭ", "w"), ("ṭh", "W"), ("ḍ", "q"), ("ḍh", "Q"), ("ṇ", "R"),
    ("t", "t"), ("th", "T"), ("d", "d"), ("dh", "D"), ("n", "n"),
    ("p", "p"), ("ph", "P"), ("b", "b"), ("bh", "B"), ("m", "m"),
    ("y", "y"), ("r", "r"), ("l", "l"), ("v", "v"),
    ("ś", "S"), ("ṣ", "z"), ("s", "s"), ("h", "h"), ("ḻ", "L"),
    ("'", "'"),
]

_IAST_TO_CODE = {iast: code for iast, code in _IAST_SLP1}
_CODE_TO_IAST = {code: iast for iast, code in _IAST_SLP1}
_IAST_MAX = max(len(k) for k in _IAST_TO_CODE)

_VOWELS = set("aAiIuUfFxXeEoO")
_SIGNS = set("MH~")

_CODE_TO_DEVA_CONSONANT = {
    "k": "क", "K": "ख", "g": "ग", "G": "घ", "N": "ङ",
    "c": "च", "C": "छ", "j": "ज", "J": "झ", "Y": "ञ",
    "w": "ट", "W": "ठ", "q": "ड", "Q": "ढ", "R": "ण",
    "t": "त", "T": "थ", "d": "द", "D": "ध", "n": "न",
    "p": "प", "P": "फ", "b": "ब", "B": "भ", "m": "म",
    "y": "य", "r": "र", "l": "ल", "v": "व",
    "S": "श", "z": "ष", "s": "स", "h": "ह", "L": "ळ",
}
_CODE_TO_DEVA_VOWEL = {
    "a": "अ", "A": "आ", "i": "इ", "I": "ई", "u": "उ", "U": "ऊ",
    "f": "ऋ", "F": "ॠ", "x": "ऌ", "X": "ॡ",
    "e": "ए", "E": "ऐ", "o": "ओ", "O": "औ",
}
_CODE_TO_DEVA_MATRA = {
    "a": "", "A": "ा", "i": "ि", "I": "ी", "u": "ु", "U": "ू",
    "f": "ृ", "F": "ॄ", "x": "ॢ", "X": "ॣ",
    "e": "े", "E": "ै", "o": "ो", "O": "ौ",
}
_CODE_TO_DEVA_SIGN = {"M": "ं", "H": "ः", "~": "ँ"}

_VIRAMA = "्"
_AVAGRAHA = "ऽ"

_DEVA_CONSONANTS = {v: k for k, v in _CODE_TO_DEVA_CONSONANT.items()}
_DEVA_VOWELS = {v: k for k, v in _CODE_TO_DEVA_VOWEL.items()}
_DEVA_MATRAS = {v: k for k, v in _CODE_TO_DEVA_MATRA.items() if v}
_DEVA_SIGNS = {v: k for k, v in _CODE_TO_DEVA_SIGN.items()}

#: Characters that pass through any scheme without being flagged.
_COMMON = set(" \t\n\r0123456789.,;:!?()[]{}\"-_/=+")

_CODE = "code"
_RAW = "raw"


@dataclass(frozen=True)
class TransliterationResult:
    text: str
    flagged: tuple[str, ...]


def _decode_iast(text: str):
    pos = 0
    while pos < len(text):
        for width in range(min(_IAST_MAX, len(text) - pos), 0, -1):
            chunk = text[pos:pos + width]
            if chunk in _IAST_TO_CODE:
                yield (_CODE, _IAST_TO_CODE[chunk])
                pos += width
                break
        else:
            yield (_RAW, text[pos])
            pos += 1


def _decode_slp1(text: str):
    for ch in text:
        if ch in _CODE_TO_IAST:
            yield (_CODE, ch)
        else:
            yield (_RAW, ch)


def _decode_devanagari(text: str):
    """Unwind inherent vowels: a bare consonant glyph carries an "a"."""
    inherent = False
    for ch in text:
        if ch == _VIRAMA:
            inherent = False
            continue
        if ch in _DEVA_MATRAS:
            yield (_CODE, _DEVA_MATRAS[ch])
            inherent = False
            continue
        if inherent:
            yield (_CODE, "a")
            inherent = False
        if ch in _DEVA_CONSONANTS:
            yield (_CODE, _DEVA_CONSONANTS[ch])
            inherent = True
        elif ch in _DEVA_VOWELS:
            yield (_CODE, _DEVA_VOWELS[ch])
        elif ch in _DEVA_SIGNS:
            yield (_CODE, _DEVA_SIGNS[ch])
        elif ch == _AVAGRAHA:
            yield (_CODE, "'")
        else:
            yield (_RAW, ch)
    if inherent:
        yield (_CODE, "a")


def _encode_slp1(pieces) -> str:
    return "".join(value for _, value in pieces)


def _encode_iast(pieces) -> str:
    out = []
    for kind, value in pieces:
        out.append(_CODE_TO_IAST[value] if kind == _CODE else value)
    return "".join(out)


def _encode_devanagari(pieces) -> str:
    out = []
    pending_consonant = False
    for kind, value in pieces:
        if kind == _CODE and value in _CODE_TO_DEVA_CONSONANT:
            if pending_consonant:
                out.append(_VIRAMA)
            out.append(_CODE_TO_DEVA_CONSONANT[value])
            pending_consonant = True
            continue
        if kind == _CODE and value in _CODE_TO_DEVA_VOWEL:
            if pending_consonant:
                out.append(_CODE_TO_DEVA_MATRA[value])
                pending_consonant = False
            else:
                out.append(_CODE_TO_DEVA_VOWEL[value])
            continue
        if pending_consonant:
            out.append(_VIRAMA)
            pending_consonant = False
        if kind == _CODE and value in _CODE_TO_DEVA_SIGN:
            out.append(_CODE_TO_DEVA_SIGN[value])
        elif kind == _CODE and value == "'":
            out.append(_AVAGRAHA)
        else:
            out.append(value)
    if pending_consonant:
        out.append(_VIRAMA)
    return "".join(out)


_DECODERS = {
    Scheme.IAST: _decode_iast,
    Scheme.SLP1: _decode_slp1,
    Scheme.DEVANAGARI: _decode_devanagari,
}
_ENCODERS = {
    Scheme.IAST: _encode_iast,
    Scheme.SLP1: _encode_slp1,
    Scheme.DEVANAGARI: _encode_devanagari,
}


def convert(text: str, source: Scheme, target: Scheme) -> TransliterationResult:
    """Transliterate and report any characters that were passed through."""
    source = Scheme.parse(source.value if isinstance(source, Scheme) else source)
    target = Scheme.parse(target.value if isinstance(target, Scheme) else target)
    text = unicodedata.normalize("NFC", text)
    if source is target:
        return TransliterationResult(text=text, flagged=())
    pieces = list(_DECODERS[source](text))
    flagged = tuple(value for kind, value in pieces
                    if kind == _RAW and value not in _COMMON)
    return TransliterationResult(text=_ENCODERS[target](pieces), flagged=flagged)


def transliterate(text: str, source: Scheme, target: Scheme) -> str:
    return convert(text, source, target).text

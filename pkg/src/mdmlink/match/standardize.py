"""Record standardization: normalization, Soundex, nicknames, digit fields."""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from ..datagen import tables
from ..datagen.core import SourceRecord

# attribute handling classes
NAME_ATTRS = {"given_name", "last_name"}
DIGIT_ATTRS = {"phone", "national_id", "zip"}
DATE_ATTRS = {"dob"}

# attributes that participate in match scoring
MATCH_ATTRIBUTES = [
    "given_name", "last_name", "gender", "dob", "street", "city", "state",
    "zip", "phone", "email", "national_id", "employer", "ethnicity",
]

_PUNCT = re.compile(r"[^A-Z0-9 ]+")
_SPACES = re.compile(r"\s+")

_SOUNDEX_CODES = {
    **dict.fromkeys("BFPV", "1"),
    **dict.fromkeys("CGJKQSXZ", "2"),
    **dict.fromkeys("DT", "3"),
    "L": "4",
    **dict.fromkeys("MN", "5"),
    "R": "6",
}


def normalize(value: str) -> str:
    """Uppercase, strip punctuation, collapse whitespace."""
    v = _PUNCT.sub(" ", value.upper())
    return _SPACES.sub(" ", v).strip()


def digits_only(value: str) -> str:
    return re.sub(r"\D", "", value)


def soundex(word: str) -> str:
    """Classic 4-character Soundex code; empty input gives empty code."""
    word = re.sub(r"[^A-Z]", "", word.upper())
    if not word:
        return ""
    first = word[0]
    code = first
    prev = _SOUNDEX_CODES.get(first, "")
    for ch in word[1:]:
        digit = _SOUNDEX_CODES.get(ch, "")
        if digit and digit != prev:
            code += digit
        if ch not in "HW":
            prev = digit
    return (code + "000")[:4]


def canonical_given_name(name: str) -> str:
    """Nickname -> canonical form via the bundled table; pass-through otherwise."""
    return tables.NICKNAME_TO_CANONICAL.get(name, name)


@dataclass
class StandardizedRecord:
    record_id: str
    source: str
    values: dict[str, str]  # attr -> normalized value (digits for digit fields)
    phonetic: dict[str, str] = field(default_factory=dict)  # name attr -> soundex
    canonical: dict[str, str] = field(default_factory=dict)  # given_name -> canonical


def standardize(record: SourceRecord) -> StandardizedRecord:
    """Pure derivation of the normalized comparison form of a record."""
    values: dict[str, str] = {}
    phonetic: dict[str, str] = {}
    canonical: dict[str, str] = {}
    for attr, raw in record.attributes.items():
        if raw is None or raw == "":
            continue
        if attr in DIGIT_ATTRS:
            norm = digits_only(raw)
        else:
            norm = normalize(raw)
        if not norm:
            continue
        values[attr] = norm
        if attr in NAME_ATTRS:
            phonetic[attr] = soundex(norm.split(" ")[0])
        if attr == "given_name":
            canonical[attr] = canonical_given_name(norm)
    return StandardizedRecord(record.record_id, record.source, values, phonetic, canonical)


def edit_distance(a: str, b: str, limit: int | None = None) -> int:
    """Levenshtein distance; with ``limit``, returns limit+1 once exceeded."""
    if a == b:
        return 0
    if len(a) > len(b):
        a, b = b, a
    if limit is not None and len(b) - len(a) > limit:
        return limit + 1
    prev = list(range(len(a) + 1))
    for j, cb in enumerate(b, 1):
        cur = [j]
        for i, ca in enumerate(a, 1):
            cur.append(min(prev[i] + 1, cur[i - 1] + 1, prev[i - 1] + (ca != cb)))
        if limit is not None and min(cur) > limit:
            return limit + 1
        prev = cur
    return prev[-1]

"""Consistent pseudonymization of identifying values.

Two mechanisms, chosen by value shape:

* Character ciphers (per attribute class): letters permute within their
  Soundex groups, digits permute with no fixed points, separators stay put.
  A character bijection is a string homomorphism, so equality, every edit
  distance, and phonetic equivalence survive exactly. Used for names,
  addresses, dates, and dash-formatted ids (whose digit runs are too short
  to collide with protected 5+ digit values).

* Hub replay (pure digit strings of 5+ digits: phones, zips): values are
  grouped by the one-edit relation, the most frequent member of each group
  (the canonical value its typos orbit) gets fresh random digits screened
  against every protected original, and each other member replays its edit
  script from the hub onto that base. Star-shaped typo clusters keep their
  pairwise distances.

Nickname pairs are the one relation a cipher cannot carry, so nicknames
whose canonical form is present map to a phonetic variant of the canonical
pseudonym instead. The match engine therefore behaves identically on
anonymized data and resolution reproduces the original partition.

Graph-mode dates are shifted by a per-node constant day offset (order within
an entity preserved); record-mode dates go through the date cipher so that
equality across records survives without knowing entity ids.
"""

from __future__ import annotations

import datetime
import json
from collections import Counter
from dataclasses import dataclass, field

from .datagen import tables
from .datagen.core import SourceRecord
from .errors import UnclassedSensitiveAttributeError
from .graph import Edge, Node, PropertyGraph, build_graph
from .match.standardize import edit_distance, soundex
from .rng import SplitMix64

NAME_CLASS = "name"
ADDRESS_CLASS = "address"
PHONE_CLASS = "phone"
ID_CLASS = "id"
DATE_CLASS = "date"

# default attribute -> class assignment for the bundled person schema;
# lineage and categorical protected attributes stay unclassed on purpose.
ATTRIBUTE_CLASSES: dict[str, str] = {
    "given_name": NAME_CLASS,
    "last_name": NAME_CLASS,
    "employer": NAME_CLASS,
    "street": ADDRESS_CLASS,
    "city": ADDRESS_CLASS,
    "phone": PHONE_CLASS,
    "national_id": ID_CLASS,
    "zip": ID_CLASS,
    "email": ID_CLASS,
    "dob": DATE_CLASS,
}

SENSITIVE_UNCLASSED: set[str] = set()  # extension point for schema audits

# letters permuting within a group keep Soundex codes aligned
_SOUNDEX_GROUPS = ["BFPV", "CGJKQSXZ", "DT", "L", "MN", "R", "AEIOU", "Y", "HW"]
_VOWELS = "AEIOU"
_DIGITS = "0123456789"


@dataclass
class ShiftMap:
    """Injective original -> pseudonym map per attribute class."""

    values: dict[str, dict[str, str]] = field(default_factory=dict)
    date_offsets: dict[int, int] = field(default_factory=dict)  # node id -> days

    def lookup(self, cls: str, value: str) -> str | None:
        return self.values.get(cls, {}).get(value)

    def to_json(self) -> str:
        return json.dumps(
            {
                "values": self.values,
                "date_offsets": {str(k): v for k, v in self.date_offsets.items()},
            },
            indent=2,
            sort_keys=True,
        )


def _derangement(rng: SplitMix64, chars: str) -> dict[str, str]:
    """Permutation of ``chars`` with no fixed points (when len > 1)."""
    chars = list(chars)
    if len(chars) == 1:
        return {chars[0]: chars[0]}
    for _ in range(500):
        perm = list(chars)
        rng.shuffle(perm)
        if all(a != b for a, b in zip(chars, perm)):
            return dict(zip(chars, perm))
    return dict(zip(chars, chars[1:] + chars[:1]))


def _make_cipher(rng: SplitMix64) -> dict[str, str]:
    """Character bijection: Soundex-group-preserving letters, deranged digits."""
    table: dict[str, str] = {}
    for group in _SOUNDEX_GROUPS:
        table.update(_derangement(rng, group))
    table.update(_derangement(rng, _DIGITS))
    for upper, sub in list(table.items()):
        if upper.isalpha():
            table[upper.lower()] = sub.lower()
    return table


def _apply_cipher(value: str, cipher: dict[str, str]) -> str:
    return "".join(cipher.get(ch, ch) for ch in value)


def _is_plain_digits(value: str) -> bool:
    return len(value) >= 5 and value.isdigit()


def _shift_date(value: str, offset_days: int) -> str:
    try:
        d = datetime.date.fromisoformat(value)
    except ValueError:
        return value
    return (d + datetime.timedelta(days=offset_days)).isoformat()


def _collect_class_values(
    attr_maps: list[dict[str, str]], classes: dict[str, str]
) -> dict[str, Counter]:
    out: dict[str, Counter] = {}
    for attrs in attr_maps:
        for attr, value in attrs.items():
            if attr in SENSITIVE_UNCLASSED:
                raise UnclassedSensitiveAttributeError(
                    f"attribute {attr} marked sensitive but has no class"
                )
            cls = classes.get(attr)
            if cls and value:
                out.setdefault(cls, Counter())[value] += 1
    return out


class _DigitScreen:
    """Tracks protected digit values and already-issued pseudonyms."""

    def __init__(self, forbidden: set[str], seed: int):
        self.forbidden = {v for v in forbidden if len(v) >= 2}
        self.used: set[str] = set()
        self.rng = SplitMix64(seed).fork("digit-screen")

    def clean(self, candidate: str) -> bool:
        if candidate in self.used:
            return False
        return not any(orig in candidate for orig in self.forbidden)

    def fresh(self, length: int) -> str:
        for _ in range(500):
            cand = "".join(str(self.rng.randint(0, 9)) for _ in range(length))
            if self.clean(cand):
                self.used.add(cand)
                return cand
        raise RuntimeError("could not generate clean digits")


def _edit_script(a: str, b: str) -> list[tuple[str, int, str]]:
    """Ops transforming a -> b: (kind, position-in-a, char), via DP backtrace."""
    la, lb = len(a), len(b)
    dp = [[0] * (lb + 1) for _ in range(la + 1)]
    for i in range(la + 1):
        dp[i][0] = i
    for j in range(lb + 1):
        dp[0][j] = j
    for i in range(1, la + 1):
        for j in range(1, lb + 1):
            dp[i][j] = min(
                dp[i - 1][j] + 1,
                dp[i][j - 1] + 1,
                dp[i - 1][j - 1] + (a[i - 1] != b[j - 1]),
            )
    ops = []
    i, j = la, lb
    while i > 0 or j > 0:
        if i > 0 and j > 0 and dp[i][j] == dp[i - 1][j - 1] + (a[i - 1] != b[j - 1]):
            if a[i - 1] != b[j - 1]:
                ops.append(("sub", i - 1, b[j - 1]))
            i, j = i - 1, j - 1
        elif i > 0 and dp[i][j] == dp[i - 1][j] + 1:
            ops.append(("del", i - 1, ""))
            i -= 1
        else:
            ops.append(("ins", i, b[j - 1]))
            j -= 1
    return list(reversed(ops))


def _replay_script(
    base: str, ops: list[tuple[str, int, str]], screen: _DigitScreen, cipher: dict[str, str]
) -> str:
    """Apply the hub->member edit script to the hub's pseudonym."""
    for variant_round in range(12):
        out = base
        shift = 0
        for kind, pos, ch in ops:
            p = min(pos + shift, len(out))
            sub = cipher.get(ch, ch)
            if variant_round:
                sub = str((int(sub) + variant_round) % 10) if sub.isdigit() else sub
            if kind == "sub" and p < len(out):
                if sub == out[p]:
                    sub = str((int(sub) + 1) % 10) if sub.isdigit() else "X"
                out = out[:p] + sub + out[p + 1 :]
            elif kind == "del" and p < len(out):
                out = out[:p] + out[p + 1 :]
                shift -= 1
            elif kind == "ins":
                out = out[:p] + sub + out[p:]
                shift += 1
        if screen.clean(out):
            screen.used.add(out)
            return out
    return screen.fresh(len(base))


def _map_digit_values(
    counts: Counter, screen: _DigitScreen, cipher: dict[str, str]
) -> dict[str, str]:
    """Hub-replay mapping for pure digit strings (typo clusters stay clusters)."""
    values = sorted(counts)
    # one-edit grouping via deletion signatures
    sig_index: dict[str, list[int]] = {}
    for idx, v in enumerate(values):
        for sig in [v] + [v[:i] + v[i + 1 :] for i in range(len(v))] + [
            v[:i] + "\x00" + v[i + 1 :] for i in range(len(v))
        ]:
            sig_index.setdefault(sig, []).append(idx)
    parent = list(range(len(values)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for members in sig_index.values():
        for idx in members[1:]:
            a, b = values[members[0]], values[idx]
            if edit_distance(a, b, limit=1) <= 1:
                ra, rb = find(members[0]), find(idx)
                if ra != rb:
                    parent[max(ra, rb)] = min(ra, rb)
    groups: dict[int, list[str]] = {}
    for idx, v in enumerate(values):
        groups.setdefault(find(idx), []).append(v)

    mapping: dict[str, str] = {}
    for root in sorted(groups):
        group = groups[root]
        hub = max(group, key=lambda v: (counts[v], v))
        base = screen.fresh(len(hub))
        mapping[hub] = base
        for member in group:
            if member == hub:
                continue
            mapping[member] = _replay_script(base, _edit_script(hub, member), screen, cipher)
    return mapping


def _nickname_overrides(
    name_values: set[str], cipher: dict[str, str], used: set[str], rng: SplitMix64
) -> dict[str, str]:
    """Map nicknames to phonetic variants of their canonical pseudonym.

    The cipher cannot preserve nickname-table equivalence, so when both the
    nickname and its canonical form occur in the corpus the nickname gets a
    vowel-edited copy of the canonical pseudonym (same Soundex code).
    """
    overrides: dict[str, str] = {}
    for nick in sorted(name_values):
        canon = tables.NICKNAME_TO_CANONICAL.get(nick)
        if not canon or canon not in name_values:
            continue
        base = _apply_cipher(canon, cipher)
        vowel_positions = [i for i, ch in enumerate(base) if ch in _VOWELS]
        pseudonym = None
        for _ in range(80):
            if not vowel_positions:
                break
            pos = rng.choice(vowel_positions)
            new = rng.choice(_VOWELS)
            if new == base[pos]:
                continue
            cand = base[:pos] + new + base[pos + 1 :]
            if cand not in used:
                pseudonym = cand
                break
        if pseudonym is None:
            for pos in range(1, len(base) + 1):
                for v in _VOWELS:
                    cand = base[:pos] + v + base[pos:]
                    if cand not in used and soundex(cand) == soundex(base):
                        pseudonym = cand
                        break
                if pseudonym:
                    break
        if pseudonym is not None:
            overrides[nick] = pseudonym
            used.add(pseudonym)
    return overrides


def _leaking_originals(pseudonyms: dict[str, str], forbidden: set[str]) -> list[str]:
    blob = "\x01".join(pseudonyms.values())
    return [orig for orig in forbidden if orig in blob]


def _fix_leaks(
    mapping: dict[str, str], forbidden: set[str], used: set[str]
) -> None:
    """Rewrite leaking pseudonyms in place with vowel edits inside the window.

    Vowel substitutions keep Soundex codes, and identical leaks get identical
    fixes, so phonetic nearness and aligned typo clusters survive the repair.
    """
    for _ in range(25):
        bad = set(_leaking_originals(mapping, forbidden))
        if not bad:
            return
        for value in sorted(mapping):
            p = mapping[value]
            hit = next((orig for orig in bad if orig in p), None)
            if hit is None:
                continue
            start = p.index(hit)
            span = range(start, start + len(hit))
            vowels_in_span = [i for i in span if p[i].upper() in _VOWELS]
            fixed = None
            for i in vowels_in_span or list(span):
                ch = p[i]
                pool = _VOWELS if ch.upper() in _VOWELS else _VOWELS
                for repl in pool:
                    repl = repl.lower() if ch.islower() else repl
                    if repl == ch:
                        continue
                    cand = p[:i] + repl + p[i + 1 :]
                    if cand not in used and not any(o in cand for o in forbidden):
                        fixed = cand
                        break
                if fixed:
                    break
            if fixed is None:
                # insert a vowel after the window start as a last resort
                for repl in _VOWELS:
                    cand = p[: start + 1] + repl + p[start + 1 :]
                    if cand not in used:
                        fixed = cand
                        break
            if fixed is not None:
                used.discard(p)
                used.add(fixed)
                mapping[value] = fixed
    remaining = _leaking_originals(mapping, forbidden)
    if remaining:
        raise RuntimeError(f"unresolvable pseudonym leaks: {remaining[:3]}")


def build_shift_map(class_values: dict[str, Counter], seed: int) -> ShiftMap:
    """Per-class map; cipher seeds retried until no original leaks through."""
    forbidden = {v for vs in class_values.values() for v in vs if len(v) >= 2}
    digit_forbidden = {v for v in forbidden if any(ch.isdigit() for ch in v)}
    screen = _DigitScreen(digit_forbidden, seed)
    shift = ShiftMap()
    for cls in sorted(class_values):
        counts = class_values[cls]
        digit_counts = Counter({v: c for v, c in counts.items() if _is_plain_digits(v)})
        cipher_values = sorted(v for v in counts if not _is_plain_digits(v))
        rng = SplitMix64(seed).fork(f"cipher-{cls}")
        cipher = _make_cipher(rng)
        mapping = {v: _apply_cipher(v, cipher) for v in cipher_values}
        used = set(mapping.values())
        if cls == NAME_CLASS:
            mapping.update(
                _nickname_overrides(set(cipher_values), cipher, used, rng.fork("nick"))
            )
        _fix_leaks(mapping, forbidden, used)
        if digit_counts:
            mapping.update(_map_digit_values(digit_counts, screen, cipher))
        shift.values[cls] = mapping
    return shift


def _apply(attrs: dict[str, str], shift: ShiftMap, classes: dict[str, str]) -> dict[str, str]:
    out = {}
    for attr, value in attrs.items():
        cls = classes.get(attr)
        if cls and value:
            out[attr] = shift.lookup(cls, value) or value
        else:
            out[attr] = value
    return out


def anonymize_records(
    records: list[SourceRecord],
    seed: int,
    keep_map: bool = False,
    classes: dict[str, str] | None = None,
) -> tuple[list[SourceRecord], ShiftMap | None]:
    """Pseudonymize source records consistently across all three feeds."""
    classes = classes or ATTRIBUTE_CLASSES
    class_values = _collect_class_values([r.attributes for r in records], classes)
    shift = build_shift_map(class_values, seed)
    out = [
        SourceRecord(r.record_id, r.source, _apply(r.attributes, shift, classes))
        for r in records
    ]
    return out, (shift if keep_map else None)


def anonymize_graph(
    g: PropertyGraph,
    seed: int,
    keep_map: bool = False,
    classes: dict[str, str] | None = None,
) -> tuple[PropertyGraph, ShiftMap | None]:
    """Pseudonymize node attributes; nodes, edges, and relation types unchanged."""
    classes = classes or ATTRIBUTE_CLASSES
    date_attrs = {a for a, c in classes.items() if c == DATE_CLASS}
    value_classes = {a: c for a, c in classes.items() if c != DATE_CLASS}
    class_values = _collect_class_values([n.attributes for n in g.nodes], value_classes)
    shift = build_shift_map(class_values, seed)
    rng = SplitMix64(seed).fork("date-offsets")
    originals = {
        v for n in g.nodes for a, v in n.attributes.items() if a in date_attrs and v
    }
    nodes = []
    for node in g.nodes:
        offset = rng.randint(-3650, 3650)
        shift.date_offsets[node.id] = offset
        attrs = _apply(node.attributes, shift, value_classes)
        for attr in date_attrs:
            if attrs.get(attr):
                shifted = _shift_date(attrs[attr], offset)
                tries = 0
                while shifted in originals and tries < 50:
                    offset += 37
                    shift.date_offsets[node.id] = offset
                    shifted = _shift_date(attrs[attr], offset)
                    tries += 1
                attrs[attr] = shifted
        nodes.append(Node(node.id, node.kind, attrs))
    edges = [Edge(e.src, e.dst, e.relation, dict(e.properties)) for e in g.edges]
    out = build_graph(nodes, edges)
    return out, (shift if keep_map else None)

"""Inverted-index retrieval of verification text from source documents."""

from __future__ import annotations

import re
from dataclasses import dataclass, field

_TOKEN_RE = re.compile(r"[a-z0-9]+")


def tokenize(text: str) -> list[str]:
    return _TOKEN_RE.findall(text.lower())


@dataclass
class TextIndex:
    postings: dict[str, list[tuple[str, int]]] = field(default_factory=dict)
    documents: dict[str, str] = field(default_factory=dict)
    tokens: dict[str, list[str]] = field(default_factory=dict)


def build_text_index(documents: dict[str, str]) -> TextIndex:
    """Token -> (doc id, position) postings over lowercased alnum tokens."""
    index = TextIndex(documents=dict(documents))
    for doc_id, text in documents.items():
        toks = tokenize(text)
        index.tokens[doc_id] = toks
        for pos, tok in enumerate(toks):
            index.postings.setdefault(tok, []).append((doc_id, pos))
    return index


@dataclass
class Snippet:
    snippet: str
    source_record_id: str
    match_terms: list[str]
    both_endpoints: bool

    def to_dict(self) -> dict:
        return {
            "snippet": self.snippet,
            "source_record_id": self.source_record_id,
            "match_terms": self.match_terms,
            "both_endpoints": self.both_endpoints,
        }


@dataclass
class VerificationEvidence:
    snippets: list[Snippet]

    def to_dict(self) -> dict:
        return {"snippets": [s.to_dict() for s in self.snippets]}


def _name_tokens(attrs: dict) -> list[str]:
    toks = []
    for key in ("given_name", "last_name"):
        v = attrs.get(key)
        if v:
            toks.extend(tokenize(str(v)))
    return toks


def retrieve_verification(index: TextIndex, u_attrs: dict, v_attrs: dict,
                          k: int = 5, window: int = 15) -> VerificationEvidence:
    """Top-k snippets around name-token matches.

    Documents mentioning name tokens of both endpoints rank above documents
    mentioning only one; within a tier, more matched tokens rank higher.
    Snippets are +-window tokens around the first match.
    """
    u_toks = set(_name_tokens(u_attrs))
    v_toks = set(_name_tokens(v_attrs))
    hits: dict[str, dict] = {}
    for side, toks in (("u", u_toks), ("v", v_toks)):
        for tok in sorted(toks):
            for doc_id, pos in index.postings.get(tok, []):
                h = hits.setdefault(doc_id, {"u": set(), "v": set(),
                                             "first_pos": pos})
                h[side].add(tok)
                h["first_pos"] = min(h["first_pos"], pos)
    scored = []
    for doc_id, h in hits.items():
        both = bool(h["u"]) and bool(h["v"])
        n_terms = len(h["u"] | h["v"])
        scored.append((not both, -n_terms, doc_id))
    scored.sort()
    snippets = []
    for flipped_both, _neg_terms, doc_id in scored[:k]:
        h = hits[doc_id]
        toks = index.tokens[doc_id]
        lo = max(0, h["first_pos"] - window)
        hi = min(len(toks), h["first_pos"] + window + 1)
        snippets.append(Snippet(
            snippet=" ".join(toks[lo:hi]),
            source_record_id=doc_id,
            match_terms=sorted(h["u"] | h["v"]),
            both_endpoints=not flipped_both,
        ))
    return VerificationEvidence(snippets=snippets)

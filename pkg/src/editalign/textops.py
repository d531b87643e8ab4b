"""Deterministic text primitives: tokenization, n-gram overlap, edit distance.

Everything here is a pure function; all higher-level modules build on these.
"""
from __future__ import annotations

import re

_TOKEN_RE = re.compile(r"[^\W_]+")  # maximal runs of alphanumeric characters


def tokenize(text: str) -> list[str]:
    """Lowercase tokens, split on any run of non-alphanumeric characters."""
    return _TOKEN_RE.findall(text.lower())


def bigram_set(tokens: list[str]) -> set[tuple[str, str]]:
    return set(zip(tokens, tokens[1:]))


def bigram_overlap(a: list[str], b: list[str]) -> float:
    """Bigram containment: intersection size over the smaller bigram set.

    Sequences with fewer than two tokens have no bigrams and score 0, except
    that two identical non-empty sequences always score 1.
    """
    if len(a) < 2 or len(b) < 2:
        return 1.0 if a and a == b else 0.0
    sa = bigram_set(a)
    sb = bigram_set(b)
    return len(sa & sb) / min(len(sa), len(sb))


def unigram_overlap(a: list[str], b: list[str]) -> float:
    """Unigram containment, normalized like bigram_overlap."""
    sa = set(a)
    sb = set(b)
    if not sa or not sb:
        return 0.0
    return len(sa & sb) / min(len(sa), len(sb))


def bigram_jaccard(a: list[str], b: list[str]) -> float:
    """Bigram overlap normalized by the union instead of the smaller set.

    Used by the paragraph-merge test, where containment is useless: a clean
    fragment of a paragraph is fully contained in it and would always score 1.
    Degenerate short sequences follow the same rule as bigram_overlap.
    """
    if len(a) < 2 or len(b) < 2:
        return 1.0 if a and a == b else 0.0
    sa = bigram_set(a)
    sb = bigram_set(b)
    return len(sa & sb) / len(sa | sb)


def levenshtein(a: str, b: str) -> int:
    """Character-level edit distance with unit insert/delete/substitute costs."""
    if a == b:
        return 0
    if len(a) < len(b):
        a, b = b, a
    if not b:
        return len(a)
    prev = list(range(len(b) + 1))
    for i, ca in enumerate(a, 1):
        cur = [i]
        append = cur.append
        for j, cb in enumerate(b, 1):
            append(min(prev[j] + 1, cur[-1] + 1, prev[j - 1] + (ca != cb)))
        prev = cur
    return prev[-1]


def levenshtein_within(a: str, b: str, limit: int) -> int | None:
    """Edit distance if it is <= limit, else None.  Banded DP, early abort."""
    la, lb = len(a), len(b)
    if limit < 0 or abs(la - lb) > limit:
        return None
    if a == b:
        return 0
    if la == 0 or lb == 0:
        d = max(la, lb)
        return d if d <= limit else None
    big = limit + 1
    prev = [j if j <= limit else big for j in range(lb + 1)]
    for i in range(1, la + 1):
        ca = a[i - 1]
        lo = max(1, i - limit)
        hi = min(lb, i + limit)
        cur = [big] * (lb + 1)
        if lo == 1 and i <= limit:
            cur[0] = i
        row_min = cur[lo - 1]
        for j in range(lo, hi + 1):
            v = prev[j - 1] + (ca != b[j - 1])
            v2 = prev[j] + 1
            if v2 < v:
                v = v2
            v3 = cur[j - 1] + 1
            if v3 < v:
                v = v3
            cur[j] = v
            if v < row_min:
                row_min = v
        if row_min > limit:
            return None
        prev = cur
    d = prev[lb]
    return d if d <= limit else None


def normalized_edit_distance(a: str, b: str) -> float:
    """Levenshtein distance divided by the longer length; 0 iff a == b."""
    return levenshtein(a, b) / max(1, max(len(a), len(b)))

"""Lattice-path words over the step alphabet {X, Y, Z}.

A word of length d encodes a walk that starts at height 0, where X raises
the height by one, Y keeps it, and Z lowers it by one.  Y and Z steps are
only allowed from height >= 1 and the height never goes negative.  The walk
after j steps sits at abscissa 2*h_j + 1, which buckets the path counts by
odd integers.
"""

from __future__ import annotations

from .errors import BadIndices, LengthMismatch
from .poly import Monomial

STEPS = "XYZ"
_STEP_RANK = {"X": 0, "Y": 1, "Z": 2}


def is_path_word(word: str) -> bool:
    """True iff the word is a valid walk (height stays >= 0, no Y or Z from
    height 0)."""
    h = 0
    for ch in word:
        if ch == "X":
            h += 1
        elif ch == "Y":
            if h < 1:
                return False
        elif ch == "Z":
            if h < 1:
                return False
            h -= 1
        else:
            return False
    return True


def enumerate_paths(d: int) -> list[str]:
    """All valid words of length d, in lexicographic order (X < Y < Z)."""
    if d < 0:
        raise ValueError("d must be nonnegative")
    out: list[str] = []
    word: list[str] = []

    def rec(h: int):
        if len(word) == d:
            out.append("".join(word))
            return
        word.append("X")
        rec(h + 1)
        word.pop()
        if h >= 1:
            word.append("Y")
            rec(h)
            word.pop()
            word.append("Z")
            rec(h - 1)
            word.pop()

    rec(0)
    return out


def path_counts(d: int) -> dict[int, int]:
    """Number of length-d walks ending at each abscissa k = 2h + 1, by
    dynamic programming over the walk heights."""
    if d < 0:
        raise ValueError("d must be nonnegative")
    cur = {0: 1}
    for _ in range(d):
        nxt: dict[int, int] = {}
        for h, c in cur.items():
            nxt[h + 1] = nxt.get(h + 1, 0) + c
            if h >= 1:
                nxt[h] = nxt.get(h, 0) + c
                nxt[h - 1] = nxt.get(h - 1, 0) + c
        cur = nxt
    return {2 * h + 1: c for h, c in sorted(cur.items())}


def word_to_monomial(word: str, subscripts: tuple[int, ...] | list[int]) -> Monomial:
    """Multilinear monomial whose variable at the q-th smallest subscript has
    the word's q-th letter."""
    subs = tuple(subscripts)
    if len(subs) != len(word):
        raise LengthMismatch(f"{len(word)} steps vs {len(subs)} subscripts")
    if any(s < 1 for s in subs) or any(a >= b for a, b in zip(subs, subs[1:])):
        raise BadIndices("subscripts must be strictly increasing and positive")
    entries = []
    for ch, s in zip(word, subs):
        if ch not in _STEP_RANK:
            raise ValueError(f"unknown step {ch!r}")
        entries.append((s, _STEP_RANK[ch], 1))
    return Monomial(entries)

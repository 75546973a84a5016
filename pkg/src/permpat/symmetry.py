"""Reversal/inverse symmetries, their group action on pattern sets, and orbits.

The two generators are ``r`` (reverse the one-line word) and ``i`` (group
inverse).  Both are involutions, so the group they generate has order at most
8 and every orbit of pattern sets has size 1, 2, 4 or 8.  All members of one
orbit have equinumerous avoider sets, which is what makes orbits the right
unit for the classification tables.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .perms import Perm, PatternSet, format_pattern_set, pattern_set_key

GENERATORS = "ri"


def reverse(p: Perm) -> Perm:
    """One-line word reversed.

    >>> reverse((1, 2, 3))
    (3, 2, 1)
    >>> reverse((2, 4, 1, 3))
    (3, 1, 4, 2)
    """
    return tuple(reversed(p))


def inverse(p: Perm) -> Perm:
    """Group inverse: q with q[p[j]] = j (1-based).

    >>> inverse((2, 3, 1))
    (3, 1, 2)
    >>> inverse((1, 2, 3))
    (1, 2, 3)
    """
    inv = [0] * len(p)
    for j, v in enumerate(p):
        inv[v - 1] = j + 1
    return tuple(inv)


def apply_op(ops: str, p: Perm) -> Perm:
    """Apply a word over the generators {r, i}, leftmost first.

    >>> apply_op("ri", (2, 3, 1))
    (1, 3, 2)
    >>> apply_op("rr", (2, 3, 1))
    (2, 3, 1)
    """
    for ch in ops:
        if ch in "rR":
            p = reverse(p)
        elif ch in "iI":
            p = inverse(p)
        else:
            raise ValueError(f"unknown symmetry generator {ch!r}")
    return p


def apply_set(ops: str, t: Iterable[Perm]) -> PatternSet:
    """Elementwise image of a pattern set; cardinality is preserved."""
    return frozenset(apply_op(ops, tuple(p)) for p in t)


@dataclass(frozen=True)
class SymmetryOrbit:
    """An orbit of pattern sets under the reverse/inverse group."""

    members: frozenset[PatternSet]
    representative: PatternSet

    @property
    def size(self) -> int:
        return len(self.members)

    def sorted_members(self) -> list[PatternSet]:
        return sorted(self.members, key=pattern_set_key)

    def to_json_dict(self) -> dict:
        return {
            "representative": format_pattern_set(self.representative),
            "size": self.size,
            "members": [format_pattern_set(m) for m in self.sorted_members()],
        }


def orbit(t: Iterable[Sequence[int]]) -> SymmetryOrbit:
    """Closure of a pattern set under r and i, with canonical representative.

    The representative is the orbit member minimal under (set cardinality,
    sorted pattern list, patterns ordered by length then lexicographically).

    >>> o = orbit([(1, 2, 3)])
    >>> sorted(format_pattern_set(m) for m in o.members)
    ['123', '321']
    """
    start = frozenset(tuple(p) for p in t)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for s in frontier:
            for ops in GENERATORS:
                img = apply_set(ops, s)
                if img not in seen:
                    seen.add(img)
                    nxt.append(img)
        frontier = nxt
    rep = min(seen, key=pattern_set_key)
    return SymmetryOrbit(frozenset(seen), rep)


def partition_into_classes(sets: Iterable[Iterable[Sequence[int]]]) -> list[SymmetryOrbit]:
    """Disjoint orbits covering the input, ordered by canonical representative."""
    pending = [frozenset(tuple(p) for p in s) for s in sets]
    orbits: dict[PatternSet, SymmetryOrbit] = {}
    assigned: set[PatternSet] = set()
    for s in pending:
        if s in assigned:
            continue
        o = orbit(s)
        if o.representative in orbits:
            raise AssertionError("orbit closure produced overlapping classes")
        orbits[o.representative] = o
        assigned |= o.members
    return [orbits[rep] for rep in sorted(orbits, key=pattern_set_key)]

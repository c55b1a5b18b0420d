"""Independent brute-force oracle over plain Python sets.

Evaluates the quantifier definitions of the seven parts directly from the
partition blocks, with no shared code with the package's bit-mask path.
"""

from __future__ import annotations

SYMBOLS = ("T", "sT", "U", "K", "fK", "sF", "F")


def oracle_parts(
    blocks: list[frozenset[str]], a: frozenset[str], b: frozenset[str]
) -> dict[str, frozenset[str]]:
    universe = frozenset().union(*blocks)
    bd = universe - a - b
    parts: dict[str, set[str]] = {s: set() for s in SYMBOLS}
    for block in blocks:
        conditions = {
            "T": block <= a,
            "sT": block <= universe - b and block & a and block & bd,
            "U": block <= bd,
            "K": block <= a | b and block & a and block & b,
            "fK": block & a and block & b and block & bd,
            "sF": block <= universe - a and block & b and block & bd,
            "F": block <= b,
        }
        matched = [s for s, cond in conditions.items() if cond]
        assert len(matched) == 1, f"block {set(block)} matched {matched}"
        parts[matched[0]] |= block
    return {s: frozenset(members) for s, members in parts.items()}


def oracle_lower(blocks: list[frozenset[str]], x: frozenset[str]) -> frozenset[str]:
    return frozenset().union(*(bl for bl in blocks if bl <= x)) if any(
        bl <= x for bl in blocks
    ) else frozenset()


def oracle_upper(blocks: list[frozenset[str]], x: frozenset[str]) -> frozenset[str]:
    return frozenset().union(*(bl for bl in blocks if bl & x)) if any(
        bl & x for bl in blocks
    ) else frozenset()

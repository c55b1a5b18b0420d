"""Executable certification of the lattice axioms over a knowledge base.

Every axiom is quantified over the orthopairs of the knowledge base's
universe, represented as raw (positive, negative) bit-mask pairs for
speed.  The checker is exhaustive while the tuple count fits in the
budget and falls back to random sampling otherwise; a sampled run that
finds no violation is reported as undecided, never as a pass.

A small catalogue of deliberate single-operator mutations is included so
the checker's sensitivity can itself be tested.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, replace
from typing import Callable, Iterator, Sequence

from .sweep import all_orthopair_masks
from .universe import KnowledgeBase, Universe

Pair = tuple[int, int]

DEFAULT_BUDGET = 2_000_000

# The ternary distributive law is the one axiom whose tuple count explodes
# (27^|U|).  For the standard operators it has an exhaustive bit-parallel
# evaluator that stays viable up to this many tuples.
VECTOR_LIMIT = 2_000_000_000


@dataclass(frozen=True)
class LatticeOps:
    """Raw orthopair operations over bit masks; the disjointness invariant
    is not enforced at this level."""

    full: int
    lower_table: tuple[int, ...]
    meet: Callable[[Pair, Pair], Pair]
    join: Callable[[Pair, Pair], Pair]
    kleene: Callable[[Pair], Pair]
    brouwer: Callable[[Pair], Pair]
    pawlak: Callable[[Pair], Pair]
    # True only while meet/join are the standard componentwise operations,
    # which the bit-parallel distributivity evaluator hard-codes.
    standard_lattice: bool = False

    @property
    def bottom(self) -> Pair:
        return (0, self.full)

    @property
    def top(self) -> Pair:
        return (self.full, 0)

    def lower(self, mask: int) -> int:
        return self.lower_table[mask]

    def upper(self, mask: int) -> int:
        return self.full ^ self.lower_table[self.full ^ mask]

    def leq(self, p: Pair, q: Pair) -> bool:
        return self.meet(p, q) == p


def standard_ops(kb: KnowledgeBase) -> LatticeOps:
    full = kb.universe.full_mask
    table = tuple(kb.lower_mask(m) for m in range(full + 1))

    def meet(p: Pair, q: Pair) -> Pair:
        return (p[0] & q[0], p[1] | q[1])

    def join(p: Pair, q: Pair) -> Pair:
        return (p[0] | q[0], p[1] & q[1])

    def kleene(p: Pair) -> Pair:
        return (p[1], p[0])

    def brouwer(p: Pair) -> Pair:
        return (p[1], full ^ p[1])

    def pawlak(p: Pair) -> Pair:
        return (table[p[0]], table[p[1]])

    return LatticeOps(full, table, meet, join, kleene, brouwer, pawlak,
                      standard_lattice=True)


@dataclass(frozen=True)
class Axiom:
    ident: str
    arity: int
    description: str
    predicate: Callable[..., bool]


def _implies(hyp: bool, con: bool) -> bool:
    return con if hyp else True


def _distributivity(o: LatticeOps, p: Pair, q: Pair, r: Pair) -> bool:
    return o.meet(p, o.join(q, r)) == o.join(o.meet(p, q), o.meet(p, r)) and o.join(
        p, o.meet(q, r)
    ) == o.meet(o.join(p, q), o.join(p, r))


_AXIOM_LIST = (
    Axiom("bounds", 1, "0 <= a <= 1",
          lambda o, p: o.leq(o.bottom, p) and o.leq(p, o.top)),
    Axiom("distributivity", 3, "meet and join distribute over each other",
          _distributivity),
    Axiom("K1", 1, "Kleene negation is an involution",
          lambda o, p: o.kleene(o.kleene(p)) == p),
    Axiom("K2", 2, "Kleene negation swaps join and meet",
          lambda o, p, q: o.kleene(o.join(p, q)) == o.meet(o.kleene(p), o.kleene(q))),
    Axiom("K3", 2, "a ∧ a' <= b ∨ b'",
          lambda o, p, q: o.leq(o.meet(p, o.kleene(p)), o.join(q, o.kleene(q)))),
    Axiom("B1", 1, "a ∧ a~~ = a",
          lambda o, p: o.meet(p, o.brouwer(o.brouwer(p))) == p),
    Axiom("B2", 2, "(a ∨ b)~ = a~ ∧ b~",
          lambda o, p, q: o.brouwer(o.join(p, q)) == o.meet(o.brouwer(p), o.brouwer(q))),
    Axiom("B3", 1, "a ∧ a~ = 0",
          lambda o, p: o.meet(p, o.brouwer(p)) == o.bottom),
    Axiom("in", 1, "a~ <= a'",
          lambda o, p: o.leq(o.brouwer(p), o.kleene(p))),
    Axiom("s-in", 1, "a~~ = a~'",
          lambda o, p: o.brouwer(o.brouwer(p)) == o.kleene(o.brouwer(p))),
    Axiom("B2a", 2, "(a ∧ b)~ = a~ ∨ b~",
          lambda o, p, q: o.brouwer(o.meet(p, q)) == o.join(o.brouwer(p), o.brouwer(q))),
    Axiom("A1", 1, "approximation commutes with Kleene negation",
          lambda o, p: o.kleene(o.pawlak(p)) == o.pawlak(o.kleene(p))),
    Axiom("A2", 2, "a <= b implies b^A~ <= a^A~",
          lambda o, p, q: _implies(
              o.leq(p, q), o.leq(o.brouwer(o.pawlak(q)), o.brouwer(o.pawlak(p))))),
    Axiom("A3", 1, "a^A~ <= a~",
          lambda o, p: o.leq(o.brouwer(o.pawlak(p)), o.brouwer(p))),
    Axiom("A4", 0, "0^A = 0",
          lambda o: o.pawlak(o.bottom) == o.bottom),
    Axiom("A5", 2, "a~ = b~ implies a^A ∧ b^A = (a ∧ b)^A",
          lambda o, p, q: _implies(
              o.brouwer(p) == o.brouwer(q),
              o.meet(o.pawlak(p), o.pawlak(q)) == o.pawlak(o.meet(p, q)))),
    Axiom("A6", 2, "a^A ∨ b^A <= (a ∨ b)^A",
          lambda o, p, q: o.leq(o.join(o.pawlak(p), o.pawlak(q)), o.pawlak(o.join(p, q)))),
    Axiom("A7", 1, "approximation is idempotent",
          lambda o, p: o.pawlak(o.pawlak(p)) == o.pawlak(p)),
    Axiom("A8", 1, "a^A~A = a^A~",
          lambda o, p: o.pawlak(o.brouwer(o.pawlak(p))) == o.brouwer(o.pawlak(p))),
    Axiom("A9", 2, "(a^A ∧ b^A)^A = a^A ∧ b^A",
          lambda o, p, q: o.pawlak(o.meet(o.pawlak(p), o.pawlak(q)))
          == o.meet(o.pawlak(p), o.pawlak(q))),
)

AXIOMS: dict[str, Axiom] = {axiom.ident: axiom for axiom in _AXIOM_LIST}


@dataclass(frozen=True)
class AxiomReport:
    axiom: str
    status: str  # "holds" | "counterexample" | "undecided"
    cases_checked: int
    exhaustive: bool
    witness: tuple[Pair, ...] | None
    universe: Universe

    def witness_names(self) -> list[dict[str, list[str]]] | None:
        if self.witness is None:
            return None
        objects = self.universe.objects

        def names(mask: int) -> list[str]:
            return [name for i, name in enumerate(objects) if mask >> i & 1]

        return [{"positive": names(a), "negative": names(b)} for a, b in self.witness]

    def to_dict(self) -> dict:
        out: dict = {
            "axiom": self.axiom,
            "status": self.status,
            "cases_checked": self.cases_checked,
            "exhaustive": self.exhaustive,
        }
        witness = self.witness_names()
        if witness is not None:
            out["witness"] = witness
        return out


def _check_distributivity_bitparallel(
    kb: KnowledgeBase, elems: list[Pair], total: int
) -> AxiomReport:
    """Exhaustive distributivity check with numpy over mask grids.

    Faithful only for the standard componentwise meet/join, which it
    re-implements with array bitwise operations.
    """
    import numpy as np

    pos = np.array([a for a, b in elems], dtype=np.uint32)
    neg = np.array([b for a, b in elems], dtype=np.uint32)
    qp, qn = pos[:, None], neg[:, None]
    rp, rn = pos[None, :], neg[None, :]
    join_p, join_n = qp | rp, qn & rn
    meet_p, meet_n = qp & rp, qn | rn
    for i, (pa, pb) in enumerate(elems):
        ok = (
            ((pa & join_p) == ((pa & qp) | (pa & rp)))
            & ((pb | join_n) == ((pb | qn) & (pb | rn)))
            & ((pa | meet_p) == ((pa | qp) & (pa | rp)))
            & ((pb & meet_n) == ((pb & qn) | (pb & rn)))
        )
        if not ok.all():
            qi, ri = map(int, np.argwhere(~ok)[0])
            checked = i * len(elems) ** 2 + qi * len(elems) + ri + 1
            return AxiomReport(
                "distributivity", "counterexample", checked, False,
                (elems[i], elems[qi], elems[ri]), kb.universe,
            )
    return AxiomReport("distributivity", "holds", total, True, None, kb.universe)


def check_axiom(
    kb: KnowledgeBase,
    axiom_id: str,
    budget: int = DEFAULT_BUDGET,
    ops: LatticeOps | None = None,
    elements: Sequence[Pair] | None = None,
    seed: int = 0,
) -> AxiomReport:
    """Quantify one axiom over the orthopairs of kb's universe."""
    try:
        axiom = AXIOMS[axiom_id]
    except KeyError:
        raise ValueError(f"unknown axiom {axiom_id!r}") from None
    if ops is None:
        ops = standard_ops(kb)
    elems = list(elements) if elements is not None else list(
        all_orthopair_masks(kb.universe.size)
    )
    total = len(elems) ** axiom.arity
    checked = 0
    if (
        axiom_id == "distributivity"
        and budget < total <= VECTOR_LIMIT
        and ops.standard_lattice
    ):
        return _check_distributivity_bitparallel(kb, elems, total)
    if total <= budget:
        for tup in itertools.product(elems, repeat=axiom.arity):
            checked += 1
            if not axiom.predicate(ops, *tup):
                return AxiomReport(
                    axiom_id, "counterexample", checked, False, tup, kb.universe
                )
        return AxiomReport(axiom_id, "holds", checked, True, None, kb.universe)
    rng = random.Random(seed)
    for _ in range(budget):
        tup = tuple(rng.choice(elems) for _ in range(axiom.arity))
        checked += 1
        if not axiom.predicate(ops, *tup):
            return AxiomReport(
                axiom_id, "counterexample", checked, False, tup, kb.universe
            )
    return AxiomReport(axiom_id, "undecided", checked, False, None, kb.universe)


def check_all(
    kb: KnowledgeBase,
    budget: int = DEFAULT_BUDGET,
    ops: LatticeOps | None = None,
    elements: Sequence[Pair] | None = None,
    seed: int = 0,
) -> list[AxiomReport]:
    if ops is None:
        ops = standard_ops(kb)
    return [
        check_axiom(kb, ident, budget=budget, ops=ops, elements=elements, seed=seed)
        for ident in AXIOMS
    ]


def certified(reports: Sequence[AxiomReport]) -> bool:
    """True only when every axiom held under exhaustive enumeration."""
    return all(r.status == "holds" and r.exhaustive for r in reports)


# --- mutation harness -------------------------------------------------------

MUTATIONS: dict[str, str] = {
    "pawlak-upper-on-negative": "approximation uses the upper approximation on the negative region",
    "pawlak-upper-on-both": "approximation uses the upper approximation on both regions",
    "kleene-identity": "Kleene negation leaves the pair unchanged",
    "brouwer-as-kleene": "Brouwer negation degrades to the Kleene swap",
    "meet-drops-negative": "meet intersects the negative regions instead of uniting them",
    "drop-disjointness": "enumeration admits overlapping positive/negative regions",
}


def mutated_ops(kb: KnowledgeBase, name: str) -> LatticeOps:
    ops = replace(standard_ops(kb), standard_lattice=False)
    full = ops.full
    table = ops.lower_table

    if name == "pawlak-upper-on-negative":
        return replace(ops, pawlak=lambda p: (table[p[0]], full ^ table[full ^ p[1]]))
    if name == "pawlak-upper-on-both":
        return replace(
            ops,
            pawlak=lambda p: (full ^ table[full ^ p[0]], full ^ table[full ^ p[1]]),
        )
    if name == "kleene-identity":
        return replace(ops, kleene=lambda p: p)
    if name == "brouwer-as-kleene":
        return replace(ops, brouwer=lambda p: (p[1], p[0]))
    if name == "meet-drops-negative":
        return replace(ops, meet=lambda p, q: (p[0] & q[0], p[1] & q[1]))
    if name == "drop-disjointness":
        return ops  # the mutation changes the enumeration, not the operators
    raise ValueError(f"unknown mutation {name!r}")


def _all_pairs_including_overlapping(size: int) -> Iterator[Pair]:
    full = (1 << size) - 1
    for a in range(full + 1):
        for b in range(full + 1):
            yield (a, b)


def run_mutation(
    kb: KnowledgeBase, name: str, budget: int = DEFAULT_BUDGET
) -> list[AxiomReport]:
    """Run every axiom against one documented mutation."""
    if name not in MUTATIONS:
        raise ValueError(f"unknown mutation {name!r}")
    ops = mutated_ops(kb, name)
    elements = (
        list(_all_pairs_including_overlapping(kb.universe.size))
        if name == "drop-disjointness"
        else None
    )
    return check_all(kb, budget=budget, ops=ops, elements=elements)

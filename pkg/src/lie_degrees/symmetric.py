"""Down-up induction machinery for S_n degrees, A_n degree lists and epsilon.

The neighbourhood N(Delta) consists of the diagrams reached by removing one
node and adding one back; summing their degrees recovers n * deg(Delta).
Octuple moves combine two coordinate-disjoint down-up moves; the degree ratio
they produce has a closed form in two hook lengths of Delta, which is checked
against the direct hook-product ratio on every call.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .partitions import (
    Node,
    Partition,
    add_node,
    addable_removable,
    formal_hook_length,
    hooks,
    partitions_of,
    remove_node,
    sym_degree,
    transpose,
)


@dataclass(frozen=True)
class DownUpMove:
    remove: Node
    add: Node


@dataclass(frozen=True)
class OctupleMove:
    first: DownUpMove
    second: DownUpMove

    def __post_init__(self):
        i_coords = (self.first.remove.i, self.first.add.i,
                    self.second.remove.i, self.second.add.i)
        j_coords = (self.first.remove.j, self.first.add.j,
                    self.second.remove.j, self.second.add.j)
        if len(set(i_coords)) != 4 or len(set(j_coords)) != 4:
            raise ValueError("octuple coordinates must be pairwise distinct in i and in j")


def apply_downup(lam: Partition, move: DownUpMove) -> Partition:
    return add_node(remove_node(lam, move.remove), move.add)


def downup_neighborhood(lam: Partition) -> list[tuple[DownUpMove, Partition]]:
    """All (move, Gamma) with Gamma obtained by removing then adding a node."""
    if lam.n < 1:
        raise ValueError("need a non-empty partition")
    out = []
    _, removable = addable_removable(lam)
    for rem in sorted(removable):
        mid = remove_node(lam, rem)
        addable, _ = addable_removable(mid)
        for add in sorted(addable):
            out.append((DownUpMove(rem, add), add_node(mid, add)))
    return out


def _cross_hook(lam: Partition, remove: Node, add: Node) -> int:
    """Hook length of lam at the unique diagram cell where the removed node's
    row/column meets the added node's column/row.

    For a removable corner and an addable node in distinct rows and columns,
    exactly one of the two meets lies in the diagram.
    """
    node = Node(add.i, remove.j) if add.i < remove.i else Node(remove.i, add.j)
    assert lam.contains(node), (lam, remove, add)
    return formal_hook_length(lam, node)


def octuple_ratio(lam: Partition, move: OctupleMove) -> Fraction:
    """P(D)P(D_1234) / (P(D_12)P(D_34)), checked against its closed form.

    Only cells affected by both down-up moves contribute.  The meet of the two
    added nodes gives a(a+2)/(a+1)^2 and the meet of the two removed nodes
    gives b(b-2)/(b-1)^2, with a, b the hook lengths of lam there; each of the
    two remove/add meets contributes h^2/(h^2-1).
    """
    d12 = apply_downup(lam, move.first)  # validates move.first against lam
    d34 = apply_downup(lam, move.second)
    d1234 = apply_downup(d12, move.second)

    p = hooks(lam).product
    direct = Fraction(p * hooks(d1234).product,
                      hooks(d12).product * hooks(d34).product)

    a_node = Node(min(move.first.add.i, move.second.add.i),
                  min(move.first.add.j, move.second.add.j))
    b_node = Node(min(move.first.remove.i, move.second.remove.i),
                  min(move.first.remove.j, move.second.remove.j))
    assert lam.contains(a_node) and lam.contains(b_node)
    a = formal_hook_length(lam, a_node)
    b = formal_hook_length(lam, b_node)
    c = _cross_hook(lam, move.first.remove, move.second.add)
    d = _cross_hook(lam, move.second.remove, move.first.add)
    closed = (Fraction(a * (a + 2), (a + 1) ** 2)
              * Fraction(b * (b - 2), (b - 1) ** 2)
              * Fraction(c * c, c * c - 1)
              * Fraction(d * d, d * d - 1))
    assert closed == direct, f"closed form {closed} != direct ratio {direct}"
    return direct


def ratio_witness(lam: Partition, excluded: set[Fraction], delta: Fraction) -> Partition | None:
    """Search for Gamma of the same size with deg(Gamma)/deg(lam) in [delta, oo) \\ excluded.

    Scans the down-up neighbourhood ordered by |ratio - 1| descending, then all
    octuple combinations in enumeration order; returns the first hit or None.
    """
    delta = Fraction(delta)
    if delta <= 0:
        raise ValueError("delta must be positive")
    excluded = {Fraction(s) for s in excluded}
    base = sym_degree(lam)
    neigh = downup_neighborhood(lam)
    scored = []
    for move, gamma in neigh:
        ratio = Fraction(sym_degree(gamma), base)
        scored.append((-abs(ratio - 1), gamma.parts, move, ratio, gamma))
    scored.sort(key=lambda t: (t[0], t[1], t[2].remove, t[2].add))
    for _, _, _, ratio, gamma in scored:
        if ratio >= delta and ratio not in excluded:
            return gamma
    for m1, _ in neigh:
        for m2, _ in neigh:
            i_coords = {m1.remove.i, m1.add.i, m2.remove.i, m2.add.i}
            j_coords = {m1.remove.j, m1.add.j, m2.remove.j, m2.add.j}
            if len(i_coords) != 4 or len(j_coords) != 4:
                continue
            gamma = apply_downup(apply_downup(lam, m1), m2)
            ratio = Fraction(sym_degree(gamma), base)
            if ratio >= delta and ratio not in excluded:
                return gamma
    return None


# ---------------------------------------------------------------------------
# degree multisets and epsilon
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DegreeMultiset:
    """Multiset of character degrees, keyed degree -> multiplicity."""

    counts: tuple[tuple[int, int], ...]

    @classmethod
    def from_dict(cls, d: dict[int, int]) -> "DegreeMultiset":
        if not d:
            raise ValueError("empty degree multiset")
        if any(m < 1 for m in d.values()):
            raise ValueError("multiplicities must be positive")
        return cls(tuple(sorted(d.items())))

    def as_dict(self) -> dict[int, int]:
        return dict(self.counts)

    @cached_property
    def b(self) -> int:
        return self.counts[-1][0]

    @cached_property
    def total(self) -> int:
        return sum(m * d * d for d, m in self.counts)

    def as_sorted_list(self) -> list[int]:
        out = []
        for d, m in self.counts:
            out.extend([d] * m)
        return out


def sym_degrees(n: int) -> DegreeMultiset:
    """All S_n irreducible degrees with multiplicity."""
    counts: dict[int, int] = {}
    for lam in partitions_of(n):
        d = sym_degree(lam)
        counts[d] = counts.get(d, 0) + 1
    return DegreeMultiset.from_dict(counts)


def alt_degrees(n: int) -> DegreeMultiset:
    """All A_n irreducible degrees with multiplicity.

    Self-conjugate diagrams split into two characters of half degree; a
    non-self-conjugate transpose pair restricts to a single character.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    counts: dict[int, int] = {}
    for lam in partitions_of(n):
        conj = transpose(lam)
        if lam == conj:
            d = sym_degree(lam)
            assert d % 2 == 0, f"self-conjugate degree must be even: {lam}"
            counts[d // 2] = counts.get(d // 2, 0) + 2
        elif lam.parts > conj.parts:  # count each transpose pair once
            d = sym_degree(lam)
            counts[d] = counts.get(d, 0) + 1
    return DegreeMultiset.from_dict(counts)


def epsilon_of(degrees: DegreeMultiset) -> Fraction:
    """(sum of mult * d^2 over degrees strictly below the top) / top^2."""
    b = degrees.b
    num = sum(m * d * d for d, m in degrees.counts if d < b)
    return Fraction(num, b * b)

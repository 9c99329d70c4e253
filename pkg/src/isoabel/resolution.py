"""Embedded resolution of unibranched germs by explicit blowups.

The germ with characteristic pairs ((k_1, n_1), ..., (k_g, n_g)) is
realised by the exact parametrisation

    x = t^N,   y = t^{b_1} + ... + t^{b_g},   N = n_1 ... n_g,

where b_i are the characteristic exponents (b_1 = k_1 n_2 ... n_g and
b_{i+1} = b_i + k_{i+1} n_{i+2} ... n_g).  Every exponent that occurs is
characteristic, so unit coefficients lose no generality: the dual graph
and multiplicities depend only on the equisingularity class.

State of the simulation: the branch written in the current chart as a
pair of rational functions (u(t), v(t)) with exact Fraction coefficients,
plus the at most two divisors through the current centre ({u = 0} and
{v = 0}).  One blowup compares ord u with ord v:

  ord u < ord v:  chart (u, v/u); the new curve is {u = 0},
  ord v < ord u:  chart (u/v, v); the new curve is {v = 0},
  ord u = ord v:  chart (u, v/u - c) with c the limit of v/u; the
                  branch leaves both old curves and sits at a free
                  point of the new one.

The new exceptional curve has multiplicity (branch multiplicity at the
centre) + (multiplicities of the curves through the centre), it meets
exactly the strict transforms of those curves, and it separates them.
The process stops when the branch meets a single curve transversally
(ord = 1); appending the strict transform with multiplicity 1 gives the
dual tree.  Rupture nodes are the vertices of valency three.

A'Campo's fixed-point formula turns the tree into the zeta function of
the monodromy: each exceptional curve E contributes (1 - t^m(E)) to the
power chi(E minus its neighbours) = 2 - valency.  Dividing (1 - t) by
the zeta function and reversing coefficients yields the characteristic
polynomial on first cohomology, which this module returns factored.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .belyi import BelyiCover, deck_charpoly, genus
from .errors import ComputationError, PreconditionError
from .polynomials import CyclotomicProduct, IntPolynomial, factor_cyclotomic
from .singularity import PuiseuxCharacteristic

__all__ = [
    "ResolutionNode",
    "ResolutionTree",
    "AlbaneseFactor",
    "LocalAlbaneseReport",
    "resolution_tree",
    "acampo_charpoly",
    "local_albanese",
]


def _ftrim(cs):
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _fmul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


class _Rat:
    """Rational function num/den in t; den has nonzero constant term."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=(Fraction(1),)):
        num = _ftrim([Fraction(c) for c in num])
        den = _ftrim([Fraction(c) for c in den])
        if not den or den[0] == 0:
            raise ComputationError("denominator must be a unit at t = 0")
        self.num = tuple(num)
        self.den = tuple(den)

    @property
    def order(self) -> int | None:
        """Vanishing order at t = 0; None for the zero function."""
        for i, c in enumerate(self.num):
            if c:
                return i
        return None

    def leading(self) -> Fraction:
        return self.num[self.order] / self.den[0]

    def div(self, other: _Rat) -> _Rat:
        """self/other, assuming ord self >= ord other (result regular)."""
        num = _fmul(self.num, other.den)
        den = _fmul(self.den, other.num)
        shift = next(i for i, c in enumerate(den) if c)
        if any(num[i] for i in range(min(shift, len(num)))):
            raise ComputationError("division would create a pole at t = 0")
        return _Rat(num[shift:], den[shift:])

    def minus_const(self, c: Fraction) -> _Rat:
        num = list(self.num) + [Fraction(0)] * max(0, len(self.den) - len(self.num))
        for i, d in enumerate(self.den):
            num[i] -= c * d
        return _Rat(num, self.den)


@dataclass(frozen=True)
class ResolutionNode:
    id: int
    multiplicity: int
    is_strict_transform: bool = False


@dataclass(frozen=True)
class ResolutionTree:
    """Dual tree of an embedded resolution, strict transform included."""

    nodes: tuple[ResolutionNode, ...]
    edges: tuple[tuple[int, int], ...]
    rupture_ids: frozenset[int]

    def node(self, node_id: int) -> ResolutionNode:
        return self.nodes[node_id]

    def multiplicity(self, node_id: int) -> int:
        return self.nodes[node_id].multiplicity

    def neighbors(self, node_id: int) -> tuple[int, ...]:
        out = []
        for a, b in self.edges:
            if a == node_id:
                out.append(b)
            elif b == node_id:
                out.append(a)
        return tuple(sorted(out))

    def valency(self, node_id: int) -> int:
        return len(self.neighbors(node_id))

    @property
    def strict_id(self) -> int:
        for node in self.nodes:
            if node.is_strict_transform:
                return node.id
        raise PreconditionError("tree has no strict transform node")

    def validate(self) -> None:
        """Raise PreconditionError unless this is a well-formed resolution tree."""
        n = len(self.nodes)
        if n == 0:
            raise PreconditionError("empty tree")
        ids = [node.id for node in self.nodes]
        if ids != list(range(n)):
            raise PreconditionError("node ids must be 0..n-1 in order")
        stricts = [node for node in self.nodes if node.is_strict_transform]
        if len(stricts) != 1:
            raise PreconditionError("exactly one strict transform node is required")
        if stricts[0].multiplicity != 1:
            raise PreconditionError("the strict transform must have multiplicity 1")
        for node in self.nodes:
            if node.multiplicity < 1:
                raise PreconditionError("multiplicities must be positive")
        if len(self.edges) != n - 1:
            raise PreconditionError("a tree on n nodes has n - 1 edges")
        seen = {0}
        frontier = [0]
        adj = {i: set() for i in range(n)}
        for a, b in self.edges:
            if a == b or not (0 <= a < n and 0 <= b < n):
                raise PreconditionError(f"bad edge ({a}, {b})")
            adj[a].add(b)
            adj[b].add(a)
        while frontier:
            cur = frontier.pop()
            for nxt in adj[cur]:
                if nxt not in seen:
                    seen.add(nxt)
                    frontier.append(nxt)
        if len(seen) != n:
            raise PreconditionError("tree is not connected")


def _edge(a: int, b: int) -> tuple[int, int]:
    return (a, b) if a < b else (b, a)


def resolution_tree(pc: PuiseuxCharacteristic) -> ResolutionTree:
    """Blow up the germ until its total transform has normal crossings.

    >>> rt = resolution_tree(PuiseuxCharacteristic(((3, 2),)))
    >>> [node.multiplicity for node in rt.nodes]
    [2, 3, 6, 1]
    """
    big = pc.multiplicity
    exponents = []
    b = 0
    rest = big
    for k, n in pc.pairs:
        rest //= n
        b += k * rest
        exponents.append(b)
    u = _Rat([0] * big + [1])
    v_coeffs = [Fraction(0)] * (exponents[-1] + 1)
    for e in exponents:
        v_coeffs[e] = Fraction(1)
    v = _Rat(v_coeffs)

    mults: list[int] = []
    strict_flag: list[bool] = []
    edges: set[tuple[int, int]] = set()
    a_id: int | None = None
    b_id: int | None = None
    budget = 8 * sum(k + n for k, n in pc.pairs) + 64

    while True:
        ou = u.order
        ov = v.order
        if ou is None:
            raise ComputationError("branch degenerated onto a coordinate axis")
        if a_id is not None and b_id is None and ou == 1:
            break
        budget -= 1
        if budget < 0:
            raise ComputationError("resolution did not terminate")
        m_here = ou if ov is None else min(ou, ov)
        new_id = len(mults)
        m_new = m_here
        if a_id is not None:
            m_new += mults[a_id]
            edges.add(_edge(new_id, a_id))
        if b_id is not None:
            m_new += mults[b_id]
            edges.add(_edge(new_id, b_id))
        if a_id is not None and b_id is not None:
            edges.discard(_edge(a_id, b_id))
        mults.append(m_new)
        strict_flag.append(False)
        if ov is None or ou < ov:
            v = v.div(u)
            a_id = new_id
        elif ov < ou:
            u = u.div(v)
            b_id = new_id
        else:
            w = v.div(u)
            v = w.minus_const(w.leading())
            a_id, b_id = new_id, None

    strict_id = len(mults)
    mults.append(1)
    strict_flag.append(True)
    edges.add(_edge(strict_id, a_id))

    nodes = tuple(
        ResolutionNode(i, m, strict) for i, (m, strict) in enumerate(zip(mults, strict_flag))
    )
    degree = {i: 0 for i in range(len(nodes))}
    for a, b in edges:
        degree[a] += 1
        degree[b] += 1
    rupture = set()
    for node in nodes:
        if not node.is_strict_transform and degree[node.id] >= 3:
            if degree[node.id] != 3:
                raise ComputationError("rupture node with valency above three")
            rupture.add(node.id)
    if len(rupture) != pc.genus:
        raise ComputationError(
            f"expected {pc.genus} rupture nodes, found {len(rupture)}"
        )
    return ResolutionTree(nodes, tuple(sorted(edges)), frozenset(rupture))


def acampo_charpoly(tree: ResolutionTree) -> CyclotomicProduct:
    """Characteristic polynomial of the monodromy from the dual tree.

    The zeta function of the monodromy is the product of
    (1 - t^m(E))^(2 - valency(E)) over exceptional nodes E; dividing into
    (1 - t) and reversing coefficients gives the monic characteristic
    polynomial on first cohomology.
    """
    tree.validate()
    numerator = IntPolynomial((1, -1))
    denominator = IntPolynomial.one()
    for node in tree.nodes:
        if node.is_strict_transform:
            continue
        chi = 2 - tree.valency(node.id)
        if chi == 0:
            continue
        factor = (1 - IntPolynomial.monomial(node.multiplicity)) ** abs(chi)
        if chi > 0:
            denominator = denominator * factor
        else:
            numerator = numerator * factor
    on_h1 = numerator.exact_div(denominator)
    char = on_h1.reciprocal()
    if char.is_zero or char.leading != 1:
        raise ComputationError("characteristic polynomial failed to come out monic")
    return factor_cyclotomic(char)


@dataclass(frozen=True)
class AlbaneseFactor:
    """One isogeny factor of the local Albanese variety."""

    belyi: BelyiCover
    genus: int
    cm_conductors: frozenset[int]


@dataclass(frozen=True)
class LocalAlbaneseReport:
    factors: tuple[AlbaneseFactor, ...]
    total_dimension: int


def local_albanese(pc: PuiseuxCharacteristic, cover_order: int) -> LocalAlbaneseReport:
    """Isogeny decomposition of the Albanese of the degree-N cyclic cover.

    Each rupture node E of the resolution tree with d = gcd(N, m(E)) >= 2
    contributes the cyclic cover of the projective line branched over the
    three points where E meets its neighbours, with local exponents the
    neighbour multiplicities modulo d.  A vanishing residue kills the
    factor (the induced cover has genus 0); residue sums 2d are replaced
    by the complementary exponents; a common divisor e of the exponents
    and d makes the induced cover disconnected, contributing e copies of
    the primitive cover.
    """
    if cover_order < 2:
        raise PreconditionError("cover order must be at least 2")
    tree = resolution_tree(pc)
    factors: list[AlbaneseFactor] = []
    for rid in sorted(tree.rupture_ids):
        d = math.gcd(cover_order, tree.multiplicity(rid))
        if d < 2:
            continue
        neighbor_ids = list(tree.neighbors(rid))
        strict_ids = [i for i in neighbor_ids if tree.node(i).is_strict_transform]
        if strict_ids:
            rest = [i for i in neighbor_ids if i not in strict_ids]
            ordered = [rest[0], strict_ids[0], rest[1]]
        else:
            ordered = neighbor_ids
        residues = [tree.multiplicity(i) % d for i in ordered]
        if 0 in residues:
            continue
        total = sum(residues)
        if total == 2 * d:
            residues = [d - r for r in residues]
        elif total != d:
            raise ComputationError("neighbour residues do not sum to 0 modulo d")
        e = math.gcd(math.gcd(residues[0], residues[1]), math.gcd(residues[2], d))
        a, b, c = (r // e for r in residues)
        cover = BelyiCover(a, b, c, d // e)
        g = genus(cover)
        if g == 0:
            continue
        conductors = deck_charpoly(cover).conductors()
        factors.extend([AlbaneseFactor(cover, g, conductors)] * e)
    return LocalAlbaneseReport(tuple(factors), sum(f.genus for f in factors))

"""Ortholattices and orthomodular lattices.

Covers the axiom checks, the three equivalent orthomodularity conditions,
the induced structure on principal downsets, the compatibility relation,
and block (maximal Boolean subalgebra) enumeration.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import List

import numpy as np

from .orders import (
    FiniteLattice,
    as_order_map,
    check_inversion,
    compute_lattice,
    is_boolean,
    validate_poset,
)
from .reports import LawReport, law_fail, law_pass


class NotOrthomodularInput(Exception):
    """Raised when an operation requires an orthomodular carrier."""


@dataclass(frozen=True, eq=False)
class OrthoLattice:
    """Bounded lattice plus an orthocomplement map.

    The constructor does not validate; run check_ortholattice (and
    check_orthomodular where required) before trusting a hand-built
    instance.
    """

    lattice: FiniteLattice
    ortho: tuple

    @property
    def n(self) -> int:
        return self.lattice.n

    def label(self, i: int) -> str:
        return self.lattice.label(i)


def check_ortholattice(l: FiniteLattice, f) -> LawReport:
    """PASS iff f is an inversion with x /\\ f(x) = 0 and x \\/ f(x) = 1,
    and joins agree with the De Morgan dual of meets under f."""
    f = as_order_map(f, l.n)
    inv = check_inversion(l.poset, f)
    if inv.failed:
        return law_fail("ortholattice", inv.witness, f"inversion: {inv.note}")
    for x in range(l.n):
        if l.meet[x, f[x]] != l.bottom:
            return law_fail("ortholattice", (x,), "x /\\ x' != 0")
        if l.join[x, f[x]] != l.top:
            return law_fail("ortholattice", (x,), "x \\/ x' != 1")
    for i in range(l.n):
        for j in range(l.n):
            if l.join[i, j] != f[l.meet[f[i], f[j]]]:
                return law_fail("ortholattice", (i, j), "join is not the De Morgan dual of meet")
    return law_pass("ortholattice")


def check_orthomodular(o: OrthoLattice) -> List[LawReport]:
    """Evaluate the three equivalent orthomodularity conditions.

    Returns one report per condition; on an ortholattice they agree by
    the classical equivalence, which the suite verifies instance-wise
    rather than assuming.
    """
    lat, f = o.lattice, o.ortho
    n, meet, join, leq = lat.n, lat.meet, lat.join, lat.leq

    def scan(violates):
        for x in range(n):
            for y in range(n):
                if leq[x, y] and violates(x, y):
                    return (x, y)
        return None

    w1 = scan(lambda x, y: join[x, meet[f[x], y]] != y)
    w2 = scan(lambda x, y: meet[y, join[f[y], x]] != x)
    w3 = scan(lambda x, y: meet[f[x], y] == lat.bottom and x != y)
    out = []
    for law, w in (
        ("orthomodular-join-form", w1),
        ("orthomodular-meet-form", w2),
        ("orthomodular-zero-form", w3),
    ):
        out.append(law_pass(law) if w is None else law_fail(law, w))
    return out


def is_orthomodular(o: OrthoLattice) -> bool:
    if check_ortholattice(o.lattice, o.ortho).failed:
        return False
    return all(r.passed for r in check_orthomodular(o))


def downset_oml(o: OrthoLattice, a: int) -> OrthoLattice:
    """The orthomodular lattice living on {u : u <= a}.

    Order, meets and joins are the ambient ones restricted to the
    downset; the orthocomplement of u becomes a /\\ u'.  Elements of the
    result are the ambient downset members in ascending index order.
    """
    if not is_orthomodular(o):
        raise NotOrthomodularInput("downset construction needs an orthomodular carrier")
    lat = o.lattice
    carrier = [u for u in range(lat.n) if lat.leq[u, a]]
    pos = {u: k for k, u in enumerate(carrier)}
    sub_leq = lat.leq[np.ix_(carrier, carrier)]
    labels = [lat.label(u) for u in carrier]
    sub = compute_lattice(validate_poset(sub_leq, labels))
    ortho = tuple(pos[int(lat.meet[a, o.ortho[u]])] for u in carrier)
    return OrthoLattice(sub, ortho)


def compatible(o: OrthoLattice, x: int, y: int) -> bool:
    """Truth of x = (x /\\ y) \\/ (x /\\ y')."""
    lat, f = o.lattice, o.ortho
    return int(lat.join[lat.meet[x, y], lat.meet[x, f[y]]]) == x


def _maximal_cliques(adj: np.ndarray) -> list:
    """Bron-Kerbosch with pivoting over a symmetric boolean matrix."""
    n = adj.shape[0]
    nbr = [int(sum(1 << j for j in range(n) if adj[i, j] and j != i)) for i in range(n)]
    full = (1 << n) - 1
    out = []

    def expand(r: int, p: int, x: int):
        if p == 0 and x == 0:
            out.append(r)
            return
        pivot = max(range(n), key=lambda v: bin(nbr[v] & p).count("1") if (p | x) >> v & 1 else -1)
        cand = p & ~nbr[pivot]
        while cand:
            v = (cand & -cand).bit_length() - 1
            expand(r | 1 << v, p & nbr[v], x & nbr[v])
            p &= ~(1 << v)
            x |= 1 << v
            cand &= cand - 1

    expand(0, full, 0)
    return out


def blocks(o: OrthoLattice) -> list:
    """Maximal Boolean subalgebras, as sorted element tuples, sorted.

    Blocks are found as maximal pairwise-compatible subsets, closed under
    meet, join and orthocomplement as a safety fixpoint, then verified to
    be Boolean subalgebras before being returned.
    """
    if not is_orthomodular(o):
        raise NotOrthomodularInput("blocks are defined for orthomodular lattices")
    lat, f = o.lattice, o.ortho
    n = lat.n
    comp = np.zeros((n, n), dtype=bool)
    for i in range(n):
        for j in range(n):
            comp[i, j] = compatible(o, i, j)
    comp &= comp.T

    found = set()
    for clique in _maximal_cliques(comp):
        members = {i for i in range(n) if clique >> i & 1}
        while True:
            grown = set(members)
            grown.update(f[i] for i in members)
            for i in members:
                for j in members:
                    grown.add(int(lat.meet[i, j]))
                    grown.add(int(lat.join[i, j]))
            if grown == members:
                break
            members = grown
        found.add(tuple(sorted(members)))

    result = sorted(b for b in found if not any(set(b) < set(c) for c in found))
    for b in result:
        sub_leq = lat.leq[np.ix_(b, b)]
        sub = compute_lattice(validate_poset(sub_leq))
        if not is_boolean(sub).passed:
            raise RuntimeError(f"internal error: block candidate {b} is not Boolean")
    return result

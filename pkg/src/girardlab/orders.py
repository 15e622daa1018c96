"""Finite posets and lattices as explicit tables.

Elements are the indices 0..n-1.  A poset is an n x n boolean matrix
``leq`` with ``leq[i, j]`` meaning i <= j; a lattice adds integer meet and
join tables.  All containers are immutable after construction and safe to
share between threads; every law scan visits tuples in ascending index
order, so a reported witness is the lexicographically least one.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from .reports import LawReport, law_fail, law_pass


class OrderError(Exception):
    """Base class for order-structure construction failures."""


class PosetViolation(OrderError):
    def __init__(self, axiom: str, witness: tuple):
        self.axiom = axiom
        self.witness = tuple(witness)
        super().__init__(f"{axiom} violated at {self.witness}")


class NotALattice(OrderError):
    def __init__(self, pair: tuple, kind: str):
        self.pair = tuple(pair)
        self.witness = self.pair
        self.kind = kind
        super().__init__(f"pair {self.pair} has no {kind}")


class NotBounded(OrderError):
    def __init__(self, which: str, extremes: tuple):
        self.which = which
        self.witness = tuple(extremes)
        super().__init__(f"no {which} element; extremes {self.witness}")


def _frozen(a: np.ndarray) -> np.ndarray:
    a.flags.writeable = False
    return a


def _norm_labels(n: int, labels) -> Optional[tuple]:
    if labels is None:
        return None
    labels = tuple(str(x) for x in labels)
    if len(labels) != n:
        raise ValueError(f"expected {n} labels, got {len(labels)}")
    return labels


@dataclass(frozen=True, eq=False)
class FinitePoset:
    """Explicit finite partial order.  Construct through validate_poset."""

    n: int
    leq: np.ndarray
    labels: Optional[tuple] = None

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels else str(i)

    def below(self, i: int) -> np.ndarray:
        """Boolean mask of the principal downset of i."""
        return self.leq[:, i]

    def above(self, i: int) -> np.ndarray:
        return self.leq[i, :]


def validate_poset(relation, labels=None) -> FinitePoset:
    """Check reflexivity, antisymmetry and transitivity of a relation.

    Returns the poset on success; raises PosetViolation carrying the
    offending axiom and the least witness tuple otherwise.  The relation
    is taken literally, nothing is normalized.
    """
    leq = np.array(relation, dtype=bool)
    if leq.ndim != 2 or leq.shape[0] != leq.shape[1]:
        raise ValueError(f"relation must be square, got shape {leq.shape}")
    n = leq.shape[0]
    if n < 1:
        raise ValueError("poset needs at least one element")

    diag = leq.diagonal()
    if not diag.all():
        i = int(np.flatnonzero(~diag)[0])
        raise PosetViolation("reflexivity", (i,))

    sym = leq & leq.T
    np.fill_diagonal(sym, False)
    if sym.any():
        i, j = (int(x) for x in np.argwhere(sym)[0])
        raise PosetViolation("antisymmetry", (i, j))

    gap = leq @ leq & ~leq
    if gap.any():
        for i in range(n):
            for j in range(n):
                if leq[i, j]:
                    for k in range(n):
                        if leq[j, k] and not leq[i, k]:
                            raise PosetViolation("transitivity", (i, j, k))
    return FinitePoset(n, _frozen(leq), _norm_labels(n, labels))


def closure_from_covers(n: int, covers: Iterable[tuple]) -> np.ndarray:
    """Reflexive-transitive closure of a cover list, as an leq matrix."""
    leq = np.eye(n, dtype=bool)
    for i, j in covers:
        if not (0 <= i < n and 0 <= j < n):
            raise ValueError(f"cover ({i},{j}) out of range for n={n}")
        leq[i, j] = True
    while True:
        more = leq | (leq @ leq)
        if (more == leq).all():
            return leq
        leq = more


@dataclass(frozen=True, eq=False)
class FiniteLattice:
    """Poset together with total meet/join tables and bounds."""

    poset: FinitePoset
    meet: np.ndarray
    join: np.ndarray
    bottom: int
    top: int

    @property
    def n(self) -> int:
        return self.poset.n

    @property
    def leq(self) -> np.ndarray:
        return self.poset.leq

    @property
    def labels(self):
        return self.poset.labels

    def label(self, i: int) -> str:
        return self.poset.label(i)


def compute_lattice(p: FinitePoset) -> FiniteLattice:
    """Derive meet/join tables, or raise NotALattice / NotBounded.

    Uses the upper-set trick: the common upper bounds of {i, j} form a
    principal upset exactly when the pair has a least upper bound.
    """
    n, leq = p.n, p.leq
    lt = leq & ~np.eye(n, dtype=bool)
    bottoms = [i for i in range(n) if leq[i, :].all()]
    if not bottoms:
        minimal = [i for i in range(n) if not lt[:, i].any()]
        raise NotBounded("bottom", minimal)
    tops = [i for i in range(n) if leq[:, i].all()]
    if not tops:
        maximal = [i for i in range(n) if not lt[i, :].any()]
        raise NotBounded("top", maximal)

    up_of = {leq[i, :].tobytes(): i for i in range(n)}
    down_of = {leq[:, i].tobytes(): i for i in range(n)}
    meet = np.zeros((n, n), dtype=np.intp)
    join = np.zeros((n, n), dtype=np.intp)
    for i in range(n):
        for j in range(n):
            uppers = (leq[i, :] & leq[j, :]).tobytes()
            u = up_of.get(uppers)
            if u is None:
                raise NotALattice((i, j), "least upper bound")
            join[i, j] = u
            lowers = (leq[:, i] & leq[:, j]).tobytes()
            d = down_of.get(lowers)
            if d is None:
                raise NotALattice((i, j), "greatest lower bound")
            meet[i, j] = d
    return FiniteLattice(p, _frozen(meet), _frozen(join), bottoms[0], tops[0])


def lattice_from_covers(covers, labels=None) -> FiniteLattice:
    """Convenience: covers -> closure -> validated poset -> lattice."""
    n = len(labels) if labels is not None else 1 + max(max(c) for c in covers)
    return compute_lattice(validate_poset(closure_from_covers(n, covers), labels))


def is_distributive(l: FiniteLattice) -> LawReport:
    """PASS iff x /\\ (y \\/ z) = (x /\\ y) \\/ (x /\\ z) for all triples."""
    n, meet, join = l.n, l.meet, l.join
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if meet[x, join[y, z]] != join[meet[x, y], meet[x, z]]:
                    return law_fail("distributivity", (x, y, z))
    return law_pass("distributivity")


def is_complemented(l: FiniteLattice):
    """Check that every x has a complement; report one per element.

    Returns (report, complements) where complements lists, for each
    element, the least-index y with x /\\ y = bottom and x \\/ y = top,
    or None alongside a FAIL report naming the first uncomplemented x.
    """
    n, meet, join = l.n, l.meet, l.join
    comps = []
    for x in range(n):
        for y in range(n):
            if meet[x, y] == l.bottom and join[x, y] == l.top:
                comps.append(y)
                break
        else:
            return law_fail("complementation", (x,)), None
    return law_pass("complementation"), tuple(comps)


def is_boolean(l: FiniteLattice) -> LawReport:
    """PASS iff the lattice is complemented and distributive."""
    comp_report, _ = is_complemented(l)
    if comp_report.failed:
        return law_fail("boolean", comp_report.witness, "not complemented")
    dist = is_distributive(l)
    if dist.failed:
        return law_fail("boolean", dist.witness, "not distributive")
    return law_pass("boolean")


def as_order_map(f, n: int) -> tuple:
    """Validate a total self-map given as a sequence of element indices."""
    f = tuple(int(x) for x in f)
    if len(f) != n:
        raise ValueError(f"map must have length {n}, got {len(f)}")
    for i, x in enumerate(f):
        if not 0 <= x < n:
            raise ValueError(f"map value {x} at {i} out of range")
    return f


def check_inversion(p: FinitePoset, f) -> LawReport:
    """PASS iff f is involutive and x <= y iff f(y) <= f(x)."""
    f = as_order_map(f, p.n)
    leq = p.leq
    for i in range(p.n):
        if f[f[i]] != i:
            return law_fail("inversion", (i,), "not involutive")
    for i in range(p.n):
        for j in range(p.n):
            if leq[i, j] != leq[f[j], f[i]]:
                return law_fail("inversion", (i, j), "not order-reversing")
    return law_pass("inversion")


def hasse_covers(p: FinitePoset) -> list:
    """Pairs (i, j) with i < j and no element strictly between."""
    lt = p.leq & ~np.eye(p.n, dtype=bool)
    between = lt @ lt
    return [(int(i), int(j)) for i, j in np.argwhere(lt & ~between)]


def join_irreducibles(l: FiniteLattice) -> list:
    """Elements with exactly one lower cover (excludes bottom)."""
    covers = hasse_covers(l.poset)
    n_lower = [0] * l.n
    for _, j in covers:
        n_lower[j] += 1
    return [i for i in range(l.n) if i != l.bottom and n_lower[i] == 1]


def enumerate_inversions(p: FinitePoset) -> list:
    """All involutive order-reversing bijections of a finite poset.

    Backtracks over pairings, pruning by the up/down set-size profile
    (an inversion must swap downset and upset cardinalities).  Intended
    for carriers of a dozen elements or so; the count explodes on large
    antichains.
    """
    n, leq = p.n, p.leq
    down = leq.sum(axis=0)
    up = leq.sum(axis=1)
    f = [-1] * n
    out = []

    def ok(i: int, j: int) -> bool:
        # can i be sent to j, given the pairs fixed so far?
        if down[i] != up[j] or up[i] != down[j]:
            return False
        for k in range(n):
            if f[k] >= 0:
                if leq[i, k] != leq[f[k], j] or leq[k, i] != leq[j, f[k]]:
                    return False
        return True

    def backtrack():
        try:
            i = f.index(-1)
        except ValueError:
            out.append(tuple(f))
            return
        for j in range(i, n):  # everything before i is already paired
            if f[j] != -1:
                continue
            if not ok(i, j) or (j != i and not ok(j, i)):
                continue
            f[i], f[j] = j, i
            backtrack()
            f[i] = -1
            if j != i:
                f[j] = -1

    backtrack()
    return out

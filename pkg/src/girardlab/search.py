"""Exhaustive enumeration of small lattices and residuation searches.

Lattices are enumerated up to isomorphism by growing bounded posets one
maximal element at a time (a lattice always reaches the empty frontier
of that process because deleting a maximal element keeps the bottom),
with canonical-form rejection at every size.  Residuation searches
backtrack only over products of join-irreducible pairs: a residuated
multiplication preserves joins, so it is determined by those values and
the search stays exhaustive.  Every solution a search emits is
re-verified through derive_residua, which shares no code with the
searcher's pruning.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import numpy as np

from .girard import check_unit_downset_boolean
from .orders import FiniteLattice, compute_lattice, is_boolean, is_complemented, is_distributive, \
    join_irreducibles, validate_poset, enumerate_inversions
from .ortho import NotOrthomodularInput, OrthoLattice, is_orthomodular
from .reports import LawReport, law_fail, law_pass
from .residuation import ResiduatedStructure, ResiduationError, check_associative, \
    residuated_structure

MAX_ENUM = 10
FILTERS = ("complemented", "orthocomplemented", "nondistributive")


class BoundExceeded(Exception):
    pass


# ---------------------------------------------------------------------------
# posets as tuples of upset bitmasks: rows[i] has bit j set iff i <= j
# ---------------------------------------------------------------------------

def _down_masks(rows: Tuple[int, ...]) -> List[int]:
    n = len(rows)
    return [sum(1 << i for i in range(n) if rows[i] >> j & 1) for j in range(n)]


def _refine_classes(rows: Tuple[int, ...]) -> List[int]:
    """Isomorphism-invariant element classes via neighborhood refinement."""
    n = len(rows)
    downs = _down_masks(rows)
    inv = [(bin(rows[i]).count("1"), bin(downs[i]).count("1")) for i in range(n)]
    for _ in range(2):
        inv = [
            (
                inv[i],
                tuple(sorted(inv[j] for j in range(n) if rows[i] >> j & 1)),
                tuple(sorted(inv[j] for j in range(n) if downs[i] >> j & 1)),
            )
            for i in range(n)
        ]
    order = {v: k for k, v in enumerate(sorted(set(inv)))}
    return [order[v] for v in inv]


def canonical_key(rows: Tuple[int, ...]) -> tuple:
    """Minimum lexicographic relation encoding over class-preserving
    relabelings.  Classes refine rank, so the minimum ranges over a
    subset of the rank-preserving permutations that always contains the
    isomorphisms; isomorphic posets share the key."""
    n = len(rows)
    cls = _refine_classes(rows)
    slot_class = sorted(cls)
    members: Dict[int, List[int]] = {}
    for i in range(n):
        members.setdefault(cls[i], []).append(i)

    best: Optional[tuple] = None
    perm: List[int] = []
    used = [False] * n

    def rec(p: int, prefix: tuple):
        nonlocal best
        if p == n:
            if best is None or prefix < best:
                best = prefix
            return
        for cand in members[slot_class[p]]:
            if used[cand]:
                continue
            step = 0
            for q in range(p):
                step = step << 2 | (rows[cand] >> perm[q] & 1) << 1 | (rows[perm[q]] >> cand & 1)
            new_prefix = prefix + (step,)
            if best is not None and new_prefix > best[: p + 1]:
                continue
            used[cand] = True
            perm.append(cand)
            rec(p + 1, new_prefix)
            perm.pop()
            used[cand] = False

    rec(0, ())
    return (tuple(slot_class), best)


def _is_lattice_rows(rows: Tuple[int, ...]) -> bool:
    n = len(rows)
    full = (1 << n) - 1
    downs = _down_masks(rows)
    if full not in rows or full not in downs:
        return False
    up_of = {rows[i]: i for i in range(n)}
    down_of = {downs[i]: i for i in range(n)}
    for i in range(n):
        for j in range(i + 1, n):
            if rows[i] & rows[j] not in up_of:
                return False
            if downs[i] & downs[j] not in down_of:
                return False
    return True


def _grow(rows: Tuple[int, ...]):
    """All one-larger bounded posets: add a maximal element above a
    down-closed subset containing the bottom."""
    n = len(rows)
    downs = _down_masks(rows)
    bottom = rows.index((1 << n) - 1)
    new_bit = 1 << n
    for d in range(1 << n):
        if not d >> bottom & 1:
            continue
        closed = 0
        for i in range(n):
            if d >> i & 1:
                closed |= downs[i]
        if closed != d:
            continue
        yield tuple(rows[i] | (new_bit if d >> i & 1 else 0) for i in range(n)) + (new_bit,)


def _rows_to_lattice(rows: Tuple[int, ...]) -> FiniteLattice:
    n = len(rows)
    leq = np.array([[bool(rows[i] >> j & 1) for j in range(n)] for i in range(n)])
    return compute_lattice(validate_poset(leq))


def _has_orthocomplement(l: FiniteLattice) -> bool:
    for f in enumerate_inversions(l.poset):
        if all(l.meet[x, f[x]] == l.bottom and l.join[x, f[x]] == l.top for x in range(l.n)):
            return True
    return False


@dataclass
class EnumerationResult:
    size: int
    lattices: List[FiniteLattice]
    counts: Dict[int, int]
    filters: tuple


def enumerate_lattices(max_n: int, filters: tuple = ()) -> EnumerationResult:
    """All lattices on at most max_n elements, one per isomorphism class.

    Filters, applied after enumeration: 'complemented',
    'orthocomplemented' (admits some inversion with x /\\ x' = 0),
    'nondistributive'.  Counts tally the returned (filtered) list.
    """
    if not 1 <= max_n <= MAX_ENUM:
        raise BoundExceeded(f"max_n must be in 1..{MAX_ENUM}")
    for f in filters:
        if f not in FILTERS:
            raise ValueError(f"unknown filter {f!r}; expected one of {FILTERS}")

    lattices: List[FiniteLattice] = []
    counts: Dict[int, int] = {}
    frontier: Dict[tuple, Tuple[int, ...]] = {canonical_key((1,)): (1,)}
    for size in range(1, max_n + 1):
        kept = 0
        for key in sorted(frontier):
            rows = frontier[key]
            if not _is_lattice_rows(rows):
                continue
            lat = _rows_to_lattice(rows)
            if "complemented" in filters and not is_complemented(lat)[0].passed:
                continue
            if "nondistributive" in filters and is_distributive(lat).passed:
                continue
            if "orthocomplemented" in filters and not _has_orthocomplement(lat):
                continue
            lattices.append(lat)
            kept += 1
        counts[size] = kept
        if size < max_n:
            grown: Dict[tuple, Tuple[int, ...]] = {}
            for rows in frontier.values():
                for ext in _grow(rows):
                    grown.setdefault(canonical_key(ext), ext)
            frontier = grown
    return EnumerationResult(max_n, lattices, counts, tuple(filters))


# ---------------------------------------------------------------------------
# residuation searches
# ---------------------------------------------------------------------------

@dataclass
class ResiduationSearchResult:
    lattice_id: str
    mode: str
    found: List[np.ndarray]
    structures: List[ResiduatedStructure]
    exhausted: bool
    nodes: int = 0
    downset_unit_reports: Optional[List[LawReport]] = None


def _lattice_id(l: FiniteLattice) -> str:
    from .orders import hasse_covers

    return f"n={l.n};covers={hasse_covers(l.poset)}"


class _IrreducibleTableSearch:
    """Backtracking over products of join-irreducible pairs.

    The full table is the join-extension of the assigned cells; the row
    of an irreducible can be extended, and therefore checked, as soon as
    the rows of all irreducibles below it are complete, which the
    height-sorted cell order guarantees.
    """

    def __init__(self, l: FiniteLattice, check_associativity: bool = True,
                 reverse_values: bool = False):
        self.l = l
        self.check_associativity = check_associativity
        heights = l.leq.sum(axis=0)
        self.irr = sorted(join_irreducibles(l), key=lambda i: (int(heights[i]), i))
        self.below_irr = [
            [j for j in self.irr if l.leq[j, x]] for x in range(l.n)
        ]
        self.cells = [(i, j) for i in self.irr for j in self.irr]
        self.reverse_values = reverse_values
        self.assign: Dict[tuple, int] = {}

    def domain(self, i: int, j: int, ceiling: int) -> List[int]:
        down = [v for v in range(self.l.n) if self.l.leq[v, ceiling]]
        return list(reversed(down)) if self.reverse_values else down

    def _partial_row(self, i: int, y: int) -> int:
        """Extension value at (i, y) from the assigned cells."""
        l = self.l
        acc = l.bottom
        for i2 in self.below_irr[i]:
            for j2 in self.below_irr[y]:
                acc = int(l.join[acc, self.assign[(i2, j2)]])
        return acc

    def row_ok(self, i: int) -> bool:
        """Called when row i is complete: unit column and the row's join
        consistency must already hold for the partial extension."""
        l = self.l
        ext = [self._partial_row(i, y) for y in range(l.n)]
        if not self.row_constraint(i, ext):
            return False
        for y in range(l.n):
            for z in range(l.n):
                if ext[int(l.join[y, z])] != l.join[ext[y], ext[z]]:
                    return False
        return True

    def row_constraint(self, i: int, ext: List[int]) -> bool:
        raise NotImplementedError

    def monotone_ok(self, i: int, j: int, v: int) -> bool:
        l = self.l
        for (i2, j2), v2 in self.assign.items():
            if l.leq[i2, i] and l.leq[j2, j] and not l.leq[v2, v]:
                return False
            if l.leq[i, i2] and l.leq[j, j2] and not l.leq[v, v2]:
                return False
        return True

    def extension(self) -> np.ndarray:
        l = self.l
        m = np.empty((l.n, l.n), dtype=np.intp)
        for x in range(l.n):
            for y in range(l.n):
                m[x, y] = self._partial_row(x, y) if self.below_irr[x] else l.bottom
        return m

    def table_ok(self, m: np.ndarray) -> bool:
        l = self.l
        for (i, j), v in self.assign.items():
            if m[i, j] != v:
                return False
        for x in range(l.n):
            for a in range(l.n):
                for b in range(l.n):
                    j = int(l.join[a, b])
                    if m[x, j] != l.join[m[x, a], m[x, b]]:
                        return False
                    if m[j, x] != l.join[m[a, x], m[b, x]]:
                        return False
        if self.check_associativity and check_associative(m).failed:
            return False
        return True

    def ceiling(self, i: int, j: int) -> int:
        raise NotImplementedError

    def leaf_ok(self, m: np.ndarray) -> bool:
        raise NotImplementedError

    def run(self, budget: Optional[int] = None):
        found: List[np.ndarray] = []
        nodes = 0
        exhausted = True
        row_ends = {}
        for k, (i, j) in enumerate(self.cells):
            row_ends[k] = k + 1 == len(self.cells) or self.cells[k + 1][0] != i

        def rec(k: int) -> bool:
            nonlocal nodes
            if k == len(self.cells):
                m = self.extension()
                if self.table_ok(m) and self.leaf_ok(m):
                    try:
                        residuated_structure(self.l, m)
                    except ResiduationError:
                        return True
                    found.append(m)
                return True
            i, j = self.cells[k]
            for v in self.domain(i, j, self.ceiling(i, j)):
                nodes += 1
                if budget is not None and nodes > budget:
                    return False
                if not self.monotone_ok(i, j, v):
                    continue
                self.assign[(i, j)] = v
                if not row_ends[k] or self.row_ok(i):
                    if not rec(k + 1):
                        del self.assign[(i, j)]
                        return False
                del self.assign[(i, j)]
            return True

        exhausted = rec(0)
        found.sort(key=lambda m: tuple(m.ravel()))
        return found, exhausted, nodes


class _IntegralSearch(_IrreducibleTableSearch):
    """Unit fixed at the top; products capped by the meet, which every
    integral residuated multiplication satisfies."""

    def ceiling(self, i: int, j: int) -> int:
        return int(self.l.meet[i, j])

    def row_constraint(self, i: int, ext: List[int]) -> bool:
        return ext[self.l.top] == i

    def leaf_ok(self, m: np.ndarray) -> bool:
        l = self.l
        return all(m[x, l.top] == x and m[l.top, x] == x for x in range(l.n))


class _UnitalSearch(_IrreducibleTableSearch):
    """Unit anywhere; cell values range over the whole carrier except
    where the unit law pins a lone extension cell outright."""

    def __init__(self, l: FiniteLattice, e: int, **kw):
        super().__init__(l, **kw)
        self.e = e

    def ceiling(self, i: int, j: int) -> int:
        return self.l.top

    def domain(self, i: int, j: int, ceiling: int) -> List[int]:
        e = self.e
        if j == e and self.below_irr[e] == [e] and self.below_irr[i] == [i]:
            return [i]
        if i == e and self.below_irr[e] == [e] and self.below_irr[j] == [j]:
            return [j]
        return super().domain(i, j, ceiling)

    def row_constraint(self, i: int, ext: List[int]) -> bool:
        return ext[self.e] == i

    def leaf_ok(self, m: np.ndarray) -> bool:
        e = self.e
        return all(m[x, e] == x and m[e, x] == x for x in range(self.l.n))


def search_integral_residuation(l: FiniteLattice, _check_associativity: bool = True,
                                _reverse_values: bool = False) -> ResiduationSearchResult:
    """Exhaustive search for multiplications making l an integral
    residuated lattice.  Always runs to exhaustion.

    The private knobs exist for mutation testing of the search oracle:
    disabling the associativity check admits tables that satisfy every
    other law, and reversing the value order must not change the found
    set."""
    search = _IntegralSearch(l, check_associativity=_check_associativity,
                             reverse_values=_reverse_values)
    found, exhausted, nodes = search.run(budget=None)
    structures = [residuated_structure(l, m) for m in found]
    return ResiduationSearchResult(_lattice_id(l), "integral", found, structures, exhausted, nodes)


def search_unital_residuation(o: OrthoLattice, budget: int = 200_000) -> ResiduationSearchResult:
    """Budgeted search for unital join-preserving associative tables on
    an orthomodular lattice, the unit anywhere in the carrier.

    Every hit is fed to the unit-downset check; a consumed budget is
    reported as exhausted=False with whatever was found so far."""
    if not is_orthomodular(o):
        raise NotOrthomodularInput("unital search expects an orthomodular carrier")
    l = o.lattice
    found: List[np.ndarray] = []
    nodes_total = 0
    exhausted = True
    units = [l.top] if l.n == 1 else [e for e in range(l.n) if e != l.bottom]
    for e in units:
        remaining = budget - nodes_total
        if remaining <= 0:
            exhausted = False
            break
        search = _UnitalSearch(l, e)
        hits, done, nodes = search.run(budget=remaining)
        nodes_total += nodes
        found.extend(hits)
        if not done:
            exhausted = False
            break
    found.sort(key=lambda m: tuple(m.ravel()))
    structures = [residuated_structure(l, m) for m in found]
    reports = [check_unit_downset_boolean(o, s) for s in structures]
    return ResiduationSearchResult(
        _lattice_id(l), "unital", found, structures, exhausted, nodes_total, reports
    )


def confirm_boolean_forcing(max_n: int) -> LawReport:
    """For every complemented lattice on at most max_n elements, an
    integral residuated multiplication exists exactly when the lattice
    is Boolean, and on Boolean lattices the only one is the meet (hence
    idempotent).  Verified by exhaustive enumeration plus search."""
    if max_n > 8:
        raise BoundExceeded("confirmation sweep is bounded at 8 elements")
    enum = enumerate_lattices(max_n, filters=("complemented",))
    for idx, lat in enumerate(enum.lattices):
        res = search_integral_residuation(lat)
        boolean = is_boolean(lat).passed
        if bool(res.found) != boolean:
            return law_fail(
                "complemented-integral-iff-boolean",
                (lat.n, idx),
                f"boolean={boolean} but search found {len(res.found)} tables on {res.lattice_id}",
            )
        if boolean:
            if len(res.found) != 1 or not (res.found[0] == lat.meet).all():
                return law_fail(
                    "complemented-integral-iff-boolean",
                    (lat.n, idx),
                    f"Boolean lattice admits {len(res.found)} tables, expected only the meet",
                )
            if not res.structures[0].flags.idempotent:
                return law_fail(
                    "complemented-integral-iff-boolean",
                    (lat.n, idx),
                    "meet multiplication not idempotent",
                )
    sizes = ", ".join(f"{k}:{v}" for k, v in sorted(enum.counts.items()))
    return law_pass(
        "complemented-integral-iff-boolean",
        f"{len(enum.lattices)} complemented lattices checked (per size {sizes})",
    )

"""Lattice enumeration and the residuation searches."""
import numpy as np
import pytest

from girardlab.catalog import benzene_o6, boolean_cube, boolean_ortho, chain, diamond_m3, \
    horizontal_sum_mo
from girardlab.orders import hasse_covers, is_boolean
from girardlab.ortho import NotOrthomodularInput
from girardlab.residuation import check_associative, derive_residua, lukasiewicz_chain
from girardlab.search import (
    BoundExceeded,
    canonical_key,
    confirm_boolean_forcing,
    enumerate_lattices,
    search_integral_residuation,
    search_unital_residuation,
)

# number of lattices per carrier size, one per isomorphism class
LATTICE_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 5, 6: 15}


def rows_of(lat):
    n = lat.n
    return tuple(sum(1 << j for j in range(n) if lat.leq[i, j]) for i in range(n))


class TestEnumeration:
    def test_counts_to_six(self):
        result = enumerate_lattices(6)
        assert result.counts == LATTICE_COUNTS
        assert len(result.lattices) == sum(LATTICE_COUNTS.values())

    def test_single_element(self):
        result = enumerate_lattices(1)
        assert result.counts == {1: 1}

    def test_no_isomorphic_duplicates(self):
        result = enumerate_lattices(6)
        keys = [canonical_key(rows_of(l)) for l in result.lattices]
        assert len(keys) == len(set(keys))

    def test_bound(self):
        with pytest.raises(BoundExceeded):
            enumerate_lattices(11)
        with pytest.raises(BoundExceeded):
            enumerate_lattices(0)

    def test_unknown_filter(self):
        with pytest.raises(ValueError):
            enumerate_lattices(3, filters=("shiny",))

    def test_complemented_nondistributive_filter(self):
        result = enumerate_lattices(6, filters=("complemented", "nondistributive"))
        keys = {canonical_key(rows_of(l)) for l in result.lattices}
        assert canonical_key(rows_of(diamond_m3())) in keys
        assert canonical_key(rows_of(benzene_o6().lattice)) in keys
        assert all(not is_boolean(l).passed for l in result.lattices)

    def test_orthocomplemented_filter(self):
        result = enumerate_lattices(6, filters=("orthocomplemented",))
        keys = {canonical_key(rows_of(l)) for l in result.lattices}
        assert canonical_key(rows_of(benzene_o6().lattice)) in keys
        assert canonical_key(rows_of(boolean_cube(2))) in keys
        assert canonical_key(rows_of(diamond_m3())) not in keys

    def test_isomorphism_invariance_of_key(self):
        lat = diamond_m3()
        perm = [0, 3, 1, 2, 4]
        rows = rows_of(lat)
        relabeled = tuple(
            sum(1 << perm[j] for j in range(5) if rows[i] >> j & 1) for i in range(5)
        )
        relabeled = tuple(relabeled[perm.index(i)] for i in range(5))
        assert canonical_key(rows) == canonical_key(relabeled)


class TestIntegralSearch:
    def test_boolean_square_unique_meet(self):
        lat = boolean_cube(2)
        result = search_integral_residuation(lat)
        assert result.exhausted
        assert len(result.found) == 1
        assert (result.found[0] == lat.meet).all()
        assert result.structures[0].flags.idempotent

    def test_m3_empty(self):
        result = search_integral_residuation(diamond_m3())
        assert result.found == [] and result.exhausted

    def test_o6_empty(self):
        result = search_integral_residuation(benzene_o6().lattice)
        assert result.found == [] and result.exhausted

    def test_three_chain_has_meet_and_lukasiewicz(self):
        lat = chain(3)
        result = search_integral_residuation(lat)
        tables = {tuple(m.ravel()) for m in result.found}
        assert tuple(np.asarray(lat.meet).ravel()) in tables
        assert tuple(lukasiewicz_chain(3).mul.ravel()) in tables
        assert len(tables) >= 2

    def test_solutions_pass_independent_verifier(self):
        for lat in (chain(4), boolean_cube(2)):
            result = search_integral_residuation(lat)
            for table in result.found:
                assert check_associative(table).passed
                derive_residua(lat, table)  # raises on any adjointness defect
                assert all(table[x, lat.top] == x for x in range(lat.n))

    def test_order_independence(self):
        for lat in (chain(4), diamond_m3(), boolean_cube(2)):
            forward = search_integral_residuation(lat)
            backward = search_integral_residuation(lat, _reverse_values=True)
            assert [t.tolist() for t in forward.found] == [t.tolist() for t in backward.found]
            assert forward.exhausted == backward.exhausted

    def test_skipping_associativity_flips_the_found_set(self):
        # sensitivity of the search oracle: without the associativity
        # check, the four-chain admits extra tables, every one of which
        # still satisfies adjointness and is rejected only by that law
        lat = chain(4)
        strict = search_integral_residuation(lat)
        loose = search_integral_residuation(lat, _check_associativity=False)
        strict_tables = {tuple(m.ravel()) for m in strict.found}
        loose_tables = {tuple(m.ravel()) for m in loose.found}
        assert strict_tables < loose_tables
        for extra in loose_tables - strict_tables:
            table = np.array(extra).reshape(4, 4)
            assert check_associative(table).failed
            derive_residua(lat, table)


class TestConfirmBooleanForcing:
    def test_max_four(self):
        report = confirm_boolean_forcing(4)
        assert report.passed

    def test_max_six(self):
        assert confirm_boolean_forcing(6).passed

    def test_monotone_in_bound(self):
        # a pass at six implies the smaller sweeps pass as sub-reports
        assert confirm_boolean_forcing(6).passed
        assert confirm_boolean_forcing(5).passed
        assert confirm_boolean_forcing(4).passed

    def test_bound(self):
        with pytest.raises(BoundExceeded):
            confirm_boolean_forcing(9)


class TestUnitalSearch:
    def test_boolean_square_includes_integral_meet(self):
        o = boolean_ortho(2)
        result = search_unital_residuation(o, budget=10_000)
        assert result.exhausted
        hits = {tuple(m.ravel()) for m in result.found}
        assert tuple(np.asarray(o.lattice.meet).ravel()) in hits
        units = {s.flags.unit for s in result.structures}
        assert o.lattice.top in units and len(units) > 1

    def test_zero_budget(self):
        result = search_unital_residuation(horizontal_sum_mo(2), budget=0)
        assert result.found == [] and not result.exhausted

    def test_mo2_budgeted_hits_satisfy_downset_conclusions(self):
        result = search_unital_residuation(horizontal_sum_mo(2), budget=20_000)
        assert not result.exhausted  # full exploration needs a few million nodes
        assert result.found  # non-Boolean orthomodular carriers with units exist
        assert all(r.passed for r in result.downset_unit_reports)
        for s in result.structures:
            assert s.flags.unit is not None and not s.flags.integral

    def test_requires_orthomodular(self):
        with pytest.raises(NotOrthomodularInput):
            search_unital_residuation(benzene_o6(), budget=100)

    def test_lattice_id_mentions_covers(self):
        result = search_unital_residuation(boolean_ortho(1), budget=1000)
        assert str(hasse_covers(boolean_cube(1).poset)) in result.lattice_id

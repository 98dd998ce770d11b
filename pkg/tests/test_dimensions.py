import math

import numpy as np
import pytest

from falsilab.core.model import PartialAssignment
from falsilab.core.operations import class_size
from falsilab.exceptions import BadRange, CapExceeded
from falsilab.families import describe, make_family
from falsilab.services.class_file import random_class
from falsilab.services.dimensions import (analytic_bound, growth_function, growth_value, popper_dimension,
                                          popper_profile, sauer_bound, shattered_sets, vc_dimension)
from tests.oracles import naive_growth, naive_popper, naive_vc


def test_vc_evenzero(evenzero6):
    """Test the even-zero class shatters exactly the odd coordinates."""
    result = vc_dimension(evenzero6)
    assert result.value == 3
    assert result.witness == (1, 3, 5)
    assert shattered_sets(evenzero6, 2) == [(1, 3), (1, 5), (3, 5)]


def test_vc_small_explicit(small_explicit):
    """Test VC dimension with the lexicographically smallest witness."""
    result = vc_dimension(small_explicit)
    assert (result.value, result.witness) == (2, (0, 1))


def test_popper_values(evenzero6, allheads6, threshold10, small_explicit):
    """Test Popper dimensions of the reference classes."""
    assert str(popper_dimension(evenzero6)) == "1 witness={0}"
    assert popper_dimension(allheads6).witness == (0,)
    assert popper_dimension(threshold10).witness == (0, 1)
    assert popper_dimension(small_explicit).witness == (0, 2)
    assert not popper_dimension(make_family(describe("full", 5))).is_finite


def test_popper_with_assignment(evenzero6):
    """Test conditioning can remove every crucial experiment, or every trace."""
    evens = PartialAssignment.of({0: 0, 2: 0, 4: 0})
    assert not popper_dimension(evenzero6, evens).is_finite
    refuted = popper_dimension(evenzero6, PartialAssignment.of({0: 1}))
    assert refuted.value == 0
    assert refuted.witness == ()


def test_popper_of_empty_class():
    """Test the empty class leaves even the empty set unshattered."""
    assert popper_dimension(make_family(describe("empty", 4))).value == 0


def test_oracle_equivalence_built_ins():
    """Test pruned searches agree with full enumeration on every built-in family up to ground 8."""
    for n in range(1, 9):
        for descriptor in [
            describe("threshold", n),
            describe("interval", n),
            describe("evenzero", n),
            describe("cylinder", n, support=tuple(range(1, n, 3))),
            describe("partition", n, blocks=(n,)),
            describe("allheads", n),
            describe("full", n),
            describe("coordhalf", n, pivot=n - 1),
            describe("empty", n),
        ]:
            family = make_family(descriptor)
            oracle = naive_vc(family)
            if oracle is None:
                assert class_size(family) == 0
            else:
                result = vc_dimension(family)
                assert (result.value, result.witness) == oracle, descriptor.kind
            popper = popper_dimension(family)
            assert (popper.witness if popper.is_finite else None) == naive_popper(family), descriptor.kind


def test_oracle_equivalence_random():
    """Test pruned searches agree with full enumeration on 100 random explicit classes."""
    rng = np.random.default_rng(11)
    for seed in range(100):
        hclass = random_class(seed, int(rng.integers(1, 9)), float(rng.uniform(0.05, 0.95)))
        oracle = naive_vc(hclass)
        if oracle is not None:
            result = vc_dimension(hclass)
            assert (result.value, result.witness) == oracle
        k = int(rng.integers(0, hclass.n + 1))
        domain = [int(i) for i in rng.permutation(hclass.n)[:k]]
        assign = {i: int(rng.integers(0, 2)) for i in domain}
        popper = popper_dimension(hclass, PartialAssignment.of(assign))
        expected = naive_popper(hclass, tuple(assign.items()))
        assert (popper.witness if popper.is_finite else None) == expected


def test_growth_function(small_explicit):
    """Test the growth table and its witnesses."""
    table = growth_function(small_explicit, 3)
    assert table.entries == {0: 1, 1: 2, 2: 4, 3: 5}
    assert table.witnesses[2] == (0, 1)
    assert table.max_m == 3
    with pytest.raises(BadRange):
        growth_function(small_explicit, 4)


def test_growth_matches_oracle(random_corpus):
    """Test growth values against full enumeration."""
    for hclass in random_corpus[:15]:
        for m in range(hclass.n + 1):
            assert growth_value(hclass, m)[0] == naive_growth(hclass, m)


def test_sauer_bound_values():
    """Test Sauer-Shelah sums and the advisory analytic bound."""
    assert sauer_bound(5, 2) == 16
    assert sauer_bound(3, 5) == 8
    assert sauer_bound(0, 0) == 1
    assert analytic_bound(5, 2) == pytest.approx((math.e * 5 / 2) ** 2)
    assert analytic_bound(3, 2) is None
    assert analytic_bound(5, 0) is None
    with pytest.raises(BadRange):
        sauer_bound(-1, 2)


def test_sauer_shelah_suite():
    """Test tau_H(m) never exceeds the Sauer-Shelah bound on families and 200 random classes."""
    classes = []
    for n in range(4, 11):
        classes.extend(
            make_family(d)
            for d in [
                describe("threshold", n),
                describe("interval", n),
                describe("evenzero", n),
                describe("cylinder", n, support=(0, n - 1)),
                describe("partition", n, blocks=(2, n - 2)),
                describe("allheads", n),
                describe("full", n),
                describe("coordhalf", n, pivot=1),
            ]
        )
    rng = np.random.default_rng(3)
    classes.extend(random_class(seed, int(rng.integers(1, 11)), float(rng.uniform(0.05, 0.6))) for seed in range(200))
    violations = 0
    for hclass in classes:
        if class_size(hclass) == 0:
            continue
        d = vc_dimension(hclass).value
        violations += sum(growth_value(hclass, m)[0] > sauer_bound(m, d) for m in range(hclass.n + 1))
    assert violations == 0


def test_popper_at_most_vc_plus_one(random_corpus, built_in_families):
    """Test every finite Popper dimension over a nonempty class is at most VC + 1."""
    classes = list(random_corpus) + [make_family(d) for d in built_in_families]
    for hclass in classes:
        if class_size(hclass) == 0:
            continue
        popper = popper_dimension(hclass)
        if popper.is_finite:
            assert popper.value <= vc_dimension(hclass).value + 1


def test_popper_profile():
    """Test profiles summarize hereditary finiteness up to a depth."""
    evenzero = make_family(describe("evenzero", 4))
    shallow = popper_profile(evenzero, 1)
    assert len(shallow.entries) == 9
    assert shallow.hereditarily_finite
    assert shallow.max_finite == 1
    assert shallow.as_dict()[PartialAssignment.of({0: 1})].value == 0

    deep = popper_profile(evenzero, 2)
    assert PartialAssignment.of({0: 0, 2: 0}) in deep.unwitnessed
    assert not deep.hereditarily_finite

    full = popper_profile(make_family(describe("full", 3)), 1)
    assert full.max_finite is None
    assert len(full.unwitnessed) == 7


def test_popper_profile_budget():
    """Test the profile refuses enumerations above the budget."""
    with pytest.raises(CapExceeded):
        popper_profile(make_family(describe("full", 10)), 10, budget=100)
    with pytest.raises(BadRange):
        popper_profile(make_family(describe("full", 3)), 4)

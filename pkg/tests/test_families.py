from itertools import combinations, permutations

import numpy as np
import pytest

from falsilab.constants import FAMILY_KINDS
from falsilab.core.model import SamplePrefix
from falsilab.core.operations import class_size, materialize, pattern_count, restrict, shatters
from falsilab.core.registry import FamilyRegistry
from falsilab.exceptions import BadDescriptor, EmptyClass
from falsilab.families import describe, expected_vc, make_family
from falsilab.families.base import BaseFamily
from falsilab.services.dimensions import vc_dimension
from falsilab.services.surprise import dense_codense_on


def _descriptors(n):
    half = max(1, n // 2)
    blocks = (half, n - half) if n > half else (n,)
    return [
        describe("threshold", n),
        describe("interval", n),
        describe("evenzero", n),
        describe("cylinder", n, support=tuple(range(0, n, 2))),
        describe("partition", n, blocks=blocks),
        describe("allheads", n),
        describe("full", n),
        describe("coordhalf", n, pivot=0),
    ]


def test_registry_lists_every_kind():
    """Test every family kind is registered under its name."""
    assert set(FamilyRegistry.list_families()) == FAMILY_KINDS
    with pytest.raises(BadDescriptor):
        FamilyRegistry.get_family("spline")


@pytest.mark.parametrize("n", range(1, 13))
def test_vc_matches_closed_form(n):
    """Test computed VC dimensions equal the closed forms on every ground up to 12."""
    for descriptor in _descriptors(n):
        assert vc_dimension(make_family(descriptor)).value == expected_vc(descriptor), descriptor.kind


def test_closed_form_values():
    """Test the closed forms themselves."""
    assert expected_vc(describe("threshold", 9)) == 1
    assert expected_vc(describe("interval", 9)) == 2
    assert expected_vc(describe("evenzero", 9)) == 4
    assert expected_vc(describe("cylinder", 9, support=(2, 5))) == 2
    assert expected_vc(describe("partition", 9, blocks=(2, 5, 2))) == 5
    assert expected_vc(describe("allheads", 9)) == 0
    assert expected_vc(describe("full", 9)) == 9
    assert expected_vc(describe("coordhalf", 9, pivot=4)) == 8
    assert expected_vc(describe("empty", 9)) is None


def test_empty_family_has_no_vc():
    """Test the empty class has size 0 and an undefined VC dimension."""
    empty = make_family(describe("empty", 5))
    assert class_size(empty) == 0
    with pytest.raises(EmptyClass):
        vc_dimension(empty)


@pytest.mark.parametrize("n", [4, 7])
def test_analytic_restriction_matches_materialized(n):
    """Test analytic restriction rules agree with masking the generated traces."""
    rng = np.random.default_rng(n)
    for descriptor in _descriptors(n):
        family = FamilyRegistry.get_family(descriptor.kind)
        traces = materialize(make_family(descriptor))
        for _ in range(10):
            k = int(rng.integers(0, n + 1))
            domain = tuple(int(i) for i in rng.permutation(n)[:k])
            expected = BaseFamily.patterns_from_traces(traces, domain) if traces.size else set()
            analytic = family.restrict(descriptor, domain)
            assert analytic == expected, (descriptor.kind, domain)
            assert family.pattern_count(descriptor, domain) == len(expected)


def test_family_sizes():
    """Test family sizes on a small ground."""
    assert class_size(make_family(describe("threshold", 5))) == 6
    assert class_size(make_family(describe("interval", 5))) == 16
    assert class_size(make_family(describe("evenzero", 5))) == 4
    assert class_size(make_family(describe("partition", 5, blocks=(2, 3)))) == 1 + 3 + 7
    assert class_size(make_family(describe("coordhalf", 5, pivot=1))) == 16


def test_interval_patterns_follow_ground_order():
    """Test interval restrictions are runs in ground order, whatever the domain order."""
    interval = make_family(describe("interval", 4))
    traces = restrict(interval, (2, 0, 1))
    # Elements 0 and 2 without 1 are not an interval
    assert "110" not in traces
    assert "101" in traces
    assert pattern_count(interval, (2, 0, 1)) == 7


@pytest.mark.parametrize(
    "descriptor",
    [
        describe("cylinder", 4, support=(0, 4)),
        describe("cylinder", 4, support=(1, 1)),
        describe("partition", 4, blocks=(2, 1)),
        describe("partition", 4, blocks=(4, 0)),
        describe("partition", 4),
        describe("coordhalf", 4),
        describe("coordhalf", 4, pivot=9),
        describe("spline", 4),
    ],
)
def test_invalid_descriptors(descriptor):
    """Test invalid family parameters are rejected when the family is built."""
    with pytest.raises(BadDescriptor):
        make_family(descriptor)


def test_cylinder_density():
    """Test a cylinder shatters exactly the subsets of its support."""
    support = (1, 4, 6)
    family = make_family(describe("cylinder", 8, support=support))
    for k in range(len(support) + 1):
        for subset in combinations(support, k):
            assert shatters(family, subset)
            assert len(restrict(family, subset)) == 1 << k
    for outside in set(range(8)) - set(support):
        for k in range(len(support)):
            for rest in combinations(support, k):
                assert not shatters(family, (outside,) + rest)


def test_partition_never_shatters_across_blocks():
    """Test no set meeting two blocks is shattered."""
    blocks = [(0, 1, 2), (3,), (4, 5, 6, 7)]
    family = make_family(describe("partition", 8, blocks=(3, 1, 4)))
    block_of = {element: index for index, block in enumerate(blocks) for element in block}
    for k in (2, 3):
        for subset in combinations(range(8), k):
            if len({block_of[element] for element in subset}) > 1:
                assert not shatters(family, subset), subset
    for block in blocks:
        assert shatters(family, block)


def test_coordinate_half_is_dense_codense_off_pivot():
    """Test both the class and its complement realize every pattern on windows avoiding the pivot."""
    family = make_family(describe("coordhalf", 6, pivot=2))
    others = [0, 1, 3, 4, 5]
    for k in range(1, len(others) + 1):
        for window in permutations(others, k):
            assert dense_codense_on(family, SamplePrefix(order=window), k), window
    assert not dense_codense_on(family, SamplePrefix(order=(2,)), 1)

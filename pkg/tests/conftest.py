from pathlib import Path

import numpy as np
import pytest

from falsilab.core.model import HypothesisClass, SamplePrefix
from falsilab.families import describe, make_family
from falsilab.services.class_file import random_class


@pytest.fixture
def evenzero6():
    """Even-zero family on six elements: odd coordinates free."""
    return make_family(describe("evenzero", 6))


@pytest.fixture
def allheads6():
    return make_family(describe("allheads", 6))


@pytest.fixture
def threshold10():
    return make_family(describe("threshold", 10))


@pytest.fixture
def small_explicit():
    """Explicit class on three elements, traces as bit strings (character j is element j)."""
    return HypothesisClass.explicit(3, ["000", "100", "010", "110", "001"])


@pytest.fixture
def identity6():
    return SamplePrefix(order=tuple(range(6)))


@pytest.fixture
def random_corpus():
    """Seeded explicit classes on grounds 1..8."""
    rng = np.random.default_rng(2024)
    return [random_class(seed, int(rng.integers(1, 9)), float(rng.uniform(0.1, 0.9))) for seed in range(40)]


@pytest.fixture
def built_in_families():
    """One descriptor per built-in family, on ground 8."""
    return [
        describe("threshold", 8),
        describe("interval", 8),
        describe("evenzero", 8),
        describe("cylinder", 8, support=(1, 4, 6)),
        describe("partition", 8, blocks=(3, 1, 4)),
        describe("allheads", 8),
        describe("full", 8),
        describe("coordhalf", 8, pivot=2),
    ]


@pytest.fixture
def class_file_dir(tmp_path) -> Path:
    """Temporary directory holding a few class files."""
    (tmp_path / "evenzero6.hyp").write_text("# even-zero on six elements\nground 6\nkind family evenzero\n")
    (tmp_path / "allheads4.hyp").write_text("ground 4\nkind explicit\n1111\n")
    (tmp_path / "explicit3.hyp").write_text("ground 3\nkind explicit\n000\n100\n010\n110\n001\n")
    return tmp_path

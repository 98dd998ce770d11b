"""
Exact VC dimension, Popper dimension, growth function and Sauer-Shelah bounds.

Shattering is downward closed, so shattered sets are searched level by level:
candidate (k+1)-sets are joined from shattered k-sets sharing a k-1 prefix and
kept only if every k-subset is shattered. Levels are generated in
lexicographic order, which fixes witness tie-breaking.
"""

import math
from itertools import combinations, product
from typing import Iterator, List, Optional, Tuple

from config.settings import get_settings
from falsilab.constants import ERROR_MESSAGES
from falsilab.core.model import HypothesisClass, PartialAssignment
from falsilab.core.operations import PatternCounter, conditioned_class
from falsilab.exceptions import BadRange, CapExceeded, EmptyClass
from falsilab.schemas.results import (GrowthTable, PopperProfile, PopperResult, ProfileEntry,
                                      VCResult)
from falsilab.utils.logger import setup_logger
from falsilab.utils.progress import ProgressTracker

logger = setup_logger(__name__)

Subset = Tuple[int, ...]


def _join(level: List[Subset]) -> Iterator[Subset]:
    """Candidate (k+1)-sets whose k-subsets all belong to a sorted level."""
    members = set(level)
    start = 0
    while start < len(level):
        prefix = level[start][:-1]
        stop = start
        while stop < len(level) and level[stop][:-1] == prefix:
            stop += 1
        for i in range(start, stop):
            for j in range(i + 1, stop):
                candidate = level[i] + (level[j][-1],)
                if all(candidate[:t] + candidate[t + 1:] in members for t in range(len(candidate) - 2)):
                    yield candidate
        start = stop


def shattered_levels(hclass: HypothesisClass, cap: Optional[int] = None) -> Iterator[List[Subset]]:
    """
    Yield the lexicographically sorted list of shattered k-sets for k = 0, 1, ...

    Stops at the first empty level; a k-set can only be shattered when |H| >= 2^k.
    """
    counter = PatternCounter(hclass, cap)
    size = counter.size()
    if size == 0:
        return
    level: List[Subset] = [()]
    k = 0
    while level:
        yield level
        k += 1
        if 1 << k > size:
            return
        candidates = [(i,) for i in range(hclass.n)] if k == 1 else _join(level)
        level = [c for c in candidates if counter.count(c) == 1 << k]
        logger.debug(f"Level {k}: {len(level)} shattered sets")


def shattered_sets(hclass: HypothesisClass, k: int, cap: Optional[int] = None) -> List[Subset]:
    """All shattered k-sets in lexicographic order."""
    if not 0 <= k <= hclass.n:
        raise BadRange(ERROR_MESSAGES["range"].format("k", 0, hclass.n, k))
    for level_k, level in enumerate(shattered_levels(hclass, cap)):
        if level_k == k:
            return level
    return []


def vc_dimension(hclass: HypothesisClass, cap: Optional[int] = None) -> VCResult:
    """
    Maximal size of a shattered set, with the lexicographically smallest witness.

    Raises:
        EmptyClass: The VC dimension of the empty class is left undefined
    """
    last: Optional[List[Subset]] = None
    for level in shattered_levels(hclass, cap):
        last = level
    if last is None:
        raise EmptyClass(ERROR_MESSAGES["empty_class"])
    return VCResult(value=len(last[0]), witness=last[0])


def popper_dimension(
    hclass: HypothesisClass, assign: Optional[PartialAssignment] = None, cap: Optional[int] = None
) -> PopperResult:
    """
    Size of the smallest subset of the free coordinates not shattered by H_f.

    The empty conditioned class leaves even the empty set unshattered, giving 0.

    Raises:
        InvalidAssignment: If an assignment index lies outside the ground
    """
    assign = assign or PartialAssignment()
    conditioned = conditioned_class(hclass, assign, cap)
    counter = PatternCounter(conditioned, cap)
    size = counter.size()
    if size == 0:
        return PopperResult.finite(())

    assigned = set(assign.domain)
    free = [i for i in range(hclass.n) if i not in assigned]
    for k in range(1, len(free) + 1):
        if 1 << k > size:
            # Too few traces to shatter any k-set
            return PopperResult.finite(tuple(free[:k]))
        for subset in combinations(free, k):
            if counter.count(subset) < 1 << k:
                return PopperResult.finite(subset)
    return PopperResult.unwitnessed()


def growth_value(hclass: HypothesisClass, m: int, cap: Optional[int] = None) -> Tuple[int, Subset]:
    """tau_H(m) and the lexicographically first subset attaining it."""
    if not 0 <= m <= hclass.n:
        raise BadRange(ERROR_MESSAGES["range"].format("m", 0, hclass.n, m))
    counter = PatternCounter(hclass, cap)
    ceiling = min(1 << m, counter.size())
    best, witness = -1, ()
    for subset in combinations(range(hclass.n), m):
        count = counter.count(subset)
        if count > best:
            best, witness = count, subset
            if best == ceiling:
                break
    return best, witness


def growth_function(hclass: HypothesisClass, max_m: int, cap: Optional[int] = None) -> GrowthTable:
    """
    Growth table tau_H(m) for m = 0..max_m.

    Raises:
        BadRange: If max_m is negative or exceeds the ground size
    """
    if not 0 <= max_m <= hclass.n:
        raise BadRange(ERROR_MESSAGES["range"].format("M", 0, hclass.n, max_m))
    entries, witnesses = {}, {}
    for m in range(max_m + 1):
        entries[m], witnesses[m] = growth_value(hclass, m, cap)
    return GrowthTable(entries=entries, witnesses=witnesses)


def sauer_bound(m: int, d: int) -> int:
    """Sum of C(m, i) for i = 0..d."""
    if m < 0 or d < 0:
        raise BadRange(ERROR_MESSAGES["range"].format("m and d", 0, "infinity", (m, d)))
    return sum(math.comb(m, i) for i in range(min(d, m) + 1))


def analytic_bound(m: int, d: int) -> Optional[float]:
    """(e*m/d)^d, defined for d >= 1 and m > d + 1; advisory only."""
    if d < 1 or m <= d + 1:
        return None
    return (math.e * m / d) ** d


def popper_profile(
    hclass: HypothesisClass, depth: int, cap: Optional[int] = None, budget: Optional[int] = None
) -> PopperProfile:
    """
    Popper dimension of every partial assignment with at most `depth` entries.

    Raises:
        BadRange: If depth exceeds the ground size
        CapExceeded: If the number of assignments exceeds the profile budget
    """
    n = hclass.n
    if not 0 <= depth <= n:
        raise BadRange(ERROR_MESSAGES["range"].format("depth", 0, n, depth))
    budget = get_settings().profile_budget if budget is None else budget
    total = sum(math.comb(n, k) << k for k in range(depth + 1))
    if total > budget:
        raise CapExceeded(ERROR_MESSAGES["profile_budget"].format(depth, total, budget))

    entries = []
    progress = ProgressTracker(desc="Popper profile", total=total)
    try:
        for k in range(depth + 1):
            for domain in combinations(range(n), k):
                for bits in product((0, 1), repeat=k):
                    assign = PartialAssignment(entries=tuple(zip(domain, bits)))
                    entries.append(ProfileEntry(assignment=assign, result=popper_dimension(hclass, assign, cap)))
                    progress.update(1)
    finally:
        progress.close()
    return PopperProfile(depth=depth, entries=entries)

"""
Adversarial samples, falsifying selectors and per-step surprise traces.
"""

from itertools import product
from typing import List, Optional

import numpy as np

from falsilab.constants import ERROR_MESSAGES
from falsilab.core.model import HypothesisClass, PartialAssignment, SamplePrefix
from falsilab.core.operations import complete_sample, conditioned_class, materialize
from falsilab.exceptions import BadPrefix, BadRange, NoCrucialExperiment, NotShatterable
from falsilab.schemas.results import SelectorPlan, SelectorStage, SurpriseReport
from falsilab.services.dimensions import popper_dimension, shattered_levels
from falsilab.services.surprise import surprise_report
from falsilab.utils.logger import setup_logger

logger = setup_logger(__name__)


def adversarial_sample(hclass: HypothesisClass, m: int) -> SamplePrefix:
    """
    Full sample enumerating a shattered m-set first, then the rest in ascending order.

    Surprise is 0 for every prefix length k <= m along the result.

    Raises:
        NotShatterable: If no m-set is shattered
    """
    if not 0 <= m <= hclass.n:
        raise BadRange(ERROR_MESSAGES["range"].format("m", 0, hclass.n, m))
    depth = -1
    for k, level in enumerate(shattered_levels(hclass)):
        depth = k
        if k == m:
            return complete_sample(SamplePrefix(order=level[0]), hclass.ground)
    raise NotShatterable(ERROR_MESSAGES["not_shatterable"].format(m, depth if depth >= 0 else "undefined"))


def _adversarial_outcome(
    hclass: HypothesisClass, working: PartialAssignment, witness: tuple
) -> PartialAssignment:
    """Extend the working assignment by the witness outcome keeping H_f largest (lexicographic ties)."""
    traces = materialize(conditioned_class(hclass, working))
    best_size, best_bits = -1, None
    for bits in product((0, 1), repeat=len(witness)):
        domain_mask = sum(1 << element for element in witness)
        value_mask = sum(bit << element for element, bit in zip(witness, bits))
        size = int(np.count_nonzero((traces & np.uint64(domain_mask)) == np.uint64(value_mask)))
        if size > best_size:
            best_size, best_bits = size, bits
    return working.extend(dict(zip(witness, best_bits)))


def build_selector(
    hclass: HypothesisClass, seed: Optional[PartialAssignment] = None, max_stages: int = 1
) -> SelectorPlan:
    """
    Plan a selector whose every stage performs a crucial experiment.

    Each stage conditions on the working assignment, takes a minimal unshattered
    witness among the free coordinates, then assumes the outcome on that witness
    that leaves the most traces. Re-plan with an updated seed once real outcomes
    are known.

    Raises:
        NoCrucialExperiment: If the seeded class already shatters every free subset
    """
    seed = (seed or PartialAssignment()).check(hclass.ground)
    if max_stages < 1:
        raise BadRange(ERROR_MESSAGES["range"].format("max_stages", 1, "infinity", max_stages))

    working = seed
    stages: List[SelectorStage] = []
    order: List[int] = []
    while len(stages) < max_stages:
        result = popper_dimension(hclass, working)
        if not result.is_finite:
            if not stages:
                free = [i for i in range(hclass.n) if i not in working.domain]
                raise NoCrucialExperiment(ERROR_MESSAGES["no_crucial_experiment"].format(free))
            break
        witness = result.witness
        if not witness:
            # H_f is already empty: the refutation happened before any new observation
            stages.append(SelectorStage(witness=(), popper_value=0, assumed_outcome=""))
            break
        working = _adversarial_outcome(hclass, working, witness)
        outcome = [working.as_dict()[element] for element in witness]
        stages.append(
            SelectorStage(
                witness=witness,
                popper_value=result.value,
                assumed_outcome="".join(map(str, outcome)),
            )
        )
        order.extend(witness)
        logger.debug(f"Stage {len(stages)}: witness {witness}, delta_P={result.value}")
    return SelectorPlan(
        seed=seed,
        stages=stages,
        flattened_order=SamplePrefix(order=tuple(order)),
        final_assignment=working,
    )


def surprise_trace(hclass: HypothesisClass, prefix: SamplePrefix, up_to: int) -> List[SurpriseReport]:
    """
    Surprise reports for every prefix length k = 0..up_to.

    Raises:
        BadPrefix: If up_to exceeds the prefix length
    """
    if not 0 <= up_to <= len(prefix):
        raise BadPrefix(ERROR_MESSAGES["prefix_length"].format(up_to, len(prefix)))
    return [surprise_report(hclass, prefix, k) for k in range(up_to + 1)]

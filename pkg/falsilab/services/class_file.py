"""
Class file and flag parsing.

A class file is line oriented; `#` starts a comment:

    ground 6
    kind explicit
    010101
    111111

or

    ground 6
    kind family cylinder support=0,2
"""

from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

import numpy as np

from falsilab.constants import FAMILY_KINDS
from falsilab.core.model import GroundSet, HypothesisClass, PartialAssignment, SamplePrefix
from falsilab.core.operations import materialize
from falsilab.exceptions import FalsilabError, ParseError
from falsilab.families import describe, make_family
from falsilab.utils.logger import setup_logger

logger = setup_logger(__name__)

FAMILY_KEYS = {"support", "blocks", "pivot"}


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0].rstrip()


def _int_list(text: str, what: str, line: Optional[int] = None) -> Tuple[int, ...]:
    if not text.strip():
        return ()
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ParseError(f"{what} must be a comma-separated list of integers, got '{text}'", line)


class ClassFileParser:
    """Reads and writes hypothesis classes in the class file format."""

    @classmethod
    def load_file(cls, file_path: Union[str, Path]) -> HypothesisClass:
        """
        Load a class file.

        Raises:
            ParseError: If the file is missing or malformed
        """
        file_path = Path(file_path)
        if not file_path.exists():
            raise ParseError(f"Class file not found: {file_path}")
        return cls.parse(file_path.read_text())

    @classmethod
    def parse(cls, text: str) -> HypothesisClass:
        """
        Parse class file text.

        Raises:
            ParseError: With the line (and column for bit strings) of the first problem
        """
        lines = [(number, _strip_comment(raw)) for number, raw in enumerate(text.splitlines(), start=1)]
        lines = [(number, line) for number, line in lines if line.strip()]
        if not lines:
            raise ParseError("Class file is empty; expected 'ground <n>'")

        ground = cls._parse_ground(*lines[0])
        if len(lines) < 2:
            raise ParseError("Missing 'kind' line after 'ground'", lines[0][0] + 1)
        number, line = lines[1]
        words = line.split()
        if words[0] != "kind" or len(words) < 2:
            raise ParseError("Expected 'kind explicit' or 'kind family <name>'", number, 1)

        if words[1] == "explicit":
            if len(words) > 2:
                raise ParseError("'kind explicit' takes no parameters", number, len("kind explicit ") + 1)
            return cls._parse_explicit(ground, lines[2:])
        if words[1] == "family":
            if len(lines) > 2:
                raise ParseError("Family classes take no trace lines", lines[2][0], 1)
            return cls._parse_family(ground, words[2:], number)
        raise ParseError(f"Unknown kind '{words[1]}'; expected 'explicit' or 'family'", number, len("kind ") + 1)

    @staticmethod
    def _parse_ground(number: int, line: str) -> GroundSet:
        words = line.split()
        if len(words) != 2 or words[0] != "ground":
            raise ParseError("Expected 'ground <n>'", number, 1)
        try:
            size = int(words[1])
        except ValueError:
            raise ParseError(f"Ground size must be an integer, got '{words[1]}'", number, line.index(words[1]) + 1)
        try:
            return GroundSet(size=size)
        except FalsilabError as e:
            raise ParseError(str(e), number, line.index(words[1]) + 1)

    @staticmethod
    def _parse_explicit(ground: GroundSet, lines: List[Tuple[int, str]]) -> HypothesisClass:
        traces = []
        seen: Dict[str, int] = {}
        for number, line in lines:
            bits = line.strip()
            offset = line.index(bits)
            for column, char in enumerate(bits, start=offset + 1):
                if char not in "01":
                    raise ParseError(f"Trace characters must be 0 or 1, got '{char}'", number, column)
            if len(bits) != ground.size:
                raise ParseError(
                    f"Trace '{bits}' must have width {ground.size}", number, offset + min(len(bits), ground.size) + 1
                )
            if bits in seen:
                raise ParseError(f"Trace '{bits}' repeats line {seen[bits]}", number, offset + 1)
            seen[bits] = number
            traces.append(bits)
        return HypothesisClass.explicit(ground, traces)

    @staticmethod
    def _parse_family(ground: GroundSet, words: List[str], number: int) -> HypothesisClass:
        if not words:
            raise ParseError("Missing family name after 'kind family'", number)
        name, options = words[0], words[1:]
        if name not in FAMILY_KINDS:
            raise ParseError(f"Unknown family '{name}'. Must be one of: {sorted(FAMILY_KINDS)}", number)
        params: Dict[str, str] = {}
        for option in options:
            key, sep, value = option.partition("=")
            if not sep or key not in FAMILY_KEYS:
                raise ParseError(f"Expected key=value with key in {sorted(FAMILY_KEYS)}, got '{option}'", number)
            params[key] = value
        pivot = None
        if "pivot" in params:
            try:
                pivot = int(params["pivot"])
            except ValueError:
                raise ParseError(f"pivot must be an integer, got '{params['pivot']}'", number)
        try:
            return make_family(
                describe(
                    name,
                    ground.size,
                    support=_int_list(params.get("support", ""), "support", number),
                    blocks=_int_list(params.get("blocks", ""), "blocks", number),
                    pivot=pivot,
                )
            )
        except ParseError:
            raise
        except FalsilabError as e:
            raise ParseError(str(e), number)

    @staticmethod
    def dump(hclass: HypothesisClass) -> str:
        """Render a class in class file format; explicit traces in ascending order."""
        lines = [f"ground {hclass.n}"]
        if hclass.is_explicit:
            lines.append("kind explicit")
            lines.extend(hclass.strings())
        else:
            family = hclass.family
            words = ["kind", "family", family.kind]
            if family.support:
                words.append("support=" + ",".join(map(str, family.support)))
            if family.blocks:
                words.append("blocks=" + ",".join(map(str, family.blocks)))
            if family.pivot is not None:
                words.append(f"pivot={family.pivot}")
            lines.append(" ".join(words))
        return "\n".join(lines) + "\n"


def parse_sample(text: str) -> SamplePrefix:
    """'i,j,k' to a sample prefix."""
    try:
        return SamplePrefix(order=_int_list(text, "--sample"))
    except ParseError:
        raise
    except FalsilabError as e:
        raise ParseError(f"--sample: {e}")


def parse_subset(text: str) -> Tuple[int, ...]:
    return _int_list(text, "--subset")


def parse_assign(text: str) -> PartialAssignment:
    """'i=b,j=b' to a partial assignment."""
    mapping: Dict[int, int] = {}
    for part in filter(None, (p.strip() for p in text.split(","))):
        key, sep, value = part.partition("=")
        try:
            if not sep:
                raise ValueError
            index, bit = int(key), int(value)
        except ValueError:
            raise ParseError(f"--assign entries must look like i=b, got '{part}'")
        if index in mapping:
            raise ParseError(f"--assign index {index} appears twice")
        mapping[index] = bit
    try:
        return PartialAssignment.of(mapping)
    except FalsilabError as e:
        raise ParseError(f"--assign: {e}")


def parse_rational(text: str) -> Fraction:
    """'p/q' or a decimal literal to an exact fraction."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"Expected a rational number p/q, got '{text}'")


def parse_probabilities(text: str) -> Tuple[float, ...]:
    try:
        return tuple(float(Fraction(part)) for part in text.split(",") if part.strip())
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"Expected comma-separated probabilities, got '{text}'")


def random_class(seed: int, ground: int, density: float = 0.5) -> HypothesisClass:
    """
    Explicit class keeping each of the 2^ground traces independently with probability density.

    Raises:
        CapExceeded: If the ground is above the materialization cap
    """
    if not 0.0 <= density <= 1.0:
        raise ParseError(f"--density must be a probability, got {density}")
    candidates = materialize(make_family(describe("full", ground)))
    rng = np.random.default_rng(seed)
    kept = candidates[rng.random(candidates.size) < density]
    logger.debug(f"Random class seed={seed} ground={ground}: {kept.size} traces")
    return HypothesisClass.explicit(ground, (int(t) for t in kept))

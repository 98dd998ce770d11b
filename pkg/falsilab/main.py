"""
Command-line front end.

Every command is a thin wrapper over one library operation. Results go to
stdout as key=value lines; logs go to stderr.
"""

import argparse
import sys
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from config.settings import APP_DESCRIPTION, APP_TITLE, APP_VERSION, get_settings
from falsilab.constants import EXIT_DOMAIN_ERROR, EXIT_OK, EXIT_PARSE_ERROR
from falsilab.core.model import HypothesisClass, SamplePrefix
from falsilab.core.operations import class_size, complete_sample, restrict
from falsilab.exceptions import EmptyClass, FalsilabError, ParseError, ValidationError
from falsilab.families import describe, expected_vc, make_family
from falsilab.schemas.statistics import CoinData, FiniteParameterSet
from falsilab.services import class_file, dimensions, sample_lab, stat_demos, surprise
from falsilab.services.class_file import ClassFileParser
from falsilab.services.report import (RunReport, decimal, inputs_digest, render_rational, render_subset,
                                      write_trace_csv)
from falsilab.utils.logger import setup_logger
from falsilab.utils.progress import MetricsCollector, ProgressTracker

logger = setup_logger(__name__)

Results = Tuple[Dict[str, str], Dict[str, List[int]]]


def _load_class(args: argparse.Namespace) -> HypothesisClass:
    if args.class_file:
        return ClassFileParser.load_file(args.class_file)
    if args.seed is not None and args.ground is not None:
        return class_file.random_class(args.seed, args.ground, args.density)
    raise ParseError("A class is required: pass --class FILE or --seed K --ground N")


def _sample(args: argparse.Namespace, hclass: HypothesisClass) -> SamplePrefix:
    """The --sample prefix completed in ascending order."""
    prefix = class_file.parse_sample(args.sample or "")
    return complete_sample(prefix, hclass.ground)


OUTPUT_FLAGS = {"--csv", "--report"}


def _echo(argv: Sequence[str]) -> List[str]:
    """The command line without output paths, so reruns into other files echo the same."""
    echoed: List[str] = []
    skip = False
    for arg in argv:
        if skip:
            skip = False
        elif arg in OUTPUT_FLAGS:
            skip = True
        elif arg.split("=", 1)[0] not in OUTPUT_FLAGS:
            echoed.append(arg)
    return echoed


def _required(args: argparse.Namespace, name: str):
    value = getattr(args, name)
    if value is None:
        raise ParseError(f"--{name.replace('_', '-')} is required for '{args.command}'")
    return value


def cmd_vc(args, hclass) -> Results:
    result = dimensions.vc_dimension(hclass)
    return {"vc": f"{result.value} witness={render_subset(result.witness)}"}, {"vc": list(result.witness)}


def cmd_popper(args, hclass) -> Results:
    assign = class_file.parse_assign(args.assign or "")
    result = dimensions.popper_dimension(hclass, assign)
    return {"popper": str(result)}, {"popper": list(result.witness or ())}


def cmd_growth(args, hclass) -> Results:
    max_m = hclass.n if args.m is None else args.m
    table = dimensions.growth_function(hclass, max_m)
    try:
        vc: Optional[int] = dimensions.vc_dimension(hclass).value
    except EmptyClass:
        vc = None
    results, witnesses = {}, {}
    for m in range(max_m + 1):
        line = f"{table[m]} witness={render_subset(table.witnesses[m])}"
        if vc is not None:
            line += f" sauer={dimensions.sauer_bound(m, vc)}"
        results[f"tau({m})"] = line
        witnesses[f"tau({m})"] = list(table.witnesses[m])
    return results, witnesses


def cmd_sauer(args, hclass) -> Results:
    m, d = _required(args, "m"), _required(args, "d")
    results = {"bound": str(dimensions.sauer_bound(m, d))}
    if args.analytic:
        value = dimensions.analytic_bound(m, d)
        results["analytic"] = "undefined" if value is None else decimal(value)
    return results, {}


def _trace_csv(args, hclass, prefix, up_to) -> None:
    if args.csv:
        write_trace_csv(sample_lab.surprise_trace(hclass, prefix, up_to), args.csv, args.exact)


def cmd_surprise(args, hclass) -> Results:
    prefix, n = _sample(args, hclass), _required(args, "n")
    report = surprise.surprise_report(hclass, prefix, n)
    results = {
        "S": render_rational(report.surprise),
        "mu": render_rational(report.mu),
        "S_co": render_rational(report.co_surprise),
    }
    refuting = surprise.crucial_experiment(hclass, prefix, n)
    results["crucial"] = "none" if refuting is None else refuting
    _trace_csv(args, hclass, prefix, n)
    return results, {"window": list(prefix.window(n))}


def cmd_severe(args, hclass) -> Results:
    prefix, n = _sample(args, hclass), _required(args, "n")
    epsilon = class_file.parse_rational(_required(args, "epsilon"))
    report = surprise.surprise_report(hclass, prefix, n, epsilon, _required(args, "observed"))
    verdict = report.severe
    results = {
        "severe": "pass" if verdict.passed else "fail",
        "compatible": str(verdict.observed_compatible).lower(),
        "above_threshold": str(verdict.exceeds_threshold).lower(),
        "dominates_complement": str(verdict.dominates_complement).lower(),
        "S": render_rational(verdict.surprise),
        "S_co": render_rational(verdict.complement_surprise),
    }
    return results, {"window": list(prefix.window(n))}


def cmd_cosurprise(args, hclass) -> Results:
    prefix, n = _sample(args, hclass), _required(args, "n")
    if args.given and args.pattern:
        raise ParseError("--pattern and --given are mutually exclusive for 'cosurprise'")
    if args.given:
        condition = ClassFileParser.load_file(args.given)
        value = surprise.conditional_co_surprise(hclass, condition, prefix, n)
        return {"S_co_given": render_rational(value)}, {}
    if args.pattern:
        value = surprise.cylinder_co_surprise(hclass.ground, args.pattern, prefix, n)
        return {"S_co_cylinder": render_rational(value)}, {}
    return {"S_co": render_rational(surprise.co_surprise(hclass, prefix, n))}, {}


def cmd_ratio(args, hclass) -> Results:
    prefix, n = _sample(args, hclass), _required(args, "n")
    value = surprise.surprise_ratio(hclass, prefix, n)
    return {"ratio": "undefined (S=0)" if value is None else render_rational(value)}, {}


def cmd_bound(args, hclass) -> Results:
    epsilon = class_file.parse_rational(_required(args, "epsilon"))
    m = surprise.epsilon_sample_bound(hclass, epsilon)
    if m is None:
        return {"m": "none"}, {}
    return {"m": str(m), "worst_mu": render_rational(surprise.worst_case_semi_measure(hclass, m))}, {}


def cmd_adversary(args, hclass) -> Results:
    m = _required(args, "m")
    sample = sample_lab.adversarial_sample(hclass, m)
    _trace_csv(args, hclass, sample, len(sample))
    return {"sample": ",".join(map(str, sample.order))}, {"sample": list(sample.order)}


def cmd_selector(args, hclass) -> Results:
    seed = class_file.parse_assign(args.assign or "")
    plan = sample_lab.build_selector(hclass, seed, args.stages)
    results, witnesses = {}, {}
    for number, stage in enumerate(plan.stages, start=1):
        results[f"stage{number}"] = (
            f"witness={render_subset(stage.witness)} popper={stage.popper_value} assume={stage.assumed_outcome or '-'}"
        )
        witnesses[f"stage{number}"] = list(stage.witness)
    results["order"] = ",".join(map(str, plan.flattened_order.order))
    results["final"] = str(plan.final_assignment)
    return results, witnesses


def cmd_trace(args, hclass) -> Results:
    prefix = _sample(args, hclass)
    if args.n is not None:
        up_to = args.n
    else:
        up_to = len(class_file.parse_sample(args.sample)) if args.sample else hclass.n
    reports = sample_lab.surprise_trace(hclass, prefix, up_to)
    if args.csv:
        write_trace_csv(reports, args.csv, args.exact)
    results = {
        f"k{report.n}": f"mu={report.mu} S={report.surprise} S_co={report.co_surprise} "
        f"crucial={str(report.crucial_experiment).lower()}"
        for report in reports
    }
    return results, {}


def cmd_family(args, hclass) -> Results:
    descriptor = describe(
        _required(args, "kind"),
        _required(args, "ground"),
        support=class_file.parse_subset(args.support or ""),
        blocks=class_file.parse_subset(args.blocks or ""),
        pivot=args.pivot,
    )
    family = make_family(descriptor)
    expected = expected_vc(descriptor)
    results = {"size": str(class_size(family)), "expected_vc": "undefined" if expected is None else str(expected)}
    witnesses = {}
    if expected is not None:
        result = dimensions.vc_dimension(family)
        results["vc"] = f"{result.value} witness={render_subset(result.witness)}"
        witnesses["vc"] = list(result.witness)
    results["popper"] = str(dimensions.popper_dimension(family))
    return results, witnesses


def cmd_mle(args, hclass) -> Results:
    data = CoinData(flips=args.flips or "")
    if args.finite is not None:
        params = FiniteParameterSet(points=class_file.parse_probabilities(args.finite))
    else:
        params = stat_demos.interval_parameters(
            lo=args.lo, hi=args.hi, excluded=class_file.parse_probabilities(args.exclude or ""), step=args.step
        )
    result = stat_demos.mle_search(params, data)
    results = {
        "supremum": decimal(result.supremum) if args.finite is not None else f"{result.supremum:.10f}",
        "attained": str(result.attained).lower(),
        "argmax": "none" if result.argmax is None else ",".join(decimal(theta) for theta in result.argmax),
    }
    if result.analytic_maximizer is not None:
        results["analytic_maximizer"] = decimal(result.analytic_maximizer)
        results["analytic_excluded"] = str(result.analytic_excluded).lower()
    return results, {}


def cmd_tails(args, hclass) -> Results:
    n = _required(args, "n")
    if args.p is not None:
        return {"probability": decimal(stat_demos.tails_probability(float(class_file.parse_rational(args.p)), n))}, {}
    epsilon = float(class_file.parse_rational(_required(args, "epsilon")))
    return {"threshold": decimal(stat_demos.tails_threshold(epsilon, n))}, {}


def cmd_profile(args, hclass) -> Results:
    profile = dimensions.popper_profile(hclass, _required(args, "depth"))
    results = {
        "assignments": str(len(profile.entries)),
        "max_finite": "none" if profile.max_finite is None else str(profile.max_finite),
        "unwitnessed": str(len(profile.unwitnessed)),
        "hereditarily_finite": str(profile.hereditarily_finite).lower(),
    }
    return results, {}


def cmd_restrict(args, hclass) -> Results:
    subset = class_file.parse_subset(_required(args, "subset"))
    traces = restrict(hclass, subset)
    return {"patterns": str(len(traces)), "traces": " ".join(traces.strings()) or "-"}, {"subset": list(subset)}


def cmd_horizon(args, hclass) -> Results:
    epsilon = class_file.parse_rational(_required(args, "epsilon"))
    horizon = surprise.severe_horizon(hclass, epsilon)
    return {"horizon": "none" if horizon is None else str(horizon)}, {}


def _check_one(hclass: HypothesisClass, rng: np.random.Generator) -> List[str]:
    """Property violations for one class: Sauer-Shelah, delta_P <= VC + 1, subadditivity."""
    violations = []
    if class_size(hclass) == 0:
        return violations
    vc = dimensions.vc_dimension(hclass).value
    for m in range(hclass.n + 1):
        if dimensions.growth_value(hclass, m)[0] > dimensions.sauer_bound(m, vc):
            violations.append(f"sauer m={m}")
    popper = dimensions.popper_dimension(hclass)
    if popper.is_finite and popper.value > vc + 1:
        violations.append(f"popper {popper.value} > vc+1 {vc + 1}")
    prefix = SamplePrefix(order=tuple(int(i) for i in rng.permutation(hclass.n)))
    n = int(rng.integers(0, hclass.n + 1))
    if surprise.surprise(hclass, prefix, n) + surprise.co_surprise(hclass, prefix, n) > 1:
        violations.append(f"subadditivity n={n}")
    return violations


def cmd_check(args, hclass) -> Results:
    seed = 0 if args.seed is None else args.seed
    ground = 6 if args.ground is None else args.ground
    rng = np.random.default_rng(seed)
    violations: List[str] = []
    progress = ProgressTracker(desc="Property check", total=args.count)
    try:
        for index in range(args.count):
            candidate = class_file.random_class(seed + index, ground, args.density)
            violations.extend(f"class {index}: {v}" for v in _check_one(candidate, rng))
            progress.update(1)
    finally:
        progress.close()
    for violation in violations:
        logger.error(f"Violation: {violation}")
    return {"checked": str(args.count), "violations": str(len(violations))}, {}


def cmd_dump(args, hclass) -> Results:
    sys.stdout.write(ClassFileParser.dump(hclass))
    return {}, {}


# (handler, needs a class)
COMMANDS: Dict[str, Tuple[Callable, bool]] = {
    "vc": (cmd_vc, True),
    "popper": (cmd_popper, True),
    "growth": (cmd_growth, True),
    "sauer": (cmd_sauer, False),
    "surprise": (cmd_surprise, True),
    "severe": (cmd_severe, True),
    "cosurprise": (cmd_cosurprise, True),
    "ratio": (cmd_ratio, True),
    "bound": (cmd_bound, True),
    "adversary": (cmd_adversary, True),
    "selector": (cmd_selector, True),
    "trace": (cmd_trace, True),
    "family": (cmd_family, False),
    "mle": (cmd_mle, False),
    "tails": (cmd_tails, False),
    "profile": (cmd_profile, True),
    "restrict": (cmd_restrict, True),
    "horizon": (cmd_horizon, True),
    "check": (cmd_check, False),
    "dump": (cmd_dump, True),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--class", dest="class_file", type=str, help="Class file to load.")
    common.add_argument("--seed", type=int, help="Seed for a random explicit class (with --ground).")
    common.add_argument("--ground", type=int, help="Ground size for random classes and families.")
    common.add_argument("--density", type=float, default=0.5, help="Trace density of random classes.")
    common.add_argument("--sample", type=str, help="Sample prefix i,j,k,... (completed in ascending order).")
    common.add_argument("--n", type=int, help="Prefix length.")
    common.add_argument("--epsilon", type=str, help="Level as p/q.")
    common.add_argument("--csv", type=str, help="Write the surprise trace to this CSV file.")
    common.add_argument("--exact", action="store_true", help="Write p/q strings instead of decimals to CSV.")
    common.add_argument("--report", type=str, help="Write a JSON run report to this file.")

    parser = argparse.ArgumentParser(prog=APP_TITLE, description=APP_DESCRIPTION)
    parser.add_argument("--version", action="version", version=f"%(prog)s {APP_VERSION}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        return sub.add_parser(name, parents=[common], help=help_text)

    add("vc", "VC dimension with a lexicographically smallest witness.")
    add("popper", "Popper dimension of the class conditioned on --assign.").add_argument("--assign", type=str)
    add("growth", "Growth function up to --m, with Sauer-Shelah bounds.").add_argument("--m", type=int)
    sauer = add("sauer", "Sauer-Shelah bound sum_{i<=d} C(m, i).")
    sauer.add_argument("--m", type=int)
    sauer.add_argument("--d", type=int)
    sauer.add_argument("--analytic", action="store_true", help="Also print (e*m/d)^d.")
    add("surprise", "Surprise S(H, f, n).")
    add("severe", "Severe-surprise verdict for --observed data.").add_argument("--observed", type=str)
    cosurprise = add("cosurprise", "Co-surprise, cylinder co-surprise or conditional co-surprise.")
    cosurprise.add_argument("--pattern", type=str, help="Cylinder pattern on the window.")
    cosurprise.add_argument("--given", type=str, help="Class file of the conditioning class.")
    add("ratio", "S(H^c)/S(H).")
    add("bound", "Least sample length with worst-case mu <= epsilon.")
    add("adversary", "Sample enumerating a shattered --m set first.").add_argument("--m", type=int)
    selector = add("selector", "Plan a falsifying selector.")
    selector.add_argument("--assign", type=str)
    selector.add_argument("--stages", type=int, default=1)
    add("trace", "Surprise for every prefix length up to --n.")
    family = add("family", "Build a named family and compare its VC dimension to the closed form.")
    family.add_argument("--kind", type=str)
    family.add_argument("--support", type=str)
    family.add_argument("--blocks", type=str)
    family.add_argument("--pivot", type=int)
    mle = add("mle", "Bernoulli maximum likelihood over a finite set or an interval with exclusions.")
    mle.add_argument("--flips", type=str, help="Observed flips, e.g. HT.")
    mle.add_argument("--finite", type=str, help="Comma-separated parameter values.")
    mle.add_argument("--lo", type=float, default=0.0)
    mle.add_argument("--hi", type=float, default=1.0)
    mle.add_argument("--exclude", type=str, help="Comma-separated excluded points.")
    mle.add_argument("--step", type=float)
    add("tails", "Heads-probability threshold, or P(at least one tails) with --p.").add_argument("--p", type=str)
    add("profile", "Popper dimension of every partial assignment up to --depth.").add_argument("--depth", type=int)
    add("restrict", "Traces of the class restricted to --subset.").add_argument("--subset", type=str)
    add("horizon", "Least n from which every sample makes H severely surprising.")
    add("check", "Seeded property run over random classes.").add_argument("--count", type=int, default=50)
    add("dump", "Print the class in class file format.")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run one command; returns the exit code.

    Parse errors and invalid flag values exit 2, domain errors exit 1.
    """
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    metrics = MetricsCollector()
    handler, needs_class = COMMANDS[args.command]
    logger.debug(f"Running {args.command} (cap={get_settings().cap})")

    try:
        hclass = _load_class(args) if needs_class else None
        results, witnesses = handler(args, hclass)
    except ParseError as e:
        logger.error(f"Parse error: {e}")
        return EXIT_PARSE_ERROR
    except ValidationError as e:
        logger.error(f"Invalid input {type(e).__name__}: {e}")
        return EXIT_PARSE_ERROR
    except FalsilabError as e:
        logger.error(f"{type(e).__name__}: {e}")
        return EXIT_DOMAIN_ERROR
    except OSError as e:
        logger.error(f"I/O error: {e}")
        return EXIT_DOMAIN_ERROR

    metrics.snapshot_memory("end")
    report = RunReport(
        command=args.command,
        argv=_echo(argv),
        inputs_digest=inputs_digest(
            {k: v for k, v in vars(args).items() if k not in {"csv", "report"}},
            ClassFileParser.dump(hclass) if hclass is not None else "",
        ),
        results=results,
        witnesses=witnesses,
        timing=metrics.get_summary(),
    )
    for line in report.lines():
        print(line)
    if args.report:
        report.write(args.report)
    if results.get("violations", "0") != "0":
        return EXIT_DOMAIN_ERROR
    return EXIT_OK

"""The command line front end.

Subcommands:
    build: Prints the JSON description of an instance.
    sample: Prints a function of an instance as x,value CSV.
    verify: Runs the verification suite on an instance or the reference instances.
    figures: Lists the reference instances with their quoted energies.
    spectrum: Prints the numerical spectrum of an instance.

Exit codes follow `EXIT_CODE`: 0 on success, 1 when a verification check
fails and 2 on invalid arguments, parameters or specification files.

"""

import argparse
import json
import logging
import sys
from typing import Dict, List, Optional, Sequence

import numpy as np

from . import __version__
from .catalog import build_instance, figure_instances, instance_to_json, spec_to_json
from .config import config
from .constants import EXIT_CODE, FAMILY, SAMPLE_TARGET
from .errors import InstanceSpecError, PdmqesError, TruncationInsufficient
from .oracle import arbitrate_kc, eigenvectors_on_x, solve, transform, verify_figures, verify_instance
from .utils.numbers import format_number

logger = logging.getLogger(__name__)


# ================================================
# Helpers
# ================================================


def _dump(document) -> str:
    return json.dumps(document, sort_keys=True, indent=2, ensure_ascii=False)


def _digits() -> int:
    return config["significant_digits"]


def _instance_from_args(args: argparse.Namespace):
    """Builds the instance named by the spec file or the instance flags."""
    flags = {
        "family": args.family,
        "m": args.m,
        "alpha": args.alpha,
        "B_top": args.Btop,
        "L": args.L,
        "B2minus": args.B2minus,
    }
    given = {key: value for key, value in flags.items() if value is not None}
    if args.spec_file is not None:
        if given:
            raise InstanceSpecError("--spec-file cannot be combined with instance flags")
        try:
            with open(args.spec_file, encoding="utf-8") as handle:
                given = json.load(handle)
        except (OSError, json.JSONDecodeError) as error:
            raise InstanceSpecError(f"cannot read {args.spec_file}: {error}") from error
    return build_instance(given)


def _add_instance_arguments(parser: argparse.ArgumentParser):
    group = parser.add_argument_group("instance")
    group.add_argument("--family", choices=FAMILY.ALL, help="the extension family")
    group.add_argument("--m", type=int, help="the extension index (at least 1)")
    group.add_argument("--alpha", help="the deformation parameter, e.g. 1 or 3/4")
    group.add_argument("--Btop", "--B-top", dest="Btop", help="the top potential coefficient")
    group.add_argument("--L", help="the angular parameter (rho and kc)")
    group.add_argument("--B2minus", "--B", dest="B2minus", help="the coefficient B^2 of exp(-2x) (morse)")
    group.add_argument("--spec-file", help="a JSON instance specification")


def _gauged(values_log: np.ndarray, signs: np.ndarray, reference: float) -> np.ndarray:
    return signs * np.exp(values_log - reference)


def sample_values(instance, what: str, x: np.ndarray) -> np.ndarray:
    """The sampled function of an instance in the documented gauge.

    The ground state is scaled to 1 at the reference point of the domain (0 on the
    real line, 1 on the half line). The first excited state vanishes there and is
    scaled to a largest magnitude of 1 on the sampled grid instead.

    Examples:
        >>> sample_values(build_ho(1, 1, 1), "psi0", np.array([0.0]))
        array([1.])

    """
    if what == SAMPLE_TARGET.POTENTIAL:
        return instance.V.evaluate(x)
    if what == SAMPLE_TARGET.WPLUS:
        return instance.Wplus.evaluate(x)
    if what == SAMPLE_TARGET.PSI0:
        psi = instance.psi0
        reference = float(psi.log_abs(np.array([instance.base.reference_point]))[0])
        return _gauged(psi.log_abs(x), psi.sign(x), reference)
    psi = instance.psi1
    log_abs = psi.log_abs(x)
    finite = log_abs[np.isfinite(log_abs)]
    reference = float(np.max(finite)) if finite.size else 0.0
    return _gauged(log_abs, psi.sign(x), reference)


def _write_csv(stream, header: Sequence[str], columns: List[np.ndarray]):
    digits = _digits()
    stream.write(",".join(header) + "\n")
    for row in zip(*columns):
        stream.write(",".join(format_number(float(value), digits) for value in row) + "\n")


# ================================================
# Subcommands
# ================================================


def cmd_build(args: argparse.Namespace) -> int:
    instance = _instance_from_args(args)
    sys.stdout.write(_dump(instance_to_json(instance, _digits())) + "\n")
    return EXIT_CODE.SUCCESS


def cmd_sample(args: argparse.Namespace) -> int:
    instance = _instance_from_args(args)
    x_min, x_max = args.range
    if args.points < 2:
        raise InstanceSpecError("--points must be at least 2")
    if not (x_min < x_max and instance.base.contains(x_min) and instance.base.contains(x_max)):
        raise InstanceSpecError(f"range [{x_min}, {x_max}] must lie inside the domain {instance.base.x_domain}")
    x = np.linspace(x_min, x_max, args.points)
    _write_csv(sys.stdout, ("x", "value"), [x, sample_values(instance, args.what, x)])
    return EXIT_CODE.SUCCESS


def _report_lines(report) -> List[str]:
    instance = report.instance
    status = "PASS" if report.passed else "FAIL"
    lines = [f"{status} {instance.family} m={instance.m} E0={instance.E0} E1={instance.E1}"]
    for name, ok in report.checks.items():
        lines.append(f"  {'ok ' if ok else 'BAD'} {name}")
    errors = ", ".join(format_number(value, 3) for value in report.energy_errors)
    overlaps = ", ".join(format_number(value, 10) for value in report.overlaps)
    lines.append(f"  energy errors: {errors}; overlaps: {overlaps}")
    return lines


def cmd_verify(args: argparse.Namespace) -> int:
    if args.all_figures:
        reports = verify_figures(grid_points=args.grid_points)
    else:
        reports = [verify_instance(_instance_from_args(args), grid_points=args.grid_points)]

    lines = [line for report in reports for line in _report_lines(report)]
    document: Dict[str, object] = {"reports": [report.to_json(_digits()) for report in reports]}
    if args.report_e0:
        for report in reports:
            if report.instance.family != FAMILY.KC:
                continue
            arbitration = arbitrate_kc(report.instance, spectrum=report.spectrum)
            lines.append(
                f"oracle E0 = {format_number(arbitration.numeric, _digits())}; candidates: "
                + ", ".join(f"{name} {value}" for name, value in arbitration.candidates.items())
                + f"; match: {arbitration.verdict}"
            )
            document.setdefault("arbitration", []).append(
                {
                    "numeric": format_number(arbitration.numeric, _digits()),
                    "candidates": {name: format_number(value) for name, value in arbitration.candidates.items()},
                    "matches": arbitration.matches,
                }
            )
    sys.stdout.write("\n".join(lines) + "\n")
    if args.json is not None:
        with open(args.json, "w", encoding="utf-8") as handle:
            handle.write(_dump(document) + "\n")
    passed = all(report.passed for report in reports)
    return EXIT_CODE.SUCCESS if passed else EXIT_CODE.VERIFICATION_FAILURE


def cmd_figures(args: argparse.Namespace) -> int:
    entries = []
    for figure in figure_instances():
        instance = figure.instance
        entries.append(
            {
                "name": figure.name,
                "spec": spec_to_json(instance.spec, _digits()),
                "E0": format_number(instance.E0),
                "E1": format_number(instance.E1),
                "caption_E0": format_number(figure.caption_E0),
                "caption_E1": format_number(figure.caption_E1),
                "agrees": figure.agrees,
            }
        )
    if args.json:
        sys.stdout.write(_dump(entries) + "\n")
        return EXIT_CODE.SUCCESS
    for entry in entries:
        marker = "" if entry["agrees"] else "  (caption differs)"
        params = " ".join(f"{key}={value}" for key, value in entry["spec"].items() if key != "family")
        sys.stdout.write(
            f"{entry['name']:<6} {params}: E0={entry['E0']} E1={entry['E1']} "
            f"caption E0={entry['caption_E0']} E1={entry['caption_E1']}{marker}\n"
        )
    return EXIT_CODE.SUCCESS


def cmd_spectrum(args: argparse.Namespace) -> int:
    instance = _instance_from_args(args)
    tp = transform(instance.V, instance.f)
    result = solve(tp, args.levels, grid_points=args.grid_points)
    sys.stdout.write(_dump(result.to_json(_digits())) + "\n")
    if args.csv is not None:
        x, psi = eigenvectors_on_x(result, tp)
        header = ["x"] + [f"psi{level}" for level in range(result.levels)]
        with open(args.csv, "w", encoding="utf-8") as handle:
            _write_csv(handle, header, [x] + [psi[:, level] for level in range(result.levels)])
    return EXIT_CODE.SUCCESS


# ================================================
# Parser
# ================================================


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pdmqes",
        description="Quasi-exactly solvable position-dependent-mass problems from deformed supersymmetry.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--verbose", action="store_true", help="log progress at INFO level")
    subparsers = parser.add_subparsers(dest="command", required=True)

    build = subparsers.add_parser("build", help="print the JSON description of an instance")
    _add_instance_arguments(build)
    build.set_defaults(handler=cmd_build)

    sample = subparsers.add_parser("sample", help="print a function of an instance as CSV")
    _add_instance_arguments(sample)
    sample.add_argument("--what", choices=SAMPLE_TARGET.ALL, default=SAMPLE_TARGET.POTENTIAL)
    sample.add_argument("--range", nargs=2, type=float, metavar=("XMIN", "XMAX"), required=True)
    sample.add_argument("--points", type=int, default=201)
    sample.set_defaults(handler=cmd_sample)

    verify = subparsers.add_parser("verify", help="run the verification suite")
    _add_instance_arguments(verify)
    verify.add_argument("--all-figures", action="store_true", help="verify the four reference instances")
    verify.add_argument("--report-e0", action="store_true", help="arbitrate the kc ground state energy")
    verify.add_argument("--grid-points", type=int, default=None)
    verify.add_argument("--json", help="write the JSON report to this file")
    verify.set_defaults(handler=cmd_verify)

    figures = subparsers.add_parser("figures", help="list the reference instances")
    figures.add_argument("--json", action="store_true", help="print JSON instead of text")
    figures.set_defaults(handler=cmd_figures)

    spectrum = subparsers.add_parser("spectrum", help="print the numerical spectrum of an instance")
    _add_instance_arguments(spectrum)
    spectrum.add_argument("--levels", type=int, default=2)
    spectrum.add_argument("--grid-points", type=int, default=None)
    spectrum.add_argument("--csv", help="write the eigenvectors on the x grid to this file")
    spectrum.set_defaults(handler=cmd_spectrum)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Runs the command line interface and returns the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as error:
        return int(error.code or 0)

    if args.verbose:
        logging.basicConfig(level=logging.INFO, format="%(levelname)s %(name)s: %(message)s")

    try:
        return args.handler(args)
    except TruncationInsufficient as error:
        sys.stderr.write(f"error: {error}\n")
        return EXIT_CODE.VERIFICATION_FAILURE
    except (PdmqesError, ValueError) as error:
        sys.stderr.write(f"error: {error}\n")
        return EXIT_CODE.USAGE_ERROR

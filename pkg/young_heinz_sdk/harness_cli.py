"""Command-line harness: run the check suite, sweep ν, audit formula variants, evaluate single inputs"""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../nbs/80_harness_cli.ipynb.

# %% auto 0
__all__ = [
    'logger',
    'EXIT_OK',
    'EXIT_VIOLATIONS',
    'EXIT_USAGE',
    'EXIT_IO',
    'build_parser',
    'config_from_args',
    'cmd_suite',
    'cmd_check',
    'cmd_sweep',
    'cmd_audit',
    'pinned_violations',
    'write_report',
    'main',
]

# %% ../nbs/80_harness_cli.ipynb 3
import argparse
import json
import logging
import sys
import typing as t

from kedro.io import DatasetError
from tqdm import tqdm

from .core import DomainError, UsageError, Variant, Verdict
from .custom_datasets import MatrixInputsDataset, ReportDataset, VerdictDataset
from .inequality_suite import REGISTRY, CheckSpec, evaluate_inputs, get_check, iter_outcomes
from .reporting import Report, audit_finding, curve, json_safe, new_report, summarize
from .sampling import SampleConfig, parse_nu_grid

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VIOLATIONS = 1
EXIT_USAGE = 2
EXIT_IO = 3

# %% ../nbs/80_harness_cli.ipynb 5
def build_parser() -> argparse.ArgumentParser:
    """
    Matrix literals in inputs files are JSON rows of [re, im] pairs (plain real numbers are accepted too),
    e.g. {"A": [[[2, 0], [0, 0]], [[0, 0], [1, 0]]], "B": ..., "X": ...}. Scalar checks read {"a": .., "b": ..}.
    """
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON or YAML config file; its keys mirror the long flag names")
    common.add_argument("--seed", type=int)
    common.add_argument("--n", type=int, help="matrix dimension of seeded samples")
    common.add_argument("--samples", type=int, help="seeded samples per check (matrix and scalar)")
    common.add_argument("--nu-grid", help="comma list 'a,b,c' or 'lo:hi:steps'")
    common.add_argument("--tol", type=float, help="relative slack tolerance")
    common.add_argument("--variant", choices=[v.value for v in Variant])
    common.add_argument("--format", choices=ReportDataset.FORMATS, default="json")
    common.add_argument("--out", help="report path; printed to stdout if omitted")
    common.add_argument("--quiet", action="store_true", help="no progress bars")
    common.add_argument("--log-level", default="INFO")

    parser = argparse.ArgumentParser(prog="young-heinz", description=__doc__)
    commands = parser.add_subparsers(dest="command", required=True)

    suite = commands.add_parser("suite", parents=[common], help="run all (or the selected) checks")
    suite.add_argument("--check", action="append", help="check id; repeat to select several")
    suite.set_defaults(func=_run_suite)

    check = commands.add_parser("check", parents=[common], help="evaluate one check on explicit inputs")
    check.add_argument("--check", required=True)
    check.add_argument("--inputs", required=True, help="JSON inputs file")
    check.add_argument("--nu", type=float)
    check.add_argument("--norm")
    check.add_argument("--m", type=int)
    check.add_argument("--probe")
    check.set_defaults(func=_run_check)

    sweep = commands.add_parser("sweep", parents=[common], help="per-ν minimum slack of one check")
    sweep.add_argument("--check", required=True)
    sweep.set_defaults(func=_run_sweep)

    audit = commands.add_parser("audit", parents=[common], help="adjudicate printed against corrected readings")
    audit.add_argument("--check", default="all", help="check id or 'all'")
    audit.set_defaults(func=_run_audit)

    return parser


def config_from_args(args: argparse.Namespace) -> SampleConfig:
    """Builds the SampleConfig; flags that were given win over the config file."""
    overrides = {
        "seed": args.seed,
        "n": args.n,
        "count": args.samples,
        "scalar_count": args.samples,
        "nu_grid": parse_nu_grid(args.nu_grid) if args.nu_grid else None,
        "tol": args.tol,
        "scalar_tol": args.tol,
        "variant": args.variant,
    }
    if getattr(args, "command", None) == "suite" and args.check:
        overrides["checks"] = args.check

    if args.config:
        return SampleConfig.from_file(args.config, **overrides)
    return SampleConfig.from_dict({key: value for key, value in overrides.items() if value is not None})


def _checks(config: SampleConfig) -> t.List[CheckSpec]:
    return [get_check(check_id) for check_id in (config.checks or list(REGISTRY))]


# %% ../nbs/80_harness_cli.ipynb 7
def cmd_suite(config: SampleConfig, progress: bool = True) -> Report:
    """
    Runs every selected check over the configured population, once per quantified parameter.

    Checks with several readings are run in `config.variant`; checks without use their only one.
    """
    Variant.parse(config.variant)
    checks = _checks(config)
    report = new_report("suite", config)
    logger.info(f"Running {len(checks)} checks (seed {config.seed}, n={config.n}, {config.count} samples)")

    for check in tqdm(checks, desc="Checks", disable=not progress):
        variant = check.resolve_variant(config.variant)
        for param in check.param_grid(config):
            outcomes = iter_outcomes(check, config, variant, param)
            entry = summarize(check, variant, param, outcomes, check.tolerance(config))
            report.entries.append(entry)
            logger.info(
                f"{entry.check_id} [{entry.variant}{', ' + entry.param if entry.param else ''}]: "
                f"{entry.samples} samples, {entry.violations} violations, {entry.skipped} skipped, "
                f"min slack {entry.min_slack:.3e}"
            )

    logger.info(f"Suite {report.run_id} finished: {report.total_violations} violations")
    return report


def cmd_check(
    check_id: str,
    inputs_path: str,
    nu: t.Optional[float] = None,
    variant: t.Optional[str] = None,
    param: t.Optional[t.Dict[str, t.Any]] = None,
    tol: t.Optional[float] = None,
) -> Verdict:
    """Evaluates one check on the inputs file; ν may come from the file's "nu" key."""
    inputs = MatrixInputsDataset(inputs_path).load()
    if nu is None and inputs.get("nu") is not None:
        nu = float(inputs["nu"])
    return evaluate_inputs(check_id, inputs, nu, variant=variant, param=param, tol=tol)


def cmd_sweep(check_id: str, config: SampleConfig, progress: bool = True) -> Report:
    """
    Per-ν curve of one check: min slack and violations at every ν of the grid, for every parameter.
    Samples pinned to a ν outside the grid are dropped from the curve but still counted in the entries.
    """
    check = get_check(check_id)
    variant = check.resolve_variant(config.variant)
    grid = set(config.nu_grid)
    report = new_report("sweep", config, check=check_id)

    for param in tqdm(check.param_grid(config), desc=check_id, disable=not progress):
        outcomes = list(iter_outcomes(check, config, variant, param))
        report.entries.append(summarize(check, variant, param, outcomes, check.tolerance(config)))
        report.curve.extend(point for point in curve(check, variant, param, outcomes) if point.nu in grid)

    return report


def cmd_audit(check_id: str, config: SampleConfig, progress: bool = True) -> Report:
    """
    Evaluates every reading of the check (of all checks with several readings for "all") on the dense
    audit population and reports which reading holds universally, with violation witnesses.
    """
    if check_id == "all":
        checks = [check for check in REGISTRY.values() if check.has_variants]
    else:
        checks = [get_check(check_id)]
    report = new_report("audit", config, check=check_id)

    for check in tqdm(checks, desc="Audit", disable=not progress):
        for variant in check.variants:
            for param in check.param_grid(config):
                outcomes = iter_outcomes(check, config, variant, param, dense=True)
                finding = audit_finding(check, variant, param, outcomes)
                report.audit.append(finding)
                logger.info(
                    f"{check.check_id} [{finding.variant}{', ' + finding.param if finding.param else ''}]: "
                    f"{finding.verdict} ({finding.violations} of {finding.samples}, min slack {finding.min_slack:.3e})"
                )

    return report


def pinned_violations(report: Report) -> int:
    """Violations among the pinned readings; printed readings of suspect formulas do not count."""
    pinned = {check_id: check.pinned.value for check_id, check in REGISTRY.items()}
    if report.kind == "audit":
        return sum(f.violations for f in report.audit if pinned.get(f.check_id) == f.variant)
    return sum(e.violations for e in report.entries if pinned.get(e.check_id) == e.variant)


def write_report(report: Report, out: t.Optional[str], format: str = "json") -> None:
    if out:
        ReportDataset(filepath=out, format=format).save(report)
    elif format == "csv":
        report.frame().to_csv(sys.stdout, index=False)
    else:
        print(report.to_json())


# %% ../nbs/80_harness_cli.ipynb 9
def _exit_for(report: Report) -> int:
    return EXIT_VIOLATIONS if pinned_violations(report) else EXIT_OK


def _run_suite(args: argparse.Namespace) -> int:
    report = cmd_suite(config_from_args(args), progress=not args.quiet)
    write_report(report, args.out, args.format)
    return _exit_for(report)


def _run_check(args: argparse.Namespace) -> int:
    param = {key: getattr(args, key) for key in ("norm", "m", "probe") if getattr(args, key) is not None}
    verdict = cmd_check(args.check, args.inputs, args.nu, args.variant, param, args.tol)
    if args.out:
        VerdictDataset(filepath=args.out).save(verdict)
    else:
        print(json.dumps(json_safe(verdict.to_dict()), indent=2, allow_nan=False))
    return EXIT_OK if verdict.holds else EXIT_VIOLATIONS


def _run_sweep(args: argparse.Namespace) -> int:
    report = cmd_sweep(args.check, config_from_args(args), progress=not args.quiet)
    write_report(report, args.out, args.format)
    return _exit_for(report)


def _run_audit(args: argparse.Namespace) -> int:
    report = cmd_audit(args.check, config_from_args(args), progress=not args.quiet)
    write_report(report, args.out, args.format)
    return _exit_for(report)


def main(argv: t.Optional[t.Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=args.log_level.upper(), format="%(asctime)s %(levelname)s %(name)s: %(message)s", stream=sys.stderr
    )

    try:
        return args.func(args)
    except (UsageError, DomainError) as e:
        logger.error(str(e))
        return EXIT_USAGE
    except (OSError, DatasetError) as e:
        logger.error(f"I/O failure: {e}")
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())

"""
Command-line front end: `btlab <subcommand> [flags]`.

Data goes to stdout in the chosen format, logs go to stderr. Exit codes: 0 on success, 1 when a hard
inequality failed, 2 on usage errors.
"""

import argparse
import logging
import sys
from collections.abc import Callable, Sequence
from fractions import Fraction
from typing import Any, TextIO

import numpy as np
from attr import dataclass
from pydantic import BaseModel, ValidationError

from btlab.config import WorkbenchConfig, load_config
from btlab.domain.errors import InvalidParameterError, InvariantViolation, WorkbenchError
from btlab.models import (
    CommandOutput,
    EnvelopeEntry,
    EnvelopeReport,
    FigureRow,
    PairReport,
    ResidueCountRow,
    ScanRow,
    SieveRow,
    Status,
    Table1Row,
    VerificationRow,
)
from btlab.orchestrator import ExperimentOrchestrator
from btlab.services import bt_constants, exponent_pairs, prime_counts, report_formatter, sieve_functions
from btlab.services.experiments import (
    SUM_EXPERIMENTS,
    EmpiricalRatioExperiment,
    MontgomeryVaughanExperiment,
    SieveAgreementExperiment,
    default_experiments,
)
from btlab.utils.rationals import parse_rational, rational_str

logger = logging.getLogger(__name__)

COMMANDS = ('exppairs', 'sieve-fns', 'constants', 'table1', 'figures', 'sums', 'verify-bt')
LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


@dataclass(slots=True, frozen=True)
class CommandResult:
    status: Status
    data: Any
    rows: list
    title: str | None = None


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except InvalidParameterError as e:
        raise argparse.ArgumentTypeError(str(e))


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f'expected a positive integer, got {text}')
    return value


def _global_flags() -> argparse.ArgumentParser:
    """Flags accepted both before and after the subcommand; SUPPRESS keeps a later copy from resetting them"""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--format', choices=('csv', 'json', 'table'), default=argparse.SUPPRESS)
    common.add_argument('--seed', type=int, default=argparse.SUPPRESS)
    common.add_argument('--threads', type=_positive_int, default=argparse.SUPPRESS)
    verbosity = common.add_mutually_exclusive_group()
    verbosity.add_argument('-v', '--verbose', action='store_true', default=argparse.SUPPRESS)
    verbosity.add_argument('-q', '--quiet', action='store_true', default=argparse.SUPPRESS)
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _global_flags()
    parser = argparse.ArgumentParser(prog='btlab', description='Brun-Titchmarsh constants workbench', parents=[common])
    sub = parser.add_subparsers(dest='command', required=True, metavar='{' + ','.join(COMMANDS) + '}')

    exppairs = sub.add_parser('exppairs', parents=[common], help='exponent pairs from the A/B processes')
    exppairs.add_argument('--optimize', choices=[o.value for o in exponent_pairs.Objective], default=None)
    exppairs.add_argument('--varpi', type=_rational)
    exppairs.add_argument('--depth', type=int)
    exppairs.add_argument('--word')
    exppairs.add_argument('--akb', type=int)
    exppairs.add_argument('--list', action='store_true')
    exppairs.add_argument('--profile', action='store_true')

    sieve = sub.add_parser('sieve-fns', parents=[common], help='linear-sieve functions F and f')
    sieve.add_argument('--s-max', type=float)
    sieve.add_argument('--step', type=float)
    sieve.add_argument('--every', type=_positive_int, default=1)
    sieve.add_argument('--at', type=float, nargs='+')

    constants = sub.add_parser('constants', parents=[common], help='envelope of admissible constants')
    constants.add_argument('--varpi', type=_rational)
    constants.add_argument('--assume', nargs='+', default=[])
    constants.add_argument('--theta', type=_rational)
    constants.add_argument('--delta', type=_rational)
    constants.add_argument('--depth', type=int)
    constants.add_argument('--catalog', action='store_true')
    constants.add_argument('--rankin', action='store_true')

    sub.add_parser('table1', parents=[common], help='prime-moduli constants against Iwaniec')

    figures = sub.add_parser('figures', parents=[common], help='curve values on a varpi grid')
    figures.add_argument('--min', dest='varpi_min', type=_rational, required=True)
    figures.add_argument('--max', dest='varpi_max', type=_rational, required=True)
    figures.add_argument('--step', type=_rational, required=True)
    figures.add_argument('--assume', nargs='+', default=[])
    figures.add_argument('--theta', type=_rational)
    figures.add_argument('--delta', type=_rational)
    figures.add_argument('--depth', type=int)

    sums = sub.add_parser('sums', parents=[common], help='exponential-sum experiments')
    sums.add_argument('--experiment', nargs='+', choices=SUM_EXPERIMENTS)
    sums.add_argument('--cases', type=_positive_int)

    verify = sub.add_parser('verify-bt', parents=[common], help='prime counts against the inequalities')
    verify.add_argument('--x', dest='xs', type=int, nargs='+', default=[10**4, 10**5, 10**6, 10**7])
    verify.add_argument('--q-max', type=int, default=1000)
    verify.add_argument('--curve', default='burgess-like')
    verify.add_argument('--theta', type=_rational)
    verify.add_argument('--q', dest='qs', type=int, nargs='+')
    verify.add_argument('--residues', action='store_true', help='per-class counts x,q,a,count for every --x and --q')
    return parser


def _pair_report(word, pair, value: Fraction | None = None) -> PairReport:
    kappa, lam, nu = pair.as_strings()
    return PairReport(
        word=str(word) if word else '',
        kappa=kappa,
        lam=lam,
        nu=nu,
        value=rational_str(value),
        value_float=None if value is None else float(value),
    )


def _exppairs(args: argparse.Namespace, config: WorkbenchConfig) -> CommandResult:
    depth = config.pair_depth if args.depth is None else args.depth
    if args.word is not None:
        pair = exponent_pairs.eval_word(args.word)
        row = _pair_report(args.word, pair)
        return CommandResult('passed', row, [row])
    if args.akb is not None:
        closed = exponent_pairs.akb_formula(args.akb)
        word = 'A' * (args.akb - 1) + 'B'
        composed = exponent_pairs.eval_word(word)
        rows = [_pair_report(f'closed-form k={args.akb}', closed), _pair_report(word, composed)]
        return CommandResult('passed' if closed == composed else 'failed', rows, rows)
    if args.list:
        rows = [_pair_report(word, pair, pair.total) for word, pair in exponent_pairs.enumerate_pairs(depth)]
        return CommandResult('passed', rows, rows)
    if args.profile:
        rows = [
            {'depth': result.depth, **_pair_report(result.word, result.pair, result.value).model_dump()}
            for result in exponent_pairs.search_profile(depth)
        ]
        return CommandResult('passed', rows, rows)

    result = exponent_pairs.optimize(args.optimize or exponent_pairs.Objective.MIN_SUM, depth, args.varpi)
    row = _pair_report(result.word, result.pair, result.value)
    data = {
        'objective': result.objective.value,
        'depth': depth,
        'varpi': rational_str(result.varpi),
        **row.model_dump(),
    }
    return CommandResult('passed', data, [row])


def _sieve_fns(args: argparse.Namespace, config: WorkbenchConfig) -> CommandResult:
    s_max = config.sieve_s_max if args.s_max is None else args.s_max
    step = config.sieve_step if args.step is None else args.step
    if args.at:
        s_max = max(s_max, *args.at)
    table = sieve_functions.solve(s_max, step)
    bounds_ok = bool(np.all(table.f_values <= 1 + 1e-9) and np.all(table.F_values >= 1 - 1e-9))
    if args.at:
        rows = [
            SieveRow(s=repr(s), F=repr(sieve_functions.F_of(table, s)), f=repr(sieve_functions.f_of(table, s)))
            for s in args.at
        ]
    else:
        rows = [SieveRow(**row) for row in sieve_functions.csv_rows(table, args.every)]
    return CommandResult('passed' if bounds_ok else 'failed', rows, rows)


def _constants(args: argparse.Namespace, config: WorkbenchConfig) -> CommandResult:
    depth = config.pair_depth if args.depth is None else args.depth
    if args.catalog:
        catalog = bt_constants.catalog_json()
        rows = [
            {'id': entry['id'], 'hypotheses': ' '.join(entry['hypotheses']), 'pieces': len(entry['pieces'])}
            for entry in catalog
        ]
        return CommandResult('report', catalog, rows)
    if args.rankin:
        rankin = bt_constants.rankin_constant(depth)
        return CommandResult('report', rankin, [rankin])
    if args.varpi is None:
        raise InvalidParameterError('constants needs --varpi (or --catalog / --rankin)')

    result = bt_constants.envelope(args.varpi, args.assume, args.delta, args.theta, depth)
    entries = [
        EnvelopeEntry(curve_id=label, value=rational_str(value), value_float=float(value), best=label in result.best)
        for label, value in result.admissible
    ]
    report = EnvelopeReport(
        varpi=rational_str(result.varpi),
        assumptions=sorted(h.value for h in bt_constants.parse_assumptions(args.assume)),
        admissible=entries,
        best=list(result.best),
        best_value=rational_str(result.best_value),
        best_value_float=None if result.best_value is None else float(result.best_value),
    )
    title = f'varpi = {report.varpi}; best = {", ".join(report.best) or "none"} ({report.best_value})'
    return CommandResult('report', report, entries, title)


def _table1(args: argparse.Namespace, config: WorkbenchConfig) -> CommandResult:
    rows = [Table1Row(**row) for row in bt_constants.table1()]
    return CommandResult(bt_constants.table1_status([row.model_dump() for row in rows]), rows, rows)


def _figures(args: argparse.Namespace, config: WorkbenchConfig) -> CommandResult:
    depth = config.pair_depth if args.depth is None else args.depth
    rows = [
        FigureRow(**row)
        for row in bt_constants.figure_data(
            args.varpi_min, args.varpi_max, args.step, args.assume, args.delta, args.theta, depth
        )
    ]
    return CommandResult('report', rows, rows)


def _run_experiments(orchestrator: ExperimentOrchestrator, names: Sequence[str]) -> CommandResult:
    reports = orchestrator.run(names)
    status = orchestrator.overall_status(reports)
    data = {'overall_status': status, 'reports': [report.model_dump() for report in reports]}
    return CommandResult(status, data, report_formatter.report_rows(reports))


def _sums(args: argparse.Namespace, config: WorkbenchConfig, seed: int, threads: int) -> CommandResult:
    experiments = default_experiments(threads, config.smooth_eta, config.segment_odds)
    if args.cases is not None:
        for experiment in experiments:
            if hasattr(experiment, 'cases'):
                experiment.cases = args.cases
    orchestrator = ExperimentOrchestrator(experiments, seed)
    result = _run_experiments(orchestrator, args.experiment or SUM_EXPERIMENTS)
    if args.experiment == ['incomplete-kloosterman']:
        scan = result.data['reports'][0]['values'].get('scan', [])
        return CommandResult(result.status, result.data, [ScanRow(**row) for row in scan] or result.rows)
    return result


def _verify_bt(args: argparse.Namespace, config: WorkbenchConfig, seed: int, threads: int) -> CommandResult:
    xs = tuple(sorted(set(args.xs)))
    if xs[0] < 100:
        raise InvalidParameterError(f'every x must be >= 100, got {xs[0]}')
    if args.residues and args.qs is None:
        raise InvalidParameterError('--residues needs --q')
    overrides = {
        'sieve-agreement': SieveAgreementExperiment(
            tuple(x for x in xs if x <= 10**6) or (10**6,), threads, config.segment_odds
        ),
        'mv-grid': MontgomeryVaughanExperiment(xs, args.q_max, threads, config.segment_odds),
        'bt-empirical': EmpiricalRatioExperiment(
            xs, None if args.qs is None else tuple(args.qs), args.curve, args.theta, threads, config.segment_odds
        ),
    }
    experiments = default_experiments(threads, config.smooth_eta, config.segment_odds, overrides)
    orchestrator = ExperimentOrchestrator(experiments, seed)
    result = _run_experiments(orchestrator, list(overrides))
    if args.residues:
        rows = [
            ResidueCountRow(**row)
            for x in xs
            for q in args.qs
            if 2 <= q < x
            for row in prime_counts.pi_in_ap(x, q, config.segment_odds, threads).rows()
        ]
        return CommandResult(result.status, result.data, rows)
    grid = next(report for report in result.data['reports'] if report['name'] == 'mv-grid')
    rows = [VerificationRow(**row) for row in grid['values'].get('rows', [])]
    return CommandResult(result.status, result.data, rows or result.rows)


HANDLERS: dict[str, Callable[[argparse.Namespace, WorkbenchConfig], CommandResult]] = {
    'exppairs': _exppairs,
    'sieve-fns': _sieve_fns,
    'constants': _constants,
    'table1': _table1,
    'figures': _figures,
}
SEEDED_HANDLERS = {
    'sums': _sums,
    'verify-bt': _verify_bt,
}


def _configure_logging(args: argparse.Namespace, config: WorkbenchConfig) -> None:
    level = config.log_level.upper()
    if getattr(args, 'verbose', False):
        level = 'DEBUG'
    elif getattr(args, 'quiet', False):
        level = 'WARNING'
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr, force=True)


def _render(command: str, seed: int | None, result: CommandResult, output_format: str) -> str:
    if output_format == 'csv':
        return report_formatter.render_csv(result.rows)
    if output_format == 'table':
        return report_formatter.render_table(result.rows, result.title)
    data = result.data
    if isinstance(data, list):
        data = [item.model_dump() if isinstance(item, BaseModel) else item for item in data]
    elif isinstance(data, BaseModel):
        data = data.model_dump()
    return report_formatter.render_json(CommandOutput(command=command, status=result.status, seed=seed, data=data))


def run(argv: Sequence[str] | None = None, stdout: TextIO | None = None) -> int:
    """
    Parse argv, dispatch to the owning module and write the result.

    Args:
        argv: arguments without the program name; sys.argv[1:] when None
        stdout: data stream, sys.stdout when None

    Returns:
        Process exit code
    """
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code in (0, None) else 2

    try:
        config = load_config()
    except ValidationError as e:
        print(f'btlab: invalid configuration: {e}', file=sys.stderr)
        return 2

    _configure_logging(args, config)
    seed = getattr(args, 'seed', config.seed)
    threads = getattr(args, 'threads', config.threads)
    output_format = getattr(args, 'format', 'json')

    try:
        if args.command in SEEDED_HANDLERS:
            result = SEEDED_HANDLERS[args.command](args, config, seed, threads)
        else:
            seed = None
            result = HANDLERS[args.command](args, config)
    except InvalidParameterError as e:
        print(f'btlab {args.command}: {e}', file=sys.stderr)
        return 2
    except InvariantViolation as e:
        logger.error(f'Invariant violated: {e}')
        return 1
    except WorkbenchError as e:
        logger.error(f'{args.command} failed: {e}')
        return 1

    stdout.write(_render(args.command, seed, result, output_format))
    stdout.flush()
    return 1 if result.status == 'failed' else 0


def main() -> None:
    sys.exit(run())

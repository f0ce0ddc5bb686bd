import argparse
import logging
import sys
from typing import Optional, Sequence
from nodalhilb import config as cfg
from nodalhilb.curves import CurveSpec, hilb_class, hilb_series, nested_class
from nodalhilb.errors import BoundExceeded, NodalHilbError
from nodalhilb.formats import OutputFormat, get_format
from nodalhilb.monodromy import Method, degree_invariants, w_H, w_I
from nodalhilb.verifier import Identity, verify_grid

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2

_LOG_LEVELS = ('DEBUG', 'INFO', 'WARNING', 'ERROR')


def _nonnegative_int(raw: str) -> int:
    try:
        value = int(raw)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got '{raw}'")
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {value}")
    return value

def _positive_int(raw: str) -> int:
    value = _nonnegative_int(raw)
    if value == 0:
        raise argparse.ArgumentTypeError("expected a positive integer, got 0")
    return value

def _identity_list(raw: str) -> list[Identity]:
    if raw == 'all':
        return list(Identity)
    try:
        identities = [Identity.parse(name.strip()) for name in raw.split(',') if name.strip()]
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))
    if not identities:
        raise argparse.ArgumentTypeError(f"no identity named in '{raw}'")
    return identities

def _add_format(parser: argparse.ArgumentParser):
    parser.add_argument('--format', choices=[f.value for f in OutputFormat], default=OutputFormat.TEXT.value,
                        help='Output format (default: text).')

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='nodalhilb',
        description='Classes, monodromy invariants and support identities for Hilbert schemes of rational nodal curves.',
    )
    parser.add_argument('--log-level', choices=_LOG_LEVELS, default='WARNING', help='Logging level (default: WARNING).')
    commands = parser.add_subparsers(dest='command', required=True)

    class_cmd = commands.add_parser('class', help='Class of a Hilbert or nested Hilbert scheme in Z[L].')
    class_cmd.add_argument('kind', choices=('hilb', 'nested'))
    class_cmd.add_argument('--delta', type=_nonnegative_int, required=True, help='Number of nodes.')
    class_cmd.add_argument('--m', type=_nonnegative_int, required=True, help='Length of the subschemes.')
    class_cmd.add_argument('--punctures', type=_nonnegative_int, default=None,
                           help='Regular points removed from the curve (hilb only).')
    _add_format(class_cmd)

    series_cmd = commands.add_parser('series', help='Generating series of the Hilbert schemes.')
    series_cmd.add_argument('--delta', type=_nonnegative_int, required=True)
    series_cmd.add_argument('--punctures', type=_nonnegative_int, default=0)
    series_cmd.add_argument('--order', type=_nonnegative_int, required=True, help='Highest power of q kept.')
    _add_format(series_cmd)

    invariants_cmd = commands.add_parser('invariants', help='Weight polynomial of monodromy invariants.')
    invariants_cmd.add_argument('--delta', type=_nonnegative_int, required=True)
    invariants_cmd.add_argument('--m', type=_nonnegative_int, required=True)
    invariants_cmd.add_argument('--i', type=int, default=None,
                                help='Single cohomological degree; without it the alternating sum is printed.')
    invariants_cmd.add_argument('--nested', action='store_true', help='Use the nested Hilbert scheme.')
    invariants_cmd.add_argument('--method', choices=('oracle', 'closed'), default='oracle')
    _add_format(invariants_cmd)

    verify_cmd = commands.add_parser('verify', help='Verify the support identities over a grid.')
    verify_cmd.add_argument('--delta-max', type=_nonnegative_int, default=cfg.get(cfg.DEFAULT_DELTA_MAX))
    verify_cmd.add_argument('--m-max', type=_nonnegative_int, default=cfg.get(cfg.DEFAULT_M_MAX))
    verify_cmd.add_argument('--identities', type=_identity_list, default=list(Identity),
                            help=f"Comma separated subset of {', '.join(i.value for i in Identity)}, or 'all'.")
    verify_cmd.add_argument('--jobs', type=_positive_int, default=cfg.get(cfg.DEFAULT_JOBS))
    verify_cmd.add_argument('--override', action='store_true',
                            help=f'Allow grids past the safety bound (also {cfg.get(cfg.BOUND_OVERRIDE_ENV)}=1).')
    verify_cmd.add_argument('--out', default=None, help='Also write the report to this file.')
    _add_format(verify_cmd)
    return parser


def _emit(rendered: str):
    sys.stdout.write(rendered if rendered.endswith('\n') else rendered + '\n')

def cmd_class(args, parser) -> int:
    if args.kind == 'nested':
        if args.punctures is not None:
            parser.error('--punctures is only valid with kind hilb')
        poly = nested_class(args.delta, args.m)
    else:
        poly = hilb_class(CurveSpec(args.delta, args.punctures or 0), args.m)
    _emit(get_format(args.format).render_poly(poly))
    return EXIT_OK

def cmd_series(args, parser) -> int:
    max_order = cfg.get(cfg.SERIES_MAX_ORDER)
    if args.order > max_order:
        parser.error(f'--order {args.order} exceeds the configured maximum {max_order}')
    series = hilb_series(CurveSpec(args.delta, args.punctures), args.order)
    _emit(get_format(args.format).render_series(series))
    return EXIT_OK

def cmd_invariants(args, parser) -> int:
    method = Method.parse(args.method)
    if args.i is not None:
        poly = degree_invariants(args.delta, args.m, args.i, nested=args.nested, method=method)
    elif args.nested:
        poly = w_I(args.delta, args.m, method)
    else:
        poly = w_H(args.delta, args.m, method)
    _emit(get_format(args.format).render_poly(poly))
    return EXIT_OK

def cmd_verify(args, parser) -> int:
    report = verify_grid(args.delta_max, args.m_max, args.identities, args.jobs, args.override)
    rendered = get_format(args.format).render_report(report)
    if args.out:
        report.write(args.out, rendered)
    _emit(rendered)
    if report.passed:
        return EXIT_OK
    for cell in report.failures():
        sys.stderr.write(
            f"{cell.status.value}: {cell.identity.value} delta={cell.delta} m={cell.m}: "
            f"{cell.lhs_source} = {cell.lhs}, {cell.rhs_source} = {cell.rhs}\n"
        )
    return EXIT_VERIFICATION_FAILED

_COMMANDS = {
    'class': cmd_class,
    'series': cmd_series,
    'invariants': cmd_invariants,
    'verify': cmd_verify,
}

def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        logging.basicConfig(level=getattr(logging, args.log_level), format='%(levelname)s %(name)s: %(message)s')
        return _COMMANDS[args.command](args, parser)
    except SystemExit as e:
        # argparse reports usage errors by exiting with status 2
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    except BoundExceeded as e:
        sys.stderr.write(f"nodalhilb: error: {e}\n")
        return EXIT_USAGE
    except NodalHilbError as e:
        if not isinstance(e, ValueError):
            raise
        sys.stderr.write(f"nodalhilb: error: {e}\n")
        return EXIT_USAGE


if __name__ == '__main__':
    sys.exit(main())

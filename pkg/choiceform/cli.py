""" Command-line front end.

    choiceform check <file> <kind> <profile>
    choiceform enumerate <file> <kind>
    choiceform hypotheses <file> <variant>
    choiceform solve <file> <variant>
    choiceform convert <file> --to choice-form
    choiceform generate <class> --seed N

Exit code 0 means success, 1 a negative answer (no equilibrium, failed
hypotheses, no certified fixed point) and 2 a usage or parse error.
"""

# Standard library imports
import argparse
import logging
import sys
import time

# Local imports
import choiceform.constants as const
from choiceform.document import GameDocument, parse_game
from choiceform.equilibrium import check, enumerate_equilibria, game_class
import choiceform.generators as generators
from choiceform.hypotheses import check_theorem_hypotheses
from choiceform.normal_form import to_choice_form_normal
from choiceform.qualitative import to_choice_form_qualitative
from choiceform.report import RunReport
from choiceform.solver import solve_ec, solve_weak_equilibrium, solve_weak_nash
import choiceform.utils as utils

logger = logging.getLogger(__name__)

CHOICE_FORM_TARGET = 'choice-form'
GENERATE_CLASSES = [const.CHOICE, const.NORMAL, const.QUALITATIVE, 'v4-grid']
CONVERTERS = {
    const.NORMAL: to_choice_form_normal,
    const.QUALITATIVE: to_choice_form_qualitative,
}
LOG_LEVELS = [logging.WARNING, logging.INFO, logging.DEBUG]


class _Parser(argparse.ArgumentParser):
    """ An ArgumentParser that raises UsageError instead of exiting. """

    def error(self, message):
        raise utils.UsageError(message)


def _common_options():
    common = _Parser(add_help=False)
    common.add_argument('--output', choices=[const.OUTPUT_JSON,
                                             const.OUTPUT_TEXT],
                        default=const.OUTPUT_JSON)
    common.add_argument('-v', '--verbose', action='count', default=0)
    return common


def _at_least(kind, low):
    """ An argparse type reading kind values no smaller than low. """
    def convert(text):
        try:
            value = kind(text)
        except ValueError as error:
            raise argparse.ArgumentTypeError(
                f'invalid {kind.__name__} value: {text!r}') from error
        if not value >= low:
            raise argparse.ArgumentTypeError(f'{text} should be >= {low}')
        return value
    return convert


def build_parser():
    """
    Returns:
        argparse.ArgumentParser: the parser of every subcommand.
    """
    common = _common_options()
    parser = _Parser(prog='choiceform', parents=[common],
                     description='Equilibria of games in choice form.')
    commands = parser.add_subparsers(dest='command', parser_class=_Parser)
    commands.required = True

    check_cmd = commands.add_parser('check', parents=[common],
                                    help='check one profile')
    check_cmd.add_argument('file')
    check_cmd.add_argument('kind', choices=const.KINDS)
    check_cmd.add_argument('profile',
                           help='comma separated indices or labels, e.g. D,D')

    enum_cmd = commands.add_parser('enumerate', parents=[common],
                                   help='list every equilibrium of a kind')
    enum_cmd.add_argument('file')
    enum_cmd.add_argument('kind', choices=const.KINDS)

    for name, text in [('hypotheses', 'check the hypotheses of a variant'),
                       ('solve', 'certify an equilibrium by a variant')]:
        cmd = commands.add_parser(name, parents=[common], help=text)
        cmd.add_argument('file')
        cmd.add_argument('variant', choices=const.VARIANTS)
        cmd.add_argument('--radius', type=_at_least(int, 0),
                         default=const.DEFAULT_RADIUS)
        cmd.add_argument('--kmax', type=_at_least(int, 1),
                         default=const.DEFAULT_K_MAX)
        cmd.add_argument('--selection', action='store_true')
        if name == 'solve':
            cmd.add_argument('--tol', type=_at_least(float, 0.0),
                             default=None)
            cmd.add_argument('--force', action='store_true')

    convert_cmd = commands.add_parser('convert', parents=[common],
                                      help='rewrite a game in choice form')
    convert_cmd.add_argument('file')
    convert_cmd.add_argument('--to', choices=[CHOICE_FORM_TARGET],
                             default=CHOICE_FORM_TARGET)

    generate_cmd = commands.add_parser('generate', parents=[common],
                                       help='print a seeded random game')
    generate_cmd.add_argument('game_class', choices=GENERATE_CLASSES)
    generate_cmd.add_argument('--seed', type=int, required=True)
    generate_cmd.add_argument('--players', type=_at_least(int, 1),
                              default=None)
    generate_cmd.add_argument('--strategies', type=_at_least(int, 1),
                              default=4)
    return parser


def run_cli(argv=None):
    """ Run one command without touching stdout or the exit status.

    Args:
        argv (List[str]): the arguments, sys.argv[1:] if None.

    Returns:
        Tuple[int, RunReport]: the exit code and the report.
    """
    started = time.perf_counter()
    try:
        args = build_parser().parse_args(argv)
    except utils.UsageError as error:
        return _failure('usage', '', error, const.EXIT_USAGE, started)
    except SystemExit as error:
        # --help
        code = const.EXIT_OK if not error.code else const.EXIT_USAGE
        return code, RunReport('help', '', {}, time.perf_counter() - started,
                               code)

    source = ''
    try:
        if args.command == 'generate':
            code, results = _generate(args)
        else:
            source = _read(args.file)
            document = parse_game(source)
            code, results = COMMANDS[args.command](args, document)
    except (utils.UsageError, utils.DocumentError,
            utils.InvalidProfileError, utils.UnsupportedSpaceError,
            ValueError) as error:
        return _failure(args.command, source, error, const.EXIT_USAGE,
                        started)
    except (utils.HypothesisError, utils.ConstructionError,
            utils.NoFixedPointError, utils.VerificationError,
            utils.BudgetError) as error:
        return _failure(args.command, source, error, const.EXIT_NEGATIVE,
                        started, _negative_details(error))

    report = RunReport(args.command, source, results,
                       time.perf_counter() - started, code)
    logger.debug('%s finished with exit code %d', args.command, code)
    return code, report


def main(argv=None):
    """ The console entry point. """
    argv = sys.argv[1:] if argv is None else argv
    try:
        options, _ = _common_options().parse_known_args(argv)
    except utils.UsageError:
        options = argparse.Namespace(output=const.OUTPUT_JSON, verbose=0)
    level = LOG_LEVELS[min(options.verbose, len(LOG_LEVELS) - 1)]
    logging.basicConfig(level=level,
                        format='%(levelname)s %(name)s: %(message)s')

    code, report = run_cli(argv)
    if code == const.EXIT_USAGE:
        print(f'choiceform: error: {report.results().get("error", "")}',
              file=sys.stderr)
    elif report.command() in ['convert', 'generate'] and \
            options.output == const.OUTPUT_TEXT:
        print(report.results()['document'], end='')
    elif options.output == const.OUTPUT_TEXT:
        print(report.to_text())
    else:
        print(report.to_json())
    return code

##################################
# COMMANDS
##################################

def _check(args, document):
    game = _for_kind(document, args.kind)
    profile = _parse_profile(game.product_space(), args.profile)
    certificate = check(game, args.kind, profile)
    code = const.EXIT_OK if certificate.holds() else const.EXIT_NEGATIVE
    return code, {'kind': args.kind, 'certificate': certificate.to_dict()}


def _enumerate(args, document):
    game = _for_kind(document, args.kind)
    certificates = enumerate_equilibria(game, args.kind)
    code = const.EXIT_OK if certificates else const.EXIT_NEGATIVE
    return code, {
        'kind': args.kind,
        'count': len(certificates),
        'profiles': [certificate.to_dict() for certificate in certificates],
    }


def _hypotheses(args, document):
    game = _as_choice_form(document)
    report = check_theorem_hypotheses(game, args.variant, args.radius,
                                      document.aux(), args.kmax,
                                      selection=args.selection)
    code = const.EXIT_OK if report.passed() else const.EXIT_NEGATIVE
    return code, {'report': report.to_dict()}


def _solve(args, document):
    options = {
        'radius': args.radius,
        'aux': document.aux(),
        'tol': args.tol,
        'force': args.force,
        'k_max': args.kmax,
        'selection': args.selection,
    }
    solver = {
        const.CHOICE: solve_ec,
        const.NORMAL: solve_weak_nash,
        const.QUALITATIVE: solve_weak_equilibrium,
    }[document.game_class()]
    certificate = solver(document.game(), args.variant, **options)
    return const.EXIT_OK, {'variant': args.variant,
                           'certificate': certificate.to_dict()}


def _convert(args, document):
    converted = GameDocument.from_game(_as_choice_form(document),
                                       document.raw_aux())
    return const.EXIT_OK, {'to': args.to, 'document': converted.serialize()}


def _generate(args):
    game = {
        const.CHOICE: generators.random_choice_form,
        const.NORMAL: generators.random_normal_form,
        const.QUALITATIVE: generators.random_qualitative,
    }.get(args.game_class)
    if game is None:
        game = generators.random_v4_grid_game(
            args.seed, num_players=args.players or 2)
    else:
        game = game(args.seed, num_players=args.players,
                    max_strategies=args.strategies)
    document = GameDocument.from_game(game)
    return const.EXIT_OK, {'class': args.game_class, 'seed': args.seed,
                           'document': document.serialize()}


COMMANDS = {
    'check': _check,
    'enumerate': _enumerate,
    'hypotheses': _hypotheses,
    'solve': _solve,
    'convert': _convert,
}

##################################
# HELPERS
##################################

def _read(path):
    try:
        with open(path, encoding='utf-8') as handle:
            return handle.read()
    except OSError as error:
        raise utils.UsageError(f'cannot read {path}: {error.strerror}') \
            from error


def _as_choice_form(document):
    game = document.game()
    converter = CONVERTERS.get(document.game_class())
    return game if converter is None else converter(game)


def _for_kind(document, kind):
    """ The document's game, converted to choice form for EC and SEC. """
    if kind in [const.EC, const.SEC]:
        return _as_choice_form(document)
    if game_class(document.game()) == const.CHOICE:
        raise utils.UsageError(f'kind {kind} needs a normal or qualitative '
                               'game')
    return document.game()


def _parse_profile(product, text):
    """ Read '1,1', 'D,D' or '(D, D)' as a profile of point indices. """
    tokens = [t.strip() for t in text.strip().strip('()').split(',')]
    if len(tokens) != product.num_players() or not all(tokens):
        raise utils.InvalidProfileError(
            f'invalid profile: {text!r} should name one point for each of '
            f'{product.num_players()} players')
    profile = []
    for j, token in enumerate(tokens):
        space = product.space(j)
        if token.lstrip('-').isdigit() and \
                not (space.has_labels() and token in space.labels()):
            profile.append(int(token))
        else:
            profile.append(space.index_of(token))
    profile = tuple(profile)
    product.check_profile(profile)
    return profile


def _negative_details(error):
    if isinstance(error, utils.HypothesisError) and error.report is not None:
        return {'report': error.report.to_dict()}
    if isinstance(error, utils.NoFixedPointError) and \
            error.result is not None:
        return {'closest': error.result.to_dict()}
    if isinstance(error, utils.VerificationError):
        return {'profile': error.profile, 'trace': error.trace}
    if isinstance(error, utils.ConstructionError):
        return {'condition': error.condition}
    if isinstance(error, utils.BudgetError):
        return {'partial': error.partial}
    return {}


def _failure(command, source, error, code, started, details=None):
    results = {'error': str(error)}
    results.update(details or {})
    logger.debug('%s failed: %s', command, error)
    return code, RunReport(command, source, results,
                           time.perf_counter() - started, code)


if __name__ == '__main__':
    sys.exit(main())

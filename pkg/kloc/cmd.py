"""
Console script for kloc, also registered as the ``openmdao kloc`` plugin command.
"""
from __future__ import print_function

import argparse
import sys
import warnings

from openmdao.utils.om_warnings import issue_warning

from kloc import json_io
from kloc.equiv import VerificationReport
from kloc.errors import KLocError, UsageError, VerificationError
from kloc.jordan import jordan_decompose
from kloc.ktheory import k0_class, k0_diff, k1_add, k1_class, k1_neg
from kloc.suites import SUITES, run_suite

_DEFAULT_TRIALS = 100
_DEFAULT_SEED = 0
_DEFAULT_SIZE = 6


class _KLocArgumentParser(argparse.ArgumentParser):
    """
    Argument parser reporting usage errors as UsageError instead of printing usage and exiting.
    """

    def error(self, message):
        msg = '{}: {}'
        raise UsageError(msg.format(self.prog, message))


def _count(text):
    try:
        value = int(text)
    except ValueError:
        value = -1
    if value < 0:
        msg = 'expected a non-negative integer, got "{}"'
        raise argparse.ArgumentTypeError(msg.format(text))
    return value


def _positive(text):
    value = _count(text)
    if value < 1:
        msg = 'expected a positive integer, got "{}"'
        raise argparse.ArgumentTypeError(msg.format(text))
    return value


def _add_output_args(parser):
    parser.add_argument('--pretty', action='store_true', dest='pretty',
                        help='Indent the JSON output for reading.')


def _add_input_args(parser, what):
    parser.add_argument('-i', '--input', default='-', action='store', dest='input',
                        help='{} JSON document, "-" reads standard input.'.format(what))
    _add_output_args(parser)


def _kloc_setup_parser(parser):
    """
    Set up the subparsers of the 'kloc' command.

    Parameters
    ----------
    parser : argparse subparser
        The parser we're adding options to.
    """
    subparsers = parser.add_subparsers(dest='subcommand', metavar='subcommand')
    subparsers.required = True

    sub = subparsers.add_parser('jordan', help='Jordan form of a matrix.')
    _add_input_args(sub, 'Matrix')
    sub.add_argument('-s', '--spectrum', required=True, action='store', dest='spectrum',
                     help='Comma-separated eigenvalues of the matrix, e.g. "2,1/2,i".')

    sub = subparsers.add_parser('k0', help='K0 class of an idempotent matrix.')
    _add_input_args(sub, 'Idempotent matrix')
    sub.add_argument('--subtract', action='store', dest='subtract',
                     help='Second idempotent; prints the formal difference of the two classes.')

    sub = subparsers.add_parser('k1', help='K1 class of an invertible matrix.')
    _add_input_args(sub, 'Matrix')
    sub.add_argument('-s', '--spectrum', required=True, action='store', dest='spectrum',
                     help='Comma-separated eigenvalues of the matrix, e.g. "2,1/2,i".')

    sub = subparsers.add_parser('k1-add', help='Sum of two K1 classes.')
    _add_input_args(sub, 'K1 class')
    sub.add_argument('--other', required=True, action='store', dest='other',
                     help='Second K1 class JSON document.')

    sub = subparsers.add_parser('k1-neg', help='Opposite of a K1 class.')
    _add_input_args(sub, 'K1 class')

    sub = subparsers.add_parser('verify', help='Run a verification suite.')
    sub.add_argument('suite', choices=sorted(SUITES), help='Suite to run.')
    sub.add_argument('--trials', default=_DEFAULT_TRIALS, type=_count, dest='trials',
                     help='Number of random trials.')
    sub.add_argument('--seed', default=_DEFAULT_SEED, type=_count, dest='seed',
                     help='Seed of the random trials.')
    sub.add_argument('--size', default=_DEFAULT_SIZE, type=_positive, dest='size',
                     help='Largest matrix or cell size.')
    _add_output_args(sub)


def _jordan(options):
    a = json_io.matrix_from_json(json_io.load(options.input))
    f = jordan_decompose(a, json_io.parse_spectrum(options.spectrum))
    return json_io.form_to_json(f), 0


def _k0(options):
    p = json_io.matrix_from_json(json_io.load(options.input))
    if options.subtract is None:
        return json_io.k0_to_json(k0_class(p)), 0
    q = json_io.matrix_from_json(json_io.load(options.subtract))
    return json_io.k0_to_json(k0_diff(p, q)), 0


def _k1(options):
    a = json_io.matrix_from_json(json_io.load(options.input))
    return json_io.k1_to_json(k1_class(a, json_io.parse_spectrum(options.spectrum))), 0


def _k1_add(options):
    x = json_io.k1_from_json(json_io.load(options.input))
    y = json_io.k1_from_json(json_io.load(options.other))
    return json_io.k1_to_json(k1_add(x, y)), 0


def _k1_neg(options):
    x = json_io.k1_from_json(json_io.load(options.input))
    return json_io.k1_to_json(k1_neg(x)), 0


def _verify(options):
    try:
        report = run_suite(options.suite, options.trials, options.seed, options.size)
    except VerificationError as err:
        report = VerificationReport(VerificationReport.FAIL, options.suite, options.trials, 0,
                                    None, err.trace, str(err))
    if report.passed:
        return json_io.report_to_json(report), 0
    if options.pretty:
        msg = 'Suite "{}" failed: {}'
        issue_warning(msg.format(options.suite, report.detail))
    return json_io.report_to_json(report), VerificationError.exit_code


_COMMANDS = {
    'jordan': _jordan,
    'k0': _k0,
    'k1': _k1,
    'k1-add': _k1_add,
    'k1-neg': _k1_neg,
    'verify': _verify,
}


def _messages(caught):
    return [str(w.message) for w in caught]


def _exit_with_error(err, caught=()):
    doc = err.to_dict()
    if caught:
        doc['warnings'] = _messages(caught)
    sys.stderr.write(json_io.dumps(doc) + '\n')
    sys.exit(err.exit_code)


def _kloc_cmd(options, user_args):
    """
    Run the selected subcommand and print its JSON result.

    Errors are written as JSON to standard error and the process exits with the code of the error.
    Warnings raised while running are listed under "warnings" in the output or error document.

    Parameters
    ----------
    options : argparse Namespace
        Command line options.
    user_args : list of str
        Command line options after '--' (if any). Ignored.
    """
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter('always')
        try:
            doc, status = _COMMANDS[options.subcommand](options)
        except KLocError as err:
            _exit_with_error(err, caught)
    if caught:
        doc['warnings'] = _messages(caught)
    print(json_io.dumps(doc, pretty=options.pretty))
    if status:
        sys.exit(status)


def _kloc_setup():
    """
    Entry point of the 'openmdao kloc' plugin command.
    """
    return _kloc_setup_parser, _kloc_cmd, 'Jordan forms and local K-classes of exact matrices.'


def kloc_cmd(argv=None):
    """
    Console script 'kloc'.

    Parameters
    ----------
    argv : list of str or None
        Arguments; defaults to sys.argv[1:].
    """
    parser = _KLocArgumentParser(prog='kloc', description=_kloc_setup()[2])
    _kloc_setup_parser(parser)
    try:
        options = parser.parse_args(argv)
    except UsageError as err:
        _exit_with_error(err)
    _kloc_cmd(options, [])

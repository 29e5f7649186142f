"""
JSON documents read and written by kloc.

Scalars are always strings in the scalar grammar of :mod:`kloc.gaussq`. Output is deterministic:
keys are sorted and cells, generators and steps are listed in the canonical order, so identical
inputs give byte-identical output.
"""

import json
import sys

from kloc.equiv import Conjugate, OPad, Stabilize
from kloc.errors import KLocError, ParseError
from kloc.exmat import ExactMatrix
from kloc.gaussq import gq_format, gq_parse
from kloc.jordan import JordanCell, JordanForm, Spectrum
from kloc.ktheory import K0Class, K1Class

_INDENT = 2


def _require(doc, key, kind, where):
    if not isinstance(doc, dict) or key not in doc:
        msg = 'Missing "{}" in {} document.'
        raise ParseError(msg.format(key, where))
    value = doc[key]
    if kind is int and (not isinstance(value, int) or isinstance(value, bool)):
        msg = '"{}" in {} document must be an integer, got {!r}.'
        raise ParseError(msg.format(key, where, value))
    if kind is not int and not isinstance(value, kind):
        msg = '"{}" in {} document must be a {}, got {!r}.'
        raise ParseError(msg.format(key, where, kind.__name__, value))
    return value


def parse_scalar(value):
    if not isinstance(value, str):
        msg = 'Scalars must be strings, got {!r}.'
        raise ParseError(msg.format(value))
    return gq_parse(value)


def parse_spectrum(text):
    """
    Parse a comma-separated list of scalars.

    Parameters
    ----------
    text : str
        For example "2,1/2,i".

    Returns
    -------
        Spectrum
    """
    if text is None or not text.strip():
        return Spectrum()
    return Spectrum(gq_parse(item.strip()) for item in text.split(','))


def matrix_to_json(a):
    return {'rows': a.rows, 'cols': a.cols, 'entries': a.to_rows()}


def matrix_from_json(doc):
    """
    Build a matrix from ``{"rows": R, "cols": C, "entries": [[scalar, ...], ...]}``.

    Parameters
    ----------
    doc : dict
        Matrix document.

    Returns
    -------
        ExactMatrix
    """
    rows = _require(doc, 'rows', int, 'matrix')
    cols = _require(doc, 'cols', int, 'matrix')
    entries = _require(doc, 'entries', list, 'matrix')
    if rows < 0 or cols < 0:
        raise ParseError('Matrix dimensions must be non-negative.')
    if len(entries) != rows:
        msg = 'Matrix document declares {} rows but has {}.'
        raise ParseError(msg.format(rows, len(entries)))
    parsed = []
    for i, row in enumerate(entries):
        if not isinstance(row, list) or len(row) != cols:
            msg = 'Row {} of the matrix document must be a list of {} scalars.'
            raise ParseError(msg.format(i, cols))
        parsed.append([parse_scalar(value) for value in row])
    return ExactMatrix(parsed, rows=rows, cols=cols)


def form_to_json(f):
    cells = [{'size': cell.size, 'eigenvalue': gq_format(cell.eigenvalue), 'multiplicity': mult}
             for cell, mult in f.items()]
    return {'cells': cells}


def form_from_json(doc):
    cells = {}
    for item in _require(doc, 'cells', list, 'Jordan form'):
        size = _require(item, 'size', int, 'cell')
        lam = parse_scalar(_require(item, 'eigenvalue', str, 'cell'))
        mult = _require(item, 'multiplicity', int, 'cell')
        if mult < 1:
            msg = 'Cell multiplicity must be positive, got {}.'
            raise ParseError(msg.format(mult))
        try:
            cell = JordanCell(size, lam)
        except ValueError as err:
            raise ParseError(str(err))
        cells[cell] = cells.get(cell, 0) + mult
    return JordanForm(cells)


def k1_to_json(x):
    """
    K1 class document.

    Parameters
    ----------
    x : K1Class
        Class.

    Returns
    -------
        dict
    """
    return {
        'torsion_minus': {str(n): c for n, c in sorted(x.torsion_minus.items())},
        'torsion_plus': {str(n): c for n, c in sorted(x.torsion_plus.items())},
        'free': [{'size': n, 'eigenvalue': gq_format(lam), 'coeff': m}
                 for n, lam, m in x.free_items()],
    }


def _torsion_from_json(doc, key):
    out = {}
    for size, coeff in _require(doc, key, dict, 'K1 class').items():
        try:
            size = int(size)
        except ValueError:
            msg = 'Torsion size "{}" in K1 class document is not an integer.'
            raise ParseError(msg.format(size))
        if not isinstance(coeff, int):
            msg = 'Torsion coefficient {!r} in K1 class document is not an integer.'
            raise ParseError(msg.format(coeff))
        out[size] = coeff
    return out


def k1_from_json(doc):
    free = {}
    for item in _require(doc, 'free', list, 'K1 class'):
        size = _require(item, 'size', int, 'free generator')
        lam = parse_scalar(_require(item, 'eigenvalue', str, 'free generator'))
        coeff = _require(item, 'coeff', int, 'free generator')
        free[(size, lam)] = free.get((size, lam), 0) + coeff
    try:
        return K1Class(torsion_minus=_torsion_from_json(doc, 'torsion_minus'),
                       torsion_plus=_torsion_from_json(doc, 'torsion_plus'),
                       free=free)
    except KLocError:
        raise
    except ValueError as err:
        raise ParseError(str(err))


def k0_to_json(x):
    return {'value': x.value}


def k0_from_json(doc):
    return K0Class(_require(doc, 'value', int, 'K0 class'))


def step_to_json(step):
    if isinstance(step, Stabilize):
        return {'kind': step.kind, 'k': step.k}
    if isinstance(step, Conjugate):
        return {'kind': step.kind, 'seed': step.seed}
    if isinstance(step, OPad):
        return {'kind': step.kind, 'u': matrix_to_json(step.u),
                'spectrum': [gq_format(v) for v in step.spectrum]}
    msg = 'Unknown transform type "{}".'
    raise TypeError(msg.format(type(step).__name__))


def trace_to_json(trace):
    if trace is None:
        return None
    return {
        'initial': matrix_to_json(trace.initial),
        'steps': [step_to_json(step) for step in trace.steps],
        'final': None if trace.final is None else matrix_to_json(trace.final),
    }


def report_to_json(report):
    """
    Verification report document.

    Parameters
    ----------
    report : VerificationReport
        Report.

    Returns
    -------
        dict
    """
    return {
        'status': report.status,
        'suite': report.suite,
        'trials': report.trials,
        'checks': report.checks,
        'class': None if report.k1 is None else k1_to_json(report.k1),
        'failure_trace': trace_to_json(report.failure_trace),
        'detail': report.detail,
    }


def dumps(doc, pretty=False):
    """
    Serialize a document deterministically.

    Parameters
    ----------
    doc : dict
        Document.
    pretty : bool, optional
        Indent for humans instead of the compact form.

    Returns
    -------
        str
    """
    if pretty:
        return json.dumps(doc, sort_keys=True, indent=_INDENT)
    return json.dumps(doc, sort_keys=True, separators=(',', ':'))


def load(path):
    """
    Read a JSON document from a file, or from standard input if path is "-".

    Parameters
    ----------
    path : str
        File name or "-".

    Returns
    -------
        object
    """
    try:
        if path == '-':
            return json.load(sys.stdin)
        with open(path, encoding='utf-8') as f:
            return json.load(f)
    except UnicodeDecodeError as err:
        msg = 'Invalid UTF-8 in "{}" at byte {}: {}'
        raise ParseError(msg.format(path, err.start, err.reason), position=err.start)
    except json.JSONDecodeError as err:
        msg = 'Invalid JSON in "{}": {}'
        raise ParseError(msg.format(path, err.msg), position=err.pos)
    except OSError as err:
        msg = 'Cannot read "{}": {}'
        raise ParseError(msg.format(path, err.strerror))

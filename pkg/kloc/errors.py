"""
Exceptions raised by kloc.

Every error carries a stable ``code`` (used in the CLI error JSON) and the process exit code the
command line tool reports for it.
"""


class KLocError(Exception):
    """
    Base class of all kloc errors.

    Attributes
    ----------
    code : str
        Stable machine-readable error code.
    exit_code : int
        Exit status of the command line tool.
    """

    code = 'error'
    exit_code = 2

    def to_dict(self):
        """
        Make the error JSON document.

        Returns
        -------
            dict
        """
        return {'code': self.code, 'message': str(self)}


class ParseError(KLocError, ValueError):
    """
    Malformed scalar, matrix, form or class document.

    Attributes
    ----------
    position : int or None
        Offset of the offending character in the parsed text, if known.
    """

    code = 'parse'
    exit_code = 2

    def __init__(self, msg, position=None):
        super(ParseError, self).__init__(msg)
        self.position = position

    def to_dict(self):
        dct = super(ParseError, self).to_dict()
        if self.position is not None:
            dct['position'] = self.position
        return dct


class UsageError(KLocError):
    code = 'usage'
    exit_code = 2


class DivisionByZero(KLocError, ZeroDivisionError):
    code = 'division_by_zero'
    exit_code = 5


class DimensionMismatch(KLocError, ValueError):
    code = 'dimension'
    exit_code = 4


class NonSquare(DimensionMismatch):
    code = 'non_square'


class NotInvertible(KLocError, ValueError):
    code = 'singular'
    exit_code = 5


class SingularCell(NotInvertible):
    code = 'singular_cell'


class IncompleteSpectrum(KLocError, ValueError):
    """
    The given eigenvalues do not account for the whole dimension of the matrix.

    Attributes
    ----------
    deficit : int
        Matrix dimension minus the sum of the algebraic multiplicities of the given eigenvalues.
    """

    code = 'incomplete_spectrum'
    exit_code = 3

    def __init__(self, msg, deficit=0):
        super(IncompleteSpectrum, self).__init__(msg)
        self.deficit = deficit

    def to_dict(self):
        dct = super(IncompleteSpectrum, self).to_dict()
        dct['deficit'] = self.deficit
        return dct


class ExcludedValue(KLocError, ValueError):
    code = 'excluded_value'
    exit_code = 2


class NotIdempotent(KLocError, ValueError):
    code = 'not_idempotent'
    exit_code = 2


class VerificationError(KLocError):
    """
    An equivalence transform changed a class it must preserve, or arithmetic failed mid-pipeline.

    Attributes
    ----------
    trace : TransformTrace or None
        The pipeline that produced the failure.
    """

    code = 'verification'
    exit_code = 1

    def __init__(self, msg, trace=None):
        super(VerificationError, self).__init__(msg)
        self.trace = trace

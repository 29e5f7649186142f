"""
Exact arithmetic in the field Q(i) of Gaussian rationals.

A Gaussian rational is ``a + b i`` with ``a`` and ``b`` rational. Both parts are stored as
:class:`fractions.Fraction`, which keeps them reduced with a positive denominator, so equality is
structural.

Scalar grammar (whitespace is not allowed inside a scalar)::

    scalar := real | imag | real sign imag
    real   := sign? rat
    imag   := sign? rat? "i"
    rat    := int ("/" int)?

Examples: "0", "-1", "3/2", "i", "-1/4i", "3/2-1/4i".
"""

from fractions import Fraction
from numbers import Rational

from kloc.errors import DivisionByZero, ParseError

_SIGNS = '+-'
_DIGITS = '0123456789'
_IMAG_UNIT = 'i'
# Digits converted per int() or str() call, below the interpreter's integer string limit.
_DIGIT_CHUNK = 1000


class GaussianRational(object):
    """
    Immutable Gaussian rational ``re + im * i``.

    Attributes
    ----------
    re : Fraction
        Real part.
    im : Fraction
        Imaginary part.
    """

    __slots__ = ('_re', '_im')

    def __init__(self, re=0, im=0):
        """
        Initialize.

        Parameters
        ----------
        re : int or Fraction
            Real part.
        im : int or Fraction
            Imaginary part.
        """
        if not isinstance(re, Rational) or not isinstance(im, Rational):
            msg = 'Gaussian rational parts must be rational, got "{}" and "{}".'
            raise TypeError(msg.format(type(re).__name__, type(im).__name__))
        object.__setattr__(self, '_re', Fraction(re))
        object.__setattr__(self, '_im', Fraction(im))

    def __setattr__(self, key, value):
        raise AttributeError('GaussianRational is immutable.')

    @property
    def re(self):
        return self._re

    @property
    def im(self):
        return self._im

    @classmethod
    def from_value(cls, value):
        """
        Coerce an int, Fraction, scalar string or Gaussian rational.

        Parameters
        ----------
        value : int or Fraction or str or GaussianRational
            Value to convert.

        Returns
        -------
            GaussianRational
        """
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, str):
            return gq_parse(value)
        if isinstance(value, Rational):
            return cls(value)
        msg = 'Cannot convert "{}" to a Gaussian rational.'
        raise TypeError(msg.format(type(value).__name__))

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return _new(self._re + other._re, self._im + other._im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return _new(self._re - other._re, self._im - other._im)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return _new(self._re * other._re - self._im * other._im,
                    self._re * other._im + self._im * other._re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __neg__(self):
        return _new(-self._re, -self._im)

    def __pos__(self):
        return self

    def __pow__(self, exponent):
        if not isinstance(exponent, int):
            return NotImplemented
        base = self if exponent >= 0 else self.inverse()
        result = ONE
        for _ in range(abs(exponent)):
            result = result * base
        return result

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self._re == other._re and self._im == other._im

    def __ne__(self, other):
        eq = self.__eq__(other)
        if eq is NotImplemented:
            return eq
        return not eq

    def __hash__(self):
        # Consistent with int and Fraction hashing for real values.
        if self._im == 0:
            return hash(self._re)
        return hash((self._re, self._im))

    def __bool__(self):
        return bool(self._re) or bool(self._im)

    def __repr__(self):
        return 'GaussianRational({!r})'.format(gq_format(self))

    def __str__(self):
        return gq_format(self)

    def __reduce__(self):
        return GaussianRational, (self._re, self._im)

    def conjugate(self):
        return _new(self._re, -self._im)

    def norm(self):
        """
        Field norm ``re**2 + im**2``.

        Returns
        -------
            Fraction
        """
        return self._re * self._re + self._im * self._im

    def inverse(self):
        """
        Multiplicative inverse.

        Returns
        -------
            GaussianRational
        """
        nrm = self.norm()
        if nrm == 0:
            raise DivisionByZero('Zero has no inverse in Q(i).')
        return _new(self._re / nrm, -self._im / nrm)

    def is_real(self):
        return self._im == 0

    def sort_key(self):
        """
        Key of the deterministic total order: real part first, then imaginary part.

        Returns
        -------
            tuple(Fraction, Fraction)
        """
        return self._re, self._im


def _coerce(value):
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, Rational):
        return GaussianRational(value)
    return NotImplemented


def _new(re, im):
    # Parts are already Fractions; skips the validation in __init__.
    z = object.__new__(GaussianRational)
    object.__setattr__(z, '_re', re)
    object.__setattr__(z, '_im', im)
    return z


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
MINUS_ONE = GaussianRational(-1)
I = GaussianRational(0, 1)


def gq_add(a, b):
    return a + b


def gq_sub(a, b):
    return a - b


def gq_neg(a):
    return -a


def gq_mul(a, b):
    return a * b


def gq_div(a, b):
    return a / b


def gq_inv(a):
    """
    Multiplicative inverse of a nonzero Gaussian rational.

    Parameters
    ----------
    a : GaussianRational
        Value to invert.

    Returns
    -------
        GaussianRational
    """
    return GaussianRational.from_value(a).inverse()


def gq_norm(a):
    return GaussianRational.from_value(a).norm()


def gq_conj(a):
    return GaussianRational.from_value(a).conjugate()


def gq_key(a):
    return GaussianRational.from_value(a).sort_key()


def gq_format(z):
    """
    Canonical scalar string of a Gaussian rational.

    Parameters
    ----------
    z : GaussianRational
        Value to format.

    Returns
    -------
        str
    """
    re, im = z.re, z.im
    if im == 0:
        return _format_rational(re)
    if im == 1:
        imag = _IMAG_UNIT
    elif im == -1:
        imag = '-' + _IMAG_UNIT
    else:
        imag = _format_rational(im) + _IMAG_UNIT
    if re == 0:
        return imag
    if im > 0:
        return '{}+{}'.format(_format_rational(re), imag)
    return _format_rational(re) + imag


def _format_int(n):
    if n < 0:
        return '-' + _format_int(-n)
    base = 10 ** _DIGIT_CHUNK
    chunks = []
    while n >= base:
        n, low = divmod(n, base)
        chunks.append('{:0{}d}'.format(low, _DIGIT_CHUNK))
    chunks.append('{:d}'.format(n))
    return ''.join(reversed(chunks))


def _format_rational(q):
    if q.denominator == 1:
        return _format_int(q.numerator)
    return '{}/{}'.format(_format_int(q.numerator), _format_int(q.denominator))


def _parse_int(digits):
    value = 0
    for start in range(0, len(digits), _DIGIT_CHUNK):
        chunk = digits[start:start + _DIGIT_CHUNK]
        value = value * 10 ** len(chunk) + int(chunk)
    return value


def gq_parse(s):
    """
    Parse a scalar string.

    Parameters
    ----------
    s : str
        Text following the scalar grammar.

    Returns
    -------
        GaussianRational
    """
    if not isinstance(s, str):
        msg = 'Scalar must be a string, got "{}".'
        raise ParseError(msg.format(type(s).__name__), position=0)
    scanner = _Scanner(s)
    sign = scanner.sign()
    rat = scanner.rational()
    if scanner.peek() == _IMAG_UNIT:
        scanner.advance()
        scanner.end()
        return GaussianRational(0, sign * (1 if rat is None else rat))
    if rat is None:
        scanner.fail('expected a number or "i"')
    real = sign * rat
    if scanner.at_end():
        return GaussianRational(real)
    if scanner.peek() not in _SIGNS:
        scanner.fail('expected "+" or "-"')
    sign = scanner.sign()
    rat = scanner.rational()
    if scanner.peek() != _IMAG_UNIT:
        scanner.fail('expected "i"')
    scanner.advance()
    scanner.end()
    return GaussianRational(real, sign * (1 if rat is None else rat))


class _Scanner(object):
    """
    Character scanner for the scalar grammar, tracking the position for error messages.
    """

    def __init__(self, text):
        self.text = text
        self.pos = 0

    def peek(self):
        if self.pos < len(self.text):
            return self.text[self.pos]
        return ''

    def advance(self):
        self.pos += 1

    def at_end(self):
        return self.pos == len(self.text)

    def end(self):
        if not self.at_end():
            self.fail('unexpected trailing characters')

    def fail(self, reason):
        msg = 'Invalid scalar "{}" at position {}: {}.'
        raise ParseError(msg.format(self.text, self.pos, reason), position=self.pos)

    def sign(self):
        char = self.peek()
        if char and char in _SIGNS:
            self.advance()
            return -1 if char == '-' else 1
        return 1

    def integer(self):
        start = self.pos
        while self.peek() and self.peek() in _DIGITS:
            self.advance()
        if start == self.pos:
            return None
        return _parse_int(self.text[start:self.pos])

    def rational(self):
        numerator = self.integer()
        if numerator is None:
            return None
        if self.peek() != '/':
            return Fraction(numerator)
        self.advance()
        denom_pos = self.pos
        denominator = self.integer()
        if denominator is None:
            self.fail('expected a denominator')
        if denominator == 0:
            self.pos = denom_pos
            self.fail('zero denominator')
        return Fraction(numerator, denominator)

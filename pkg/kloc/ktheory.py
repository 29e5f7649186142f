"""
Classes in the local K-groups of the complex numbers with the trivial filtration.

K0 is the integers, through the rank of idempotents. K1 is generated by the classes of Jordan cells
with these relations:

* ``[J(1, 1)] = 0``;
* ``2 [J(n, -1)] = 0`` for n >= 1 and ``2 [J(n, 1)] = 0`` for n >= 2;
* ``[J(n, lam)] + [J(n, 1/lam)] = 0`` for every other nonzero lam.

A :class:`K1Class` stores the three families of coefficients separately. Free generators are keyed
by the canonical member of ``{lam, 1/lam}``: the one with norm > 1, or, on the unit circle, the one
with positive imaginary part. A cell whose eigenvalue is the other member counts -1.
"""

from collections import Counter, namedtuple

from kloc.errors import ExcludedValue, NonSquare, NotIdempotent, NotInvertible
from kloc.exmat import mat_is_idempotent, mat_rank
from kloc.gaussq import GaussianRational, MINUS_ONE, ONE, ZERO
from kloc.jordan import JordanCell, JordanForm, Spectrum, jordan_decompose

_EXCLUDED = (MINUS_ONE, ZERO, ONE)


class HatLambda(namedtuple('HatLambda', ['representative', 'flipped'])):
    """
    Class of an eigenvalue modulo ``lam ~ 1/lam``.

    Attributes
    ----------
    representative : GaussianRational
        Canonical member of ``{lam, 1/lam}``.
    flipped : bool
        True if the normalized value was the inverse of the representative.
    """

    __slots__ = ()


def _is_canonical(lam):
    nrm = lam.norm()
    return nrm > 1 or (nrm == 1 and lam.im > 0)


def hat_normalize(lam):
    """
    Canonical representative of the class of ``lam`` modulo inversion.

    Parameters
    ----------
    lam : GaussianRational
        Eigenvalue outside {-1, 0, 1}.

    Returns
    -------
        HatLambda
    """
    lam = GaussianRational.from_value(lam)
    if lam in _EXCLUDED:
        msg = 'Eigenvalue {} is excluded from the inversion classes (-1, 0 and 1 are).'
        raise ExcludedValue(msg.format(lam))
    if _is_canonical(lam):
        return HatLambda(lam, False)
    return HatLambda(lam.inverse(), True)


class K1Class(object):
    """
    Normalized element of K1.

    The constructor accepts unreduced coefficients and normalizes them: torsion coefficients are
    taken mod 2, free keys are moved to their canonical eigenvalue (negating the coefficient when
    inverted) and zero coefficients are dropped.

    Attributes
    ----------
    torsion_minus : dict(int, int)
        Sizes n >= 1 for which the class contains ``[J(n, -1)]``.
    torsion_plus : dict(int, int)
        Sizes n >= 2 for which the class contains ``[J(n, 1)]``.
    free : dict(tuple(int, GaussianRational), int)
        Nonzero coefficients of the free generators ``[J(n, lam)]``.
    """

    __slots__ = ('_minus', '_plus', '_free')

    def __init__(self, torsion_minus=None, torsion_plus=None, free=None):
        """
        Initialize.

        Parameters
        ----------
        torsion_minus : dict(int, int) or None
            Coefficients of ``[J(n, -1)]``.
        torsion_plus : dict(int, int) or None
            Coefficients of ``[J(n, 1)]``; a size-1 entry is the trivial class and is dropped.
        free : dict(tuple(int, scalar), int) or None
            Coefficients of ``[J(n, lam)]``.
        """
        self._minus = _reduce_torsion(torsion_minus or {}, min_size=1)
        plus = dict(torsion_plus or {})
        plus.pop(1, None)
        self._plus = _reduce_torsion(plus, min_size=2)

        acc = Counter()
        for (size, lam), coeff in (free or {}).items():
            _check_size(size, 1)
            hat = hat_normalize(lam)
            acc[(size, hat.representative)] += -coeff if hat.flipped else coeff
        self._free = {key: coeff for key, coeff in acc.items() if coeff}

    @property
    def torsion_minus(self):
        return dict(self._minus)

    @property
    def torsion_plus(self):
        return dict(self._plus)

    @property
    def free(self):
        return dict(self._free)

    def free_items(self):
        """
        Free coefficients sorted by eigenvalue then size.

        Returns
        -------
            list(tuple(int, GaussianRational, int))
        """
        keys = sorted(self._free, key=lambda key: (key[1].sort_key(), key[0]))
        return [(size, lam, self._free[(size, lam)]) for size, lam in keys]

    def is_zero(self):
        return not (self._minus or self._plus or self._free)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if not isinstance(other, K1Class):
            return NotImplemented
        return (self._minus == other._minus and self._plus == other._plus and
                self._free == other._free)

    def __ne__(self, other):
        eq = self.__eq__(other)
        if eq is NotImplemented:
            return eq
        return not eq

    def __hash__(self):
        return hash((frozenset(self._minus), frozenset(self._plus),
                     frozenset(self._free.items())))

    def __add__(self, other):
        return k1_add(self, other)

    def __sub__(self, other):
        return k1_sub(self, other)

    def __neg__(self):
        return k1_neg(self)

    def __repr__(self):
        parts = ['[J({}, -1)]'.format(n) for n in sorted(self._minus)]
        parts += ['[J({}, 1)]'.format(n) for n in sorted(self._plus)]
        parts += ['{}[J({}, {})]'.format(m, n, lam) for n, lam, m in self.free_items()]
        return 'K1Class({})'.format(' + '.join(parts) if parts else '0')


def _check_size(size, min_size):
    if not isinstance(size, int) or size < min_size:
        msg = 'Generator size must be an integer >= {}, got "{}".'
        raise ValueError(msg.format(min_size, size))


def _reduce_torsion(coeffs, min_size):
    out = {}
    for size, coeff in coeffs.items():
        _check_size(size, min_size)
        if coeff % 2:
            out[size] = 1
    return out


class K0Class(namedtuple('K0Class', ['value'])):
    """
    Element of K0, an integer: the rank of an idempotent or a formal difference of ranks.
    """

    __slots__ = ()

    def __add__(self, other):
        return k0_add(self, other)

    def __neg__(self):
        return k0_neg(self)

    def __sub__(self, other):
        return k0_add(self, k0_neg(other))


def _check_idempotent(p):
    if not p.is_square():
        msg = 'An idempotent must be square, got {}x{}.'
        raise NonSquare(msg.format(p.rows, p.cols))
    if not mat_is_idempotent(p):
        raise NotIdempotent('Matrix is not idempotent: p @ p != p.')


def k0_class(p):
    """
    K0 class of an idempotent matrix, its rank.

    Parameters
    ----------
    p : ExactMatrix
        Idempotent matrix.

    Returns
    -------
        K0Class
    """
    _check_idempotent(p)
    return K0Class(mat_rank(p))


def k0_diff(p, q):
    """
    Formal difference ``[p] - [q]`` of two idempotents.

    Parameters
    ----------
    p : ExactMatrix
        Idempotent matrix.
    q : ExactMatrix
        Idempotent matrix.

    Returns
    -------
        K0Class
    """
    return K0Class(k0_class(p).value - k0_class(q).value)


def k0_add(x, y):
    return K0Class(x.value + y.value)


def k0_neg(x):
    return K0Class(-x.value)


def k1_zero():
    return K1Class()


def k1_class_of_form(f):
    """
    K1 class of an invertible matrix with a known Jordan form.

    Parameters
    ----------
    f : JordanForm
        Form without zero eigenvalues.

    Returns
    -------
        K1Class
    """
    minus = Counter()
    plus = Counter()
    free = Counter()
    for cell, mult in f.cells.items():
        lam = cell.eigenvalue
        if lam == ZERO:
            msg = 'Jordan form contains the singular cell {}; K1 needs invertible matrices.'
            raise NotInvertible(msg.format(cell))
        if lam == MINUS_ONE:
            minus[cell.size] += mult
        elif lam == ONE:
            plus[cell.size] += mult
        else:
            free[(cell.size, lam)] += mult
    return K1Class(torsion_minus=minus, torsion_plus=plus, free=free)


def k1_class(a, spectrum):
    """
    K1 class of an invertible matrix whose eigenvalues are given.

    Parameters
    ----------
    a : ExactMatrix
        Invertible matrix.
    spectrum : Spectrum or iterable
        All eigenvalues of ``a``.

    Returns
    -------
        K1Class
    """
    if not a.is_square():
        msg = 'K1 classes need a square matrix, got {}x{}.'
        raise NonSquare(msg.format(a.rows, a.cols))
    if mat_rank(a) != a.rows:
        msg = 'Matrix of size {} has rank {} and is not invertible.'
        raise NotInvertible(msg.format(a.rows, mat_rank(a)))
    return k1_class_of_form(jordan_decompose(a, Spectrum.coerce(spectrum)))


def k1_add(x, y):
    """
    Sum of two K1 classes; realized on matrices by the direct sum.

    Parameters
    ----------
    x : K1Class
        Summand.
    y : K1Class
        Summand.

    Returns
    -------
        K1Class
    """
    minus = Counter(x.torsion_minus)
    minus.update(y.torsion_minus)
    plus = Counter(x.torsion_plus)
    plus.update(y.torsion_plus)
    free = Counter(x.free)
    free.update(y.free)
    return K1Class(torsion_minus=minus, torsion_plus=plus, free=free)


def k1_neg(x):
    """
    Opposite class. Torsion generators have order 2 and stay; free coefficients change sign.

    Parameters
    ----------
    x : K1Class
        Class to negate.

    Returns
    -------
        K1Class
    """
    return K1Class(torsion_minus=x.torsion_minus, torsion_plus=x.torsion_plus,
                   free={key: -coeff for key, coeff in x.free.items()})


def k1_sub(x, y):
    return k1_add(x, k1_neg(y))


def k1_scale(x, m):
    """
    Integer multiple ``m x``.

    Parameters
    ----------
    x : K1Class
        Class.
    m : int
        Multiplier, any sign.

    Returns
    -------
        K1Class
    """
    return K1Class(torsion_minus={n: c * m for n, c in x.torsion_minus.items()},
                   torsion_plus={n: c * m for n, c in x.torsion_plus.items()},
                   free={key: c * m for key, c in x.free.items()})


def k1_eq(x, y):
    return x == y


def k1_is_zero(x):
    return x.is_zero()


def k1_order(x):
    """
    Order of a class in K1.

    Parameters
    ----------
    x : K1Class
        Class.

    Returns
    -------
        int or None
            1 for zero, 2 for a nonzero pure torsion class, None for infinite order.
    """
    if x.is_zero():
        return 1
    if x.free:
        return None
    return 2


def k1_representative(x):
    """
    Canonical Jordan form realizing a class.

    Every torsion generator gives one cell; a free coefficient m gives m copies of J(n, lam) when
    positive and -m copies of J(n, 1/lam) when negative.

    Parameters
    ----------
    x : K1Class
        Class to realize.

    Returns
    -------
        JordanForm
    """
    cells = Counter()
    for size in x.torsion_minus:
        cells[JordanCell(size, MINUS_ONE)] += 1
    for size in x.torsion_plus:
        cells[JordanCell(size, ONE)] += 1
    for size, lam, coeff in x.free_items():
        if coeff > 0:
            cells[JordanCell(size, lam)] += coeff
        else:
            cells[JordanCell(size, lam.inverse())] += -coeff
    return JordanForm(cells)

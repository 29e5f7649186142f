"""
Jordan cells and Jordan canonical forms of exact matrices.

The form of a matrix is recovered from rank sequences, never from root finding: the caller passes
the eigenvalues (a :class:`Spectrum`) and the decomposition checks that their algebraic
multiplicities fill the whole dimension. With ``r_k = rank((A - lam I)**k)`` the number of cells of
size exactly ``k`` at ``lam`` is ``r_(k-1) - 2 r_k + r_(k+1)``.
"""

from collections import Counter, namedtuple

from openmdao.utils.om_warnings import issue_warning

from kloc.errors import IncompleteSpectrum, NonSquare, SingularCell
from kloc.exmat import (ExactMatrix, mat_direct_sum, mat_identity, mat_mul, mat_rank, mat_shift,
                        mat_zeros)
from kloc.gaussq import GaussianRational, ONE, ZERO


class JordanCell(namedtuple('JordanCell', ['size', 'eigenvalue'])):
    """
    Jordan cell of a given size and eigenvalue.

    Attributes
    ----------
    size : int
        Number of rows, at least 1.
    eigenvalue : GaussianRational
        Diagonal entry.
    """

    __slots__ = ()

    def __new__(cls, size, eigenvalue):
        if not isinstance(size, int) or isinstance(size, bool) or size < 1:
            msg = 'Jordan cell size must be a positive integer, got "{}".'
            raise ValueError(msg.format(size))
        return super(JordanCell, cls).__new__(cls, size, GaussianRational.from_value(eigenvalue))

    def is_invertible(self):
        return bool(self.eigenvalue)

    def sort_key(self):
        return self.eigenvalue.sort_key(), self.size

    def __str__(self):
        return 'J({}, {})'.format(self.size, self.eigenvalue)


def _as_cell(c):
    if isinstance(c, JordanCell):
        return c
    return JordanCell(*c)


class Spectrum(object):
    """
    Set of distinct eigenvalues, kept in the canonical scalar order.

    Attributes
    ----------
    eigenvalues : tuple(GaussianRational)
        Distinct eigenvalues.
    """

    __slots__ = ('eigenvalues',)

    def __init__(self, eigenvalues=()):
        """
        Initialize.

        Parameters
        ----------
        eigenvalues : iterable
            Values accepted by GaussianRational.from_value; duplicates are dropped.
        """
        values = set(GaussianRational.from_value(v) for v in eigenvalues)
        self.eigenvalues = tuple(sorted(values, key=GaussianRational.sort_key))

    @classmethod
    def coerce(cls, value):
        if isinstance(value, Spectrum):
            return value
        return cls(value)

    def __iter__(self):
        return iter(self.eigenvalues)

    def __len__(self):
        return len(self.eigenvalues)

    def __contains__(self, value):
        return GaussianRational.from_value(value) in self.eigenvalues

    def __eq__(self, other):
        if not isinstance(other, Spectrum):
            return NotImplemented
        return self.eigenvalues == other.eigenvalues

    def __hash__(self):
        return hash(self.eigenvalues)

    def __repr__(self):
        return 'Spectrum([{}])'.format(', '.join(str(v) for v in self.eigenvalues))

    def has_zero(self):
        return ZERO in self.eigenvalues

    def union(self, other):
        return Spectrum(self.eigenvalues + tuple(Spectrum.coerce(other)))


class JordanForm(object):
    """
    Multiset of Jordan cells. Equality ignores the order of the cells.

    Attributes
    ----------
    cells : dict(JordanCell, int)
        Multiplicity of every cell; all multiplicities are positive.
    """

    __slots__ = ('_cells',)

    def __init__(self, cells=()):
        """
        Initialize.

        Parameters
        ----------
        cells : dict or iterable
            Either a mapping from cells (or (size, eigenvalue) pairs) to multiplicities, or an
            iterable of cells, each counted once per occurrence.
        """
        counter = Counter()
        items = cells.items() if hasattr(cells, 'items') else ((c, 1) for c in cells)
        for cell, mult in items:
            if mult < 0:
                msg = 'Negative multiplicity {} for cell {}.'
                raise ValueError(msg.format(mult, cell))
            if mult:
                counter[_as_cell(cell)] += mult
        self._cells = dict(counter)

    @property
    def cells(self):
        return dict(self._cells)

    def items(self):
        """
        Cells with multiplicities, sorted by eigenvalue then size.

        Returns
        -------
            list(tuple(JordanCell, int))
        """
        return sorted(self._cells.items(), key=lambda item: item[0].sort_key())

    def multiplicity(self, size, eigenvalue):
        return self._cells.get(JordanCell(size, eigenvalue), 0)

    @property
    def dimension(self):
        return sum(cell.size * mult for cell, mult in self._cells.items())

    def __len__(self):
        return sum(self._cells.values())

    def __eq__(self, other):
        if not isinstance(other, JordanForm):
            return NotImplemented
        return self._cells == other._cells

    def __ne__(self, other):
        eq = self.__eq__(other)
        if eq is NotImplemented:
            return eq
        return not eq

    def __hash__(self):
        return hash(frozenset(self._cells.items()))

    def __add__(self, other):
        return form_union(self, other)

    def __repr__(self):
        txt = ', '.join('{}: {}'.format(cell, mult) for cell, mult in self.items())
        return 'JordanForm({{{}}})'.format(txt)


def cell_matrix(c):
    """
    Materialize a Jordan cell: eigenvalue on the diagonal, 1 on the superdiagonal.

    Parameters
    ----------
    c : JordanCell or tuple(int, scalar)
        The cell.

    Returns
    -------
        ExactMatrix
    """
    c = _as_cell(c)
    data = mat_zeros(c.size).copy_data()
    for i in range(c.size):
        data[i, i] = c.eigenvalue
        if i + 1 < c.size:
            data[i, i + 1] = ONE
    return ExactMatrix._wrap(data)


def nilpotent_power(n, k):
    """
    Closed form of the k-th power of the n x n shift matrix ``J(n, lam) - lam I``.

    The power has ones on the k-th superdiagonal and vanishes for k >= n.

    Parameters
    ----------
    n : int
        Matrix size, at least 1.
    k : int
        Non-negative exponent.

    Returns
    -------
        ExactMatrix
    """
    if n < 1 or k < 0:
        msg = 'Invalid nilpotent power size {} and exponent {}.'
        raise ValueError(msg.format(n, k))
    data = mat_zeros(n).copy_data()
    for i in range(n - k):
        data[i, i + k] = ONE
    return ExactMatrix._wrap(data)


def cell_inverse(c):
    """
    Closed-form inverse of a Jordan cell.

    ``J(n, lam)**-1 = sum_k (-1)**k / lam**(k+1) * M_n**k``, so the k-th superdiagonal is constant
    and equal to ``(-1)**k / lam**(k+1)``.

    Parameters
    ----------
    c : JordanCell or tuple(int, scalar)
        Cell with a nonzero eigenvalue.

    Returns
    -------
        ExactMatrix
    """
    c = _as_cell(c)
    if not c.is_invertible():
        msg = 'Jordan cell {} has eigenvalue 0 and is not invertible.'
        raise SingularCell(msg.format(c))
    n = c.size
    inv = c.eigenvalue.inverse()
    data = mat_zeros(n).copy_data()
    coeff = inv
    for k in range(n):
        for i in range(n - k):
            data[i, i + k] = coeff
        coeff = -coeff * inv
    return ExactMatrix._wrap(data)


def rank_sequence(a, lam, upto=None):
    """
    Ranks of the powers of ``a - lam I``, from the 0-th power until the sequence is constant.

    The returned list ends with two equal values (the first repeat), unless ``upto`` stops it
    earlier.

    Parameters
    ----------
    a : ExactMatrix
        Square matrix.
    lam : GaussianRational
        Shift.
    upto : int or None, optional
        Highest power to compute; by default powers are computed until the rank is stable.

    Returns
    -------
        list(int)
    """
    if not a.is_square():
        msg = 'Rank sequences need a square matrix, got {}x{}.'
        raise NonSquare(msg.format(a.rows, a.cols))
    shifted = mat_shift(a, lam)
    ranks = [a.rows]
    power = mat_identity(a.rows)
    k = 0
    while upto is None or k < upto:
        power = mat_mul(power, shifted)
        k += 1
        ranks.append(mat_rank(power))
        if upto is None and ranks[-1] == ranks[-2]:
            break
    return ranks


def algebraic_multiplicity(a, lam):
    return a.rows - rank_sequence(a, lam)[-1]


def jordan_rank(a, lam):
    """
    Size of the largest Jordan cell of ``a`` at ``lam``.

    This is the smallest k with ``rank((a - lam I)**k) == rank((a - lam I)**(k+1))``; for a single
    cell it is the cell size, and it is 0 when ``lam`` is not an eigenvalue.

    Parameters
    ----------
    a : ExactMatrix
        Square matrix.
    lam : GaussianRational
        Eigenvalue.

    Returns
    -------
        int
    """
    return len(rank_sequence(a, lam)) - 2


def _cell_counts(ranks):
    # ranks = [r0, ..., rs, rs]; returns {size: count}
    counts = {}
    for k in range(1, len(ranks) - 1):
        count = ranks[k - 1] - 2 * ranks[k] + ranks[k + 1]
        if count:
            counts[k] = count
    return counts


def jordan_decompose(a, spectrum):
    """
    Jordan canonical form of a square matrix whose eigenvalues are given.

    Parameters
    ----------
    a : ExactMatrix
        Square matrix.
    spectrum : Spectrum or iterable
        All eigenvalues of ``a``. Values that are not eigenvalues are ignored with a warning.

    Returns
    -------
        JordanForm
    """
    if not a.is_square():
        msg = 'Only square matrices have Jordan forms, got {}x{}.'
        raise NonSquare(msg.format(a.rows, a.cols))
    spectrum = Spectrum.coerce(spectrum)
    n = a.rows
    cells = {}
    found = 0
    for lam in spectrum:
        ranks = rank_sequence(a, lam)
        multiplicity = n - ranks[-1]
        if multiplicity == 0:
            issue_warning('{} is not an eigenvalue of the matrix and is ignored.'.format(lam))
            continue
        found += multiplicity
        for size, count in _cell_counts(ranks).items():
            cells[JordanCell(size, lam)] = count
    if found != n:
        deficit = n - found
        msg = 'Eigenvalues [{}] account for {} of {} dimensions; {} are missing.'
        listed = ', '.join(str(v) for v in spectrum.eigenvalues)
        raise IncompleteSpectrum(msg.format(listed, found, n, deficit), deficit=deficit)
    return JordanForm(cells)


def compose(f):
    """
    Direct sum of the cells of a form, sorted by eigenvalue then size.

    Parameters
    ----------
    f : JordanForm
        The form.

    Returns
    -------
        ExactMatrix
    """
    blocks = []
    for cell, mult in f.items():
        blocks.extend([cell_matrix(cell)] * mult)
    return mat_direct_sum(*blocks)


def form_union(f, g):
    cells = Counter(f.cells)
    cells.update(g.cells)
    return JordanForm(cells)


def form_spectrum(f):
    return Spectrum(cell.eigenvalue for cell in f.cells)


def inverse_form(f):
    """
    Jordan form of the inverse: every cell J(n, lam) becomes J(n, 1/lam).

    Parameters
    ----------
    f : JordanForm
        Form of an invertible matrix.

    Returns
    -------
        JordanForm
    """
    cells = {}
    for cell, mult in f.cells.items():
        if not cell.is_invertible():
            msg = 'Jordan form contains the singular cell {}.'
            raise SingularCell(msg.format(cell))
        cells[JordanCell(cell.size, cell.eigenvalue.inverse())] = mult
    return JordanForm(cells)

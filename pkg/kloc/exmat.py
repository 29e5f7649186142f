"""
Dense exact matrices over the Gaussian rationals.

Entries are :class:`~kloc.gaussq.GaussianRational` values held in a read-only numpy object array,
so every product, rank and inverse is computed without rounding. Elimination takes the first
nonzero entry of a column as the pivot; with exact arithmetic no pivoting heuristics are needed.

The 0x0 matrix is a legal value and is the unit of the direct sum.
"""

import numpy as np

from kloc.errors import DimensionMismatch, NonSquare, NotInvertible
from kloc.gaussq import GaussianRational, ONE, ZERO


class ExactMatrix(object):
    """
    Immutable dense matrix with Gaussian rational entries.

    Attributes
    ----------
    rows : int
        Number of rows.
    cols : int
        Number of columns.
    """

    __slots__ = ('_data',)

    def __init__(self, entries, rows=None, cols=None):
        """
        Initialize.

        Parameters
        ----------
        entries : array-like
            Rows of entries (anything accepted by GaussianRational.from_value), or a numpy array.
        rows : int or None, optional
            Number of rows; needed only to give the shape of empty matrices.
        cols : int or None, optional
            Number of columns; needed only to give the shape of empty matrices.
        """
        if isinstance(entries, np.ndarray) and entries.ndim == 2:
            data = np.empty(entries.shape, dtype=object)
            for idx, value in np.ndenumerate(entries):
                data[idx] = GaussianRational.from_value(value)
        else:
            entries = [list(row) for row in entries]
            nrows = len(entries) if rows is None else rows
            if nrows != len(entries):
                msg = 'Expected {} rows, got {}.'
                raise DimensionMismatch(msg.format(nrows, len(entries)))
            if cols is None:
                cols = len(entries[0]) if entries else 0
            data = np.empty((nrows, cols), dtype=object)
            for i, row in enumerate(entries):
                if len(row) != cols:
                    msg = 'Row {} has {} entries, expected {}.'
                    raise DimensionMismatch(msg.format(i, len(row), cols))
                for j, value in enumerate(row):
                    data[i, j] = GaussianRational.from_value(value)
        data.flags.writeable = False
        object.__setattr__(self, '_data', data)

    def __setattr__(self, key, value):
        raise AttributeError('ExactMatrix is immutable.')

    @classmethod
    def _wrap(cls, data):
        # data must be a 2D object array of GaussianRational; it is frozen, not copied.
        mat = object.__new__(cls)
        data.flags.writeable = False
        object.__setattr__(mat, '_data', data)
        return mat

    @property
    def rows(self):
        return self._data.shape[0]

    @property
    def cols(self):
        return self._data.shape[1]

    @property
    def shape(self):
        return self._data.shape

    @property
    def data(self):
        """
        Read-only numpy object array of the entries.

        Returns
        -------
            numpy.ndarray
        """
        return self._data

    def is_square(self):
        return self.rows == self.cols

    def __getitem__(self, idx):
        return self._data[idx]

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if self.shape != other.shape:
            return False
        return bool((self._data == other._data).all())

    def __ne__(self, other):
        eq = self.__eq__(other)
        if eq is NotImplemented:
            return eq
        return not eq

    def __hash__(self):
        return hash((self.shape, tuple(self._data.flat)))

    def __repr__(self):
        return 'ExactMatrix({})'.format(self.to_rows())

    def __add__(self, other):
        return mat_add(self, other)

    def __sub__(self, other):
        return mat_sub(self, other)

    def __matmul__(self, other):
        return mat_mul(self, other)

    def __neg__(self):
        return mat_scale(self, -ONE)

    def to_rows(self):
        """
        Entries as nested lists of canonical scalar strings.

        Returns
        -------
            list(list(str))
        """
        return [[str(value) for value in row] for row in self._data]

    def copy_data(self):
        """
        Writeable copy of the entry array, for elimination.

        Returns
        -------
            numpy.ndarray
        """
        return self._data.copy()


def _check_square(a, what='Matrix'):
    if not a.is_square():
        msg = '{} must be square, got shape {}x{}.'
        raise NonSquare(msg.format(what, a.rows, a.cols))


def _filled(rows, cols, value=ZERO):
    return np.full((rows, cols), value, dtype=object)


def mat_zeros(rows, cols=None):
    if cols is None:
        cols = rows
    return ExactMatrix._wrap(_filled(rows, cols))


def mat_identity(n):
    """
    Identity matrix of size n.

    Parameters
    ----------
    n : int
        Size; 0 gives the empty matrix.

    Returns
    -------
        ExactMatrix
    """
    data = _filled(n, n)
    for i in range(n):
        data[i, i] = ONE
    return ExactMatrix._wrap(data)


def mat_diag(values):
    values = [GaussianRational.from_value(v) for v in values]
    n = len(values)
    data = _filled(n, n)
    for i, value in enumerate(values):
        data[i, i] = value
    return ExactMatrix._wrap(data)


def mat_from_rows(rows, cols=None):
    return ExactMatrix(rows, cols=cols)


def mat_add(a, b):
    if a.shape != b.shape:
        msg = 'Cannot add matrices of shapes {} and {}.'
        raise DimensionMismatch(msg.format(a.shape, b.shape))
    return ExactMatrix._wrap(a.data + b.data)


def mat_sub(a, b):
    if a.shape != b.shape:
        msg = 'Cannot subtract matrices of shapes {} and {}.'
        raise DimensionMismatch(msg.format(a.shape, b.shape))
    return ExactMatrix._wrap(a.data - b.data)


def mat_scale(a, factor):
    factor = GaussianRational.from_value(factor)
    data = _filled(a.rows, a.cols)
    for idx, value in np.ndenumerate(a.data):
        data[idx] = factor * value
    return ExactMatrix._wrap(data)


def mat_shift(a, lam):
    """
    Return ``a - lam * I``.

    Parameters
    ----------
    a : ExactMatrix
        Square matrix.
    lam : GaussianRational
        Scalar subtracted from the diagonal.

    Returns
    -------
        ExactMatrix
    """
    _check_square(a)
    lam = GaussianRational.from_value(lam)
    data = a.copy_data()
    for i in range(a.rows):
        data[i, i] = data[i, i] - lam
    return ExactMatrix._wrap(data)


def mat_mul(a, b):
    """
    Exact matrix product.

    Zero entries of ``a`` are skipped, which keeps products of cell-built matrices cheap.

    Parameters
    ----------
    a : ExactMatrix
        Left factor.
    b : ExactMatrix
        Right factor; b.rows must equal a.cols.

    Returns
    -------
        ExactMatrix
    """
    if a.cols != b.rows:
        msg = 'Cannot multiply a {}x{} matrix by a {}x{} matrix.'
        raise DimensionMismatch(msg.format(a.rows, a.cols, b.rows, b.cols))
    out = _filled(a.rows, b.cols)
    bdata = b.data
    for i in range(a.rows):
        acc = None
        for k, value in enumerate(a.data[i]):
            if not value:
                continue
            term = bdata[k] * value
            acc = term if acc is None else acc + term
        if acc is not None:
            out[i] = acc
    return ExactMatrix._wrap(out)


def mat_power(a, k):
    """
    Exact k-th power by repeated squaring; ``a**0`` is the identity.

    Parameters
    ----------
    a : ExactMatrix
        Square matrix.
    k : int
        Non-negative exponent.

    Returns
    -------
        ExactMatrix
    """
    _check_square(a)
    if k < 0:
        msg = 'Exponent must be non-negative, got {}.'
        raise ValueError(msg.format(k))
    result = mat_identity(a.rows)
    base = a
    while k:
        if k & 1:
            result = mat_mul(result, base)
        k >>= 1
        if k:
            base = mat_mul(base, base)
    return result


def _echelon(data):
    # In-place forward elimination on a writeable object array; returns the pivot columns.
    nrows, ncols = data.shape
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pivot = next((i for i in range(r, nrows) if data[i, c]), None)
        if pivot is None:
            continue
        if pivot != r:
            data[[r, pivot]] = data[[pivot, r]]
        inv = data[r, c].inverse()
        for i in range(r + 1, nrows):
            if data[i, c]:
                factor = data[i, c] * inv
                data[i, c:] = data[i, c:] - data[r, c:] * factor
        pivots.append(c)
        r += 1
    return pivots


def mat_rank(a):
    """
    Exact rank by Gaussian elimination.

    Parameters
    ----------
    a : ExactMatrix
        Any matrix.

    Returns
    -------
        int
    """
    if a.rows == 0 or a.cols == 0:
        return 0
    return len(_echelon(a.copy_data()))


def mat_inverse(a):
    """
    Exact two-sided inverse by Gauss-Jordan elimination.

    Parameters
    ----------
    a : ExactMatrix
        Square matrix of full rank.

    Returns
    -------
        ExactMatrix
    """
    _check_square(a)
    n = a.rows
    x = a.copy_data()
    y = mat_identity(n).copy_data()

    # downward elimination: zero the lower triangle and make the diagonal 1
    for i in range(n):
        pivot = next((j for j in range(i, n) if x[j, i]), None)
        if pivot is None:
            msg = 'Matrix is not invertible: no pivot in column {}.'
            raise NotInvertible(msg.format(i))
        if pivot != i:
            x[[i, pivot]] = x[[pivot, i]]
            y[[i, pivot]] = y[[pivot, i]]
        inv = x[i, i].inverse()
        x[i, :] = x[i, :] * inv
        y[i, :] = y[i, :] * inv
        for j in range(i + 1, n):
            if x[j, i]:
                factor = x[j, i]
                y[j, :] = y[j, :] - y[i, :] * factor
                x[j, :] = x[j, :] - x[i, :] * factor

    # upward elimination: zero the upper triangle
    for j in range(n - 2, -1, -1):
        for i in range(j + 1, n):
            if x[j, i]:
                factor = x[j, i]
                y[j, :] = y[j, :] - y[i, :] * factor
                x[j, :] = x[j, :] - x[i, :] * factor
    return ExactMatrix._wrap(y)


def mat_direct_sum(*mats):
    """
    Block-diagonal direct sum of square matrices.

    Parameters
    ----------
    *mats : ExactMatrix
        Square blocks, placed top-left to bottom-right.

    Returns
    -------
        ExactMatrix
    """
    for a in mats:
        _check_square(a, what='Direct sum operand')
    n = sum(a.rows for a in mats)
    data = _filled(n, n)
    offset = 0
    for a in mats:
        m = a.rows
        data[offset:offset + m, offset:offset + m] = a.data
        offset += m
    return ExactMatrix._wrap(data)


def mat_conjugate(a, p):
    """
    Return ``p @ a @ inverse(p)``.

    Parameters
    ----------
    a : ExactMatrix
        Square matrix.
    p : ExactMatrix
        Invertible matrix of the same size.

    Returns
    -------
        ExactMatrix
    """
    _check_square(a)
    if p.shape != a.shape:
        msg = 'Conjugator of shape {} does not match matrix of shape {}.'
        raise DimensionMismatch(msg.format(p.shape, a.shape))
    return mat_mul(mat_mul(p, a), mat_inverse(p))


def mat_is_idempotent(a):
    return a.is_square() and mat_mul(a, a) == a


def mat_vec_rank(mats):
    """
    Rank of a list of equally shaped matrices viewed as vectors.

    Parameters
    ----------
    mats : list(ExactMatrix)
        Matrices to flatten into the rows of a stacked matrix.

    Returns
    -------
        int
    """
    if not mats:
        return 0
    shape = mats[0].shape
    for m in mats:
        if m.shape != shape:
            msg = 'Cannot stack matrices of shapes {} and {}.'
            raise DimensionMismatch(msg.format(shape, m.shape))
    stacked = _filled(len(mats), shape[0] * shape[1])
    for i, m in enumerate(mats):
        stacked[i, :] = m.data.reshape(-1)
    return mat_rank(ExactMatrix._wrap(stacked))

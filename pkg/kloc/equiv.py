"""
Executable forms of the relations that define K1: stabilization, conjugation and padding by
``u + u**-1``, plus seeded random pipelines of them used to check that K1 classes are invariant.

Conjugators are products of elementary row operations with small entries. They are exactly
invertible by construction, and conjugating by one is done operation by operation (a row operation
followed by the inverse column operation), so no matrix inverse is ever formed in a pipeline.
"""

from collections import namedtuple

import numpy as np
from openmdao.utils.om_warnings import issue_warning

from kloc.errors import KLocError, NonSquare, NotInvertible, VerificationError
from kloc.exmat import ExactMatrix, mat_direct_sum, mat_identity, mat_inverse, mat_rank
from kloc.gaussq import GaussianRational, I, MINUS_ONE, ONE, ZERO
from kloc.jordan import JordanCell, JordanForm, Spectrum, compose
from kloc.ktheory import k1_class

# Pipelines never grow a matrix beyond this size.
_MAX_PIPELINE_SIZE = 48
# Extra steps drawn on top of one step of each kind.
_MAX_EXTRA_STEPS = 3
_MAX_STABILIZE = 3
# Padding blocks are built from this many cells of at most this size.
_MAX_PAD_CELLS = 2
_MAX_PAD_CELL_SIZE = 2
# Eigenvalues offered to padding blocks besides the spectrum of the matrix.
_EXTRA_PAD_EIGENVALUES = (GaussianRational(2), I, MINUS_ONE)
# Entries of elementary operations in random conjugators.
_CONJUGATOR_ENTRIES = (ONE, MINUS_ONE, GaussianRational(2), GaussianRational(-2), I, -I,
                       GaussianRational(1, 1), GaussianRational(1, -1))

_SHEAR = 'shear'
_SCALE = 'scale'
_SWAP = 'swap'


def _check_square(a):
    if not a.is_square():
        msg = 'Equivalence transforms need a square matrix, got {}x{}.'
        raise NonSquare(msg.format(a.rows, a.cols))


def stabilize(a, k):
    """
    Stabilization ``a + 1_k`` (direct sum with the identity).

    Parameters
    ----------
    a : ExactMatrix
        Square matrix.
    k : int
        Size of the appended identity; 0 returns ``a``.

    Returns
    -------
        ExactMatrix
    """
    _check_square(a)
    if k == 0:
        return a
    return mat_direct_sum(a, mat_identity(k))


def opad(a, u):
    """
    Pad ``a`` with ``u + u**-1``, a block representing zero in K1.

    Parameters
    ----------
    a : ExactMatrix
        Square matrix.
    u : ExactMatrix
        Invertible matrix.

    Returns
    -------
        ExactMatrix
    """
    _check_square(a)
    return mat_direct_sum(a, u, mat_inverse(u))


def _conjugator_ops(n, seed):
    # Deterministic list of elementary operations (kind, i, j, factor).
    if n == 0:
        return []
    rng = np.random.default_rng(seed)
    ops = []
    nr_ops = int(rng.integers(n, 3 * n + 1))
    kinds = (_SHEAR, _SCALE, _SWAP) if n > 1 else (_SCALE,)
    for _ in range(nr_ops):
        kind = kinds[int(rng.integers(len(kinds)))]
        factor = _CONJUGATOR_ENTRIES[int(rng.integers(len(_CONJUGATOR_ENTRIES)))]
        i = int(rng.integers(n))
        j = int(rng.integers(n - 1)) if n > 1 else 0
        if j >= i:
            j += 1
        ops.append((kind, i, j, factor))
    return ops


def _row_op(data, op):
    kind, i, j, factor = op
    if kind == _SHEAR:
        data[i, :] = data[i, :] + data[j, :] * factor
    elif kind == _SCALE:
        data[i, :] = data[i, :] * factor
    else:
        data[[i, j], :] = data[[j, i], :]


def _inverse_col_op(data, op):
    kind, i, j, factor = op
    if kind == _SHEAR:
        data[:, j] = data[:, j] - data[:, i] * factor
    elif kind == _SCALE:
        data[:, i] = data[:, i] * factor.inverse()
    else:
        data[:, [i, j]] = data[:, [j, i]]


def random_conjugator(n, seed):
    """
    Deterministic invertible n x n matrix built from elementary row operations.

    Parameters
    ----------
    n : int
        Size.
    seed : int
        Non-negative seed.

    Returns
    -------
        ExactMatrix
    """
    data = mat_identity(n).copy_data()
    for op in _conjugator_ops(n, seed):
        _row_op(data, op)
    return ExactMatrix._wrap(data)


def conjugate_by_seed(a, seed):
    """
    Return ``P a P**-1`` for ``P = random_conjugator(a.rows, seed)``.

    Parameters
    ----------
    a : ExactMatrix
        Square matrix.
    seed : int
        Seed of the conjugator.

    Returns
    -------
        ExactMatrix
    """
    _check_square(a)
    data = a.copy_data()
    for op in _conjugator_ops(a.rows, seed):
        _row_op(data, op)
        _inverse_col_op(data, op)
    return ExactMatrix._wrap(data)


class EquivTransform(object):
    """
    All equivalence transforms inherit from this base class.

    Attributes
    ----------
    kind : str
        Name of the transform.
    """

    kind = None

    def apply(self, a):
        """
        Apply the transform to a matrix.

        Parameters
        ----------
        a : ExactMatrix
            Square matrix.

        Returns
        -------
            ExactMatrix
        """
        raise NotImplementedError  # Implement in child class

    def growth(self):
        """
        Number of rows the transform adds.

        Returns
        -------
            int
        """
        return 0

    def eigenvalues(self):
        """
        Eigenvalues the transform adds to the spectrum.

        Returns
        -------
            Spectrum
        """
        return Spectrum()


class Stabilize(EquivTransform):
    """
    Direct sum with the k x k identity.

    Attributes
    ----------
    k : int
        Size of the identity, at least 1.
    """

    kind = 'stabilize'

    def __init__(self, k):
        if k < 1:
            msg = 'Stabilization size must be at least 1, got {}.'
            raise ValueError(msg.format(k))
        self.k = k

    def apply(self, a):
        return stabilize(a, self.k)

    def growth(self):
        return self.k

    def eigenvalues(self):
        return Spectrum([ONE])

    def __eq__(self, other):
        return isinstance(other, Stabilize) and other.k == self.k

    def __repr__(self):
        return 'Stabilize({})'.format(self.k)


class Conjugate(EquivTransform):
    """
    Conjugation by ``random_conjugator(size, seed)``.

    Attributes
    ----------
    seed : int
        Seed of the conjugator.
    """

    kind = 'conjugate'

    def __init__(self, seed):
        self.seed = seed

    def apply(self, a):
        return conjugate_by_seed(a, self.seed)

    def __eq__(self, other):
        return isinstance(other, Conjugate) and other.seed == self.seed

    def __repr__(self):
        return 'Conjugate({})'.format(self.seed)


class OPad(EquivTransform):
    """
    Direct sum with ``u + u**-1``.

    Attributes
    ----------
    u : ExactMatrix
        Invertible padding matrix.
    spectrum : Spectrum
        Eigenvalues of ``u``.
    """

    kind = 'opad'

    def __init__(self, u, spectrum):
        """
        Initialize.

        Parameters
        ----------
        u : ExactMatrix
            Invertible padding matrix.
        spectrum : Spectrum or iterable
            Eigenvalues of ``u``, used to decompose padded matrices.
        """
        if not u.is_square() or mat_rank(u) != u.rows:
            raise NotInvertible('Padding matrix u must be invertible.')
        self.u = u
        self.spectrum = Spectrum.coerce(spectrum)

    def apply(self, a):
        return opad(a, self.u)

    def growth(self):
        return 2 * self.u.rows

    def eigenvalues(self):
        return self.spectrum.union(v.inverse() for v in self.spectrum)

    def __eq__(self, other):
        return isinstance(other, OPad) and other.u == self.u

    def __repr__(self):
        return 'OPad({}x{})'.format(self.u.rows, self.u.cols)


class TransformTrace(object):
    """
    Record of a pipeline run: replaying ``steps`` on ``initial`` gives ``final``.

    Attributes
    ----------
    initial : ExactMatrix
        Starting matrix.
    steps : list(EquivTransform)
        Applied transforms, in order.
    final : ExactMatrix
        Result.
    """

    def __init__(self, initial, steps=(), final=None):
        self.initial = initial
        self.steps = list(steps)
        self.final = final

    @classmethod
    def record(cls, initial, steps):
        """
        Run a pipeline and record it.

        Parameters
        ----------
        initial : ExactMatrix
            Starting matrix.
        steps : list(EquivTransform)
            Transforms to apply.

        Returns
        -------
            TransformTrace
        """
        steps = list(steps)
        return cls(initial, steps, replay_steps(initial, steps))

    def replay(self):
        return replay_steps(self.initial, self.steps)

    def spectrum(self, initial_spectrum):
        """
        Spectrum of the final matrix, given the spectrum of the initial one.

        Parameters
        ----------
        initial_spectrum : Spectrum or iterable
            Eigenvalues of the initial matrix.

        Returns
        -------
            Spectrum
        """
        spectrum = Spectrum.coerce(initial_spectrum)
        for step in self.steps:
            spectrum = spectrum.union(step.eigenvalues())
        return spectrum


def apply_transform(a, step):
    return step.apply(a)


def replay_steps(a, steps):
    for step in steps:
        a = step.apply(a)
    return a


def replay(trace):
    return trace.replay()


def _random_pad(rng, pool):
    nr_cells = int(rng.integers(1, _MAX_PAD_CELLS + 1))
    cells = []
    for _ in range(nr_cells):
        size = int(rng.integers(1, _MAX_PAD_CELL_SIZE + 1))
        lam = pool[int(rng.integers(len(pool)))]
        cells.append(JordanCell(size, lam))
    form = JordanForm(cells)
    u = conjugate_by_seed(compose(form), int(rng.integers(2 ** 31)))
    return OPad(u, Spectrum(cell.eigenvalue for cell in cells))


def random_pipeline(size, spectrum, seed):
    """
    Seeded shuffle of stabilize, conjugate and opad steps.

    Every pipeline has at least one step of each kind. Padding blocks are cell-built matrices
    whose eigenvalues come from the spectrum and the extra pad eigenvalues. Steps that would grow
    the matrix beyond the size cap are dropped with a warning.

    Parameters
    ----------
    size : int
        Size of the matrix the pipeline will be applied to.
    spectrum : Spectrum or iterable
        Eigenvalues of that matrix.
    seed : int
        Non-negative seed.

    Returns
    -------
        list(EquivTransform)
    """
    rng = np.random.default_rng(seed)
    pool = [v for v in Spectrum.coerce(spectrum).union(_EXTRA_PAD_EIGENVALUES) if v != ZERO]
    kinds = [Stabilize.kind, Conjugate.kind, OPad.kind]
    kinds += [kinds[int(rng.integers(3))] for _ in range(int(rng.integers(_MAX_EXTRA_STEPS + 1)))]
    rng.shuffle(kinds)

    steps = []
    for kind in kinds:
        if kind == Stabilize.kind:
            step = Stabilize(int(rng.integers(1, _MAX_STABILIZE + 1)))
        elif kind == Conjugate.kind:
            step = Conjugate(int(rng.integers(2 ** 31)))
        else:
            step = _random_pad(rng, pool)
        if size + step.growth() > _MAX_PIPELINE_SIZE:
            msg = 'Pipeline step {} skipped: size {} would exceed the cap of {}.'
            issue_warning(msg.format(step, size + step.growth(), _MAX_PIPELINE_SIZE))
            continue
        size += step.growth()
        steps.append(step)
    return steps


def derive_seed(seed, index):
    """
    Independent seed of trial ``index`` of a run seeded with ``seed``.

    Parameters
    ----------
    seed : int
        Run seed.
    index : int
        Trial index.

    Returns
    -------
        int
    """
    return int(np.random.SeedSequence([seed, index]).generate_state(1)[0])


class VerificationReport(namedtuple('VerificationReport',
                                    ['status', 'suite', 'trials', 'checks', 'k1', 'failure_trace',
                                     'detail'])):
    """
    Outcome of a verification run.

    Attributes
    ----------
    status : str
        'pass' or 'fail'.
    suite : str or None
        Name of the suite.
    trials : int
        Number of trials run.
    checks : int
        Number of individual checks that passed.
    k1 : K1Class or None
        Class that was verified to be invariant, if any.
    failure_trace : TransformTrace or None
        Pipeline that broke invariance.
    detail : str or None
        Description of the failure.
    """

    __slots__ = ()

    PASS = 'pass'
    FAIL = 'fail'

    @property
    def passed(self):
        return self.status == self.PASS


def verify_invariance(a, spectrum, trials, seed, suite=None):
    """
    Check that random equivalence pipelines preserve the K1 class of ``a``.

    Parameters
    ----------
    a : ExactMatrix
        Invertible matrix.
    spectrum : Spectrum or iterable
        All eigenvalues of ``a``.
    trials : int
        Number of pipelines.
    seed : int
        Non-negative seed; trial t uses ``derive_seed(seed, t)``.
    suite : str or None, optional
        Suite name recorded in the report.

    Returns
    -------
        VerificationReport
    """
    spectrum = Spectrum.coerce(spectrum)
    expected = k1_class(a, spectrum)
    for trial in range(trials):
        steps = random_pipeline(a.rows, spectrum, derive_seed(seed, trial))
        trace = TransformTrace(a, steps)
        try:
            trace.final = trace.replay()
            found = k1_class(trace.final, trace.spectrum(spectrum))
        except KLocError as err:
            msg = 'Trial {} failed with {}: {}'
            raise VerificationError(msg.format(trial, type(err).__name__, err), trace=trace)
        if found != expected:
            msg = 'Trial {}: class changed from {} to {}.'
            return VerificationReport(VerificationReport.FAIL, suite, trial + 1, trial, expected,
                                      trace, msg.format(trial, expected, found))
    return VerificationReport(VerificationReport.PASS, suite, trials, trials, expected, None, None)

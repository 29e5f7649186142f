"""
Named verification suites run by ``kloc verify <suite>``.

Each suite takes ``(trials, seed, size)`` and returns a :class:`~kloc.equiv.VerificationReport`.
The deterministic grid of a suite always runs; ``trials`` adds seeded random cases on top of it and
``size`` bounds the matrix or cell size.
"""

from fractions import Fraction

import numpy as np

from kloc.equiv import VerificationReport, conjugate_by_seed, derive_seed, opad, verify_invariance
from kloc.exmat import (mat_diag, mat_direct_sum, mat_identity, mat_inverse, mat_power, mat_rank,
                        mat_scale, mat_shift, mat_sub, mat_vec_rank, mat_zeros)
from kloc.gaussq import GaussianRational, I, MINUS_ONE, ONE, gq_parse
from kloc.jordan import (JordanCell, JordanForm, cell_inverse, cell_matrix, compose,
                         form_spectrum, inverse_form, jordan_decompose, jordan_rank,
                         nilpotent_power)
from kloc.ktheory import (K1Class, k0_class, k1_class, k1_class_of_form, k1_neg, k1_representative,
                          k1_zero)

# Eigenvalues every grid-based suite runs over.
EIGENVALUE_GRID = tuple(gq_parse(s) for s in ('2', '1/2', '-1', 'i', '1+i', '3/2-1/4i'))
# Largest size of idempotents in the k0 suite and largest rank tried.
_K0_MAX_SIZE = 8
_K0_MAX_RANK = 6
# Number of seed matrices in the equiv suite.
_EQUIV_SEED_MATRICES = 10
_MAX_RANDOM_CELLS = 3


class _Checks(object):
    """
    Counts passed checks and keeps the first failure.
    """

    def __init__(self, suite):
        self.suite = suite
        self.passed = 0
        self.failure = None

    def check(self, ok, what):
        if ok:
            self.passed += 1
        elif self.failure is None:
            self.failure = what
        return ok

    @property
    def failed(self):
        return self.failure is not None

    def report(self, trials, k1=None, trace=None):
        if self.failure is None:
            return VerificationReport(VerificationReport.PASS, self.suite, trials, self.passed, k1,
                                      None, None)
        return VerificationReport(VerificationReport.FAIL, self.suite, trials, self.passed, k1,
                                  trace, self.failure)


def random_scalar(rng, nonzero=True):
    """
    Small random Gaussian rational.

    Parameters
    ----------
    rng : numpy.random.Generator
        Generator.
    nonzero : bool, optional
        Redraw until the value is nonzero.

    Returns
    -------
        GaussianRational
    """
    while True:
        re = Fraction(int(rng.integers(-4, 5)), int(rng.integers(1, 4)))
        im = Fraction(int(rng.integers(-4, 5)), int(rng.integers(1, 4))) if rng.integers(2) else 0
        value = GaussianRational(re, im)
        if value or not nonzero:
            return value


def random_form(rng, max_dim, pool=None):
    """
    Random Jordan form of an invertible matrix of dimension at most ``max_dim``.

    Parameters
    ----------
    rng : numpy.random.Generator
        Generator.
    max_dim : int
        Upper bound of the dimension, at least 1.
    pool : list(GaussianRational) or None, optional
        Eigenvalues to draw from; random nonzero scalars if None.

    Returns
    -------
        JordanForm
    """
    cells = []
    dim = 0
    for _ in range(int(rng.integers(1, _MAX_RANDOM_CELLS + 1))):
        room = max_dim - dim
        if room < 1:
            break
        size = int(rng.integers(1, min(room, 3) + 1))
        lam = pool[int(rng.integers(len(pool)))] if pool else random_scalar(rng)
        cells.append(JordanCell(size, lam))
        dim += size
    return JordanForm(cells)


def _cell_build(f, seed):
    return conjugate_by_seed(compose(f), seed)


def _single_cell_checks(checks, n, lam):
    cell = JordanCell(n, lam)
    inv = cell_inverse(cell)
    lam_inv = lam.inverse()
    decomposed = jordan_decompose(inv, [lam_inv])
    checks.check(decomposed == JordanForm({JordanCell(n, lam_inv): 1}),
                 'Jordan form of J({}, {})^-1 is {}'.format(n, lam, decomposed))
    shifted = mat_shift(cell_matrix(cell), lam)
    inv_shifted = mat_sub(mat_scale(mat_identity(n), lam_inv), inv)
    for k in range(1, n + 1):
        left = mat_rank(mat_power(shifted, k))
        right = mat_rank(mat_power(inv_shifted, k))
        checks.check(left == right == n - k,
                     'rank identity fails for J({}, {}) at power {}: {} != {}'.format(
                         n, lam, k, left, right))
    checks.check(jordan_rank(cell_matrix(cell), lam) == n,
                 'Jordan rank of J({}, {}) is not {}'.format(n, lam, n))
    checks.check(jordan_rank(inv, lam_inv) == n,
                 'Jordan rank of J({}, {})^-1 is not {}'.format(n, lam, n))


def lemma5(trials, seed, size):
    """
    The inverse of J(n, lam) has the Jordan form J(n, 1/lam).

    Checked by decomposing the closed-form inverse and by the rank identities
    ``rank((J - lam I)**k) == rank((1/lam I - J**-1)**k)``.
    """
    checks = _Checks('lemma5')
    for n in range(1, size + 1):
        for lam in EIGENVALUE_GRID:
            _single_cell_checks(checks, n, lam)
    rng = np.random.default_rng(seed)
    for _ in range(trials):
        _single_cell_checks(checks, int(rng.integers(1, size + 1)), random_scalar(rng))
    return checks.report(trials)


def lemma6(trials, seed, size):
    """
    ``u + u**-1`` has the paired Jordan form and represents zero in K1.
    """
    checks = _Checks('lemma6')
    for trial in range(trials):
        rng = np.random.default_rng(derive_seed(seed, trial))
        f = random_form(rng, max(size, 1))
        u = _cell_build(f, int(rng.integers(2 ** 31)))
        padded = opad(mat_zeros(0), u)
        spectrum = form_spectrum(f).union(form_spectrum(inverse_form(f)))
        found = jordan_decompose(padded, spectrum)
        checks.check(found == f + inverse_form(f),
                     'trial {}: J(u + u^-1) is {}, expected {}'.format(
                         trial, found, f + inverse_form(f)))
        k1 = k1_class(padded, spectrum)
        checks.check(k1.is_zero(), 'trial {}: class of u + u^-1 is {}'.format(trial, k1))
    return checks.report(trials)


def separation_catalog():
    """
    Twenty cell multisets with pairwise distinct classes.

    Returns
    -------
        list(JordanForm)
    """
    two, three, half = GaussianRational(2), GaussianRational(3), GaussianRational(Fraction(1, 2))
    one_i = gq_parse('1+i')
    specs = [
        [(1, 2)], [(1, 3)], [(2, 2)], [(1, I)], [(2, I)],
        [(1, -1)], [(2, -1)], [(3, -1)], [(2, 1)], [(3, 1)],
        [(1, -1), (2, -1)], [(2, 1), (1, -1)], [(1, 2), (1, 2)], [(1, half)], [(1, 2), (1, 3)],
        [(1, one_i)], [(2, one_i)], [(1, -I)], [(2, 2), (1, 3)], [(1, three), (2, two), (2, 1)],
    ]
    return [JordanForm([JordanCell(n, lam) for n, lam in cells]) for cells in specs]


def _relation_checks(checks, size):
    zero = k1_zero()
    checks.check(k1_class(cell_matrix((1, 1)), [ONE]) == zero, '[J(1, 1)] != 0')
    for n in range(1, size + 1):
        cell = cell_matrix((n, -1))
        single = k1_class(cell, [MINUS_ONE])
        double = k1_class(mat_direct_sum(cell, cell), [MINUS_ONE])
        checks.check(double == zero and single != zero,
                     '[J({}, -1)] does not have order 2'.format(n))
        if n >= 2:
            cell = cell_matrix((n, 1))
            single = k1_class(cell, [ONE])
            double = k1_class(mat_direct_sum(cell, cell), [ONE])
            checks.check(double == zero and single != zero,
                         '[J({}, 1)] does not have order 2'.format(n))
        for lam in EIGENVALUE_GRID:
            if lam == MINUS_ONE:
                continue
            pair = mat_direct_sum(cell_matrix((n, lam)), cell_matrix((n, lam.inverse())))
            found = k1_class(pair, [lam, lam.inverse()])
            checks.check(found == zero,
                         '[J({0}, {1})] + [J({0}, 1/{1})] is {2}'.format(n, lam, found))


def _reduction_checks(checks):
    for n in (1, 2, 3):
        for lam in (GaussianRational(2), I):
            for m1 in range(5):
                for m2 in range(5):
                    f = JordanForm({JordanCell(n, lam): m1, JordanCell(n, lam.inverse()): m2})
                    swapped = JordanForm({JordanCell(n, lam): m2,
                                          JordanCell(n, lam.inverse()): m1})
                    expected = K1Class(free={(n, lam): m1 - m2})
                    found = k1_class(compose(f), form_spectrum(f))
                    checks.check(found == expected and found == k1_neg(k1_class_of_form(swapped)),
                                 '{} copies of J({}, {}) and {} of the inverse cell give {}'.format(
                                     m1, n, lam, m2, found))


def lemma7(trials, seed, size):
    """
    Relations of K1 hold, and the catalog of distinct classes stays separated.
    """
    checks = _Checks('lemma7')
    _relation_checks(checks, size)
    _reduction_checks(checks)

    catalog = separation_catalog()
    classes = [k1_class(compose(f), form_spectrum(f)) for f in catalog]
    for i in range(len(classes)):
        for j in range(i + 1, len(classes)):
            checks.check(classes[i] != classes[j],
                         'catalog forms {} and {} share the class {}'.format(
                             catalog[i], catalog[j], classes[i]))

    for trial in range(trials):
        rng = np.random.default_rng(derive_seed(seed, trial))
        f = random_form(rng, max(size, 1))
        x = k1_class_of_form(f)
        rep = k1_representative(x)
        checks.check(k1_class_of_form(rep) == x,
                     'trial {}: representative of {} has class {}'.format(
                         trial, x, k1_class_of_form(rep)))
        a = _cell_build(f, int(rng.integers(2 ** 31)))
        checks.check(k1_class(mat_inverse(a), form_spectrum(inverse_form(f))) == k1_neg(x),
                     'trial {}: class of the inverse of {} is not {}'.format(trial, f, k1_neg(x)))
    return checks.report(trials)


def equiv(trials, seed, size):
    """
    Random stabilize/conjugate/opad pipelines preserve the K1 class of seed matrices.
    """
    checks = _Checks('equiv')
    per_matrix = -(-trials // _EQUIV_SEED_MATRICES)
    first_class = None
    done = 0
    pool = [v for v in EIGENVALUE_GRID] + [ONE]
    for index in range(_EQUIV_SEED_MATRICES):
        if done >= trials:
            break
        count = min(per_matrix, trials - done)
        rng = np.random.default_rng(derive_seed(seed, index))
        f = random_form(rng, max(size, 1), pool=pool)
        a = _cell_build(f, int(rng.integers(2 ** 31)))
        report = verify_invariance(a, form_spectrum(f), count, derive_seed(seed, 1000 + index),
                                   suite='equiv')
        if first_class is None:
            first_class = report.k1
        done += count
        checks.passed += report.checks
        if not report.passed:
            checks.check(False, report.detail)
            return checks.report(done, k1=report.k1, trace=report.failure_trace)
    return checks.report(done, k1=first_class)


def _inverse_formula_checks(checks, n, lam):
    found = cell_inverse((n, lam))
    expected = mat_inverse(cell_matrix((n, lam)))
    checks.check(found == expected, 'closed-form inverse of J({}, {}) differs'.format(n, lam))


def inverse_formula(trials, seed, size):
    """
    The closed-form cell inverse equals the elimination inverse; nilpotent powers match.
    """
    checks = _Checks('inverse-formula')
    for n in range(1, size + 1):
        shift = nilpotent_power(n, 1)
        for k in range(n + 3):
            checks.check(nilpotent_power(n, k) == mat_power(shift, k),
                         'closed-form power {} of M_{} differs'.format(k, n))
        if n > 1:
            powers = [nilpotent_power(n, k) for k in range(1, n)]
            checks.check(mat_vec_rank(powers) == n - 1,
                         'powers of M_{} are linearly dependent'.format(n))
        for lam in EIGENVALUE_GRID:
            _inverse_formula_checks(checks, n, lam)
    rng = np.random.default_rng(seed)
    for _ in range(trials):
        _inverse_formula_checks(checks, int(rng.integers(1, size + 1)), random_scalar(rng))
    return checks.report(trials)


def k0(trials, seed, size):
    """
    Conjugated diagonal idempotents have K0 class equal to their rank, stable under padding by 0.
    """
    checks = _Checks('k0')
    max_size = min(max(size, 1), _K0_MAX_SIZE)
    max_rank = min(max_size, _K0_MAX_RANK)
    rng = np.random.default_rng(seed)
    for rank in range(max_rank + 1):
        for _ in range(trials):
            n = int(rng.integers(max(rank, 1), max_size + 1))
            p = mat_diag([1] * rank + [0] * (n - rank))
            q = conjugate_by_seed(p, int(rng.integers(2 ** 31)))
            checks.check(k0_class(q).value == rank,
                         'conjugated idempotent of rank {} has class {}'.format(rank, k0_class(q)))
            padded = mat_direct_sum(q, mat_zeros(int(rng.integers(1, 4))))
            checks.check(k0_class(padded).value == rank,
                         'zero-padded idempotent of rank {} changed class'.format(rank))
    return checks.report(trials)


SUITES = {
    'lemma5': lemma5,
    'lemma6': lemma6,
    'lemma7': lemma7,
    'equiv': equiv,
    'inverse-formula': inverse_formula,
    'k0': k0,
}


def run_suite(name, trials, seed, size):
    """
    Run a named suite.

    Parameters
    ----------
    name : str
        One of the keys of SUITES.
    trials : int
        Random cases on top of the deterministic grid.
    seed : int
        Non-negative seed.
    size : int
        Size bound.

    Returns
    -------
        VerificationReport
    """
    try:
        suite = SUITES[name]
    except KeyError:
        msg = 'Unknown suite "{}", choose from: {}'
        raise ValueError(msg.format(name, ', '.join(sorted(SUITES))))
    return suite(trials, seed, size)

import unittest
import warnings

from kloc.equiv import (Conjugate, EquivTransform, OPad, Stabilize, TransformTrace,
                        VerificationReport, apply_transform, conjugate_by_seed, derive_seed, opad,
                        random_conjugator, random_pipeline, replay, stabilize, verify_invariance)
from kloc.errors import NonSquare, NotInvertible
from kloc.exmat import (mat_conjugate, mat_diag, mat_direct_sum, mat_from_rows, mat_identity,
                        mat_inverse, mat_rank, mat_zeros)
from kloc.gaussq import GaussianRational, I
from kloc.jordan import JordanForm, cell_matrix, compose, form_spectrum, jordan_decompose
from kloc.ktheory import k1_class, k1_zero


class TestTransforms(unittest.TestCase):

    def test_stabilize(self):
        self.assertEqual(stabilize(cell_matrix((1, 2)), 1), mat_diag([2, 1]))
        a = mat_from_rows([[1, 2], [3, 4]])
        self.assertIs(stabilize(a, 0), a)
        with self.assertRaises(NonSquare):
            stabilize(mat_zeros(1, 2), 1)

    def test_stabilize_keeps_class(self):
        a = mat_direct_sum(cell_matrix((2, 2)), cell_matrix((1, -1)))
        expected = k1_class(a, [2, -1])
        for k in range(1, 6):
            self.assertEqual(k1_class(stabilize(a, k), [2, -1, 1]), expected)

    def test_opad(self):
        u = cell_matrix((2, 3))
        padded = opad(mat_zeros(0), u)
        self.assertEqual(padded, mat_direct_sum(u, mat_inverse(u)))
        self.assertEqual(jordan_decompose(padded, [3, '1/3']),
                         JordanForm({(2, 3): 1, (2, '1/3'): 1}))
        self.assertEqual(k1_class(padded, [3, '1/3']), k1_zero())
        with self.assertRaises(NotInvertible):
            opad(mat_identity(1), cell_matrix((1, 0)))

    def test_conjugator(self):
        for n in range(0, 6):
            for seed in range(4):
                p = random_conjugator(n, seed)
                self.assertEqual(mat_rank(p), n)
                self.assertEqual(random_conjugator(n, seed), p)

    def test_conjugate_by_seed_matches_product(self):
        a = mat_from_rows([[1, 'i', 0], [2, 3, '1/2'], [0, '-i', 5]])
        for seed in range(6):
            self.assertEqual(conjugate_by_seed(a, seed),
                             mat_conjugate(a, random_conjugator(3, seed)))

    def test_transform_objects(self):
        a = cell_matrix((2, 2))
        u = cell_matrix((1, I))
        self.assertEqual(apply_transform(a, Stabilize(2)), stabilize(a, 2))
        self.assertEqual(apply_transform(a, Conjugate(7)), conjugate_by_seed(a, 7))
        self.assertEqual(apply_transform(a, OPad(u, [I])), opad(a, u))
        self.assertEqual(Stabilize(2).growth(), 2)
        self.assertEqual(Conjugate(7).growth(), 0)
        self.assertEqual(OPad(u, [I]).growth(), 2)
        self.assertEqual(list(OPad(u, [I]).eigenvalues()), [-I, I])
        with self.assertRaises(ValueError):
            Stabilize(0)
        with self.assertRaises(NotInvertible):
            OPad(cell_matrix((1, 0)), [0])
        with self.assertRaises(NotImplementedError):
            EquivTransform().apply(a)


class TestPipelines(unittest.TestCase):

    def test_deterministic(self):
        spectrum = [2, I]
        self.assertEqual(random_pipeline(3, spectrum, 5), random_pipeline(3, spectrum, 5))
        self.assertNotEqual(derive_seed(5, 0), derive_seed(5, 1))
        self.assertEqual(derive_seed(5, 3), derive_seed(5, 3))

    def test_every_kind(self):
        for seed in range(10):
            kinds = {step.kind for step in random_pipeline(2, [2], seed)}
            self.assertEqual(kinds, {'stabilize', 'conjugate', 'opad'})

    def test_size_cap(self):
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            steps = random_pipeline(47, [2], 0)
        self.assertTrue(any(str(w.message).startswith("Pipeline step") for w in caught))
        self.assertTrue(all(step.growth() <= 1 for step in steps))
        self.assertEqual([s for s in random_pipeline(48, [2], 0) if s.growth()], [])

    def test_trace_replay(self):
        a = mat_direct_sum(cell_matrix((2, 2)), cell_matrix((1, I)))
        steps = random_pipeline(a.rows, [2, I], 3)
        trace = TransformTrace.record(a, steps)
        self.assertEqual(replay(trace), trace.final)
        self.assertEqual(trace.final.rows, a.rows + sum(step.growth() for step in steps))
        spectrum = trace.spectrum([2, I])
        self.assertIn(1, spectrum)
        self.assertEqual(k1_class(trace.final, spectrum), k1_class(a, [2, I]))


class TestVerifyInvariance(unittest.TestCase):

    def test_pass(self):
        f = JordanForm({(2, 2): 1, (1, -1): 1, (1, '1+i'): 1})
        a = conjugate_by_seed(compose(f), 1)
        report = verify_invariance(a, form_spectrum(f), 10, 3, suite='equiv')
        self.assertTrue(report.passed)
        self.assertEqual(report.status, VerificationReport.PASS)
        self.assertEqual(report.trials, 10)
        self.assertEqual(report.checks, 10)
        self.assertEqual(report.suite, 'equiv')
        self.assertEqual(report.k1, k1_class(a, form_spectrum(f)))
        self.assertIsNone(report.failure_trace)

    def test_reproducible(self):
        a = mat_diag([2, GaussianRational(3)])
        first = verify_invariance(a, [2, 3], 4, 9)
        second = verify_invariance(a, [2, 3], 4, 9)
        self.assertEqual(first, second)


if __name__ == "__main__":
    unittest.main()

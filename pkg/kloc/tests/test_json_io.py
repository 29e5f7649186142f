import json
import unittest

from openmdao.utils.testing_utils import use_tempdirs

from kloc.equiv import Stabilize, TransformTrace, VerificationReport, random_pipeline
from kloc.errors import ParseError
from kloc.exmat import mat_diag, mat_from_rows, mat_zeros
from kloc.gaussq import I, gq_parse
from kloc.jordan import JordanForm
from kloc.json_io import (dumps, form_from_json, form_to_json, k0_from_json, k0_to_json,
                          k1_from_json, k1_to_json, load, matrix_from_json, matrix_to_json,
                          parse_spectrum, report_to_json, step_to_json)
from kloc.ktheory import K0Class, K1Class


class TestDocuments(unittest.TestCase):

    def test_matrix(self):
        a = mat_from_rows([['3/2-1/4i', 0], ['i', '-1']])
        doc = matrix_to_json(a)
        self.assertEqual(doc, {'rows': 2, 'cols': 2,
                               'entries': [['3/2-1/4i', '0'], ['i', '-1']]})
        self.assertEqual(matrix_from_json(doc), a)
        self.assertEqual(matrix_from_json({'rows': 0, 'cols': 0, 'entries': []}), mat_zeros(0))

    def test_bad_matrices(self):
        bad = [
            {'cols': 1, 'entries': [['1']]},
            {'rows': 2, 'cols': 1, 'entries': [['1']]},
            {'rows': 1, 'cols': 2, 'entries': [['1']]},
            {'rows': 1, 'cols': 1, 'entries': [[1]]},
            {'rows': True, 'cols': 1, 'entries': [['1']]},
            {'rows': -1, 'cols': 1, 'entries': []},
            [['1']],
        ]
        for doc in bad:
            with self.assertRaises(ParseError, msg=str(doc)):
                matrix_from_json(doc)

    def test_form(self):
        f = JordanForm({(2, 3): 1, (1, I): 2})
        doc = form_to_json(f)
        self.assertEqual(doc, {'cells': [{'size': 1, 'eigenvalue': 'i', 'multiplicity': 2},
                                         {'size': 2, 'eigenvalue': '3', 'multiplicity': 1}]})
        self.assertEqual(form_from_json(doc), f)
        with self.assertRaises(ParseError):
            form_from_json({'cells': [{'size': 0, 'eigenvalue': '1', 'multiplicity': 1}]})
        with self.assertRaises(ParseError):
            form_from_json({'cells': [{'size': 1, 'eigenvalue': '1', 'multiplicity': 0}]})

    def test_k1(self):
        x = K1Class(torsion_minus={1: 1}, torsion_plus={4: 1}, free={(2, '1/2'): 3})
        doc = k1_to_json(x)
        self.assertEqual(doc, {'torsion_minus': {'1': 1}, 'torsion_plus': {'4': 1},
                               'free': [{'size': 2, 'eigenvalue': '2', 'coeff': -3}]})
        self.assertEqual(k1_from_json(json.loads(json.dumps(doc))), x)
        with self.assertRaises(ParseError):
            k1_from_json({'torsion_minus': {'a': 1}, 'torsion_plus': {}, 'free': []})
        with self.assertRaises(ParseError):
            k1_from_json({'torsion_minus': {'0': 1}, 'torsion_plus': {}, 'free': []})
        with self.assertRaises(ParseError):
            k1_from_json({'torsion_minus': {}, 'free': []})

    def test_k0(self):
        self.assertEqual(k0_to_json(K0Class(-2)), {'value': -2})
        self.assertEqual(k0_from_json({'value': 3}), K0Class(3))
        with self.assertRaises(ParseError):
            k0_from_json({'value': '3'})

    def test_spectrum(self):
        self.assertEqual(list(parse_spectrum('2, 1/2,i')), [I, gq_parse('1/2'), gq_parse('2')])
        self.assertEqual(len(parse_spectrum('')), 0)
        with self.assertRaises(ParseError):
            parse_spectrum('2,,3')

    def test_report(self):
        a = mat_diag([2, 3])
        steps = random_pipeline(2, [2, 3], 1)
        trace = TransformTrace.record(a, steps)
        report = VerificationReport(VerificationReport.FAIL, 'equiv', 4, 3, K1Class(), trace, 'x')
        doc = json.loads(dumps(report_to_json(report)))
        self.assertEqual(sorted(doc), ['checks', 'class', 'detail', 'failure_trace', 'status',
                                       'suite', 'trials'])
        self.assertEqual(doc['failure_trace']['initial'], matrix_to_json(a))
        self.assertEqual([s['kind'] for s in doc['failure_trace']['steps']],
                         [s.kind for s in steps])
        self.assertEqual(doc['failure_trace']['final']['rows'], trace.final.rows)
        self.assertEqual(step_to_json(Stabilize(2)), {'kind': 'stabilize', 'k': 2})
        with self.assertRaises(TypeError):
            step_to_json(object())

    def test_dumps(self):
        doc = {'b': [1, 2], 'a': {'d': 1, 'c': 2}}
        self.assertEqual(dumps(doc), '{"a":{"c":2,"d":1},"b":[1,2]}')
        self.assertEqual(dumps(doc, pretty=True), json.dumps(doc, sort_keys=True, indent=2))


@use_tempdirs
class TestLoad(unittest.TestCase):

    def test_load(self):
        with open('m.json', 'w') as f:
            f.write('{"rows": 1, "cols": 1, "entries": [["2"]]}')
        self.assertEqual(matrix_from_json(load('m.json')), mat_diag([2]))

    def test_errors(self):
        with open('broken.json', 'w') as f:
            f.write('{"rows": ')
        with self.assertRaises(ParseError) as cm:
            load('broken.json')
        self.assertIsNotNone(cm.exception.position)
        with self.assertRaises(ParseError):
            load('does_not_exist.json')

    def test_not_utf8(self):
        with open('latin1.json', 'wb') as f:
            f.write(b'["caf\xe9"]')
        with self.assertRaises(ParseError) as cm:
            load('latin1.json')
        self.assertEqual(cm.exception.position, 5)
        self.assertEqual(cm.exception.to_dict()['code'], 'parse')


if __name__ == "__main__":
    unittest.main()

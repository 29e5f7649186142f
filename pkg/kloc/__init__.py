from kloc.gaussq import GaussianRational, gq_format, gq_parse
from kloc.exmat import ExactMatrix, mat_direct_sum, mat_from_rows, mat_inverse, mat_rank
from kloc.jordan import JordanCell, JordanForm, Spectrum, cell_inverse, jordan_decompose
from kloc.ktheory import K0Class, K1Class, k0_class, k1_add, k1_class, k1_neg
from kloc.equiv import random_pipeline, verify_invariance
from kloc.suites import run_suite

__version__ = '0.1.0'

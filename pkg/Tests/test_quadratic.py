""" tests SP4TILT quadratic: the 4×4 engine of quadratic boson forms
"""
from inspect import (
   getfile as inspect_getfile,
   currentframe as inspect_currentframe,
)
from os.path import (
   abspath as path_abspath,
   dirname as path_dirname,
   join as path_join,
)
from sys import path as sys_path

import numpy
from nose.tools import (
   eq_,
   ok_,
   raises as nose_raises,
)


SCRIPT_PATH = path_dirname(path_abspath(inspect_getfile(inspect_currentframe())))
PROJECT_ROOT = path_dirname(SCRIPT_PATH)

ROOT_PACKAGE_NAME = 'SP4TILT'
ROOT_PACKAGE_PATH = path_join(PROJECT_ROOT, ROOT_PACKAGE_NAME)

sys_path.insert(0, PROJECT_ROOT)

from SP4TILT.algebra import (
   build_generators,
   combine,
)
from SP4TILT.fock import (
   build_basis,
   interior_indices,
)
from SP4TILT.quadratic import (
   GENERATOR_IDS,
   IDENTITY_ID,
   OMEGA,
   QuadraticForm,
   expand_aliases,
   from_linear_pair,
   symplectic_matrix,
)
from SP4TILT.utils import Err


def test_quadratic_expand_aliases():
   """ Tests: test_quadratic_expand_aliases
   """
   print('::: TEST: test_quadratic_expand_aliases()')
   expanded = expand_aliases({'K0a': 2.0, 'K0b': 1.0, 'J+': 3.0})
   eq_(expanded['K0ab'], 1.5 + 0j, msg=None)
   eq_(expanded['J0'], 0.5 + 0j, msg=None)
   eq_(expanded['J+'], 3.0 + 0j, msg=None)


@nose_raises(Err)
def test_quadratic_expand_aliases_expect_failure():
   """ Tests: test_quadratic_expand_aliases_expect_failure
   """
   print('::: TEST: test_quadratic_expand_aliases_expect_failure()')
   expand_aliases({'K0c': 1.0})


def test_quadratic_coefficients():
   """ Tests: test_quadratic_coefficients
   """
   print('::: TEST: test_quadratic_coefficients()')
   given = {'K+a': 0.5, 'K-a': 0.5, 'K+ab': 1j, 'K-ab': -1j, 'K0ab': 2.0, 'J0': -1.0, 'J+': 0.25, IDENTITY_ID: 3.0}
   form = QuadraticForm.from_coefficients(given)
   coefficients = form.coefficients()
   eq_(list(coefficients), list(GENERATOR_IDS) + [IDENTITY_ID], msg=None)
   for key, value in given.items():
      ok_(abs(coefficients[key] - value) < 1e-15, msg=key)
   eq_(coefficients['J-'], 0j, msg=None)
   ok_(numpy.allclose(form.matrix, form.matrix.T), msg=None)
   eq_(form.magnitude(), 3.0, msg=None)


@nose_raises(Err)
def test_quadratic_form_expect_failure():
   """ Tests: test_quadratic_form_expect_failure
   """
   print('::: TEST: test_quadratic_form_expect_failure()')
   QuadraticForm(numpy.zeros((3, 3)))


def test_quadratic_arithmetic():
   """ Tests: test_quadratic_arithmetic
   """
   print('::: TEST: test_quadratic_arithmetic()')
   first = QuadraticForm.from_coefficients({'K0ab': 1.0, IDENTITY_ID: 1.0})
   second = QuadraticForm.from_coefficients({'J0': 2.0})
   total = (first + second * 0.5 - first).coefficients()
   ok_(abs(total['J0'] - 1.0) < 1e-15, msg=None)
   ok_(abs(total['K0ab']) < 1e-15, msg=None)
   eq_(first.distance(first), 0.0, msg=None)


def test_quadratic_commutator_engine():
   """ Tests: test_quadratic_commutator_engine
   """
   print('::: TEST: test_quadratic_commutator_engine()')

   def bracket(x_id, y_id):
      first = QuadraticForm.from_coefficients({x_id: 1.0})
      second = QuadraticForm.from_coefficients({y_id: 1.0})
      return {key: value for key, value in first.commutator(second).coefficients().items() if abs(value) > 1e-14}

   eq_(bracket('K-a', 'K+a'), {'K0ab': 1.0, 'J0': 1.0}, msg=None)
   eq_(bracket('J+', 'J-'), {'J0': 2.0}, msg=None)
   eq_(bracket('K+ab', 'K-a'), {'J-': -1.0}, msg=None)
   eq_(bracket('K0ab', 'K+ab'), {'K+ab': 1.0}, msg=None)
   eq_(bracket('J0', 'K0ab'), {}, msg=None)


def test_quadratic_engine_matches_fock():
   """ Tests: test_quadratic_engine_matches_fock
   """
   print('::: TEST: test_quadratic_engine_matches_fock()')
   basis = build_basis(8, 8)
   gens = build_generators(basis)
   indices = interior_indices(basis, 2)
   x = {'K+a': 0.3, 'J-': 1.0 - 0.5j, 'K0ab': 0.7}
   y = {'K-ab': 0.2j, 'J0': 1.1, 'K+b': -0.4}
   engine = QuadraticForm.from_coefficients(x).commutator(QuadraticForm.from_coefficients(y))
   numeric = combine(x, gens).commutator(combine(y, gens))
   expected = combine(engine.coefficients(), gens)
   ok_(numpy.max(numpy.abs(numeric.restrict(indices) - expected.restrict(indices))) < 1e-12, msg=None)


def test_quadratic_symplectic_matrix():
   """ Tests: test_quadratic_symplectic_matrix
   """
   print('::: TEST: test_quadratic_symplectic_matrix()')
   exponent = {'K+ab': 0.3 + 0.2j, 'K-ab': -(0.3 - 0.2j)}
   matrix = symplectic_matrix(exponent)
   # canonical commutators survive: M Ω Mᵀ = Ω
   ok_(numpy.max(numpy.abs(matrix @ OMEGA @ matrix.T - OMEGA)) < 1e-13, msg=None)
   ok_(numpy.allclose(symplectic_matrix(QuadraticForm.from_coefficients(exponent)), matrix), msg=None)
   ok_(numpy.allclose(symplectic_matrix({}), numpy.eye(4)), msg=None)


def test_quadratic_conjugate_number():
   """ Tests: test_quadratic_conjugate_number
   """
   print('::: TEST: test_quadratic_conjugate_number()')
   # exp(−iθJ0) leaves every weight generator unchanged
   matrix = symplectic_matrix({'J0': 0.7j})
   form = QuadraticForm.from_coefficients({'K0ab': 1.0, 'J0': -0.5})
   ok_(form.conjugate(matrix).distance(form) < 1e-14, msg=None)


def test_quadratic_from_linear_pair():
   """ Tests: test_quadratic_from_linear_pair
   """
   print('::: TEST: test_quadratic_from_linear_pair()')
   form = from_linear_pair((1, 0, 0, 0), (0, 1, 0, 0))
   coefficients = {key: value for key, value in form.coefficients().items() if abs(value) > 1e-15}
   eq_(coefficients, {'K0ab': 1.0, 'J0': 1.0, IDENTITY_ID: 0.5}, msg=None)

   form = from_linear_pair((0, 0, 0, 1), (1, 0, 0, 0))
   coefficients = {key: value for key, value in form.coefficients().items() if abs(value) > 1e-15}
   eq_(coefficients, {'J-': 1.0}, msg=None)


@nose_raises(Err)
def test_quadratic_from_linear_pair_expect_failure():
   """ Tests: test_quadratic_from_linear_pair_expect_failure
   """
   print('::: TEST: test_quadratic_from_linear_pair_expect_failure()')
   from_linear_pair((1, 0, 0), (0, 1, 0, 0))


# ++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++#
if __name__ == '__main__':
   pass
   test_quadratic_expand_aliases()
   test_quadratic_expand_aliases_expect_failure()
   test_quadratic_coefficients()
   test_quadratic_form_expect_failure()
   test_quadratic_arithmetic()
   test_quadratic_commutator_engine()
   test_quadratic_engine_matches_fock()
   test_quadratic_symplectic_matrix()
   test_quadratic_conjugate_number()
   test_quadratic_from_linear_pair()
   test_quadratic_from_linear_pair_expect_failure()

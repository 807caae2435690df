""" tests SP4TILT tilt: displacements, closed-form transforms, coherent states and reductions
"""
from cmath import exp as cmath_exp
from inspect import (
   getfile as inspect_getfile,
   currentframe as inspect_currentframe,
)
from math import (
   cosh as math_cosh,
   log as math_log,
   pi as math_pi,
   sqrt as math_sqrt,
   tanh as math_tanh,
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
   lowest_state,
)
from SP4TILT.fock import (
   build_basis,
   sector_indices,
)
from SP4TILT.tilt import (
   TILT_KINDS,
   TiltParameters,
   coefficient_distance,
   conjugate_closed_form,
   conjugate_numeric,
   conjugate_numeric_columns,
   conjugation_margin,
   discrepancy_ledger,
   displacement,
   grid_parameters,
   normal_form,
   normal_form_operator,
   perelomov_state,
   printed_pairs,
   reduce_su11_form,
   reduce_su2_form,
   sp4r_coherent_state,
)
from SP4TILT.utils import (
   Err,
   MethodDeactivatedErr,
)


def test_tilt_parameters():
   """ Tests: test_tilt_parameters
   """
   print('::: TEST: test_tilt_parameters()')
   params = TiltParameters('su11_two_mode', xi=0.3j)
   eq_(params.factors(), [('xi', 0.3j)], msg=None)
   eq_(params.exponent('xi'), {'K+ab': 0.3j, 'K-ab': 0.3j}, msg=None)
   eq_(params.negated().xi, -0.3j, msg=None)
   eq_(params.magnitude(), 0.3, msg=None)
   eq_(params, TiltParameters('su11_two_mode', xi=0.3j), msg=None)

   product = TiltParameters('sp4r_product', xi=0.1, chi=0.2, xi_a=0.3, xi_b=0.4)
   eq_([name for name, _ in product.factors()], ['xi_a', 'xi_b', 'xi', 'chi'], msg=None)
   pipeline = TiltParameters('sp4r_product', xi=0.1, chi=0.2, xi_a=0.3, xi_b=0.4, order='pipeline')
   eq_([name for name, _ in pipeline.factors()], ['xi', 'chi', 'xi_a', 'xi_b'], msg=None)


@nose_raises(Err)
def test_tilt_parameters_expect_failure():
   """ Tests: test_tilt_parameters_expect_failure
   """
   print('::: TEST: test_tilt_parameters_expect_failure()')
   TiltParameters('su2', xi=0.1)


@nose_raises(Err)
def test_tilt_parameters_expect_failure2():
   """ Tests: test_tilt_parameters_expect_failure2
   """
   print('::: TEST: test_tilt_parameters_expect_failure2()')
   TiltParameters('su11_three_mode', xi=0.1)


@nose_raises(MethodDeactivatedErr)
def test_tilt_parameters_immutable_expect_failure():
   """ Tests: test_tilt_parameters_immutable_expect_failure
   """
   print('::: TEST: test_tilt_parameters_immutable_expect_failure()')
   TiltParameters('su2', chi=0.1).chi = 0.2


def test_tilt_parameters_theta_phi():
   """ Tests: test_tilt_parameters_theta_phi
   """
   print('::: TEST: test_tilt_parameters_theta_phi()')
   params = TiltParameters.from_theta_phi('su11_two_mode', 1.0, 0.3)
   ok_(abs(params.xi - (-0.5 * cmath_exp(-0.3j))) < 1e-15, msg=None)
   theta, phi = params.theta_phi()
   ok_(abs(theta - 1.0) < 1e-14 and abs(phi - 0.3) < 1e-14, msg=None)

   # negative θ moves to (−θ, φ + π)
   theta, phi = TiltParameters.from_theta_phi('su11_two_mode', -1.0, 0.3).theta_phi()
   ok_(abs(theta - 1.0) < 1e-14 and abs(phi - (0.3 + math_pi)) < 1e-12, msg=None)
   eq_(TiltParameters('su2').theta_phi(), (0.0, 0.0), msg=None)

   alpha, beta = TiltParameters('su11_mode_a', xi_a=0.25).hyperbolic_scalars()
   ok_(abs(beta - 0.5 * (math_cosh(0.5) - 1.0)) < 1e-15, msg=None)
   ok_(alpha > 0.0, msg=None)


def test_tilt_normal_form():
   """ Tests: test_tilt_normal_form
   """
   print('::: TEST: test_tilt_normal_form()')
   form = normal_form(0.5j)
   ok_(abs(form.zeta - 1j * math_tanh(0.5)) < 1e-15, msg=None)
   ok_(abs(form.eta - math_log(1.0 - math_tanh(0.5) ** 2)) < 1e-14, msg=None)
   form = normal_form(0.0, 'su2')
   eq_(form.zeta, 0j, msg=None)
   eq_(form.eta, 0.0, msg=None)


@nose_raises(Err)
def test_tilt_normal_form_expect_failure():
   """ Tests: test_tilt_normal_form_expect_failure
   """
   print('::: TEST: test_tilt_normal_form_expect_failure()')
   normal_form(2.0, 'su2')


@nose_raises(Err)
def test_tilt_normal_form_expect_failure2():
   """ Tests: test_tilt_normal_form_expect_failure2
   """
   print('::: TEST: test_tilt_normal_form_expect_failure2()')
   normal_form(0.1, 'so3')


def test_tilt_normal_form_operator():
   """ Tests: test_tilt_normal_form_operator
   """
   print('::: TEST: test_tilt_normal_form_operator()')
   basis = build_basis(24, 24)
   gens = build_generators(basis)
   xi = 0.3 * cmath_exp(0.4j)
   factored = normal_form_operator(xi, gens['K0ab'], gens['K+ab'], gens['K-ab'])
   direct = displacement(TiltParameters('su11_two_mode', xi=xi), gens)
   column = basis.index(0, 0)
   ok_(numpy.max(numpy.abs(factored.matrix[:, column] - direct.matrix[:, column])) < 1e-10, msg=None)

   # su(2) keeps N: the N = 3 sector is complete in a 4×4 box
   basis = build_basis(4, 4)
   gens = build_generators(basis)
   chi = 0.4 * cmath_exp(-0.7j)
   factored = normal_form_operator(chi, gens['J0'], gens['J+'], gens['J-'], group='su2')
   direct = displacement(TiltParameters('su2', chi=chi), gens)
   column = basis.index(2, 1)
   ok_(numpy.max(numpy.abs(factored.matrix[:, column] - direct.matrix[:, column])) < 1e-10, msg=None)


def test_tilt_displacement_unitary():
   """ Tests: test_tilt_displacement_unitary
   """
   print('::: TEST: test_tilt_displacement_unitary()')
   gens = build_generators(build_basis(5, 5))
   for kind in TILT_KINDS:
      d = displacement(grid_parameters(kind, 0.3, 0.9), gens)
      ok_(numpy.max(numpy.abs((d.dagger() @ d).matrix - numpy.eye(36))) < 1e-12, msg=kind)
   eq_(conjugation_margin(0.3), 8, msg=None)
   eq_(conjugation_margin(1.25), 13, msg=None)


def test_tilt_closed_form_su2():
   """ Tests: test_tilt_closed_form_su2
   """
   print('::: TEST: test_tilt_closed_form_su2()')
   basis = build_basis(6, 6)
   gens = build_generators(basis)
   params = TiltParameters('su2', chi=0.3 * cmath_exp(0.5j))
   complete = sector_indices(basis, lambda n_a, n_b: n_a + n_b <= 6)
   for generator_id in ('J0', 'J+', 'J-'):
      closed = combine(conjugate_closed_form(generator_id, params), gens)
      numeric = conjugate_numeric(displacement(params, gens), gens[generator_id])
      deviation = numpy.max(numpy.abs(closed.restrict(complete) - numeric.restrict(complete)))
      ok_(deviation < 1e-10, msg=generator_id)
   # K0ab commutes with su(2)
   closed = conjugate_closed_form('K0ab', params)
   ok_(coefficient_distance(closed, {'K0ab': 1.0}) < 1e-12, msg=None)


def test_tilt_closed_form_columns():
   """ Tests: test_tilt_closed_form_columns
   """
   print('::: TEST: test_tilt_closed_form_columns()')
   basis = build_basis(24, 24)
   gens = build_generators(basis)
   params = grid_parameters('su11_two_mode', 0.2, 0.7)
   indices = [basis.index(0, 0), basis.index(1, 0), basis.index(1, 2)]
   for generator_id in ('K+a', 'J-', 'K0ab'):
      closed = combine(conjugate_closed_form(generator_id, params), gens)
      numeric = conjugate_numeric_columns(params, gens, gens[generator_id], indices)
      expected = closed.matrix[:, indices]
      ok_(numpy.max(numpy.abs(numeric - expected)) < 1e-8, msg=generator_id)


@nose_raises(Err)
def test_tilt_closed_form_expect_failure():
   """ Tests: test_tilt_closed_form_expect_failure
   """
   print('::: TEST: test_tilt_closed_form_expect_failure()')
   conjugate_closed_form('K0a', TiltParameters('su2', chi=0.1), mode='printed')


@nose_raises(Err)
def test_tilt_closed_form_expect_failure2():
   """ Tests: test_tilt_closed_form_expect_failure2
   """
   print('::: TEST: test_tilt_closed_form_expect_failure2()')
   conjugate_closed_form('J0', TiltParameters('su2', chi=0.1), mode='guessed')


def test_tilt_discrepancy_ledger():
   """ Tests: test_tilt_discrepancy_ledger
   """
   print('::: TEST: test_tilt_discrepancy_ledger()')
   entries = discrepancy_ledger(magnitudes=(0.3,), phases=(0.0, 1.0))
   eq_(len(entries), len(printed_pairs()), msg=None)
   by_pair = {(entry.kind, entry.generator_id): entry for entry in entries}
   ok_(by_pair[('su11_two_mode', 'J+')].needs_correction, msg=None)
   eq_(by_pair[('su11_two_mode', 'J+')].source, 'two-mode set', msg=None)
   ok_(all(entry.literal >= 0.0 and entry.flipped >= 0.0 for entry in entries), msg=None)


def test_tilt_grid_parameters():
   """ Tests: test_tilt_grid_parameters
   """
   print('::: TEST: test_tilt_grid_parameters()')
   params = grid_parameters('sp4r_product', 0.2, 0.5)
   ok_(all(abs(value) > 0.0 for _, value in params.factors()), msg=None)
   params = grid_parameters('su11_mode_b', 0.2, 0.0)
   eq_(params.xi_b, 0.2 + 0j, msg=None)


def test_tilt_perelomov_state():
   """ Tests: test_tilt_perelomov_state
   """
   print('::: TEST: test_tilt_perelomov_state()')
   for k in ('1/4', '1/2', '1'):
      for offset in (0, 2):
         state = perelomov_state('su11', k, offset, 0.3 * cmath_exp(0.2j), length=80)
         ok_(abs(numpy.linalg.norm(state) - 1.0) < 1e-10, msg=(k, offset))
   state = perelomov_state('su2', 1, 0, 0.4j)
   eq_(len(state), 3, msg=None)
   ok_(abs(numpy.linalg.norm(state) - 1.0) < 1e-12, msg=None)
   state = perelomov_state('su11', '1/2', 0, 0.0, length=5)
   ok_(numpy.allclose(state, [1.0, 0.0, 0.0, 0.0, 0.0]), msg=None)


def test_tilt_perelomov_state_errors():
   """ Tests: test_tilt_perelomov_state_errors
   """
   print('::: TEST: test_tilt_perelomov_state_errors()')
   for args in (
      ('su11', '1/2', -1, 0.1),
      ('su11', 0, 0, 0.1),
      ('su11', '1/2', 5, 0.1, 5),
      ('su2', 1, 3, 0.1),
      ('su2', '1/4', 0, 0.1),
      ('su3', 1, 0, 0.1),
   ):
      try:
         perelomov_state(*args)
      except Err:
         pass
      else:
         ok_(False, msg='perelomov_state{} must raise'.format(args))


def test_tilt_sp4r_coherent_state():
   """ Tests: test_tilt_sp4r_coherent_state
   """
   print('::: TEST: test_tilt_sp4r_coherent_state()')
   basis = build_basis(20, 20)
   gens = build_generators(basis)
   xi = 0.2 * cmath_exp(0.6j)
   state = sp4r_coherent_state(TiltParameters('su11_two_mode', xi=xi), gens, lowest_state(basis, 0))
   ok_(abs(numpy.linalg.norm(state) - 1.0) < 1e-10, msg=None)
   # two-mode vacuum is the k = 1/2 lowest weight: |s⟩ = |s, s⟩
   series = perelomov_state('su11', '1/2', 0, xi, length=10)
   diagonal = numpy.array([state[basis.index(s, s)] for s in range(10)])
   ok_(numpy.max(numpy.abs(diagonal - series)) < 1e-10, msg=None)


def test_tilt_reduce_su11():
   """ Tests: test_tilt_reduce_su11
   """
   print('::: TEST: test_tilt_reduce_su11()')
   reduction = reduce_su11_form(2.0, 0.5, 0.5)
   ok_(abs(reduction.slope - math_sqrt(3.0)) < 1e-12, msg=None)
   reduction = reduce_su11_form(5.0, 2.0, 2.0)
   ok_(abs(reduction.slope - 3.0) < 1e-12, msg=None)
   eq_(reduction.tilt.kind, 'su11_two_mode', msg=None)
   ok_(reduction.theta > 0.0, msg=None)
   reduction = reduce_su11_form(-5.0, 2.0, 2.0, kind='su11_mode_a')
   ok_(abs(reduction.slope + 3.0) < 1e-12, msg=None)
   ok_(abs(reduction.tilt.xi_a) > 0.0, msg=None)
   reduction = reduce_su11_form(1.5, 0.0, 0.0)
   eq_(reduction.slope, 1.5 + 0j, msg=None)
   eq_(reduction.theta, 0.0, msg=None)


def test_tilt_reduce_su11_errors():
   """ Tests: test_tilt_reduce_su11_errors
   """
   print('::: TEST: test_tilt_reduce_su11_errors()')
   for args, kind in (
      ((1.0, 1.0, 1.0), 'hyperbolic-out-of-domain'),
      ((2.0, 1.2, 1.2), 'hyperbolic-out-of-domain'),
      ((2.0, 1.0, 1.0), 'degenerate-reduction'),
   ):
      try:
         reduce_su11_form(*args)
      except Err as err:
         eq_(err.kind, kind, msg=args)
      else:
         ok_(False, msg='reduce_su11_form{} must raise'.format(args))


def test_tilt_reduce_su2():
   """ Tests: test_tilt_reduce_su2
   """
   print('::: TEST: test_tilt_reduce_su2()')
   reduction = reduce_su2_form(1.0, 0.5, 0.5)
   ok_(abs(reduction.slope - math_sqrt(2.0)) < 1e-12, msg=None)
   reduction = reduce_su2_form(3.0, 2.0, 2.0)
   ok_(abs(reduction.slope - 5.0) < 1e-12, msg=None)
   eq_(reduction.tilt.kind, 'su2', msg=None)
   reduction = reduce_su2_form(0.0, 1.0, 1.0)
   ok_(abs(reduction.slope - 2.0) < 1e-12, msg=None)
   eq_(reduce_su2_form(-2.0, 0.0, 0.0).slope, -2.0 + 0j, msg=None)


def test_tilt_reduce_su2_errors():
   """ Tests: test_tilt_reduce_su2_errors
   """
   print('::: TEST: test_tilt_reduce_su2_errors()')
   try:
      reduce_su2_form(0.0, 0.0, 0.0)
   except Err as err:
      eq_(err.kind, 'degenerate-reduction', msg=None)
   else:
      ok_(False, msg='an empty form must raise')


@nose_raises(Err)
def test_tilt_reduce_expect_failure():
   """ Tests: test_tilt_reduce_expect_failure
   """
   print('::: TEST: test_tilt_reduce_expect_failure()')
   reduce_su11_form(2.0 + 1.0j, 0.5, 0.5)


# ++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++#
if __name__ == '__main__':
   pass
   test_tilt_parameters()
   test_tilt_parameters_expect_failure()
   test_tilt_parameters_expect_failure2()
   test_tilt_parameters_immutable_expect_failure()
   test_tilt_parameters_theta_phi()
   test_tilt_normal_form()
   test_tilt_normal_form_expect_failure()
   test_tilt_normal_form_expect_failure2()
   test_tilt_normal_form_operator()
   test_tilt_displacement_unitary()
   test_tilt_closed_form_su2()
   test_tilt_closed_form_columns()
   test_tilt_closed_form_expect_failure()
   test_tilt_closed_form_expect_failure2()
   test_tilt_discrepancy_ledger()
   test_tilt_grid_parameters()
   test_tilt_perelomov_state()
   test_tilt_perelomov_state_errors()
   test_tilt_sp4r_coherent_state()
   test_tilt_reduce_su11()
   test_tilt_reduce_su11_errors()
   test_tilt_reduce_su2()
   test_tilt_reduce_su2_errors()
   test_tilt_reduce_expect_failure()
